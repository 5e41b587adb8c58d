#include "hcl/rational.hpp"

namespace hcl {

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(s)));
        }
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den(std::string(s.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    }
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

BigInt floor_rational(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

BigInt ceil_rational(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

bool leq_plus_two_sqrt(const Rational& lhs, const Rational& base, const Rational& radicand) {
    if (radicand.is_negative()) throw std::domain_error("leq_plus_two_sqrt: negative radicand");
    const Rational diff = lhs - base;
    if (!(diff > Rational(0))) return true;  // 2*sqrt(radicand) >= 0
    return diff * diff <= Rational(4) * radicand;
}

}  // namespace hcl
