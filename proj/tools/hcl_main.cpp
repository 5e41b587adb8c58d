// Command-line front door: generate application hypergraphs, run the
// container construction, verify covers by brute force, and print exact
// degree-measure reports. Every run writes a manifest sufficient to
// reproduce it; machine output never contains floating point.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcl/engine.hpp"
#include "hcl/generators.hpp"
#include "hcl/measures.hpp"
#include "hcl/oracle.hpp"

namespace {

constexpr const char* kVersion = "hcl 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitBadParams = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitLimits = 4;
constexpr int kExitUncovered = 5;

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ManifestClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long elapsed_ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count());
    }
};

void write_manifest(const std::string& out_path, const std::string& command,
                    const nlohmann::json& params, const nlohmann::json& extra,
                    const ManifestClock& clock) {
    nlohmann::json manifest;
    manifest["version"] = kVersion;
    manifest["command"] = command;
    manifest["params"] = params;
    manifest["output"] = out_path;
    for (auto it = extra.begin(); it != extra.end(); ++it) manifest[it.key()] = it.value();
    manifest["wall_clock_ms"] = clock.elapsed_ms();
    write_atomic(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

hcl::Rational parse_rational(const std::string& text) { return hcl::Rational::parse(text); }

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    if (text.empty()) return edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("edge list entries look like 'a-b'");
        edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return edges;
}

std::vector<hcl::VertexSet> containers_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    std::vector<hcl::VertexSet> containers;
    if (j.contains("containers")) {
        for (const auto& c : j.at("containers")) containers.push_back(c.get<hcl::VertexSet>());
        return containers;
    }
    if (j.contains("leaves")) {
        for (const auto& leaf : j.at("leaves"))
            containers.push_back(leaf.at("container").get<hcl::VertexSet>());
        return containers;
    }
    if (j.contains("tree")) {
        const std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& node) {
            if (node.at("children").empty()) {
                containers.push_back(node.at("C").get<hcl::VertexSet>());
                return;
            }
            for (const auto& child : node.at("children")) walk(child);
        };
        walk(j.at("tree"));
        return containers;
    }
    throw std::invalid_argument("container file needs 'containers', 'leaves', or 'tree'");
}

int run_gen(const std::string& family, int n, int r, int m, int big_m, int s, int h_max, int big_n,
            int k, int v, int edges, std::uint64_t seed, int pattern_n,
            const std::string& pattern_edges, bool keep_multiplicities, const std::string& out,
            bool human) {
    ManifestClock clock;
    nlohmann::json params{{"family", family}};
    hcl::Multihypergraph result(1, 1);
    if (family == "clique") {
        params["n"] = n;
        params["r"] = r;
        result = hcl::clique_hypergraph(n, r);
    } else if (family == "gridlines") {
        params["m"] = m;
        params["M"] = big_m;
        params["s"] = s;
        params["h_max"] = h_max;
        result = hcl::grid_lines_hypergraph(m, big_m, s, h_max).second;
    } else if (family == "folkman") {
        params["N"] = big_n;
        params["n"] = n;
        params["k"] = k;
        result = hcl::folkman_hypergraph(big_n, n, k);
    } else if (family == "induced") {
        params["N"] = big_n;
        params["k"] = k;
        params["pattern_n"] = pattern_n;
        params["pattern_edges"] = pattern_edges;
        params["keep_multiplicities"] = keep_multiplicities;
        hcl::SimpleGraph pattern{pattern_n, parse_edge_list(pattern_edges)};
        result = hcl::induced_ramsey_hypergraph(big_n, pattern, k, keep_multiplicities);
    } else if (family == "random") {
        params["v"] = v;
        params["s"] = s;
        params["edges"] = edges;
        params["seed"] = seed;
        result = hcl::random_hypergraph(v, s, edges, seed);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    write_atomic(out, hcl::to_json(result));
    write_manifest(out, "gen", params, {}, clock);
    if (human)
        std::cerr << "generated " << result.vertex_count() << " vertices, "
                  << result.edge_count().get_str() << " edges\n";
    return kExitOk;
}

int run_contain(const std::string& in, const std::string& mode, const std::string& q_text,
                const std::string& k_text, const std::string& alpha_text,
                const std::string& beta_text, const std::string& e_text, bool force,
                std::size_t max_nodes, std::size_t max_leaves, const std::string& out,
                bool human) {
    ManifestClock clock;
    const hcl::Multihypergraph h = hcl::hypergraph_from_json(read_file(in));
    const hcl::Rational q = parse_rational(q_text);
    nlohmann::json params{{"mode", mode}, {"q", q.str()}, {"force", force}, {"input", in}};
    nlohmann::json hypothesis;

    if (mode == "simple") {
        const hcl::Rational k_param = parse_rational(k_text);
        params["K"] = k_param.str();
        const int s = h.uniformity();
        const hcl::Rational p = q / hcl::Rational(30L * s * s);
        const hcl::Rational delta =
            hcl::Rational(1) /
            (hcl::Rational(1000) * hcl::pow_rational(hcl::Rational(static_cast<long>(s)), 4) *
             k_param);
        const auto report = hcl::check_hypothesis_main(h, p, delta);
        hypothesis = {{"satisfied", report.satisfied},
                      {"weighted_sum", report.weighted_sum.str()},
                      {"middle", report.middle.str()},
                      {"right", report.right.str()}};
        if (!report.satisfied && !force) {
            write_manifest(out, "contain", params, {{"hypothesis", hypothesis}}, clock);
            std::cerr << "hypothesis fails; rerun with --force to proceed\n";
            return kExitHypothesis;
        }
        const auto enumeration = hcl::enumerate_containers(h, q, k_param, true, max_leaves);
        if (!enumeration.complete) {
            std::cerr << "leaf limit exceeded\n";
            return kExitLimits;
        }
        nlohmann::json leaves = nlohmann::json::array();
        for (const auto& leaf : enumeration.leaves)
            leaves.push_back({{"fingerprint", leaf.fingerprint}, {"container", leaf.container}});
        nlohmann::json payload{{"params", params}, {"hypothesis", hypothesis},
                               {"leaves", std::move(leaves)}};
        write_atomic(out, payload.dump(2) + "\n");
        write_manifest(out, "contain", params, {{"hypothesis", hypothesis}}, clock);
        if (human) std::cerr << enumeration.leaves.size() << " containers\n";
        return kExitOk;
    }

    if (mode != "packaged") throw std::invalid_argument("mode must be simple or packaged");
    const hcl::Rational alpha = parse_rational(alpha_text);
    const hcl::Rational beta = parse_rational(beta_text);
    const hcl::BigInt min_edges(e_text);
    params["alpha"] = alpha.str();
    params["beta"] = beta.str();
    params["E"] = min_edges.get_str();
    hcl::PackagedLimits limits{max_nodes, max_leaves};
    try {
        const auto tree = hcl::packaged_containers(h, alpha, beta, q, min_edges, force, limits);
        hypothesis = {{"params_ok", tree.params_ok}};
        write_atomic(out, hcl::tree_to_json(tree));
        write_manifest(out, "contain", params, {{"hypothesis", hypothesis}}, clock);
        if (human) std::cerr << tree.node_count << " tree nodes\n";
        return kExitOk;
    } catch (const hcl::HypothesisError& e) {
        std::cerr << e.what() << "\n";
        return kExitHypothesis;
    }
}

int run_verify(const std::string& hypergraph_path, const std::string& containers_path,
               const std::string& out, bool human) {
    ManifestClock clock;
    const hcl::Multihypergraph h = hcl::hypergraph_from_json(read_file(hypergraph_path));
    const auto containers = containers_from_json(read_file(containers_path));
    const auto report = hcl::verify_cover(containers, h);
    nlohmann::json j{{"total_maximal", report.total_maximal},
                     {"covered", report.covered},
                     {"container_count", report.container_count},
                     {"complete", report.complete},
                     {"full_cover", report.full_cover()}};
    nlohmann::json uncovered = nlohmann::json::array();
    for (const auto& witness : report.uncovered) uncovered.push_back(witness);
    j["uncovered"] = std::move(uncovered);
    const std::string payload = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << payload;
    } else {
        write_atomic(out, payload);
        nlohmann::json params{{"hypergraph", hypergraph_path}, {"containers", containers_path}};
        write_manifest(out, "verify", params, {}, clock);
    }
    if (human)
        std::cerr << report.covered << "/" << report.total_maximal << " maximal sets covered\n";
    return report.full_cover() ? kExitOk : kExitUncovered;
}

int run_measure(const std::string& in, int t, const std::string& out, bool human) {
    ManifestClock clock;
    const hcl::Multihypergraph h = hcl::hypergraph_from_json(read_file(in));
    if (h.empty() || t < 1 || t > h.uniformity()) {
        std::cerr << "measure: need a nonempty hypergraph and 1 <= t <= uniformity\n";
        return kExitBadParams;
    }
    const auto mu = hcl::sigma_t(h, t);
    nlohmann::json support = nlohmann::json::array();
    for (const auto& [set, value] : mu.entries)
        support.push_back({{"set", set}, {"value", value.str()}});
    nlohmann::json j{{"t", t},
                     {"norm_sq", hcl::norm_sq(mu).str()},
                     {"max_degree", hcl::max_degree_t(h, t).get_str()},
                     {"hat_delta", hcl::hat_delta(h, t).str()},
                     {"support", std::move(support)}};
    const std::string payload = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << payload;
    } else {
        write_atomic(out, payload);
        nlohmann::json params{{"input", in}, {"t", t}};
        write_manifest(out, "measure", params, {}, clock);
    }
    if (human) std::cerr << "norm_sq ~ " << hcl::norm_sq(mu).approx() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph container construction and verification"};
    app.set_version_flag("--version", kVersion);
    app.footer("HCL_THREADS caps worker threads (this build executes single-threaded).");
    bool human = false;
    app.add_flag("--human", human, "log human-readable decimal summaries to stderr");

    auto* gen = app.add_subcommand("gen", "generate an application hypergraph");
    gen->fallthrough();
    std::string family, out = "hypergraph.json", pattern_edges;
    int n = 0, r = 0, m = 0, big_m = 0, s = 0, h_max = 0, big_n = 0, k = 1, v = 0, edges = 0,
        pattern_n = 0;
    std::uint64_t seed = 0;
    gen->add_option("--family", family, "clique | gridlines | folkman | induced | random")
        ->required();
    gen->add_option("--n", n, "clique/folkman order");
    gen->add_option("--r", r, "forbidden clique parameter (clique family)");
    gen->add_option("--m", m, "points per line (gridlines)");
    gen->add_option("--M", big_m, "prime slope modulus (gridlines)");
    gen->add_option("--s", s, "uniformity (gridlines/random)");
    gen->add_option("--h-max", h_max, "slope-family count override (gridlines)");
    gen->add_option("--N", big_n, "host clique order (folkman/induced)");
    gen->add_option("--k", k, "colour count (folkman/induced)");
    gen->add_option("--v", v, "vertex count (random)");
    gen->add_option("--edges", edges, "edge count (random)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--pattern-n", pattern_n, "pattern graph order (induced)");
    gen->add_option("--pattern-edges", pattern_edges, "pattern edges, e.g. 0-1,1-2 (induced)");
    bool keep_multiplicities = false;
    gen->add_flag("--keep-multiplicities", keep_multiplicities,
                  "count every injection instead of merging identical images (induced)");
    gen->add_option("--out", out, "output path");

    auto* contain = app.add_subcommand("contain", "build containers for a hypergraph file");
    contain->fallthrough();
    std::string in, mode = "simple", q_text, k_text = "1/1", alpha_text = "1/2",
                     beta_text = "1/3", e_text = "1";
    bool force = false;
    std::size_t max_nodes = 100000, max_leaves = 100000;
    contain->add_option("--in", in, "hypergraph JSON input")->required();
    contain->add_option("--mode", mode, "simple | packaged");
    contain->add_option("--q", q_text, "fingerprint density, rational")->required();
    contain->add_option("--K", k_text, "degree-balance parameter (simple), rational");
    contain->add_option("--alpha", alpha_text, "small-container fraction (packaged), rational");
    contain->add_option("--beta", beta_text, "witness slack (packaged), rational");
    contain->add_option("--E", e_text, "sparsity threshold (packaged), integer");
    contain->add_flag("--force", force, "run even when the hypothesis fails");
    contain->add_option("--max-nodes", max_nodes, "tree node budget");
    contain->add_option("--max-leaves", max_leaves, "enumeration leaf budget");
    contain->add_option("--out", out, "output path");

    auto* verify = app.add_subcommand("verify", "check containers against brute-forced truth");
    verify->fallthrough();
    std::string hypergraph_path, containers_path, verify_out;
    verify->add_option("--hypergraph", hypergraph_path, "hypergraph JSON")->required();
    verify->add_option("--containers", containers_path, "containers/leaves/tree JSON")->required();
    verify->add_option("--out", verify_out, "report path (default: stdout)");

    auto* measure = app.add_subcommand("measure", "exact degree-measure report");
    measure->fallthrough();
    std::string measure_in, measure_out;
    int t = 1;
    measure->add_option("--in", measure_in, "hypergraph JSON input")->required();
    measure->add_option("--t", t, "subset size");
    measure->add_option("--out", measure_out, "report path (default: stdout)");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadParams;
    }

    try {
        if (gen->parsed())
            return run_gen(family, n, r, m, big_m, s, h_max, big_n, k, v, edges, seed, pattern_n,
                           pattern_edges, keep_multiplicities, out, human);
        if (contain->parsed())
            return run_contain(in, mode, q_text, k_text, alpha_text, beta_text, e_text, force,
                               max_nodes, max_leaves, out, human);
        if (verify->parsed()) return run_verify(hypergraph_path, containers_path, verify_out, human);
        if (measure->parsed()) return run_measure(measure_in, t, measure_out, human);
    } catch (const hcl::HypothesisError& e) {
        std::cerr << e.what() << "\n";
        return kExitHypothesis;
    } catch (const hcl::LimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitLimits;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitBadParams;
}
