#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "autodel/autgroup.hpp"
#include "autodel/constructions.hpp"
#include "autodel/errors.hpp"
#include "autodel/search.hpp"
#include "autodel/sidecar.hpp"
#include "autodel/verify.hpp"

using namespace autodel;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw input_error("cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    std::string text = buffer.str();
    if (text.empty()) throw input_error("empty input: '" + path + "'");
    return text;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

VerifyOptions options_from_env() {
    VerifyOptions opt;
    if (const char* cap = std::getenv("AUTODEL_ENGINE_CAP")) {
        long v = std::strtol(cap, nullptr, 10);
        if (v > 0) opt.abstract_group_cap = static_cast<std::size_t>(v);
    }
    return opt;
}

int cmd_construct(const std::string& relation, const std::string& g1spec,
                  const std::string& g2spec, const std::string& format,
                  const std::string& out_path, const std::string& sidecar_path) {
    FiniteGroup g1 = parse_group_spec(g1spec);
    FiniteGroup g2 = parse_group_spec(g2spec);
    Witness w = relation == "edge" ? edge_deletion_witness(g1, g2) : vertex_deletion_witness(g1, g2);

    std::string main_output;
    if (format == "g6")
        main_output = to_graph6(w.graph) + "\n";
    else if (format == "dot")
        main_output = to_dot(w);
    else
        main_output = witness_to_json(w).dump(2) + "\n";
    write_output(out_path, main_output);
    if (!sidecar_path.empty()) write_output(sidecar_path, witness_to_json(w).dump(2) + "\n");
    return kExitPass;
}

int cmd_aut(const std::string& path) {
    Graph g = from_graph6(read_input(path));
    AutEngine engine;
    AutResult res = engine.run(g);
    std::cout << "n: " << g.vertex_count() << "\n";
    std::cout << "m: " << g.edge_count() << "\n";
    std::cout << "generators:\n";
    for (const Permutation& p : res.group.generators()) std::cout << "  " << p.cycle_string() << "\n";
    if (res.group.generators().empty()) std::cout << "  (none)\n";
    std::cout << "order: " << res.group.order() << "\n";
    std::cout << "orbits:";
    for (const auto& orbit : res.group.orbits()) {
        std::cout << " {";
        for (std::size_t i = 0; i < orbit.size(); ++i)
            std::cout << (i ? "," : "") << orbit[i];
        std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "canonical: " << res.canonical_graph6 << "\n";
    return kExitPass;
}

int cmd_verify(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_input(path));
    Witness w = witness_from_json(j);
    VerificationReport report = verify_witness(w, options_from_env());
    std::cout << report_to_json(report).dump(2) << "\n";
    if (report.resource_limited) return kExitError;
    return report.pass() ? kExitPass : kExitFail;
}

int cmd_search(const std::string& relation, const std::string& g1spec,
               const std::string& g2spec, int max_n, int workers) {
    FiniteGroup g1 = parse_group_spec(g1spec);
    FiniteGroup g2 = parse_group_spec(g2spec);
    SearchResult result = relation == "edge"
                              ? search_min_edge_witness(g1, g2, max_n, workers)
                              : search_min_vertex_witness(g1, g2, max_n, workers);
    std::cout << search_result_to_json(result).dump(2) << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deletion-relation witness constructions, automorphism engine, and search"};
    app.require_subcommand(1);

    std::string relation = "vertex", g1spec, g2spec, format = "json";
    std::string out_path, sidecar_path, input_path;
    int max_n = 8, workers = 1;

    auto* construct = app.add_subcommand("construct", "build a witness for gamma1 -> gamma2");
    construct->add_option("--relation", relation, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
    construct->add_option("--g1", g1spec, "group spec for Aut(G)")->required();
    construct->add_option("--g2", g2spec, "group spec for Aut(G - target)")->required();
    construct->add_option("--format", format, "g6|dot|json")
        ->check(CLI::IsMember({"g6", "dot", "json"}));
    construct->add_option("--out", out_path, "output path (default stdout)");
    construct->add_option("--sidecar", sidecar_path, "also write the JSON sidecar here");

    auto* aut = app.add_subcommand("aut", "automorphism group of a graph6 input");
    aut->add_option("file", input_path, "graph6 file, or - for stdin")->required();

    auto* verify = app.add_subcommand("verify", "verify a witness sidecar");
    verify->add_option("file", input_path, "sidecar JSON file, or - for stdin")->required();

    auto* search = app.add_subcommand("search", "minimal-order witness search");
    search->add_option("--relation", relation, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
    search->add_option("--g1", g1spec, "group spec for Aut(G)")->required();
    search->add_option("--g2", g2spec, "group spec after deletion")->required();
    search->add_option("--max-n", max_n, "largest order to scan")->required();
    search->add_option("--workers", workers, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmd_construct(relation, g1spec, g2spec, format, out_path, sidecar_path);
        if (aut->parsed()) return cmd_aut(input_path);
        if (verify->parsed()) return cmd_verify(input_path);
        if (search->parsed()) return cmd_search(relation, g1spec, g2spec, max_n, workers);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
