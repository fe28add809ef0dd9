#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "semideco/dot_export.hpp"
#include "semideco/errors.hpp"
#include "semideco/json_io.hpp"
#include "semideco/suite.hpp"

namespace {

using semideco::Json;

constexpr int kExitOk = 0;
constexpr int kExitAssertedFailure = 1;
constexpr int kExitInputError = 2;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw semideco::input_error("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw semideco::input_error("JSON parse error in " + path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw semideco::input_error("cannot open output file: " + out_path);
    out << text;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

struct Options {
    std::string input;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    int count = 500;
    int max_points = 8;
};

int run_analyze(const Options& opt) {
    const semideco::SemiDecomposition f = semideco::semidec_from_json(load_json(opt.input));
    if (opt.format == "dot") {
        const auto elements = semideco::abstract_elements(f);
        const auto morse = semideco::morse_hypergraph(f, elements);
        if (!morse.ok())
            throw semideco::input_error(
                "no Morse hyper-graph exists for this instance; the JSON report "
                "carries the diagnostics");
        emit(semideco::morse_dot(f.space(), *morse.assignment), opt.out);
        return kExitOk;
    }
    emit(render(semideco::analyze_report(f)), opt.out);
    return kExitOk;
}

int run_simplicial(const Options& opt) {
    const semideco::SimplicialComplex k =
        semideco::simplicial_from_json(load_json(opt.input));
    if (opt.format == "dot") {
        const auto weak = semideco::abstract_weak_elements(
            semideco::simplicial_to_instance(k).semidec);
        emit(semideco::poset_dot(weak.space.target), opt.out);
        return kExitOk;
    }
    emit(render(semideco::simplicial_report(k)), opt.out);
    return kExitOk;
}

int run_digraph(const Options& opt) {
    const semideco::Digraph g = semideco::digraph_from_json(load_json(opt.input));
    if (opt.format == "dot") {
        emit(semideco::orbit_space_dot(g, semideco::orbit_space(g)), opt.out);
        return kExitOk;
    }
    emit(render(semideco::digraph_report(g)), opt.out);
    return kExitOk;
}

int run_reeb(const Options& opt) {
    const semideco::TriSurfaceFn s = semideco::surface_from_json(load_json(opt.input));
    if (opt.format == "dot") {
        const auto weak = semideco::weak_element_space(s);
        const auto reeb = semideco::reeb_graph(s);
        emit(semideco::reeb_dot(s, weak, reeb), opt.out);
        return kExitOk;
    }
    emit(render(semideco::reeb_report(s)), opt.out);
    return kExitOk;
}

int run_suite_cmd(const Options& opt) {
    semideco::SuiteConfig config;
    config.seed = opt.seed;
    config.count = opt.count;
    config.max_points = opt.max_points;
    const semideco::SuiteReport report = semideco::run_suite(config);
    emit(render(report.to_json()), opt.out);
    // persisted findings replay through the analyze command
    if (!opt.out.empty()) {
        int k = 0;
        for (const semideco::SuiteFinding& finding : report.findings) {
            std::ofstream cx(opt.out + ".cx" + std::to_string(k++) + ".json",
                             std::ios::binary);
            cx << finding.instance.dump(2) << "\n";
        }
    }
    return report.ok() ? kExitOk : kExitAssertedFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological invariants of semi-decompositions on finite spaces"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", opt.input, "input JSON file")->required();
        cmd->add_option("--format", opt.format, "output format (json|dot)")
            ->check(CLI::IsMember({"json", "dot"}));
        cmd->add_option("--out", opt.out, "output path (default: stdout)");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "classification, abstract elements, Morse "
                                      "hyper-graph of a semi-decomposition");
    add_common(analyze, true);
    CLI::App* simplicial =
        app.add_subcommand("simplicial", "face-poset check of a simplicial complex");
    add_common(simplicial, true);
    CLI::App* digraph =
        app.add_subcommand("digraph", "orbit space and collapse oracle of a digraph");
    add_common(digraph, true);
    CLI::App* reeb = app.add_subcommand(
        "reeb", "merge tree, weak element space and Reeb graph of a PL surface");
    add_common(reeb, true);
    CLI::App* suite =
        app.add_subcommand("suite", "seeded randomized lemma and invariant suites");
    add_common(suite, false);
    suite->add_option("--seed", opt.seed, "random seed");
    suite->add_option("--count", opt.count, "number of instances");
    suite->add_option("--max-points", opt.max_points, "largest space size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (simplicial->parsed()) return run_simplicial(opt);
        if (digraph->parsed()) return run_digraph(opt);
        if (reeb->parsed()) return run_reeb(opt);
        return run_suite_cmd(opt);
    } catch (const semideco::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const semideco::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertedFailure;
    }
}
