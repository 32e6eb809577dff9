// hjlab: enumerate words/patterns/lines, build the H/P/C hypergraphs,
// certify colourability, search colourings for monochromatic lines, and dump
// canonical reduction traces.
//
// Exit codes: 0 success (or line found), 1 search found nothing,
// 2 usage/budget/ineligible input, 20 certified not-colourable.

#include "CLI11.hpp"

#include "hjlab/coloring.hpp"
#include "hjlab/hypergraphs.hpp"
#include "hjlab/lines.hpp"
#include "hjlab/moves.hpp"
#include "hjlab/serialize.hpp"
#include "hjlab/words.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct Output {
    std::string path;  // empty: stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
};

std::optional<std::size_t> env_budget() {
    const char* v = std::getenv("HJLAB_BUDGET");
    if (!v) return std::nullopt;
    return static_cast<std::size_t>(std::stoull(v));
}

std::size_t pick_budget(std::size_t flag_value, std::size_t fallback) {
    if (flag_value != 0) return flag_value;
    if (auto e = env_budget()) return *e;
    return fallback;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::array<int, 3> parse_functional(const std::string& text) {
    std::array<int, 3> c{};
    char comma1 = 0, comma2 = 0;
    std::istringstream is(text);
    if (!(is >> c[0] >> comma1 >> c[1] >> comma2 >> c[2]) || comma1 != ',' ||
        comma2 != ',')
        throw std::runtime_error("functional must be given as c1,c2,c3");
    return c;
}

int run_enumerate(const std::string& kind, int m, std::size_t n, int q,
                  std::size_t budget, const Output& out) {
    std::ostringstream os;
    std::size_t total = 0;
    if (kind == "words") {
        const std::size_t space = hjlab::pow_size(static_cast<std::size_t>(m), n);
        if (space > budget) throw std::runtime_error("budget exceeded");
        for (std::size_t i = 0; i < space; ++i) {
            os << hjlab::word_from_rank(i, m, n).str() << '\n';
            ++total;
        }
    } else if (kind == "patterns") {
        if (hjlab::pow_size(static_cast<std::size_t>(m), n) > budget)
            throw std::runtime_error("budget exceeded");
        hjlab::for_each_pattern(m, n, [&](const hjlab::Pattern& p) {
            os << p.str() << '\n';
            ++total;
        });
    } else {  // lines
        if (hjlab::pow_size(static_cast<std::size_t>(m) + 1, n) > budget)
            throw std::runtime_error("budget exceeded");
        hjlab::for_each_line(m, n, q, [&](const hjlab::Line& l) {
            os << l.str() << '\n';
            ++total;
        });
    }
    os << "# total: " << total << '\n';
    out.write(os.str());
    return 0;
}

int run_build(const std::string& kind, int m, std::size_t n, int q,
              const std::string& format, std::size_t budget_flag, const Output& out) {
    hjlab::Hypergraph g;
    if (kind == "H") {
        g = hjlab::build_H(m, n, q, pick_budget(budget_flag, hjlab::kDefaultBuildBudget));
    } else if (kind == "P") {
        g = hjlab::build_P(m, n, q, hjlab::PStrategy::FromStarPatterns,
                           pick_budget(budget_flag, hjlab::kDefaultBuildBudget));
    } else {
        g = hjlab::build_C(q, pick_budget(budget_flag, hjlab::kDefaultCubeBudget));
    }
    out.write(format == "dimacs" ? hjlab::to_dimacs_edges(g) : hjlab::to_json(g) + "\n");
    return 0;
}

int run_certify(const std::string& input, int r, const std::string& cnf_out,
                std::size_t budget_flag, std::uint64_t node_budget, bool no_seed,
                const Output& out) {
    hjlab::Hypergraph g = hjlab::hypergraph_from_json(slurp(input));
    hjlab::SearchOptions opt;
    opt.vertex_budget = pick_budget(budget_flag, opt.vertex_budget);
    opt.node_budget = node_budget;
    opt.clique_seeding = !no_seed;

    if (!cnf_out.empty()) {
        std::ofstream f(cnf_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + cnf_out);
        f << hjlab::export_dimacs(g, r);
    }

    hjlab::ColourCertificate cert = hjlab::exact_colourability(g, r, opt);
    out.write(hjlab::certificate_to_json(cert) + "\n");
    std::cerr << "certify: " << cert.stats.nodes << " nodes, " << cert.stats.seconds
              << " s\n";
    switch (cert.verdict) {
        case hjlab::Verdict::Colourable: return 0;
        case hjlab::Verdict::NotColourable: return 20;
        default: return 2;
    }
}

int run_search(const std::string& path, int q, bool binary, int threads,
               const Output& out) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    hjlab::DenseColouring col =
        binary ? hjlab::DenseColouring::load_binary(f) : hjlab::DenseColouring::load_text(f);
    auto hit = hjlab::find_monochromatic_line(col, q, threads);
    out.write(hit ? hit->str() + "\n" : "none\n");
    return hit ? 0 : 1;
}

int run_reduce(const std::string& core_text, int q, const Output& out) {
    hjlab::Pattern core = hjlab::Pattern::parse(core_text, 3);
    hjlab::ReductionTrace trace =
        hjlab::canonical_reduction(hjlab::make_buffered(core, q), q);
    out.write(hjlab::format_trace(trace));
    return 0;
}

int run_lift(int q, std::size_t n, const std::string& functional, bool binary,
             std::size_t budget_flag, const Output& out) {
    std::array<int, 3> c{};
    if (!functional.empty()) {
        c = parse_functional(functional);
    } else {
        auto proper = hjlab::linear_colouring_search(q);
        if (proper.empty())
            throw std::runtime_error("no proper linear colouring exists for this q");
        c = proper.front();
    }
    hjlab::Colouring chi = hjlab::functional_colouring(c, q);
    hjlab::DenseColouring lifted = hjlab::lift_colouring(
        chi, n, q, pick_budget(budget_flag, hjlab::kDefaultBuildBudget));
    std::ostringstream os;
    if (binary)
        lifted.save_binary(os);
    else
        lifted.save_text(os);
    out.write(os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial lines, pattern hypergraphs and cube colourings"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker count (outputs are independent of it)")
        ->check(CLI::PositiveNumber);

    std::string out_path;

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list words, patterns or lines");
    std::string enum_kind;
    int enum_m = 3, enum_q = 1;
    std::size_t enum_n = 1, enum_budget = 0;
    enumerate->add_option("--kind", enum_kind, "words | patterns | lines")
        ->required()
        ->check(CLI::IsMember({"words", "patterns", "lines"}));
    enumerate->add_option("-m", enum_m, "alphabet size")->required()->check(CLI::Range(2, 9));
    enumerate->add_option("-n", enum_n, "length bound")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("-q", enum_q, "interval bound for lines (default 1)")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--budget", enum_budget, "vertex budget override");
    enumerate->add_option("-o,--output", out_path, "output file (default stdout)");

    // build
    auto* build = app.add_subcommand("build", "build the H, P or C hypergraph");
    std::string build_kind, build_format = "json";
    int build_m = 3, build_q = 1;
    std::size_t build_n = 1, build_budget = 0;
    build->add_option("--kind", build_kind, "H | P | C")
        ->required()
        ->check(CLI::IsMember({"H", "P", "C"}));
    build->add_option("-m", build_m, "alphabet size")->check(CLI::Range(2, 9));
    build->add_option("-n", build_n, "word length")->check(CLI::PositiveNumber);
    build->add_option("-q", build_q, "interval bound")->required()->check(CLI::PositiveNumber);
    build->add_option("--format", build_format, "json | dimacs")
        ->check(CLI::IsMember({"json", "dimacs"}));
    build->add_option("--budget", build_budget, "vertex budget override");
    build->add_option("-o,--output", out_path, "output file (default stdout)");

    // certify
    auto* certify = app.add_subcommand("certify", "decide r-colourability of a hypergraph");
    std::string certify_input, certify_cnf;
    int certify_r = 2;
    std::size_t certify_budget = 0;
    std::uint64_t certify_nodes = 0;
    bool certify_no_seed = false;
    certify->add_option("--input", certify_input, "hypergraph JSON path")->required();
    certify->add_option("-r", certify_r, "colour count")->required()->check(CLI::Range(1, 30));
    certify->add_option("--cnf-out", certify_cnf, "also write the CNF encoding here");
    certify->add_option("--budget", certify_budget, "search vertex budget override");
    certify->add_option("--nodes", certify_nodes, "node budget (0 = unlimited)");
    certify->add_flag("--no-seed", certify_no_seed, "disable clique seeding");
    certify->add_option("-o,--output", out_path, "certificate file (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "find a monochromatic q-fold line");
    std::string search_path;
    int search_q = 1;
    bool search_binary = false;
    search->add_option("--colouring", search_path, "colouring file path")->required();
    search->add_option("-q", search_q, "interval bound")->required()->check(CLI::PositiveNumber);
    search->add_flag("--binary", search_binary, "read the binary colouring format");
    search->add_option("-o,--output", out_path, "output file (default stdout)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "canonical reduction trace of a core");
    std::string reduce_core;
    int reduce_q = 1;
    reduce->add_option("--core", reduce_core, "core pattern over [3]")->required();
    reduce->add_option("-q", reduce_q, "interval bound")->required()->check(CLI::PositiveNumber);
    reduce->add_option("-o,--output", out_path, "output file (default stdout)");

    // lift
    auto* lift = app.add_subcommand("lift", "lift a cube colouring to a word colouring");
    int lift_q = 1;
    std::size_t lift_n = 1, lift_budget = 0;
    std::string lift_functional;
    bool lift_binary = false;
    lift->add_option("-q", lift_q, "interval bound")->required()->check(CLI::PositiveNumber);
    lift->add_option("-n", lift_n, "word length")->required()->check(CLI::PositiveNumber);
    lift->add_option("--functional", lift_functional,
                     "linear functional c1,c2,c3 (default: first proper one)");
    lift->add_flag("--binary", lift_binary, "write the binary colouring format");
    lift->add_option("--budget", lift_budget, "word budget override");
    lift->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Output out{out_path};
        if (enumerate->parsed())
            return run_enumerate(enum_kind, enum_m, enum_n, enum_q,
                                 pick_budget(enum_budget, hjlab::kDefaultBuildBudget), out);
        if (build->parsed())
            return run_build(build_kind, build_m, build_n, build_q, build_format,
                             build_budget, out);
        if (certify->parsed())
            return run_certify(certify_input, certify_r, certify_cnf, certify_budget,
                               certify_nodes, certify_no_seed, out);
        if (search->parsed()) return run_search(search_path, search_q, search_binary,
                                                threads, out);
        if (reduce->parsed()) return run_reduce(reduce_core, reduce_q, out);
        if (lift->parsed())
            return run_lift(lift_q, lift_n, lift_functional, lift_binary, lift_budget, out);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
