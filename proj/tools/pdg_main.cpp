#include "pdg/configs.hpp"
#include "pdg/discharge.hpp"
#include "pdg/gen.hpp"
#include "pdg/pdg_io.hpp"
#include "pdg/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// Exit codes are a stable contract:
//   0 success / found, 1 definitive negative, 2 input error,
//   3 budget exhausted, 4 generation failure, 5 cap exceeded.
constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitGen = 4;
constexpr int kExitCap = 5;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pdg::InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report_header(const std::string& command, const std::string& input,
                   const std::string& bytes) {
    std::cout << "command " << command << "\n";
    std::cout << "input " << input << "\n";
    std::cout << "digest " << pdg::fnv1a_hex(bytes) << "\n";
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
    const char* value = std::getenv(name);
    if (!value) return fallback;
    return std::strtoull(value, nullptr, 10);
}

int cmd_digirth(const std::string& path) {
    Timer timer;
    std::string bytes = slurp(path);
    std::istringstream in(bytes);
    auto file = pdg::read_pdg(in);
    auto D = file.to_digraph();
    report_header("digirth", path, bytes);
    auto g = D.digirth();
    std::cout << "digirth " << (g ? std::to_string(*g) : std::string("infinity")) << "\n";
    std::cout << "elapsed_ms " << timer.ms() << "\n";
    return kExitFound;
}

int cmd_solve(const std::string& path, const std::string& lists_path, std::uint64_t budget,
              std::uint64_t seed, bool reduce, int recolor_depth) {
    Timer timer;
    std::string bytes = slurp(path);
    std::istringstream in(bytes);
    auto file = pdg::read_pdg(in);
    auto D = file.to_digraph();
    pdg::ListAssignment L;
    if (lists_path.empty())
        L = pdg::ListAssignment::uniform(D.vertex_count(), 2);
    else
        L = pdg::read_lists_file(lists_path, D.embedding(), {1, 2});

    pdg::SolveOutcome outcome;
    if (reduce) {
        pdg::ReduceOptions opts;
        opts.recolor_depth = recolor_depth;
        opts.fallback.budget = budget;
        opts.fallback.seed = seed;
        outcome = pdg::reduce_and_color(D, L, opts);
    } else {
        outcome = pdg::solve(D, L, {budget, seed});
    }

    report_header("solve", path, bytes);
    const char* status = outcome.status == pdg::SolveStatus::colored ? "colored"
                         : outcome.status == pdg::SolveStatus::unsatisfiable
                             ? "unsatisfiable"
                             : "budget-exhausted";
    std::cout << "status " << status << "\n";
    std::cout << "nodes " << outcome.stats.nodes << "\n";
    std::cout << "backtracks " << outcome.stats.backtracks << "\n";
    if (outcome.status == pdg::SolveStatus::colored)
        for (int v = 0; v < D.vertex_count(); ++v)
            std::cout << "c " << D.embedding().label(v) << " " << outcome.witness.get(v) << "\n";
    std::cout << "elapsed_ms " << timer.ms() << "\n";
    switch (outcome.status) {
    case pdg::SolveStatus::colored: return kExitFound;
    case pdg::SolveStatus::unsatisfiable: return kExitNegative;
    case pdg::SolveStatus::budget_exhausted: return kExitBudget;
    }
    return kExitInput;
}

int cmd_discharge(const std::string& path, const std::string& ledger_out) {
    Timer timer;
    std::string bytes = slurp(path);
    std::istringstream in(bytes);
    auto file = pdg::read_pdg(in); // orientation ignored
    const auto& emb = file.embedding;
    auto result = pdg::final_report(emb);

    report_header("discharge", path, bytes);
    for (int v = 0; v < emb.vertex_count(); ++v)
        std::cout << "charge v" << v << " " << pdg::to_string(result.final.vertex(v)) << "\n";
    for (int f = 0; f < emb.face_count(); ++f)
        std::cout << "charge f" << f << " " << pdg::to_string(result.final.face(f)) << "\n";
    for (const auto& e : result.negative)
        std::cout << "negative " << pdg::to_string(e) << " "
                  << pdg::to_string(result.final.of(e)) << "\n";
    bool conserved = pdg::verify_conservation(result.ledger, emb, result.final);
    std::cout << "conservation " << (conserved ? "true" : "false") << "\n";

    int min_degree = emb.degree(0);
    for (int v = 1; v < emb.vertex_count(); ++v) min_degree = std::min(min_degree, emb.degree(v));
    if (!result.negative.empty() && min_degree >= 4)
        std::cout << "flag catalog incomplete or theorem-relevant instance\n";

    if (!ledger_out.empty()) {
        std::ofstream out(ledger_out);
        if (!out) throw pdg::InputError("cannot write '" + ledger_out + "'");
        out << result.ledger.serialize();
        std::cout << "ledger " << ledger_out << "\n";
    }
    std::cout << "elapsed_ms " << timer.ms() << "\n";
    return kExitFound;
}

int cmd_match(const std::string& graph_path, const std::string& catalog_path) {
    Timer timer;
    std::string bytes = slurp(graph_path);
    std::istringstream in(bytes);
    auto file = pdg::read_pdg(in);
    auto catalog = pdg::load_catalog_file(catalog_path);

    report_header("match", graph_path, bytes);
    std::cout << "catalog " << catalog_path << "\n";
    bool any = false;
    for (const auto& cfg : catalog) {
        auto matches = pdg::contains(file.embedding, cfg);
        std::cout << "match " << cfg.name << " " << matches.size() << "\n";
        if (!matches.empty()) {
            any = true;
            std::cout << "witness " << cfg.name;
            for (int a = 0; a < cfg.pattern.vertex_count(); ++a)
                std::cout << " " << cfg.pattern.label(a) << "->"
                          << file.embedding.label(matches.front().image[a]);
            std::cout << "\n";
        }
    }
    std::cout << "elapsed_ms " << timer.ms() << "\n";
    return any ? kExitFound : kExitNegative;
}

int cmd_gen(int n, int min_degree, int digirth, bool acyclic, std::uint64_t seed,
            int repair_rounds, const std::string& out_path) {
    Timer timer;
    pdg::GenSpec spec;
    spec.n = n;
    spec.min_degree = min_degree;
    spec.seed = seed;
    spec.max_repair_rounds = repair_rounds;
    if (acyclic)
        spec.digirth_min = pdg::kDigirthAcyclic;
    else if (digirth > 0)
        spec.digirth_min = digirth;

    std::string payload;
    if (spec.digirth_min.has_value())
        payload = pdg::write_pdg(pdg::random_planar_digraph(spec));
    else
        payload = pdg::write_pdg(pdg::random_plane_graph(spec));

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw pdg::InputError("cannot write '" + out_path + "'");
        out << payload;
    } else {
        std::cout << payload;
    }
    report_header("gen", out_path.empty() ? "-" : out_path, payload);
    std::cout << "n " << n << "\n";
    std::cout << "min_degree " << min_degree << "\n";
    std::cout << "digirth_min "
              << (acyclic ? std::string("acyclic")
                          : digirth > 0 ? std::to_string(digirth) : std::string("none"))
              << "\n";
    std::cout << "seed " << seed << "\n";
    std::cout << "elapsed_ms " << timer.ms() << "\n";
    return kExitFound;
}

int cmd_acyclic(const std::string& path) {
    Timer timer;
    std::string bytes = slurp(path);
    std::istringstream in(bytes);
    auto file = pdg::read_pdg(in);
    auto D = file.to_digraph();
    int cap = static_cast<int>(env_cap("PDG_BRUTE_CAP", 20));
    auto set = pdg::max_acyclic_set(D, cap);

    report_header("acyclic", path, bytes);
    int n = D.vertex_count();
    int bound = (3 * n + 4) / 5; // ceil(3n/5)
    std::cout << "size " << set.size() << "\n";
    std::cout << "ratio " << set.size() << "/" << n << "\n";
    std::cout << "bound " << bound << "\n";
    std::cout << "bound_met " << (static_cast<int>(set.size()) >= bound ? "true" : "false") << "\n";
    std::cout << "s";
    for (int v : set) std::cout << " " << D.embedding().label(v);
    std::cout << "\n";
    std::cout << "elapsed_ms " << timer.ms() << "\n";
    return kExitFound;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane digraph toolkit: list dicoloring, discharging, configuration matching"};
    app.require_subcommand(1);

    std::string path, lists_path, ledger_out, catalog_path, out_path;
    std::uint64_t budget = 10'000'000, seed = 0;
    bool reduce = false, acyclic_flag = false;
    int recolor_depth = 8, n = 8, min_degree = 2, digirth = 0, repair_rounds = 0;

    auto* digirth_cmd = app.add_subcommand("digirth", "shortest directed cycle length");
    digirth_cmd->add_option("file", path)->required();

    auto* solve_cmd = app.add_subcommand("solve", "exact list dicoloring");
    solve_cmd->add_option("file", path)->required();
    solve_cmd->add_option("--lists", lists_path, "list file (default: every list {1,2})");
    solve_cmd->add_option("--budget", budget, "search node budget");
    solve_cmd->add_option("--seed", seed, "value-order seed (0 = natural order)");
    solve_cmd->add_flag("--reduce", reduce, "use the reduction-based colorer");
    solve_cmd->add_option("--recolor-depth", recolor_depth, "recoloring depth for --reduce");

    auto* discharge_cmd = app.add_subcommand("discharge", "exact-rational discharging report");
    discharge_cmd->add_option("file", path)->required();
    discharge_cmd->add_option("--ledger", ledger_out, "write the transfer ledger here");

    auto* match_cmd = app.add_subcommand("match", "configuration containment");
    match_cmd->add_option("graph", path)->required();
    match_cmd->add_option("catalog", catalog_path)->required();

    auto* gen_cmd = app.add_subcommand("gen", "seeded random plane graph / planar digraph");
    gen_cmd->add_option("--n", n, "vertex count")->required();
    gen_cmd->add_option("--min-degree", min_degree, "degree floor");
    gen_cmd->add_option("--digirth", digirth, "orient with digirth >= this");
    gen_cmd->add_flag("--acyclic", acyclic_flag, "orient acyclically");
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--max-repair-rounds", repair_rounds, "0 = default budget");
    gen_cmd->add_option("--out", out_path, "output file (default: stdout)");

    auto* acyclic_cmd = app.add_subcommand("acyclic", "maximum acyclic set (exact)");
    acyclic_cmd->add_option("file", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (digirth_cmd->parsed()) return cmd_digirth(path);
        if (solve_cmd->parsed())
            return cmd_solve(path, lists_path, budget, seed, reduce, recolor_depth);
        if (discharge_cmd->parsed()) return cmd_discharge(path, ledger_out);
        if (match_cmd->parsed()) return cmd_match(path, catalog_path);
        if (gen_cmd->parsed())
            return cmd_gen(n, min_degree, digirth, acyclic_flag, seed, repair_rounds, out_path);
        if (acyclic_cmd->parsed()) return cmd_acyclic(path);
    } catch (const pdg::GenError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGen;
    } catch (const pdg::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const pdg::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
