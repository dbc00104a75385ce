// Command-line front end: sorting traces, the hook-tableau encoding and its
// inverse, statistics tables, formula-vs-oracle verification sweeps,
// bijection application and counterexample searches.
//
// Exit codes: 0 success, 2 parse error, 3 validation error, 4 verification
// failure (a sweep or search that was expected to succeed did not).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nps/bijections.hpp"
#include "nps/counterexamples.hpp"
#include "nps/formulas.hpp"
#include "nps/io.hpp"
#include "nps/statistics.hpp"
#include "nps/verify.hpp"

using namespace nps;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerification = 4;

struct RunConfig {
    std::string shape;
    std::string tabloid;
    std::string hook;
    std::string syt;
    int k = 1;
    std::string x;
    int max_n = 5;
    std::string backend = "both";       // oracle | formula | both
    std::string comp2 = "full";        // full | truncated
    std::string format = "human";       // human | json | csv
    int jobs = 1;
    std::string out;
};

std::ostream& output_stream(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out);
    return file;
}

Partition shape_of(const RunConfig& cfg, const Tabloid& grid) {
    if (!cfg.shape.empty() && parse_partition(cfg.shape) != grid.shape())
        throw std::invalid_argument("--shape disagrees with the grid argument");
    return grid.shape();
}

// ---- sort -------------------------------------------------------------------

int cmd_sort(const RunConfig& cfg) {
    Tabloid t = parse_tabloid(cfg.tabloid);
    Partition shape = shape_of(cfg, t);
    CellOrder order = CellOrder::column_major(shape);
    json orderJson = "colmajor";
    if (!cfg.syt.empty()) {  // sort under the order induced by a tableau
        Tabloid u = parse_tabloid(cfg.syt);
        if (u.shape() != shape)
            throw std::invalid_argument("order tableau shape mismatch");
        order = cell_order_from_tableau(u);
        orderJson = grid_to_json(u);
    }
    SortTrace trace = nps_sort(t, order);
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == "json") {
        os << trace_to_json(trace, orderJson).dump(2) << "\n";
        return 0;
    }
    os << "input:\n" << print_grid_aligned(trace.input);
    for (const ForwardSlide& s : trace.slides)
        if (s.length() > 0)
            os << "slide at (" << print_cell(s.cell) << "): " << print_cycle(s) << "\n";
    os << trace.total_exchanges() << " exchanges\n";
    for (const Exchange& e : trace.exchanges)
        os << "  " << e.smaller << " <-> " << e.larger << "  (" << print_cell(e.from)
           << ") -> (" << print_cell(e.to) << ")\n";
    os << "output:\n" << print_grid_aligned(trace.output);
    return 0;
}

// ---- encode / decode ----------------------------------------------------------

int cmd_encode(const RunConfig& cfg) {
    Tabloid t = parse_tabloid(cfg.tabloid);
    shape_of(cfg, t);
    auto [hook, syt] = nps_encode(t);
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == "json") {
        os << json{{"hook", grid_to_json(hook)}, {"syt", grid_to_json(syt)}}.dump(2)
           << "\n";
    } else {
        os << "hook tableau:\n" << print_grid_aligned(hook);
        os << "tableau:\n" << print_grid_aligned(syt);
    }
    return 0;
}

int cmd_decode(const RunConfig& cfg) {
    HookTableau hook = parse_hook_tableau(cfg.hook);
    Tabloid syt = parse_tabloid(cfg.syt);
    if (hook.shape() != syt.shape())
        throw std::invalid_argument("hook tableau and tableau shapes differ");
    if (!cfg.shape.empty() && parse_partition(cfg.shape) != syt.shape())
        throw std::invalid_argument("--shape disagrees with the grid arguments");
    Tabloid t = nps_decode(hook, syt);
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == "json")
        os << json{{"tabloid", grid_to_json(t)}}.dump(2) << "\n";
    else
        os << print_grid_aligned(t);
    return 0;
}

// ---- stats --------------------------------------------------------------------

json kcell_json(const Partition& shape, const KCellTable& table) {
    json rows = json::array();
    for (const auto& row : table) {
        json r = json::array();
        for (const ExactInt& v : row) r.push_back(to_string(v));
        rows.push_back(r);
    }
    return rows;
}

void kcell_csv(std::ostream& os, const std::string& name, const Partition& shape,
               const KCellTable& table) {
    os << name << "\nk";
    for (Cell x : shape.cells()) os << ",\"(" << print_cell(x) << ")\"";
    os << "\n";
    for (std::size_t k = 0; k < table.size(); ++k) {
        os << (k + 1);
        for (const ExactInt& v : table[k]) os << "," << to_string(v);
        os << "\n";
    }
}

int cmd_stats(const RunConfig& cfg) {
    Partition shape = parse_partition(cfg.shape);
    const int n = shape.size();
    const bool wantOracle = cfg.backend != "formula";
    const bool wantFormula = cfg.backend != "oracle";
    ComplexityVariant comp2 = cfg.comp2 == "truncated"
                                  ? ComplexityVariant::comp2_truncated
                                  : ComplexityVariant::comp2_full;

    std::optional<StatTables> oracle;
    if (wantOracle) oracle = compute_stat_tables(shape);
    Census census = f_census(shape);

    KCellTable fTable = make_kcell_table(shape);
    for (int k = 1; k <= n; ++k)
        for (Cell x : shape.cells()) fTable[k - 1][shape.cell_index(x)] = census.at(k, x);

    KCellTable dropF = make_kcell_table(shape), exitF = make_kcell_table(shape);
    std::vector<ExactInt> epsF;
    ExactRational comp1F, comp2F;
    if (wantFormula) {
        for (int k = 1; k <= n; ++k)
            for (Cell x : shape.cells()) {
                dropF[k - 1][shape.cell_index(x)] =
                    drop_formula(shape, census, k, x, DropVariant::harmonic_free);
                if (k < n)
                    exitF[k - 1][shape.cell_index(x)] =
                        to_integer(delta_formula(shape, census, k, x));
            }
        for (int k = 1; k < n; ++k) epsF.push_back(exchange_formula(shape, census, k));
        comp1F = complexity_formula(shape, census, ComplexityVariant::comp1);
        comp2F = complexity_formula(shape, census, comp2);
    }

    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);

    if (cfg.format == "json") {
        json j{{"schema", "nps-stats-1"}, {"shape", print_partition(shape)}};
        j["census"] = kcell_json(shape, fTable);
        if (oracle) {
            j["oracle"] = {{"complexity", to_string(oracle->complexity)},
                           {"drop", kcell_json(shape, oracle->drop)},
                           {"exit", kcell_json(shape, oracle->signed_exit)}};
            json eps = json::array();
            for (int k = 1; k < n; ++k) eps.push_back(to_string(oracle->exchange_of(k)));
            j["oracle"]["exchange"] = eps;
        }
        if (wantFormula) {
            j["formula"] = {{"complexity_first_form", to_string(comp1F)},
                            {"complexity_second_form", to_string(comp2F)},
                            {"second_form_variant", cfg.comp2},
                            {"drop", kcell_json(shape, dropF)},
                            {"exit", kcell_json(shape, exitF)}};
            json eps = json::array();
            for (const ExactInt& v : epsF) eps.push_back(to_string(v));
            j["formula"]["exchange"] = eps;
        }
        if (oracle && wantFormula) {
            bool agree = dropF == oracle->drop && comp1F == oracle->complexity;
            for (int k = 1; k < n && agree; ++k)
                agree = epsF[k - 1] == oracle->exchange_of(k) &&
                        exitF[k - 1] == oracle->signed_exit[k - 1];
            j["agreement"] = {{"drop", dropF == oracle->drop},
                              {"complexity_first_form", comp1F == oracle->complexity},
                              {"complexity_second_form", comp2F == oracle->complexity},
                              {"all", agree && comp2F == oracle->complexity}};
        }
        os << j.dump(2) << "\n";
        return 0;
    }

    if (cfg.format == "csv") {
        kcell_csv(os, "census f(k;x)", shape, fTable);
        if (oracle) {
            kcell_csv(os, "drop (oracle)", shape, oracle->drop);
            kcell_csv(os, "exit (oracle)", shape, oracle->signed_exit);
            os << "complexity (oracle)\n" << to_string(oracle->complexity) << "\n";
        }
        if (wantFormula) {
            kcell_csv(os, "drop (formula)", shape, dropF);
            kcell_csv(os, "exit (formula)", shape, exitF);
            os << "exchange (formula)\nk,eps\n";
            for (int k = 1; k < n; ++k) os << k << "," << to_string(epsF[k - 1]) << "\n";
            os << "complexity (formula)\n" << to_string(comp1F) << "\n";
        }
        return 0;
    }

    os << "shape: " << print_partition(shape) << "   n = " << n << "\n";
    auto printTable = [&](const std::string& name, const KCellTable& t) {
        os << name << " (rows k = 1.." << t.size() << ", columns";
        for (Cell x : shape.cells()) os << " (" << print_cell(x) << ")";
        os << "):\n";
        for (const auto& row : t) {
            for (const ExactInt& v : row) os << "\t" << to_string(v);
            os << "\n";
        }
    };
    printTable("census f(k;x)", fTable);
    if (oracle) {
        os << "complexity (oracle): " << to_string(oracle->complexity) << "\n";
        os << "exchange numbers (oracle):";
        for (int k = 1; k < n; ++k) os << " " << to_string(oracle->exchange_of(k));
        os << "\n";
        printTable("drop table (oracle)", oracle->drop);
        printTable("signed exit table (oracle)", oracle->signed_exit);
    }
    if (wantFormula) {
        os << "complexity (formula, first form): " << to_string(comp1F) << "\n";
        os << "complexity (formula, second form, " << cfg.comp2
           << " limit): " << to_string(comp2F) << "\n";
        os << "exchange numbers (formula):";
        for (const ExactInt& v : epsF) os << " " << to_string(v);
        os << "\n";
        printTable("drop table (formula)", dropF);
        printTable("signed exit table (formula)", exitF);
    }
    if (oracle && wantFormula && comp2F != oracle->complexity)
        os << "NOTE: second-form complexity (" << cfg.comp2 << " limit) disagrees with"
           << " the oracle: " << to_string(comp2F) << " vs "
           << to_string(oracle->complexity) << "\n";
    return 0;
}

// ---- verify ---------------------------------------------------------------------

struct Suite {
    std::string name;
    int cap;  // largest n this sweep is meant for (runtime guard)
    std::function<bool(const Partition&)> run;
};

int cmd_verify(const RunConfig& cfg) {
    const std::vector<Suite> suites = {
        {"hook-length-count", 9, verify::hook_length_count},
        {"encode-roundtrip", 7, verify::phi_decode_encode},
        {"decode-roundtrip", 6, verify::phi_encode_decode},
        {"uniform-multiset", 7, verify::uniform_multiset},
        {"invariance", 5, [](const Partition& p) { return verify::invariance(p); }},
        {"exit-numbers", 6, verify::exit_numbers},
        {"drop-function", 6, verify::drop_function},
        {"exchange-numbers", 6, verify::exchange_numbers},
        {"complexity", 7, verify::complexity},
        {"summation-identities", 6, verify::summation_identities},
        {"symmetry-formulas", 7, verify::symmetry_formulas},
        {"symmetry-oracles", 6, verify::symmetry_full},
        {"psi-roundtrip", 5, verify::psi_domains},
        {"psi-cardinality", 6, verify::psi_cardinality},
        {"exchange-bijection", 5, verify::exchange_bijection},
        {"ping-pong", 5, verify::pingpong_bijection},
        {"census-backends", 7, verify::census_backends},
        {"skew-counts", 6, verify::skew_counts},
    };

    struct Row {
        int n;
        Partition shape;
        std::vector<int> verdict;  // -1 skipped, 0 fail, 1 pass
    };
    std::vector<Row> rows;
    for (int n = 1; n <= cfg.max_n; ++n)
        for (const Partition& shape : partitions_of(n))
            rows.push_back({n, shape, {}});

    // fan out per shape; merges are ordered by the rows vector
    const int jobs = std::max(1, cfg.jobs);
    std::vector<std::future<std::vector<int>>> pending(rows.size());
    auto worker = [&](const Row& row) {
        std::vector<int> verdict;
        for (const Suite& s : suites)
            verdict.push_back(row.n > s.cap ? -1 : (s.run(row.shape) ? 1 : 0));
        return verdict;
    };
    for (std::size_t i = 0; i < rows.size(); i += jobs) {
        for (std::size_t j = i; j < std::min(rows.size(), i + jobs); ++j)
            pending[j] = std::async(std::launch::async, worker, std::cref(rows[j]));
        for (std::size_t j = i; j < std::min(rows.size(), i + jobs); ++j)
            rows[j].verdict = pending[j].get();
    }

    bool allPass = true;
    for (const Row& r : rows)
        for (int v : r.verdict)
            if (v == 0) allPass = false;

    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (cfg.format == "json") {
        json j{{"schema", "nps-verify-1"}, {"max_n", cfg.max_n}, {"pass", allPass}};
        j["suites"] = json::array();
        for (const Suite& s : suites) j["suites"].push_back(s.name);
        j["results"] = json::array();
        for (const Row& r : rows) {
            json row{{"shape", print_partition(r.shape)}};
            json v = json::array();
            for (int x : r.verdict)
                v.push_back(x == -1 ? "skip" : (x == 1 ? "pass" : "FAIL"));
            row["verdicts"] = v;
            j["results"].push_back(row);
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "shape";
        for (const Suite& s : suites) os << "," << s.name;
        os << "\n";
        for (const Row& r : rows) {
            os << "\"" << print_partition(r.shape) << "\"";
            for (int v : r.verdict) os << "," << (v == -1 ? "skip" : (v == 1 ? "pass" : "FAIL"));
            os << "\n";
        }
    } else {
        for (const Row& r : rows) {
            os << print_partition(r.shape) << ":";
            for (std::size_t s = 0; s < suites.size(); ++s)
                if (r.verdict[s] != -1)
                    os << " " << suites[s].name << "=" << (r.verdict[s] ? "pass" : "FAIL");
            os << "\n";
        }
        os << (allPass ? "all suites passed" : "FAILURES detected") << "\n";
    }
    return allPass ? 0 : kExitVerification;
}

// ---- counterexample ---------------------------------------------------------------

int cmd_counterexample(const std::string& kind, const RunConfig& cfg) {
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (kind == "local-conjugation") {
        auto w = find_local_conjugation_witness(cfg.max_n);
        if (!w) {
            os << "none found (n <= " << cfg.max_n << ")\n";
            return kExitVerification;
        }
        if (cfg.format == "json") {
            os << json{{"shape", print_partition(w->shape)},
                       {"k", w->k},
                       {"x", print_cell(w->x)},
                       {"y", print_cell(w->y)},
                       {"count", to_string(w->count)},
                       {"conjugate_count", to_string(w->conjugate_count)}}
                      .dump(2)
               << "\n";
        } else {
            os << "shape " << print_partition(w->shape) << ", k = " << w->k << ", x = ("
               << print_cell(w->x) << "), y = (" << print_cell(w->y) << ")\n"
               << "local exchange count " << to_string(w->count)
               << ", conjugate count " << to_string(w->conjugate_count) << "\n";
        }
        return 0;
    }
    if (kind == "nonuniform-order") {
        auto w = find_nonuniform_order_witness(cfg.max_n);
        if (!w) {
            os << "none found (n <= " << cfg.max_n << ")\n";
            return kExitVerification;
        }
        if (cfg.format == "json") {
            json hist = json::array();
            for (const auto& [u, c] : w->histogram)
                hist.push_back({{"tableau", print_grid(u)}, {"count", to_string(c)}});
            os << json{{"shape", print_partition(w->shape)},
                       {"order_tableau", print_grid(w->order_tableau)},
                       {"histogram", hist}}
                      .dump(2)
               << "\n";
        } else {
            os << "shape " << print_partition(w->shape) << ", order tableau "
               << print_grid(w->order_tableau) << "\n";
            for (const auto& [u, c] : w->histogram)
                os << "  " << print_grid(u) << " -> " << to_string(c) << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("unknown counterexample kind: " + kind);
}

// ---- bijection apply / invert -------------------------------------------------------

int cmd_bijection(const std::string& name, const std::string& direction,
                  const RunConfig& cfg) {
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    const bool apply = direction == "apply";
    if (!apply && direction != "invert")
        throw std::invalid_argument("direction must be apply or invert");

    if (name == "psi" || name == "drop-involution") {
        Cell x = parse_cell(cfg.x);
        if (name == "psi" && !apply) {
            HookTableau hook = parse_hook_tableau(cfg.hook);
            Tabloid syt = parse_tabloid(cfg.syt);
            DropWitness w = psi_inverse(hook.shape(), cfg.k, x, hook, syt);
            os << json{{"tabloid", print_grid(w.tabloid)}, {"label", w.label}}.dump(2)
               << "\n";
            return 0;
        }
        Tabloid t = parse_tabloid(cfg.tabloid);
        int label = cfg.syt.empty() ? cfg.k : std::stoi(cfg.syt);
        if (name == "psi") {
            auto [hook, syt] = psi_forward(t.shape(), cfg.k, x, {t, label});
            os << json{{"hook", print_grid(hook)}, {"syt", print_grid(syt)}}.dump(2)
               << "\n";
        } else {  // the involution is its own inverse on the conjugate side
            DropWitness w = drop_involution(t.shape(), cfg.k, x, {t, label});
            os << json{{"tabloid", print_grid(w.tabloid)}, {"label", w.label}}.dump(2)
               << "\n";
        }
        return 0;
    }
    if (name == "exchange") {
        if (apply) {
            Tabloid t = parse_tabloid(cfg.tabloid);
            int index = std::stoi(cfg.x);  // slot index
            BElement b = psi_exchange_forward(t.shape(), cfg.k, t, index);
            os << json{{"hook", print_grid(b.hook)},
                       {"syt", print_grid(b.syt)},
                       {"slot", b.slot}}
                      .dump(2)
               << "\n";
        } else {
            HookTableau hook = parse_hook_tableau(cfg.hook);
            Tabloid syt = parse_tabloid(cfg.syt);
            int slot = std::stoi(cfg.x);
            auto [t, i] = psi_exchange_inverse(hook.shape(), cfg.k, {hook, syt, slot});
            os << json{{"tabloid", print_grid(t)}, {"index", i}}.dump(2) << "\n";
        }
        return 0;
    }
    if (name == "pingpong") {
        Tabloid t = parse_tabloid(cfg.tabloid);
        Partition shape = t.shape();
        int index = std::stoi(cfg.x);
        int label = cfg.syt.empty() ? cfg.k : std::stoi(cfg.syt);
        ExchangeWitness start = [&] {
            const CellOrder order = CellOrder::column_major(shape);
            SortTrace trace = nps_sort(t, order);
            int idx = 0;
            for (const Exchange& e : trace.exchanges)
                if (e.smaller == cfg.k && ++idx == index)
                    return ExchangeWitness{t, e.larger, index};
            throw std::invalid_argument("tabloid has fewer exchanges of k than the index");
        }();
        std::vector<PingPongState> traj;
        auto [w, outLabel] = pingpong(shape, cfg.k, start, label, &traj);
        json steps = json::array();
        for (const PingPongState& s : traj) {
            json step{{"shape", print_partition(s.shape)}, {"label", s.label}};
            if (s.ex)
                step["exchange"] = {{"tabloid", print_grid(s.ex->tabloid)},
                                    {"partner", s.ex->partner},
                                    {"index", s.ex->index}};
            else
                step["b"] = {{"hook", print_grid(s.b->hook)},
                             {"syt", print_grid(s.b->syt)},
                             {"slot", s.b->slot}};
            steps.push_back(step);
        }
        os << json{{"tabloid", print_grid(w.tabloid)},
                   {"partner", w.partner},
                   {"index", w.index},
                   {"label", outLabel},
                   {"trajectory", steps}}
                  .dump(2)
           << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown bijection: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tableau-sorting toolkit: traces, hook-tableau encoding, exact "
                 "statistics, formula verification and constructive bijections"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("NPS_JOBS")) cfg.jobs = std::atoi(env);
    if (const char* env = std::getenv("NPS_OUT")) cfg.out = env;

    auto addCommon = [&](CLI::App* c) {
        c->add_option("--shape", cfg.shape, "partition, e.g. 4,4,3");
        c->add_option("--format", cfg.format, "human | json | csv")
            ->check(CLI::IsMember({"human", "json", "csv"}));
        c->add_option("--out", cfg.out, "write output to a file");
        c->add_option("--jobs", cfg.jobs, "worker threads for sweeps");
    };

    CLI::App* sort = app.add_subcommand("sort", "sort a tabloid, printing the trace");
    sort->add_option("--tabloid", cfg.tabloid, "grid, e.g. 2,1;3")->required();
    sort->add_option("--order-tableau", cfg.syt,
                     "standard tableau inducing the processing order");
    addCommon(sort);

    CLI::App* encode = app.add_subcommand("encode", "tabloid -> (hook tableau, SYT)");
    encode->add_option("--tabloid", cfg.tabloid)->required();
    addCommon(encode);

    CLI::App* decode = app.add_subcommand("decode", "(hook tableau, SYT) -> tabloid");
    decode->add_option("--hook", cfg.hook)->required();
    decode->add_option("--syt", cfg.syt)->required();
    addCommon(decode);

    CLI::App* stats = app.add_subcommand("stats", "statistic tables for one shape");
    stats->add_option("--shape", cfg.shape)->required();
    stats->add_option("--backend", cfg.backend, "oracle | formula | both")
        ->check(CLI::IsMember({"oracle", "formula", "both"}));
    stats->add_option("--comp2-variant", cfg.comp2, "full | truncated")
        ->check(CLI::IsMember({"full", "truncated"}));
    stats->add_option("--format", cfg.format)->check(CLI::IsMember({"human", "json", "csv"}));
    stats->add_option("--out", cfg.out);
    stats->add_option("--jobs", cfg.jobs);

    CLI::App* verifyCmd = app.add_subcommand("verify", "run all sweeps up to --max-n");
    verifyCmd->add_option("--max-n", cfg.max_n, "largest partition size");
    addCommon(verifyCmd);

    std::string kind;
    CLI::App* counter = app.add_subcommand("counterexample", "search for a witness");
    counter->add_option("--kind", kind, "local-conjugation | nonuniform-order")
        ->required()
        ->check(CLI::IsMember({"local-conjugation", "nonuniform-order"}));
    counter->add_option("--max-n", cfg.max_n);
    addCommon(counter);

    std::string bijName, direction = "apply";
    CLI::App* bij = app.add_subcommand("bijection", "apply or invert a bijection");
    bij->add_option("--name", bijName, "psi | drop-involution | exchange | pingpong")
        ->required()
        ->check(CLI::IsMember({"psi", "drop-involution", "exchange", "pingpong"}));
    bij->add_option("--direction", direction, "apply | invert")
        ->check(CLI::IsMember({"apply", "invert"}));
    bij->add_option("--tabloid", cfg.tabloid);
    bij->add_option("--hook", cfg.hook);
    bij->add_option("--syt", cfg.syt, "SYT grid, or label/auxiliary integer where noted");
    bij->add_option("--k", cfg.k, "the distinguished entry");
    bij->add_option("--x", cfg.x, "cell 'i,j', or index/slot for exchange/pingpong");
    addCommon(bij);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    try {
        if (sort->parsed()) return cmd_sort(cfg);
        if (encode->parsed()) return cmd_encode(cfg);
        if (decode->parsed()) return cmd_decode(cfg);
        if (stats->parsed()) return cmd_stats(cfg);
        if (verifyCmd->parsed()) return cmd_verify(cfg);
        if (counter->parsed()) return cmd_counterexample(kind, cfg);
        if (bij->parsed()) return cmd_bijection(bijName, direction, cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return 0;
}
