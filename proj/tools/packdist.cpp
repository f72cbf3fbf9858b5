// packdist — command-line front end: normalize, verify, construct, search,
// density, bound, export-dot, plus table-reproduction helpers.
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "packdist/bounds.hpp"
#include "packdist/constructions.hpp"
#include "packdist/core.hpp"
#include "packdist/verifier.hpp"

using nlohmann::json;
using namespace packdist;

namespace {

constexpr const char* kVersion = "packdist 1.0.0";

// exit codes: 0 success/Valid/SAT, 1 Invalid/UNSAT, 2 usage or input error,
// 3 budget exhausted
constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

struct RunLog {
    std::string path;
    json parameters = json::object();

    void write(const std::string& command, const std::string& outcome,
               double seconds) const {
        if (path.empty()) return;
        json rec{{"command", command},
                 {"parameters", parameters},
                 {"outcome", outcome},
                 {"seconds", seconds},
                 {"version", kVersion}};
        std::ofstream out(path, std::ios::app);
        out << rec.dump() << "\n";
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

BigRational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return {cpp_int(text), cpp_int(1)};
    return {cpp_int(text.substr(0, slash)), cpp_int(text.substr(slash + 1))};
}

std::string fraction_str(const BigRational& r) {
    std::ostringstream os;
    os << r.numerator() << "/" << r.denominator();
    return os.str();
}

double fraction_double(const BigRational& r) {
    using boost::multiprecision::cpp_rational;
    return static_cast<double>(cpp_rational(r.numerator(), r.denominator()));
}

std::map<int, int> parse_precoloring(const std::vector<std::string>& items) {
    std::map<int, int> pre;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--precolor expects V=C, got '" + item + "'");
        pre[std::stoi(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
    }
    return pre;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return "";
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int print_error(const std::string& kind, const std::string& message,
                const RunLog& log, const std::string& command, double seconds) {
    std::cout << "error kind=" << kind << " msg=\"" << message << "\"\n";
    log.write(command, "error:" + kind, seconds);
    return kExitUsage;
}

struct SearchArgs {
    int k = 0, t = 0, p = 0, c = 0;
    std::vector<std::string> precolor;
    std::string mode = "full";
    int jobs = 1;
    std::string checkpoint;
    long long max_nodes = 0;
    double max_seconds = 0.0;
};

int run_search_command(const SearchArgs& a, RunLog& log) {
    auto start = std::chrono::steady_clock::now();
    log.parameters = {{"k", a.k}, {"t", a.t}, {"p", a.p}, {"c", a.c},
                      {"mode", a.mode}, {"jobs", a.jobs}};
    try {
        SearchProblem problem{GraphSpec(a.k, a.t), a.p, a.c,
                              parse_precoloring(a.precolor),
                              a.mode == "induced" ? DistanceMode::Induced
                                                  : DistanceMode::FullGraph};
        std::string resume;
        if (!a.checkpoint.empty()) resume = read_text_file(a.checkpoint);
        SearchOutcome out = search_colorability(
            problem, {a.max_nodes, a.max_seconds}, a.jobs, resume);
        std::cout << "stats nodes=" << out.stats.nodes
                  << " max_depth=" << out.stats.max_depth
                  << " seconds=" << out.stats.seconds << "\n";
        switch (out.status) {
            case SearchStatus::Sat: {
                std::cout << "SAT witness=";
                for (std::size_t i = 0; i < out.witness->size(); ++i)
                    std::cout << (i ? "," : "") << (*out.witness)[i];
                std::cout << "\n";
                log.write("search", "SAT", seconds_since(start));
                return kExitValid;
            }
            case SearchStatus::Unsat:
                std::cout << "UNSAT\n";
                log.write("search", "UNSAT", seconds_since(start));
                return kExitInvalid;
            case SearchStatus::Timeout:
                std::cout << "TIMEOUT\n";
                if (!a.checkpoint.empty() && !out.checkpoint.empty()) {
                    std::ofstream cp(a.checkpoint);
                    cp << out.checkpoint;
                    std::cout << "checkpoint written to " << a.checkpoint << "\n";
                }
                log.write("search", "TIMEOUT", seconds_since(start));
                return kExitTimeout;
        }
    } catch (const std::exception& e) {
        return print_error("search", e.what(), log, "search", seconds_since(start));
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packing colorings of two-step integer distance graphs D(k,t)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    RunLog log;
    app.add_option("--log", log.path, "append a JSON-lines run record to FILE");

    int k = 0, t = 0;
    auto add_kt = [&](CLI::App* sub) {
        sub->add_option("--k", k, "smaller step")->required();
        sub->add_option("--t", t, "larger step")->required();
    };

    // normalize
    auto* cmd_norm = app.add_subcommand("normalize", "reduce (k,t) by gcd");
    add_kt(cmd_norm);

    // verify
    std::string pattern_path;
    auto* cmd_verify = app.add_subcommand("verify", "check a periodic coloring");
    add_kt(cmd_verify);
    cmd_verify->add_option("--pattern", pattern_path, "pattern file")->required();

    // construct
    std::string out_path;
    auto* cmd_construct =
        app.add_subcommand("construct", "build and verify an explicit coloring");
    add_kt(cmd_construct);
    cmd_construct->add_option("--out", out_path, "write the pattern file here");

    // search
    SearchArgs sa;
    auto* cmd_search =
        app.add_subcommand("search", "exhaustive window colorability search");
    cmd_search->add_option("--k", sa.k)->required();
    cmd_search->add_option("--t", sa.t)->required();
    cmd_search->add_option("--p", sa.p, "window size")->required();
    cmd_search->add_option("--c", sa.c, "max color")->required();
    cmd_search->add_option("--precolor", sa.precolor, "V=C, repeatable");
    cmd_search->add_option("--mode", sa.mode, "full|induced")
        ->check(CLI::IsMember({"full", "induced"}));
    cmd_search->add_option("--jobs", sa.jobs, "worker count");
    cmd_search->add_option("--checkpoint", sa.checkpoint, "resume/save file");
    cmd_search->add_option("--max-nodes", sa.max_nodes, "node budget");
    cmd_search->add_option("--max-seconds", sa.max_seconds, "time budget");

    // density
    int q = 0;
    long long w = 0;
    int jobs = 1;
    long long max_nodes = 0;
    double max_seconds = 0.0;
    std::string density_checkpoint;
    auto* cmd_density =
        app.add_subcommand("density", "max colorable vertices per window");
    add_kt(cmd_density);
    cmd_density->add_option("--q", q, "top color level")->required();
    cmd_density->add_option("--w", w, "window length")->required();
    cmd_density->add_option("--jobs", jobs, "worker count");
    cmd_density->add_option("--checkpoint", density_checkpoint, "resume/save file");
    cmd_density->add_option("--max-nodes", max_nodes, "node budget");
    cmd_density->add_option("--max-seconds", max_seconds, "time budget");

    // bound
    std::string b_text;
    long long alpha = 0;
    int imin = 0;
    bool fit = false;
    auto* cmd_bound =
        app.add_subcommand("bound", "density-method lower bound on chi_rho");
    add_kt(cmd_bound);
    cmd_bound->add_option("--q", q, "top color level")->required();
    cmd_bound->add_option("--b", b_text, "density bound NUM/DEN")->required();
    auto* opt_alpha = cmd_bound->add_option("--alpha", alpha, "window law constant");
    auto* opt_imin = cmd_bound->add_option("--imin", imin, "law valid from i");
    cmd_bound->add_flag("--fit", fit, "fit alpha from window sizes");
    opt_alpha->needs(opt_imin);

    // export-dot
    long long window = 0;
    auto* cmd_dot = app.add_subcommand("export-dot", "DOT of an induced window");
    add_kt(cmd_dot);
    cmd_dot->add_option("--window", window, "window size")->required();

    // repro
    std::string table;
    bool long_runs = false;
    auto* cmd_repro = app.add_subcommand("repro", "re-run published computations");
    cmd_repro->add_option("table", table, "table2|table3|table4-6")->required();
    cmd_repro->add_flag("--long", long_runs, "actually run the multi-hour rows");
    cmd_repro->add_option("--jobs", jobs, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    auto start = std::chrono::steady_clock::now();

    if (*cmd_norm) {
        log.parameters = {{"k", k}, {"t", t}};
        try {
            auto [spec, g] = normalize(GraphSpec(k, t));
            std::cout << "(" << spec.k << "," << spec.t << ") x" << g << "\n";
            log.write("normalize", "ok", seconds_since(start));
            return kExitValid;
        } catch (const std::exception& e) {
            return print_error("normalize", e.what(), log, "normalize",
                               seconds_since(start));
        }
    }

    if (*cmd_verify) {
        log.parameters = {{"k", k}, {"t", t}, {"pattern", pattern_path}};
        try {
            GraphSpec spec(k, t);
            PeriodicColoring coloring = read_pattern_file(pattern_path);
            VerifyResult res = verify(spec, coloring);
            if (res.valid()) {
                std::cout << "valid, max color " << coloring.max_color() << "\n";
                log.write("verify", "valid", seconds_since(start));
                return kExitValid;
            }
            const auto& v = *res.violation;
            std::cout << "violation color=" << v.color << " u=" << v.u
                      << " v=" << v.v << " d=" << v.distance << "\n";
            log.write("verify", "violation", seconds_since(start));
            return kExitInvalid;
        } catch (const std::exception& e) {
            return print_error("verify", e.what(), log, "verify",
                               seconds_since(start));
        }
    }

    if (*cmd_construct) {
        log.parameters = {{"k", k}, {"t", t}};
        try {
            GraphSpec spec(k, t);
            LayoutPlan plan = plan_layout(spec);
            PeriodicColoring coloring = assemble(plan);
            VerifyResult res = verify(spec, coloring);
            if (!out_path.empty()) write_pattern_file(out_path, coloring);
            if (res.valid()) {
                std::cout << "valid, max color " << coloring.max_color()
                          << " (period " << coloring.period() << ", layout "
                          << plan.theorem_id << ", r=" << plan.r
                          << ", s=" << plan.s << ")\n";
                log.write("construct", "valid", seconds_since(start));
                return kExitValid;
            }
            const auto& v = *res.violation;
            std::cout << "violation color=" << v.color << " u=" << v.u
                      << " v=" << v.v << " d=" << v.distance << "\n";
            log.write("construct", "violation", seconds_since(start));
            return kExitInvalid;
        } catch (const std::exception& e) {
            return print_error("construct", e.what(), log, "construct",
                               seconds_since(start));
        }
    }

    if (*cmd_search) {
        sa.jobs = std::max(sa.jobs, 1);
        return run_search_command(sa, log);
    }

    if (*cmd_density) {
        log.parameters = {{"k", k}, {"t", t}, {"q", q}, {"w", w}};
        try {
            std::string resume;
            if (!density_checkpoint.empty())
                resume = read_text_file(density_checkpoint);
            DensityBound b = density_window_bound(
                GraphSpec(k, t), q, w, {max_nodes, max_seconds}, jobs, resume);
            std::cout << "b = " << b.count_max << "/" << b.window << "\n";
            log.write("density", "ok", seconds_since(start));
            return kExitValid;
        } catch (const BudgetExceeded& e) {
            std::cout << "TIMEOUT\n";
            if (!density_checkpoint.empty()) {
                std::ofstream cp(density_checkpoint);
                cp << e.checkpoint;
                std::cout << "checkpoint written to " << density_checkpoint << "\n";
            }
            log.write("density", "TIMEOUT", seconds_since(start));
            return kExitTimeout;
        } catch (const std::exception& e) {
            return print_error("density", e.what(), log, "density",
                               seconds_since(start));
        }
    }

    if (*cmd_bound) {
        log.parameters = {{"k", k}, {"t", t}, {"q", q}, {"b", b_text}};
        try {
            GraphSpec spec(k, t);
            BigRational b = parse_fraction(b_text);
            AlphaRule rule{spec, alpha, imin};
            if (fit)
                rule = fit_alpha(spec, q + 1, q + 9);
            else if (opt_alpha->count() == 0)
                throw std::invalid_argument("provide --alpha/--imin or --fit");
            auto bound = density_lower_bound(spec, q, b, rule);
            if (!bound) {
                std::cout << "no bound (density already >= 1)\n";
                log.write("bound", "no-bound", seconds_since(start));
                return kExitInvalid;
            }
            BigRational sum =
                density_partial_sum(spec, q, b, rule, *bound - 1);
            std::cout << "chi_rho >= " << *bound << " (alpha=" << rule.alpha
                      << ", partial sum " << fraction_str(sum) << " ~ "
                      << std::setprecision(8) << fraction_double(sum)
                      << " < 1)\n";
            log.write("bound", "ok", seconds_since(start));
            return kExitValid;
        } catch (const std::exception& e) {
            return print_error("bound", e.what(), log, "bound",
                               seconds_since(start));
        }
    }

    if (*cmd_dot) {
        log.parameters = {{"k", k}, {"t", t}, {"window", window}};
        try {
            GraphSpec spec(k, t);
            std::cout << "graph D_" << window << "_" << spec.k << "_" << spec.t
                      << " {\n";
            for (long long v = 1; v <= window; ++v)
                std::cout << "  v" << v << ";\n";
            for (long long u = 1; u <= window; ++u)
                for (long long step : {(long long)spec.k, (long long)spec.t})
                    if (u + step <= window)
                        std::cout << "  v" << u << " -- v" << (u + step) << ";\n";
            std::cout << "}\n";
            log.write("export-dot", "ok", seconds_since(start));
            return kExitValid;
        } catch (const std::exception& e) {
            return print_error("export-dot", e.what(), log, "export-dot",
                               seconds_since(start));
        }
    }

    if (*cmd_repro) {
        log.parameters = {{"table", table}, {"long", long_runs}};
        if (table == "table3") {
            // density rows: (k,t,q,w,expected)
            struct Row { int k, t, q; long long w; const char* expect; };
            const Row rows[] = {{2, 7, 4, 41, "32/41"}, {2, 7, 5, 45, "37/45"}};
            for (const auto& row : rows) {
                DensityBound b =
                    density_window_bound(GraphSpec(row.k, row.t), row.q, row.w);
                std::cout << "D(" << row.k << "," << row.t << ") q=" << row.q
                          << " w=" << row.w << " -> " << b.count_max << "/"
                          << b.window << " (expected " << row.expect << ")\n";
            }
            log.write("repro", "ok", seconds_since(start));
            return kExitValid;
        }
        if (table == "table2") {
            struct Row { int k, t, c, p; const char* note; };
            const Row rows[] = {
                {4, 5, 12, 37, "hours"},
                {3, 5, 12, 106, "hours"},
                {2, 3, 12, 213, "days"},
                {2, 5, 12, 761, "weeks"},
            };
            if (!long_runs) {
                std::cout << "these runs take " << rows[0].note
                          << " to weeks; pass --long to execute:\n";
                for (const auto& row : rows)
                    std::cout << "  search --k " << row.k << " --t " << row.t
                              << " --p " << row.p << " --c " << row.c
                              << " --precolor 1=" << row.c
                              << "  (expected UNSAT, ~" << row.note << ")\n";
                log.write("repro", "skipped", seconds_since(start));
                return kExitValid;
            }
            for (const auto& row : rows) {
                SearchProblem problem{GraphSpec(row.k, row.t), row.p, row.c,
                                      {{1, row.c}}, DistanceMode::FullGraph};
                SearchOutcome out = search_colorability(problem, {}, jobs);
                std::cout << "D(" << row.k << "," << row.t << ") p=" << row.p
                          << " c=" << row.c << " -> "
                          << (out.status == SearchStatus::Unsat ? "UNSAT" : "SAT")
                          << " nodes=" << out.stats.nodes
                          << " seconds=" << out.stats.seconds << "\n";
            }
            log.write("repro", "ok", seconds_since(start));
            return kExitValid;
        }
        if (table == "table4-6") {
            for (auto [rk, rt] : {std::pair{1, 25}, {23, 25}, {24, 25}, {1, 98}}) {
                GraphSpec spec(rk, rt);
                PeriodicColoring coloring = assemble(plan_layout(spec));
                VerifyResult res = verify(spec, coloring);
                std::cout << "D(" << rk << "," << rt << ") -> "
                          << (res.valid() ? "valid" : "INVALID") << ", max color "
                          << coloring.max_color() << "\n";
                if (!res.valid()) return kExitInvalid;
            }
            log.write("repro", "ok", seconds_since(start));
            return kExitValid;
        }
        std::cout << "error kind=repro msg=\"unknown table '" << table << "'\"\n";
        return kExitUsage;
    }

    return kExitUsage;
}
