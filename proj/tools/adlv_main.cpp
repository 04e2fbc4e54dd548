#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "adlv/census.hpp"
#include "adlv/counting.hpp"
#include "adlv/verify.hpp"

namespace {

using namespace adlv;

struct RunConfig {
    uint32_t q = 2;
    uint32_t n = 1;
    int R = 3;
    std::string bname = "identity";
    int alpha = 1;
    int wmin = 0, wmax = 0;
    bool wrange_set = false;
    bool q_set = false, n_set = false, r_set = false;
    std::string format = "text";
    uint64_t seed = 20240915;
    int precision = 0; // 0 -> derived
    bool members = false;
    int dot_index = 0;
};

BCase parse_case(const std::string& name, int alpha) {
    if (name == "identity") return BCase::identity();
    if (name == "diagonal") return BCase::diagonal(alpha);
    if (name == "supersingular") return BCase::supersingular();
    throw ConfigError("unknown b case: " + name);
}

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int def = static_cast<int>(hw ? (hw > 8 ? 8 : hw) : 1);
    if (const char* env = std::getenv("ADLV_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < def) def = cap;
        if (cap >= 1 && def < 1) def = cap;
    }
    return def < 1 ? 1 : def;
}

int derived_precision(const RunConfig& cfg) {
    int p = 2 * cfg.R + cfg.alpha + 6;
    if (cfg.precision == 0) return p;
    if (cfg.precision < p) throw ConfigError("precision must be at least 2R + alpha + 6");
    return cfg.precision;
}

void validate(const RunConfig& cfg, bool verify_mode) {
    if (cfg.R < 0 || cfg.R > 8) throw ConfigError("R must lie in [0, 8]");
    if (verify_mode && cfg.q > 5) throw ConfigError("verify mode supports q <= 5");
    if (cfg.n < 1 || cfg.n > 4) throw ConfigError("level n must lie in [1, 4]");
}

int cmd_enumerate(const RunConfig& cfg) {
    validate(cfg, false);
    BCase b = parse_case(cfg.bname, cfg.alpha);
    FieldCtx F = FieldCtx::for_q(cfg.q, cfg.n);
    double est = 2.2 * std::pow(static_cast<double>(F.size()), cfg.R);
    if (est > 2e8)
        throw ConfigError("window of " + std::to_string(static_cast<long long>(est)) +
                          " alcoves is too large; reduce R or the level");
    Tree T(F, derived_precision(cfg));
    int wmax = cfg.wrange_set ? cfg.wmax : cfg.R;
    int wmin = cfg.wrange_set ? cfg.wmin : -cfg.R;
    SweepResult sr = sweep(T, b, cfg.R, std::max(std::abs(wmin), std::abs(wmax)));

    if (cfg.format == "json") {
        std::cout << census_record(T, b, sr, wmin, wmax, cfg.members).dump(2) << "\n";
        return 0;
    }
    if (cfg.format == "csv") {
        std::cout << "index,size,predicted,match\n";
        nlohmann::json rec = census_record(T, b, sr, wmin, wmax, false);
        for (const auto& bk : rec["buckets"])
            std::cout << bk["index"] << "," << bk["size"] << "," << bk["predicted"] << ","
                      << (bk["match"].get<bool>() ? "yes" : "no") << "\n";
        return 0;
    }
    if (cfg.format == "dot") {
        std::vector<Alcove> highlight = brute_force_adlv(T, b, WeylElt{cfg.dot_index}, cfg.R);
        std::cout << T.dot_ball(cfg.R, highlight);
        return 0;
    }
    // text
    std::cout << "X_w(" << b.name() << ")  q=" << cfg.q << " n=" << cfg.n << " R=" << cfg.R
              << "  (window: " << sr.total << " alcoves)\n";
    for (int idx = wmin; idx <= wmax; ++idx) {
        unsigned long long predicted = 0;
        if (nonempty(b, WeylElt{idx})) {
            StructuralPrediction pred = structural_sets(T, b, WeylElt{idx}, cfg.R);
            if (pred.degenerate) predicted = pred.points.size();
            else
                for (const DepartureSet& s : pred.sets) predicted += member_count(T, s);
        }
        std::cout << "  w=" << (idx >= 0 ? "+" : "") << idx << "  size=" << sr.size_of(idx)
                  << "  predicted=" << predicted
                  << (predicted == sr.size_of(idx) ? "" : "  MISMATCH") << "\n";
        if (cfg.members) {
            std::vector<Alcove> mem;
            auto dit = sr.degenerate.find(idx);
            if (dit != sr.degenerate.end()) mem.insert(mem.end(), dit->second.begin(), dit->second.end());
            auto mit = sr.members.find(idx);
            if (mit != sr.members.end())
                for (const auto& kv : mit->second)
                    mem.insert(mem.end(), kv.second.begin(), kv.second.end());
            std::sort(mem.begin(), mem.end(), alcove_less);
            for (const Alcove& A : mem) std::cout << "      " << T.alcove_str(A) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& fault,
               const std::string& fixture_path) {
    validate(cfg, true);
    // default grid: q in {2,3}, n in {1,2}, R = 6; flags narrow it
    GridSpec grid;
    if (cfg.q_set) grid.qs = {cfg.q};
    if (cfg.n_set) grid.ns = cfg.n == 1 ? std::vector<uint32_t>{1} : std::vector<uint32_t>{1, cfg.n};
    if (cfg.r_set) grid.R = cfg.R;
    grid.wmax = grid.R;
    grid.seed = cfg.seed;
    grid.threads = thread_budget();
    grid.fault = fault == "m-parity" ? FaultInjection::FlipDepartureParity : FaultInjection::None;

    std::vector<CheckResult> checks;
    std::vector<ShadowRow> shadows;
    if (suite == "all" || suite == "sweep") {
        auto r = run_sweep_checks(grid);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "all" || suite == "building") {
        auto r = run_distance_checks();
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "all" || suite == "charts") {
        auto r = run_chart_checks(cfg.seed);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "all" || suite == "finrep") {
        auto r = run_finrep_checks(grid.qs, cfg.seed, &shadows);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "all" || suite == "stabilizers") {
        for (uint32_t q : grid.qs) {
            auto r = run_stabilizer_checks(q, 200, cfg.seed);
            checks.insert(checks.end(), r.begin(), r.end());
        }
    }
    if (suite == "all" || suite == "series") {
        auto r = run_series_checks(cfg.seed);
        checks.insert(checks.end(), r.begin(), r.end());
    }
    if (suite == "table" || (suite == "all" && !fixture_path.empty())) {
        std::ifstream in(fixture_path);
        if (!in) throw ConfigError("cannot open fixture " + fixture_path);
        std::string fixture((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        checks.push_back(run_table_check(fixture));
    }
    if (checks.empty()) throw ConfigError("unknown suite: " + suite);

    if (cfg.format == "csv") {
        std::cout << "check,pass,detail\n";
        for (const CheckResult& c : checks)
            std::cout << "\"" << c.name << "\"," << (c.pass ? "yes" : "no") << ",\"" << c.detail
                      << "\"\n";
        if (!shadows.empty()) {
            std::cout << "q,source,target,unramified,finite_dim,theorem_dim\n";
            for (const ShadowRow& s : shadows)
                std::cout << s.q << "," << s.source << "," << s.target << ","
                          << (s.unramified ? "yes" : "no") << "," << s.finite_dim << ","
                          << s.theorem_dim << "\n";
        }
        return all_pass(checks) ? 0 : 1;
    }
    if (cfg.format == "json") {
        nlohmann::json rep;
        rep["q"] = grid.qs;
        rep["n"] = grid.ns;
        rep["R"] = grid.R;
        rep["seed"] = cfg.seed;
        rep["suite"] = suite;
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckResult& c : checks)
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        rep["checks"] = arr;
        if (!shadows.empty()) {
            nlohmann::json sh = nlohmann::json::array();
            for (const ShadowRow& s : shadows)
                sh.push_back({{"q", s.q},
                              {"source", s.source},
                              {"target", s.target},
                              {"unramified", s.unramified},
                              {"finite_dim", s.finite_dim},
                              {"theorem_dim", s.theorem_dim}});
            rep["shadows"] = sh;
        }
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const CheckResult& c : checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        if (!shadows.empty()) {
            std::cout << "Hom shadows (finite dim vs theorem clause):\n";
            for (const ShadowRow& s : shadows)
                std::cout << "  q=" << s.q << " " << s.source << " -> " << s.target << " "
                          << (s.unramified ? "unramified" : "ramified") << ": " << s.finite_dim
                          << " vs " << s.theorem_dim << "\n";
        }
    }
    return all_pass(checks) ? 0 : 1;
}

int cmd_table(const std::string& format) {
    if (format == "csv") std::cout << table1_csv();
    else std::cout << table1_text();
    return 0;
}

int cmd_profile(const RunConfig& cfg) {
    validate(cfg, false);
    BCase b = parse_case(cfg.bname, cfg.alpha);
    int wmin = cfg.wrange_set ? cfg.wmin : -cfg.R;
    int wmax = cfg.wrange_set ? cfg.wmax : cfg.R;
    nlohmann::json out = nlohmann::json::array();
    for (int idx = wmin; idx <= wmax; ++idx) {
        WeylElt w{idx};
        nlohmann::json row;
        row["b"] = b.name();
        row["index"] = idx;
        row["nonempty"] = nonempty(b, w);
        if (nonempty(b, w)) {
            CohomProfile p = cohom_profile(b, w, cfg.q);
            nlohmann::json entries = nlohmann::json::array();
            for (const CohomEntry& e : p.entries)
                entries.push_back({{"degree", e.degree},
                                   {"dim", e.dim_per_component},
                                   {"twist", e.twist},
                                   {"inducing", inducing_tag_name(e.tag)}});
            row["entries"] = entries;
            nlohmann::json counts;
            for (uint32_t m = 1; m <= 2; ++m)
                counts[std::to_string(m)] = component_point_count(b, w, cfg.q, m);
            row["component_points"] = counts;
        }
        out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bruhat-Tits tree of SL_2 over F_q((t)) and affine Deligne-Lusztig sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_case) {
        sub->add_option("--q", cfg.q, "residue field size (prime power)")
            ->each([&](const std::string&) { cfg.q_set = true; });
        sub->add_option("--n", cfg.n, "working level: coefficients in F_{q^n}")
            ->each([&](const std::string&) { cfg.n_set = true; });
        sub->add_option("--R", cfg.R, "alcove window radius")
            ->each([&](const std::string&) { cfg.r_set = true; });
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
        sub->add_option("--precision", cfg.precision, "series precision override");
        auto* wmin = sub->add_option("--w-min", cfg.wmin, "lowest Weyl index");
        auto* wmax = sub->add_option("--w-max", cfg.wmax, "highest Weyl index");
        wmin->each([&](const std::string&) { cfg.wrange_set = true; });
        wmax->each([&](const std::string&) { cfg.wrange_set = true; });
        if (with_case) {
            sub->add_option("--b", cfg.bname, "case: identity|diagonal|supersingular");
            sub->add_option("--alpha", cfg.alpha, "diagonal parameter");
        }
    };

    auto* en = app.add_subcommand("enumerate", "bucket the alcove window by relative position");
    add_common(en, true);
    en->add_option("--format", cfg.format, "text|json|csv|dot");
    en->add_flag("--members", cfg.members, "list bucket members");
    en->add_option("--w", cfg.dot_index, "bucket highlighted in dot output");

    std::string suite = "all", fault = "none", fixture;
    auto* ve = app.add_subcommand("verify", "run the verification suites");
    add_common(ve, false);
    ve->add_option("--format", cfg.format, "text|json");
    ve->add_option("--suite", suite, "all|sweep|building|charts|finrep|stabilizers|series|table");
    ve->add_option("--inject-fault", fault, "none|m-parity (harness sanity)");
    ve->add_option("--fixture", fixture, "path to the committed Table-1 fixture");

    std::string tformat = "text";
    auto* ta = app.add_subcommand("table", "print the three-case summary table");
    ta->add_option("--format", tformat, "text|csv");

    auto* pr = app.add_subcommand("profile", "cohomology profiles and component point counts");
    add_common(pr, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (en->parsed()) return cmd_enumerate(cfg);
        if (ve->parsed()) return cmd_verify(cfg, suite, fault, fixture);
        if (ta->parsed()) return cmd_table(tformat);
        if (pr->parsed()) return cmd_profile(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << " (q=" << cfg.q << " n=" << cfg.n
                  << " R=" << cfg.R << " precision=" << cfg.precision << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
