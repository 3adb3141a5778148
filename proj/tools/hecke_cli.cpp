// hecke_cli: verdicts for the Hecke lifting congruence on torus knots.
//
//   hecke_cli verify --d 2 --m 3 --p 3 [--alexander] [--lmov] [--lemmas]
//   hecke_cli sweep [--sweep-config grid.json] [--workers 4] [--out report.json]
//   hecke_cli cache build --n 15 | cache stat | cache clear
//
// Exit codes: 0 pass, 1 fail, 2 error, 64 usage.

#include "hecke.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::optional<hecke::CharTableCache> resolve_cache(const std::string& flag) {
    if (!flag.empty()) return hecke::CharTableCache(flag);
    if (auto env = hecke::CharTableCache::from_environment()) return hecke::CharTableCache(*env);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke lifting verdicts for torus knots"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "character table cache (default: $HECKE_CACHE_DIR)");

    int d = 0, m = 0, p = 0, degree = 3, hook_weight = 3, workers = 0;
    std::uint64_t seed = 1;
    std::string out_path, format = "json", config_path;
    bool lemmas = false, alexander = false, lmov = false, no_numeric = false, no_timing = false;

    auto* verify = app.add_subcommand("verify", "check one (d, m, p) case");
    verify->add_option("--d", d, "strands")->required();
    verify->add_option("--m", m, "twists")->required();
    verify->add_option("--p", p, "modulus index")->required();
    verify->add_option("--degree", degree, "LMOV truncation degree");
    verify->add_option("--hook-weight", hook_weight, "largest hook weight for the colored Alexander check");

    auto* sweep = app.add_subcommand("sweep", "run a grid of cases");
    sweep->add_option("--sweep-config", config_path, "JSON sweep configuration");
    sweep->add_option("--workers", workers, "worker threads");
    auto* degree_opt = sweep->add_option("--degree", degree, "LMOV truncation degree");
    auto* seed_opt = sweep->add_option("--seed", seed, "seed for numeric sample points");

    for (auto* sub : {verify, sweep}) {
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--lemmas", lemmas, "append lemma division checks");
        sub->add_flag("--alexander", alexander, "append limit and colored Alexander checks");
        sub->add_flag("--lmov", lmov, "append LMOV integrality verdicts");
        sub->add_flag("--no-numeric", no_numeric, "skip the floating-point double-root oracle");
        sub->add_flag("--no-timing", no_timing, "omit timing fields");
    }
    verify->add_option("--seed", seed, "seed for numeric sample points");

    auto* cache = app.add_subcommand("cache", "manage the character table cache");
    cache->require_subcommand(1);
    int cache_n = 15;
    auto* cache_build = cache->add_subcommand("build", "compute tables for weights 1..n");
    cache_build->add_option("--n", cache_n, "largest weight");
    auto* cache_clear = cache->add_subcommand("clear", "remove cached tables");
    auto* cache_stat = cache->add_subcommand("stat", "list cached weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        auto store = resolve_cache(cache_dir);

        if (cache->parsed()) {
            if (!store) throw UsageError("cache: set --cache-dir or HECKE_CACHE_DIR");
            if (cache_build->parsed()) {
                if (cache_n < 1) throw UsageError("cache build: --n must be positive");
                auto stats = store->build(cache_n);
                std::cout << "built " << stats.built << ", reused " << stats.reused << " in " << store->dir().string()
                          << "\n";
            } else if (cache_clear->parsed()) {
                std::cout << "removed " << store->clear() << " files from " << store->dir().string() << "\n";
            } else if (cache_stat->parsed()) {
                auto weights = store->stat();
                std::cout << weights.size() << " entries";
                if (!weights.empty()) std::cout << ": weights " << weights.front() << ".." << weights.back();
                std::cout << "\n";
            }
            return kPass;
        }

        if (store) store->install();

        if (verify->parsed()) {
            if (d < 1 || m < 1 || p < 1) throw UsageError("verify: --d, --m, --p must be positive");
            if (std::gcd(d, m) != 1) throw UsageError("verify: gcd(d, m) must be 1");
            if (degree < 1) throw UsageError("verify: --degree must be positive");
            hecke::TorusKnot T(d, m);
            hecke::CaseOptions opt{alexander, lmov, !no_numeric, degree, hook_weight, seed};
            auto report = hecke::run_case(T, p, opt);
            bool ok = report.pass();
            if (format == "csv") {
                write_output(out_path, hecke::csv_header() + hecke::csv_row(report));
            } else {
                auto j = hecke::to_json(report, !no_timing);
                if (lemmas) {
                    hecke::SweepConfig c;
                    c.primes = {p};
                    c.d_min = c.d_max = d;
                    c.m_min = c.m_max = m;
                    c.max_pd = p * d;
                    int failures = 0;
                    j["lemmas"] = hecke::lemma_suite_json(c, failures);
                    ok = ok && failures == 0;
                }
                write_output(out_path, j.dump(2) + "\n");
            }
            if (report.error()) return kError;
            return ok ? kPass : kFail;
        }

        if (sweep->parsed()) {
            hecke::SweepConfig c;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw std::runtime_error("cannot open " + config_path);
                try {
                    c = hecke::sweep_config_from_json(hecke::json::parse(in));
                } catch (const std::invalid_argument& e) {
                    throw UsageError(std::string("sweep config: ") + e.what());
                } catch (const nlohmann::json::exception& e) {
                    throw UsageError(std::string("sweep config: ") + e.what());
                }
            }
            if (workers > 0) c.workers = workers;
            if (!degree_opt->empty()) c.degree = degree;
            if (!seed_opt->empty()) c.seed = seed;
            c.lemmas = c.lemmas || lemmas;
            c.alexander = c.alexander || alexander;
            c.lmov = c.lmov || lmov;
            if (no_numeric) c.numeric = false;

            auto result = hecke::run_sweep(c);
            const std::string json_text = hecke::to_json(result, c, !no_timing).dump(2) + "\n";
            const std::string csv_text = hecke::to_csv(result);
            if (!c.out_json.empty()) write_output(c.out_json, json_text);
            if (!c.out_csv.empty()) write_output(c.out_csv, csv_text);
            if (!out_path.empty() || (c.out_json.empty() && c.out_csv.empty()))
                write_output(out_path, format == "csv" ? csv_text : json_text);

            std::cerr << result.cases.size() << " cases, " << result.prime_failures() << " prime failures, "
                      << result.errors() << " errors";
            if (c.lemmas) std::cerr << ", " << result.lemma_failures << " lemma failures";
            std::cerr << "\n";
            return (result.prime_failures() == 0 && result.lemma_failures == 0) ? kPass : kFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kUsage;
}
