#pragma once

// JSON and CSV forms of verdicts, and the sweep driver.

#include "hecke/alexlimit.hpp"
#include "hecke/hecke.hpp"
#include "hecke/lmov.hpp"
#include "hecke/numeric.hpp"
#include "hecke/torus.hpp"
#include "hecke/zbasis.hpp"

#include "json.hpp"

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace hecke {

using json = nlohmann::ordered_json;

inline const char* pass_fail(bool b) { return b ? "pass" : "fail"; }

// ZAPoly: {"a_exp": ["c0", "c1", ...]} with exact rational strings.

inline json to_json(const ZAPoly& z) {
    json j = json::object();
    for (const auto& [a, cs] : z.slices()) {
        json row = json::array();
        for (const auto& c : cs) row.push_back(to_string(c));
        j[std::to_string(a)] = std::move(row);
    }
    return j;
}

inline ZAPoly zapoly_from_json(const json& j) {
    std::map<int, ZAPoly::Coeffs> slices;
    for (const auto& [key, row] : j.items()) {
        ZAPoly::Coeffs cs;
        for (const auto& c : row) cs.push_back(parse_rational(c.get<std::string>()));
        slices.emplace(std::stoi(key), std::move(cs));
    }
    return ZAPoly(std::move(slices));
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : json(nullptr);
}

inline json to_json(const CongruenceReport& r, bool with_timing = true) {
    json j;
    j["d"] = r.d;
    j["m"] = r.m;
    j["framing"] = r.framing;
    j["p"] = r.p;
    j["p_prime"] = r.p_prime;
    j["verdict"] = !r.error.empty() ? "ERROR" : (r.pass() ? "PASS" : "FAIL");
    j["a_factor"] = pass_fail(r.a_factor);
    j["z2_member"] = pass_fail(r.z2_member);
    j["p2_divisible"] = pass_fail(r.p2_divisible);
    j["quotient"] = optional_json(r.quotient);
    j["remainder_witness"] = optional_json(r.remainder_witness);
    j["identity_gp_eq_p2F"] = r.identity_gp_eq_p2F ? pass_fail(*r.identity_gp_eq_p2F) : "n/a";
    j["strong_p2_divisible"] = pass_fail(r.strong_p2_divisible);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["millis"] = r.millis;
    return j;
}

inline json to_json(const LmovVerdict& v) {
    json j;
    j["mu"] = v.mu.to_string();
    j["pass"] = v.pass;
    j["z2_fhat"] = optional_json(v.z2_fhat);
    j["min_z2_degree"] = v.min_z2_degree;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

// Sweep configuration

struct SweepConfig {
    std::vector<int> primes{2, 3, 5};
    std::vector<int> composites;
    int d_min = 1, d_max = 3;
    int m_min = 1, m_max = 7;
    int max_pd = 15;
    bool lemmas = false;
    bool alexander = false;
    bool lmov = false;
    bool numeric = true;
    int degree = 3;       // LMOV truncation
    int hook_weight = 3;  // largest hook checked
    int workers = 1;
    std::uint64_t seed = 1;
    std::string out_json;
    std::string out_csv;

    bool operator==(const SweepConfig&) const = default;

    struct Case {
        int d, m, p;
    };

    /// Cases in canonical order (p ascending, then d, then m); coprime pairs only.
    std::vector<Case> cases() const {
        std::set<int> ps(primes.begin(), primes.end());
        ps.insert(composites.begin(), composites.end());
        std::vector<Case> out;
        for (int p : ps)
            for (int d = std::max(1, d_min); d <= d_max; ++d)
                for (int m = std::max(1, m_min); m <= m_max; ++m)
                    if (std::gcd(d, m) == 1 && p * d <= max_pd) out.push_back({d, m, p});
        return out;
    }
};

inline json to_json(const SweepConfig& c) {
    json j;
    j["primes"] = c.primes;
    j["composites"] = c.composites;
    j["d_min"] = c.d_min;
    j["d_max"] = c.d_max;
    j["m_min"] = c.m_min;
    j["m_max"] = c.m_max;
    j["max_pd"] = c.max_pd;
    j["lemmas"] = c.lemmas;
    j["alexander"] = c.alexander;
    j["lmov"] = c.lmov;
    j["numeric"] = c.numeric;
    j["degree"] = c.degree;
    j["hook_weight"] = c.hook_weight;
    j["workers"] = c.workers;
    j["seed"] = c.seed;
    j["out_json"] = c.out_json;
    j["out_csv"] = c.out_csv;
    return j;
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline SweepConfig sweep_config_from_json(const json& j) {
    SweepConfig c;
    static const std::set<std::string> known{"primes",  "composites", "d_min",   "d_max",       "m_min",   "m_max",
                                             "max_pd",  "lemmas",     "alexander", "lmov",      "numeric", "degree",
                                             "hook_weight", "workers", "seed",     "out_json",  "out_csv"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw std::invalid_argument("unknown sweep config key: " + key);
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    get("primes", c.primes);
    get("composites", c.composites);
    get("d_min", c.d_min);
    get("d_max", c.d_max);
    get("m_min", c.m_min);
    get("m_max", c.m_max);
    get("max_pd", c.max_pd);
    get("lemmas", c.lemmas);
    get("alexander", c.alexander);
    get("lmov", c.lmov);
    get("numeric", c.numeric);
    get("degree", c.degree);
    get("hook_weight", c.hook_weight);
    get("workers", c.workers);
    get("seed", c.seed);
    get("out_json", c.out_json);
    get("out_csv", c.out_csv);
    if (c.workers < 1) throw std::invalid_argument("workers must be positive");
    if (c.degree < 1) throw std::invalid_argument("degree must be positive");
    for (int p : c.primes)
        if (p < 1) throw std::invalid_argument("p must be positive");
    for (int p : c.composites)
        if (p < 1) throw std::invalid_argument("p must be positive");
    return c;
}

// Per-case evaluation

struct CaseOptions {
    bool alexander = false;
    bool lmov = false;
    bool numeric = true;
    int degree = 3;
    int hook_weight = 3;
    std::uint64_t seed = 1;
};

struct CaseReport {
    CongruenceReport hecke;
    std::optional<DoubleRootCheck> numeric;
    std::optional<json> alexander;
    std::optional<json> lmov;

    /// PASS requires the numeric oracle to agree with a symbolic PASS.
    bool pass() const { return hecke.pass() && (!numeric || numeric->pass); }
    bool error() const { return !hecke.error.empty(); }
};

inline std::uint64_t case_seed(std::uint64_t seed, int d, int m, int p) {
    std::uint64_t h = seed ^ 0x9E3779B97F4A7C15ULL;
    for (int v : {d, m, p}) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
    return h;
}

inline json alexander_json(const TorusKnot& T, int p, int hook_weight) {
    json j;
    try {
        auto li = limit_identity_check(T, p);
        j["limit_identity"] = pass_fail(li.equal);
        if (!li.equal) {
            j["limit_lhs"] = li.lhs.to_string();
            j["limit_rhs"] = li.rhs.to_string();
        }
    } catch (const std::exception& e) {
        j["limit_identity"] = "fail";
        j["limit_error"] = e.what();
    }
    j["thm13"] = pass_fail(theorem13_verdict(T, p));
    json hooks = json::array();
    for (int w = 1; w <= hook_weight; ++w)
        for (const auto& h : hooks_of(w)) {
            json e;
            e["hook"] = h.to_partition().to_string();
            try {
                e["pass"] = verify_thm41_hooks(T, h).pass;
            } catch (const std::exception& ex) {
                e["pass"] = false;
                e["error"] = ex.what();
            }
            hooks.push_back(std::move(e));
        }
    j["thm41_hooks"] = std::move(hooks);
    return j;
}

inline json lmov_json(const TorusKnot& T, int degree) {
    json arr = json::array();
    for (const auto& v : lmov_verdicts(T, degree)) arr.push_back(to_json(v));
    return arr;
}

inline CaseReport run_case(const TorusKnot& T, int p, const CaseOptions& opt) {
    CaseReport r;
    r.hecke = verify_hecke(T, p);
    const auto start = std::chrono::steady_clock::now();
    if (opt.numeric && r.hecke.pass() && p > 1)
        r.numeric = numeric_double_root(g_p(T, p), p, case_seed(opt.seed, T.d(), T.m(), p));
    if (opt.alexander) r.alexander = alexander_json(T, p, opt.hook_weight);
    if (opt.lmov) r.lmov = lmov_json(T, opt.degree);
    r.hecke.millis +=
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline json to_json(const CaseReport& r, bool with_timing = true) {
    json j = to_json(r.hecke, with_timing);
    if (r.numeric) {
        j["numeric_double_root"] = pass_fail(r.numeric->pass);
        if (!r.pass() && r.hecke.pass()) j["verdict"] = "FAIL";
    }
    if (r.alexander) j["alexander"] = *r.alexander;
    if (r.lmov) j["lmov"] = *r.lmov;
    return j;
}

// Lemma suites

inline json lemma_suite_json(const SweepConfig& c, int& failures) {
    json arr = json::array();
    auto record = [&](const char* kind, int p, int d, int m, const Partition& part, const LemmaResult& r) {
        json e;
        e["kind"] = kind;
        e["p"] = p;
        e["d"] = d;
        e["m"] = m;
        e["partition"] = part.to_string();
        e["pass"] = r.pass();
        if (r.value) e["value"] = to_json(*r.value);
        if (!r.pass()) ++failures;
        arr.push_back(std::move(e));
    };
    std::set<int> ps(c.primes.begin(), c.primes.end());
    for (int p : ps)
        for (int d = std::max(1, c.d_min); d <= c.d_max; ++d)
            for (int m = std::max(1, c.m_min); m <= c.m_max; ++m) {
                if (std::gcd(d, m) != 1 || p * d > c.max_pd) continue;
                for (const auto& nu : partitions_of(d)) record("lemma32", p, d, m, nu, lemma32_check(p, m, nu, d));
                for (const auto& mu : partitions_of(p * d))
                    if (!partition_utils(mu, p).all_parts_divisible)
                        record("lemma33", p, d, m, mu, lemma33_check(p, m, mu));
                json e;
                e["kind"] = "sum_split";
                e["p"] = p;
                e["d"] = d;
                e["m"] = m;
                bool ok = sum_split_identity(p, d, m);
                e["pass"] = ok;
                if (!ok) ++failures;
                arr.push_back(std::move(e));
            }
    return arr;
}

// Sweep

struct SweepResult {
    std::vector<SweepConfig::Case> cases;
    std::vector<CaseReport> reports;  // aligned with cases
    json lemmas;                      // null unless requested
    int lemma_failures = 0;

    int prime_failures() const {
        int n = 0;
        for (std::size_t i = 0; i < reports.size(); ++i)
            if (is_prime(cases[i].p) && !reports[i].pass()) ++n;
        return n;
    }
    int errors() const {
        int n = 0;
        for (const auto& r : reports)
            if (r.error()) ++n;
        return n;
    }
};

/// Runs every case on a pool of c.workers threads; the result order is the canonical case order.
inline SweepResult run_sweep(const SweepConfig& c) {
    SweepResult out;
    out.cases = c.cases();
    out.reports.resize(out.cases.size());
    CaseOptions opt{c.alexander, false, c.numeric, c.degree, c.hook_weight, c.seed};

    // Largest weights first so the slow cases do not trail at the end.
    std::vector<std::size_t> order(out.cases.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return out.cases[x].p * out.cases[x].d > out.cases[y].p * out.cases[y].d;
    });

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < order.size();) {
            const auto& cs = out.cases[order[k]];
            out.reports[order[k]] = run_case(TorusKnot(cs.d, cs.m), cs.p, opt);
        }
    };
    const int n = std::max(1, std::min<int>(c.workers, static_cast<int>(order.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (c.lmov) {
        std::set<std::pair<int, int>> knots;
        for (const auto& cs : out.cases) knots.insert({cs.d, cs.m});
        for (std::size_t i = 0; i < out.cases.size(); ++i) {
            auto key = std::make_pair(out.cases[i].d, out.cases[i].m);
            if (knots.erase(key)) out.reports[i].lmov = lmov_json(TorusKnot(key.first, key.second), c.degree);
        }
    }
    if (c.lemmas) out.lemmas = lemma_suite_json(c, out.lemma_failures);
    return out;
}

inline json to_json(const SweepResult& s, const SweepConfig& c, bool with_timing = true) {
    json j;
    j["config"] = to_json(c);
    json cases = json::array();
    int pass = 0, fail = 0, err = 0;
    for (const auto& r : s.reports) {
        cases.push_back(to_json(r, with_timing));
        if (r.error())
            ++err;
        else if (r.pass())
            ++pass;
        else
            ++fail;
    }
    j["cases"] = std::move(cases);
    if (!s.lemmas.is_null()) j["lemmas"] = s.lemmas;
    json summary;
    summary["total"] = s.reports.size();
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["error"] = err;
    summary["prime_failures"] = s.prime_failures();
    if (!s.lemmas.is_null()) summary["lemma_failures"] = s.lemma_failures;
    j["summary"] = std::move(summary);
    return j;
}

inline std::string csv_header() { return "d,m,p,p_prime,verdict,quotient_z2_degree,millis\n"; }

inline std::string csv_row(const CaseReport& r) {
    std::ostringstream os;
    const auto& h = r.hecke;
    os << h.d << ',' << h.m << ',' << h.p << ',' << (h.p_prime ? 1 : 0) << ','
       << (r.error() ? "ERROR" : (r.pass() ? "PASS" : "FAIL")) << ',' << (h.quotient ? h.quotient->z2_degree() : -1)
       << ',' << h.millis << '\n';
    return os.str();
}

inline std::string to_csv(const SweepResult& s) {
    std::string out = csv_header();
    for (const auto& r : s.reports) out += csv_row(r);
    return out;
}

}  // namespace hecke
