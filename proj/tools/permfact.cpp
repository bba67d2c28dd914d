// permfact: unified CLI for exact factorization counts, separation
// probabilities and cycle-product distributions, with a brute-force oracle
// and cross-validation suites. JSON-first output; every number is a decimal
// string (rationals as {"num","den"}) so arbitrary precision survives any
// reader.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "permfact/characters.hpp"
#include "permfact/cycle_products.hpp"
#include "permfact/json_io.hpp"
#include "permfact/nonfull.hpp"
#include "permfact/nu.hpp"
#include "permfact/oracle.hpp"
#include "permfact/separation.hpp"
#include "permfact/symfunc.hpp"
#include "permfact/verify.hpp"

using json = nlohmann::json;
using namespace permfact;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit-code contract: 0 success/agreement, 2 disagreement, 3 resource
// refusal, 1 usage error.
constexpr int kOk = 0, kUsage = 1, kDisagree = 2, kRefused = 3;

struct Options {
    std::string format = "json";
    int threads = 1;
    bool verify_cache = false;
};

void print_table(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_table(it.value(),
                        prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        // compact arrays of scalars on one line
        bool scalar = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalar = false;
        if (scalar) {
            os << prefix << " = " << j.dump() << "\n";
        } else {
            int i = 0;
            for (const auto& e : j)
                print_table(e, prefix + "[" + std::to_string(i++) + "]", os);
        }
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const json& payload, const Options& opt) {
    if (opt.format == "table")
        print_table(payload, "", std::cout);
    else
        std::cout << payload.dump(2) << "\n";
}

json rat_json(const Rat& r) { return to_json(r); }

// Result cache keyed by (subcommand, canonical parameters, code version).
// Directory from PERMFACT_CACHE_DIR; disabled when unset.
class Cache {
public:
    Cache(const std::string& sub, const json& params) {
        const char* dir = std::getenv("PERMFACT_CACHE_DIR");
        if (!dir) return;
        json key{{"subcommand", sub}, {"params", params}, {"version", kVersion}};
        std::string canon = key.dump();
        size_t h = std::hash<std::string>{}(canon);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016zx", h);
        path_ = std::filesystem::path(dir) / (sub + "-" + buf + ".json");
        key_ = std::move(canon);
    }

    bool lookup(json& payload) const {
        if (path_.empty()) return false;
        std::ifstream in(path_);
        if (!in) return false;
        json rec = json::parse(in, nullptr, false);
        if (rec.is_discarded() || rec.value("key", "") != key_) return false;
        payload = rec["payload"];
        return true;
    }

    void store(const json& payload) const {
        if (path_.empty()) return;
        std::filesystem::create_directories(path_.parent_path());
        std::ofstream out(path_);
        out << json{{"key", key_}, {"payload", payload}}.dump();
    }

private:
    std::filesystem::path path_;
    std::string key_;
};

// Runs compute() through the cache; returns (payload, exit code from
// verdict). Timing and timestamp metadata are added outside the cached
// payload so cache hits stay byte-identical.
template <class Fn>
int run_cached(const std::string& sub, const json& params, const Options& opt,
               Fn compute) {
    Cache cache(sub, params);
    auto t0 = std::chrono::steady_clock::now();
    json payload;
    bool hit = cache.lookup(payload);
    if (!hit || opt.verify_cache) {
        json fresh = compute();
        if (hit && fresh.dump() != payload.dump()) {
            std::cerr << "cache verification failed: stored result differs "
                         "from recomputation\n";
            return kDisagree;
        }
        payload = std::move(fresh);
        if (!hit) cache.store(payload);
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    json out = payload;
    out["meta"] = {{"subcommand", sub},
                   {"params", params},
                   {"version", kVersion},
                   {"threads", opt.threads},
                   {"seconds", secs},
                   {"cache_hit", hit},
                   {"timestamp", std::time(nullptr)}};
    emit(out, opt);
    bool agree = payload.value("agree", true);
    return agree ? kOk : kDisagree;
}

json verdict(bool agree) { return agree ? json("agree") : json("disagree"); }

// ---------------------------------------------------------------- nu

int cmd_nu(const std::string& rho_s, const std::string& lambda_s,
           const std::string& method, const Options& opt) {
    Partition rho = parse_partition(rho_s);
    Partition lambda = parse_partition(lambda_s);
    int n = lambda.n(), a = rho.n();
    bool hook_rho = rho.largest() <= 1;
    json params{{"rho", to_json(rho)}, {"lambda", to_json(lambda)},
                {"method", method}};
    return run_cached("nu", params, opt, [&]() {
        json values = json::object();
        auto want = [&](const char* m) {
            return method == "all" || method == m;
        };
        if (want("characters")) {
            if (n > 2 * a)
                values["characters"] =
                    to_json(nu_rho_characters(rho, lambda));
            else if (method != "all")
                throw domain_error("characters method needs n > 2|rho|");
        }
        if (want("bijective")) {
            if (hook_rho && a >= 1)
                values["bijective"] = to_json(nu_bijective(a, lambda));
            else if (method != "all")
                throw domain_error("bijective method needs rho = (1^a), a >= 1");
        }
        if (want("inductive")) {
            if (hook_rho && a >= 1)
                values["inductive"] = to_json(nu_inductive(a, lambda));
            else if (method != "all")
                throw domain_error("inductive method needs rho = (1^a), a >= 1");
        }
        if (want("closed_form")) {
            try {
                values["closed_form"] = to_json(nu_closed_form(rho, lambda));
            } catch (const domain_error&) {
                if (method != "all") throw;
            }
        }
        if (want("oracle")) {
            if (method == "oracle" || n <= OracleLimits{}.max_n)
                values["oracle"] =
                    to_json(nu_oracle(rho, lambda, opt.threads));
        }
        if (values.empty()) throw domain_error("no method applicable");
        bool agree = true;
        std::string first;
        for (auto& [k, v] : values.items()) {
            if (first.empty())
                first = v.get<std::string>();
            else if (v.get<std::string>() != first)
                agree = false;
        }
        return json{{"values", values},
                    {"agree", agree},
                    {"verdict", verdict(agree)}};
    });
}

// ---------------------------------------------------------------- char

int cmd_char(int n, const std::string& pi_s, const std::string& mu_s,
             const Options& opt) {
    json params{{"n", n}, {"pi", pi_s}, {"mu", mu_s}};
    return run_cached("char", params, opt, [&]() {
        json payload = json::object();
        if (!pi_s.empty() && !mu_s.empty()) {
            Partition pi = parse_partition(pi_s), mu = parse_partition(mu_s);
            if (n == 0) n = pi.n();
            payload["value"] = to_json(mn_character(pi, mu));
        }
        if (n <= 0) throw domain_error("char needs --n or --pi/--mu");
        json hooks = json::object();
        for (int i = 0; i < n; ++i) {
            json row = json::object();
            for (const Partition& mu : partitions_of(n))
                row[mu.to_string()] =
                    to_json(hook_character(HookIndex{n, i}, mu));
            hooks[hook(n, i).to_string()] = row;
        }
        payload["hooks"] = hooks;
        // cross-check the hook rows against the general recursion
        bool agree = true;
        for (int i = 0; i < n; ++i)
            for (const Partition& mu : partitions_of(n))
                if (hook_character(HookIndex{n, i}, mu) !=
                    mn_character(hook(n, i), mu))
                    agree = false;
        payload["agree"] = agree;
        payload["verdict"] = verdict(agree);
        return payload;
    });
}

// ---------------------------------------------------------------- sep

int cmd_sep(int n, int a, const std::string& i_s, const std::string& method,
            const Options& opt) {
    Composition I = parse_composition(i_s);
    json params{{"n", n}, {"a", a}, {"I", to_json(I)}, {"method", method}};
    return run_cached("sep", params, opt, [&]() {
        json values = json::object();
        auto want = [&](const char* m) {
            return method == "all" || method == m;
        };
        if (want("definition"))
            values["definition"] =
                rat_json(p_product(n, a, I, ProductMethod::definition));
        if (want("recurrence"))
            values["recurrence"] =
                rat_json(p_product(n, a, I, ProductMethod::recurrence));
        if (want("closed_form")) {
            bool ones = I.mult(1) == I.k();
            if (ones && a == 0)
                values["closed_form"] = rat_json(p_n0_closed(n, I.k()));
            else if (ones && a >= 1 && n - a + 1 >= std::max(I.k(), 2))
                values["closed_form"] = rat_json(p_1k_closed(n, a, I.k()));
            else if (method != "all")
                throw domain_error("closed form needs I = (1^k)");
        }
        if (want("oracle")) {
            if (method == "oracle" || n <= OracleLimits{}.max_n) {
                std::vector<int> mu{n - a};
                mu.insert(mu.end(), a, 1);
                values["oracle"] = rat_json(
                    separation_ratio(Partition({n}), Partition(std::move(mu)),
                                     I, SeparationMode::strong, opt.threads));
            }
        }
        if (values.empty()) throw domain_error("no method applicable");
        bool agree = true;
        json first;
        for (auto& [k, v] : values.items()) {
            if (first.is_null())
                first = v;
            else if (v != first)
                agree = false;
        }
        return json{{"values", values},
                    {"agree", agree},
                    {"verdict", verdict(agree)}};
    });
}

// ---------------------------------------------------------------- products

int cmd_products(int i, int j, int t, bool with_oracle, const Options& opt) {
    json params{{"i", i}, {"j", j}, {"t", t}, {"oracle", with_oracle}};
    return run_cached("products", params, opt, [&]() {
        if (i < 1 || t < 0 || t > j)
            throw domain_error("products needs i >= 1, 0 <= t <= j");
        int n = i + j;
        Partition lambda = join(Partition({i + t}),
                                Partition(std::vector<int>(j - t, 1)));
        Partition mu = join(Partition({i}), Partition(std::vector<int>(j, 1)));
        CycleCountDistribution dist = a_hooks_distribution(i, j, t);
        json d = json::object();
        Int mass = 0;
        bool parity_ok = true;
        int pairs_parity =
            ((n - lambda.length()) + (n - mu.length())) % 2;
        for (const auto& [m, v] : dist) {
            d[std::to_string(m)] = to_json(v);
            mass += v;
            if ((n - m) % 2 != pairs_parity) parity_ok = false;
        }
        Int expected = Int(lambda.class_size() * mu.class_size());
        bool mass_ok = mass == expected;
        json payload{{"lambda", to_json(lambda)},
                     {"mu", to_json(mu)},
                     {"distribution", d},
                     {"mass", to_json(mass)},
                     {"expected_mass", to_json(expected)},
                     {"mass_ok", mass_ok},
                     {"parity_ok", parity_ok}};
        bool agree = mass_ok && parity_ok;
        if (with_oracle) {
            TripleCounts tc = triple_counts(lambda, mu, opt.threads);
            json od = json::object();
            bool oracle_ok = true;
            for (int m = 1; m <= n; ++m) {
                Int v = tc.a(m);
                if (v != 0) od[std::to_string(m)] = to_json(v);
                Int f = dist.count(m) ? dist.at(m) : Int(0);
                if (v != f) oracle_ok = false;
            }
            payload["oracle_distribution"] = od;
            payload["oracle_ok"] = oracle_ok;
            agree = agree && oracle_ok;
        }
        payload["agree"] = agree;
        payload["verdict"] = verdict(agree);
        return payload;
    });
}

// ---------------------------------------------------------------- symfunc

json basis_json(const BasisVector& v) {
    json out = json::object();
    for (const auto& [p, c] : v.coeffs) out[p.to_string()] = rat_json(c);
    return out;
}

int cmd_symfunc(int n, int a, const Options& opt) {
    json params{{"n", n}, {"a", a}};
    return run_cached("symfunc", params, opt, [&]() {
        if (n < 1 || a < 0 || a >= n)
            throw domain_error("symfunc needs n >= 1, 0 <= a < n");
        BasisVector ps = f_a_direct(n, a);
        BasisVector mono = powersum_to_monomial(ps);
        BasisVector closed = f_a_closed(n, a);
        bool agree = mono == closed;
        return json{{"powersum", basis_json(ps)},
                    {"monomial", basis_json(mono)},
                    {"monomial_closed_form", basis_json(closed)},
                    {"agree", agree},
                    {"verdict", verdict(agree)}};
    });
}

// ---------------------------------------------------------------- oracle

int cmd_oracle_triples(const std::string& lambda_s, const std::string& mu_s,
                       const Options& opt) {
    Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
    json params{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
    return run_cached("oracle-triples", params, opt, [&]() {
        TripleCounts tc = triple_counts(lambda, mu, opt.threads);
        json by_type = json::object(), by_m = json::object();
        for (const auto& [key, v] : tc.counts) {
            json& slot = by_type[key.first.to_string()];
            slot[std::to_string(key.second)] = to_json(v);
        }
        for (int m = 1; m <= lambda.n(); ++m) {
            Int v = tc.a(m);
            if (v != 0) by_m[std::to_string(m)] = to_json(v);
        }
        return json{{"counts_by_type_and_common_fixed", by_type},
                    {"counts_by_cycle_number", by_m},
                    {"pairs_enumerated", to_json(tc.pairs_enumerated)}};
    });
}

int cmd_oracle_sep(const std::string& lambda_s, const std::string& mu_s,
                   const std::string& i_s, const std::string& mode_s,
                   const Options& opt) {
    Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
    Composition I = parse_composition(i_s);
    if (mode_s != "strong" && mode_s != "standard")
        throw domain_error("mode must be strong or standard");
    SeparationMode mode = mode_s == "strong" ? SeparationMode::strong
                                             : SeparationMode::standard;
    json params{{"lambda", to_json(lambda)}, {"mu", to_json(mu)},
                {"I", to_json(I)}, {"mode", mode_s}};
    return run_cached("oracle-sep", params, opt, [&]() {
        Rat r = separation_ratio(lambda, mu, I, mode, opt.threads);
        return json{{"ratio", rat_json(r)},
                    {"pairs_enumerated",
                     to_json(Int(lambda.class_size() * mu.class_size()))}};
    });
}

int cmd_oracle_nu(const std::string& rho_s, const std::string& lambda_s,
                  const Options& opt) {
    Partition rho = parse_partition(rho_s), lambda = parse_partition(lambda_s);
    json params{{"rho", to_json(rho)}, {"lambda", to_json(lambda)}};
    return run_cached("oracle-nu", params, opt, [&]() {
        if (lambda.n() > OracleLimits{}.max_n)
            throw ResourceRefusal("oracle nu: n exceeds the enumeration limit");
        return json{{"value", to_json(nu_oracle(rho, lambda, opt.threads))}};
    });
}

int cmd_oracle_lehman(const std::string& lambda_s, int a, const Options& opt) {
    Partition lambda = parse_partition(lambda_s);
    json params{{"lambda", to_json(lambda)}, {"a", a}};
    return run_cached("oracle-lehman", params, opt, [&]() {
        if (lambda.n() > OracleLimits{}.max_n)
            throw ResourceRefusal("oracle lehman: n exceeds the enumeration limit");
        LehmanEnumeration L = lehman_enumerate(class_representative(lambda), a);
        json fibers = json::object();
        for (const auto& [beta, cnt] : L.fibers)
            fibers[beta.to_string()] = to_json(cnt);
        bool count_ok = L.count == lehman_count(lambda, a);
        return json{{"count", to_json(L.count)},
                    {"count_formula", to_json(lehman_count(lambda, a))},
                    {"multiplicity_formula",
                     to_json(lehman_multiplicity(lambda.n(), a))},
                    {"fibers", fibers},
                    {"agree", count_ok},
                    {"verdict", verdict(count_ok)}};
    });
}

// ---------------------------------------------------------------- conjecture

int cmd_conjecture(int n_max, int a_max, int m_max, const std::string& out_path,
                   const Options& opt) {
    json params{{"n_max", n_max}, {"a_max", a_max}, {"m_max", m_max}};
    return run_cached("conjecture", params, opt, [&]() {
        ConjectureReport rep =
            conjecture38_scan(n_max, a_max, m_max, opt.threads);
        json groups = json::array();
        for (const ConjectureGroup& g : rep.groups) {
            json comps = json::array(), vals = json::array();
            for (const auto& [I, v] : g.values) {
                comps.push_back(to_json(I));
                vals.push_back(rat_json(v));
            }
            groups.push_back({{"signature", g.signature},
                              {"compositions", comps},
                              {"normalized_values", vals},
                              {"verdict", g.consistent ? "consistent"
                                                       : "violation"}});
        }
        json payload{{"groups", groups},
                     {"verified_groups", rep.verified_groups},
                     {"violating_groups", rep.violating_groups},
                     {"violating_groups_extended_key",
                      rep.violating_groups_extended_key},
                     {"singleton_groups", rep.singleton_groups}};
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << payload.dump(2) << "\n";
        }
        // a violation is a finding, not an error: exit 0 either way
        return payload;
    });
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& scope_s, int n_max, const Options& opt) {
    VerifyScope scope = parse_scope(scope_s);
    json params{{"scope", scope_s}, {"n_max", n_max}};
    return run_cached("verify", params, opt, [&]() {
        VerifyReport rep = verify_suite(scope, n_max, opt.threads);
        json checks = json::array();
        for (const VerifyCheck& c : rep.checks)
            checks.push_back({{"name", c.name},
                              {"cases", c.cases},
                              {"pass", c.pass},
                              {"failures", c.failures}});
        return json{{"checks", checks},
                    {"total_cases", rep.total_cases()},
                    {"agree", rep.all_pass()},
                    {"verdict", verdict(rep.all_pass())}};
    });
}

// ---------------------------------------------------------------- erratum

int cmd_erratum(const Options& opt) {
    return run_cached("erratum", json::object(), opt, [&]() {
        json entries = json::array();
        bool all_confirmed = true;
        for (const ErratumEntry& e : erratum_report()) {
            entries.push_back({{"id", e.id},
                               {"printed", e.printed},
                               {"witness", e.witness},
                               {"correction", e.correction},
                               {"confirmed", e.confirmed}});
            all_confirmed = all_confirmed && e.confirmed;
        }
        // every entry must reproduce its deviation; a non-reproducing entry
        // means the build disagrees with the recorded erratum
        return json{{"entries", entries},
                    {"agree", all_confirmed},
                    {"verdict", verdict(all_confirmed)}};
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization counts and separation probabilities "
                 "for the symmetric group"};
    app.require_subcommand(1);
    // let the global options (--format, --threads, ...) appear after the
    // subcommand name as well
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--threads", opt.threads, "worker threads for oracle sweeps")
        ->check(CLI::PositiveNumber);
    app.add_flag("--verify-cache", opt.verify_cache,
                 "recompute on cache hits and require byte equality");

    std::string rho = "1", lambda = "3,2,2", mu, pi, I = "1,1",
                method = "all", mode = "strong", scope = "all", out_path;
    int n = 0, a = 0, i = 2, j = 0, t = 0, n_max = 6, a_max = 2, m_max = 4;
    bool with_oracle = false;

    auto* c_nu = app.add_subcommand("nu", "connection coefficients nu_rho(lambda)");
    c_nu->add_option("--rho", rho, "partition, e.g. 1,1")->required();
    c_nu->add_option("--lambda", lambda, "partition of n")->required();
    c_nu->add_option("--method", method,
                     "all|characters|bijective|inductive|closed_form|oracle");

    auto* c_char = app.add_subcommand("char", "irreducible characters of S_n");
    c_char->add_option("--n", n, "symmetric group size");
    c_char->add_option("--pi", pi, "irreducible label (partition)");
    c_char->add_option("--mu", mu, "class label (partition)");

    auto* c_sep = app.add_subcommand(
        "sep", "strong separation probability P^I_{n,a}");
    c_sep->add_option("--n", n)->required();
    c_sep->add_option("--a", a)->required();
    c_sep->add_option("--I", I, "composition, e.g. 1,1,1")->required();
    c_sep->add_option("--method", method,
                      "all|definition|recurrence|closed_form|oracle");

    auto* c_prod = app.add_subcommand(
        "products", "cycle-count distribution for (i+t,1^{j-t}) x (i,1^j)");
    c_prod->add_option("--i", i)->required();
    c_prod->add_option("--j", j)->required();
    c_prod->add_option("--t", t);
    c_prod->add_flag("--oracle", with_oracle, "also enumerate and compare");

    auto* c_sym = app.add_subcommand("symfunc",
                                     "F_a(n) in both bases with closed form");
    c_sym->add_option("--n", n)->required();
    c_sym->add_option("--a", a)->required();

    auto* c_orc = app.add_subcommand("oracle", "exhaustive enumeration");
    c_orc->require_subcommand(1);
    auto* c_tri = c_orc->add_subcommand("triples", "triple count tallies");
    c_tri->add_option("--lambda", lambda)->required();
    c_tri->add_option("--mu", mu)->required();
    auto* c_osep = c_orc->add_subcommand("sep", "separation ratio");
    c_osep->add_option("--lambda", lambda)->required();
    c_osep->add_option("--mu", mu)->required();
    c_osep->add_option("--I", I)->required();
    c_osep->add_option("--mode", mode, "strong|standard");
    auto* c_onu = c_orc->add_subcommand("nu", "nu_rho(lambda) by enumeration");
    c_onu->add_option("--rho", rho)->required();
    c_onu->add_option("--lambda", lambda)->required();
    auto* c_oleh = c_orc->add_subcommand("lehman", "Lehman sequence fibers");
    c_oleh->add_option("--lambda", lambda)->required();
    c_oleh->add_option("--a", a)->required();

    auto* c_conj = app.add_subcommand("conjecture",
                                      "scan the separation-invariance conjecture");
    c_conj->add_option("--n-max", n_max);
    c_conj->add_option("--a-max", a_max);
    c_conj->add_option("--m-max", m_max);
    c_conj->add_option("--out", out_path, "also write the report here");

    auto* c_ver = app.add_subcommand("verify", "cross-validation suites");
    c_ver->add_option("--scope", scope,
                      "nu|separation|products|symfunc|nonfull|all");
    c_ver->add_option("--n-max", n_max);

    auto* c_err = app.add_subcommand("erratum",
                                     "printed-formula deviation report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(c_nu)) return cmd_nu(rho, lambda, method, opt);
        if (app.got_subcommand(c_char)) return cmd_char(n, pi, mu, opt);
        if (app.got_subcommand(c_sep)) return cmd_sep(n, a, I, method, opt);
        if (app.got_subcommand(c_prod))
            return cmd_products(i, j, t, with_oracle, opt);
        if (app.got_subcommand(c_sym)) return cmd_symfunc(n, a, opt);
        if (app.got_subcommand(c_orc)) {
            if (c_orc->got_subcommand(c_tri))
                return cmd_oracle_triples(lambda, mu, opt);
            if (c_orc->got_subcommand(c_osep))
                return cmd_oracle_sep(lambda, mu, I, mode, opt);
            if (c_orc->got_subcommand(c_onu))
                return cmd_oracle_nu(rho, lambda, opt);
            if (c_orc->got_subcommand(c_oleh))
                return cmd_oracle_lehman(lambda, a, opt);
        }
        if (app.got_subcommand(c_conj))
            return cmd_conjecture(n_max, a_max, m_max, out_path, opt);
        if (app.got_subcommand(c_ver)) return cmd_verify(scope, n_max, opt);
        if (app.got_subcommand(c_err)) return cmd_erratum(opt);
    } catch (const ResourceRefusal& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return kRefused;
    } catch (const consistency_error& e) {
        std::cerr << "disagreement: " << e.what() << "\n";
        return kDisagree;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
