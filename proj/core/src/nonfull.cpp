#include "permfact/nonfull.hpp"

#include <sstream>

#include "permfact/oracle.hpp"

namespace permfact {

namespace {

Rat d_coeff_impl(int n, int m, int k, bool alternate_sum) {
    if (n < 1 || k < 0 || k > m) throw domain_error("d_coeff needs n >= 1, 0 <= k <= m");
    Int inner = 0;
    for (int r = 0; r <= m - k; ++r) {
        Int term = binomial(n + m, n + k + r) * binomial(n + r + 1, m);
        inner += alternate_sum && r % 2 != 0 ? Int(-term) : term;
    }
    Int alt = binomial(n - 1, k - 2);
    inner += ((n - m) % 2 + 2) % 2 == 0 ? alt : -alt;
    return make_rat(factorial(n - 1) * inner,
                    Int(n + k) * binomial(n + m, m - k));
}

}  // namespace

Rat d_coeff(int n, int m, int k) { return d_coeff_impl(n, m, k, true); }

Rat d_coeff_printed(int n, int m, int k) { return d_coeff_impl(n, m, k, false); }

namespace {

Rat sep_prefactor(int n, const Composition& I, const Int& den) {
    Int num = factorial(n - I.m());
    for (int ih : I.parts()) num *= factorial(ih);
    return make_rat(std::move(num), den);
}

}  // namespace

Rat sigma_nn(int n, const Composition& I) {
    if (n < I.m()) throw domain_error("sigma_nn needs n >= m");
    Int f = factorial(n - 1);
    return sep_prefactor(n, I, Int(f * f)) * d_coeff(n, I.m(), I.k());
}

SigmaN11Terms sigma_n11_terms(int n, const Composition& I) {
    int m = I.m(), k = I.k(), m1 = I.mult(1);
    if (n < m || n < 2) throw domain_error("sigma_n11 needs n >= max(m, 2)");
    SigmaN11Terms t;
    // Each D-coefficient is only evaluated when its coefficient is nonzero;
    // the vanishing coefficients are exactly the out-of-range cases.
    t.t_m1k_n1 = k - m1 != 0 ? Rat(k - m1) * d_coeff(n - 1, m - 1, k) : Rat(0);
    t.t_m1k1_n1 = m1 != 0 ? Rat(m1) * d_coeff(n - 1, m - 1, k - 1) : Rat(0);
    t.t_mk_n1 = d_coeff(n - 1, m, k);
    Int c4 = Int(n + m - 2) * (n + m - 2) - m;
    t.t_mk_n2 = c4 != 0 ? Rat(c4) * d_coeff(n - 2, m, k) : Rat(0);
    Int c5 = Int(m - k) * (2 * n + 2 * m - 7);
    t.t_m1k_n2 = c5 != 0 ? Rat(c5) * d_coeff(n - 2, m - 1, k) : Rat(0);
    Int c6 = Int(m - k - 2) * (m - k) + k - m1;
    t.t_m2k_n2 = c6 != 0 ? Rat(c6) * d_coeff(n - 2, m - 2, k) : Rat(0);
    Int f = factorial(n - 2);
    t.prefactor = sep_prefactor(n, I, Int(Int(n) * n * f * f));
    return t;
}

Rat SigmaN11Terms::total() const {
    return prefactor *
           (t_m1k_n1 + t_m1k1_n1 + t_mk_n1 + t_mk_n2 + t_m1k_n2 + t_m2k_n2);
}

Rat sigma_n11(int n, const Composition& I) {
    return sigma_n11_terms(n, I).total();
}

Cor37Report corollary37_check(int n, int m, int k) {
    Cor37Report rep{n, m, k, {}, true};
    for (const Composition& I : compositions_of(m, k)) {
        Int norm = 1;
        for (int ih : I.parts()) norm *= factorial(ih);
        Rat v = sigma_n11(n, I) / Rat(norm);
        auto& group = rep.groups[I.mult(1)];
        if (!group.empty() && v != group.front().second) rep.ok = false;
        group.emplace_back(I, v);
    }
    return rep;
}

ConjectureReport conjecture38_scan(int n_max, int a_max, int m_max,
                                   int threads) {
    ConjectureReport rep{n_max, a_max, m_max, {}, 0, 0, 0, 0};
    for (int n = 2; n <= n_max; ++n) {
        for (int a = 0; a < n && a <= a_max; ++a) {
            std::vector<int> mu_parts{n - a};
            mu_parts.insert(mu_parts.end(), a, 1);
            Partition mu(std::move(mu_parts));
            for (const Partition& lambda : partitions_of(n)) {
                for (int m = 1; m <= std::min(m_max, n); ++m) {
                    // group key: (k, m_1(I)..m_{a-1}(I)); a, n, lambda, m
                    // are fixed inside this loop nest
                    std::map<std::vector<int>, ConjectureGroup> groups;
                    std::map<std::vector<int>, Rat> ext_first;
                    std::map<std::vector<int>, bool> ext_bad;
                    for (const Composition& I : compositions_of(m)) {
                        std::vector<int> key{I.k()};
                        for (int i = 1; i <= a - 1; ++i)
                            key.push_back(I.mult(i));
                        std::vector<int> ext_key = key;
                        if (a >= 1) ext_key.push_back(I.mult(a));
                        Rat sep = separation_ratio(mu, lambda, I,
                                                   SeparationMode::standard,
                                                   threads);
                        Int norm = 1;
                        for (int ih : I.parts()) norm *= factorial(ih);
                        auto it = groups.find(key);
                        if (it == groups.end()) {
                            std::ostringstream os;
                            os << "n=" << n << " a=" << a
                               << " lambda=" << lambda.to_string()
                               << " m=" << m << " k=" << key[0] << " lowmults=(";
                            for (size_t i = 1; i < key.size(); ++i) {
                                if (i > 1) os << ',';
                                os << key[i];
                            }
                            os << ')';
                            it = groups.emplace(key,
                                                ConjectureGroup{os.str(), {}, true})
                                     .first;
                        }
                        ConjectureGroup& g = it->second;
                        Rat v = sep / Rat(norm);
                        if (!g.values.empty() && v != g.values.front().second)
                            g.consistent = false;
                        g.values.emplace_back(I, v);
                        auto [eit, fresh] = ext_first.emplace(ext_key, v);
                        if (!fresh && eit->second != v) ext_bad[ext_key] = true;
                    }
                    for (auto& [ekey, bad] : ext_bad)
                        if (bad) ++rep.violating_groups_extended_key;
                    for (auto& [key, g] : groups) {
                        if (g.values.size() < 2) {
                            ++rep.singleton_groups;
                            continue;
                        }
                        if (g.consistent)
                            ++rep.verified_groups;
                        else
                            ++rep.violating_groups;
                        rep.groups.push_back(std::move(g));
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace permfact
