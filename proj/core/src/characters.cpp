#include "permfact/characters.hpp"

#include <algorithm>
#include <mutex>

namespace permfact {

namespace {

// Beta set of pi with l parts: {pi_i + (l - i), i = 1..l}, strictly
// decreasing. Removing a border strip of length r replaces some b by b - r.
std::vector<int> beta_set(const Partition& pi) {
    const auto& p = pi.parts();
    int l = pi.length();
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i) b[i] = p[i] + (l - 1 - i);
    return b;  // strictly decreasing
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    int l = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int part = b[i] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Partition drop_largest(const Partition& mu) {
    std::vector<int> parts(mu.parts().begin() + 1, mu.parts().end());
    return Partition(std::move(parts));
}

Int mn_rec(const Partition& pi, const Partition& mu);

std::map<std::pair<Partition, Partition>, Int> mn_cache;
std::mutex mn_mutex;

Int mn_compute(const Partition& pi, const Partition& mu) {
    if (pi.n() == 0) return 1;
    int r = mu.largest();
    Partition rest = drop_largest(mu);
    std::vector<int> b = beta_set(pi);
    Int total = 0;
    for (size_t k = 0; k < b.size(); ++k) {
        int target = b[k] - r;
        if (target < 0) continue;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int between = 0;
        for (int v : b)
            if (v > target && v < b[k]) ++between;
        std::vector<int> nb = b;
        nb[k] = target;
        Int sub = mn_rec(from_beta(std::move(nb)), rest);
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

Int mn_rec(const Partition& pi, const Partition& mu) {
    auto key = std::make_pair(pi, mu);
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find(key);
        if (it != mn_cache.end()) return it->second;
    }
    Int v = mn_compute(pi, mu);
    std::lock_guard<std::mutex> lock(mn_mutex);
    return mn_cache.emplace(std::move(key), std::move(v)).first->second;
}

// Hook length formula.
Int dimension(const Partition& pi) {
    const auto& p = pi.parts();
    int l = pi.length();
    Int hooks = 1;
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < l; ++k)
                if (p[k] > j) ++leg;
            hooks *= Int(arm + leg + 1);
        }
    }
    return exact_div(factorial(pi.n()), hooks, "hook length formula");
}

// binomial(m1 - 1, r1) with the generalized value binomial(-1, r) = (-1)^r.
Int binom_m1(int m1, long r1) {
    if (m1 >= 1) return binomial(m1 - 1, r1);
    return r1 % 2 == 0 ? Int(1) : Int(-1);
}

}  // namespace

Int mn_character(const Partition& pi, const Partition& mu) {
    if (pi.n() != mu.n()) throw domain_error("mn_character: size mismatch");
    return mn_rec(pi, mu);
}

Int hook_character(const HookIndex& h, const Partition& lambda) {
    if (h.n != lambda.n()) throw domain_error("hook_character: size mismatch");
    if (h.i < 0 || h.i >= h.n) throw domain_error("hook_character: bad leg");
    int i = h.i;
    int sign = 1;
    if (i > h.n - i - 1) {
        // chi^pi = eps(lambda) chi^{pi'} with pi' = (i+1, 1^{n-i-1})
        sign = lambda.sign();
        i = h.n - i - 1;
    }
    Int total = 0;
    for (const Partition& rho : partitions_of(i)) {
        Int term = binom_m1(lambda.mult(1), rho.mult(1));
        int even_parts = 0;
        for (int j = 2; j <= i && term != 0; ++j) {
            int rj = rho.mult(j);
            if (rj == 0) continue;
            if (j % 2 == 0) even_parts += rj;
            term *= binomial(lambda.mult(j), rj);
        }
        total += (even_parts % 2 == 0) ? term : -term;
    }
    return sign * total;
}

Int conn_coeff_characters(const Partition& lambda, const Partition& mu,
                          const Partition& nu) {
    int n = lambda.n();
    if (mu.n() != n || nu.n() != n)
        throw domain_error("conn_coeff: size mismatch");
    Rat total = 0;
    for (const Partition& pi : partitions_of(n)) {
        Int cl = mn_character(pi, lambda);
        if (cl == 0) continue;
        Int cm = mn_character(pi, mu);
        if (cm == 0) continue;
        Int cn = mn_character(pi, nu);
        if (cn == 0) continue;
        total += make_rat(Int(cl * cm * cn), dimension(pi));
    }
    total *= make_rat(factorial(n), Int(mu.z() * nu.z()));
    return rat_to_int(total, "connection coefficient");
}

Int nu_rho_characters(const Partition& rho, const Partition& lambda) {
    int n = lambda.n();
    int a = rho.n();
    if (a == 0) {
        // full hook sum for c^lambda_{(n),(n)}
        Rat total = 0;
        for (int i = 0; i < n; ++i) {
            Int c = hook_character(HookIndex{n, i}, lambda);
            if (c == 0) continue;
            total += make_rat(std::move(c), binomial(n - 1, i));
        }
        total *= make_rat(factorial(n), Int(Int(n) * n));
        return rat_to_int(total, "nu_rho a=0");
    }
    if (n <= 2 * a)
        throw domain_error("nu_rho_characters requires n > 2a");
    Rat total = 0;
    for (int i = 0; i <= a - 1; ++i) {
        Int cl = hook_character(HookIndex{n, i}, lambda);
        if (cl == 0) continue;
        Int cr = hook_character(HookIndex{a, i}, rho);
        if (cr == 0) continue;
        Int num = cl * cr;
        if (i % 2 != 0) num = -num;
        total += make_rat(std::move(num), binomial(n - 1, i));
    }
    for (int i = n - a; i <= n - 1; ++i) {
        Int cl = hook_character(HookIndex{n, i}, lambda);
        if (cl == 0) continue;
        Int cr = hook_character(HookIndex{a, i - (n - a)}, rho);
        if (cr == 0) continue;
        Int num = cl * cr;
        if ((i + n - a - 1) % 2 != 0) num = -num;
        total += make_rat(std::move(num), binomial(n - 1, i));
    }
    total *= make_rat(factorial(n), Int(Int(n) * (n - a) * rho.z()));
    return rat_to_int(total, "nu_rho hook sum");
}

const CharacterTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CharacterTable table;
    for (const Partition& pi : partitions_of(n))
        for (const Partition& m : partitions_of(n))
            table[pi][m] = mn_character(pi, m);
    return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace permfact
