#include "permfact/oracle.hpp"

#include <thread>

namespace permfact {

namespace {

void check_limit(int n, const OracleLimits& lim, const char* what) {
    if (n > lim.max_n)
        throw ResourceRefusal(std::string(what) + ": n = " + std::to_string(n) +
                              " exceeds the enumeration limit " +
                              std::to_string(lim.max_n));
}

int common_fixed(const Permutation& a, const Permutation& b) {
    int s = 0;
    for (int x = 1; x <= a.n(); ++x)
        if (a.apply(x) == x && b.apply(x) == x) ++s;
    return s;
}

// Runs fn over C_lambda split across `threads` workers, each collecting
// into its own accumulator; merge combines them (must be commutative).
template <class Acc, class Fn, class Merge>
Acc parallel_over_class(const Partition& lambda, int threads, Fn fn,
                        Merge merge) {
    if (threads < 1) throw domain_error("threads must be >= 1");
    if (threads == 1) {
        Acc acc;
        enumerate_class(lambda, [&](const Permutation& p) {
            fn(acc, p);
            return true;
        });
        return acc;
    }
    std::vector<Acc> parts(threads);
    std::vector<std::thread> pool;
    for (int r = 0; r < threads; ++r)
        pool.emplace_back([&, r] {
            enumerate_class_split(lambda, threads, r, [&](const Permutation& p) {
                fn(parts[r], p);
                return true;
            });
        });
    for (auto& t : pool) t.join();
    Acc acc = std::move(parts[0]);
    for (int r = 1; r < threads; ++r) merge(acc, parts[r]);
    return acc;
}

struct TallyAcc {
    TripleCountMap counts;
    Int pairs = 0;
};

}  // namespace

Int TripleCounts::a(int m) const {
    Int total = 0;
    for (const auto& [key, v] : counts)
        if (key.first.length() == m) total += v;
    return total;
}

Int TripleCounts::a_s(int m, int s) const {
    Int total = 0;
    for (const auto& [key, v] : counts)
        if (key.first.length() == m && key.second == s) total += v;
    return total;
}

std::map<int, Int> TripleCounts::a0_by_m() const {
    std::map<int, Int> out;
    for (const auto& [key, v] : counts)
        if (key.second == 0) out[key.first.length()] += v;
    return out;
}

Int TripleCounts::conn_coeff(const Partition& nu) const {
    Int total = 0;
    for (const auto& [key, v] : counts)
        if (key.first == nu) total += v;
    return exact_div(total, nu.class_size(), "oracle conn_coeff");
}

TripleCounts triple_counts(const Partition& lambda, const Partition& mu,
                           int threads, const OracleLimits& lim) {
    if (lambda.n() != mu.n()) throw domain_error("triple_counts: size mismatch");
    check_limit(lambda.n(), lim, "triple_counts");
    Permutation alpha = class_representative(lambda);
    TallyAcc acc = parallel_over_class<TallyAcc>(
        mu, threads,
        [&](TallyAcc& a, const Permutation& beta) {
            Permutation prod = compose(alpha, beta);
            a.counts[{prod.cycle_type(), common_fixed(alpha, beta)}] += 1;
            a.pairs += 1;
        },
        [](TallyAcc& a, const TallyAcc& b) {
            for (const auto& [k, v] : b.counts) a.counts[k] += v;
            a.pairs += b.pairs;
        });
    Int scale = lambda.class_size();
    for (auto& [k, v] : acc.counts) v *= scale;
    return TripleCounts{lambda, mu, std::move(acc.counts),
                        std::move(acc.pairs)};
}

bool representative_scaling_audit(const Partition& lambda,
                                  const Partition& mu) {
    TripleCounts scaled = triple_counts(lambda, mu);
    TripleCountMap full;
    enumerate_class(lambda, [&](const Permutation& alpha) {
        enumerate_class(mu, [&](const Permutation& beta) {
            Permutation prod = compose(alpha, beta);
            full[{prod.cycle_type(), common_fixed(alpha, beta)}] += 1;
            return true;
        });
        return true;
    });
    return full == scaled.counts;
}

bool is_separated(const Permutation& sigma, const Composition& I,
                  SeparationMode mode) {
    int m = I.m();
    if (sigma.n() < m) throw domain_error("is_separated needs n >= m");
    // cycle id of each element of [m]
    std::vector<int> cyc(m + 1, -1);
    int id = 0;
    for (const auto& c : sigma.cycles()) {
        for (int x : c)
            if (x <= m) cyc[x] = id;
        ++id;
    }
    std::vector<int> block_of_cycle(id, -1);
    int block = 0;
    for (auto [start, end] : I.blocks()) {
        int first = cyc[start];
        for (int x = start; x <= end; ++x) {
            int c = cyc[x];
            if (mode == SeparationMode::strong && c != first) return false;
            if (block_of_cycle[c] == -1)
                block_of_cycle[c] = block;
            else if (block_of_cycle[c] != block)
                return false;  // one cycle meets two blocks
        }
        ++block;
    }
    return true;
}

Rat separation_ratio(const Partition& lambda, const Partition& mu,
                     const Composition& I, SeparationMode mode, int threads,
                     const OracleLimits& lim) {
    if (lambda.n() != mu.n()) throw domain_error("separation_ratio: size mismatch");
    if (lambda.n() < I.m()) throw domain_error("separation_ratio needs n >= m");
    check_limit(lambda.n(), lim, "separation_ratio");
    Int hits = parallel_over_class<Int>(
        lambda, threads,
        [&](Int& acc, const Permutation& alpha) {
            enumerate_class(mu, [&](const Permutation& beta) {
                if (is_separated(compose(alpha, beta), I, mode)) acc += 1;
                return true;
            });
        },
        [](Int& a, const Int& b) { a += b; });
    return make_rat(std::move(hits),
                    Int(lambda.class_size() * mu.class_size()));
}

namespace {

// Edges b -> to with at most one edge per source; true if no directed cycle.
bool acyclic(int n, const std::vector<int>& next) {
    std::vector<int> state(n + 1, 0);  // 0 new, 1 active, 2 done
    for (int x = 1; x <= n; ++x) {
        if (state[x]) continue;
        int y = x;
        while (y != 0 && state[y] == 0) {
            state[y] = 1;
            y = next[y];
        }
        if (y != 0 && state[y] == 1) return false;  // walked back into the path
        for (int z = x; z != 0 && state[z] == 1; z = next[z]) state[z] = 2;
    }
    return true;
}

}  // namespace

LehmanEnumeration lehman_enumerate(const Permutation& sigma, int a) {
    int n = sigma.n();
    if (a < 1 || a >= n) throw domain_error("lehman_enumerate needs 1 <= a < n");
    LehmanEnumeration out;
    out.count = 0;
    std::vector<int> b(n);  // b[1..n-1]
    std::vector<char> used(n + 1, 0);
    std::vector<int> next(n + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int x) {
        if (i == n) {
            for (int v = 1; v <= n; ++v) next[v] = 0;
            for (int t = 1; t <= a - 1; ++t) next[b[t]] = sigma.apply(b[t]);
            for (int t = a + 1; t <= n - 1; ++t)
                next[b[t]] = sigma.apply(b[t - 1]);
            next[b[a]] = sigma.apply(x);
            if (!acyclic(n, next)) return;
            out.count += 1;
            std::vector<std::vector<int>> cycles;
            cycles.emplace_back(b.begin() + a, b.begin() + n);
            out.fibers[Permutation::from_cycles(n, cycles)] += 1;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            b[i] = v;
            rec(i + 1, x);
            used[v] = 0;
        }
    };
    for (int x = 1; x <= n; ++x) rec(1, x);
    return out;
}

bool conjugacy_invariance_audit(int n) {
    for (const Partition& lambda : partitions_of(n)) {
        for (int a = 1; a <= std::min(3, n - 1); ++a) {
            std::vector<int> mu_parts{n - a};
            mu_parts.insert(mu_parts.end(), a, 1);
            Partition mu(std::move(mu_parts));
            Partition full({n});
            long first = -1;
            bool ok = true;
            enumerate_class(lambda, [&](const Permutation& sigma) {
                long count = 0;
                enumerate_class(mu, [&](const Permutation& beta) {
                    if (compose(sigma, beta.inverse()).cycle_type() == full)
                        ++count;
                    return true;
                });
                if (first == -1)
                    first = count;
                else if (count != first)
                    ok = false;
                return ok;
            });
            if (!ok) return false;
        }
    }
    return true;
}

Int nu_oracle(const Partition& rho, const Partition& lambda, int threads) {
    int n = lambda.n();
    int a = rho.n();
    if (n - a < 1) throw domain_error("nu_oracle needs n > |rho|");
    Partition target = join(Partition({n - a}), rho);
    Permutation sigma = class_representative(lambda);
    return parallel_over_class<Int>(
        Partition({n}), threads,
        [&](Int& acc, const Permutation& alpha) {
            if (compose(alpha.inverse(), sigma).cycle_type() == target)
                acc += 1;
        },
        [](Int& a_, const Int& b_) { a_ += b_; });
}

}  // namespace permfact
