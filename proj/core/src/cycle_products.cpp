#include "permfact/cycle_products.hpp"

#include "permfact/oracle.hpp"

namespace permfact {

TripleCount a_rr(int m, int r, CountConvention convention) {
    if (r < 1) throw domain_error("a_rr needs r >= 1");
    if (m < 1 || m > r + 1 || (r - m) % 2 != 0)
        return {Int(0), convention};
    Int fixed = exact_div(2 * stirling_unsigned(r + 1, m), Int(r) * (r + 1),
                          "a_rr");
    if (convention == CountConvention::fixed_first_factor)
        return {std::move(fixed), convention};
    return {Int(fixed * factorial(r - 1)), convention};
}

Int a0_hooks(int m, int i, int j, int t) {
    if (i < 1 || t < 0 || t > j) throw domain_error("a0_hooks needs i >= 1, 0 <= t <= j");
    if (j > i + t) return 0;
    if (i == 1) {
        // mu = (1^{j+1}) is the identity, so the product equals the first
        // factor, of type (1+t, 1^{j-t}). "No common fixed point" requires
        // that factor to be fixed-point-free, i.e. t = j with t >= 1.
        if (t != j || t == 0) return 0;
        return m == 1 ? factorial(j) : Int(0);
    }
    int r = i - j + t;
    if (r == 0) return m == 2 ? exact_div(factorial(i + j), Int(i) * (i + t),
                                          "a0_hooks r=0")
                              : Int(0);
    Int arr = a_rr(m, r, CountConvention::triple).value;
    if (arr == 0) return 0;
    return exact_div(factorial(i + j), factorial(r), "a0_hooks") *
           binomial(i - 1, j - t) * binomial(i + t - 1, j) * arr;
}

Int a_hooks(int m, int i, int j, int t) {
    if (i < 1 || t < 0 || t > j) throw domain_error("a_hooks needs i >= 1, 0 <= t <= j");
    if (i == 1) {
        // mu is the identity: the product is the first factor itself, of
        // type (1+t, 1^{j-t}), so a(m) is that class size at m = j - t + 1.
        // (The closed fraction (j+1)!/((1+t)(j-t)!) only equals the class
        // size for t >= 1; at t = 0 the "cycle" of length 1 collides with
        // the fixed points.)
        if (m != j - t + 1) return 0;
        Partition type = join(Partition(std::vector<int>{1 + t}),
                              Partition(std::vector<int>(j - t, 1)));
        return type.class_size();
    }
    int n = i + j;
    Int total = 0;
    for (int s = 0; s <= j - t; ++s)
        total += binomial(n, s) * a0_hooks(m - s, i, j - s, t);
    return total;
}

CycleCountDistribution a_hooks_distribution(int i, int j, int t) {
    CycleCountDistribution out;
    for (int m = 1; m <= i + j; ++m) {
        Int v = a_hooks(m, i, j, t);
        if (v != 0) out.emplace(m, std::move(v));
    }
    return out;
}

Int lemma31_eval(int m, int i, int j) {
    if (i < 2 || j < 0) throw domain_error("lemma31_eval needs i >= 2, j >= 0");
    Int arr = a_rr(m, i, CountConvention::triple).value;
    if (arr == 0) return 0;
    return exact_div(falling_int(i + j, j) * falling_int(i + j - 1, j) * arr,
                     factorial(j), "lemma31");
}

Int theorem33_printed(int m, int i, int j, int t) {
    if (i < 2 || t < 0 || t > j) throw domain_error("needs i >= 2, 0 <= t <= j");
    Rat total = 0;
    for (int s = std::max(0, j - i - t + 1); s <= j - t; ++s) {
        int r = i - j + t + s;
        Rat term = make_rat(2 * factorial(i + j),
                            factorial(s) * factorial(r + 1));
        term *= binomial(i - 1, j - s - t) * binomial(i + t - 1, j - s);
        term *= make_rat(stirling_unsigned(r + 1, m - s), r);
        total += term;
    }
    if (i - j + t <= 0)
        total += make_rat(factorial(i + j), Int(i) * (i + t));
    return rat_to_int(total, "theorem33_printed");
}

Int corollary34_printed(int m, int i, int j) {
    if (i < 2 || j < 0) throw domain_error("needs i >= 2, j >= 0");
    Rat total = 0;
    for (int s = std::max(0, j - i + 1); s <= j; ++s) {
        int r = i - j + s;
        Rat term = make_rat(2 * factorial(i + j),
                            factorial(s) * factorial(r + 1));
        Int b = binomial(i - 1, j - s);
        term *= b * b;
        term *= stirling_unsigned(r + 1, m - s);
        total += term;
    }
    if (i - j <= 0) total += make_rat(factorial(i + j), Int(i) * i);
    return rat_to_int(total, "corollary34_printed");
}

FixedPointSplit common_fixed_point_split(const Partition& lambda,
                                         const Partition& mu, int m) {
    if (lambda.n() != mu.n()) throw domain_error("size mismatch");
    int n = lambda.n();
    FixedPointSplit split;
    split.direct = triple_counts(lambda, mu).a(m);
    split.total = 0;
    int smax = std::min(lambda.mult(1), mu.mult(1));
    for (int s = 0; s <= smax; ++s) {
        Partition ls = lambda.strip_ones(s), ms = mu.strip_ones(s);
        split.per_s[s] = binomial(n, s) * triple_counts(ls, ms).a_s(m - s, 0);
        split.total += split.per_s[s];
    }
    return split;
}

Int corollary15_rhs(const Partition& lambda, const Partition& mu, int m) {
    if (lambda.n() != mu.n()) throw domain_error("size mismatch");
    if (mu.mult(1) == 0) throw domain_error("corollary15 needs m_1(mu) >= 1");
    int n = lambda.n();
    Partition mu1 = mu.down(1);
    Int rhs = 0;
    for (int j = 2; j <= lambda.largest(); ++j) {
        if (lambda.mult(j) == 0) continue;
        Partition lj = lambda.down(j);
        rhs += Int(n) * triple_counts(lj, mu1).a(m) *
               (lj.mult(j - 1)) * (j - 1);
    }
    if (lambda.mult(1) > 0)
        rhs += Int(n) * triple_counts(lambda.down(1), mu1).a(m - 1);
    return rhs;
}

bool corollary15_check(const Partition& lambda, const Partition& mu, int m) {
    Int lhs = Int(mu.mult(1)) * triple_counts(lambda, mu).a(m);
    return lhs == corollary15_rhs(lambda, mu, m);
}

}  // namespace permfact
