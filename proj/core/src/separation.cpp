#include "permfact/separation.hpp"

#include "permfact/characters.hpp"
#include "permfact/nu.hpp"

namespace permfact {

Rat p_uniform(const Composition& I) {
    Int num = 1;
    for (int ih : I.parts()) num *= factorial(ih - 1);
    return make_rat(std::move(num), factorial(I.m()));
}

Rat p_odd(int n, const Composition& I) {
    int m = I.m(), k = I.k();
    if (n < m) throw domain_error("p_odd needs n >= m");
    if (n < 2) throw domain_error("p_odd needs n >= 2");
    Rat corr = make_rat(Int(m) * (m - 1), Int(n) * (n - 1));
    if ((n - k + 1) % 2 != 0) corr = -corr;
    return p_uniform(I) * (Rat(1) + corr);
}

Rat p_even(int n, const Composition& I) {
    return 2 * p_uniform(I) - p_odd(n, I);
}

namespace {

void r_poly_rec(const std::vector<int>& lambda, const std::vector<int>& I,
                size_t t, std::vector<char>& used, Int prod, Int& out) {
    if (t == I.size()) {
        out += prod;
        return;
    }
    for (size_t j = 0; j < lambda.size(); ++j) {
        if (used[j]) continue;
        Int f = falling_int(lambda[j], I[t]);
        if (f == 0) continue;
        used[j] = 1;
        r_poly_rec(lambda, I, t + 1, used, Int(prod * f), out);
        used[j] = 0;
    }
}

Partition plus_delta(const Partition& lambda, size_t t) {
    std::vector<int> parts = lambda.parts();
    ++parts[t];
    return Partition(std::move(parts));
}

}  // namespace

Int r_poly(const Partition& lambda, const Composition& I) {
    Int out = 0;
    std::vector<char> used(lambda.parts().size(), 0);
    r_poly_rec(lambda.parts(), I.parts(), 0, used, 1, out);
    return out;
}

Rat p_type(const Partition& lambda, const Composition& I) {
    if (lambda.n() < I.m()) throw domain_error("p_type needs n >= m");
    return make_rat(r_poly(lambda, I), falling_int(lambda.n(), I.m()));
}

bool lemma27_check(const Partition& lambda, const Composition& I) {
    int n = lambda.n(), m = I.m();
    Int lhs = 0;
    for (size_t t = 0; t < lambda.parts().size(); ++t)
        lhs += Int(lambda.parts()[t]) * r_poly(plus_delta(lambda, t), I);
    Int rhs = Int(n + m) * r_poly(lambda, I);
    for (int h = 0; h < I.k(); ++h) {
        int ih = I.parts()[h];
        if (ih < 2) continue;
        rhs += Int(ih) * (ih - 1) * r_poly(lambda, I.minus(h));
    }
    return lhs == rhs;
}

namespace {

Rat p_product_definition(int n, int a, const Composition& I) {
    Rat sum = 0;
    for (const Partition& lambda : partitions_of(n)) {
        Int nu = a == 0 ? nu_rho_characters(Partition(), lambda)
                        : nu_inductive(a, lambda);
        if (nu == 0) continue;
        sum += Rat(lambda.class_size() * nu) * p_type(lambda, I);
    }
    return sum * make_rat(factorial(a) * (n - a),
                          factorial(n - 1) * factorial(n));
}

Rat p_product_recurrence(int n, int a, const Composition& I) {
    int m = I.m();
    if (a == 1) return p_odd(n, I);
    if (a == 0) {
        // solved upward from the a = 1 line, recursing on the size of I
        Rat rhs = Rat(Int(n) * (n + 1)) * p_odd(n + 1, I);
        for (int h = 0; h < I.k(); ++h) {
            int ih = I.parts()[h];
            if (ih < 2) continue;
            rhs -= Rat(Int(ih) * (ih - 1)) *
                   p_product_recurrence(n, 0, I.minus(h));
        }
        return rhs / Rat(Int(n - m + 1) * (n + m));
    }
    // a >= 2: one step down in both n and a
    int np = n - 1;
    Rat sum = 0;
    Int coeff = Int(np - m + 1) * (np + m);
    if (coeff != 0) sum += Rat(coeff) * p_product_recurrence(np, a - 1, I);
    for (int h = 0; h < I.k(); ++h) {
        int ih = I.parts()[h];
        if (ih < 2) continue;
        sum += Rat(Int(ih) * (ih - 1)) *
               p_product_recurrence(np, a - 1, I.minus(h));
    }
    return sum / Rat(Int(np) * n);
}

}  // namespace

Rat p_product(int n, int a, const Composition& I, ProductMethod method) {
    if (n < I.m()) throw domain_error("p_product needs n >= |I|");
    if (a < 0 || a >= n) throw domain_error("p_product needs 0 <= a < n");
    switch (method) {
        case ProductMethod::definition:
            return p_product_definition(n, a, I);
        case ProductMethod::recurrence:
            return p_product_recurrence(n, a, I);
    }
    throw domain_error("unknown method");
}

Rat p_product_checked(int n, int a, const Composition& I) {
    Rat d = p_product(n, a, I, ProductMethod::definition);
    Rat r = p_product(n, a, I, ProductMethod::recurrence);
    if (d != r)
        throw consistency_error("p_product methods disagree at n=" +
                                std::to_string(n) + " a=" + std::to_string(a) +
                                " I=" + I.to_string());
    return d;
}

Rat p_1k_closed(int n, int a, int k) {
    if (a < 1 || k < 1) throw domain_error("p_1k_closed needs a, k >= 1");
    int np = n - a + 1;
    if (np < k || np < 2) throw domain_error("p_1k_closed needs n-a+1 >= max(k,2)");
    Rat front = make_rat(falling_int(n - k, a - 1) * falling_int(n + k - 1, a - 1),
                         falling_int(n, a - 1) * falling_int(n - 1, a - 1));
    return front * p_odd(np, Composition(std::vector<int>(k, 1)));
}

Rat p_n0_closed(int n, int k) {
    if (k < 1 || n < k) throw domain_error("p_n0_closed needs 1 <= k <= n");
    Rat base = make_rat(1, factorial(k));
    if ((n - k) % 2 != 0) return base;
    return base * (Rat(1) + make_rat(2 * Int(k) * (k - 1),
                                     Int(n - k + 1) * (n + k)));
}

Rat p_1k_printed(int n, int a, int k) {
    if (a < 1 || k < 1) throw domain_error("p_1k_printed needs a, k >= 1");
    Rat front = make_rat(falling_int(n - 1 + k, a - 1) * falling_int(n - k, a - 1),
                         falling_int(n, a - 1) * falling_int(n - a, a - 1));
    Rat corr = make_rat(Int(k) * (k - 1), Int(n) * (n + 1));
    if ((n - k) % 2 != 0) corr = -corr;
    return front * (Rat(1) + corr);
}

Rat p_n0_printed_first_branch(int, int k) {
    if (k < 1) throw domain_error("needs k >= 1");
    return make_rat(1, factorial(k));
}

TildeReport tilde_symmetry_check(int n, int a, int m, int k) {
    TildeReport rep{n, a, m, k, {}, true};
    for (const Composition& I : compositions_of(m, k)) {
        Int norm = 1;
        for (int ih : I.parts()) norm *= factorial(ih);
        Rat tilde = p_product(n, a, I, ProductMethod::recurrence) / Rat(norm);
        if (!rep.values.empty() && tilde != rep.values.front().second)
            rep.uniform = false;
        rep.values.emplace_back(I, tilde);
    }
    return rep;
}

}  // namespace permfact
