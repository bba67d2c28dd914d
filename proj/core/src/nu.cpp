#include "permfact/nu.hpp"

#include <mutex>
#include <sstream>

#include "permfact/characters.hpp"

namespace permfact {

namespace {

bool all_ones(const Partition& rho) { return rho.largest() <= 1; }

int sign_needed(int a) { return a % 2 == 0 ? 1 : -1; }

// Inner sum of the acyclic-subset formula: over n_1..n_{a-1} with
// sum i*n_i = k, n_i <= m_i, weight (-1)^{sum n_i} prod C(m_i, n_i).
void acyclic_inner(const Partition& lambda, int a, int i, int k, int parity,
                   Int weight, Int& out, const Int& base) {
    if (k == 0) {
        out += (parity % 2 == 0) ? Int(weight * base) : Int(-weight * base);
        return;
    }
    if (i >= a || i > k) return;
    int mi = lambda.mult(i);
    Int w = weight;
    for (int ni = 0; ni * i <= k && ni <= mi; ++ni) {
        if (ni > 0) w = weight * binomial(mi, ni);
        acyclic_inner(lambda, a, i + 1, k - ni * i, parity + ni, w, out, base);
    }
}

}  // namespace

Int nu_boccara(const Partition& lambda) {
    if (lambda.n() < 2) throw domain_error("nu_boccara needs n >= 2");
    if (lambda.sign() == 1) return 0;
    return 2 * factorial(lambda.n() - 2);
}

Int acyclic_edge_subsets(const Partition& lambda, int a) {
    if (a < 1) throw domain_error("acyclic_edge_subsets needs a >= 1");
    int n = lambda.n();
    Int total = 0;
    for (int k = 0; k <= a - 1; ++k)
        acyclic_inner(lambda, a, 1, k, 0, 1, total, binomial(n - k, a - 1 - k));
    return total;
}

Int nu_bijective(int a, const Partition& lambda) {
    int n = lambda.n();
    if (a < 1 || n < a + 1) throw domain_error("nu_bijective needs 1 <= a < n");
    if (lambda.sign() != sign_needed(a)) return 0;
    return exact_div(2 * factorial(n - a - 1) * acyclic_edge_subsets(lambda, a),
                     a, "nu_bijective");
}

Int nu_inductive(int a, const Partition& lambda) {
    int n = lambda.n();
    if (a < 1 || n < a + 1) throw domain_error("nu_inductive needs 1 <= a < n");
    if (a == 1) return nu_boccara(lambda);
    static std::mutex mu;
    static std::map<std::pair<int, Partition>, Int> cache;
    auto key = std::make_pair(a, lambda);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Int sum = 0;
    for (int j = 2; j <= lambda.largest(); ++j) {
        int mj = lambda.mult(j);
        if (mj == 0) continue;
        sum += nu_inductive(a - 1, lambda.down(j)) * mj * j;
    }
    Int v = exact_div(sum, a, "nu_inductive");
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(key), std::move(v)).first->second;
}

bool no_short_cycles_applicable(int a, const Partition& lambda) {
    if (a < 1) return false;
    for (int j = 2; j <= a - 1; ++j)
        if (lambda.mult(j) != 0) return false;
    return true;
}

Int nu_no_short_cycles(int a, const Partition& lambda) {
    if (!no_short_cycles_applicable(a, lambda))
        throw domain_error("lambda has cycle lengths in [2, a-1]");
    int n = lambda.n();
    int b = lambda.mult(1);
    if (n < a + 1) throw domain_error("nu_no_short_cycles needs n > a");
    if (lambda.sign() != sign_needed(a)) return 0;
    if (n - a - b + 1 < 0) return 0;  // binomial support: a - 1 > n - b
    return exact_div(2 * factorial(n - a - 1) * factorial(n - b),
                     factorial(a) * factorial(n - a - b + 1),
                     "nu_no_short_cycles");
}

Int nu_closed_form_variant(NuClosedForm which, int a, const Partition& lambda) {
    int n = lambda.n();
    int eps = lambda.sign();
    Int m1 = lambda.mult(1), m2 = lambda.mult(2), m3 = lambda.mult(3);
    switch (which) {
        case NuClosedForm::rho_11_characters:
        case NuClosedForm::rho_11_inductive:
            if (n < 3) throw domain_error("needs n >= 3");
            return exact_div((1 + eps) * factorial(n - 3) * (n - m1), 2,
                             "nu (1,1)");
        case NuClosedForm::rho_2_characters:
            if (n < 3) throw domain_error("needs n >= 3");
            return exact_div((1 - eps) * factorial(n - 3) * (n - 2 + m1), 2,
                             "nu (2)");
        case NuClosedForm::rho_111_characters: {
            if (n < 4) throw domain_error("needs n >= 4");
            Int poly = falling_int(n - 1, 2) - 2 * (m1 - 1) * (n - 2) +
                       Int((m1 - 1) * (m1 - 2)) - 2 * m2;
            return exact_div((1 - eps) * factorial(n - 4) * poly, 6,
                             "nu (1,1,1) characters");
        }
        case NuClosedForm::rho_111_inductive: {
            if (n < 4) throw domain_error("needs n >= 4");
            Int nm = Int(n) - m1;
            Int poly = nm * (nm - 1) - 2 * m2;
            return exact_div((1 - eps) * factorial(n - 4) * poly, 6,
                             "nu (1,1,1) inductive");
        }
        case NuClosedForm::rho_111_bijective: {
            if (n < 4) throw domain_error("needs n >= 4");
            Int poly = binomial(n, 2) - (n - 1) * m1 +
                       exact_div(Int(m1 * (m1 - 1)), 2, "C(m1,2)") - m2;
            return exact_div((1 - eps) * factorial(n - 4) * poly, 3,
                             "nu (1,1,1) bijective");
        }
        case NuClosedForm::rho_1111_inductive: {
            if (n < 5) throw domain_error("needs n >= 5");
            Int nm = Int(n) - m1;
            Int poly = nm * (nm - 1) * (nm - 2) - 6 * m2 * (nm - 2) - 6 * m3;
            return exact_div((1 + eps) * factorial(n - 5) * poly, 24,
                             "nu (1,1,1,1)");
        }
        case NuClosedForm::no_short_cycles:
            return nu_no_short_cycles(a, lambda);
    }
    throw domain_error("unknown closed form");
}

Int nu_closed_form(const Partition& rho, const Partition& lambda) {
    int a = rho.n();
    if (rho == Partition({1, 1}))
        return nu_closed_form_variant(NuClosedForm::rho_11_characters, a, lambda);
    if (rho == Partition({2}))
        return nu_closed_form_variant(NuClosedForm::rho_2_characters, a, lambda);
    if (rho == Partition({1, 1, 1}))
        return nu_closed_form_variant(NuClosedForm::rho_111_characters, a, lambda);
    if (rho == Partition({1, 1, 1, 1}))
        return nu_closed_form_variant(NuClosedForm::rho_1111_inductive, a, lambda);
    if (all_ones(rho) && a >= 1 && no_short_cycles_applicable(a, lambda))
        return nu_no_short_cycles(a, lambda);
    throw domain_error("no closed form for rho = " + rho.to_string());
}

InvarianceReport theorem1_invariance_check(int n, int a, const Partition& rho) {
    if (rho.n() != a) throw domain_error("rho must be a partition of a");
    if (a >= 1 && n <= 2 * a)
        throw domain_error("invariance check needs n > 2a");
    InvarianceReport rep;
    rep.n = n;
    rep.a = a;
    rep.rho = rho;
    std::map<std::pair<int, std::vector<int>>, size_t> index;
    for (const Partition& lambda : partitions_of(n)) {
        std::vector<int> low;
        for (int j = 1; j <= a - 1; ++j) low.push_back(lambda.mult(j));
        auto key = std::make_pair(lambda.sign(), low);
        Int v = nu_rho_characters(rho, lambda);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, rep.groups.size());
            rep.groups.push_back(
                InvarianceGroup{lambda.sign(), low, v, {lambda}});
        } else {
            InvarianceGroup& g = rep.groups[it->second];
            g.members.push_back(lambda);
            if (v != g.value) {
                std::ostringstream os;
                os << "sign=" << g.sign << " low_mults=(";
                for (size_t i = 0; i < g.low_mults.size(); ++i) {
                    if (i) os << ',';
                    os << g.low_mults[i];
                }
                os << "): " << g.members.front().to_string() << " -> "
                   << g.value.get_str() << " but " << lambda.to_string()
                   << " -> " << v.get_str();
                rep.violations.push_back(os.str());
            }
        }
    }
    return rep;
}

Int lehman_count(const Partition& lambda, int a) {
    int n = lambda.n();
    if (a < 1 || n < a + 1) throw domain_error("lehman_count needs 1 <= a < n");
    return Int(n) * factorial(a - 1) * acyclic_edge_subsets(lambda, a) *
           factorial(n - a);
}

Int lehman_multiplicity(int n, int a) {
    if (a < 1 || n < a + 1)
        throw domain_error("lehman_multiplicity needs 1 <= a < n");
    return exact_div(factorial(a - 1) * a * (n - a) * n, 2,
                     "lehman_multiplicity");
}

Int nu_value(NuMethod method, const Partition& rho, const Partition& lambda) {
    switch (method) {
        case NuMethod::characters:
            return nu_rho_characters(rho, lambda);
        case NuMethod::bijective:
            if (!all_ones(rho))
                throw domain_error("bijective method needs rho = (1^a)");
            return nu_bijective(rho.n(), lambda);
        case NuMethod::inductive:
            if (!all_ones(rho))
                throw domain_error("inductive method needs rho = (1^a)");
            return nu_inductive(rho.n(), lambda);
        case NuMethod::closed_form:
            return nu_closed_form(rho, lambda);
        case NuMethod::oracle:
            throw domain_error("oracle method lives in the oracle module");
    }
    throw domain_error("unknown method");
}

}  // namespace permfact
