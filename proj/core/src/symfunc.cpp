#include "permfact/symfunc.hpp"

#include <mutex>

#include "permfact/characters.hpp"
#include "permfact/nu.hpp"

namespace permfact {

void BasisVector::add(const Partition& p, const Rat& c) {
    if (p.n() != degree) throw domain_error("BasisVector: degree mismatch");
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        if (c != 0) coeffs.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

bool BasisVector::operator==(const BasisVector& o) const {
    return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
}

BasisVector f_a_direct(int n, int a) {
    if (n < 1 || a < 0 || a >= n) throw domain_error("f_a_direct needs 0 <= a < n");
    BasisVector v;
    v.degree = n;
    v.basis = Basis::powersum;
    Int nfact = factorial(n);
    for (const Partition& lambda : partitions_of(n)) {
        Int nu = a == 0 ? nu_rho_characters(Partition(), lambda)
                        : nu_inductive(a, lambda);
        if (nu == 0) continue;
        v.add(lambda, make_rat(lambda.class_size() * nu, nfact));
    }
    return v;
}

BasisVector delta_powersum(const BasisVector& v) {
    if (v.basis != Basis::powersum) throw domain_error("expected power-sum basis");
    BasisVector out;
    out.degree = v.degree + 1;
    out.basis = Basis::powersum;
    for (const auto& [lambda, c] : v.coeffs)
        for (int j = 1; j <= lambda.largest(); ++j) {
            int mj = lambda.mult(j);
            if (mj == 0) continue;
            out.add(lambda.up(j), c * mj * j);
        }
    return out;
}

BasisVector delta_monomial(const BasisVector& v) {
    if (v.basis != Basis::monomial) throw domain_error("expected monomial basis");
    BasisVector out;
    out.degree = v.degree + 1;
    out.basis = Basis::monomial;
    for (const auto& [lambda, c] : v.coeffs)
        for (int j = 1; j <= lambda.largest(); ++j) {
            if (lambda.mult(j) == 0) continue;
            Partition up = lambda.up(j);
            out.add(up, c * j * (lambda.mult(j + 1) + 1));
        }
    return out;
}

namespace {

using MonoMap = std::map<Partition, Int>;

// M_mu * p_k: replace one part v (v = 0 meaning a new part) by v + k; the
// result M_nu appears with multiplicity m_{v+k}(nu).
MonoMap multiply_pk(const MonoMap& f, int k) {
    MonoMap out;
    for (const auto& [mu, c] : f) {
        std::vector<int> choices{0};
        int prev = 0;
        for (int p : mu.parts())
            if (p != prev) {
                choices.push_back(p);
                prev = p;
            }
        for (int v : choices) {
            std::vector<int> parts = mu.parts();
            if (v == 0) {
                parts.push_back(k);
            } else {
                for (int& p : parts)
                    if (p == v) {
                        p = v + k;
                        break;
                    }
            }
            Partition nu(std::move(parts));
            out[nu] += c * nu.mult(v + k);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

const MonoMap& p_lambda_monomial(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, MonoMap> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    MonoMap f{{Partition(), Int(1)}};
    for (int k : lambda.parts()) f = multiply_pk(f, k);
    return cache.emplace(lambda, std::move(f)).first->second;
}

}  // namespace

BasisVector powersum_to_monomial(const BasisVector& v) {
    if (v.basis != Basis::powersum) throw domain_error("expected power-sum basis");
    BasisVector out;
    out.degree = v.degree;
    out.basis = Basis::monomial;
    for (const auto& [lambda, c] : v.coeffs)
        for (const auto& [mono, mult] : p_lambda_monomial(lambda))
            out.add(mono, c * mult);
    return out;
}

BasisVector f_a_closed(int n, int a) {
    if (n < 1 || a < 0) throw domain_error("f_a_closed needs n >= 1, a >= 0");
    BasisVector out;
    out.degree = n;
    out.basis = Basis::monomial;
    if (a >= n) return out;  // empty index set: zero vector
    Rat pre(factorial(n - a - 1));
    pre /= factorial(a);
    for (const Partition& lambda : partitions_of(n)) {
        int excess = n - lambda.length();
        if (excess < a) continue;
        out.add(lambda, pre * falling(excess, a - 1));
    }
    return out;
}

}  // namespace permfact
