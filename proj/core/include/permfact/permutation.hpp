#pragma once

// Permutations of [n] = {1..n} as explicit image arrays.
//
// Product convention: compose(p, q) applies q first, then p, i.e.
// compose(p, q)(x) = p(q(x)). Thus sigma = alpha * beta means beta acts
// first. With this convention, sigma = (1 2 3)(4 5)(6 7) and
// beta = (1 3 7 5 2) give alpha = compose(sigma, inverse(beta)) =
// (1 3 2 4 5 6 7), the worked factorization that pins the convention.

#include <functional>
#include <string>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {

class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    // images[i] is the image of i+1, values 1-based; must be a bijection.
    explicit Permutation(std::vector<int> images);
    // From cycles, e.g. {{1,2,3},{4,5}} in S_n.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int n() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Partition cycle_type() const;
    std::vector<std::vector<int>> cycles() const;  // each cycle min-first
    int cycle_count() const;
    std::vector<int> fixed_points() const;
    int sign() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    std::string to_string() const;  // one-line image array "[2,3,1]"

private:
    std::vector<int> images_;
};

// compose(p, q)(x) = p(q(x)); sizes must match.
Permutation compose(const Permutation& p, const Permutation& q);

// Streams every permutation of cycle type lambda exactly once, in a
// deterministic order (cycles are built leader-first, leaders increasing,
// remaining cycle entries in lexicographic arrangement order).
// Returning false from the callback stops the enumeration early.
void enumerate_class(const Partition& lambda,
                     const std::function<bool(const Permutation&)>& fn);

// Same stream restricted to branch indices congruent to `rem` mod `mod`,
// where a branch is one choice of (cycle length, first arranged element)
// for the first cycle. Disjoint over rem = 0..mod-1; union is the class.
void enumerate_class_split(const Partition& lambda, int mod, int rem,
                           const std::function<bool(const Permutation&)>& fn);

// Canonical representative: the first permutation of the stream.
Permutation class_representative(const Partition& lambda);

}  // namespace permfact
