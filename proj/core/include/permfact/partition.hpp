#pragma once

#include <map>
#include <string>
#include <vector>

#include "permfact/exact.hpp"

namespace permfact {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0 and is valid input everywhere.
class Partition {
public:
    Partition() = default;
    // Accepts parts in any order; canonicalizes to weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Multiplicity of part size i, O(1).
    int mult(int i) const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    // (-1)^(n - length): the sign of any permutation of this cycle type.
    int sign() const { return (n_ - length()) % 2 == 0 ? 1 : -1; }

    // z_lambda = prod_i i^{m_i} m_i!  (centralizer order).
    Int z() const;
    // |C_lambda| = n! / z_lambda.
    Int class_size() const;

    // Replace one part of size j by j-1 (j = 1 removes the part).
    Partition down(int j) const;
    // Replace one part of size j by j+1.
    Partition up(int j) const;
    // Remove s parts of size 1.
    Partition strip_ones(int s) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const;

    std::string to_string() const;  // e.g. "(3,2,2)" ; "()" for empty

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Hook (n - i, 1^i): i is the leg length, 0 <= i <= n - 1.
struct HookIndex {
    int n;
    int i;
    Partition partition() const;
};

// Union of partitions: sorted merge of the part multisets.
Partition join(const Partition& a, const Partition& b);
inline Partition hook(int n, int i) { return HookIndex{n, i}.partition(); }

// All partitions of n, cached, in a fixed deterministic order.
const std::vector<Partition>& partitions_of(int n);

// Composition: ordered positive parts. Indexes separation patterns; the
// induced block partition is J_p = {i_{p-1}+1, ..., i_p} tiling [m].
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int m() const { return m_; }
    int k() const { return static_cast<int>(parts_.size()); }
    int mult(int i) const;

    // Decrement part h (0-based); a part of size 1 is removed, so the
    // composition shortens. Matches the empty-factor semantics of R_I.
    Composition minus(int h) const;

    // block(p) = first element of J_p (1-based); blocks tile [m] in order.
    std::vector<std::pair<int, int>> blocks() const;  // [start, end] 1-based

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int m_ = 0;
};

// All compositions of m (ordered parts), deterministic order.
std::vector<Composition> compositions_of(int m);
// Only those with exactly k parts.
std::vector<Composition> compositions_of(int m, int k);

// "3,2,2" -> {3,2,2}; "" -> empty.
Partition parse_partition(const std::string& s);
Composition parse_composition(const std::string& s);

}  // namespace permfact
