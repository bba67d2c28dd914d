#include "permfact/partition.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace permfact {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw domain_error("partition parts must be positive");
        n_ += p;
    }
    std::sort(parts_.rbegin(), parts_.rend());
}

int Partition::mult(int i) const {
    if (i <= 0) return 0;
    auto lo = std::lower_bound(parts_.begin(), parts_.end(), i, std::greater<int>());
    auto hi = std::upper_bound(parts_.begin(), parts_.end(), i, std::greater<int>());
    return static_cast<int>(hi - lo);
}

Int Partition::z() const {
    Int z = 1;
    int run = 0, prev = 0;
    for (int p : parts_) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= Int(p) * run;  // accumulates i^{m_i} m_i! across the run
    }
    return z;
}

Int Partition::class_size() const { return exact_div(factorial(n_), z(), "class_size"); }

Partition Partition::down(int j) const {
    if (mult(j) == 0) throw domain_error("down: no part of size " + std::to_string(j));
    std::vector<int> out;
    out.reserve(parts_.size());
    bool done = false;
    for (int p : parts_) {
        if (!done && p == j) {
            done = true;
            if (j > 1) out.push_back(j - 1);
        } else {
            out.push_back(p);
        }
    }
    return Partition(std::move(out));
}

Partition Partition::up(int j) const {
    if (mult(j) == 0) throw domain_error("up: no part of size " + std::to_string(j));
    std::vector<int> out;
    out.reserve(parts_.size());
    bool done = false;
    for (int p : parts_) {
        if (!done && p == j) {
            done = true;
            out.push_back(j + 1);
        } else {
            out.push_back(p);
        }
    }
    return Partition(std::move(out));
}

Partition Partition::strip_ones(int s) const {
    if (s < 0 || mult(1) < s)
        throw domain_error("strip_ones: fewer than s parts of size 1");
    std::vector<int> out(parts_.begin(), parts_.end() - s);
    return Partition(std::move(out));
}

bool Partition::operator<(const Partition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return parts_ < o.parts_;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition HookIndex::partition() const {
    if (i < 0 || i >= n) throw domain_error("hook leg out of range");
    std::vector<int> parts{n - i};
    parts.insert(parts.end(), i, 1);
    return Partition(std::move(parts));
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::unordered_map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 0) throw domain_error("partitions_of negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return cache.emplace(n, std::move(out)).first->second;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw domain_error("composition parts must be positive");
        m_ += p;
    }
}

int Composition::mult(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Composition Composition::minus(int h) const {
    if (h < 0 || h >= k()) throw domain_error("composition index out of range");
    std::vector<int> out = parts_;
    if (out[h] == 1)
        out.erase(out.begin() + h);
    else
        --out[h];
    return Composition(std::move(out));
}

std::vector<std::pair<int, int>> Composition::blocks() const {
    std::vector<std::pair<int, int>> out;
    int start = 1;
    for (int p : parts_) {
        out.emplace_back(start, start + p - 1);
        start += p;
    }
    return out;
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void gen_compositions(int remaining, std::vector<int>& acc,
                      std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        acc.push_back(p);
        gen_compositions(remaining - p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int m) {
    if (m < 0) throw domain_error("compositions_of negative m");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_compositions(m, acc, out);
    return out;
}

std::vector<Composition> compositions_of(int m, int k) {
    std::vector<Composition> out;
    for (auto& c : compositions_of(m))
        if (c.k() == k) out.push_back(c);
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

Partition parse_partition(const std::string& s) { return Partition(parse_int_list(s)); }
Composition parse_composition(const std::string& s) { return Composition(parse_int_list(s)); }

Int stirling_unsigned(long n, long m) {
    if (n < 0 || m < 0) throw domain_error("stirling_unsigned needs n, m >= 0");
    if (m > n) return 0;
    if (n == 0) return 1;  // m == 0 handled by m > n above? no: n=0,m=0 -> 1
    if (m == 0) return 0;
    // row-wise DP, small n in practice
    std::vector<Int> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;  // c(0,0)
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min(i, m + 0L); j >= 1; --j)
            row[j] = row[j - 1] + Int(i - 1) * row[j];
        row[0] = 0;
    }
    return row[m];
}

}  // namespace permfact
