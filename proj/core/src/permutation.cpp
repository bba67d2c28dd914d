#include "permfact/permutation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace permfact {

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n() || seen[v])
            throw domain_error("image array is not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::from_cycles(int n,
                                     const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    std::vector<char> seen(n + 1, 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int x = cyc[i];
            if (x < 1 || x > n || seen[x])
                throw domain_error("bad cycle element " + std::to_string(x));
            seen[x] = 1;
            im[x - 1] = cyc[(i + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < n(); ++i) im[images_[i] - 1] = i + 1;
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(n() + 1, 0);
    for (int x = 1; x <= n(); ++x) {
        if (seen[x]) continue;
        std::vector<int> cyc;
        for (int y = x; !seen[y]; y = apply(y)) {
            seen[y] = 1;
            cyc.push_back(y);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (int x = 1; x <= n(); ++x)
        if (apply(x) == x) out.push_back(x);
    return out;
}

int Permutation::sign() const { return (n() - cycle_count()) % 2 == 0 ? 1 : -1; }

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n(); ++i) {
        if (i) os << ',';
        os << images_[i];
    }
    os << ']';
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw domain_error("compose: size mismatch");
    std::vector<int> im(p.n());
    for (int x = 1; x <= p.n(); ++x) im[x - 1] = p.apply(q.apply(x));
    return Permutation(std::move(im));
}

namespace {

// Builds cycles leader-first: the leader of each cycle is the smallest
// element not yet placed, so every permutation is produced exactly once.
// The split filter only applies to the first cycle's (length, first
// arranged element) choice; a length-1 first cycle is one branch.
class ClassEnumerator {
public:
    ClassEnumerator(const Partition& lambda, int mod, int rem,
                    const std::function<bool(const Permutation&)>& fn)
        : n_(lambda.n()), fn_(fn), mod_(mod), rem_(rem) {
        if (mod_ < 1 || rem_ < 0 || rem_ >= mod_)
            throw domain_error("bad split parameters");
        images_.assign(n_, 0);
        used_.assign(n_ + 1, 0);
        for (int p : lambda.parts()) ++remaining_[p];
    }

    void run() { start_cycle(mod_ > 1); }

private:
    void start_cycle(bool top) {
        if (stopped_) return;
        int leader = 0;
        for (int x = 1; x <= n_; ++x)
            if (!used_[x]) {
                leader = x;
                break;
            }
        if (leader == 0) {
            if (!fn_(Permutation(images_))) stopped_ = true;
            return;
        }
        for (auto it = remaining_.begin(); it != remaining_.end() && !stopped_; ++it) {
            if (it->second == 0) continue;
            --it->second;
            used_[leader] = 1;
            if (it->first == 1) {
                if (!top || branch_++ % mod_ == rem_) {
                    images_[leader - 1] = leader;
                    start_cycle(false);
                    images_[leader - 1] = 0;
                }
            } else {
                arrange(leader, leader, it->first - 1, top);
            }
            used_[leader] = 0;
            ++it->second;
        }
    }

    // prev: element whose image is still open; left: entries still to place.
    void arrange(int leader, int prev, int left, bool top) {
        if (left == 0) {
            images_[prev - 1] = leader;
            start_cycle(false);
            images_[prev - 1] = 0;
            return;
        }
        for (int x = 1; x <= n_ && !stopped_; ++x) {
            if (used_[x]) continue;
            if (top && branch_++ % mod_ != rem_) continue;
            used_[x] = 1;
            images_[prev - 1] = x;
            arrange(leader, x, left - 1, false);
            images_[prev - 1] = 0;
            used_[x] = 0;
        }
    }

    int n_;
    std::vector<int> images_;
    std::vector<char> used_;
    std::map<int, int> remaining_;  // cycle length -> count still unplaced
    const std::function<bool(const Permutation&)>& fn_;
    int mod_, rem_;
    long branch_ = 0;
    bool stopped_ = false;
};

}  // namespace

void enumerate_class(const Partition& lambda,
                     const std::function<bool(const Permutation&)>& fn) {
    ClassEnumerator(lambda, 1, 0, fn).run();
}

void enumerate_class_split(const Partition& lambda, int mod, int rem,
                           const std::function<bool(const Permutation&)>& fn) {
    ClassEnumerator(lambda, mod, rem, fn).run();
}

Permutation class_representative(const Partition& lambda) {
    Permutation out = Permutation::identity(lambda.n());
    enumerate_class(lambda, [&](const Permutation& p) {
        out = p;
        return false;
    });
    return out;
}

}  // namespace permfact
