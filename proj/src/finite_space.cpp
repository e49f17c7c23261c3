#include "fintop/finite_space.hpp"

#include <algorithm>
#include <numeric>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

// Leaf of the relabeling search: compares the candidate permutation against
// the best key found so far. Key bit (a,b) is strict(perm[b], perm[a]) read
// with `a` outer, so all-zero leading bits mean "nothing below position 0":
// minimal classes come first.
struct CanonicalSearch {
    int k;
    const std::vector<std::uint64_t>& strict;
    std::vector<int> perm;
    std::vector<int> best;
    bool have_best = false;

    CanonicalSearch(int k, const std::vector<std::uint64_t>& strict)
        : k(k), strict(strict), perm(k) {}

    bool bit(const std::vector<int>& p, int a, int b) const {
        return (strict[p[b]] >> p[a]) & 1u;
    }

    void consider_leaf() {
        if (!have_best) {
            best = perm;
            have_best = true;
            return;
        }
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                bool cand = bit(perm, a, b);
                bool cur = bit(best, a, b);
                if (cand != cur) {
                    if (!cand) best = perm;
                    return;
                }
            }
    }

    // cells: consecutive [begin,end) position ranges sharing one weight
    void dfs(const std::vector<std::pair<int, int>>& cells, std::size_t ci, int pos,
             std::vector<bool>& used, const std::vector<int>& order) {
        if (pos == k) {
            consider_leaf();
            return;
        }
        auto [cb, ce] = cells[ci];
        for (int t = cb; t < ce; ++t) {
            if (used[t]) continue;
            used[t] = true;
            perm[pos] = order[t];
            dfs(cells, pos + 1 == ce ? ci + 1 : ci, pos + 1, used, order);
            used[t] = false;
        }
    }
};

}  // namespace

FiniteSpace FiniteSpace::canonical(std::vector<int> weights,
                                   std::vector<std::uint64_t> strict) {
    int k = static_cast<int>(weights.size());
    if (k > 64) throw Unsupported("more than 64 classes");
    if (strict.size() != weights.size())
        throw Error("weight list and strict matrix sizes disagree");
    std::uint64_t ground = k == 64 ? ~0ull : (1ull << k) - 1;
    for (int i = 0; i < k; ++i) {
        if (weights[i] < 1) throw Error("class weights must be positive");
        if (strict[i] & ~ground) throw IndexOutOfRange("strict row outside class range");
        if ((strict[i] >> i) & 1u) throw Error("strict order is not irreflexive");
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (((strict[i] >> j) & 1u) && (strict[j] & ~strict[i]))
                throw Error("strict order is not transitive");

    FiniteSpace out;
    if (k == 0) return out;

    // Positions sorted by weight; equal weights form one search cell.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] < weights[b]; });
    std::vector<std::pair<int, int>> cells;
    for (int b = 0; b < k;) {
        int e = b;
        while (e < k && weights[order[e]] == weights[order[b]]) ++e;
        cells.emplace_back(b, e);
        b = e;
    }

    CanonicalSearch search(k, strict);
    std::vector<bool> used(k, false);
    search.dfs(cells, 0, 0, used, order);

    out.weights_.resize(k);
    out.strict_.assign(k, 0);
    const std::vector<int>& perm = search.best;
    for (int i = 0; i < k; ++i) {
        out.weights_[i] = weights[perm[i]];
        for (int j = 0; j < k; ++j)
            if ((strict[perm[i]] >> perm[j]) & 1u) out.strict_[i] |= 1ull << j;
    }
    return out;
}

FiniteSpace FiniteSpace::from_covers(std::vector<int> weights,
                                     const std::vector<std::pair<int, int>>& covers) {
    int k = static_cast<int>(weights.size());
    std::vector<std::uint64_t> rel(k, 0);
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= k || hi < 0 || hi >= k)
            throw IndexOutOfRange("cover pair outside class range");
        rel[lo] |= 1ull << hi;
    }
    // transitive closure of the cover relation
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            if ((rel[i] >> m) & 1u) rel[i] |= rel[m];
    for (int i = 0; i < k; ++i)
        if ((rel[i] >> i) & 1u) throw Error("cover relation has a cycle");
    return canonical(std::move(weights), std::move(rel));
}

FiniteSpace FiniteSpace::chain(const std::vector<int>& weights) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < static_cast<int>(weights.size()); ++i)
        covers.emplace_back(i, i + 1);
    return from_covers(weights, covers);
}

FiniteSpace FiniteSpace::antichain(const std::vector<int>& weights) {
    return from_covers(weights, {});
}

FiniteSpace FiniteSpace::circle_model() {
    return from_covers({1, 1, 1, 1}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

FiniteSpace FiniteSpace::sphere_model(int dim) {
    std::vector<int> weights(2 * (dim + 1), 1);
    std::vector<std::pair<int, int>> covers;
    for (int level = 0; level < dim; ++level)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                covers.emplace_back(2 * level + a, 2 * (level + 1) + b);
    return from_covers(std::move(weights), covers);
}

int FiniteSpace::size() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0);
}

std::uint64_t FiniteSpace::lower_set(int j) const {
    std::uint64_t out = 0;
    for (int i = 0; i < klass_count(); ++i)
        if (less(i, j)) out |= 1ull << i;
    return out;
}

bool FiniteSpace::is_t0() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::vector<std::pair<int, int>> FiniteSpace::covers() const {
    std::vector<std::pair<int, int>> out;
    int k = klass_count();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (!less(i, j)) continue;
            bool covered = true;
            for (int m = 0; m < k && covered; ++m)
                if (less(i, m) && less(m, j)) covered = false;
            if (covered) out.emplace_back(i, j);
        }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteSpace FiniteSpace::restrict_classes(std::uint64_t class_mask) const {
    std::vector<int> kept;
    for (int i = 0; i < klass_count(); ++i)
        if ((class_mask >> i) & 1u) kept.push_back(i);
    std::vector<int> w;
    std::vector<std::uint64_t> s(kept.size(), 0);
    for (std::size_t a = 0; a < kept.size(); ++a) {
        w.push_back(weights_[kept[a]]);
        for (std::size_t b = 0; b < kept.size(); ++b)
            if (less(kept[a], kept[b])) s[a] |= 1ull << b;
    }
    return canonical(std::move(w), std::move(s));
}

Int FiniteSpace::strict_pair_count() const {
    Int total = 0;
    int k = klass_count();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (less(i, j)) total += static_cast<Int>(weights_[i]) * weights_[j];
    return total;
}

bool FiniteSpace::operator<(const FiniteSpace& rhs) const {
    int na = size(), nb = rhs.size();
    if (na != nb) return na < nb;
    if (weights_ != rhs.weights_) return weights_ < rhs.weights_;
    return strict_ < rhs.strict_;
}

std::size_t FiniteSpace::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(weights_.size());
    for (int w : weights_) mix(static_cast<std::uint64_t>(w));
    for (std::uint64_t row : strict_) mix(row);
    return h;
}

FiniteSpace canonicalize(const Preorder& p) {
    int n = p.size();
    std::vector<int> class_of(n, -1);
    std::vector<int> weights;
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (class_of[i] >= 0) continue;
        int c = static_cast<int>(reps.size());
        int w = 0;
        for (int j = i; j < n; ++j)
            if (p.equivalent(i, j)) {
                class_of[j] = c;
                ++w;
            }
        reps.push_back(i);
        weights.push_back(w);
    }
    int k = static_cast<int>(reps.size());
    std::vector<std::uint64_t> strict(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && p.leq(reps[a], reps[b]) && !p.leq(reps[b], reps[a]))
                strict[a] |= 1ull << b;
    return FiniteSpace::canonical(std::move(weights), std::move(strict));
}

Preorder expand(const FiniteSpace& x) {
    int k = x.klass_count();
    std::vector<int> offset(k + 1, 0);
    for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + x.weight(i);
    int n = offset[k];
    std::vector<std::uint64_t> rows(n, 0);
    auto block = [&](int c) {
        std::uint64_t m = 0;
        for (int t = offset[c]; t < offset[c + 1]; ++t) m |= 1ull << t;
        return m;
    };
    for (int c = 0; c < k; ++c) {
        std::uint64_t row = block(c);
        for (int d = 0; d < k; ++d)
            if (x.less(c, d)) row |= block(d);
        for (int t = offset[c]; t < offset[c + 1]; ++t) rows[t] = row;
    }
    return Preorder::from_rows(n, std::move(rows));
}

FiniteSpace dual(const FiniteSpace& x) {
    int k = x.klass_count();
    std::vector<std::uint64_t> strict(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (x.less(j, i)) strict[i] |= 1ull << j;
    return FiniteSpace::canonical(x.weights(), std::move(strict));
}

}  // namespace fintop
