#include "fintop/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "fintop/errors.hpp"
#include "fintop/space_algebra.hpp"

namespace fintop {

namespace {

void check_cap(int value, int cap, bool allow_large, const char* what) {
    int limit = allow_large ? large_cap : cap;
    if (value < 0 || value > limit)
        throw Unsupported(std::string(what) + " " + std::to_string(value) +
                          " above supported cap " + std::to_string(limit));
}

// Labeled poset on [m] under construction: reflexive rows (up-sets) and
// columns (down-sets) as bitmasks.
struct LabeledPoset {
    int m = 0;
    std::vector<std::uint64_t> up;    // up[i]: j with i <= j, includes i
    std::vector<std::uint64_t> down;  // down[i]: j with j <= i, includes i

    std::uint64_t ground() const { return m == 0 ? 0 : (1ull << m) - 1; }

    // Valid extension choices for the new top label m: a down-set D (strictly
    // below the new element) and an up-set U (strictly above) with every
    // member of D below every member of U.
    template <typename Fn>
    void for_each_extension(Fn fn) const {
        std::uint64_t all = ground();
        for (std::uint64_t d = 0;; d = (d - all) & all) {
            // d runs over all subsets of `all` (Gosper-style complement walk)
            bool down_ok = true;
            for (int i = 0; i < m && down_ok; ++i)
                if ((d >> i) & 1u)
                    if (down[i] & ~d & ~(1ull << i)) down_ok = false;
            if (down_ok) {
                // candidates strictly above all of D
                std::uint64_t cand = all & ~d;
                for (int i = 0; i < m; ++i)
                    if ((d >> i) & 1u) cand &= up[i];
                std::vector<int> elems;
                for (int i = 0; i < m; ++i)
                    if ((cand >> i) & 1u) elems.push_back(i);
                int t = static_cast<int>(elems.size());
                for (std::uint64_t s = 0; s < (1ull << t); ++s) {
                    std::uint64_t u_mask = 0;
                    for (int i = 0; i < t; ++i)
                        if ((s >> i) & 1u) u_mask |= 1ull << elems[i];
                    bool up_ok = true;
                    for (int i = 0; i < t && up_ok; ++i)
                        if ((u_mask >> elems[i]) & 1u)
                            if (up[elems[i]] & ~u_mask & ~(1ull << elems[i]))
                                up_ok = false;
                    if (up_ok) fn(d, u_mask);
                }
            }
            if (d == all) break;
        }
    }

    LabeledPoset extended(std::uint64_t d, std::uint64_t u_mask) const {
        LabeledPoset out;
        out.m = m + 1;
        out.up = up;
        out.down = down;
        std::uint64_t self = 1ull << m;
        out.up.push_back(self | u_mask);
        out.down.push_back(self | d);
        for (int i = 0; i < m; ++i) {
            if ((d >> i) & 1u) out.up[i] |= self;
            if ((u_mask >> i) & 1u) out.down[i] |= self;
        }
        return out;
    }

    Preorder to_preorder() const {
        std::vector<std::uint64_t> rows(up.begin(), up.end());
        return Preorder::from_rows(m, std::move(rows));
    }
};

std::uint64_t count_extensions_to(const LabeledPoset& p, int k) {
    if (p.m == k) return 1;
    std::uint64_t total = 0;
    p.for_each_extension([&](std::uint64_t d, std::uint64_t u) {
        total += count_extensions_to(p.extended(d, u), k);
    });
    return total;
}

void collect_to_depth(const LabeledPoset& p, int depth, std::vector<LabeledPoset>& out) {
    if (p.m == depth) {
        out.push_back(p);
        return;
    }
    p.for_each_extension([&](std::uint64_t d, std::uint64_t u) {
        collect_to_depth(p.extended(d, u), depth, out);
    });
}

std::uint64_t count_labeled_posets_serial(int k) {
    return count_extensions_to(LabeledPoset{}, k);
}

std::uint64_t count_labeled_posets_parallel(int k) {
    int seed_depth = std::min(k, 5);
    std::vector<LabeledPoset> seeds;
    collect_to_depth(LabeledPoset{}, seed_depth, seeds);
    if (seed_depth == k) return seeds.size();
    std::uint64_t total = 0;
    std::int64_t count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t i = 0; i < count; ++i)
        total += count_extensions_to(seeds[i], k);
    return total;
}

}  // namespace

std::uint64_t count_labeled_posets(int k, Exec exec, bool allow_large) {
    check_cap(k, labeled_poset_cap, allow_large, "labeled poset size");
    return exec == Exec::Serial ? count_labeled_posets_serial(k)
                                : count_labeled_posets_parallel(k);
}

void stream_labeled_posets(int k, const std::function<void(const Preorder&)>& sink,
                           bool allow_large) {
    check_cap(k, labeled_poset_cap, allow_large, "labeled poset size");
    auto walk = [&](auto&& self, const LabeledPoset& p) -> void {
        if (p.m == k) {
            sink(p.to_preorder());
            return;
        }
        p.for_each_extension(
            [&](std::uint64_t d, std::uint64_t u) { self(self, p.extended(d, u)); });
    };
    walk(walk, LabeledPoset{});
}

std::uint64_t stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + j * s[i - 1][j];
    return s[n][k];
}

std::uint64_t count_topologies(int n, Exec exec, bool allow_large) {
    if (n < 1) throw Unsupported("topology counts start at n = 1");
    check_cap(n, topology_count_cap, allow_large, "topology count size");
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k)
        total += stirling2(n, k) * count_labeled_posets(k, exec, allow_large);
    return total;
}

void stream_preorders(int n, const std::function<void(const Preorder&)>& sink,
                      bool allow_large) {
    if (n < 1) throw Unsupported("preorder enumeration starts at n = 1");
    check_cap(n, topology_count_cap, allow_large, "preorder enumeration size");
    // Restricted-growth strings enumerate set partitions in a stable order.
    std::vector<int> block(n, 0);
    auto emit = [&](int block_count) {
        stream_labeled_posets(block_count, [&](const Preorder& poset) {
            std::vector<std::uint64_t> rows(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (poset.leq(block[i], block[j])) rows[i] |= 1ull << j;
            sink(Preorder::from_rows(n, std::move(rows)));
        });
    };
    auto rgs = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == n) {
            emit(max_used + 1);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            block[pos] = b;
            self(self, pos + 1, std::max(max_used, b));
        }
    };
    rgs(rgs, 1, 0);  // element 0 always opens block 0
}

namespace {

// One-vertex extensions of a unit-weight poset class, canonicalized.
void class_extensions(const FiniteSpace& parent,
                      std::unordered_set<FiniteSpace, FiniteSpaceHash>& sink) {
    int k = parent.klass_count();
    LabeledPoset p;
    p.m = k;
    p.up.resize(k);
    p.down.resize(k);
    for (int i = 0; i < k; ++i) {
        p.up[i] = parent.upper_set(i) | (1ull << i);
        p.down[i] = parent.lower_set(i) | (1ull << i);
    }
    p.for_each_extension([&](std::uint64_t d, std::uint64_t u) {
        LabeledPoset q = p.extended(d, u);
        std::vector<int> w(k + 1, 1);
        std::vector<std::uint64_t> strict(k + 1);
        for (int i = 0; i <= k; ++i) strict[i] = q.up[i] & ~(1ull << i);
        sink.insert(FiniteSpace::canonical(std::move(w), std::move(strict)));
    });
}

std::vector<FiniteSpace> next_classes(const std::vector<FiniteSpace>& parents,
                                      Exec exec) {
    std::unordered_set<FiniteSpace, FiniteSpaceHash> dedup;
    if (exec == Exec::Serial) {
        for (const FiniteSpace& parent : parents) class_extensions(parent, dedup);
    } else {
        std::int64_t count = static_cast<std::int64_t>(parents.size());
#pragma omp parallel
        {
            std::unordered_set<FiniteSpace, FiniteSpaceHash> local;
#pragma omp for schedule(dynamic)
            for (std::int64_t i = 0; i < count; ++i) class_extensions(parents[i], local);
#pragma omp critical
            dedup.merge(local);
        }
    }
    std::vector<FiniteSpace> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<FiniteSpace> poset_classes(int k, Exec exec, bool allow_large) {
    check_cap(k, space_cap, allow_large, "poset class size");
    std::vector<FiniteSpace> level{FiniteSpace()};
    for (int m = 1; m <= k; ++m) level = next_classes(level, exec);
    return level;
}

std::vector<FiniteSpace> enumerate_spaces(int n, Exec exec, bool allow_large) {
    if (n < 1) throw Unsupported("space enumeration starts at n = 1");
    check_cap(n, space_cap, allow_large, "space size");
    std::unordered_set<FiniteSpace, FiniteSpaceHash> dedup;
    std::vector<FiniteSpace> shapes;
    std::vector<FiniteSpace> level{FiniteSpace()};
    for (int k = 1; k <= n; ++k) {
        level = next_classes(level, exec);
        shapes.insert(shapes.end(), level.begin(), level.end());
    }
    // Assign positive weights summing to n to each shape's classes.
    auto weightings = [&](const FiniteSpace& shape,
                          std::unordered_set<FiniteSpace, FiniteSpaceHash>& sink) {
        int k = shape.klass_count();
        std::vector<int> w(k, 1);
        std::vector<std::uint64_t> strict(k);
        for (int i = 0; i < k; ++i) strict[i] = shape.upper_set(i);
        int extra = n - k;
        auto assign = [&](auto&& self, int pos, int left) -> void {
            if (pos == k - 1) {
                w[pos] = 1 + left;
                sink.insert(FiniteSpace::canonical(w, strict));
                return;
            }
            for (int take = 0; take <= left; ++take) {
                w[pos] = 1 + take;
                self(self, pos + 1, left - take);
            }
        };
        if (k > 0) assign(assign, 0, extra);
    };
    if (exec == Exec::Serial) {
        for (const FiniteSpace& shape : shapes) weightings(shape, dedup);
    } else {
        std::int64_t count = static_cast<std::int64_t>(shapes.size());
#pragma omp parallel
        {
            std::unordered_set<FiniteSpace, FiniteSpaceHash> local;
#pragma omp for schedule(dynamic)
            for (std::int64_t i = 0; i < count; ++i) weightings(shapes[i], local);
#pragma omp critical
            dedup.merge(local);
        }
    }
    std::vector<FiniteSpace> out(dedup.begin(), dedup.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected_space(const FiniteSpace& x) {
    return !x.empty() && decompose_connected(x).size() == 1;
}

bool is_join_indecomposable(const FiniteSpace& x) {
    return !x.empty() && join_factors(x).size() == 1;
}

bool is_irreducible(const FiniteSpace& x) {
    return is_connected_space(x) && is_join_indecomposable(x);
}

FamilyCounts count_families(int n, Exec exec, bool allow_large) {
    FamilyCounts out;
    for (const FiniteSpace& x : enumerate_spaces(n, exec, allow_large)) {
        bool conn = is_connected_space(x);
        bool indec = is_join_indecomposable(x);
        if (conn) ++out.connected;
        if (indec) ++out.join_indecomposable;
        if (conn && indec) ++out.irreducible;
    }
    return out;
}

}  // namespace fintop
