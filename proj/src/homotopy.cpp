#include "fintop/homotopy.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

// Mutable T0 poset under reduction: rows of the strict order with stable
// labels, plus the mask of surviving vertices.
struct ReductionState {
    int k;
    std::vector<std::uint64_t> above;  // above[i]: strict up-set of i
    std::uint64_t alive;

    explicit ReductionState(const FiniteSpace& x)
        : ReductionState(x.klass_count(), {}) {
        for (int i = 0; i < k; ++i) above[i] = x.upper_set(i);
    }

    ReductionState(int k, std::vector<std::uint64_t> rows)
        : k(k), above(std::move(rows)), alive(k == 64 ? ~0ull : (1ull << k) - 1) {
        above.resize(k);
    }

    std::uint64_t below(int j) const {
        std::uint64_t out = 0;
        for (int i = 0; i < k; ++i)
            if (((alive >> i) & 1u) && ((above[i] >> j) & 1u)) out |= 1ull << i;
        return out;
    }

    // x is a beat point if its strict up-set has a minimum or its strict
    // down-set has a maximum (among surviving vertices).
    bool is_up_beat(int x) const {
        std::uint64_t up = above[x] & alive;
        if (!up) return false;
        for (int y = 0; y < k; ++y)
            if ((up >> y) & 1u)
                if ((up & ~(1ull << y)) == (up & above[y])) return true;
        return false;
    }

    bool is_down_beat(int x) const {
        std::uint64_t down = below(x) & alive;
        if (!down) return false;
        for (int y = 0; y < k; ++y)
            if ((down >> y) & 1u)
                if ((down & ~(1ull << y)) == (down & below(y))) return true;
        return false;
    }

    std::vector<int> beat_points() const {
        std::vector<int> out;
        for (int x = 0; x < k; ++x)
            if ((alive >> x) & 1u)
                if (is_up_beat(x) || is_down_beat(x)) out.push_back(x);
        return out;
    }

    FiniteSpace to_space() const {
        std::vector<int> kept;
        for (int i = 0; i < k; ++i)
            if ((alive >> i) & 1u) kept.push_back(i);
        std::vector<int> w(kept.size(), 1);
        std::vector<std::uint64_t> strict(kept.size(), 0);
        for (std::size_t a = 0; a < kept.size(); ++a)
            for (std::size_t b = 0; b < kept.size(); ++b)
                if ((above[kept[a]] >> kept[b]) & 1u) strict[a] |= 1ull << b;
        return FiniteSpace::canonical(std::move(w), std::move(strict));
    }
};

FiniteSpace t0_quotient(const FiniteSpace& x) {
    std::vector<int> w(x.klass_count(), 1);
    std::vector<std::uint64_t> strict(x.klass_count());
    for (int i = 0; i < x.klass_count(); ++i) strict[i] = x.upper_set(i);
    return FiniteSpace::canonical(std::move(w), std::move(strict));
}

template <typename PickBeat>
FiniteSpace reduce_to_core(const FiniteSpace& x, PickBeat pick) {
    ReductionState state(t0_quotient(x));
    for (;;) {
        std::vector<int> beats = state.beat_points();
        if (beats.empty()) break;
        state.alive &= ~(1ull << pick(beats));
    }
    return state.to_space();
}

}  // namespace

BeatPoints beat_points(const FiniteSpace& x) {
    if (!x.is_t0()) throw NotT0("beat points are defined on T0 spaces");
    ReductionState state(x);
    BeatPoints out;
    for (int i = 0; i < state.k; ++i) {
        if (state.is_up_beat(i)) out.up_beats |= 1ull << i;
        if (state.is_down_beat(i)) out.down_beats |= 1ull << i;
    }
    return out;
}

BeatPoints beat_points(const Preorder& p) {
    int n = p.size();
    std::vector<std::uint64_t> strict(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !p.leq(i, j)) continue;
            if (p.leq(j, i)) throw NotT0("preorder is not a partial order");
            strict[i] |= 1ull << j;
        }
    // Masks refer to the input labels, so skip canonicalization.
    ReductionState state(n, std::move(strict));
    BeatPoints out;
    for (int i = 0; i < n; ++i) {
        if (state.is_up_beat(i)) out.up_beats |= 1ull << i;
        if (state.is_down_beat(i)) out.down_beats |= 1ull << i;
    }
    return out;
}

FiniteSpace core(const FiniteSpace& x) {
    return reduce_to_core(x, [](const std::vector<int>& beats) { return beats.front(); });
}

FiniteSpace core_randomized(const FiniteSpace& x, std::mt19937_64& rng) {
    return reduce_to_core(x, [&rng](const std::vector<int>& beats) {
        std::uniform_int_distribution<std::size_t> pick(0, beats.size() - 1);
        return beats[pick(rng)];
    });
}

bool homotopy_equivalent(const FiniteSpace& x, const FiniteSpace& y) {
    return core(x) == core(y);
}

SimplicialComplex order_complex(const FiniteSpace& x) {
    SimplicialComplex out;
    int k = x.klass_count();
    out.vertex_count = k;
    // Maximal chains are saturated bottom-to-top paths in the cover graph.
    std::vector<std::vector<int>> cover_up(k);
    for (auto [lo, hi] : x.covers()) cover_up[lo].push_back(hi);

    std::vector<int> chain;
    auto extend = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        if (cover_up[v].empty()) {
            out.facets.push_back(chain);
        } else {
            for (int w : cover_up[v]) self(self, w);
        }
        chain.pop_back();
    };
    for (int v = 0; v < k; ++v)
        if (x.lower_set(v) == 0) extend(extend, v);
    for (auto& f : out.facets) std::sort(f.begin(), f.end());
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

Int euler_characteristic(const FiniteSpace& x) {
    int k = x.klass_count();
    // Signed count over nonempty chains: a d-face contributes (-1)^d.
    std::vector<std::uint64_t> above(k);
    for (int i = 0; i < k; ++i) above[i] = x.upper_set(i);
    Int total = 0;
    auto walk = [&](auto&& self, int last, int sign) -> void {
        total += sign;
        std::uint64_t next = above[last];
        for (int v = 0; v < k; ++v)
            if ((next >> v) & 1u) self(self, v, -sign);
    };
    for (int v = 0; v < k; ++v) walk(walk, v, 1);
    return total;
}

}  // namespace fintop
