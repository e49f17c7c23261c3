#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fintop/finite_space.hpp"

namespace fintop {

/// Simplicial complex given by its facets (maximal faces), each a sorted
/// vertex list; facets are pairwise non-contained.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> facets;

    bool operator==(const SimplicialComplex& rhs) const = default;
};

struct BeatPoints {
    std::uint64_t up_beats = 0;    // classes whose strict up-set has a minimum
    std::uint64_t down_beats = 0;  // classes whose strict down-set has a maximum
};

/// Requires a T0 space (all weights 1); throws NotT0 otherwise.
BeatPoints beat_points(const FiniteSpace& x);

/// Same on a labeled preorder, which must be a partial order; masks use the
/// input labels.
BeatPoints beat_points(const Preorder& p);

/// T0 quotient, then repeated beat point removal until none remain.
/// Canonical and idempotent; the result class is labeling-independent.
FiniteSpace core(const FiniteSpace& x);

/// Variant removing beat points in an order driven by `rng`; the resulting
/// canonical form does not depend on the order.
FiniteSpace core_randomized(const FiniteSpace& x, std::mt19937_64& rng);

bool homotopy_equivalent(const FiniteSpace& x, const FiniteSpace& y);

/// Complex of nonempty chains of the class order; facets are maximal chains.
SimplicialComplex order_complex(const FiniteSpace& x);

/// Alternating face count of the order complex; 0 for the empty space.
Int euler_characteristic(const FiniteSpace& x);

}  // namespace fintop
