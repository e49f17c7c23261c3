#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fintop/preorder.hpp"

namespace fintop {

using Int = std::int64_t;

/// Homeomorphism class of a finite topology: a weighted poset in canonical
/// labeling. Classes are 0-based internally; weights are the class
/// cardinalities and `less(i,j)` is the strict order on classes.
///
/// The labeling is canonical by construction: among all relabelings it
/// minimizes (weight list, strict-order bits), so two inputs produce equal
/// objects exactly when they are isomorphic as weighted posets. Minimal
/// classes sort first; the worked 2-chain encodes as w=(1,1) with class 0
/// below class 1.
class FiniteSpace {
public:
    FiniteSpace() = default;  // the empty space, the unit

    /// Canonicalizing factory. `strict[i]` bit j set means class i strictly
    /// below class j, in any labeling; weights are per-class cardinalities.
    /// Validates weights >= 1, irreflexivity and transitivity.
    static FiniteSpace canonical(std::vector<int> weights,
                                 std::vector<std::uint64_t> strict);

    /// Weighted poset given by covering pairs (lo below hi), 0-based.
    static FiniteSpace from_covers(std::vector<int> weights,
                                   const std::vector<std::pair<int, int>>& covers);

    static FiniteSpace point() { return from_covers({1}, {}); }
    static FiniteSpace chain(const std::vector<int>& weights);
    static FiniteSpace antichain(const std::vector<int>& weights);
    /// Minimal 4-point model of the circle: two bottoms, two tops.
    static FiniteSpace circle_model();
    /// Minimal 2n+2 point model of the n-sphere: (n+1) levels of two.
    static FiniteSpace sphere_model(int dim);

    int klass_count() const { return static_cast<int>(weights_.size()); }
    int size() const;  // total number of points
    bool empty() const { return weights_.empty(); }
    int weight(int i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    bool less(int i, int j) const { return (strict_[i] >> j) & 1u; }
    std::uint64_t upper_set(int i) const { return strict_[i]; }  // classes above i
    std::uint64_t lower_set(int j) const;                        // classes below j
    bool is_t0() const;

    /// Covering pairs (lo, hi) of the class order, sorted.
    std::vector<std::pair<int, int>> covers() const;

    /// Induced subspace on a class subset, re-canonicalized.
    FiniteSpace restrict_classes(std::uint64_t class_mask) const;

    /// Number of strict point pairs: sum of w(i)*w(j) over i < j classes.
    Int strict_pair_count() const;

    bool operator==(const FiniteSpace& rhs) const = default;
    /// Total order: by size, then canonical encoding.
    bool operator<(const FiniteSpace& rhs) const;

    std::size_t hash() const;

private:
    std::vector<int> weights_;
    std::vector<std::uint64_t> strict_;
};

struct FiniteSpaceHash {
    std::size_t operator()(const FiniteSpace& x) const { return x.hash(); }
};

/// Quotient by the equivalence i~j followed by canonical relabeling.
/// Relabeling-invariant: permuted preorders canonicalize identically.
FiniteSpace canonicalize(const Preorder& p);

/// Standard labeled representative: classes in canonical order, consecutive
/// integer labels per class. canonicalize(expand(x)) == x.
Preorder expand(const FiniteSpace& x);

/// Order reversal, re-canonicalized. An involution.
FiniteSpace dual(const FiniteSpace& x);

}  // namespace fintop
