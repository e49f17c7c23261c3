#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fintop/exec.hpp"
#include "fintop/finite_space.hpp"

namespace fintop {

// Default size caps. Enumeration refuses larger inputs unless allow_large
// is set; the caps keep default runtimes in seconds.
inline constexpr int labeled_poset_cap = 7;
inline constexpr int topology_count_cap = 6;
inline constexpr int space_cap = 7;
inline constexpr int large_cap = 8;

/// Number of partial orders on a labeled k-set, by one-element extensions.
std::uint64_t count_labeled_posets(int k, Exec exec = Exec::Parallel,
                                   bool allow_large = false);

/// Streams every labeled poset on [k] (as a Preorder) in a fixed order.
void stream_labeled_posets(int k, const std::function<void(const Preorder&)>& sink,
                           bool allow_large = false);

/// Number of topologies on a labeled n-set: sum over class counts k of
/// S(n,k) times the labeled poset count on [k].
std::uint64_t count_topologies(int n, Exec exec = Exec::Parallel,
                               bool allow_large = false);

/// Streams every preorder on [n] (set partition plus poset on the blocks).
void stream_preorders(int n, const std::function<void(const Preorder&)>& sink,
                      bool allow_large = false);

/// Isomorphism classes of k-vertex posets (unit weights), sorted.
std::vector<FiniteSpace> poset_classes(int k, Exec exec = Exec::Parallel,
                                       bool allow_large = false);

/// All homeomorphism classes of n-point spaces, sorted by canonical encoding.
std::vector<FiniteSpace> enumerate_spaces(int n, Exec exec = Exec::Parallel,
                                          bool allow_large = false);

bool is_connected_space(const FiniteSpace& x);
bool is_join_indecomposable(const FiniteSpace& x);
bool is_irreducible(const FiniteSpace& x);

struct FamilyCounts {
    std::uint64_t connected = 0;
    std::uint64_t join_indecomposable = 0;
    std::uint64_t irreducible = 0;
};

/// Counts of connected / join-indecomposable / irreducible spaces of size n.
FamilyCounts count_families(int n, Exec exec = Exec::Parallel,
                            bool allow_large = false);

/// Stirling numbers of the second kind, S(n,k).
std::uint64_t stirling2(int n, int k);

}  // namespace fintop
