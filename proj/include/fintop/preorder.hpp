#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fintop {

/// Reflexive transitive relation on {0,..,n-1}, one row bitmask per element:
/// row(i) bit j set  <=>  i <= j. Ground sets are capped at 64 elements.
class Preorder {
public:
    static constexpr int max_size = 64;

    Preorder() = default;
    explicit Preorder(int n);  // discrete relation (equality only)

    /// Builds from row bitmasks; validates reflexivity and transitivity.
    static Preorder from_rows(int n, std::vector<std::uint64_t> rows);

    /// Builds from an arbitrary relation, closing reflexively and transitively.
    static Preorder closure_of(int n, std::vector<std::uint64_t> rows);

    int size() const { return n_; }
    bool leq(int i, int j) const { return (rows_[i] >> j) & 1u; }
    bool equivalent(int i, int j) const { return leq(i, j) && leq(j, i); }
    std::uint64_t up_row(int i) const { return rows_[i]; }
    std::uint64_t ground_mask() const;

    /// Up-closure of a single element: the minimal open set containing it.
    std::uint64_t minimal_open(int x) const;

    /// All up-sets, as element bitmasks sorted by characteristic vector
    /// (element 0 is the most significant character).
    std::vector<std::uint64_t> open_set_masks() const;

    bool is_open(std::uint64_t subset) const;

    /// Induced relation on the elements of `subset`, relabeled to
    /// {0,..,|subset|-1} preserving the numeric order of kept labels.
    Preorder restrict(std::uint64_t subset) const;

    /// Opposite relation (transpose).
    Preorder dual() const;

    bool operator==(const Preorder& rhs) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Reconstructs the preorder whose up-sets are exactly `family` on {0..n-1}.
/// Throws NotATopology (with a witness) if the family is not a topology.
Preorder from_open_sets(int n, const std::vector<std::uint64_t>& family);

/// Characteristic-vector string of a subset ("0101..."), element 0 first.
std::string subset_string(std::uint64_t subset, int n);

}  // namespace fintop
