#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fintop/space_algebra.hpp"

namespace fintop {

/// Composition: finite sequence of positive parts; empty allowed.
using Composition = std::vector<int>;

int composition_degree(const Composition& a);

/// Term order for printed output: degree, then length, then lexicographic.
struct CompositionOrder {
    bool operator()(const Composition& a, const Composition& b) const;
};

/// Linear combination of monomial-basis elements M_a.
class QSymElement {
public:
    QSymElement() = default;
    static QSymElement basis(const Composition& a) { return monomial(a, Scalar(1)); }
    static QSymElement monomial(const Composition& a, const Scalar& c);
    static QSymElement unit() { return basis({}); }

    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Composition& a) const;
    void add(const Composition& a, const Scalar& c);

    QSymElement operator-() const;
    QSymElement& operator+=(const QSymElement& rhs);
    QSymElement& operator-=(const QSymElement& rhs);
    friend QSymElement operator+(QSymElement lhs, const QSymElement& rhs) {
        return lhs += rhs;
    }
    friend QSymElement operator-(QSymElement lhs, const QSymElement& rhs) {
        return lhs -= rhs;
    }
    QSymElement scaled(const Scalar& c) const;

    bool operator==(const QSymElement& rhs) const { return terms_ == rhs.terms_; }

    const std::map<Composition, Scalar, CompositionOrder>& terms() const {
        return terms_;
    }

private:
    std::map<Composition, Scalar, CompositionOrder> terms_;
};

using QSymTensor = std::map<std::pair<Composition, Composition>, Scalar>;

/// Ordered level partition of the classes of a space; prefix unions are
/// down-sets of the class order. Encodes a standard linear extension.
struct LevelPartition {
    std::vector<std::uint64_t> levels;  // class masks, level 1 first

    bool operator==(const LevelPartition& rhs) const = default;
    bool operator<(const LevelPartition& rhs) const { return levels < rhs.levels; }
};

/// All standard linear extensions, by recursive peeling of nonempty
/// down-sets. Complete and duplicate-free; deterministic order.
std::vector<LevelPartition> standard_linear_extensions(const FiniteSpace& x);

/// Labeled variant on a preorder; levels are element masks.
std::vector<std::vector<std::uint64_t>> standard_linear_extensions(const Preorder& p);

/// Number of strict point pairs sharing a level under f.
Int alpha(const FiniteSpace& x, const LevelPartition& f);

/// Level sizes (total weight per level), as a composition.
Composition packing(const FiniteSpace& x, const LevelPartition& f);

/// Morphism to quasi-symmetric functions: sum of q^alpha(f) M_P(f) over
/// standard linear extensions, extended linearly.
QSymElement phi_q(const FVector& a);
QSymElement phi_q_basis(const FiniteSpace& x);

/// Overlapping-shuffle product of monomial elements.
QSymElement qsym_product(const QSymElement& a, const QSymElement& b);

/// Deconcatenation coproduct.
QSymTensor qsym_coproduct(const QSymElement& a);

/// Concatenate-or-merge product: M_a >_q M_b is the concatenation plus
/// q^(a_k b_1) times the version with the adjacent parts merged.
QSymElement succ_q(const QSymElement& a, const QSymElement& b);

/// Polynomial in x_1..x_m with Scalar coefficients, as exponent vectors.
using TruncatedPoly = std::map<std::vector<int>, Scalar>;

/// Truncation of the defining series to m variables.
TruncatedPoly expand_polynomial(const QSymElement& a, int m);
TruncatedPoly poly_multiply(const TruncatedPoly& a, const TruncatedPoly& b);

/// Character sending M_a to 1 when a has at most one part, else 0.
Scalar zeta_qsym(const QSymElement& a);

}  // namespace fintop
