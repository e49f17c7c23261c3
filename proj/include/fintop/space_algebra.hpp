#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "fintop/finite_space.hpp"
#include "fintop/scalar.hpp"

namespace fintop {

/// Finite formal linear combination of finite spaces with polynomial
/// coefficients. No zero terms are stored; terms iterate in
/// (size, canonical encoding) order.
class FVector {
public:
    FVector() = default;
    static FVector basis(const FiniteSpace& x) { return monomial(x, Scalar(1)); }
    static FVector unit() { return basis(FiniteSpace()); }
    static FVector monomial(const FiniteSpace& x, const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const FiniteSpace& x) const;
    void add(const FiniteSpace& x, const Scalar& c);

    FVector operator-() const;
    FVector& operator+=(const FVector& rhs);
    FVector& operator-=(const FVector& rhs);
    friend FVector operator+(FVector lhs, const FVector& rhs) { return lhs += rhs; }
    friend FVector operator-(FVector lhs, const FVector& rhs) { return lhs -= rhs; }
    FVector scaled(const Scalar& c) const;

    bool operator==(const FVector& rhs) const { return terms_ == rhs.terms_; }

    const std::map<FiniteSpace, Scalar>& terms() const { return terms_; }

private:
    std::map<FiniteSpace, Scalar> terms_;
};

/// Element of the tensor square, keyed by ordered pairs of basis spaces.
class FTensor {
public:
    FTensor() = default;
    static FTensor basis(const FiniteSpace& a, const FiniteSpace& b);

    bool is_zero() const { return terms_.empty(); }
    void add(const FiniteSpace& a, const FiniteSpace& b, const Scalar& c);
    FTensor& operator+=(const FTensor& rhs);
    FTensor& operator-=(const FTensor& rhs);
    friend FTensor operator+(FTensor lhs, const FTensor& rhs) { return lhs += rhs; }
    friend FTensor operator-(FTensor lhs, const FTensor& rhs) { return lhs -= rhs; }

    bool operator==(const FTensor& rhs) const { return terms_ == rhs.terms_; }

    const std::map<std::pair<FiniteSpace, FiniteSpace>, Scalar>& terms() const {
        return terms_;
    }

private:
    std::map<std::pair<FiniteSpace, FiniteSpace>, Scalar> terms_;
};

using FTensor3 = std::map<std::tuple<FiniteSpace, FiniteSpace, FiniteSpace>, Scalar>;

// Basis-level products, computed on standard representatives with the label
// shift of the second factor, then re-canonicalized.
FiniteSpace space_product(const FiniteSpace& x, const FiniteSpace& y);  // disjoint sum
FiniteSpace space_join(const FiniteSpace& x, const FiniteSpace& y);     // x below y

FVector product_sum(const FVector& a, const FVector& b);
FVector product_join(const FVector& a, const FVector& b);

/// Open-set extraction coproduct: sum over opens O of rest ⊗ part-over-O.
FTensor coproduct(const FVector& a);
FTensor coproduct_basis(const FiniteSpace& x);

Scalar counit(const FVector& a);

/// Antipode of the commutative Hopf structure, by the graded recursion
/// S(x) = -x - sum S(x') . x'' over the reduced coproduct.
FVector antipode(const FVector& a);

/// q^(number of strict point pairs), extended linearly.
Scalar zeta_q(const FVector& a);

/// Connected components under the comparability relation, as a sorted
/// multiset; their sum-product recovers the space.
std::vector<FiniteSpace> decompose_connected(const FiniteSpace& x);

/// Unique maximal factorization x = x1 > x2 > ... > xm into
/// join-indecomposables, bottom factor first.
std::vector<FiniteSpace> join_factors(const FiniteSpace& x);

// Componentwise operations on tensors, used by the compatibility checks.
FTensor tensor_product_sum(const FTensor& a, const FTensor& b);
FTensor tensor_product_join(const FTensor& a, const FTensor& b);
FTensor3 coproduct_left(const FTensor& t);   // applies the coproduct to the left leg
FTensor3 coproduct_right(const FTensor& t);  // applies it to the right leg

}  // namespace fintop
