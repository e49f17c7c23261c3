#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>

namespace fintop {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Polynomial in the formal parameter q with exact integer coefficients.
/// The zero polynomial stores no terms; nonzero coefficients only.
class Scalar {
public:
    Scalar() = default;
    Scalar(Int constant);  // NOLINT: implicit by design, integers embed as constants

    static Scalar q();               // the variable itself
    static Scalar q_pow(int exp);    // q^exp
    static Scalar monomial(Int coeff, int exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const;  // -1 for the zero polynomial
    Int coeff(int exp) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);

    bool operator==(const Scalar& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
    bool operator<(const Scalar& rhs) const { return coeffs_ < rhs.coeffs_; }

    /// Evaluate at a rational value of q. Lossy: the symbolic form is gone.
    Rational eval(const Rational& q) const;

    const std::map<int, Int>& terms() const { return coeffs_; }

    std::string to_string() const;

private:
    std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace fintop
