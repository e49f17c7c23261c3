#include "fintop/scalar.hpp"

#include <sstream>

namespace fintop {

Scalar::Scalar(Int constant) {
    if (constant != 0) coeffs_[0] = constant;
}

Scalar Scalar::q() { return q_pow(1); }

Scalar Scalar::q_pow(int exp) { return monomial(1, exp); }

Scalar Scalar::monomial(Int coeff, int exp) {
    Scalar s;
    if (coeff != 0) s.coeffs_[exp] = coeff;
    return s;
}

bool Scalar::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
}

int Scalar::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Int Scalar::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) {
        Int v = (coeffs_[e] += c);
        if (v == 0) coeffs_.erase(e);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) {
        Int v = (coeffs_[e] -= c);
        if (v == 0) coeffs_.erase(e);
    }
    return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    Scalar out;
    for (const auto& [ea, ca] : lhs.coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) {
            Int v = (out.coeffs_[ea + eb] += ca * cb);
            if (v == 0) out.coeffs_.erase(ea + eb);
        }
    return out;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    *this = *this * rhs;
    return *this;
}

Rational Scalar::eval(const Rational& q) const {
    // Horner over the sparse exponent list, highest power first.
    Rational acc(0);
    int prev_exp = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_exp >= 0) {
            for (int i = it->first; i < prev_exp; ++i) acc *= q;
        }
        acc += Rational(it->second);
        prev_exp = it->first;
    }
    if (prev_exp > 0) {
        for (int i = 0; i < prev_exp; ++i) acc *= q;
    }
    return acc;
}

std::string Scalar::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int mag = c;
        if (first) {
            if (c < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            mag = c < 0 ? -c : c;
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'q';
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace fintop
