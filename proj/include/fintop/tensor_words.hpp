#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/scalar.hpp"

namespace fintop {

/// Letter of a graded alphabet: an identity plus a positive degree.
struct Letter {
    char id;
    int degree;

    auto operator<=>(const Letter&) const = default;
};

using GradedWord = std::vector<Letter>;  // empty word allowed, degree 0

int word_degree(const GradedWord& w);
std::string word_string(const GradedWord& w);  // "a:1 b:2", "1" for the empty word

/// Linear combination of words with Scalar coefficients.
class TensorElement {
public:
    TensorElement() = default;
    static TensorElement basis(const GradedWord& w) { return monomial(w, Scalar(1)); }
    static TensorElement unit() { return basis({}); }
    static TensorElement monomial(const GradedWord& w, const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const GradedWord& w) const;
    void add(const GradedWord& w, const Scalar& c);

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) {
        return lhs += rhs;
    }
    friend TensorElement operator-(TensorElement lhs, const TensorElement& rhs) {
        return lhs -= rhs;
    }
    TensorElement scaled(const Scalar& c) const;

    bool operator==(const TensorElement& rhs) const { return terms_ == rhs.terms_; }

    const std::map<GradedWord, Scalar>& terms() const { return terms_; }

private:
    std::map<GradedWord, Scalar> terms_;
};

using WordTensor2 = std::map<std::pair<GradedWord, GradedWord>, Scalar>;

void tensor2_add(WordTensor2& t, const GradedWord& a, const GradedWord& b,
                 const Scalar& c);
WordTensor2 tensor2_switch(const WordTensor2& t);  // swaps the two legs

TensorElement concat(const TensorElement& a, const TensorElement& b);
WordTensor2 deconcat(const TensorElement& a);

/// Shuffle product and its two half-operations. The halves follow the unit
/// conventions x<1 = x, 1<x = 0 (and mirrored for >); 1<1 and 1>1 raise
/// UnitNotAllowed.
TensorElement shuffle(const TensorElement& a, const TensorElement& b);
TensorElement half_shuffle_left(const TensorElement& a, const TensorElement& b);
TensorElement half_shuffle_right(const TensorElement& a, const TensorElement& b);

/// Unshuffle coproduct and its halves; the halves reject empty words.
WordTensor2 unshuffle(const TensorElement& a);
WordTensor2 half_unshuffle_left(const TensorElement& a);
WordTensor2 half_unshuffle_right(const TensorElement& a);

/// Operator permuting letters of words of one fixed length and degree
/// profile, zero elsewhere.
struct GradedPermutation {
    std::vector<int> sigma;    // permutation of {0,..,k-1}
    std::vector<int> degrees;  // required degree of the letter moved to slot i

    int k() const { return static_cast<int>(sigma.size()); }
    bool operator==(const GradedPermutation&) const = default;
};

TensorElement apply_graded_perm(const GradedPermutation& p, const TensorElement& a);

/// Operator composition: apply r first, then p. Returns the composed
/// operator, or nullopt for the zero operator.
std::optional<GradedPermutation> compose_graded_perms(const GradedPermutation& p,
                                                      const GradedPermutation& r);

/// Endomorphisms of the tensor space, for the operator-level identities.
using WordEndo = std::function<TensorElement(const GradedWord&)>;

TensorElement apply_endo(const WordEndo& f, const TensorElement& a);
WordEndo endo_identity();
WordEndo endo_counit();            // projection to the empty-word component
WordEndo endo_letter_projection();  // projection to single letters
WordEndo endo_half_prec(const WordEndo& f, const WordEndo& g);
WordEndo endo_half_succ(const WordEndo& f, const WordEndo& g);
WordEndo endo_shuffle_of(const WordEndo& f, const WordEndo& g);

}  // namespace fintop
