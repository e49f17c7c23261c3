#include <map>
#include <tuple>
#include <vector>
#include "doctest.h"
#include "fintop/checks.hpp"
#include "fintop/errors.hpp"
#include "fintop/tensor_words.hpp"

using namespace fintop;

namespace {

const Letter A{'a', 1};
const Letter B{'b', 1};
const Letter C{'c', 2};

TensorElement word(std::initializer_list<Letter> letters) {
    return TensorElement::basis(GradedWord(letters));
}

}  // namespace

TEST_CASE("concatenation and deconcatenation") {
    CHECK(concat(word({A}), word({B})) == word({A, B}));
    CHECK(concat(TensorElement::unit(), word({A, C})) == word({A, C}));
    CHECK(concat(word({A}) + word({B}), word({C})) == word({A, C}) + word({B, C}));

    WordTensor2 d = deconcat(word({A, B}));
    CHECK(d.size() == 3);
    CHECK(d.at({GradedWord{}, GradedWord{A, B}}) == Scalar(1));
    CHECK(d.at({GradedWord{A}, GradedWord{B}}) == Scalar(1));
    CHECK(d.at({GradedWord{A, B}, GradedWord{}}) == Scalar(1));
}

TEST_CASE("shuffles") {
    CHECK(shuffle(word({A}), word({B})) == word({A, B}) + word({B, A}));
    CHECK(half_shuffle_left(word({A}), word({B})) == word({A, B}));
    CHECK(half_shuffle_right(word({A}), word({B})) == word({B, A}));
    // x shuffled with itself doubles the diagonal
    CHECK(shuffle(word({A}), word({A})) == word({A, A}).scaled(Scalar(2)));
    // unit conventions
    CHECK(half_shuffle_left(word({A}), TensorElement::unit()) == word({A}));
    CHECK(half_shuffle_left(TensorElement::unit(), word({A})).is_zero());
    CHECK(half_shuffle_right(TensorElement::unit(), word({A})) == word({A}));
    CHECK(half_shuffle_right(word({A}), TensorElement::unit()).is_zero());
    CHECK_THROWS_AS(half_shuffle_left(TensorElement::unit(), TensorElement::unit()),
                    UnitNotAllowed);
    CHECK_THROWS_AS(half_shuffle_right(TensorElement::unit(), TensorElement::unit()),
                    UnitNotAllowed);
}

TEST_CASE("letter-level half shuffle associativity") {
    for (const Letter& x : {A, B, C})
        for (const Letter& y : {A, B, C})
            for (const Letter& z : {A, B, C}) {
                TensorElement lhs =
                    half_shuffle_left(half_shuffle_left(word({x}), word({y})), word({z}));
                TensorElement rhs =
                    half_shuffle_left(word({x}), shuffle(word({y}), word({z})));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("deconcatenation is coassociative to length four") {
    std::vector<GradedWord> words{{}};
    std::vector<GradedWord> level{{}};
    for (int l = 1; l <= 4; ++l) {
        std::vector<GradedWord> next;
        for (const GradedWord& w : level)
            for (const Letter& letter : {A, B, C}) {
                GradedWord e = w;
                e.push_back(letter);
                next.push_back(e);
            }
        words.insert(words.end(), next.begin(), next.end());
        level = std::move(next);
    }
    using Key = std::tuple<GradedWord, GradedWord, GradedWord>;
    for (const GradedWord& w : words) {
        std::map<Key, Scalar> lhs, rhs;
        for (const auto& [k, c] : deconcat(TensorElement::basis(w))) {
            for (const auto& [kk, cc] : deconcat(TensorElement::basis(k.first))) {
                Scalar v = (lhs[{kk.first, kk.second, k.second}] += c * cc);
                if (v.is_zero()) lhs.erase({kk.first, kk.second, k.second});
            }
            for (const auto& [kk, cc] : deconcat(TensorElement::basis(k.second))) {
                Scalar v = (rhs[{k.first, kk.first, kk.second}] += c * cc);
                if (v.is_zero()) rhs.erase({k.first, kk.first, kk.second});
            }
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("unshuffles") {
    WordTensor2 d = unshuffle(word({A}));
    CHECK(d.size() == 2);
    WordTensor2 dl = half_unshuffle_left(word({A, B}));
    CHECK(dl.size() == 2);
    CHECK(dl.at({GradedWord{A, B}, GradedWord{}}) == Scalar(1));
    CHECK(dl.at({GradedWord{A}, GradedWord{B}}) == Scalar(1));
    CHECK_THROWS_AS(half_unshuffle_left(TensorElement::unit()), EmptyWord);
    CHECK_THROWS_AS(half_unshuffle_right(TensorElement::unit()), EmptyWord);
    CHECK(unshuffle(TensorElement::unit()).size() == 1);
}

TEST_CASE("graded permutations act by degree profile") {
    GradedPermutation identity{{0, 1}, {1, 1}};
    CHECK(apply_graded_perm(identity, word({A, B})) == word({A, B}));
    // degree profile mismatch kills the term
    CHECK(apply_graded_perm(identity, word({A, C})).is_zero());
    // length mismatch kills the term
    CHECK(apply_graded_perm(identity, word({A})).is_zero());

    GradedPermutation swap{{1, 0}, {2, 1}};  // expects degrees (2,1) after the move
    CHECK(apply_graded_perm(swap, word({A, C})) == word({C, A}));

    GradedPermutation with_identity{{0, 1}, {1, 2}};
    auto composed = compose_graded_perms(with_identity, with_identity);
    REQUIRE(composed.has_value());
    CHECK(*composed == with_identity);

    GradedPermutation other{{0, 1}, {2, 2}};
    CHECK_FALSE(compose_graded_perms(with_identity, other).has_value());
}

TEST_CASE("single-letter projection sums to the identity on letters") {
    WordEndo pi = endo_letter_projection();
    WordEndo eps = endo_counit();
    for (const Letter& l : {A, B, C}) {
        GradedWord w{l};
        CHECK(eps(w) + pi(w) == TensorElement::basis(w));
    }
}

TEST_CASE("tensor suite passes at moderate length") {
    CheckReport report = check_tensor(4, Exec::Serial);
    for (const CheckResult& r : report.results) {
        INFO(r.name, ": ", r.counterexample);
        CHECK(r.passed);
    }
}

TEST_CASE("word text forms") {
    CHECK(word_string({A, B, C}) == "a:1 b:1 c:2");
    CHECK(word_string({}) == "1");
    CHECK(word_degree({A, B, C}) == 4);
}
