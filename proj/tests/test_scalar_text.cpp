#include <random>

#include "doctest.h"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/text_format.hpp"

using namespace fintop;

TEST_CASE("scalar arithmetic") {
    Scalar q = Scalar::q();
    Scalar p = Scalar(1) + Scalar(2) * q;          // 1 + 2q
    Scalar r = (p * p) - Scalar(4) * q * q;        // 1 + 4q
    CHECK(r == Scalar(1) + Scalar(4) * q);
    CHECK((p - p).is_zero());
    CHECK(Scalar(1).is_one());
    CHECK(Scalar::q_pow(3).degree() == 3);
    CHECK((-p).coeff(1) == -2);
}

TEST_CASE("scalar evaluation at rationals") {
    Scalar p = Scalar(1) + Scalar(2) * Scalar::q() + Scalar::q_pow(3);
    CHECK(p.eval(Rational(0)) == Rational(1));
    CHECK(p.eval(Rational(1)) == Rational(4));
    CHECK(p.eval(Rational(1, 2)) == Rational(1) + Rational(1) + Rational(1, 8));
    CHECK(Scalar().eval(Rational(7, 3)) == Rational(0));
}

TEST_CASE("scalar text forms") {
    CHECK(Scalar().to_string() == "0");
    CHECK(Scalar(-3).to_string() == "-3");
    CHECK(Scalar::q().to_string() == "q");
    CHECK((Scalar(1) + Scalar(2) * Scalar::q()).to_string() == "1 + 2*q");
    CHECK((Scalar::q_pow(2) - Scalar(1)).to_string() == "-1 + q^2");
    CHECK((-Scalar::q()).to_string() == "-q");
    for (const char* text : {"0", "-3", "q", "1 + 2*q", "-1 + q^2", "5*q^4", "-q"})
        CHECK(to_text(parse_scalar(text)) == text);
}

TEST_CASE("scalar parse/print round trip, randomized") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> exp_count(0, 4);
    for (int t = 0; t < 500; ++t) {
        Scalar s;
        int terms = exp_count(rng);
        for (int i = 0; i < terms; ++i)
            s += Scalar::monomial(coeff(rng), exp_count(rng));
        CHECK(parse_scalar(to_text(s)) == s);
    }
}

TEST_CASE("space and preorder text round trips") {
    CHECK(to_text(parse_preorder("PRE n=0 rel=")) == "PRE n=0 rel=");
    for (int n = 1; n <= 4; ++n)
        stream_preorders(n, [](const Preorder& p) {
            CHECK(parse_preorder(to_text(p)) == p);
        });
    for (int n = 1; n <= 5; ++n)
        for (const FiniteSpace& x : enumerate_spaces(n))
            CHECK(parse_space(to_text(x)) == x);
}

TEST_CASE("fvector and qsym round trips, randomized") {
    std::vector<FiniteSpace> pool;
    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& x : enumerate_spaces(n)) pool.push_back(x);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int t = 0; t < 200; ++t) {
        FVector v;
        for (int i = 0; i < 3; ++i)
            v.add(pool[pick(rng)], Scalar::monomial(coeff(rng), deg(rng)));
        CHECK(parse_fvector(to_text(v)) == v);
    }
    for (int t = 0; t < 200; ++t) {
        QSymElement e;
        for (int i = 0; i < 3; ++i) {
            Composition comp;
            for (int j = deg(rng); j > 0; --j) comp.push_back(1 + deg(rng));
            e.add(comp, Scalar::monomial(coeff(rng), deg(rng)));
        }
        CHECK(parse_qsym(to_text(e)) == e);
    }
    CHECK(parse_fvector("0").is_zero());
    CHECK(parse_qsym("0").is_zero());
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_preorder("PRE n=2 rel=11"), ParseError);
    CHECK_THROWS_AS(parse_preorder("PRE n=2 rel=1111x"), ParseError);
    CHECK_THROWS_AS(parse_space("FS k=2 w=1 cov="), ParseError);
    CHECK_THROWS_AS(parse_space("FS k=1 w=1 cov=(1,1)"), ParseError);  // cycle
    CHECK_THROWS_AS(parse_scalar("1 + "), ParseError);
    CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
    try {
        parse_preorder("PRE n=2 rel=11");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column > 1);
    }
    // invalid relation content is rejected, not silently accepted
    CHECK_THROWS_AS(parse_preorder("PRE n=2 rel=0111"), ParseError);  // not reflexive
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("rational text") {
    CHECK(to_text(Rational(3, 6)) == "1/2");
    CHECK(to_text(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-2") == Rational(-2));
}
