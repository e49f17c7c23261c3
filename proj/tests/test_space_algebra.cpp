#include <algorithm>

#include "doctest.h"
#include "fintop/checks.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/errors.hpp"
#include "fintop/space_algebra.hpp"

using namespace fintop;

namespace {

const FiniteSpace& pt() {
    static const FiniteSpace p = FiniteSpace::point();
    return p;
}

const FiniteSpace& chain2() {
    static const FiniteSpace c = FiniteSpace::chain({1, 1});
    return c;
}

}  // namespace

TEST_CASE("disjoint sum on basis spaces") {
    CHECK(space_product(pt(), pt()) == FiniteSpace::antichain({1, 1}));
    CHECK(space_product(FiniteSpace(), chain2()) == chain2());
    FiniteSpace with_point = space_product(chain2(), pt());
    std::vector<FiniteSpace> size3 = enumerate_spaces(3);
    CHECK(std::find(size3.begin(), size3.end(), with_point) != size3.end());
}

TEST_CASE("join on basis spaces") {
    CHECK(space_join(pt(), pt()) == chain2());
    CHECK(space_join(FiniteSpace(), chain2()) == chain2());
    CHECK(space_join(chain2(), FiniteSpace()) == chain2());
    // the join of two circle models is the 8-point three-sphere model
    FiniteSpace s3 = space_join(FiniteSpace::circle_model(), FiniteSpace::circle_model());
    CHECK(s3 == FiniteSpace::sphere_model(3));
    // join is not commutative
    FiniteSpace heavy = FiniteSpace::canonical({2}, {0});
    CHECK(space_join(heavy, pt()) != space_join(pt(), heavy));
}

TEST_CASE("join duality up to size three") {
    std::vector<FiniteSpace> all;
    for (int n = 1; n <= 3; ++n)
        for (const FiniteSpace& x : enumerate_spaces(n)) all.push_back(x);
    for (const FiniteSpace& x : all)
        for (const FiniteSpace& y : all)
            CHECK(dual(space_join(x, y)) == space_join(dual(y), dual(x)));
}

TEST_CASE("coproduct on small spaces") {
    FTensor d_pt = coproduct_basis(pt());
    FTensor expected_pt;
    expected_pt.add(pt(), FiniteSpace(), Scalar(1));
    expected_pt.add(FiniteSpace(), pt(), Scalar(1));
    CHECK(d_pt == expected_pt);

    FTensor d_chain = coproduct_basis(chain2());
    FTensor expected_chain;
    expected_chain.add(chain2(), FiniteSpace(), Scalar(1));
    expected_chain.add(FiniteSpace(), chain2(), Scalar(1));
    expected_chain.add(pt(), pt(), Scalar(1));
    CHECK(d_chain == expected_chain);

    FTensor d_anti = coproduct_basis(FiniteSpace::antichain({1, 1}));
    FTensor expected_anti;
    expected_anti.add(FiniteSpace::antichain({1, 1}), FiniteSpace(), Scalar(1));
    expected_anti.add(FiniteSpace(), FiniteSpace::antichain({1, 1}), Scalar(1));
    expected_anti.add(pt(), pt(), Scalar(2));
    CHECK(d_anti == expected_anti);

    // a single weighted class has only the trivial opens
    FTensor d_heavy = coproduct_basis(FiniteSpace::canonical({2}, {0}));
    CHECK(d_heavy.terms().size() == 2);

    FTensor d_unit = coproduct(FVector::unit());
    CHECK(d_unit == FTensor::basis(FiniteSpace(), FiniteSpace()));
}

TEST_CASE("counit") {
    CHECK(counit(FVector::unit()) == Scalar(1));
    CHECK(counit(FVector::basis(pt())).is_zero());
}

TEST_CASE("antipode") {
    CHECK(antipode(FVector::basis(pt())) == -FVector::basis(pt()));
    FVector s_chain = antipode(FVector::basis(chain2()));
    FVector expected = -FVector::basis(chain2());
    expected += FVector::basis(FiniteSpace::antichain({1, 1}));
    CHECK(s_chain == expected);
    CHECK(antipode(FVector::unit()) == FVector::unit());
}

TEST_CASE("zeta character") {
    CHECK(zeta_q(FVector::basis(chain2())) == Scalar::q());
    CHECK(zeta_q(FVector::basis(FiniteSpace::antichain({1, 1, 1}))) == Scalar(1));
    CHECK(zeta_q(FVector::basis(FiniteSpace::chain({2, 3}))) == Scalar::q_pow(6));
}

TEST_CASE("connected decomposition") {
    std::vector<FiniteSpace> parts =
        decompose_connected(FiniteSpace::antichain({1, 1}));
    CHECK(parts == std::vector<FiniteSpace>{pt(), pt()});
    CHECK(decompose_connected(chain2()) == std::vector<FiniteSpace>{chain2()});
    FiniteSpace mix = space_product(chain2(), pt());
    std::vector<FiniteSpace> mixed = decompose_connected(mix);
    CHECK(mixed.size() == 2);
    FVector rebuilt = FVector::unit();
    for (const FiniteSpace& part : mixed)
        rebuilt = product_sum(rebuilt, FVector::basis(part));
    CHECK(rebuilt == FVector::basis(mix));
    CHECK_THROWS_AS(decompose_connected(FiniteSpace()), EmptySpace);
}

TEST_CASE("join factorization") {
    CHECK(join_factors(FiniteSpace::chain({1, 1, 1})) ==
          std::vector<FiniteSpace>{pt(), pt(), pt()});
    CHECK(join_factors(FiniteSpace::antichain({1, 1})) ==
          std::vector<FiniteSpace>{FiniteSpace::antichain({1, 1})});
    // the circle model is itself a join of two 2-antichains, so the
    // maximal factorization of the 3-sphere model has four factors
    FiniteSpace a2 = FiniteSpace::antichain({1, 1});
    CHECK(join_factors(FiniteSpace::circle_model()) ==
          std::vector<FiniteSpace>{a2, a2});
    FiniteSpace s3 = FiniteSpace::sphere_model(3);
    CHECK(join_factors(s3) == std::vector<FiniteSpace>{a2, a2, a2, a2});
    CHECK_THROWS_AS(join_factors(FiniteSpace()), EmptySpace);
    // factors rebuild the space
    for (int n = 1; n <= 5; ++n)
        for (const FiniteSpace& x : enumerate_spaces(n)) {
            FVector rebuilt = FVector::unit();
            for (const FiniteSpace& f : join_factors(x))
                rebuilt = product_join(rebuilt, FVector::basis(f));
            CHECK(rebuilt == FVector::basis(x));
        }
}

TEST_CASE("axiom sweeps, exhaustive one size past the gate") {
    CHECK(verify_axioms(5, AxiomSuite::Duality).passed);
    CHECK(verify_axioms(5, AxiomSuite::Coassoc).passed);
    CHECK(verify_axioms(5, AxiomSuite::HopfCompat).passed);
    CHECK(verify_axioms(5, AxiomSuite::Infinitesimal).passed);
}

TEST_CASE("products are commutative/associative to size five") {
    // the size-5 exhaustive ranges from the module contract
    std::vector<FiniteSpace> all{FiniteSpace()};
    for (int n = 1; n <= 4; ++n)
        for (const FiniteSpace& x : enumerate_spaces(n)) all.push_back(x);
    for (const FiniteSpace& x : all)
        for (const FiniteSpace& y : all) {
            if (x.size() + y.size() > 5) continue;
            CHECK(space_product(x, y) == space_product(y, x));
            for (const FiniteSpace& z : all) {
                if (x.size() + y.size() + z.size() > 5) continue;
                CHECK(space_product(space_product(x, y), z) ==
                      space_product(x, space_product(y, z)));
                CHECK(space_join(space_join(x, y), z) ==
                      space_join(x, space_join(y, z)));
            }
        }
}

TEST_CASE("bilinearity of the product wrappers") {
    FVector a = FVector::basis(pt()).scaled(Scalar(2));
    a.add(chain2(), Scalar::q());
    FVector b = FVector::basis(pt());
    FVector prod = product_sum(a, b);
    CHECK(prod.coeff(FiniteSpace::antichain({1, 1})) == Scalar(2));
    CHECK(prod.coeff(space_product(chain2(), pt())) == Scalar::q());
}
