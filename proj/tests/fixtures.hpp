// Shared hand-built categories and witnesses used across the test suites.
#ifndef FPCAT_TESTS_FIXTURES_HPP
#define FPCAT_TESTS_FIXTURES_HPP

#include "fpcat/category.hpp"
#include "fpcat/functor.hpp"

namespace fpcat::testfix {

/// One base object with End = F_p and multiplication as composition. With
/// p = 2 this presents both the category of finite-dimensional F_2-vector
/// spaces and the stable module category of F_2[x]/(x^2).
inline CategoryRef one_simple(uint32_t p = 2, const std::string& name = "S") {
    PrimeField F(p);
    std::vector<std::vector<std::vector<FMatrix>>> comp(
        1, std::vector<std::vector<FMatrix>>(1, std::vector<FMatrix>(1)));
    comp[0][0][0] = FMatrix::identity(F, 1); // 1x(1*1), basis * basis = basis
    return std::make_shared<AddCategory>(F, std::vector<std::string>{name},
                                         std::vector<std::vector<size_t>>{{1}}, comp,
                                         std::vector<FVector>{{1}});
}

/// Two isomorphic copies S0, S1 of the simple object: every Hom space is
/// 1-dimensional, every composition of basis vectors is the basis vector.
inline CategoryRef doubled_simple(uint32_t p = 2) {
    PrimeField F(p);
    std::vector<std::vector<size_t>> homs{{1, 1}, {1, 1}};
    std::vector<std::vector<std::vector<FMatrix>>> comp(
        2, std::vector<std::vector<FMatrix>>(2, std::vector<FMatrix>(2)));
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c) comp[a][b][c] = FMatrix::identity(F, 1);
    return std::make_shared<AddCategory>(F, std::vector<std::string>{"S0", "S1"}, homs, comp,
                                         std::vector<FVector>{{1}, {1}});
}

/// Two non-isomorphic simple objects A, B with no maps between them.
inline CategoryRef two_simples(uint32_t p = 2) {
    PrimeField F(p);
    std::vector<std::vector<size_t>> homs{{1, 0}, {0, 1}};
    std::vector<std::vector<std::vector<FMatrix>>> comp(
        2, std::vector<std::vector<FMatrix>>(2, std::vector<FMatrix>(2)));
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c)
                comp[a][b][c] = FMatrix(F, homs[a][c], homs[b][c] * homs[a][b]);
    comp[0][0][0] = FMatrix::identity(F, 1);
    comp[1][1][1] = FMatrix::identity(F, 1);
    return std::make_shared<AddCategory>(F, std::vector<std::string>{"A", "B"}, homs, comp,
                                         std::vector<FVector>{{1}, {1}});
}

/// One object with End = F_2[e]/(e^2 = e), basis (1, e). The idempotent e has
/// no splitting object inside the additive closure.
inline CategoryRef idempotent_algebra() {
    PrimeField F(2);
    // products on basis pairs: columns ordered g-major: (1,1),(1,e),(e,1),(e,e)
    // 1*1=1, 1*e=e, e*1=e, e*e=e
    FMatrix m = FMatrix::from_columns(F, 2, {{1, 0}, {0, 1}, {0, 1}, {0, 1}});
    std::vector<std::vector<std::vector<FMatrix>>> comp(
        1, std::vector<std::vector<FMatrix>>(1, std::vector<FMatrix>(1, m)));
    return std::make_shared<AddCategory>(F, std::vector<std::string>{"X"},
                                         std::vector<std::vector<size_t>>{{2}}, comp,
                                         std::vector<FVector>{{1, 0}});
}

/// The retraction/inclusion equivalence between the one-object category and
/// its doubled version: F sends S to S0, G sends both S_i to S.
inline EquivalenceWitness doubling_witness(CategoryRef single, CategoryRef doubled) {
    PrimeField F = single->field();
    AddFunctor Ff(single, doubled, {AddObject::base(0)},
                  {{FMatrix::identity(F, 1)}});
    std::vector<std::vector<FMatrix>> g_hom(2, std::vector<FMatrix>(2, FMatrix::identity(F, 1)));
    AddFunctor G(doubled, single, {AddObject::base(0), AddObject::base(0)}, g_hom);
    // unit at S_i: S_i -> S0, coordinate 1 in the 1-dimensional Hom space
    std::vector<AddMorphism> unit_comps{
        doubled->make_morphism(AddObject::base(0), AddObject::base(0), {1}),
        doubled->make_morphism(AddObject::base(1), AddObject::base(0), {1})};
    std::vector<AddMorphism> counit_comps{single->identity(AddObject::base(0))};
    return {Ff, G,
            NatTransform(AddFunctor::identity(doubled), compose_functors(Ff, G),
                         std::move(unit_comps)),
            NatTransform(compose_functors(G, Ff), AddFunctor::identity(single),
                         std::move(counit_comps))};
}

/// Swap functor on the two-simples category (an automorphism).
inline AddFunctor swap_functor(CategoryRef two) {
    PrimeField F = two->field();
    std::vector<std::vector<FMatrix>> hom(2, std::vector<FMatrix>(2));
    hom[0][0] = FMatrix::identity(F, 1);
    hom[1][1] = FMatrix::identity(F, 1);
    hom[0][1] = FMatrix(F, 0, 0);
    hom[1][0] = FMatrix(F, 0, 0);
    return AddFunctor(two, two, {AddObject::base(1), AddObject::base(0)}, hom);
}

} // namespace fpcat::testfix

#endif
