#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "fpcat/category.hpp"

using namespace fpcat;

TEST_CASE("validate_base_category accepts the one-object fixture", "[category]") {
    auto cat = testfix::one_simple();
    CHECK(cat->validate().ok());
    // the single composition is 1*1 = 1, checked by hand
    CHECK(cat->base_compose(0, 0, 0, {1}, {1}) == FVector{1});
}

TEST_CASE("validate_base_category reports a non-associative triple", "[category]") {
    PrimeField F(2);
    // End(X) with basis (1, a, b) and a deliberately broken product table:
    // a a = b, a b = 0 but b a = a, so (a a) a = a while a (a a) = 0.
    FMatrix bad = FMatrix::from_columns(
        F, 3,
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 1}, {0, 1, 0},
         {0, 0, 0}});
    std::vector<std::vector<std::vector<FMatrix>>> comp(
        1, std::vector<std::vector<FMatrix>>(1, std::vector<FMatrix>(1, bad)));
    AddCategory cat(F, {"X"}, {{3}}, comp, {{1, 0, 0}});
    auto rep = cat.validate();
    CHECK(!rep.ok());
    bool found_assoc = false;
    for (auto& i : rep.issues) found_assoc |= i.where == "associativity";
    CHECK(found_assoc);
}

TEST_CASE("composition in the additive closure", "[category]") {
    auto cat = testfix::one_simple();
    AddObject S = AddObject::base(0), SS = S.concat(S);

    AddMorphism diag = cat->make_morphism(S, SS, {1, 1});  // (1;1)^T
    AddMorphism codiag = cat->make_morphism(SS, S, {1, 1}); // (1 1)
    // (1 1) o (1;1) = 1 + 1 = 0 over F_2
    CHECK(cat->compose(codiag, diag) == cat->zero_morphism(S, S));

    AddMorphism f = cat->make_morphism(SS, SS, {1, 0, 1, 1});
    CHECK(cat->compose(cat->identity(SS), f) == f);
    CHECK(cat->compose(f, cat->identity(SS)) == f);
    CHECK(cat->compose(f, cat->zero_morphism(SS, SS)) == cat->zero_morphism(SS, SS));
}

TEST_CASE("compose_add is associative and unital on the bound-2 universe", "[category]") {
    auto cat = testfix::one_simple();
    Universe u = Universe::build(*cat, 2);
    for (const AddObject& x : u.objects)
        for (const AddObject& y : u.objects)
            for (const AddObject& z : u.objects)
                for (const AddObject& w : u.objects) {
                    cat->for_each_morphism(x, y, [&](const AddMorphism& f) {
                        cat->for_each_morphism(y, z, [&](const AddMorphism& g) {
                            cat->for_each_morphism(z, w, [&](const AddMorphism& h) {
                                CHECK(cat->compose(h, cat->compose(g, f)) ==
                                      cat->compose(cat->compose(h, g), f));
                                return true;
                            });
                            return true;
                        });
                        CHECK(cat->compose(cat->identity(y), f) == f);
                        CHECK(cat->compose(f, cat->identity(x)) == f);
                        return true;
                    });
                }
}

TEST_CASE("find_isomorphisms basics", "[category]") {
    auto cat = testfix::one_simple();
    AddObject zero = AddObject::zero(), S = AddObject::base(0), SS = S.concat(S);

    auto zz = cat->isomorphisms(zero, zero);
    REQUIRE(zz.size() == 1);
    CHECK(zz[0] == cat->identity(zero));

    CHECK(cat->isomorphisms(S, SS).empty()); // Hom has 4 elements, none invertible
    auto ss = cat->isomorphisms(S, S);
    REQUIRE(ss.size() == 1);
    CHECK(ss[0] == cat->identity(S));

    // GL_2(F_2) has 6 elements
    CHECK(cat->isomorphisms(SS, SS).size() == 6);
}

TEST_CASE("iso symmetry on the doubled category", "[category]") {
    auto cat = testfix::doubled_simple();
    Universe u = Universe::build(*cat, 2);
    for (const AddObject& x : u.objects)
        for (const AddObject& y : u.objects)
            CHECK(cat->isomorphisms(x, y).empty() == cat->isomorphisms(y, x).empty());
    CHECK(cat->isomorphic(AddObject::base(0), AddObject::base(1)));
    CHECK(!cat->isomorphic(AddObject::base(0), AddObject::zero()));
}

TEST_CASE("pre/post matrices implement composition linearly", "[category]") {
    auto cat = testfix::one_simple();
    AddObject S = AddObject::base(0), SS = S.concat(S);
    AddMorphism f = cat->make_morphism(S, SS, {1, 1});
    FMatrix post = cat->post_matrix(f, SS); // Hom(SS,S) -> Hom(SS,SS)
    cat->for_each_morphism(SS, S, [&](const AddMorphism& g) {
        CHECK(post.apply(g.coords) == cat->compose(f, g).coords);
        return true;
    });
    FMatrix pre = cat->pre_matrix(f, S); // Hom(SS,S) -> Hom(S,S)
    cat->for_each_morphism(SS, S, [&](const AddMorphism& g) {
        CHECK(pre.apply(g.coords) == cat->compose(g, f).coords);
        return true;
    });
}

TEST_CASE("idempotent splitting", "[category]") {
    auto cat = testfix::one_simple();
    Universe u = Universe::build(*cat, 2);
    AddObject S = AddObject::base(0), SS = S.concat(S);

    // e = 1 splits through X itself
    auto s1 = search_idempotent_splitting(*cat, u, cat->identity(SS));
    REQUIRE(s1.has_value());
    CHECK(cat->compose(s1->section, s1->retraction) == cat->identity(SS));
    CHECK(s1->through == SS);

    // e = 0 splits through the zero object
    auto s0 = search_idempotent_splitting(*cat, u, cat->zero_morphism(SS, SS));
    REQUIRE(s0.has_value());
    CHECK(s0->through == AddObject::zero());

    // e = diag(1,0) splits through S
    AddMorphism e = cat->make_morphism(SS, SS, {1, 0, 0, 0});
    auto sd = search_idempotent_splitting(*cat, u, e);
    REQUIRE(sd.has_value());
    CHECK(sd->through == S);
    CHECK(cat->compose(sd->section, sd->retraction) == e);
    CHECK(cat->compose(sd->retraction, sd->section) == cat->identity(S));
}

TEST_CASE("non-split idempotent is detected as unsplittable", "[category]") {
    auto cat = testfix::idempotent_algebra();
    REQUIRE(cat->validate().ok());
    Universe u = Universe::build(*cat, 2);
    AddObject X = AddObject::base(0);
    AddMorphism e = cat->make_morphism(X, X, {0, 1}); // the basis element e
    REQUIRE(cat->compose(e, e) == e);
    CHECK(!search_idempotent_splitting(*cat, u, e).has_value());
}

TEST_CASE("mono/epi via Hom-space injectivity", "[category]") {
    auto cat = testfix::one_simple();
    AddObject S = AddObject::base(0), SS = S.concat(S);
    CHECK(is_monomorphism(*cat, cat->make_morphism(S, SS, {1, 0})));
    CHECK(!is_monomorphism(*cat, cat->zero_morphism(S, SS)));
    CHECK(is_epimorphism(*cat, cat->make_morphism(SS, S, {0, 1})));
    CHECK(!is_epimorphism(*cat, cat->zero_morphism(SS, S)));
    CHECK(is_monomorphism(*cat, cat->zero_morphism(AddObject::zero(), S)));
}

TEST_CASE("block assembly round-trips", "[category]") {
    auto cat = testfix::one_simple();
    AddObject S = AddObject::base(0);
    AddMorphism a = cat->make_morphism(S, S, {1});
    AddMorphism z = cat->zero_morphism(S, S);
    AddMorphism m = block_2x2(*cat, S, S, S, S, &a, &z, &a, &a);
    CHECK(m.coords == FVector{1, 0, 1, 1});
    AddMorphism col = block_col(*cat, a, a);
    CHECK(col.coords == FVector{1, 1});
    AddMorphism row = block_row(*cat, a, z);
    CHECK(row.coords == FVector{1, 0});
    AddMorphism sum = direct_sum(*cat, a, a);
    CHECK(sum.coords == FVector{1, 0, 0, 1});
}
