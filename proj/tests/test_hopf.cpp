#include "halg/hopf.hpp"
#include "halg/scalar.hpp"

#include <doctest.h>

using namespace halg;

namespace {

GroupHom sign_hom() {
    GroupPtr s3 = symmetric_group(3);
    std::vector<int> sgn(6);
    for (int a = 0; a < 6; ++a) sgn[size_t(a)] = s3->element_order(a) == 2 ? 1 : 0;
    return make_hom(s3, cyclic_group(2), sgn);
}

}  // namespace

TEST_CASE("the algebra of a group has the frozen structure constants") {
    GroupPtr z3 = cyclic_group(3);
    HopfPtr<Rat> h = group_algebra<Rat>(z3);
    CHECK(h->dim == 3);
    // product of basis vectors is the group product
    CHECK(vec_eq<Rat>(h->mul_basis(1, 2), unit_vec<Rat>(3, 0, Rat(1))));
    CHECK(vec_eq<Rat>(h->mul_basis(1, 1), unit_vec<Rat>(3, 2, Rat(1))));
    // coproduct is diagonal: each basis vector is group-like
    for (Index a = 0; a < 3; ++a) {
        CHECK(h->delta(a * 3 + a, a) == Rat(1));
        CHECK(is_group_like(*h, unit_vec<Rat>(3, a, Rat(1))));
    }
    Vec<Rat> mixed = unit_vec<Rat>(3, 0, Rat(1)) + unit_vec<Rat>(3, 1, Rat(1));
    CHECK(!is_group_like(*h, mixed));
    // counit is 1 everywhere, antipode permutes to inverses
    for (Index a = 0; a < 3; ++a) {
        CHECK(h->counit(0, a) == Rat(1));
        CHECK(h->antipode(Index(z3->inverse(int(a))), a) == Rat(1));
    }
    CHECK(validate_hopf(*h).all_pass());
    CHECK(h->commutative.value_or(false));
    CHECK(h->cocommutative.value_or(false));
}

TEST_CASE("the function algebra has pointwise product and convolution coproduct") {
    GroupPtr s3 = symmetric_group(3);
    HopfPtr<Rat> h = function_algebra<Rat>(s3);
    CHECK(h->dim == 6);
    // pointwise product: e_a e_b = [a = b] e_a
    for (Index a = 0; a < 6; ++a)
        for (Index b = 0; b < 6; ++b) {
            Vec<Rat> want = a == b ? unit_vec<Rat>(6, a, Rat(1)) : Vec<Rat>(Vec<Rat>::Zero(6));
            CHECK(vec_eq<Rat>(h->mul_basis(a, b), want));
        }
    // the unit is the constant function 1
    for (Index a = 0; a < 6; ++a) CHECK(h->unit(a) == Rat(1));
    // Delta(e_g) sums over factorizations of g
    for (int g = 0; g < 6; ++g)
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                CHECK(h->delta(Index(a) * 6 + Index(b), Index(g)) ==
                      (s3->mul(a, b) == g ? Rat(1) : Rat(0)));
    CHECK(validate_hopf(*h).all_pass());
    CHECK(h->commutative.value_or(false));
    CHECK(!h->cocommutative.value_or(true));  // S3 is not abelian
}

TEST_CASE("the two constructions are dual as matrices") {
    GroupPtr g = dihedral_group(4);
    HopfPtr<Rat> ka = group_algebra<Rat>(g);
    HopfPtr<Rat> kf = function_algebra<Rat>(g);
    CHECK(mat_eq<Rat>(kf->mu, ka->delta.transpose()));
    CHECK(mat_eq<Rat>(kf->delta, ka->mu.transpose()));
    CHECK(mat_eq<Rat>(kf->antipode, ka->antipode.transpose()));
    CHECK(mat_eq<Rat>(Mat<Rat>(kf->unit.transpose()), Mat<Rat>(ka->counit)));
}

TEST_CASE("corrupting the product is caught with a witness") {
    HopfPtr<Rat> good = group_algebra<Rat>(cyclic_group(3));
    auto bad = std::make_shared<HopfAlgebra<Rat>>(*good);
    bad->mu(0, 1 * 3 + 2) = Rat(0);
    bad->mu(1, 1 * 3 + 2) = Rat(1);  // 1 * 2 now lands at 1 instead of 0
    CheckReport rep = validate_hopf(*bad);
    CHECK(!rep.all_pass());
    const CheckResult* assoc = rep.find("hopf.associativity");
    REQUIRE(assoc != nullptr);
    CHECK(!assoc->pass);
    CHECK(!assoc->witnesses.empty());
}

TEST_CASE("corrupting the antipode fails exactly the antipode laws") {
    HopfPtr<Rat> good = group_algebra<Rat>(cyclic_group(4));
    auto bad = std::make_shared<HopfAlgebra<Rat>>(*good);
    bad->antipode = Mat<Rat>::Identity(4, 4);  // identity is not an antipode on k[Z4]
    CheckReport rep = validate_hopf(*bad);
    const CheckResult* left = rep.find("hopf.antipode-left");
    REQUIRE(left != nullptr);
    CHECK(!left->pass);
    // the bialgebra laws still hold
    CHECK(rep.find("hopf.associativity")->pass);
    CHECK(rep.find("hopf.coassociativity")->pass);
    CHECK(rep.find("hopf.coproduct-multiplicative")->pass);
}

TEST_CASE("group homomorphisms linearize to Hopf morphisms") {
    GroupHom sgn = sign_hom();
    HopfPtr<Rat> dom = group_algebra<Rat>(sgn.dom);
    HopfPtr<Rat> cod = group_algebra<Rat>(sgn.cod);
    HopfHom<Rat> f = linearize_hom(sgn, dom, cod);
    CHECK(hopf_hom_check(f).all_pass());
    // and dualize contravariantly to morphisms of function algebras
    HopfPtr<Rat> fdom = function_algebra<Rat>(sgn.cod);
    HopfPtr<Rat> fcod = function_algebra<Rat>(sgn.dom);
    HopfHom<Rat> fd = dualize_hom(sgn, fdom, fcod);
    CHECK(hopf_hom_check(fd).all_pass());
    CHECK(mat_eq<Rat>(fd.map, f.map.transpose()));
}

TEST_CASE("a linear map that is not comultiplicative is caught") {
    HopfPtr<Rat> h = group_algebra<Rat>(cyclic_group(3));
    Mat<Rat> m = Mat<Rat>::Zero(3, 3);
    m(0, 0) = Rat(1);
    m(1, 1) = Rat(1);
    m(1, 2) = Rat(1);  // collapses e2 onto e1, breaking both structures
    HopfHom<Rat> f{h, h, m};
    CheckReport rep = hopf_hom_check(f);
    CHECK(!rep.all_pass());
}

TEST_CASE("identity, composition and tensor of morphisms") {
    GroupHom sgn = sign_hom();
    HopfPtr<Rat> a = group_algebra<Rat>(sgn.dom);
    HopfPtr<Rat> b = group_algebra<Rat>(sgn.cod);
    HopfHom<Rat> f = linearize_hom(sgn, a, b);
    HopfHom<Rat> idb = identity_hopf_hom(b);
    HopfHom<Rat> g = compose(idb, f);
    CHECK(mat_eq<Rat>(g.map, f.map));

    HopfPtr<Rat> aa = tensor_hopf(a, a);
    HopfPtr<Rat> bb = tensor_hopf(b, b);
    CHECK(aa->dim == 36);
    CHECK(validate_hopf(*aa).all_pass());
    HopfHom<Rat> ff = tensor_hom(f, f, aa, bb);
    CHECK(hopf_hom_check(ff).all_pass());
}

TEST_CASE("the base field is the unit object") {
    HopfPtr<Rat> k = base_field_hopf<Rat>();
    CHECK(k->dim == 1);
    CHECK(validate_hopf(*k).all_pass());
    HopfPtr<Fp> k7 = base_field_hopf<Fp>(Fp(1, 7));
    CHECK(validate_hopf(*k7).all_pass());
}

TEST_CASE("inverses of morphisms exist exactly for isomorphisms") {
    GroupPtr z3 = cyclic_group(3);
    HopfPtr<Rat> h = group_algebra<Rat>(z3);
    GroupHom neg = make_hom(z3, z3, {0, 2, 1});
    HopfHom<Rat> f = linearize_hom(neg, h, h);
    auto inv = inverse_hopf_hom(f);
    REQUIRE(inv.has_value());
    CHECK(mat_eq<Rat>(Mat<Rat>(inv->map * f.map), Mat<Rat>(Mat<Rat>::Identity(3, 3))));

    GroupHom sgn = sign_hom();
    HopfPtr<Rat> a = group_algebra<Rat>(sgn.dom);
    HopfPtr<Rat> b = group_algebra<Rat>(sgn.cod);
    CHECK(!inverse_hopf_hom(linearize_hom(sgn, a, b)).has_value());
}

TEST_CASE("characteristic dividing the group order is refused") {
    CHECK_THROWS_AS(group_algebra<Fp>(cyclic_group(3), Fp(1, 3)), ValidationError);
    CHECK_THROWS_AS(function_algebra<Fp>(symmetric_group(3), Fp(1, 2)), ValidationError);
    try {
        group_algebra<Fp>(cyclic_group(4), Fp(1, 2));
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.check == "hopf.characteristic");
    }
    // coprime characteristic is fine
    HopfPtr<Fp> ok = group_algebra<Fp>(cyclic_group(3), Fp(1, 7));
    CHECK(validate_hopf(*ok).all_pass());
}

TEST_CASE("prime field Hopf structures validate end to end") {
    Fp one(1, 5);
    HopfPtr<Fp> ka = group_algebra<Fp>(symmetric_group(3), one);
    CHECK(validate_hopf(*ka).all_pass());
    HopfPtr<Fp> kf = function_algebra<Fp>(symmetric_group(3), one);
    CHECK(validate_hopf(*kf).all_pass());
    GroupHom sgn = sign_hom();
    HopfHom<Fp> f = linearize_hom(sgn, ka, group_algebra<Fp>(cyclic_group(2), one));
    CHECK(hopf_hom_check(f).all_pass());
}
