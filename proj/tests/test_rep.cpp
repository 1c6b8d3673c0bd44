#include "halg/rep.hpp"
#include "halg/scalar.hpp"

#include <doctest.h>

using namespace halg;

namespace {

template <class K>
std::vector<Index> block_dims(const CosimpleDecomposition<K>& dec) {
    std::vector<Index> out;
    for (const auto& b : dec.blocks) out.push_back(b.simple_dim);
    return out;
}

void check_all(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(c.id);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("the splitting prime is the least one congruent to 1 mod the exponent") {
    CHECK(splitting_prime(*trivial_group()) == 2);
    CHECK(splitting_prime(*symmetric_group(3)) == 7);
    CHECK(splitting_prime(*cyclic_group(4)) == 5);
    CHECK(splitting_prime(*cyclic_group(6)) == 7);
    CHECK(splitting_prime(*alternating_group(4)) == 7);
    CHECK(splitting_prime(*dihedral_group(4)) == 5);
    CHECK(splitting_prime(*quaternion_group()) == 5);
    CHECK(splitting_prime(*symmetric_group(4)) == 13);
    CHECK(splitting_prime(*cyclic_group(12)) == 13);
    CHECK(splitting_prime(*cyclic_group(24)) == 73);
    CHECK(splitting_prime(*cyclic_group(8)) == 17);
}

TEST_CASE("functions on S3 over F7 decompose into blocks of simple dims 1,1,2") {
    GroupPtr g = symmetric_group(3);
    Fp one(1, 7);
    HopfPtr<Fp> h = function_algebra<Fp>(g, one);
    CosimpleDecomposition<Fp> dec = cosimple_decomposition(g, h);
    check_all(dec.checks);
    CHECK(block_dims(dec) == std::vector<Index>{1, 1, 2});
    CHECK(dec.blocks[0].carrier.dim() == 1);
    CHECK(dec.blocks[1].carrier.dim() == 1);
    CHECK(dec.blocks[2].carrier.dim() == 4);
    check_all(semisimplicity_check(dec));

    SUBCASE("reconstruction recovers the coalgebra from enough comodules") {
        CHECK(coend_from_comodules(h, dec.simples).recovers);
        CHECK(coend_from_comodules(h, {regular_comodule(h)}).recovers);
        CHECK(!coend_from_comodules(h, {}).recovers);
        CHECK(!coend_from_comodules(h, {dec.simples[0]}).recovers);
    }

    SUBCASE("a basis change leaves the coefficient span fixed") {
        Mat<Fp> t = Mat<Fp>::Constant(2, 2, Fp(0, 7));
        t(0, 0) = Fp(2, 7);
        t(0, 1) = Fp(1, 7);
        t(1, 0) = Fp(5, 7);
        t(1, 1) = Fp(3, 7);
        const Comodule<Fp>& big = dec.simples[2];
        Comodule<Fp> moved = transform_comodule(big, t);
        check_all(comodule_check(moved));
        Subspace<Fp> c1 = coefficient_coalgebra(big);
        Subspace<Fp> c2 = coefficient_coalgebra(moved);
        CHECK(c1.pivots == c2.pivots);
        CHECK(mat_eq<Fp>(c1.basis, c2.basis));
    }
}

TEST_CASE("abelian groups decompose into one-dimensional blocks") {
    GroupPtr z4 = cyclic_group(4);
    Fp five(1, 5);
    CosimpleDecomposition<Fp> d4 =
        cosimple_decomposition(z4, function_algebra<Fp>(z4, five));
    check_all(d4.checks);
    CHECK(block_dims(d4) == std::vector<Index>{1, 1, 1, 1});

    // six conjugacy classes, so this takes the eigenvalue-splitting path
    GroupPtr z6 = cyclic_group(6);
    Fp seven(1, 7);
    CosimpleDecomposition<Fp> d6 =
        cosimple_decomposition(z6, function_algebra<Fp>(z6, seven));
    check_all(d6.checks);
    CHECK(block_dims(d6) == std::vector<Index>{1, 1, 1, 1, 1, 1});

    GroupPtr e = trivial_group();
    Fp two(1, 2);
    CosimpleDecomposition<Fp> d1 = cosimple_decomposition(e, function_algebra<Fp>(e, two));
    check_all(d1.checks);
    CHECK(block_dims(d1) == std::vector<Index>{1});
}

TEST_CASE("larger groups decompose with the frozen simple dimensions") {
    GroupPtr s4 = symmetric_group(4);
    Fp th(1, 13);
    CosimpleDecomposition<Fp> ds4 =
        cosimple_decomposition(s4, function_algebra<Fp>(s4, th));
    check_all(ds4.checks);
    CHECK(block_dims(ds4) == std::vector<Index>{1, 1, 2, 3, 3});
    check_all(semisimplicity_check(ds4));

    GroupPtr q8 = quaternion_group();
    Fp five(1, 5);
    CosimpleDecomposition<Fp> dq8 =
        cosimple_decomposition(q8, function_algebra<Fp>(q8, five));
    check_all(dq8.checks);
    CHECK(block_dims(dq8) == std::vector<Index>{1, 1, 1, 1, 2});
}

TEST_CASE("non-splitting fields are rejected with the failed congruence") {
    GroupPtr s3 = symmetric_group(3);
    Fp one(1, 5);
    HopfPtr<Fp> h = function_algebra<Fp>(s3, one);
    try {
        cosimple_decomposition(s3, h);
        FAIL("expected a splitting-prime error");
    } catch (const ValidationError& e) {
        CHECK(e.check == "repcat.splitting-prime");
        CHECK(e.witness == "p=5 exponent=6 p mod 6 = 5 (need 1)");
    }
    HopfPtr<Rat> hq = function_algebra<Rat>(s3);
    CHECK_THROWS_AS(cosimple_decomposition(s3, hq), ValidationError);
}

TEST_CASE("the regular comodule alone reconstructs the function algebra") {
    for (GroupPtr g : {symmetric_group(3), cyclic_group(8), dihedral_group(6)}) {
        INFO(g->name);
        HopfPtr<Rat> h = function_algebra<Rat>(g);
        Comodule<Rat> reg = regular_comodule(h);
        check_all(comodule_check(reg));
        CHECK(coend_from_comodules(h, {reg}).recovers);
    }
}

TEST_CASE("restriction functors respect the 2-group structure maps") {
    TwoGroup tg = to_2group(xmod_from_aut(cyclic_group(3)));
    HopfPtr<Rat> h1 = function_algebra<Rat>(tg.G1);
    Comodule<Rat> reg = regular_comodule(h1);
    check_all(comodule_check(reg));

    SUBCASE("restriction along the vertical composition lands in its image") {
        Comodule<Rat> rd = rep_underline_delta(tg, reg);
        CHECK(rd.coalgebra->dim == 18);
        check_all(comodule_check(rd));

        GroupPullback composable = pullback(tg.s, tg.t);
        std::vector<int> table(composable.pairs.size());
        for (size_t i = 0; i < composable.pairs.size(); ++i)
            table[i] =
                compose_vertical(tg, composable.pairs[i].first, composable.pairs[i].second);
        GroupHom comp = make_hom(composable.group, tg.G1, table);
        HopfPtr<Rat> kp = function_algebra<Rat>(composable.group);
        Subspace<Rat> img = image(dualize_hom(comp, h1, kp).map);
        Subspace<Rat> coeff = coefficient_coalgebra(rd);
        CHECK(img.dim() == 6);
        CHECK(coeff.dim() == 6);
        CHECK(contains(img, coeff));
    }

    SUBCASE("restriction along vertical inversion is an involution") {
        Comodule<Rat> ra = rep_antipode(tg, reg);
        check_all(comodule_check(ra));
        Comodule<Rat> raa = rep_antipode(tg, ra);
        CHECK(mat_eq<Rat>(raa.coaction, reg.coaction));
    }

    SUBCASE("restriction is functorial") {
        HopfPtr<Rat> h0 = function_algebra<Rat>(tg.G0);
        Comodule<Rat> m0 = regular_comodule(h0);
        Comodule<Rat> along_s = rep_functor(tg.s, m0);
        Comodule<Rat> back = rep_functor(tg.iota, along_s);
        CHECK(mat_eq<Rat>(back.coaction, m0.coaction));

        Comodule<Rat> same = rep_functor(identity_hom(tg.G1), reg, h1);
        CHECK(mat_eq<Rat>(same.coaction, reg.coaction));
    }
}

TEST_CASE("a pulled-back character lands in exactly one one-dimensional block") {
    GroupPtr s3 = symmetric_group(3);
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> sgn(size_t(s3->order));
    for (int a = 0; a < s3->order; ++a) sgn[size_t(a)] = s3->element_order(a) == 2 ? 1 : 0;
    GroupHom sign = make_hom(s3, z2, sgn);
    Fp one(1, 7);
    HopfPtr<Fp> hz2 = function_algebra<Fp>(z2, one);
    Mat<Fp> co(2, 1);
    co(0, 0) = Fp(1, 7);
    co(1, 0) = Fp(6, 7);
    Comodule<Fp> chi{hz2, 1, co};
    check_all(comodule_check(chi));

    HopfPtr<Fp> hs3 = function_algebra<Fp>(s3, one);
    Comodule<Fp> pulled = rep_functor(sign, chi, hs3);
    check_all(comodule_check(pulled));
    CosimpleDecomposition<Fp> dec = cosimple_decomposition(s3, hs3);
    Subspace<Fp> cc = coefficient_coalgebra(pulled);
    CHECK(cc.dim() == 1);
    int hits = 0;
    for (const auto& b : dec.blocks)
        if (b.simple_dim == 1 && contains(b.carrier, cc)) ++hits;
    CHECK(hits == 1);
}
