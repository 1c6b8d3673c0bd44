#include "halg/group.hpp"

#include <doctest.h>

#include <set>

using namespace halg;

TEST_CASE("builtin groups have the frozen orders and abelianness") {
    CHECK(trivial_group()->order == 1);
    CHECK(cyclic_group(6)->order == 6);
    CHECK(cyclic_group(6)->is_abelian());
    CHECK(klein_four_group()->order == 4);
    CHECK(klein_four_group()->is_abelian());
    CHECK(symmetric_group(3)->order == 6);
    CHECK(!symmetric_group(3)->is_abelian());
    CHECK(symmetric_group(4)->order == 24);
    CHECK(alternating_group(4)->order == 12);
    CHECK(dihedral_group(4)->order == 8);
    CHECK(!dihedral_group(4)->is_abelian());
    CHECK(quaternion_group()->order == 8);
}

TEST_CASE("group axioms hold on every builtin table") {
    for (GroupPtr g : {trivial_group(), cyclic_group(5), klein_four_group(), symmetric_group(3),
                       dihedral_group(6), quaternion_group(), alternating_group(4)}) {
        const int n = g->order;
        for (int a = 0; a < n; ++a) {
            CHECK(g->mul(g->identity, a) == a);
            CHECK(g->mul(a, g->identity) == a);
            CHECK(g->mul(a, g->inverse(a)) == g->identity);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
        }
    }
}

TEST_CASE("element orders and exponent") {
    GroupPtr s3 = symmetric_group(3);
    std::multiset<int> orders;
    for (int a = 0; a < 6; ++a) orders.insert(s3->element_order(a));
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
    CHECK(s3->exponent() == 6);
    CHECK(cyclic_group(12)->exponent() == 12);
    CHECK(klein_four_group()->exponent() == 2);
    CHECK(quaternion_group()->exponent() == 4);
}

TEST_CASE("conjugacy class counts match character theory") {
    CHECK(symmetric_group(3)->conjugacy_classes().size() == 3);
    CHECK(symmetric_group(4)->conjugacy_classes().size() == 5);
    CHECK(quaternion_group()->conjugacy_classes().size() == 5);
    CHECK(dihedral_group(4)->conjugacy_classes().size() == 5);
    CHECK(cyclic_group(6)->conjugacy_classes().size() == 6);
    CHECK(alternating_group(4)->conjugacy_classes().size() == 4);
}

TEST_CASE("permutation generators close to the expected group") {
    // a transposition and a 3-cycle generate all of S3
    GroupPtr g = group_from_permutations("s3p", 3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(g->order == 6);
    CHECK(!g->is_abelian());
    // a single 4-cycle generates Z4
    GroupPtr z4 = group_from_permutations("z4p", 4, {{1, 2, 3, 0}});
    CHECK(z4->order == 4);
    CHECK(z4->is_abelian());
    CHECK(z4->element_order(1) == 4);
}

TEST_CASE("group_from_table rejects a non-associative square") {
    // 2x2 latin square that is not a group table (no identity works)
    std::vector<int> bad = {1, 0, 0, 0};
    CHECK_THROWS(group_from_table("bad", bad));
}

TEST_CASE("homomorphism validation and its failure witnesses") {
    GroupPtr s3 = symmetric_group(3);
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> sgn(6);
    for (int a = 0; a < 6; ++a) sgn[size_t(a)] = s3->element_order(a) == 2 ? 1 : 0;
    GroupHom sign = make_hom(s3, z2, sgn);
    CHECK(hom_check(sign).pass);
    CHECK(is_hom(sign));

    // corrupting one image breaks multiplicativity with a named witness;
    // construct directly since make_hom validates eagerly
    std::vector<int> broken = sgn;
    broken[1] = 1 - broken[1];
    GroupHom nothom{s3, z2, broken};
    CHECK(!is_hom(nothom));
    CheckResult res = hom_check(nothom);
    CHECK(!res.pass);
    CHECK(!res.witnesses.empty());
    CHECK_THROWS_AS(make_hom(s3, z2, broken), ValidationError);
}

TEST_CASE("hom composition and identity") {
    GroupPtr z4 = cyclic_group(4);
    GroupPtr z2 = cyclic_group(2);
    GroupHom par = make_hom(z4, z2, {0, 1, 0, 1});
    GroupHom idz2 = identity_hom(z2);
    GroupHom both = compose(idz2, par);
    for (int a = 0; a < 4; ++a) CHECK(both(a) == par(a));
    GroupHom tr = trivial_hom(z4, z2);
    for (int a = 0; a < 4; ++a) CHECK(tr(a) == 0);
}

TEST_CASE("pullback of sign along sign has 18 composable pairs") {
    GroupPtr s3 = symmetric_group(3);
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> sgn(6);
    for (int a = 0; a < 6; ++a) sgn[size_t(a)] = s3->element_order(a) == 2 ? 1 : 0;
    GroupHom sign = make_hom(s3, z2, sgn);
    GroupPullback pb = pullback(sign, sign);
    CHECK(pb.group->order == 18);
    CHECK(pb.pairs.size() == 18);
    for (auto [a, b] : pb.pairs) CHECK(sgn[size_t(a)] == sgn[size_t(b)]);
    CHECK(is_hom(pb.p1));
    CHECK(is_hom(pb.p2));
    // projections recover the pair components
    for (int i = 0; i < pb.group->order; ++i) {
        CHECK(pb.p1(i) == pb.pairs[size_t(i)].first);
        CHECK(pb.p2(i) == pb.pairs[size_t(i)].second);
    }
}

TEST_CASE("equalizer of sign and trivial is the even subgroup") {
    GroupPtr s3 = symmetric_group(3);
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> sgn(6);
    for (int a = 0; a < 6; ++a) sgn[size_t(a)] = s3->element_order(a) == 2 ? 1 : 0;
    Subgroup eq = equalizer_subgroup(make_hom(s3, z2, sgn), trivial_hom(s3, z2));
    CHECK(eq.group->order == 3);
    for (int i = 0; i < 3; ++i) CHECK(s3->element_order(eq.inclusion(i)) != 2);
}

TEST_CASE("automorphism group of a cyclic group") {
    AutGroup a3 = aut_group(cyclic_group(3));
    CHECK(a3.group->order == 2);
    AutGroup a8 = aut_group(cyclic_group(8));
    CHECK(a8.group->order == 4);  // units mod 8
    AutGroup v4 = aut_group(klein_four_group());
    CHECK(v4.group->order == 6);  // GL(2, F2)
    // each element really is an automorphism
    GroupPtr z8 = cyclic_group(8);
    for (const auto& images : a8.autos) CHECK(is_hom(make_hom(z8, z8, images)));
}

TEST_CASE("direct product multiplies componentwise") {
    GroupPtr z2 = cyclic_group(2);
    GroupPtr z3 = cyclic_group(3);
    DirectProduct p = direct_product(z2, z3);
    CHECK(p.group->order == 6);
    CHECK(p.group->is_abelian());
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int m = p.group->mul(a, b);
            CHECK(p.p1(m) == z2->mul(p.p1(a), p.p1(b)));
            CHECK(p.p2(m) == z3->mul(p.p2(a), p.p2(b)));
        }
}

TEST_CASE("generated and kernel subgroups") {
    GroupPtr s3 = symmetric_group(3);
    // the 3-cycles plus identity form the unique subgroup of order 3
    std::vector<int> threes;
    for (int a = 0; a < 6; ++a)
        if (s3->element_order(a) == 3) threes.push_back(a);
    Subgroup gen = generated_subgroup(s3, {threes[0]});
    CHECK(gen.group->order == 3);
    CHECK(is_hom(gen.inclusion));

    GroupPtr z2 = cyclic_group(2);
    std::vector<int> sgn(6);
    for (int a = 0; a < 6; ++a) sgn[size_t(a)] = s3->element_order(a) == 2 ? 1 : 0;
    Subgroup ker = kernel_subgroup(make_hom(s3, z2, sgn));
    CHECK(ker.group->order == 3);
}

TEST_CASE("mediating morphism into a pullback is unique") {
    GroupPtr z4 = cyclic_group(4);
    GroupPtr z2 = cyclic_group(2);
    GroupHom par = make_hom(z4, z2, {0, 1, 0, 1});
    GroupPullback pb = pullback(par, par);
    CHECK(pb.group->order == 8);
    // the diagonal cone z4 -> z4 x_{z2} z4
    PullbackMediating med = mediate_pullback(pb, par, par, identity_hom(z4), identity_hom(z4));
    CHECK(is_hom(med.mediating));
    for (int c : med.candidates_per_element) CHECK(c == 1);
    for (int a = 0; a < 4; ++a) {
        CHECK(pb.p1(med.mediating(a)) == a);
        CHECK(pb.p2(med.mediating(a)) == a);
    }
}
