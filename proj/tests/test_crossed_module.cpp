#include "halg/crossed_module.hpp"

#include <doctest.h>

#include <set>

using namespace halg;

namespace {

// Z2 acting on Z3 by inversion, trivial boundary.
CrossedModule inverting_module() {
    std::vector<int> act(6);
    for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 3; ++h) act[size_t(g * 3 + h)] = (g == 0) ? h : (3 - h) % 3;
    return xmod_from_module(cyclic_group(2), cyclic_group(3), act);
}

}  // namespace

TEST_CASE("the automorphism construction on Z3 validates") {
    CrossedModule xm = xmod_from_aut(cyclic_group(3));
    CHECK(xm.G->order == 2);
    CHECK(xm.H->order == 3);
    CHECK(validate_xmod(xm).all_pass());
    // boundary sends h to conjugation by h; Z3 is abelian so it is trivial
    for (int h = 0; h < 3; ++h) CHECK(xm.boundary(h) == 0);
}

TEST_CASE("the automorphism construction on a nonabelian fiber validates") {
    CrossedModule xm = xmod_from_aut(symmetric_group(3));
    CHECK(xm.G->order == 6);  // Aut(S3) = Inn(S3) = S3
    CHECK(xm.H->order == 6);
    CHECK(validate_xmod(xm).all_pass());
    // the boundary is injective here (S3 has trivial center)
    std::set<int> images;
    for (int h = 0; h < 6; ++h) images.insert(xm.boundary(h));
    CHECK(images.size() == 6);
}

TEST_CASE("module actions with trivial boundary validate") {
    CrossedModule xm = inverting_module();
    CHECK(validate_xmod(xm).all_pass());
    CHECK(xm.act(1, 1) == 2);
    CHECK(xm.act(0, 1) == 1);
    CHECK(validate_xmod(xmod_trivial()).all_pass());
    // identity action of the trivial group
    CrossedModule eh = xmod_from_module(trivial_group(), cyclic_group(4), {0, 1, 2, 3});
    CHECK(validate_xmod(eh).all_pass());
}

TEST_CASE("corrupting the boundary breaks equivariance with a witness") {
    CrossedModule xm = xmod_from_aut(cyclic_group(3));
    // send the generator of Z3 to the inverting automorphism
    CrossedModule bad = xm;
    std::vector<int> images = bad.boundary.map;
    images[1] = 1;
    bad.boundary = GroupHom{bad.H, bad.G, images};
    CheckReport rep = validate_xmod(bad);
    CHECK(!rep.all_pass());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.pass) {
            CHECK(!c.witnesses.empty());
            witnessed = true;
        }
    CHECK(witnessed);
}

TEST_CASE("corrupting the action breaks the axioms with a witness") {
    CrossedModule bad = inverting_module();
    bad.action[4] = (bad.action[4] + 1) % 3;  // g=1 no longer acts by an automorphism
    CheckReport rep = validate_xmod(bad);
    CHECK(!rep.all_pass());
    // a non-identity Peiffer or action failure must name elements
    int failures = 0;
    for (const auto& c : rep.checks)
        if (!c.pass) failures += int(c.witnesses.size());
    CHECK(failures > 0);
}

TEST_CASE("a nontrivial boundary that is not equivariant is caught") {
    // boundary Z3 -> Z2 cannot be a hom unless trivial; use Z3 -> Z3 shifted
    GroupPtr z3 = cyclic_group(3);
    std::vector<int> act(9);
    for (int g = 0; g < 3; ++g)
        for (int h = 0; h < 3; ++h) act[size_t(g * 3 + h)] = h;  // trivial action
    CrossedModule xm{z3, z3, act, make_hom(z3, z3, {0, 1, 2})};  // identity boundary
    // identity boundary with trivial action fails Peiffer: d(h) |> h' must be h h' h^-1
    CheckReport rep = validate_xmod(xm);
    CHECK(rep.all_pass());  // Z3 abelian: conjugation is trivial, so this is fine

    // now make the action genuinely wrong for the same boundary
    std::vector<int> act2 = act;
    act2[size_t(1 * 3 + 1)] = 2;
    act2[size_t(1 * 3 + 2)] = 1;
    CrossedModule xm2{z3, z3, act2, make_hom(z3, z3, {0, 1, 2})};
    CHECK(!validate_xmod(xm2).all_pass());
}

TEST_CASE("identity morphism of a crossed module validates") {
    CrossedModule xm = inverting_module();
    XModHom id = xmod_identity_hom(xm);
    CHECK(validate_xmod_hom(id).all_pass());
    CHECK(same_xmod_hom(id, id));
}

TEST_CASE("a non-equivariant pair of maps fails the morphism check") {
    CrossedModule xm = inverting_module();
    // collapsing the base while keeping the fiber forgets the inversion action
    XModHom f{xm, xm, trivial_hom(xm.G, xm.G), identity_hom(xm.H)};
    CheckReport rep = validate_xmod_hom(f);
    CHECK(!rep.all_pass());
    const CheckResult* act = rep.find("xmodhom.action");
    REQUIRE(act != nullptr);
    CHECK(!act->pass);
}

TEST_CASE("2-cells between crossed module morphisms validate") {
    CrossedModule xm = inverting_module();
    XModHom id = xmod_identity_hom(xm);
    XMod2Hom unit{id, id, std::vector<int>(size_t(xm.G->order), xm.H->identity)};
    CHECK(validate_xmod_2hom(unit).all_pass());
    // a nonzero component between the identity and itself is not a valid 2-cell
    XMod2Hom skew{id, id, {1, 0}};
    CHECK(!validate_xmod_2hom(skew).all_pass());
}

TEST_CASE("same_xmod distinguishes instances") {
    CHECK(same_xmod(inverting_module(), inverting_module()));
    CHECK(!same_xmod(inverting_module(), xmod_trivial()));
}
