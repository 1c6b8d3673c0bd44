#pragma once

#include "halg/check.hpp"
#include "halg/group.hpp"

namespace halg {

// A group G acting on a group H together with an equivariant boundary
// H -> G satisfying the Peiffer identity.
struct CrossedModule {
    GroupPtr G, H;
    std::vector<int> action;  // action[g * |H| + h] = g |> h
    GroupHom boundary;        // H -> G

    int act(int g, int h) const { return action[size_t(g) * size_t(H->order) + size_t(h)]; }
};

CheckReport validate_xmod(const CrossedModule& xm);

// H with its full automorphism group acting by evaluation; the boundary sends
// h to conjugation by h.
CrossedModule xmod_from_aut(const GroupPtr& h, int max_base_order = 8);

// An action of g on an abelian h with trivial boundary.
CrossedModule xmod_from_module(const GroupPtr& g, const GroupPtr& h,
                               const std::vector<int>& action);

CrossedModule xmod_trivial();

struct XModHom {
    CrossedModule dom, cod;
    GroupHom FG, FH;
};

CheckReport validate_xmod_hom(const XModHom& f);

XModHom xmod_identity_hom(const CrossedModule& xm);

// A 2-cell between parallel crossed module morphisms, carried by a map
// eta : G -> H'.
struct XMod2Hom {
    XModHom source, target;
    std::vector<int> eta;
};

CheckReport validate_xmod_2hom(const XMod2Hom& n);

bool same_xmod(const CrossedModule& a, const CrossedModule& b);
bool same_xmod_hom(const XModHom& a, const XModHom& b);

}  // namespace halg
