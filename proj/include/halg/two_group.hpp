#pragma once

#include "halg/check.hpp"
#include "halg/crossed_module.hpp"
#include "halg/group.hpp"

namespace halg {

// A category internal to groups whose composition is forced by the group
// structure: a o b = a iota(s(a))^-1 b whenever s(a) = t(b). Composition is
// read right to left, so a o b applies b first.
struct TwoGroup {
    GroupPtr G0, G1;
    GroupHom s, t, iota;
};

int compose_vertical(const TwoGroup& tg, int a, int b);
int vertical_inverse(const TwoGroup& tg, int a);  // xi(a) = iota(s(a)) a^-1 iota(t(a))

CheckReport validate_2group(const TwoGroup& tg);
CheckReport vertical_inverse_checks(const TwoGroup& tg);

// Semidirect product model: arrows are pairs (h, g) at index h * |G| + g with
// s(h, g) = g and t(h, g) = d(h) g.
TwoGroup to_2group(const CrossedModule& xm);
int pair_index(const CrossedModule& xm, int h, int g);
std::pair<int, int> index_pair(const CrossedModule& xm, int idx);

// Diagnostic inverse construction: states are kept, arrows with source e form
// the new normal-side group, the boundary is t restricted to it, and states
// act by conjugation with identity arrows.
CrossedModule xmod_from_2group(const TwoGroup& tg);

bool same_2group(const TwoGroup& a, const TwoGroup& b);

struct Functor2 {
    TwoGroup dom, cod;
    GroupHom F0, F1;
};

CheckReport functor_check(const Functor2& f);
Functor2 identity_functor(const TwoGroup& tg);
Functor2 compose_functors(const Functor2& first, const Functor2& second);  // apply first, then second
Functor2 xmod_hom_to_functor(const XModHom& f);
bool same_functor(const Functor2& a, const Functor2& b);

struct Transf2 {
    Functor2 source, target;
    std::vector<int> eta;  // G0 of the domain -> G1 of the codomain
};

CheckReport transf_check(const Transf2& n);
Transf2 identity_transf(const Functor2& f);

// theta after eta: both stacks of cells between functors dom -> cod with
// target(eta) = source(theta); pointwise theta(x) o eta(x).
Transf2 compose_transf_vertical(const Transf2& eta, const Transf2& theta);

// Godement product of eta : F => F~ (on C -> C') and tau : G => G~ (on
// C' -> C''). Both whiskerings are computed; `agree` reports whether they
// match (they must), and `result` is the first one.
struct HorizontalComposite {
    Transf2 result;
    bool agree = true;
    std::vector<std::string> mismatches;
};
HorizontalComposite compose_transf_horizontal(const Transf2& eta, const Transf2& tau);

Transf2 xmod_2hom_to_transf(const XMod2Hom& n);

}  // namespace halg
