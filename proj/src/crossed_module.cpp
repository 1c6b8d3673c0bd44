#include "halg/crossed_module.hpp"

namespace halg {

CheckReport validate_xmod(const CrossedModule& xm) {
    CheckReport rep;
    const FiniteGroup& G = *xm.G;
    const FiniteGroup& H = *xm.H;

    if (int(xm.action.size()) != G.order * H.order)
        throw ValidationError("xmod.action", "", "action table has wrong size");
    for (int v : xm.action)
        if (v < 0 || v >= H.order)
            throw ValidationError("xmod.action", std::to_string(v), "action value out of range");
    if (!same_table(*xm.boundary.dom, H) || !same_table(*xm.boundary.cod, G))
        throw ValidationError("xmod.boundary", "", "boundary is not a map H -> G");

    rep.add(hom_check(xm.boundary, "boundary"));

    CheckResult unit("xmod.action-unit", "e |> h = h");
    for (int h = 0; h < H.order; ++h)
        if (xm.act(G.identity, h) != h) unit.fail("h=" + H.elem(h));
    rep.add(std::move(unit));

    CheckResult mixed("xmod.action-mixed", "(g1 g2) |> h = g1 |> (g2 |> h)");
    for (int g1 = 0; g1 < G.order; ++g1)
        for (int g2 = 0; g2 < G.order; ++g2)
            for (int h = 0; h < H.order; ++h)
                if (xm.act(G.mul(g1, g2), h) != xm.act(g1, xm.act(g2, h)))
                    mixed.fail("g1=" + G.elem(g1) + " g2=" + G.elem(g2) + " h=" + H.elem(h));
    rep.add(std::move(mixed));

    CheckResult bymorph("xmod.action-by-morphisms", "g |> (h h') = (g |> h)(g |> h')");
    for (int g = 0; g < G.order; ++g)
        for (int h1 = 0; h1 < H.order; ++h1)
            for (int h2 = 0; h2 < H.order; ++h2)
                if (xm.act(g, H.mul(h1, h2)) != H.mul(xm.act(g, h1), xm.act(g, h2)))
                    bymorph.fail("g=" + G.elem(g) + " h=" + H.elem(h1) + " h'=" + H.elem(h2));
    rep.add(std::move(bymorph));

    CheckResult equiv("xmod.equivariance", "d(g |> h) = g d(h) g^-1");
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < H.order; ++h)
            if (xm.boundary(xm.act(g, h)) != G.conj(g, xm.boundary(h)))
                equiv.fail("g=" + G.elem(g) + " h=" + H.elem(h));
    rep.add(std::move(equiv));

    CheckResult peiffer("xmod.peiffer", "d(h) |> h' = h h' h^-1");
    for (int h = 0; h < H.order; ++h)
        for (int h2 = 0; h2 < H.order; ++h2)
            if (xm.act(xm.boundary(h), h2) != H.conj(h, h2))
                peiffer.fail("h=" + H.elem(h) + " h'=" + H.elem(h2));
    rep.add(std::move(peiffer));

    return rep;
}

CrossedModule xmod_from_aut(const GroupPtr& h, int max_base_order) {
    AutGroup aut = aut_group(h, max_base_order);
    CrossedModule xm;
    xm.G = aut.group;
    xm.H = h;
    xm.action.resize(size_t(aut.group->order) * size_t(h->order));
    for (int g = 0; g < aut.group->order; ++g)
        for (int x = 0; x < h->order; ++x)
            xm.action[size_t(g) * size_t(h->order) + size_t(x)] = aut.autos[size_t(g)][size_t(x)];

    // boundary: h -> conjugation by h
    std::vector<int> bmap(size_t(h->order));
    for (int x = 0; x < h->order; ++x) {
        std::vector<int> conj_x(size_t(h->order));
        for (int y = 0; y < h->order; ++y) conj_x[size_t(y)] = h->conj(x, y);
        int idx = -1;
        for (size_t i = 0; i < aut.autos.size(); ++i)
            if (aut.autos[i] == conj_x) {
                idx = int(i);
                break;
            }
        if (idx < 0)
            throw ValidationError("xmod.boundary", h->elem(x),
                                  "conjugation is not in the computed automorphism group");
        bmap[size_t(x)] = idx;
    }
    xm.boundary = make_hom(h, aut.group, std::move(bmap));
    return xm;
}

CrossedModule xmod_from_module(const GroupPtr& g, const GroupPtr& h,
                               const std::vector<int>& action) {
    if (!h->is_abelian())
        throw ValidationError("xmod.module", h->name,
                              "a module structure needs an abelian group");
    CrossedModule xm;
    xm.G = g;
    xm.H = h;
    xm.action = action;
    xm.boundary = trivial_hom(h, g);
    return xm;
}

CrossedModule xmod_trivial() {
    GroupPtr one = trivial_group();
    CrossedModule xm;
    xm.G = one;
    xm.H = one;
    xm.action = {0};
    xm.boundary = identity_hom(one);
    return xm;
}

bool same_xmod(const CrossedModule& a, const CrossedModule& b) {
    return same_table(*a.G, *b.G) && same_table(*a.H, *b.H) && a.action == b.action &&
           a.boundary.map == b.boundary.map;
}

bool same_xmod_hom(const XModHom& a, const XModHom& b) {
    return same_xmod(a.dom, b.dom) && same_xmod(a.cod, b.cod) && a.FG.map == b.FG.map &&
           a.FH.map == b.FH.map;
}

CheckReport validate_xmod_hom(const XModHom& f) {
    CheckReport rep;
    rep.add(hom_check(f.FG, "FG"));
    rep.add(hom_check(f.FH, "FH"));

    const FiniteGroup& G = *f.dom.G;
    const FiniteGroup& H = *f.dom.H;

    CheckResult square("xmodhom.boundary-square", "d'(FH(h)) = FG(d(h))");
    for (int h = 0; h < H.order; ++h)
        if (f.cod.boundary(f.FH(h)) != f.FG(f.dom.boundary(h)))
            square.fail("h=" + H.elem(h));
    rep.add(std::move(square));

    CheckResult act("xmodhom.action", "FH(g |> h) = FG(g) |>' FH(h)");
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < H.order; ++h)
            if (f.FH(f.dom.act(g, h)) != f.cod.act(f.FG(g), f.FH(h)))
                act.fail("g=" + G.elem(g) + " h=" + H.elem(h));
    rep.add(std::move(act));

    return rep;
}

XModHom xmod_identity_hom(const CrossedModule& xm) {
    return XModHom{xm, xm, identity_hom(xm.G), identity_hom(xm.H)};
}

CheckReport validate_xmod_2hom(const XMod2Hom& n) {
    CheckReport rep;
    const XModHom& F = n.source;
    const XModHom& Ft = n.target;
    if (!same_xmod(F.dom, Ft.dom) || !same_xmod(F.cod, Ft.cod))
        throw ValidationError("xmod2hom.parallel", "", "2-cell needs parallel morphisms");

    const FiniteGroup& G = *F.dom.G;
    const FiniteGroup& H = *F.dom.H;
    const FiniteGroup& Hc = *F.cod.H;
    const CrossedModule& cod = F.cod;
    const auto& eta = n.eta;
    if (int(eta.size()) != G.order)
        throw ValidationError("xmod2hom.eta", "", "eta has wrong length");

    CheckResult unit("xmod2hom.unit", "eta(e) = e");
    if (eta[size_t(G.identity)] != Hc.identity) unit.fail("eta(e)=" + Hc.elem(eta[size_t(G.identity)]));
    rep.add(std::move(unit));

    CheckResult cocycle("xmod2hom.cocycle", "eta(g1 g2) = eta(g1) (FG(g1) |>' eta(g2))");
    for (int g1 = 0; g1 < G.order; ++g1)
        for (int g2 = 0; g2 < G.order; ++g2)
            if (eta[size_t(G.mul(g1, g2))] !=
                Hc.mul(eta[size_t(g1)], cod.act(F.FG(g1), eta[size_t(g2)])))
                cocycle.fail("g1=" + G.elem(g1) + " g2=" + G.elem(g2));
    rep.add(std::move(cocycle));

    CheckResult bound("xmod2hom.boundary", "d'(eta(g)) = FG~(g) FG(g)^-1");
    for (int g = 0; g < G.order; ++g)
        if (cod.boundary(eta[size_t(g)]) !=
            cod.G->mul(Ft.FG(g), cod.G->inverse(F.FG(g))))
            bound.fail("g=" + G.elem(g));
    rep.add(std::move(bound));

    CheckResult fill("xmod2hom.filler", "eta(d(h)) = FH~(h) FH(h)^-1");
    for (int h = 0; h < H.order; ++h)
        if (eta[size_t(F.dom.boundary(h))] !=
            Hc.mul(Ft.FH(h), Hc.inverse(F.FH(h))))
            fill.fail("h=" + H.elem(h));
    rep.add(std::move(fill));

    return rep;
}

}  // namespace halg
