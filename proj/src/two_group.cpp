#include "halg/two_group.hpp"

#include <algorithm>

namespace halg {

int compose_vertical(const TwoGroup& tg, int a, int b) {
    if (tg.s(a) != tg.t(b))
        throw ValidationError("2group.composable",
                              tg.G1->elem(a) + " o " + tg.G1->elem(b),
                              "not composable: s(" + tg.G1->elem(a) + ")=" +
                                  tg.G0->elem(tg.s(a)) + " but t(" + tg.G1->elem(b) + ")=" +
                                  tg.G0->elem(tg.t(b)));
    const FiniteGroup& g1 = *tg.G1;
    return g1.mul(g1.mul(a, g1.inverse(tg.iota(tg.s(a)))), b);
}

int vertical_inverse(const TwoGroup& tg, int a) {
    const FiniteGroup& g1 = *tg.G1;
    return g1.mul(g1.mul(tg.iota(tg.s(a)), g1.inverse(a)), tg.iota(tg.t(a)));
}

CheckReport validate_2group(const TwoGroup& tg) {
    CheckReport rep;
    const FiniteGroup& g0 = *tg.G0;
    const FiniteGroup& g1 = *tg.G1;

    rep.add(hom_check(tg.s, "s"));
    rep.add(hom_check(tg.t, "t"));
    rep.add(hom_check(tg.iota, "iota"));

    CheckResult sect("2group.section", "s(iota(x)) = x and t(iota(x)) = x");
    for (int x = 0; x < g0.order; ++x) {
        if (tg.s(tg.iota(x)) != x) sect.fail("s(iota(" + g0.elem(x) + "))");
        if (tg.t(tg.iota(x)) != x) sect.fail("t(iota(" + g0.elem(x) + "))");
    }
    rep.add(std::move(sect));

    GroupPullback pb = pullback(tg.s, tg.t);

    CheckResult st("2group.composite-ends", "s(a o b) = s(b) and t(a o b) = t(a)");
    for (auto& [a, b] : pb.pairs) {
        int c = compose_vertical(tg, a, b);
        if (tg.s(c) != tg.s(b))
            st.fail("s: a=" + g1.elem(a) + " b=" + g1.elem(b));
        if (tg.t(c) != tg.t(a))
            st.fail("t: a=" + g1.elem(a) + " b=" + g1.elem(b));
    }
    rep.add(std::move(st));

    CheckResult morph("2group.composition-morphism",
                      "o is a group homomorphism on composable pairs");
    for (int i = 0; i < pb.group->order; ++i)
        for (int j = 0; j < pb.group->order; ++j) {
            int k = pb.group->mul(i, j);
            int lhs = compose_vertical(tg, pb.p1(k), pb.p2(k));
            int rhs = g1.mul(compose_vertical(tg, pb.p1(i), pb.p2(i)),
                             compose_vertical(tg, pb.p1(j), pb.p2(j)));
            if (lhs != rhs)
                morph.fail("pairs " + pb.group->elem(i) + ", " + pb.group->elem(j));
        }
    rep.add(std::move(morph));

    // fibers of t for composable-triple enumeration
    std::vector<std::vector<int>> t_fiber(size_t(g0.order));
    for (int c = 0; c < g1.order; ++c) t_fiber[size_t(tg.t(c))].push_back(c);

    CheckResult assoc("2group.associativity", "(a o b) o c = a o (b o c)");
    for (auto& [a, b] : pb.pairs)
        for (int c : t_fiber[size_t(tg.s(b))]) {
            int lhs = compose_vertical(tg, compose_vertical(tg, a, b), c);
            int rhs = compose_vertical(tg, a, compose_vertical(tg, b, c));
            if (lhs != rhs)
                assoc.fail("a=" + g1.elem(a) + " b=" + g1.elem(b) + " c=" + g1.elem(c));
        }
    rep.add(std::move(assoc));

    CheckResult units("2group.units", "a o iota(s(a)) = a and iota(t(a)) o a = a");
    for (int a = 0; a < g1.order; ++a) {
        if (compose_vertical(tg, a, tg.iota(tg.s(a))) != a)
            units.fail("right: a=" + g1.elem(a));
        if (compose_vertical(tg, tg.iota(tg.t(a)), a) != a)
            units.fail("left: a=" + g1.elem(a));
    }
    rep.add(std::move(units));

    return rep;
}

CheckReport vertical_inverse_checks(const TwoGroup& tg) {
    CheckReport rep;
    const FiniteGroup& g1 = *tg.G1;

    CheckResult ends("2group.xi-ends", "s(xi(a)) = t(a) and t(xi(a)) = s(a)");
    CheckResult cancel("2group.xi-cancel", "xi(a) o a = iota(s(a)) and a o xi(a) = iota(t(a))");
    for (int a = 0; a < g1.order; ++a) {
        int x = vertical_inverse(tg, a);
        if (tg.s(x) != tg.t(a) || tg.t(x) != tg.s(a)) ends.fail("a=" + g1.elem(a));
        if (compose_vertical(tg, x, a) != tg.iota(tg.s(a))) cancel.fail("left: a=" + g1.elem(a));
        if (compose_vertical(tg, a, x) != tg.iota(tg.t(a))) cancel.fail("right: a=" + g1.elem(a));
    }
    rep.add(std::move(ends));
    rep.add(std::move(cancel));

    CheckResult anti("2group.xi-antimorphism", "xi(a o b) = xi(b) o xi(a)");
    GroupPullback pb = pullback(tg.s, tg.t);
    for (auto& [a, b] : pb.pairs)
        if (vertical_inverse(tg, compose_vertical(tg, a, b)) !=
            compose_vertical(tg, vertical_inverse(tg, b), vertical_inverse(tg, a)))
            anti.fail("a=" + g1.elem(a) + " b=" + g1.elem(b));
    rep.add(std::move(anti));

    GroupHom xi{tg.G1, tg.G1, {}};
    for (int a = 0; a < g1.order; ++a) xi.map.push_back(vertical_inverse(tg, a));
    rep.add(hom_check(xi, "xi"));

    return rep;
}

int pair_index(const CrossedModule& xm, int h, int g) { return h * xm.G->order + g; }

std::pair<int, int> index_pair(const CrossedModule& xm, int idx) {
    return {idx / xm.G->order, idx % xm.G->order};
}

TwoGroup to_2group(const CrossedModule& xm) {
    const FiniteGroup& G = *xm.G;
    const FiniteGroup& H = *xm.H;
    int n = G.order * H.order;
    std::vector<int> table(size_t(n) * size_t(n));
    std::vector<std::string> names;
    names.reserve(size_t(n));
    for (int h = 0; h < H.order; ++h)
        for (int g = 0; g < G.order; ++g) names.push_back("(" + H.elem(h) + "," + G.elem(g) + ")");
    for (int h1 = 0; h1 < H.order; ++h1)
        for (int g1 = 0; g1 < G.order; ++g1)
            for (int h2 = 0; h2 < H.order; ++h2)
                for (int g2 = 0; g2 < G.order; ++g2) {
                    int x = pair_index(xm, h1, g1), y = pair_index(xm, h2, g2);
                    table[size_t(x) * size_t(n) + size_t(y)] =
                        pair_index(xm, H.mul(h1, xm.act(g1, h2)), G.mul(g1, g2));
                }
    GroupPtr g1grp =
        group_from_table(H.name + ":" + G.name, std::move(table), std::move(names));

    TwoGroup tg;
    tg.G0 = xm.G;
    tg.G1 = g1grp;
    tg.s = GroupHom{g1grp, xm.G, std::vector<int>(size_t(n))};
    tg.t = GroupHom{g1grp, xm.G, std::vector<int>(size_t(n))};
    for (int h = 0; h < H.order; ++h)
        for (int g = 0; g < G.order; ++g) {
            tg.s.map[size_t(pair_index(xm, h, g))] = g;
            tg.t.map[size_t(pair_index(xm, h, g))] = G.mul(xm.boundary(h), g);
        }
    tg.iota = GroupHom{xm.G, g1grp, std::vector<int>(size_t(G.order))};
    for (int g = 0; g < G.order; ++g) tg.iota.map[size_t(g)] = pair_index(xm, H.identity, g);

    for (const char* nm : {"s", "t", "iota"}) {
        const GroupHom& f = std::string(nm) == "s" ? tg.s : std::string(nm) == "t" ? tg.t : tg.iota;
        CheckResult c = hom_check(f, nm);
        if (!c.pass)
            throw ValidationError("2group." + std::string(nm), c.witnesses.front(),
                                  "structure map is not a homomorphism");
    }
    return tg;
}

CrossedModule xmod_from_2group(const TwoGroup& tg) {
    Subgroup ker = kernel_subgroup(tg.s);
    CrossedModule xm;
    xm.G = tg.G0;
    xm.H = ker.group;
    xm.boundary = compose(tg.t, ker.inclusion);

    std::vector<int> back(size_t(tg.G1->order), -1);
    for (int i = 0; i < ker.group->order; ++i) back[size_t(ker.inclusion(i))] = i;
    xm.action.assign(size_t(tg.G0->order) * size_t(ker.group->order), -1);
    for (int g = 0; g < tg.G0->order; ++g)
        for (int h = 0; h < ker.group->order; ++h) {
            int conj = tg.G1->conj(tg.iota(g), ker.inclusion(h));
            if (back[size_t(conj)] < 0)
                throw ValidationError("2group.extract", tg.G1->elem(conj),
                                      "conjugate of a source-trivial arrow left the kernel");
            xm.action[size_t(g) * size_t(ker.group->order) + size_t(h)] = back[size_t(conj)];
        }
    return xm;
}

bool same_2group(const TwoGroup& a, const TwoGroup& b) {
    return same_table(*a.G0, *b.G0) && same_table(*a.G1, *b.G1) && a.s.map == b.s.map &&
           a.t.map == b.t.map && a.iota.map == b.iota.map;
}

CheckReport functor_check(const Functor2& f) {
    CheckReport rep;
    rep.add(hom_check(f.F0, "F0"));
    rep.add(hom_check(f.F1, "F1"));

    const FiniteGroup& g1 = *f.dom.G1;
    const FiniteGroup& g0 = *f.dom.G0;

    CheckResult src("2functor.source", "s'(F1(a)) = F0(s(a))");
    CheckResult tgt("2functor.target", "t'(F1(a)) = F0(t(a))");
    for (int a = 0; a < g1.order; ++a) {
        if (f.cod.s(f.F1(a)) != f.F0(f.dom.s(a))) src.fail("a=" + g1.elem(a));
        if (f.cod.t(f.F1(a)) != f.F0(f.dom.t(a))) tgt.fail("a=" + g1.elem(a));
    }
    rep.add(std::move(src));
    rep.add(std::move(tgt));

    CheckResult un("2functor.identities", "F1(iota(x)) = iota'(F0(x))");
    for (int x = 0; x < g0.order; ++x)
        if (f.F1(f.dom.iota(x)) != f.cod.iota(f.F0(x))) un.fail("x=" + g0.elem(x));
    rep.add(std::move(un));

    CheckResult comp("2functor.composition", "F1(a o b) = F1(a) o' F1(b)");
    GroupPullback pb = pullback(f.dom.s, f.dom.t);
    for (auto& [a, b] : pb.pairs) {
        int lhs = f.F1(compose_vertical(f.dom, a, b));
        int rhs = compose_vertical(f.cod, f.F1(a), f.F1(b));
        if (lhs != rhs) comp.fail("a=" + g1.elem(a) + " b=" + g1.elem(b));
    }
    rep.add(std::move(comp));

    return rep;
}

Functor2 identity_functor(const TwoGroup& tg) {
    return Functor2{tg, tg, identity_hom(tg.G0), identity_hom(tg.G1)};
}

Functor2 compose_functors(const Functor2& first, const Functor2& second) {
    if (!same_2group(first.cod, second.dom))
        throw ValidationError("2functor.compose", "", "functors are not composable");
    return Functor2{first.dom, second.cod, compose(second.F0, first.F0),
                    compose(second.F1, first.F1)};
}

Functor2 xmod_hom_to_functor(const XModHom& f) {
    TwoGroup dom = to_2group(f.dom);
    TwoGroup cod = to_2group(f.cod);
    GroupHom F1{dom.G1, cod.G1, std::vector<int>(size_t(dom.G1->order))};
    for (int h = 0; h < f.dom.H->order; ++h)
        for (int g = 0; g < f.dom.G->order; ++g)
            F1.map[size_t(pair_index(f.dom, h, g))] = pair_index(f.cod, f.FH(h), f.FG(g));
    return Functor2{std::move(dom), std::move(cod), f.FG, std::move(F1)};
}

bool same_functor(const Functor2& a, const Functor2& b) {
    return same_2group(a.dom, b.dom) && same_2group(a.cod, b.cod) && a.F0.map == b.F0.map &&
           a.F1.map == b.F1.map;
}

CheckReport transf_check(const Transf2& n) {
    CheckReport rep;
    if (!same_2group(n.source.dom, n.target.dom) || !same_2group(n.source.cod, n.target.cod))
        throw ValidationError("2transf.parallel", "", "cell needs parallel functors");
    const TwoGroup& dom = n.source.dom;
    const TwoGroup& cod = n.source.cod;
    if (int(n.eta.size()) != dom.G0->order)
        throw ValidationError("2transf.eta", "", "component list has wrong length");

    CheckResult ends("2transf.ends", "s'(eta(x)) = F0(x) and t'(eta(x)) = F0~(x)");
    for (int x = 0; x < dom.G0->order; ++x) {
        if (cod.s(n.eta[size_t(x)]) != n.source.F0(x)) ends.fail("s: x=" + dom.G0->elem(x));
        if (cod.t(n.eta[size_t(x)]) != n.target.F0(x)) ends.fail("t: x=" + dom.G0->elem(x));
    }
    rep.add(std::move(ends));

    CheckResult nat("2transf.naturality", "eta(t(a)) o' F1(a) = F1~(a) o' eta(s(a))");
    if (rep.all_pass()) {
        for (int a = 0; a < dom.G1->order; ++a) {
            int lhs = compose_vertical(cod, n.eta[size_t(dom.t(a))], n.source.F1(a));
            int rhs = compose_vertical(cod, n.target.F1(a), n.eta[size_t(dom.s(a))]);
            if (lhs != rhs) nat.fail("a=" + dom.G1->elem(a));
        }
    } else {
        nat.fail("skipped: component ends are wrong");
    }
    rep.add(std::move(nat));

    return rep;
}

Transf2 identity_transf(const Functor2& f) {
    Transf2 n;
    n.source = f;
    n.target = f;
    n.eta.resize(size_t(f.dom.G0->order));
    for (int x = 0; x < f.dom.G0->order; ++x) n.eta[size_t(x)] = f.cod.iota(f.F0(x));
    return n;
}

Transf2 compose_transf_vertical(const Transf2& eta, const Transf2& theta) {
    if (!same_functor(eta.target, theta.source))
        throw ValidationError("2transf.stack", "", "cells are not stackable");
    Transf2 out;
    out.source = eta.source;
    out.target = theta.target;
    const TwoGroup& cod = eta.source.cod;
    out.eta.resize(eta.eta.size());
    for (size_t x = 0; x < eta.eta.size(); ++x)
        out.eta[x] = compose_vertical(cod, theta.eta[x], eta.eta[x]);
    return out;
}

HorizontalComposite compose_transf_horizontal(const Transf2& eta, const Transf2& tau) {
    if (!same_2group(eta.source.cod, tau.source.dom))
        throw ValidationError("2transf.whisker", "", "cells do not share the middle object");
    const TwoGroup& out_cod = tau.source.cod;
    const Functor2& F = eta.source;
    const Functor2& Ft = eta.target;
    const Functor2& G = tau.source;
    const Functor2& Gt = tau.target;

    HorizontalComposite out;
    out.result.source = compose_functors(F, G);
    out.result.target = compose_functors(Ft, Gt);
    out.result.eta.resize(eta.eta.size());
    for (size_t x = 0; x < eta.eta.size(); ++x) {
        int first = compose_vertical(out_cod, Gt.F1(eta.eta[x]), tau.eta[size_t(F.F0(int(x)))]);
        int second = compose_vertical(out_cod, tau.eta[size_t(Ft.F0(int(x)))], G.F1(eta.eta[x]));
        out.result.eta[x] = first;
        if (first != second) {
            out.agree = false;
            out.mismatches.push_back("x=" + F.dom.G0->elem(int(x)));
        }
    }
    return out;
}

Transf2 xmod_2hom_to_transf(const XMod2Hom& n) {
    Transf2 out;
    out.source = xmod_hom_to_functor(n.source);
    out.target = xmod_hom_to_functor(n.target);
    out.eta.resize(n.eta.size());
    for (size_t g = 0; g < n.eta.size(); ++g)
        out.eta[g] = pair_index(n.source.cod, n.eta[g], n.source.FG(int(g)));
    return out;
}

}  // namespace halg
