#pragma once

#include "halg/hopf_limits.hpp"
#include "halg/two_group.hpp"

namespace halg {

// A two-object-level Hopf structure: one Hopf algebra of cells over a Hopf
// algebra of objects, with a partial second multiplication `circ` defined on
// the materialized pullback of (s, t).
template <class K>
struct Trialgebra {
    TwoGroup group;          // the 2-group this was built from
    HopfPtr<K> H0, H1;       // objects, cells
    HopfHom<K> s, t;         // H1 -> H0
    HopfHom<K> iota;         // H0 -> H1
    GroupPullback composable;  // group-level composable pairs (a, b), s(a) = t(b)
    GroupHom compose;          // composable.group -> G1, vertical composition
    PullbackHopf<K> pb;        // Hopf-level pullback of (s, t), cached
    HopfHom<K> comparison;     // k[composable.group] -> pb carrier (iso)
    HopfHom<K> circ;           // pb carrier -> H1

    Vec<K> pair_coords(Index a, Index b) const {
        return pb.sub.to_coords(unit_vec<K>(H1->dim * H1->dim, a * H1->dim + b, H1->one));
    }
};

template <class K>
Trialgebra<K> trialgebra_from_2group(const TwoGroup& tg, const K& one = K(1)) {
    Trialgebra<K> tri;
    tri.group = tg;
    tri.H0 = group_algebra<K>(tg.G0, one);
    tri.H1 = group_algebra<K>(tg.G1, one);
    tri.s = linearize_hom(tg.s, tri.H1, tri.H0);
    tri.t = linearize_hom(tg.t, tri.H1, tri.H0);
    tri.iota = linearize_hom(tg.iota, tri.H0, tri.H1);
    tri.composable = pullback(tg.s, tg.t);

    std::vector<int> table(tri.composable.pairs.size());
    for (size_t i = 0; i < tri.composable.pairs.size(); ++i)
        table[i] = compose_vertical(tg, tri.composable.pairs[i].first,
                                    tri.composable.pairs[i].second);
    tri.compose = make_hom(tri.composable.group, tg.G1, table);

    tri.pb = pullback_cochopf(tri.s, tri.t);
    HopfPtr<K> kp = group_algebra<K>(tri.composable.group, one);
    const Index n = tri.H1->dim;
    Mat<K> cmp(tri.pb.sub.carrier.dim(), kp->dim);
    for (Index p = 0; p < kp->dim; ++p) {
        auto [a, b] = tri.composable.pairs[size_t(p)];
        cmp.col(p) = tri.pb.sub.to_coords(unit_vec<K>(n * n, Index(a) * n + Index(b), one));
    }
    tri.comparison = HopfHom<K>{kp, tri.pb.sub.induced, std::move(cmp)};
    std::optional<HopfHom<K>> inv = inverse_hopf_hom(tri.comparison);
    if (!inv)
        throw ValidationError("tri.comparison", tri.H1->name,
                              "composable-pair basis does not span the Hopf pullback");
    tri.circ = compose(linearize_hom(tri.compose, kp, tri.H1), *inv);
    return tri;
}

// The contraction h(1) S(iota(s(h(2)))) h~ evaluated on the full tensor
// square; restricted to the pullback carrier it must equal circ.
template <class K>
Mat<K> circ_sweedler_matrix(const Trialgebra<K>& tri) {
    const Index n = tri.H1->dim;
    const K zero = tri.H1->one - tri.H1->one;
    Mat<K> sis = tri.H1->antipode * tri.iota.map * tri.s.map;  // S o iota o s
    Mat<K> out = Mat<K>::Constant(n, n * n, zero);
    for (Index a = 0; a < n; ++a) {
        std::vector<std::pair<Index, K>> terms;  // (p q) pairs of Delta(e_a)
        for (Index pq = 0; pq < n * n; ++pq)
            if (!(tri.H1->delta(pq, a) == zero)) terms.emplace_back(pq, tri.H1->delta(pq, a));
        for (Index b = 0; b < n; ++b) {
            Vec<K> acc = Vec<K>::Constant(n, zero);
            Vec<K> eb = unit_vec<K>(n, b, tri.H1->one);
            for (const auto& [pq, c] : terms) {
                Vec<K> left = unit_vec<K>(n, pq / n, tri.H1->one);
                Vec<K> mid = sis.col(pq % n);
                acc += c * tri.H1->mul(tri.H1->mul(left, mid), eb);
            }
            out.col(a * n + b) = acc;
        }
    }
    return out;
}

template <class K>
Vec<K> circ_sweedler(const Trialgebra<K>& tri, const Vec<K>& tensor_vec) {
    if (!contains(tri.pb.sub.carrier, tensor_vec))
        throw ValidationError("tri.sweedler-domain", "",
                              "vector is outside the materialized pullback");
    return circ_sweedler_matrix(tri) * tensor_vec;
}

// S_vert(h) = iota(s(h(1))) S(h(2)) iota(t(h(3))), built from the iterated
// coproduct by contraction.
template <class K>
HopfHom<K> vertical_antipode(const Trialgebra<K>& tri) {
    const Index n = tri.H1->dim;
    const K zero = tri.H1->one - tri.H1->one;
    Mat<K> is = tri.iota.map * tri.s.map;
    Mat<K> it = tri.iota.map * tri.t.map;
    Mat<K> out = Mat<K>::Constant(n, n, zero);
    for (Index a = 0; a < n; ++a) {
        for (Index pq = 0; pq < n * n; ++pq) {
            K c1 = tri.H1->delta(pq, a);
            if (c1 == zero) continue;
            Index p = pq / n, q = pq % n;
            for (Index ru = 0; ru < n * n; ++ru) {
                K c2 = tri.H1->delta(ru, p);
                if (c2 == zero) continue;
                Vec<K> term = tri.H1->mul(
                    Vec<K>(is.col(ru / n)),
                    tri.H1->mul(Vec<K>(tri.H1->antipode.col(ru % n)), Vec<K>(it.col(q))));
                out.col(a) += (c1 * c2) * term;
            }
        }
    }
    return HopfHom<K>{tri.H1, tri.H1, std::move(out)};
}

namespace detail {

template <class K>
std::string pair_name(const Trialgebra<K>& tri, Index p) {
    auto [a, b] = tri.composable.pairs[size_t(p)];
    return tri.H1->bname(Index(a)) + "(x)" + tri.H1->bname(Index(b));
}

}  // namespace detail

// Interchange: composing then multiplying equals multiplying then composing,
// as one linear-map equality on the pullback carrier.
template <class K>
CheckReport interchange_check(const Trialgebra<K>& tri) {
    CheckReport rep;
    const Index d = tri.pb.sub.induced->dim;
    CheckResult ic("tri.interchange",
                   "circ(v w) = circ(v) circ(w) for v, w in the pullback carrier");
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            Vec<K> lhs = tri.circ.map * tri.pb.sub.induced->mul_basis(i, j);
            Vec<K> rhs = tri.H1->mul(Vec<K>(tri.circ.map.col(i)), Vec<K>(tri.circ.map.col(j)));
            if (!vec_eq<K>(lhs, rhs))
                ic.fail(detail::pair_name(tri, i) + ", " + detail::pair_name(tri, j));
        }
    rep.add(std::move(ic));
    return rep;
}

// When the object algebra is the base field, every pair is composable and
// both multiplications collapse to one commutative product.
template <class K>
CheckReport eckmann_hilton_check(const Trialgebra<K>& tri) {
    if (tri.H0->dim != 1)
        throw ValidationError("tri.eckmann-hilton-precondition",
                              "dim H0 = " + std::to_string(tri.H0->dim),
                              "objects form more than the base field; use interchange_check");
    CheckReport rep;
    const Index n = tri.H1->dim;

    CheckResult full("tri.eh-full-pullback", "the pullback carrier is all of H1 (x) H1");
    if (tri.pb.sub.induced->dim != n * n)
        full.fail("dim = " + std::to_string(tri.pb.sub.induced->dim));
    rep.add(std::move(full));

    Vec<K> unit2 = tri.iota.map.col(0);
    CheckResult unital("tri.eh-unit", "iota(1) is a two-sided unit for circ");
    CheckResult agree("tri.eh-agreement", "circ(h (x) h') = circ(h' (x) h) = h h' = h' h");
    for (Index a = 0; a < n; ++a) {
        Vec<K> ea = unit_vec<K>(n, a, tri.H1->one);
        Vec<K> left = tri.circ.map * tri.pb.sub.to_coords(kron_vec<K>(unit2, ea));
        Vec<K> right = tri.circ.map * tri.pb.sub.to_coords(kron_vec<K>(ea, unit2));
        if (!vec_eq<K>(left, ea) || !vec_eq<K>(right, ea)) unital.fail(tri.H1->bname(a));
        for (Index b = 0; b < n; ++b) {
            Vec<K> eb = unit_vec<K>(n, b, tri.H1->one);
            Vec<K> ab = tri.circ.map * tri.pb.sub.to_coords(kron_vec<K>(ea, eb));
            Vec<K> ba = tri.circ.map * tri.pb.sub.to_coords(kron_vec<K>(eb, ea));
            Vec<K> prod = tri.H1->mul_basis(a, b);
            Vec<K> prod_rev = tri.H1->mul_basis(b, a);
            if (!vec_eq<K>(ab, ba) || !vec_eq<K>(ab, prod) || !vec_eq<K>(prod, prod_rev))
                agree.fail(tri.H1->bname(a) + ", " + tri.H1->bname(b));
        }
    }
    rep.add(std::move(unital));
    rep.add(std::move(agree));

    CheckResult comm("tri.eh-commutative", "the cell algebra is commutative");
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < a; ++b)
            if (!vec_eq<K>(tri.H1->mul_basis(a, b), tri.H1->mul_basis(b, a)))
                comm.fail(tri.H1->bname(a) + ", " + tri.H1->bname(b));
    rep.add(std::move(comm));
    return rep;
}

template <class K>
CheckReport trialgebra_check(const Trialgebra<K>& tri) {
    CheckReport rep;
    const Index n = tri.H1->dim;

    rep.merge_prefixed(validate_hopf(*tri.H0), "tri.h0.");
    rep.merge_prefixed(validate_hopf(*tri.H1), "tri.h1.");
    CheckResult cocomm("tri.cocommutative", "both Hopf algebras carry the cocommutative flag");
    if (!tri.H0->cocommutative.value_or(false)) cocomm.fail("objects");
    if (!tri.H1->cocommutative.value_or(false)) cocomm.fail("cells");
    rep.add(std::move(cocomm));

    rep.merge_prefixed(hopf_hom_check(tri.s), "tri.s.");
    rep.merge_prefixed(hopf_hom_check(tri.t), "tri.t.");
    rep.merge_prefixed(hopf_hom_check(tri.iota), "tri.iota.");
    rep.merge_prefixed(hopf_hom_check(tri.circ), "tri.circ.");

    CheckResult section("tri.section", "s o iota = id and t o iota = id");
    Mat<K> id0 = Mat<K>::Identity(tri.H0->dim, tri.H0->dim);
    if (!mat_eq<K>(Mat<K>(tri.s.map * tri.iota.map), id0)) section.fail("s");
    if (!mat_eq<K>(Mat<K>(tri.t.map * tri.iota.map), id0)) section.fail("t");
    rep.add(std::move(section));

    CheckResult ends("tri.composite-ends", "s(circ v) = s(right leg), t(circ v) = t(left leg)");
    if (!mat_eq<K>(Mat<K>(tri.s.map * tri.circ.map), Mat<K>(tri.s.map * tri.pb.p2.map)))
        ends.fail("s");
    if (!mat_eq<K>(Mat<K>(tri.t.map * tri.circ.map), Mat<K>(tri.t.map * tri.pb.p1.map)))
        ends.fail("t");
    rep.add(std::move(ends));

    CheckResult units("tri.units", "circ(iota(t(h)) (x) h) = h = circ(h (x) iota(s(h)))");
    for (Index a = 0; a < n; ++a) {
        Vec<K> ea = unit_vec<K>(n, a, tri.H1->one);
        Vec<K> lu = kron_vec<K>(Vec<K>(tri.iota.map * tri.t.map * ea), ea);
        Vec<K> ru = kron_vec<K>(ea, Vec<K>(tri.iota.map * tri.s.map * ea));
        if (!vec_eq<K>(Vec<K>(tri.circ.map * tri.pb.sub.to_coords(lu)), ea))
            units.fail("left unit at " + tri.H1->bname(a));
        if (!vec_eq<K>(Vec<K>(tri.circ.map * tri.pb.sub.to_coords(ru)), ea))
            units.fail("right unit at " + tri.H1->bname(a));
    }
    rep.add(std::move(units));

    CheckResult assoc("tri.associativity", "circ(circ(a (x) b) (x) c) = circ(a (x) circ(b (x) c))");
    for (const auto& [a, b] : tri.composable.pairs)
        for (Index c = 0; c < n; ++c) {
            if (tri.group.s(b) != tri.group.t(int(c))) continue;
            Vec<K> ab = tri.circ.map * tri.pair_coords(Index(a), Index(b));
            Vec<K> bc = tri.circ.map * tri.pair_coords(Index(b), c);
            Index ab_i = -1, bc_i = -1;
            for (Index m = 0; m < n; ++m) {
                if (!(ab(m) == tri.H1->one - tri.H1->one)) ab_i = m;
                if (!(bc(m) == tri.H1->one - tri.H1->one)) bc_i = m;
            }
            Vec<K> lhs = tri.circ.map * tri.pair_coords(ab_i, c);
            Vec<K> rhs = tri.circ.map * tri.pair_coords(Index(a), bc_i);
            if (!vec_eq<K>(lhs, rhs))
                assoc.fail(tri.H1->bname(Index(a)) + ", " + tri.H1->bname(Index(b)) + ", " +
                           tri.H1->bname(c));
        }
    rep.add(std::move(assoc));

    CheckResult sweedler("tri.sweedler",
                         "the contraction formula for circ matches circ on the carrier");
    if (!mat_eq<K>(Mat<K>(circ_sweedler_matrix(tri) * tri.pb.sub.inclusion.map), tri.circ.map))
        sweedler.fail("matrix mismatch");
    rep.add(std::move(sweedler));

    HopfHom<K> sv = vertical_antipode(tri);
    rep.merge_prefixed(hopf_hom_check(sv), "tri.antipode.");

    GroupHom xi_hom = make_hom(tri.group.G1, tri.group.G1, [&] {
        std::vector<int> m(size_t(tri.group.G1->order));
        for (int g = 0; g < tri.group.G1->order; ++g) m[size_t(g)] = vertical_inverse(tri.group, g);
        return m;
    }());
    CheckResult xi("tri.antipode-xi", "the contraction antipode is the linearized vertical inverse");
    if (!mat_eq<K>(sv.map, linearize_hom(xi_hom, tri.H1, tri.H1).map)) xi.fail("matrix mismatch");
    rep.add(std::move(xi));

    CheckResult invol("tri.antipode-involution", "S_vert squared is the identity");
    if (!mat_eq<K>(Mat<K>(sv.map * sv.map), Mat<K>(Mat<K>::Identity(n, n))))
        invol.fail("matrix mismatch");
    rep.add(std::move(invol));

    CheckResult id1("tri.antipode-1", "t o S_vert = s");
    if (!mat_eq<K>(Mat<K>(tri.t.map * sv.map), tri.s.map)) id1.fail("matrix mismatch");
    rep.add(std::move(id1));
    CheckResult id2("tri.antipode-2", "s o S_vert = t");
    if (!mat_eq<K>(Mat<K>(tri.s.map * sv.map), tri.t.map)) id2.fail("matrix mismatch");
    rep.add(std::move(id2));

    const K zero = tri.H1->one - tri.H1->one;
    CheckResult id3("tri.antipode-3", "circ(S_vert(h(1)) (x) h(2)) = iota(s(h))");
    CheckResult id4("tri.antipode-4", "circ(h(1) (x) S_vert(h(2))) = iota(t(h))");
    for (Index a = 0; a < n; ++a) {
        Vec<K> lw = Vec<K>::Constant(n * n, zero);
        Vec<K> rw = Vec<K>::Constant(n * n, zero);
        for (Index pq = 0; pq < n * n; ++pq) {
            K c = tri.H1->delta(pq, a);
            if (c == zero) continue;
            Vec<K> ep = unit_vec<K>(n, pq / n, tri.H1->one);
            Vec<K> eq = unit_vec<K>(n, pq % n, tri.H1->one);
            lw += c * kron_vec<K>(Vec<K>(sv.map * ep), eq);
            rw += c * kron_vec<K>(ep, Vec<K>(sv.map * eq));
        }
        if (!vec_eq<K>(Vec<K>(tri.circ.map * tri.pb.sub.to_coords(lw)),
                       Vec<K>(tri.iota.map * tri.s.map.col(a))))
            id3.fail(tri.H1->bname(a));
        if (!vec_eq<K>(Vec<K>(tri.circ.map * tri.pb.sub.to_coords(rw)),
                       Vec<K>(tri.iota.map * tri.t.map.col(a))))
            id4.fail(tri.H1->bname(a));
    }
    rep.add(std::move(id3));
    rep.add(std::move(id4));

    CheckResult id5("tri.antipode-5", "S_vert(circ(h (x) h~)) = circ(S_vert(h~) (x) S_vert(h))");
    for (Index d = 0; d < tri.pb.sub.induced->dim; ++d) {
        Vec<K> w = tri.pb.sub.inclusion.map.col(d);
        Vec<K> z = Vec<K>::Constant(n * n, zero);
        for (Index xy = 0; xy < n * n; ++xy) {
            if (w(xy) == zero) continue;
            z += w(xy) * kron_vec<K>(Vec<K>(sv.map.col(xy % n)), Vec<K>(sv.map.col(xy / n)));
        }
        if (!vec_eq<K>(Vec<K>(sv.map * tri.circ.map.col(d)),
                       Vec<K>(tri.circ.map * tri.pb.sub.to_coords(z))))
            id5.fail(detail::pair_name(tri, d));
    }
    rep.add(std::move(id5));

    rep.merge(interchange_check(tri));
    if (tri.H0->dim == 1) rep.merge(eckmann_hilton_check(tri));
    return rep;
}

// Image of a 2-group functor: a pair of Hopf morphisms commuting with all
// structure maps, including the partial multiplication on the carriers.
template <class K>
struct TrialgebraHom {
    HopfHom<K> F0, F1;
    CheckReport checks;
};

template <class K>
TrialgebraHom<K> trialgebra_hom_from_2group_hom(const Trialgebra<K>& dom,
                                                const Trialgebra<K>& cod, const Functor2& f) {
    TrialgebraHom<K> out;
    out.F0 = linearize_hom(f.F0, dom.H0, cod.H0);
    out.F1 = linearize_hom(f.F1, dom.H1, cod.H1);
    out.checks.merge_prefixed(hopf_hom_check(out.F0), "trihom.f0.");
    out.checks.merge_prefixed(hopf_hom_check(out.F1), "trihom.f1.");

    CheckResult sq("trihom.squares", "F commutes with s, t and iota");
    if (!mat_eq<K>(Mat<K>(cod.s.map * out.F1.map), Mat<K>(out.F0.map * dom.s.map))) sq.fail("s");
    if (!mat_eq<K>(Mat<K>(cod.t.map * out.F1.map), Mat<K>(out.F0.map * dom.t.map))) sq.fail("t");
    if (!mat_eq<K>(Mat<K>(out.F1.map * dom.iota.map), Mat<K>(cod.iota.map * out.F0.map)))
        sq.fail("iota");
    out.checks.add(std::move(sq));

    CheckResult circsq("trihom.circ-square", "F1 o circ = circ' o (F1 (x) F1)");
    for (Index d = 0; d < dom.pb.sub.induced->dim; ++d) {
        Vec<K> w = kron(out.F1.map, out.F1.map) * dom.pb.sub.inclusion.map.col(d);
        Vec<K> lhs = out.F1.map * dom.circ.map.col(d);
        bool ok = true;
        try {
            ok = vec_eq<K>(lhs, Vec<K>(cod.circ.map * cod.pb.sub.to_coords(w)));
        } catch (const ValidationError&) {
            ok = false;
        }
        if (!ok) circsq.fail(detail::pair_name(dom, d));
    }
    out.checks.add(std::move(circsq));
    return out;
}

// Image of a 2-group transformation: a linear map H0 -> H1' whose columns are
// the component cells, checked against both functors through circ'.
template <class K>
struct TrialgebraTransf {
    HopfHom<K> eta;  // dom.H0 -> cod.H1
    CheckReport checks;
};

template <class K>
TrialgebraTransf<K> trialgebra_transf_from_2group(const Trialgebra<K>& dom,
                                                  const Trialgebra<K>& cod, const Transf2& tr) {
    TrialgebraTransf<K> out;
    const Index n0 = dom.H0->dim;
    const K zero = dom.H0->one - dom.H0->one;
    Mat<K> m = Mat<K>::Constant(cod.H1->dim, n0, zero);
    for (Index x = 0; x < n0; ++x) m(Index(tr.eta[size_t(x)]), x) = dom.H0->one;
    out.eta = HopfHom<K>{dom.H0, cod.H1, std::move(m)};

    HopfHom<K> f0 = linearize_hom(tr.source.F0, dom.H0, cod.H0);
    HopfHom<K> f0t = linearize_hom(tr.target.F0, dom.H0, cod.H0);
    CheckResult ends("trihom.transf-ends", "s'(eta(x)) = F0(x) and t'(eta(x)) = F0~(x)");
    if (!mat_eq<K>(Mat<K>(cod.s.map * out.eta.map), f0.map)) ends.fail("s");
    if (!mat_eq<K>(Mat<K>(cod.t.map * out.eta.map), f0t.map)) ends.fail("t");
    out.checks.add(std::move(ends));

    HopfHom<K> f1 = linearize_hom(tr.source.F1, dom.H1, cod.H1);
    HopfHom<K> f1t = linearize_hom(tr.target.F1, dom.H1, cod.H1);
    CheckResult nat("trihom.transf-naturality",
                    "circ'(eta(t(a)) (x) F1(a)) = circ'(F1~(a) (x) eta(s(a)))");
    for (Index a = 0; a < dom.H1->dim; ++a) {
        Vec<K> lw = kron_vec<K>(Vec<K>(out.eta.map * dom.t.map.col(a)), Vec<K>(f1.map.col(a)));
        Vec<K> rw = kron_vec<K>(Vec<K>(f1t.map.col(a)), Vec<K>(out.eta.map * dom.s.map.col(a)));
        if (!vec_eq<K>(Vec<K>(cod.circ.map * cod.pb.sub.to_coords(lw)),
                       Vec<K>(cod.circ.map * cod.pb.sub.to_coords(rw))))
            nat.fail(dom.H1->bname(a));
    }
    out.checks.add(std::move(nat));
    return out;
}

}  // namespace halg
