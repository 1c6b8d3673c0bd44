#pragma once

#include "halg/trialgebra.hpp"

namespace halg {

// The dual construction on function algebras: a partial comultiplication
// `delta_under` valued in the materialized pushout of (sigma, tau).
template <class K>
struct Cotrialgebra {
    TwoGroup group;
    HopfPtr<K> H0, H1;       // functions on objects, functions on cells
    HopfHom<K> sigma, tau;   // H0 -> H1
    HopfHom<K> eps_under;    // H1 -> H0
    GroupPullback composable;
    GroupHom compose;        // composable.group -> G1
    PushoutHopf<K> po;       // pushout of (sigma, tau), cached
    HopfHom<K> comparison;   // po carrier -> functions on composable pairs (iso)
    HopfHom<K> delta_under;  // H1 -> po carrier
    Mat<K> lift;             // H1 -> H1 (x) H1: canonical composable-pair lift
};

namespace detail {

// Extend-by-zero embedding of functions on composable pairs into the tensor
// square, composed with the dualized vertical composition.
template <class K>
Mat<K> composable_indicator(const GroupPullback& pb, Index n, const K& one) {
    const K zero = one - one;
    Mat<K> e = Mat<K>::Constant(n * n, Index(pb.pairs.size()), zero);
    for (Index p = 0; p < Index(pb.pairs.size()); ++p)
        e(Index(pb.pairs[size_t(p)].first) * n + Index(pb.pairs[size_t(p)].second), p) = one;
    return e;
}

}  // namespace detail

template <class K>
Cotrialgebra<K> cotrialgebra_from_2group(const TwoGroup& tg, const K& one = K(1)) {
    Cotrialgebra<K> co;
    co.group = tg;
    co.H0 = function_algebra<K>(tg.G0, one);
    co.H1 = function_algebra<K>(tg.G1, one);
    co.sigma = dualize_hom(tg.s, co.H0, co.H1);
    co.tau = dualize_hom(tg.t, co.H0, co.H1);
    co.eps_under = dualize_hom(tg.iota, co.H1, co.H0);
    co.composable = pullback(tg.s, tg.t);

    std::vector<int> table(co.composable.pairs.size());
    for (size_t i = 0; i < co.composable.pairs.size(); ++i)
        table[i] =
            compose_vertical(tg, co.composable.pairs[i].first, co.composable.pairs[i].second);
    co.compose = make_hom(co.composable.group, tg.G1, table);

    co.po = pushout_comhopf(co.sigma, co.tau);
    HopfPtr<K> kp = function_algebra<K>(co.composable.group, one);
    const Index n = co.H1->dim;
    Mat<K> on_tensor = detail::composable_indicator(co.composable, n, one).transpose();
    Mat<K> cmp = on_tensor * co.po.quo.section;
    if (!mat_eq<K>(Mat<K>(cmp * co.po.quo.projection.map), on_tensor))
        throw ValidationError("cotri.comparison", co.H1->name,
                              "restriction to composable pairs does not factor through the pushout");
    co.comparison = HopfHom<K>{co.po.quo.induced, kp, std::move(cmp)};
    std::optional<HopfHom<K>> inv = inverse_hopf_hom(co.comparison);
    if (!inv)
        throw ValidationError("cotri.comparison", co.H1->name,
                              "the pushout is not isomorphic to functions on composable pairs");
    HopfHom<K> dcomp = dualize_hom(co.compose, co.H1, kp);
    co.delta_under = compose(*inv, dcomp);
    co.lift = detail::composable_indicator(co.composable, n, one) * dcomp.map;
    return co;
}

// The contraction sum h(1) sigma(eps(S(h(2)))) (x) h(3) valued in the tensor
// square; projected to the pushout it must equal delta_under.
template <class K>
Mat<K> underline_delta_formula_matrix(const Cotrialgebra<K>& co) {
    const Index n = co.H1->dim;
    const K zero = co.H1->one - co.H1->one;
    Mat<K> ses = co.sigma.map * co.eps_under.map * co.H1->antipode;
    Mat<K> out = Mat<K>::Constant(n * n, n, zero);
    for (Index a = 0; a < n; ++a)
        for (Index pq = 0; pq < n * n; ++pq) {
            K c1 = co.H1->delta(pq, a);
            if (c1 == zero) continue;
            Index p = pq / n, q = pq % n;
            for (Index ru = 0; ru < n * n; ++ru) {
                K c2 = co.H1->delta(ru, p);
                if (c2 == zero) continue;
                Vec<K> left = co.H1->mul(unit_vec<K>(n, ru / n, co.H1->one),
                                         Vec<K>(ses.col(ru % n)));
                K c = c1 * c2;
                for (Index m = 0; m < n; ++m)
                    if (!(left(m) == zero)) out(m * n + q, a) += c * left(m);
            }
        }
    return out;
}

template <class K>
Vec<K> underline_delta_formula(const Cotrialgebra<K>& co, const Vec<K>& h) {
    return co.po.quo.projection.map * (underline_delta_formula_matrix(co) * h);
}

// S_vert(h) = sigma(eps(h(1))) S(h(2)) tau(eps(h(3))).
template <class K>
HopfHom<K> underline_antipode(const Cotrialgebra<K>& co) {
    const Index n = co.H1->dim;
    const K zero = co.H1->one - co.H1->one;
    Mat<K> se = co.sigma.map * co.eps_under.map;
    Mat<K> te = co.tau.map * co.eps_under.map;
    Mat<K> out = Mat<K>::Constant(n, n, zero);
    for (Index a = 0; a < n; ++a)
        for (Index pq = 0; pq < n * n; ++pq) {
            K c1 = co.H1->delta(pq, a);
            if (c1 == zero) continue;
            Index p = pq / n, q = pq % n;
            for (Index ru = 0; ru < n * n; ++ru) {
                K c2 = co.H1->delta(ru, p);
                if (c2 == zero) continue;
                Vec<K> term = co.H1->mul(
                    Vec<K>(se.col(ru / n)),
                    co.H1->mul(Vec<K>(co.H1->antipode.col(ru % n)), Vec<K>(te.col(q))));
                out.col(a) += (c1 * c2) * term;
            }
        }
    return HopfHom<K>{co.H1, co.H1, std::move(out)};
}

template <class K>
CheckReport validate_cotrialgebra(const Cotrialgebra<K>& co) {
    CheckReport rep;
    const Index n = co.H1->dim;
    const K zero = co.H1->one - co.H1->one;
    const Mat<K>& sec = co.po.quo.section;
    const Mat<K>& proj = co.po.quo.projection.map;
    Mat<K> ideal_t = co.po.quo.ideal.basis.transpose();

    rep.merge_prefixed(validate_hopf(*co.H0), "cotri.h0.");
    rep.merge_prefixed(validate_hopf(*co.H1), "cotri.h1.");
    CheckResult comm("cotri.commutative", "both Hopf algebras carry the commutative flag");
    if (!co.H0->commutative.value_or(false)) comm.fail("objects");
    if (!co.H1->commutative.value_or(false)) comm.fail("cells");
    rep.add(std::move(comm));

    rep.merge_prefixed(hopf_hom_check(co.sigma), "cotri.sigma.");
    rep.merge_prefixed(hopf_hom_check(co.tau), "cotri.tau.");
    rep.merge_prefixed(hopf_hom_check(co.eps_under), "cotri.eps.");
    rep.merge_prefixed(hopf_hom_check(co.delta_under), "cotri.delta.");

    CheckResult section("cotri.section", "eps o sigma = id and eps o tau = id");
    Mat<K> id0 = Mat<K>::Identity(co.H0->dim, co.H0->dim);
    if (!mat_eq<K>(Mat<K>(co.eps_under.map * co.sigma.map), id0)) section.fail("sigma");
    if (!mat_eq<K>(Mat<K>(co.eps_under.map * co.tau.map), id0)) section.fail("tau");
    rep.add(std::move(section));

    CheckResult liftck("cotri.lift", "the composable-pair lift projects onto delta_under");
    if (!mat_eq<K>(Mat<K>(proj * co.lift), co.delta_under.map)) liftck.fail("matrix mismatch");
    rep.add(std::move(liftck));

    CheckResult ends("cotri.composite-ends",
                     "delta_under o sigma = i2 o sigma and delta_under o tau = i1 o tau");
    if (!mat_eq<K>(Mat<K>(co.delta_under.map * co.sigma.map), Mat<K>(co.po.i2.map * co.sigma.map)))
        ends.fail("sigma");
    if (!mat_eq<K>(Mat<K>(co.delta_under.map * co.tau.map), Mat<K>(co.po.i1.map * co.tau.map)))
        ends.fail("tau");
    rep.add(std::move(ends));

    // counit triangles, evaluated through the canonical RREF section
    Mat<K> se = co.sigma.map * co.eps_under.map;
    Mat<K> te = co.tau.map * co.eps_under.map;
    Mat<K> ml = Mat<K>::Constant(n, n * n, zero);
    Mat<K> mr = Mat<K>::Constant(n, n * n, zero);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            ml.col(x * n + y) =
                co.H1->mul(unit_vec<K>(n, x, co.H1->one), Vec<K>(se.col(y)));
            mr.col(x * n + y) =
                co.H1->mul(Vec<K>(te.col(x)), unit_vec<K>(n, y, co.H1->one));
        }
    CheckResult cl("cotri.counit-left", "mu(id (x) sigma eps) after delta_under is the identity");
    if (!is_zero<K>(Mat<K>(ml * ideal_t))) cl.fail("does not descend to the pushout");
    if (!mat_eq<K>(Mat<K>(ml * sec * co.delta_under.map), Mat<K>(Mat<K>::Identity(n, n))))
        cl.fail("matrix mismatch");
    rep.add(std::move(cl));
    CheckResult cr("cotri.counit-right", "mu(tau eps (x) id) after delta_under is the identity");
    if (!is_zero<K>(Mat<K>(mr * ideal_t))) cr.fail("does not descend to the pushout");
    if (!mat_eq<K>(Mat<K>(mr * sec * co.delta_under.map), Mat<K>(Mat<K>::Identity(n, n))))
        cr.fail("matrix mismatch");
    rep.add(std::move(cr));

    CheckResult dform("cotri.delta-formula",
                      "the contraction formula projects onto delta_under");
    if (!mat_eq<K>(Mat<K>(proj * underline_delta_formula_matrix(co)), co.delta_under.map))
        dform.fail("matrix mismatch");
    rep.add(std::move(dform));

    // vertical antipode and its five identities
    HopfHom<K> sv = underline_antipode(co);
    rep.merge_prefixed(hopf_hom_check(sv), "cotri.antipode.");

    GroupHom xi_hom = make_hom(co.group.G1, co.group.G1, [&] {
        std::vector<int> m(size_t(co.group.G1->order));
        for (int g = 0; g < co.group.G1->order; ++g) m[size_t(g)] = vertical_inverse(co.group, g);
        return m;
    }());
    CheckResult xi("cotri.antipode-xi",
                   "the contraction antipode is the dualized vertical inverse");
    if (!mat_eq<K>(sv.map, dualize_hom(xi_hom, co.H1, co.H1).map)) xi.fail("matrix mismatch");
    rep.add(std::move(xi));

    CheckResult invol("cotri.antipode-involution", "S_vert squared is the identity");
    if (!mat_eq<K>(Mat<K>(sv.map * sv.map), Mat<K>(Mat<K>::Identity(n, n))))
        invol.fail("matrix mismatch");
    rep.add(std::move(invol));

    CheckResult id1("cotri.antipode-1", "S_vert o tau = sigma");
    if (!mat_eq<K>(Mat<K>(sv.map * co.tau.map), co.sigma.map)) id1.fail("matrix mismatch");
    rep.add(std::move(id1));
    CheckResult id2("cotri.antipode-2", "S_vert o sigma = tau");
    if (!mat_eq<K>(Mat<K>(sv.map * co.sigma.map), co.tau.map)) id2.fail("matrix mismatch");
    rep.add(std::move(id2));
    CheckResult id3("cotri.antipode-3", "eps o S_vert = eps");
    if (!mat_eq<K>(Mat<K>(co.eps_under.map * sv.map), co.eps_under.map))
        id3.fail("matrix mismatch");
    rep.add(std::move(id3));

    Mat<K> m4 = Mat<K>::Constant(n, n * n, zero);
    Mat<K> m5 = Mat<K>::Constant(n, n * n, zero);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            m4.col(x * n + y) = co.H1->mul(Vec<K>(sv.map.col(x)), unit_vec<K>(n, y, co.H1->one));
            m5.col(x * n + y) = co.H1->mul(unit_vec<K>(n, x, co.H1->one), Vec<K>(sv.map.col(y)));
        }
    CheckResult id4("cotri.antipode-4", "mu(S_vert (x) id) after delta_under = sigma eps");
    if (!is_zero<K>(Mat<K>(m4 * ideal_t))) id4.fail("does not descend to the pushout");
    if (!mat_eq<K>(Mat<K>(m4 * sec * co.delta_under.map), se)) id4.fail("matrix mismatch");
    rep.add(std::move(id4));
    CheckResult id5("cotri.antipode-5", "mu(id (x) S_vert) after delta_under = tau eps");
    if (!is_zero<K>(Mat<K>(m5 * ideal_t))) id5.fail("does not descend to the pushout");
    if (!mat_eq<K>(Mat<K>(m5 * sec * co.delta_under.map), te)) id5.fail("matrix mismatch");
    rep.add(std::move(id5));

    // ----- coassociativity through the iterated pushout -----

    GroupHom sp2 = compose(co.group.s, co.composable.p2);
    GroupPullback triple = pullback(sp2, co.group.t);
    const Index tcount = Index(triple.pairs.size());
    HopfPtr<K> kp3 = function_algebra<K>(triple.group, co.H1->one);

    std::vector<int> ctable(triple.pairs.size());
    for (size_t i = 0; i < triple.pairs.size(); ++i)
        ctable[i] = compose_vertical(co.group, co.compose(triple.pairs[i].first),
                                     triple.pairs[i].second);
    GroupHom comp3g = make_hom(triple.group, co.group.G1, ctable);
    HopfHom<K> dcomp3 = dualize_hom(comp3g, co.H1, kp3);

    // canonical lifts agree with the triple-composable lift on the nose
    Mat<K> lhs_flat = Mat<K>::Constant(n * n * n, n, zero);
    Mat<K> rhs_flat = Mat<K>::Constant(n * n * n, n, zero);
    Mat<K> flat3 = Mat<K>::Constant(n * n * n, n, zero);
    for (Index a = 0; a < n; ++a) {
        for (Index xy = 0; xy < n * n; ++xy) {
            if (co.lift(xy, a) == zero) continue;
            Index x = xy / n, y = xy % n;
            for (Index uv = 0; uv < n * n; ++uv) {
                if (!(co.lift(uv, x) == zero))
                    lhs_flat((uv / n) * n * n + (uv % n) * n + y, a) +=
                        co.lift(xy, a) * co.lift(uv, x);
                if (!(co.lift(uv, y) == zero))
                    rhs_flat(x * n * n + uv, a) += co.lift(xy, a) * co.lift(uv, y);
            }
        }
        for (Index t = 0; t < tcount; ++t)
            if (dcomp3.map(t, a) == co.H1->one) {
                auto [pidx, c] = triple.pairs[size_t(t)];
                auto [aa, bb] = co.composable.pairs[size_t(pidx)];
                flat3(Index(aa) * n * n + Index(bb) * n + Index(c), a) = co.H1->one;
            }
    }
    CheckResult colift("cotri.coassociativity-lift",
                       "both iterated lifts equal the triple-composable lift");
    if (!mat_eq<K>(lhs_flat, flat3)) colift.fail("left-nested");
    if (!mat_eq<K>(rhs_flat, flat3)) colift.fail("right-nested");
    rep.add(std::move(colift));

    // pair index lookup for leg (2,3) embeddings
    std::vector<Index> pair_at(size_t(n * n), -1);
    for (Index p = 0; p < Index(co.composable.pairs.size()); ++p)
        pair_at[size_t(Index(co.composable.pairs[size_t(p)].first) * n +
                       Index(co.composable.pairs[size_t(p)].second))] = p;

    Mat<K> lhs_q, rhs_q;
    {
        PushoutHopf<K> poL = pushout_comhopf(compose(co.po.i2, co.sigma), co.tau);
        CheckResult dimL("cotri.nested-left-dim",
                         "left-nested pushout dimension equals the triple-composable count");
        if (poL.quo.induced->dim != tcount)
            dimL.fail("dim = " + std::to_string(poL.quo.induced->dim));
        rep.add(std::move(dimL));

        const Index q2 = co.po.quo.induced->dim;
        Mat<K> onL = Mat<K>::Constant(tcount, q2 * n, zero);
        for (Index t = 0; t < tcount; ++t) {
            auto [pidx, c] = triple.pairs[size_t(t)];
            for (Index i = 0; i < q2; ++i)
                if (!(co.comparison.map(Index(pidx), i) == zero))
                    onL(t, i * n + Index(c)) = co.comparison.map(Index(pidx), i);
        }
        CheckResult descL("cotri.nested-left-descends",
                          "evaluation on triples kills the left-nested ideal");
        if (!is_zero<K>(Mat<K>(onL * poL.quo.ideal.basis.transpose())))
            descL.fail("representative dependence");
        rep.add(std::move(descL));
        HopfHom<K> comp3L{poL.quo.induced, kp3, Mat<K>(onL * poL.quo.section)};
        add_iso_checks(rep, "cotri.nested-left", comp3L);

        Mat<K> kronL = kron(co.delta_under.map, Mat<K>(Mat<K>::Identity(n, n)));
        CheckResult dcL("cotri.coassoc-left-descends",
                        "delta_under on the left leg kills the binary-pushout ideal");
        if (!is_zero<K>(Mat<K>(poL.quo.projection.map * kronL * ideal_t)))
            dcL.fail("representative dependence");
        rep.add(std::move(dcL));
        lhs_q = comp3L.map * poL.quo.projection.map * kronL * sec * co.delta_under.map;
    }
    {
        PushoutHopf<K> poR = pushout_comhopf(co.sigma, compose(co.po.i1, co.tau));
        CheckResult dimR("cotri.nested-right-dim",
                         "right-nested pushout dimension equals the triple-composable count");
        if (poR.quo.induced->dim != tcount)
            dimR.fail("dim = " + std::to_string(poR.quo.induced->dim));
        rep.add(std::move(dimR));

        const Index q2 = co.po.quo.induced->dim;
        Mat<K> onR = Mat<K>::Constant(tcount, n * q2, zero);
        for (Index t = 0; t < tcount; ++t) {
            auto [pidx, c] = triple.pairs[size_t(t)];
            auto [aa, bb] = co.composable.pairs[size_t(pidx)];
            Index p23 = pair_at[size_t(Index(bb) * n + Index(c))];
            for (Index j = 0; j < q2; ++j)
                if (!(co.comparison.map(p23, j) == zero))
                    onR(t, Index(aa) * q2 + j) = co.comparison.map(p23, j);
        }
        CheckResult descR("cotri.nested-right-descends",
                          "evaluation on triples kills the right-nested ideal");
        if (!is_zero<K>(Mat<K>(onR * poR.quo.ideal.basis.transpose())))
            descR.fail("representative dependence");
        rep.add(std::move(descR));
        HopfHom<K> comp3R{poR.quo.induced, kp3, Mat<K>(onR * poR.quo.section)};
        add_iso_checks(rep, "cotri.nested-right", comp3R);

        Mat<K> kronR = kron(Mat<K>(Mat<K>::Identity(n, n)), co.delta_under.map);
        CheckResult dcR("cotri.coassoc-right-descends",
                        "delta_under on the right leg kills the binary-pushout ideal");
        if (!is_zero<K>(Mat<K>(poR.quo.projection.map * kronR * ideal_t)))
            dcR.fail("representative dependence");
        rep.add(std::move(dcR));
        rhs_q = comp3R.map * poR.quo.projection.map * kronR * sec * co.delta_under.map;
    }
    CheckResult coassoc("cotri.coassociativity",
                        "both nested iterates equal the dualized triple composition");
    if (!mat_eq<K>(lhs_q, dcomp3.map)) coassoc.fail("left-nested");
    if (!mat_eq<K>(rhs_q, dcomp3.map)) coassoc.fail("right-nested");
    rep.add(std::move(coassoc));

    return rep;
}

// Transpose-duality between the group-algebra and function-algebra pictures
// of the same 2-group.
template <class K>
CheckReport duality_check(const Trialgebra<K>& tri, const Cotrialgebra<K>& co) {
    CheckReport rep;
    if (!same_2group(tri.group, co.group))
        throw ValidationError("dual.instance", "", "the two structures come from different 2-groups");

    CheckResult s("dual.source", "sigma is the transpose of s");
    if (!mat_eq<K>(co.sigma.map, Mat<K>(tri.s.map.transpose()))) s.fail("matrix mismatch");
    rep.add(std::move(s));
    CheckResult t("dual.target", "tau is the transpose of t");
    if (!mat_eq<K>(co.tau.map, Mat<K>(tri.t.map.transpose()))) t.fail("matrix mismatch");
    rep.add(std::move(t));
    CheckResult e("dual.unit", "eps_under is the transpose of iota");
    if (!mat_eq<K>(co.eps_under.map, Mat<K>(tri.iota.map.transpose()))) e.fail("matrix mismatch");
    rep.add(std::move(e));
    CheckResult a("dual.antipode",
                  "the vertical antipodes are mutual transposes");
    if (!mat_eq<K>(underline_antipode(co).map, Mat<K>(vertical_antipode(tri).map.transpose())))
        a.fail("matrix mismatch");
    rep.add(std::move(a));
    CheckResult c("dual.composition",
                  "delta_under in pair coordinates is the transpose of circ in pair coordinates");
    Mat<K> co_side = co.comparison.map * co.delta_under.map;
    Mat<K> tri_side = tri.circ.map * tri.comparison.map;
    if (!mat_eq<K>(co_side, Mat<K>(tri_side.transpose()))) c.fail("matrix mismatch");
    rep.add(std::move(c));
    return rep;
}

}  // namespace halg
