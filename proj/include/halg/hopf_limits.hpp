#pragma once

#include "halg/hopf.hpp"
#include "halg/linalg.hpp"

namespace halg {

template <class K>
Vec<K> apply_delta(const HopfAlgebra<K>& h, const Vec<K>& v) {
    Vec<K> out = Vec<K>::Constant(h.dim * h.dim, h.one - h.one);
    const K zero = h.one - h.one;
    for (Index m = 0; m < h.dim; ++m)
        if (!(v(m) == zero)) out += v(m) * h.delta.col(m);
    return out;
}

// m * v skipping the zero entries of v.
template <class K>
Vec<K> sparse_apply(const Mat<K>& m, const Vec<K>& v, const K& one) {
    const K zero = one - one;
    Vec<K> out = Vec<K>::Constant(m.rows(), zero);
    for (Index j = 0; j < v.size(); ++j)
        if (!(v(j) == zero)) out += v(j) * m.col(j);
    return out;
}

namespace detail {

template <class K>
void require_flag(const HopfAlgebra<K>& h, bool want_commutative, const std::string& who) {
    const std::optional<bool>& f = want_commutative ? h.commutative : h.cocommutative;
    if (!f.has_value() || !*f)
        throw ValidationError(want_commutative ? "hopf.commutative-required"
                                               : "hopf.cocommutative-required",
                              h.name,
                              who + ": " + h.name + " is not flagged " +
                                  (want_commutative ? "commutative" : "cocommutative"));
}

}  // namespace detail

// Largest subcoalgebra of h contained in w: the greatest fixpoint of
// D -> { v in D : Delta(v) in D (x) H  and  Delta(v) in H (x) D }.
// Both containments are tested through the projections that kill D on one leg.
template <class K>
Subspace<K> largest_subcoalgebra(const HopfAlgebra<K>& h, Subspace<K> w) {
    const Index n = h.dim;
    const K zero = h.one - h.one;
    Subspace<K> d = std::move(w);
    while (d.dim() > 0) {
        QuotientMap<K> q = quotient(d);
        const Index r = q.proj.rows();
        if (r == 0) return d;  // d is everything; Delta lands in d (x) d trivially
        Mat<K> m = Mat<K>::Constant(2 * r * n, d.dim(), zero);
        for (Index j = 0; j < d.dim(); ++j) {
            Vec<K> dv = apply_delta(h, Vec<K>(d.basis.row(j).transpose()));
            for (Index idx = 0; idx < n * n; ++idx) {
                if (dv(idx) == zero) continue;
                Index p = idx / n, qq = idx % n;
                for (Index row = 0; row < r; ++row) {
                    if (!(q.proj(row, p) == zero)) m(row * n + qq, j) += dv(idx) * q.proj(row, p);
                    if (!(q.proj(row, qq) == zero))
                        m(r * n + p * r + row, j) += dv(idx) * q.proj(row, qq);
                }
            }
        }
        Subspace<K> inner = kernel(m);
        if (inner.dim() == d.dim()) return d;
        d = row_space(Mat<K>(inner.basis * d.basis));
    }
    return d;
}

// A subspace of a Hopf algebra that is closed under the full structure,
// materialized as a Hopf algebra in its own right with a validated inclusion.
template <class K>
struct SubHopf {
    HopfPtr<K> ambient;
    Subspace<K> carrier;
    HopfPtr<K> induced;
    HopfHom<K> inclusion;  // induced -> ambient
    Mat<K> coords;         // carrier.dim() x ambient->dim, left inverse of the inclusion

    Vec<K> to_coords(const Vec<K>& ambient_vec) const {
        std::optional<Vec<K>> c = coords_in(carrier, ambient_vec);
        if (!c)
            throw ValidationError("hopf.sub-membership", "",
                                  "vector is outside the carrier subspace");
        return *c;
    }
};

template <class K>
SubHopf<K> sub_hopf(const HopfPtr<K>& h, Subspace<K> carrier, const std::string& name) {
    const Index n = h->dim;
    const Index d = carrier.dim();
    const K zero = h->one - h->one;

    auto member = [&](const Vec<K>& v, const char* what) -> Vec<K> {
        std::optional<Vec<K>> c = coords_in(carrier, v);
        if (!c)
            throw ValidationError("hopf.sub-closure", what,
                                  name + ": carrier is not closed under " + what);
        return *c;
    };

    auto ind = std::make_shared<HopfAlgebra<K>>();
    ind->name = name;
    ind->dim = d;
    ind->one = h->one;
    ind->mu = Mat<K>::Constant(d, d * d, zero);
    ind->delta = Mat<K>::Constant(d * d, d, zero);
    ind->counit = RowVec<K>::Constant(1, d, zero);
    ind->antipode = Mat<K>::Constant(d, d, zero);

    Mat<K> bt = carrier.basis.transpose();  // n x d
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            Vec<K> prod = h->mul(Vec<K>(bt.col(i)), Vec<K>(bt.col(j)));
            ind->mu.col(i * d + j) = member(prod, "multiplication");
        }
    ind->unit = member(h->unit, "the unit");
    for (Index i = 0; i < d; ++i) {
        Vec<K> dv = apply_delta(*h, Vec<K>(bt.col(i)));
        // coordinates on both legs; verifies Delta(b_i) lies in carrier (x) carrier
        Mat<K> t(n, n);
        for (Index p = 0; p < n; ++p)
            for (Index q = 0; q < n; ++q) t(p, q) = dv(p * n + q);
        Mat<K> half(d, n);
        for (Index q = 0; q < n; ++q) {
            Vec<K> c = member(Vec<K>(t.col(q)), "the coproduct (left leg)");
            half.col(q) = c;
        }
        for (Index p = 0; p < d; ++p) {
            Vec<K> c = member(Vec<K>(half.row(p).transpose()), "the coproduct (right leg)");
            for (Index q = 0; q < d; ++q) ind->delta(p * d + q, i) = c(q);
        }
        ind->counit(0, i) = (h->counit * bt.col(i))(0, 0);
        ind->antipode.col(i) = member(Vec<K>(h->antipode * bt.col(i)), "the antipode");
    }
    ind->commutative = h->commutative;
    ind->cocommutative = h->cocommutative;
    ind->basis_names.reserve(size_t(d));
    for (Index i = 0; i < d; ++i) {
        bool unitvec = true;
        for (Index c = 0; c < n && unitvec; ++c)
            if (!(carrier.basis(i, c) == zero) && c != carrier.pivots[size_t(i)]) unitvec = false;
        ind->basis_names.push_back(unitvec ? h->bname(carrier.pivots[size_t(i)])
                                           : "v" + std::to_string(i));
    }

    SubHopf<K> out;
    out.ambient = h;
    out.carrier = std::move(carrier);
    out.induced = ind;
    out.inclusion = HopfHom<K>{ind, h, bt};
    out.coords = Mat<K>::Constant(d, n, zero);
    for (Index i = 0; i < d; ++i) out.coords(i, out.carrier.pivots[size_t(i)]) = h->one;
    return out;
}

// ----- finite limits among cocommutative Hopf algebras -----

template <class K>
HopfHom<K> to_terminal(const HopfPtr<K>& h) {
    detail::require_flag(*h, false, "to_terminal");
    return HopfHom<K>{h, base_field_hopf<K>(h->one), Mat<K>(h->counit)};
}

template <class K>
struct ProductHopf {
    HopfPtr<K> object;  // the tensor product
    HopfHom<K> p1, p2;
};

template <class K>
ProductHopf<K> product_cochopf(const HopfPtr<K>& a, const HopfPtr<K>& b) {
    detail::require_flag(*a, false, "product_cochopf");
    detail::require_flag(*b, false, "product_cochopf");
    HopfPtr<K> t = tensor_hopf(a, b);
    const K zero = a->one - a->one;
    Mat<K> m1 = Mat<K>::Constant(a->dim, t->dim, zero);
    Mat<K> m2 = Mat<K>::Constant(b->dim, t->dim, zero);
    for (Index i = 0; i < a->dim; ++i)
        for (Index j = 0; j < b->dim; ++j) {
            m1(i, i * b->dim + j) = b->counit(0, j);
            m2(j, i * b->dim + j) = a->counit(0, i);
        }
    return ProductHopf<K>{t, HopfHom<K>{t, a, std::move(m1)}, HopfHom<K>{t, b, std::move(m2)}};
}

template <class K>
HopfHom<K> mediate_product(const ProductHopf<K>& p, const HopfHom<K>& f1, const HopfHom<K>& f2) {
    if (f1.dom->dim != f2.dom->dim)
        throw ValidationError("hopf.product-cone", "", "cone legs have different domains");
    return HopfHom<K>{f1.dom, p.object, Mat<K>(kron(f1.map, f2.map) * f1.dom->delta)};
}

template <class K>
struct EqualizerHopf {
    SubHopf<K> sub;  // inside the common domain of the parallel pair
};

template <class K>
EqualizerHopf<K> equalizer_cochopf(const HopfHom<K>& f1, const HopfHom<K>& f2) {
    if (f1.dom->dim != f2.dom->dim || f1.cod->dim != f2.cod->dim)
        throw ValidationError("hopf.parallel", "", "equalizer needs a parallel pair");
    detail::require_flag(*f1.dom, false, "equalizer_cochopf");
    detail::require_flag(*f1.cod, false, "equalizer_cochopf");
    Subspace<K> w = kernel(Mat<K>(f1.map - f2.map));
    Subspace<K> d = largest_subcoalgebra(*f1.dom, std::move(w));
    return EqualizerHopf<K>{sub_hopf(f1.dom, std::move(d), "eq(" + f1.dom->name + ")")};
}

template <class K>
HopfHom<K> mediate_equalizer(const EqualizerHopf<K>& e, const HopfHom<K>& cone) {
    Mat<K> m(e.sub.carrier.dim(), cone.dom->dim);
    for (Index j = 0; j < cone.dom->dim; ++j) m.col(j) = e.sub.to_coords(Vec<K>(cone.map.col(j)));
    return HopfHom<K>{cone.dom, e.sub.induced, std::move(m)};
}

template <class K>
struct PullbackHopf {
    HopfPtr<K> tensor;  // ambient A (x) B
    SubHopf<K> sub;
    HopfHom<K> p1, p2;  // induced -> A, induced -> B
};

// Pullback of s : A -> C <- B : t as the largest subcoalgebra of A (x) B on
// which s applied to the left leg agrees with t applied to the right leg.
template <class K>
PullbackHopf<K> pullback_cochopf(const HopfHom<K>& s, const HopfHom<K>& t) {
    if (s.cod->dim != t.cod->dim)
        throw ValidationError("hopf.cospan", "", "pullback needs a common codomain");
    const HopfPtr<K>& a = s.dom;
    const HopfPtr<K>& b = t.dom;
    detail::require_flag(*a, false, "pullback_cochopf");
    detail::require_flag(*b, false, "pullback_cochopf");
    detail::require_flag(*s.cod, false, "pullback_cochopf");
    HopfPtr<K> tens = tensor_hopf(a, b);
    const K zero = a->one - a->one;

    Mat<K> phi = Mat<K>::Constant(s.cod->dim, tens->dim, zero);
    for (Index i = 0; i < a->dim; ++i)
        for (Index j = 0; j < b->dim; ++j)
            phi.col(i * b->dim + j) =
                b->counit(0, j) * s.map.col(i) - a->counit(0, i) * t.map.col(j);

    Subspace<K> d = largest_subcoalgebra(*tens, kernel(phi));
    SubHopf<K> sub = sub_hopf(tens, std::move(d), a->name + " x_" + s.cod->name + " " + b->name);

    Mat<K> m1 = Mat<K>::Constant(a->dim, tens->dim, zero);
    Mat<K> m2 = Mat<K>::Constant(b->dim, tens->dim, zero);
    for (Index i = 0; i < a->dim; ++i)
        for (Index j = 0; j < b->dim; ++j) {
            m1(i, i * b->dim + j) = b->counit(0, j);
            m2(j, i * b->dim + j) = a->counit(0, i);
        }
    HopfHom<K> p1{sub.induced, a, Mat<K>(m1 * sub.inclusion.map)};
    HopfHom<K> p2{sub.induced, b, Mat<K>(m2 * sub.inclusion.map)};
    return PullbackHopf<K>{tens, std::move(sub), std::move(p1), std::move(p2)};
}

template <class K>
HopfHom<K> mediate_pullback_hopf(const PullbackHopf<K>& pb, const HopfHom<K>& f1,
                                 const HopfHom<K>& f2) {
    if (f1.dom->dim != f2.dom->dim)
        throw ValidationError("hopf.pullback-cone", "", "cone legs have different domains");
    Mat<K> rep = kron(f1.map, f2.map) * f1.dom->delta;
    Mat<K> m(pb.sub.carrier.dim(), f1.dom->dim);
    for (Index j = 0; j < f1.dom->dim; ++j) m.col(j) = pb.sub.to_coords(Vec<K>(rep.col(j)));
    return HopfHom<K>{f1.dom, pb.sub.induced, std::move(m)};
}

// ----- finite colimits among commutative Hopf algebras -----

template <class K>
HopfHom<K> from_initial(const HopfPtr<K>& h) {
    detail::require_flag(*h, true, "from_initial");
    return HopfHom<K>{base_field_hopf<K>(h->one), h, Mat<K>(h->unit)};
}

// Two-sided ideal generated by the rows of `gens`: worklist closure under
// multiplication on both sides. `multipliers` may name a set that generates
// the algebra (with the unit); when empty every basis vector is used.
template <class K>
Subspace<K> ideal_generated(const HopfAlgebra<K>& h, const Mat<K>& gens,
                            const std::vector<Vec<K>>& multipliers = {}) {
    std::vector<Vec<K>> mults = multipliers;
    if (mults.empty())
        for (Index a = 0; a < h.dim; ++a) mults.push_back(unit_vec<K>(h.dim, a, h.one));
    const bool comm = h.commutative.value_or(false);
    RrefAccumulator<K> acc(h.dim);
    std::vector<Vec<K>> work;
    for (Index r = 0; r < gens.rows(); ++r) work.push_back(gens.row(r).transpose());
    while (!work.empty()) {
        Vec<K> v = std::move(work.back());
        work.pop_back();
        std::optional<Vec<K>> fresh = acc.insert(std::move(v));
        if (!fresh) continue;
        for (const Vec<K>& m : mults) {
            work.push_back(h.mul(m, *fresh));
            if (!comm) work.push_back(h.mul(*fresh, m));
        }
    }
    return acc.to_subspace();
}

// Verifies that I absorbs multiplication, is a coideal, vanishes under the
// counit and is stable under the antipode. When `gens` is given (rows known
// to generate I as a two-sided ideal, certified by the absorption check),
// the coideal and antipode conditions are checked on the generators, which
// propagates to the whole ideal.
template <class K>
CheckReport hopf_ideal_check(const HopfAlgebra<K>& h, const Subspace<K>& ideal,
                             const Mat<K>* gens = nullptr,
                             const std::vector<Vec<K>>& multipliers = {}) {
    CheckReport rep;
    const K zero = h.one - h.one;
    QuotientMap<K> q = quotient(ideal);
    const Index n = h.dim;
    const Index r = q.proj.rows();
    const bool comm = h.commutative.value_or(false);

    std::vector<Vec<K>> mults = multipliers;
    if (mults.empty())
        for (Index a = 0; a < n; ++a) mults.push_back(unit_vec<K>(n, a, h.one));

    if (gens) {
        CheckResult span("hopfideal.generators", "the generators lie in the ideal");
        for (Index i = 0; i < gens->rows(); ++i)
            if (!contains(ideal, Vec<K>(gens->row(i).transpose())))
                span.fail("gen " + std::to_string(i));
        rep.add(std::move(span));
    }

    CheckResult absorb("hopfideal.absorb", "products with algebra generators stay in the ideal");
    for (Index i = 0; i < ideal.dim(); ++i) {
        Vec<K> v = ideal.basis.row(i).transpose();
        for (size_t a = 0; a < mults.size(); ++a) {
            if (!contains(ideal, h.mul(mults[a], v)))
                absorb.fail("left: m" + std::to_string(a) + " v=row" + std::to_string(i));
            if (!comm && !contains(ideal, h.mul(v, mults[a])))
                absorb.fail("right: m" + std::to_string(a) + " v=row" + std::to_string(i));
        }
    }
    rep.add(std::move(absorb));

    // Rows whose coideal/antipode conditions certify the whole ideal.
    std::vector<Vec<K>> probe;
    if (gens)
        for (Index i = 0; i < gens->rows(); ++i) probe.push_back(gens->row(i).transpose());
    else
        for (Index i = 0; i < ideal.dim(); ++i) probe.push_back(ideal.basis.row(i).transpose());

    CheckResult coideal("hopfideal.coideal", "Delta(v) lies in I (x) H + H (x) I");
    for (size_t i = 0; i < probe.size(); ++i) {
        Vec<K> dv = apply_delta(h, probe[i]);
        Mat<K> lifted = Mat<K>::Constant(n, n, zero);
        for (Index idx = 0; idx < n * n; ++idx)
            if (!(dv(idx) == zero)) lifted(idx / n, idx % n) = dv(idx);
        // (pi (x) pi) applied with zero skipping
        Mat<K> half = Mat<K>::Constant(r, n, zero);
        for (Index p = 0; p < n; ++p)
            for (Index c = 0; c < n; ++c) {
                if (lifted(p, c) == zero) continue;
                for (Index row = 0; row < r; ++row)
                    if (!(q.proj(row, p) == zero)) half(row, c) += q.proj(row, p) * lifted(p, c);
            }
        bool bad = false;
        for (Index row = 0; row < r && !bad; ++row) {
            Vec<K> out = Vec<K>::Constant(r, zero);
            for (Index c = 0; c < n; ++c)
                if (!(half(row, c) == zero)) out += half(row, c) * q.proj.col(c);
            if (!is_zero_vec<K>(out)) bad = true;
        }
        if (bad) coideal.fail("v=probe" + std::to_string(i));
    }
    rep.add(std::move(coideal));

    CheckResult eps("hopfideal.counit", "eps vanishes on the ideal");
    for (Index i = 0; i < ideal.dim(); ++i) {
        K v = zero;
        for (Index m = 0; m < n; ++m) v += h.counit(0, m) * ideal.basis(i, m);
        if (!(v == zero)) eps.fail("v=row" + std::to_string(i));
    }
    rep.add(std::move(eps));

    CheckResult anti("hopfideal.antipode", "S maps the ideal into itself");
    for (size_t i = 0; i < probe.size(); ++i)
        if (!contains(ideal, Vec<K>(sparse_apply(h.antipode, probe[i], h.one))))
            anti.fail("v=probe" + std::to_string(i));
    rep.add(std::move(anti));

    return rep;
}

template <class K>
struct QuotientHopf {
    HopfPtr<K> ambient;
    Subspace<K> ideal;
    HopfPtr<K> induced;
    HopfHom<K> projection;  // ambient -> induced
    Mat<K> section;         // ambient->dim x induced->dim, right inverse of the projection
};

template <class K>
QuotientHopf<K> quotient_hopf(const HopfPtr<K>& h, Subspace<K> ideal, const std::string& name,
                              const Mat<K>* gens = nullptr,
                              const std::vector<Vec<K>>& multipliers = {}) {
    CheckReport ic = hopf_ideal_check(*h, ideal, gens, multipliers);
    if (!ic.all_pass()) {
        for (const auto& c : ic.checks)
            if (!c.pass)
                throw ValidationError(c.id, c.witnesses.empty() ? "" : c.witnesses.front(),
                                      name + ": the subspace is not a Hopf ideal (" + c.id + ")");
    }
    const Index n = h->dim;
    const K zero = h->one - h->one;
    QuotientMap<K> q = quotient(ideal);
    const Index m = q.proj.rows();

    auto ind = std::make_shared<HopfAlgebra<K>>();
    ind->name = name;
    ind->dim = m;
    ind->one = h->one;
    ind->mu = Mat<K>::Constant(m, m * m, zero);
    ind->delta = Mat<K>::Constant(m * m, m, zero);
    ind->unit = sparse_apply(q.proj, h->unit, h->one);
    ind->counit = h->counit * q.section;
    ind->antipode = Mat<K>::Constant(m, m, zero);
    for (Index i = 0; i < m; ++i)
        ind->antipode.col(i) =
            sparse_apply(q.proj, Vec<K>(sparse_apply(h->antipode, Vec<K>(q.section.col(i)), h->one)),
                         h->one);
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j)
            ind->mu.col(i * m + j) = sparse_apply(
                q.proj, h->mul(Vec<K>(q.section.col(i)), Vec<K>(q.section.col(j))), h->one);
        // section columns are unit vectors, so Delta of a representative is a
        // single structure-constant column
        Vec<K> dv = apply_delta(*h, Vec<K>(q.section.col(i)));
        Mat<K> lifted = Mat<K>::Constant(n, n, zero);
        for (Index idx = 0; idx < n * n; ++idx)
            if (!(dv(idx) == zero)) lifted(idx / n, idx % n) = dv(idx);
        Mat<K> half = Mat<K>::Constant(m, n, zero);
        for (Index p = 0; p < n; ++p)
            for (Index c = 0; c < n; ++c) {
                if (lifted(p, c) == zero) continue;
                for (Index row = 0; row < m; ++row)
                    if (!(q.proj(row, p) == zero)) half(row, c) += q.proj(row, p) * lifted(p, c);
            }
        for (Index row = 0; row < m; ++row)
            for (Index c = 0; c < n; ++c) {
                if (half(row, c) == zero) continue;
                for (Index col = 0; col < m; ++col)
                    if (!(q.proj(col, c) == zero))
                        ind->delta(row * m + col, i) += half(row, c) * q.proj(col, c);
            }
    }
    ind->commutative = h->commutative;
    ind->cocommutative = h->cocommutative;
    ind->basis_names.reserve(size_t(m));
    for (Index j = 0, k = 0; j < n; ++j) {
        bool rep_col = true;
        for (Index i = 0; i < ideal.dim(); ++i)
            if (ideal.pivots[size_t(i)] == j) rep_col = false;
        if (rep_col) {
            ind->basis_names.push_back("[" + h->bname(j) + "]");
            ++k;
        }
    }

    QuotientHopf<K> out;
    out.ambient = h;
    out.ideal = std::move(ideal);
    out.induced = ind;
    out.projection = HopfHom<K>{h, ind, q.proj};
    out.section = q.section;
    return out;
}

template <class K>
struct CoequalizerHopf {
    QuotientHopf<K> quo;  // of the codomain of the parallel pair
};

template <class K>
CoequalizerHopf<K> coequalizer_comhopf(const HopfHom<K>& f1, const HopfHom<K>& f2) {
    if (f1.dom->dim != f2.dom->dim || f1.cod->dim != f2.cod->dim)
        throw ValidationError("hopf.parallel", "", "coequalizer needs a parallel pair");
    detail::require_flag(*f1.dom, true, "coequalizer_comhopf");
    detail::require_flag(*f1.cod, true, "coequalizer_comhopf");
    Mat<K> gens = Mat<K>(f1.map - f2.map).transpose();
    Subspace<K> ideal = ideal_generated(*f1.cod, gens);
    return CoequalizerHopf<K>{
        quotient_hopf(f1.cod, std::move(ideal), "coeq(" + f1.cod->name + ")", &gens)};
}

template <class K>
HopfHom<K> mediate_coequalizer(const CoequalizerHopf<K>& c, const HopfHom<K>& cocone) {
    Mat<K> m = cocone.map * c.quo.section;
    if (!mat_eq<K>(Mat<K>(m * c.quo.projection.map), cocone.map))
        throw ValidationError("hopf.coequalizer-cocone", "",
                              "cocone does not vanish on the ideal");
    return HopfHom<K>{c.quo.induced, cocone.cod, std::move(m)};
}

template <class K>
struct CoproductHopf {
    HopfPtr<K> object;  // the tensor product
    HopfHom<K> i1, i2;
};

template <class K>
CoproductHopf<K> coproduct_comhopf(const HopfPtr<K>& a, const HopfPtr<K>& b) {
    detail::require_flag(*a, true, "coproduct_comhopf");
    detail::require_flag(*b, true, "coproduct_comhopf");
    HopfPtr<K> t = tensor_hopf(a, b);
    const K zero = a->one - a->one;
    Mat<K> m1 = Mat<K>::Constant(t->dim, a->dim, zero);
    Mat<K> m2 = Mat<K>::Constant(t->dim, b->dim, zero);
    for (Index i = 0; i < a->dim; ++i)
        for (Index j = 0; j < b->dim; ++j) {
            m1(i * b->dim + j, i) = b->unit(j);
            m2(i * b->dim + j, j) = a->unit(i);
        }
    return CoproductHopf<K>{t, HopfHom<K>{a, t, std::move(m1)}, HopfHom<K>{b, t, std::move(m2)}};
}

template <class K>
HopfHom<K> mediate_coproduct(const CoproductHopf<K>& c, const HopfHom<K>& f1,
                             const HopfHom<K>& f2) {
    if (f1.cod->dim != f2.cod->dim)
        throw ValidationError("hopf.coproduct-cocone", "", "cocone legs have different codomains");
    return HopfHom<K>{c.object, f1.cod, Mat<K>(f1.cod->mu * kron(f1.map, f2.map))};
}

template <class K>
struct PushoutHopf {
    HopfPtr<K> tensor;  // A (x) B before dividing
    QuotientHopf<K> quo;
    HopfHom<K> i1, i2;  // A -> quotient, B -> quotient
};

// Pushout of A <- C -> B as (A (x) B) / I where I identifies sigma(f) (x) 1
// with 1 (x) tau(f).
template <class K>
PushoutHopf<K> pushout_comhopf(const HopfHom<K>& sigma, const HopfHom<K>& tau) {
    if (sigma.dom->dim != tau.dom->dim)
        throw ValidationError("hopf.span", "", "pushout needs a common domain");
    const HopfPtr<K>& a = sigma.cod;
    const HopfPtr<K>& b = tau.cod;
    detail::require_flag(*a, true, "pushout_comhopf");
    detail::require_flag(*b, true, "pushout_comhopf");
    detail::require_flag(*sigma.dom, true, "pushout_comhopf");
    HopfPtr<K> tens = tensor_hopf(a, b);

    Mat<K> gens(sigma.dom->dim, tens->dim);
    for (Index c = 0; c < sigma.dom->dim; ++c) {
        Vec<K> g = kron_vec<K>(Vec<K>(sigma.map.col(c)), b->unit) -
                   kron_vec<K>(a->unit, Vec<K>(tau.map.col(c)));
        gens.row(c) = g.transpose();
    }
    std::vector<Vec<K>> mults;
    for (Index i = 0; i < a->dim; ++i)
        mults.push_back(kron_vec<K>(unit_vec<K>(a->dim, i, a->one), b->unit));
    for (Index j = 0; j < b->dim; ++j)
        mults.push_back(kron_vec<K>(a->unit, unit_vec<K>(b->dim, j, b->one)));
    Subspace<K> ideal = ideal_generated(*tens, gens, mults);
    QuotientHopf<K> quo = quotient_hopf(tens, std::move(ideal),
                                        a->name + " u_" + sigma.dom->name + " " + b->name, &gens,
                                        mults);

    const K zero = a->one - a->one;
    Mat<K> e1 = Mat<K>::Constant(tens->dim, a->dim, zero);
    Mat<K> e2 = Mat<K>::Constant(tens->dim, b->dim, zero);
    for (Index i = 0; i < a->dim; ++i)
        for (Index j = 0; j < b->dim; ++j) {
            e1(i * b->dim + j, i) = b->unit(j);
            e2(i * b->dim + j, j) = a->unit(i);
        }
    HopfHom<K> i1{a, quo.induced, Mat<K>(quo.projection.map * e1)};
    HopfHom<K> i2{b, quo.induced, Mat<K>(quo.projection.map * e2)};
    return PushoutHopf<K>{tens, std::move(quo), std::move(i1), std::move(i2)};
}

template <class K>
HopfHom<K> mediate_pushout(const PushoutHopf<K>& p, const HopfHom<K>& f1, const HopfHom<K>& f2) {
    if (f1.cod->dim != f2.cod->dim)
        throw ValidationError("hopf.pushout-cocone", "", "cocone legs have different codomains");
    Mat<K> on_tensor = f1.cod->mu * kron(f1.map, f2.map);
    Mat<K> m = on_tensor * p.quo.section;
    if (!mat_eq<K>(Mat<K>(m * p.quo.projection.map), on_tensor))
        throw ValidationError("hopf.pushout-cocone", "", "cocone does not vanish on the ideal");
    return HopfHom<K>{p.quo.induced, f1.cod, std::move(m)};
}

// ----- agreement with the group-level (co)limits -----

template <class K>
void add_iso_checks(CheckReport& rep, const std::string& prefix, const HopfHom<K>& comparison) {
    rep.merge_prefixed(hopf_hom_check(comparison), prefix + ".");
    CheckResult iso(prefix + ".iso", "comparison map is invertible with a structure-preserving inverse");
    std::optional<HopfHom<K>> inv = inverse_hopf_hom(comparison);
    if (!inv) iso.fail("no validated inverse");
    rep.add(std::move(iso));
}

template <class K>
struct PullbackPreservation {
    CheckReport checks;
    GroupPullback group_pullback;
    PullbackHopf<K> hopf_pullback;
    HopfHom<K> comparison;  // k[G x_C H] -> pullback
};

template <class K>
PullbackPreservation<K> verify_pullback_preservation(const GroupHom& s, const GroupHom& t,
                                                     const K& one = K(1)) {
    PullbackPreservation<K> out;
    out.group_pullback = pullback(s, t);
    HopfPtr<K> a = group_algebra<K>(s.dom, one);
    HopfPtr<K> b = group_algebra<K>(t.dom, one);
    HopfPtr<K> c = group_algebra<K>(s.cod, one);
    HopfHom<K> ls = linearize_hom(s, a, c);
    HopfHom<K> lt = linearize_hom(t, b, c);
    out.hopf_pullback = pullback_cochopf(ls, lt);

    HopfPtr<K> kp = group_algebra<K>(out.group_pullback.group, one);
    const Index nb = b->dim;
    Mat<K> m(out.hopf_pullback.sub.carrier.dim(), kp->dim);
    for (Index p = 0; p < kp->dim; ++p) {
        auto [g, hh] = out.group_pullback.pairs[size_t(p)];
        Vec<K> v = unit_vec<K>(a->dim * nb, Index(g) * nb + Index(hh), one);
        m.col(p) = out.hopf_pullback.sub.to_coords(v);
    }
    out.comparison = HopfHom<K>{kp, out.hopf_pullback.sub.induced, std::move(m)};

    CheckResult dim("limits.pullback.dim",
                    "Hopf pullback dimension equals the order of the group pullback");
    if (out.hopf_pullback.sub.induced->dim != kp->dim)
        dim.fail("hopf=" + std::to_string(out.hopf_pullback.sub.induced->dim) +
                 " group=" + std::to_string(kp->dim));
    out.checks.add(std::move(dim));

    add_iso_checks(out.checks, "limits.pullback.comparison", out.comparison);

    CheckResult proj("limits.pullback.projections",
                     "Hopf projections match the linearized group projections");
    HopfHom<K> lp1 = linearize_hom(out.group_pullback.p1, kp, a);
    HopfHom<K> lp2 = linearize_hom(out.group_pullback.p2, kp, b);
    if (!mat_eq<K>(Mat<K>(out.hopf_pullback.p1.map * out.comparison.map), lp1.map)) proj.fail("p1");
    if (!mat_eq<K>(Mat<K>(out.hopf_pullback.p2.map * out.comparison.map), lp2.map)) proj.fail("p2");
    out.checks.add(std::move(proj));

    return out;
}

template <class K>
struct PushoutPreservation {
    CheckReport checks;
    GroupPullback group_pullback;
    PushoutHopf<K> hopf_pushout;
    HopfHom<K> comparison;  // pushout -> k(G x_C H)
};

template <class K>
PushoutPreservation<K> verify_pushout_preservation(const GroupHom& s, const GroupHom& t,
                                                   const K& one = K(1)) {
    PushoutPreservation<K> out;
    out.group_pullback = pullback(s, t);
    HopfPtr<K> a = function_algebra<K>(s.dom, one);
    HopfPtr<K> b = function_algebra<K>(t.dom, one);
    HopfPtr<K> c = function_algebra<K>(s.cod, one);
    HopfHom<K> sig = dualize_hom(s, c, a);
    HopfHom<K> tau = dualize_hom(t, c, b);
    out.hopf_pushout = pushout_comhopf(sig, tau);

    HopfPtr<K> kp = function_algebra<K>(out.group_pullback.group, one);
    HopfHom<K> dp1 = dualize_hom(out.group_pullback.p1, a, kp);
    HopfHom<K> dp2 = dualize_hom(out.group_pullback.p2, b, kp);
    Mat<K> on_tensor = kp->mu * kron(dp1.map, dp2.map);
    out.comparison =
        HopfHom<K>{out.hopf_pushout.quo.induced, kp, Mat<K>(on_tensor * out.hopf_pushout.quo.section)};

    CheckResult well("limits.pushout.descends", "cocone vanishes on the pushout ideal");
    if (!mat_eq<K>(Mat<K>(out.comparison.map * out.hopf_pushout.quo.projection.map), on_tensor))
        well.fail("representative dependence");
    out.checks.add(std::move(well));

    CheckResult dim("limits.pushout.dim",
                    "Hopf pushout dimension equals the order of the group pullback");
    if (out.hopf_pushout.quo.induced->dim != kp->dim)
        dim.fail("hopf=" + std::to_string(out.hopf_pushout.quo.induced->dim) +
                 " group=" + std::to_string(kp->dim));
    out.checks.add(std::move(dim));

    add_iso_checks(out.checks, "limits.pushout.comparison", out.comparison);

    CheckResult inj("limits.pushout.injections",
                    "pushout legs match the dualized group projections");
    if (!mat_eq<K>(Mat<K>(out.comparison.map * out.hopf_pushout.i1.map), dp1.map)) inj.fail("i1");
    if (!mat_eq<K>(Mat<K>(out.comparison.map * out.hopf_pushout.i2.map), dp2.map)) inj.fail("i2");
    out.checks.add(std::move(inj));

    return out;
}

template <class K>
struct EqualizerPreservation {
    CheckReport checks;
    Subgroup group_equalizer;
    EqualizerHopf<K> hopf_equalizer;
    HopfHom<K> comparison;
};

template <class K>
EqualizerPreservation<K> verify_equalizer_preservation(const GroupHom& f1, const GroupHom& f2,
                                                       const K& one = K(1)) {
    EqualizerPreservation<K> out;
    out.group_equalizer = equalizer_subgroup(f1, f2);
    HopfPtr<K> dom = group_algebra<K>(f1.dom, one);
    HopfPtr<K> cod = group_algebra<K>(f1.cod, one);
    out.hopf_equalizer =
        equalizer_cochopf(linearize_hom(f1, dom, cod), linearize_hom(f2, dom, cod));

    HopfPtr<K> ke = group_algebra<K>(out.group_equalizer.group, one);
    Mat<K> m(out.hopf_equalizer.sub.carrier.dim(), ke->dim);
    for (Index i = 0; i < ke->dim; ++i)
        m.col(i) = out.hopf_equalizer.sub.to_coords(
            unit_vec<K>(dom->dim, out.group_equalizer.inclusion(int(i)), one));
    out.comparison = HopfHom<K>{ke, out.hopf_equalizer.sub.induced, std::move(m)};

    CheckResult dim("limits.equalizer.dim", "Hopf equalizer dimension equals the subgroup order");
    if (out.hopf_equalizer.sub.induced->dim != ke->dim)
        dim.fail("hopf=" + std::to_string(out.hopf_equalizer.sub.induced->dim) +
                 " group=" + std::to_string(ke->dim));
    out.checks.add(std::move(dim));
    add_iso_checks(out.checks, "limits.equalizer.comparison", out.comparison);
    return out;
}

template <class K>
struct CoequalizerPreservation {
    CheckReport checks;
    Subgroup group_equalizer;
    CoequalizerHopf<K> hopf_coequalizer;
    HopfHom<K> comparison;
};

template <class K>
CoequalizerPreservation<K> verify_coequalizer_preservation(const GroupHom& f1, const GroupHom& f2,
                                                           const K& one = K(1)) {
    CoequalizerPreservation<K> out;
    out.group_equalizer = equalizer_subgroup(f1, f2);
    HopfPtr<K> dom = function_algebra<K>(f1.cod, one);
    HopfPtr<K> cod = function_algebra<K>(f1.dom, one);
    out.hopf_coequalizer =
        coequalizer_comhopf(dualize_hom(f1, dom, cod), dualize_hom(f2, dom, cod));

    HopfPtr<K> ke = function_algebra<K>(out.group_equalizer.group, one);
    HopfHom<K> dinc = dualize_hom(out.group_equalizer.inclusion, cod, ke);
    out.comparison = HopfHom<K>{out.hopf_coequalizer.quo.induced, ke,
                                Mat<K>(dinc.map * out.hopf_coequalizer.quo.section)};

    CheckResult well("limits.coequalizer.descends", "restriction vanishes on the ideal");
    if (!mat_eq<K>(Mat<K>(out.comparison.map * out.hopf_coequalizer.quo.projection.map), dinc.map))
        well.fail("representative dependence");
    out.checks.add(std::move(well));

    CheckResult dim("limits.coequalizer.dim",
                    "Hopf coequalizer dimension equals the subgroup order");
    if (out.hopf_coequalizer.quo.induced->dim != ke->dim)
        dim.fail("hopf=" + std::to_string(out.hopf_coequalizer.quo.induced->dim) +
                 " group=" + std::to_string(ke->dim));
    out.checks.add(std::move(dim));
    add_iso_checks(out.checks, "limits.coequalizer.comparison", out.comparison);
    return out;
}

}  // namespace halg
