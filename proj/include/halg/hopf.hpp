#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halg/check.hpp"
#include "halg/group.hpp"
#include "halg/linalg.hpp"

namespace halg {

// A finite dimensional Hopf algebra given by dense structure constants over a
// fixed basis. Tensor legs are indexed by (i, j) -> i * dim + j throughout.
template <class K>
struct HopfAlgebra {
    std::string name;
    Index dim = 0;
    Mat<K> mu;         // dim x dim^2, column a * dim + b holds e_a e_b
    Vec<K> unit;       // coordinates of 1
    Mat<K> delta;      // dim^2 x dim
    RowVec<K> counit;  // 1 x dim
    Mat<K> antipode;   // dim x dim
    std::optional<bool> commutative, cocommutative;
    std::vector<std::string> basis_names;
    K one = K(1);  // field sample: carries the modulus for prime fields

    Vec<K> mul_basis(Index a, Index b) const { return mu.col(a * dim + b); }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> out = Vec<K>::Zero(dim);
        const K zero(0);
        for (Index a = 0; a < dim; ++a) {
            if (x(a) == zero) continue;
            for (Index b = 0; b < dim; ++b) {
                if (y(b) == zero) continue;
                K c = x(a) * y(b);
                auto col = mu.col(a * dim + b);
                for (Index m = 0; m < dim; ++m)
                    if (!(col(m) == zero)) out(m) += c * col(m);
            }
        }
        return out;
    }

    const std::string& bname(Index i) const { return basis_names[size_t(i)]; }
};

template <class K>
using HopfPtr = std::shared_ptr<const HopfAlgebra<K>>;

// Linear map between Hopf algebras; `map` acts on column coordinate vectors,
// composition is matrix composition (outer * inner).
template <class K>
struct HopfHom {
    HopfPtr<K> dom, cod;
    Mat<K> map;
};

template <class K>
void require_same_field(const K& a, const K& b, const std::string& where) {
    if (scalar_traits<K>::field_name(a) != scalar_traits<K>::field_name(b))
        throw ValidationError("hopf.field", where,
                              where + ": mixed fields " + scalar_traits<K>::field_name(a) +
                                  " and " + scalar_traits<K>::field_name(b));
}

template <class K>
HopfHom<K> compose(const HopfHom<K>& outer, const HopfHom<K>& inner) {
    if (outer.dom->dim != inner.cod->dim)
        throw ValidationError("hopfhom.compose", "", "compose: dimension mismatch");
    require_same_field(outer.dom->one, inner.cod->one, "compose");
    return HopfHom<K>{inner.dom, outer.cod, outer.map * inner.map};
}

template <class K>
HopfHom<K> identity_hopf_hom(const HopfPtr<K>& h) {
    Mat<K> id = Mat<K>::Zero(h->dim, h->dim);
    for (Index i = 0; i < h->dim; ++i) id(i, i) = h->one;
    return HopfHom<K>{h, h, std::move(id)};
}

template <class K>
HopfHom<K> tensor_hom(const HopfHom<K>& f, const HopfHom<K>& g, const HopfPtr<K>& dom,
                      const HopfPtr<K>& cod) {
    return HopfHom<K>{dom, cod, kron(f.map, g.map)};
}

namespace detail {

template <class K>
void check_group_characteristic(const FiniteGroup& g, const K& one, const std::string& who) {
    std::uint64_t p = characteristic(one);
    if (p != 0 && g.order % int(p) == 0)
        throw ValidationError("hopf.characteristic", std::to_string(p),
                              who + ": field characteristic " + std::to_string(p) +
                                  " divides the group order " + std::to_string(g.order));
}

}  // namespace detail

// k[G]: basis = group elements, product linearizes the group multiplication,
// every basis vector is group-like.
template <class K>
HopfPtr<K> group_algebra(const GroupPtr& g, const K& one = K(1)) {
    detail::check_group_characteristic(*g, one, "group_algebra");
    auto h = std::make_shared<HopfAlgebra<K>>();
    const Index n = g->order;
    h->name = "k[" + g->name + "]";
    h->dim = n;
    h->one = one;
    const K zero = one - one;
    h->mu = Mat<K>::Constant(n, n * n, zero);
    h->delta = Mat<K>::Constant(n * n, n, zero);
    h->counit = RowVec<K>::Constant(1, n, one);
    h->antipode = Mat<K>::Constant(n, n, zero);
    h->unit = Vec<K>::Constant(n, zero);
    h->unit(g->identity) = one;
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) h->mu(g->mul(int(a), int(b)), a * n + b) = one;
        h->delta(a * n + a, a) = one;
        h->antipode(g->inverse(int(a)), a) = one;
    }
    h->cocommutative = true;
    h->commutative = g->is_abelian();
    h->basis_names = g->element_names;
    return h;
}

// k(G): functions on the group with the pointwise product on the delta basis;
// the coproduct dualizes the multiplication.
template <class K>
HopfPtr<K> function_algebra(const GroupPtr& g, const K& one = K(1)) {
    detail::check_group_characteristic(*g, one, "function_algebra");
    auto h = std::make_shared<HopfAlgebra<K>>();
    const Index n = g->order;
    h->name = "k(" + g->name + ")";
    h->dim = n;
    h->one = one;
    const K zero = one - one;
    h->mu = Mat<K>::Constant(n, n * n, zero);
    h->delta = Mat<K>::Constant(n * n, n, zero);
    h->counit = RowVec<K>::Constant(1, n, zero);
    h->antipode = Mat<K>::Constant(n, n, zero);
    h->unit = Vec<K>::Constant(n, one);
    h->counit(0, g->identity) = one;
    for (Index a = 0; a < n; ++a) {
        h->mu(a, a * n + a) = one;
        h->antipode(g->inverse(int(a)), a) = one;
        for (Index b = 0; b < n; ++b) h->delta(a * n + b, g->mul(int(a), int(b))) = one;
    }
    h->commutative = true;
    h->cocommutative = g->is_abelian();
    h->basis_names.reserve(size_t(n));
    for (Index a = 0; a < n; ++a) h->basis_names.push_back("d(" + g->elem(int(a)) + ")");
    return h;
}

// Componentwise structure on A (x) B with the global pair indexing.
template <class K>
HopfPtr<K> tensor_hopf(const HopfPtr<K>& a, const HopfPtr<K>& b) {
    require_same_field(a->one, b->one, "tensor_hopf");
    auto h = std::make_shared<HopfAlgebra<K>>();
    const Index na = a->dim, nb = b->dim, n = na * nb;
    h->name = a->name + "(x)" + b->name;
    h->dim = n;
    h->one = a->one;
    const K zero = h->one - h->one;
    h->unit = kron_vec<K>(a->unit, b->unit);
    h->counit = kron(Mat<K>(a->counit), Mat<K>(b->counit));
    h->antipode = kron(a->antipode, b->antipode);
    h->mu = Mat<K>::Constant(n, n * n, zero);
    h->delta = Mat<K>::Constant(n * n, n, zero);
    for (Index i1 = 0; i1 < na; ++i1)
        for (Index j1 = 0; j1 < nb; ++j1)
            for (Index i2 = 0; i2 < na; ++i2)
                for (Index j2 = 0; j2 < nb; ++j2) {
                    Index x = i1 * nb + j1, y = i2 * nb + j2;
                    Vec<K> pa = a->mul_basis(i1, i2);
                    Vec<K> pb = b->mul_basis(j1, j2);
                    for (Index u = 0; u < na; ++u) {
                        if (pa(u) == zero) continue;
                        for (Index v = 0; v < nb; ++v) {
                            if (pb(v) == zero) continue;
                            h->mu(u * nb + v, x * n + y) += pa(u) * pb(v);
                        }
                    }
                }
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j) {
            // Delta(e_i (x) e_j) = sum (i1 (x) j1) (x) (i2 (x) j2)
            for (Index p = 0; p < na * na; ++p) {
                if (a->delta(p, i) == zero) continue;
                Index i1 = p / na, i2 = p % na;
                for (Index q = 0; q < nb * nb; ++q) {
                    if (b->delta(q, j) == zero) continue;
                    Index j1 = q / nb, j2 = q % nb;
                    h->delta((i1 * nb + j1) * n + (i2 * nb + j2), i * nb + j) +=
                        a->delta(p, i) * b->delta(q, j);
                }
            }
        }
    if (a->commutative && b->commutative) h->commutative = *a->commutative && *b->commutative;
    if (a->cocommutative && b->cocommutative)
        h->cocommutative = *a->cocommutative && *b->cocommutative;
    h->basis_names.reserve(size_t(n));
    for (Index i = 0; i < na; ++i)
        for (Index j = 0; j < nb; ++j)
            h->basis_names.push_back(a->bname(i) + "(x)" + b->bname(j));
    return h;
}

// One dimensional Hopf algebra on the base field.
template <class K>
HopfPtr<K> base_field_hopf(const K& one = K(1)) {
    auto h = std::make_shared<HopfAlgebra<K>>();
    h->name = "k";
    h->dim = 1;
    h->one = one;
    h->mu = Mat<K>::Constant(1, 1, one);
    h->unit = Vec<K>::Constant(1, one);
    h->delta = Mat<K>::Constant(1, 1, one);
    h->counit = RowVec<K>::Constant(1, 1, one);
    h->antipode = Mat<K>::Constant(1, 1, one);
    h->commutative = true;
    h->cocommutative = true;
    h->basis_names = {"1"};
    return h;
}

// Linear extension of a group homomorphism to the group algebras.
template <class K>
HopfHom<K> linearize_hom(const GroupHom& f, const HopfPtr<K>& dom, const HopfPtr<K>& cod) {
    if (dom->dim != f.dom->order || cod->dim != f.cod->order)
        throw ValidationError("hopfhom.linearize", "", "algebra dimensions do not match the map");
    const K zero = dom->one - dom->one;
    Mat<K> m = Mat<K>::Constant(cod->dim, dom->dim, zero);
    for (Index a = 0; a < dom->dim; ++a) m(f(int(a)), a) = dom->one;
    return HopfHom<K>{dom, cod, std::move(m)};
}

// Precomposition on functions: k(f) maps d_h to the sum of d_g over the fiber
// f^-1(h). `dom` is k(cod f), `cod` is k(dom f).
template <class K>
HopfHom<K> dualize_hom(const GroupHom& f, const HopfPtr<K>& dom, const HopfPtr<K>& cod) {
    if (dom->dim != f.cod->order || cod->dim != f.dom->order)
        throw ValidationError("hopfhom.dualize", "", "algebra dimensions do not match the map");
    const K zero = dom->one - dom->one;
    Mat<K> m = Mat<K>::Constant(cod->dim, dom->dim, zero);
    for (Index g = 0; g < cod->dim; ++g) m(g, f(int(g))) += dom->one;
    return HopfHom<K>{dom, cod, std::move(m)};
}

namespace detail {

template <class K>
using SparseVec = std::map<Index, K>;

template <class K>
void acc(SparseVec<K>& m, Index i, const K& v) {
    auto [it, fresh] = m.emplace(i, v);
    if (!fresh) it->second += v;
}

template <class K>
bool sparse_eq(const SparseVec<K>& a, const SparseVec<K>& b, const K& one) {
    const K zero = one - one;
    for (const auto& [i, v] : a) {
        auto it = b.find(i);
        const K w = it == b.end() ? zero : it->second;
        if (!(v == w)) return false;
    }
    for (const auto& [i, v] : b)
        if (a.find(i) == a.end() && !(v == zero)) return false;
    return true;
}

}  // namespace detail

template <class K>
CheckReport validate_hopf(const HopfAlgebra<K>& h) {
    CheckReport rep;
    const Index n = h.dim;
    const K zero = h.one - h.one;

    CheckResult assoc("hopf.associativity", "(e_a e_b) e_c = e_a (e_b e_c)");
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            Vec<K> ab = h.mul_basis(a, b);
            for (Index c = 0; c < n; ++c) {
                Vec<K> lhs = Vec<K>::Constant(n, zero);
                for (Index m = 0; m < n; ++m)
                    if (!(ab(m) == zero)) lhs += ab(m) * h.mul_basis(m, c);
                Vec<K> bc = h.mul_basis(b, c);
                Vec<K> rhs = Vec<K>::Constant(n, zero);
                for (Index m = 0; m < n; ++m)
                    if (!(bc(m) == zero)) rhs += bc(m) * h.mul_basis(a, m);
                if (!vec_eq<K>(lhs, rhs))
                    assoc.fail("(" + h.bname(a) + "," + h.bname(b) + "," + h.bname(c) + ")");
            }
        }
    rep.add(std::move(assoc));

    CheckResult unit("hopf.unit", "1 e_a = e_a = e_a 1");
    for (Index a = 0; a < n; ++a) {
        Vec<K> ea = unit_vec<K>(n, a, h.one);
        if (!vec_eq<K>(h.mul(h.unit, ea), ea) || !vec_eq<K>(h.mul(ea, h.unit), ea))
            unit.fail(h.bname(a));
    }
    rep.add(std::move(unit));

    CheckResult coassoc("hopf.coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta");
    for (Index a = 0; a < n; ++a) {
        detail::SparseVec<K> lhs, rhs;
        for (Index pq = 0; pq < n * n; ++pq) {
            const K& c = h.delta(pq, a);
            if (c == zero) continue;
            Index p = pq / n, q = pq % n;
            for (Index rs = 0; rs < n * n; ++rs) {
                if (!(h.delta(rs, p) == zero))
                    detail::acc(lhs, rs * n + q, c * h.delta(rs, p));
                if (!(h.delta(rs, q) == zero))
                    detail::acc(rhs, p * n * n + rs, c * h.delta(rs, q));
            }
        }
        if (!detail::sparse_eq(lhs, rhs, h.one)) coassoc.fail(h.bname(a));
    }
    rep.add(std::move(coassoc));

    CheckResult counit("hopf.counit", "(eps (x) id) Delta = id = (id (x) eps) Delta");
    for (Index a = 0; a < n; ++a) {
        Vec<K> left = Vec<K>::Constant(n, zero), right = Vec<K>::Constant(n, zero);
        for (Index pq = 0; pq < n * n; ++pq) {
            const K& c = h.delta(pq, a);
            if (c == zero) continue;
            Index p = pq / n, q = pq % n;
            left(q) += c * h.counit(0, p);
            right(p) += c * h.counit(0, q);
        }
        Vec<K> ea = unit_vec<K>(n, a, h.one);
        if (!vec_eq<K>(left, ea) || !vec_eq<K>(right, ea)) counit.fail(h.bname(a));
    }
    rep.add(std::move(counit));

    CheckResult dmul("hopf.coproduct-multiplicative", "Delta(a b) = Delta(a) Delta(b)");
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            detail::SparseVec<K> lhs, rhs;
            Vec<K> ab = h.mul_basis(a, b);
            for (Index m = 0; m < n; ++m) {
                if (ab(m) == zero) continue;
                for (Index pq = 0; pq < n * n; ++pq)
                    if (!(h.delta(pq, m) == zero)) detail::acc(lhs, pq, ab(m) * h.delta(pq, m));
            }
            for (Index pq = 0; pq < n * n; ++pq) {
                const K& c1 = h.delta(pq, a);
                if (c1 == zero) continue;
                Index p1 = pq / n, q1 = pq % n;
                for (Index rs = 0; rs < n * n; ++rs) {
                    const K& c2 = h.delta(rs, b);
                    if (c2 == zero) continue;
                    Index p2 = rs / n, q2 = rs % n;
                    Vec<K> u = h.mul_basis(p1, p2);
                    Vec<K> v = h.mul_basis(q1, q2);
                    for (Index x = 0; x < n; ++x) {
                        if (u(x) == zero) continue;
                        for (Index y = 0; y < n; ++y)
                            if (!(v(y) == zero)) detail::acc(rhs, x * n + y, c1 * c2 * u(x) * v(y));
                    }
                }
            }
            if (!detail::sparse_eq(lhs, rhs, h.one)) dmul.fail(h.bname(a) + "," + h.bname(b));
        }
    rep.add(std::move(dmul));

    CheckResult dunit("hopf.coproduct-unit", "Delta(1) = 1 (x) 1");
    {
        Vec<K> lhs = Vec<K>::Constant(n * n, zero);
        for (Index m = 0; m < n; ++m)
            if (!(h.unit(m) == zero)) lhs += h.unit(m) * h.delta.col(m);
        if (!vec_eq<K>(lhs, kron_vec<K>(h.unit, h.unit))) dunit.fail("1");
    }
    rep.add(std::move(dunit));

    CheckResult emul("hopf.counit-multiplicative", "eps(a b) = eps(a) eps(b)");
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            K lhs = zero;
            Vec<K> ab = h.mul_basis(a, b);
            for (Index m = 0; m < n; ++m) lhs += h.counit(0, m) * ab(m);
            if (!(lhs == h.counit(0, a) * h.counit(0, b)))
                emul.fail(h.bname(a) + "," + h.bname(b));
        }
    rep.add(std::move(emul));

    CheckResult eunit("hopf.counit-unit", "eps(1) = 1");
    {
        K v = zero;
        for (Index m = 0; m < n; ++m) v += h.counit(0, m) * h.unit(m);
        if (!(v == h.one)) eunit.fail("1");
    }
    rep.add(std::move(eunit));

    CheckResult sleft("hopf.antipode-left", "mu (S (x) id) Delta = unit . eps");
    CheckResult sright("hopf.antipode-right", "mu (id (x) S) Delta = unit . eps");
    for (Index a = 0; a < n; ++a) {
        Vec<K> left = Vec<K>::Constant(n, zero), right = Vec<K>::Constant(n, zero);
        for (Index pq = 0; pq < n * n; ++pq) {
            const K& c = h.delta(pq, a);
            if (c == zero) continue;
            Index p = pq / n, q = pq % n;
            for (Index m = 0; m < n; ++m) {
                if (!(h.antipode(m, p) == zero))
                    left += (c * h.antipode(m, p)) * h.mul_basis(m, q);
                if (!(h.antipode(m, q) == zero))
                    right += (c * h.antipode(m, q)) * h.mul_basis(p, m);
            }
        }
        Vec<K> expect = h.counit(0, a) * h.unit;
        if (!vec_eq<K>(left, expect)) sleft.fail(h.bname(a));
        if (!vec_eq<K>(right, expect)) sright.fail(h.bname(a));
    }
    rep.add(std::move(sleft));
    rep.add(std::move(sright));

    if (h.commutative.has_value()) {
        CheckResult flag("hopf.flag-commutative", "stored commutativity flag matches the product");
        bool actual = true;
        for (Index a = 0; a < n && actual; ++a)
            for (Index b = 0; b < n && actual; ++b)
                actual = vec_eq<K>(h.mul_basis(a, b), h.mul_basis(b, a));
        if (actual != *h.commutative)
            flag.fail("flag=" + std::string(*h.commutative ? "true" : "false") +
                      " actual=" + std::string(actual ? "true" : "false"));
        rep.add(std::move(flag));
    }
    if (h.cocommutative.has_value()) {
        CheckResult flag("hopf.flag-cocommutative",
                         "stored cocommutativity flag matches the coproduct");
        bool actual = true;
        for (Index a = 0; a < n && actual; ++a)
            for (Index pq = 0; pq < n * n && actual; ++pq)
                actual = h.delta(pq, a) == h.delta((pq % n) * n + pq / n, a);
        if (actual != *h.cocommutative)
            flag.fail("flag=" + std::string(*h.cocommutative ? "true" : "false") +
                      " actual=" + std::string(actual ? "true" : "false"));
        rep.add(std::move(flag));
    }

    return rep;
}

template <class K>
CheckReport hopf_hom_check(const HopfHom<K>& f) {
    CheckReport rep;
    const HopfAlgebra<K>& A = *f.dom;
    const HopfAlgebra<K>& B = *f.cod;
    require_same_field(A.one, B.one, "hopf_hom_check");
    if (f.map.rows() != B.dim || f.map.cols() != A.dim)
        throw ValidationError("hopfhom.shape", "", "matrix shape does not match dom/cod");
    const K zero = A.one - A.one;

    CheckResult mul("hopfhom.multiplicative", "f(a b) = f(a) f(b)");
    Vec<K> lhs = Vec<K>::Constant(B.dim, zero);
    for (Index a = 0; a < A.dim; ++a)
        for (Index b = 0; b < A.dim; ++b) {
            lhs.setConstant(zero);
            for (Index m = 0; m < A.dim; ++m) {
                const K& c = A.mu(m, a * A.dim + b);
                if (!(c == zero)) lhs += c * f.map.col(m);
            }
            Vec<K> rhs = B.mul(f.map.col(a), f.map.col(b));
            if (!vec_eq<K>(lhs, rhs)) mul.fail(A.bname(a) + "," + A.bname(b));
        }
    rep.add(std::move(mul));

    CheckResult un("hopfhom.unit", "f(1) = 1");
    if (!vec_eq<K>(Vec<K>(f.map * A.unit), B.unit)) un.fail("1");
    rep.add(std::move(un));

    CheckResult com("hopfhom.comultiplicative", "Delta(f(a)) = (f (x) f)(Delta(a))");
    Vec<K> clhs = Vec<K>::Constant(B.dim * B.dim, zero);
    Vec<K> crhs = Vec<K>::Constant(B.dim * B.dim, zero);
    for (Index a = 0; a < A.dim; ++a) {
        clhs.setConstant(zero);
        crhs.setConstant(zero);
        for (Index m = 0; m < B.dim; ++m) {
            const K& c = f.map(m, a);
            if (!(c == zero)) clhs += c * B.delta.col(m);
        }
        for (Index pq = 0; pq < A.dim * A.dim; ++pq) {
            const K& c = A.delta(pq, a);
            if (c == zero) continue;
            auto fp = f.map.col(pq / A.dim);
            auto fq = f.map.col(pq % A.dim);
            for (Index i = 0; i < B.dim; ++i) {
                if (fp(i) == zero) continue;
                K ci = c * fp(i);
                for (Index j = 0; j < B.dim; ++j)
                    if (!(fq(j) == zero)) crhs(i * B.dim + j) += ci * fq(j);
            }
        }
        if (!vec_eq<K>(clhs, crhs)) com.fail(A.bname(a));
    }
    rep.add(std::move(com));

    CheckResult cu("hopfhom.counit", "eps(f(a)) = eps(a)");
    if (!mat_eq<K>(Mat<K>(B.counit * f.map), Mat<K>(A.counit))) cu.fail("eps");
    rep.add(std::move(cu));

    CheckResult an("hopfhom.antipode", "f(S(a)) = S(f(a))");
    if (!mat_eq<K>(Mat<K>(f.map * A.antipode), Mat<K>(B.antipode * f.map))) an.fail("S");
    rep.add(std::move(an));

    return rep;
}

// Inverse witness for an invertible morphism; the inverse is validated before
// being returned.
template <class K>
std::optional<HopfHom<K>> inverse_hopf_hom(const HopfHom<K>& f) {
    std::optional<Mat<K>> inv = inverse_matrix(f.map);
    if (!inv) return std::nullopt;
    HopfHom<K> g{f.cod, f.dom, std::move(*inv)};
    if (!hopf_hom_check(g).all_pass()) return std::nullopt;
    return g;
}

template <class K>
bool is_group_like(const HopfAlgebra<K>& h, const Vec<K>& v) {
    Vec<K> lhs = Vec<K>::Constant(h.dim * h.dim, h.one - h.one);
    for (Index m = 0; m < h.dim; ++m)
        if (!(v(m) == h.one - h.one)) lhs += v(m) * h.delta.col(m);
    K e = h.one - h.one;
    for (Index m = 0; m < h.dim; ++m) e += h.counit(0, m) * v(m);
    return vec_eq<K>(lhs, kron_vec<K>(v, v)) && e == h.one;
}

}  // namespace halg
