#pragma once

#include "halg/hopf_limits.hpp"
#include "halg/two_group.hpp"

#include <cmath>

namespace halg {

// Right comodule over the coalgebra part of a Hopf algebra. The coaction
// rho: V -> V (x) C is stored columnwise; entry (i * n + g, j) is the
// coefficient of e_i (x) c_g in rho(e_j).
template <class K>
struct Comodule {
    HopfPtr<K> coalgebra;
    Index dim = 0;
    Mat<K> coaction;
};

template <class K>
Comodule<K> regular_comodule(const HopfPtr<K>& h) {
    return Comodule<K>{h, h->dim, h->delta};
}

template <class K>
CheckReport comodule_check(const Comodule<K>& m) {
    CheckReport rep;
    const HopfAlgebra<K>& c = *m.coalgebra;
    const Index n = c.dim, d = m.dim;
    const K zero = c.one - c.one;
    if (m.coaction.rows() != d * n || m.coaction.cols() != d)
        throw ValidationError("comodule.shape", "", "coaction matrix shape mismatch");

    CheckResult coassoc("comodule.coassociativity", "(rho (x) id) rho = (id (x) Delta) rho");
    Vec<K> lhs = Vec<K>::Constant(d * n * n, zero);
    Vec<K> rhs = Vec<K>::Constant(d * n * n, zero);
    for (Index j = 0; j < d; ++j) {
        lhs.setConstant(zero);
        rhs.setConstant(zero);
        for (Index idx = 0; idx < d * n; ++idx) {
            const K& cv = m.coaction(idx, j);
            if (cv == zero) continue;
            Index i = idx / n, g = idx % n;
            for (Index idx2 = 0; idx2 < d * n; ++idx2)
                if (!(m.coaction(idx2, i) == zero))
                    lhs((idx2 / n) * n * n + (idx2 % n) * n + g, 0) +=
                        cv * m.coaction(idx2, i);
            for (Index xy = 0; xy < n * n; ++xy)
                if (!(c.delta(xy, g) == zero)) rhs(i * n * n + xy) += cv * c.delta(xy, g);
        }
        if (!vec_eq<K>(lhs, rhs)) coassoc.fail("e" + std::to_string(j));
    }
    rep.add(std::move(coassoc));

    CheckResult cu("comodule.counit", "(id (x) eps) rho = id");
    for (Index j = 0; j < d; ++j) {
        Vec<K> out = Vec<K>::Constant(d, zero);
        for (Index idx = 0; idx < d * n; ++idx)
            if (!(m.coaction(idx, j) == zero))
                out(idx / n) += m.coaction(idx, j) * c.counit(0, idx % n);
        if (!vec_eq<K>(out, unit_vec<K>(d, j, c.one))) cu.fail("e" + std::to_string(j));
    }
    rep.add(std::move(cu));
    return rep;
}

template <class K>
struct ComoduleMorphism {
    Comodule<K> dom, cod;
    Mat<K> map;
};

template <class K>
CheckReport comodule_morphism_check(const ComoduleMorphism<K>& f) {
    CheckReport rep;
    const Index n = f.dom.coalgebra->dim;
    const K zero = f.dom.coalgebra->one - f.dom.coalgebra->one;
    CheckResult sq("comodule.morphism", "(f (x) id) rho_dom = rho_cod f");
    if (f.cod.coalgebra->dim != n) {
        sq.fail("coalgebra mismatch");
        rep.add(std::move(sq));
        return rep;
    }
    Mat<K> lhs = Mat<K>::Constant(f.cod.dim * n, f.dom.dim, zero);
    for (Index j = 0; j < f.dom.dim; ++j)
        for (Index idx = 0; idx < f.dom.dim * n; ++idx) {
            const K& cv = f.dom.coaction(idx, j);
            if (cv == zero) continue;
            Index i = idx / n, g = idx % n;
            for (Index i2 = 0; i2 < f.cod.dim; ++i2)
                if (!(f.map(i2, i) == zero)) lhs(i2 * n + g, j) += f.map(i2, i) * cv;
        }
    if (!mat_eq<K>(lhs, Mat<K>(f.cod.coaction * f.map))) sq.fail("square");
    rep.add(std::move(sq));
    return rep;
}

// Solution space of (f (x) id) rho_1 = rho_2 f, flattened as f(i2, i) at
// index i2 * dim_1 + i.
template <class K>
Subspace<K> intertwiner_space(const Comodule<K>& m1, const Comodule<K>& m2) {
    const Index n = m1.coalgebra->dim;
    if (m2.coalgebra->dim != n)
        throw ValidationError("repcat.mismatch", "", "intertwiners need a common coalgebra");
    const Index d1 = m1.dim, d2 = m2.dim;
    const K zero = m1.coalgebra->one - m1.coalgebra->one;
    Mat<K> sys = Mat<K>::Constant(d2 * n * d1, d2 * d1, zero);
    for (Index j = 0; j < d1; ++j) {
        for (Index idx = 0; idx < d1 * n; ++idx) {
            const K& cv = m1.coaction(idx, j);
            if (cv == zero) continue;
            Index i = idx / n, g = idx % n;
            for (Index i2 = 0; i2 < d2; ++i2)
                sys((i2 * n + g) * d1 + j, i2 * d1 + i) += cv;
        }
        for (Index idx = 0; idx < d2 * n; ++idx)
            for (Index b = 0; b < d2; ++b)
                if (!(m2.coaction(idx, b) == zero))
                    sys(idx * d1 + j, b * d1 + j) -= m2.coaction(idx, b);
    }
    return kernel(sys);
}

// Span of the matrix coefficients of the coaction inside the coalgebra;
// closure under the coproduct is verified.
template <class K>
Subspace<K> coefficient_coalgebra(const Comodule<K>& m) {
    const Index n = m.coalgebra->dim, d = m.dim;
    const K zero = m.coalgebra->one - m.coalgebra->one;
    Mat<K> rows = Mat<K>::Constant(d * d, n, zero);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            for (Index g = 0; g < n; ++g) rows(i * d + j, g) = m.coaction(i * n + g, j);
    Subspace<K> span = row_space(std::move(rows));
    if (largest_subcoalgebra(*m.coalgebra, span).dim() != span.dim())
        throw ValidationError("repcat.coefficients", m.coalgebra->name,
                              "coefficient span is not a subcoalgebra (invalid comodule)");
    return span;
}

template <class K>
struct CoendResult {
    Subspace<K> span;
    bool recovers = false;
};

// Sum of the coefficient coalgebras; at finite dimension the reconstruction
// succeeds exactly when the sum exhausts the coalgebra.
template <class K>
CoendResult<K> coend_from_comodules(const HopfPtr<K>& h, const std::vector<Comodule<K>>& ms) {
    Subspace<K> acc = zero_subspace<K>(h->dim);
    for (const Comodule<K>& m : ms) {
        if (m.coalgebra->dim != h->dim)
            throw ValidationError("repcat.mismatch", m.coalgebra->name,
                                  "comodule coalgebra differs from the reconstruction target");
        acc = sum(acc, coefficient_coalgebra(m));
    }
    bool recovers = acc.dim() == h->dim;
    return CoendResult<K>{std::move(acc), recovers};
}

// Basis change: an isomorphic copy of the comodule along an invertible t.
template <class K>
Comodule<K> transform_comodule(const Comodule<K>& m, const Mat<K>& t) {
    std::optional<Mat<K>> tinv = inverse_matrix(t);
    if (!tinv) throw ValidationError("repcat.transform", "", "basis change is not invertible");
    const Index n = m.coalgebra->dim, d = m.dim;
    const K zero = m.coalgebra->one - m.coalgebra->one;
    Mat<K> half = Mat<K>::Constant(d * n, d, zero);
    for (Index j = 0; j < d; ++j)
        for (Index idx = 0; idx < d * n; ++idx) {
            const K& cv = m.coaction(idx, j);
            if (cv == zero) continue;
            Index i = idx / n, g = idx % n;
            for (Index i2 = 0; i2 < d; ++i2)
                if (!(t(i2, i) == zero)) half(i2 * n + g, j) += t(i2, i) * cv;
        }
    return Comodule<K>{m.coalgebra, d, Mat<K>(half * *tinv)};
}

template <class K>
Comodule<K> direct_sum_comodule(const Comodule<K>& a, const Comodule<K>& b) {
    if (a.coalgebra->dim != b.coalgebra->dim)
        throw ValidationError("repcat.mismatch", "", "direct sum needs a common coalgebra");
    const Index n = a.coalgebra->dim, d = a.dim + b.dim;
    const K zero = a.coalgebra->one - a.coalgebra->one;
    Mat<K> co = Mat<K>::Constant(d * n, d, zero);
    co.block(0, 0, a.dim * n, a.dim) = a.coaction;
    co.block(a.dim * n, a.dim, b.dim * n, b.dim) = b.coaction;
    return Comodule<K>{a.coalgebra, d, std::move(co)};
}

// ----- cosemisimple decomposition of a function algebra -----

template <class K>
struct CosimpleBlock {
    Subspace<K> carrier;  // subcoalgebra of the function algebra
    Index simple_dim = 0;
};

template <class K>
struct CosimpleDecomposition {
    std::vector<CosimpleBlock<K>> blocks;
    std::vector<Comodule<K>> simples;  // simples[i] has coefficient span blocks[i].carrier
    CheckReport checks;
};

// Smallest prime p not dividing the group order with p = 1 mod exponent(G),
// so that F_p splits every irreducible.
inline int splitting_prime(const FiniteGroup& g) {
    int e = g.exponent();
    for (int p = 2;; ++p) {
        bool prime = p > 1;
        for (int q = 2; q * q <= p && prime; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        if (g.order % p == 0) continue;
        if ((p - 1) % e == 0) return p;
    }
}

namespace detail {

template <class K>
void require_splitting_field(const FiniteGroup& g, const K& one, const std::string& who) {
    std::uint64_t p = characteristic(one);
    int e = g.exponent();
    if (p == 0)
        throw ValidationError("repcat.splitting-prime", "characteristic 0",
                              who + ": needs a prime field with p = 1 mod " + std::to_string(e));
    if (g.order % int(p) == 0)
        throw ValidationError("repcat.splitting-prime",
                              "p=" + std::to_string(p) + " divides |G|=" + std::to_string(g.order),
                              who + ": characteristic clash");
    if ((p - 1) % std::uint64_t(e) != 0)
        throw ValidationError(
            "repcat.splitting-prime",
            "p=" + std::to_string(p) + " exponent=" + std::to_string(e) + " p mod " +
                std::to_string(e) + " = " + std::to_string(p % std::uint64_t(e)) + " (need 1)",
            who + ": non-splitting prime");
}

// Primitive central idempotents of the group algebra over a splitting prime
// field. Small centers are brute-forced; larger ones are split by scanning
// eigenvalues of multiplication by class sums.
template <class K>
std::vector<Vec<K>> primitive_central_idempotents(const GroupPtr& g, const HopfAlgebra<K>& b) {
    const Index n = b.dim;
    const K zero = b.one - b.one;
    const std::uint64_t p = characteristic(b.one);
    std::vector<std::vector<int>> classes = g->conjugacy_classes();
    const size_t c = classes.size();

    std::vector<Vec<K>> zsums;
    for (const auto& cls : classes) {
        Vec<K> z = Vec<K>::Constant(n, zero);
        for (int x : cls) z(x) = b.one;
        zsums.push_back(std::move(z));
    }
    std::vector<K> vals(size_t(p), zero);
    for (size_t i = 1; i < size_t(p); ++i) vals[i] = vals[i - 1] + b.one;

    std::vector<Vec<K>> prims;
    if (c <= 4) {
        // enumerate every central element with coefficients in F_p
        std::vector<Vec<K>> idems;
        std::vector<size_t> digits(c, 0);
        std::uint64_t total = 1;
        for (size_t i = 0; i < c; ++i) total *= p;
        for (std::uint64_t it = 0; it < total; ++it) {
            std::uint64_t rem = it;
            Vec<K> z = Vec<K>::Constant(n, zero);
            bool nonzero = false;
            for (size_t k = 0; k < c; ++k) {
                size_t dk = size_t(rem % p);
                rem /= p;
                if (dk != 0) {
                    nonzero = true;
                    z += vals[dk] * zsums[k];
                }
            }
            if (!nonzero) continue;
            if (vec_eq<K>(b.mul(z, z), z)) idems.push_back(std::move(z));
        }
        for (size_t i = 0; i < idems.size(); ++i) {
            bool atom = true;
            for (size_t j = 0; j < idems.size() && atom; ++j)
                if (j != i && vec_eq<K>(b.mul(idems[i], idems[j]), idems[j])) atom = false;
            if (atom) prims.push_back(idems[i]);
        }
    } else {
        prims.push_back(Vec<K>(b.unit));
        for (const Vec<K>& zk : zsums) {
            std::vector<Vec<K>> next;
            for (const Vec<K>& e : prims) {
                // restrict multiplication by zk to the subalgebra e Z
                Mat<K> rows(Index(c), n);
                for (size_t j = 0; j < c; ++j) rows.row(Index(j)) = b.mul(e, zsums[j]).transpose();
                Subspace<K> ez = row_space(std::move(rows));
                const Index m = ez.dim();
                Mat<K> mult(m, m);
                for (Index j = 0; j < m; ++j) {
                    auto x = coords_in(ez, b.mul(zk, Vec<K>(ez.basis.row(j).transpose())));
                    if (!x)
                        throw ValidationError("repcat.split-stuck", "center",
                                              "class-sum multiple left the subalgebra");
                    mult.col(j) = *x;
                }
                std::vector<K> spec;
                Index found = 0;
                for (std::uint64_t lam = 0; lam < p; ++lam) {
                    Mat<K> shifted = mult;
                    for (Index i = 0; i < m; ++i) shifted(i, i) -= vals[size_t(lam)];
                    Index kdim = kernel(shifted).dim();
                    if (kdim > 0) {
                        spec.push_back(vals[size_t(lam)]);
                        found += kdim;
                    }
                }
                if (found != m)
                    throw ValidationError("repcat.split-stuck", "center",
                                          "class-sum action is not diagonalizable over F_p");
                if (spec.size() == 1) {
                    next.push_back(e);
                    continue;
                }
                Vec<K> u = b.mul(zk, e);
                for (const K& lam : spec) {
                    Vec<K> acc = e;
                    for (const K& mu : spec) {
                        if (mu == lam) continue;
                        Vec<K> shifted = u - mu * e;
                        acc = b.mul(acc, shifted);
                        K scale = b.one / (lam - mu);
                        acc *= scale;
                    }
                    if (!is_zero_vec<K>(acc)) next.push_back(std::move(acc));
                }
            }
            prims = std::move(next);
        }
        if (prims.size() != c)
            throw ValidationError("repcat.split-stuck", "center",
                                  "primitive idempotent count " + std::to_string(prims.size()) +
                                      " does not match class count " + std::to_string(c));
    }
    for (const Vec<K>& e : prims)
        if (!vec_eq<K>(b.mul(e, e), e))
            throw ValidationError("repcat.split-stuck", "center", "non-idempotent survivor");
    return prims;
}

// Smallest cyclic submodule reachable from deterministic candidate vectors.
template <class K>
Subspace<K> shrink_to_simple(const HopfAlgebra<K>& b, Subspace<K> w, Index want) {
    const Index n = b.dim;
    const K zero = b.one - b.one;
    const std::uint64_t p = characteristic(b.one);
    std::vector<K> vals(size_t(p), zero);
    for (size_t i = 1; i < size_t(p); ++i) vals[i] = vals[i - 1] + b.one;

    auto cyclic = [&](const Vec<K>& v) {
        Mat<K> rows(n, n);
        for (Index g = 0; g < n; ++g)
            rows.row(g) = b.mul(unit_vec<K>(n, g, b.one), v).transpose();
        return row_space(std::move(rows));
    };

    while (w.dim() > want) {
        const Index m = w.dim();
        // pass 1: cyclic submodules of candidate elements
        Subspace<K> best = w;
        auto consider = [&](const Vec<K>& v) {
            if (is_zero_vec<K>(v)) return;
            Subspace<K> s = cyclic(v);
            if (s.dim() > 0 && s.dim() < best.dim()) best = std::move(s);
        };
        for (Index i = 0; i < m; ++i) consider(Vec<K>(w.basis.row(i).transpose()));
        for (Index i = 0; i < m && best.dim() > want; ++i)
            for (Index j = i + 1; j < m && best.dim() > want; ++j)
                for (size_t cmul = 1; cmul <= 2 && cmul < size_t(p); ++cmul)
                    consider(Vec<K>(w.basis.row(i).transpose() +
                                    vals[cmul] * w.basis.row(j).transpose()));
        if (best.dim() < m) {
            w = std::move(best);
            continue;
        }
        // pass 2: split by an eigenvalue of a non-scalar module endomorphism
        Mat<K> action(m, m);
        Mat<K> sys = Mat<K>::Constant(n * m * m, m * m, zero);
        for (Index g = 0; g < n; ++g) {
            for (Index j = 0; j < m; ++j) {
                auto x = coords_in(w, b.mul(unit_vec<K>(n, g, b.one),
                                            Vec<K>(w.basis.row(j).transpose())));
                if (!x)
                    throw ValidationError("repcat.split-stuck", "module",
                                          "candidate space is not a submodule");
                action.col(j) = *x;
            }
            for (Index i = 0; i < m; ++i)
                for (Index j = 0; j < m; ++j)
                    for (Index a = 0; a < m; ++a) {
                        sys((g * m + i) * m + j, a * m + j) += action(i, a);
                        sys((g * m + i) * m + j, i * m + a) -= action(a, j);
                    }
        }
        Subspace<K> endo = kernel(sys);
        bool split = false;
        for (Index r = 0; r < endo.dim() && !split; ++r) {
            Mat<K> phi(m, m);
            for (Index i = 0; i < m; ++i)
                for (Index j = 0; j < m; ++j) phi(i, j) = endo.basis(r, i * m + j);
            bool scalar = true;
            for (Index i = 0; i < m && scalar; ++i)
                for (Index j = 0; j < m && scalar; ++j)
                    if (i != j ? !(phi(i, j) == zero) : !(phi(i, i) == phi(0, 0))) scalar = false;
            if (scalar) continue;
            for (std::uint64_t lam = 0; lam < p && !split; ++lam) {
                Mat<K> shifted = phi;
                for (Index i = 0; i < m; ++i) shifted(i, i) -= vals[size_t(lam)];
                Subspace<K> eig = kernel(shifted);
                if (eig.dim() == 0 || eig.dim() == m) continue;
                // lift eigenvectors back to ambient coordinates
                Mat<K> rows = eig.basis * w.basis;
                w = row_space(std::move(rows));
                split = true;
            }
        }
        if (!split)
            throw ValidationError("repcat.split-stuck", "module",
                                  "no eigenvalue split found at dim " + std::to_string(m));
    }
    if (w.dim() != want)
        throw ValidationError("repcat.split-stuck", "module",
                              "reached dim " + std::to_string(w.dim()) + " below target " +
                                  std::to_string(want));
    return w;
}

}  // namespace detail

template <class K>
CosimpleDecomposition<K> cosimple_decomposition(const GroupPtr& g, const HopfPtr<K>& h) {
    if (h->dim != g->order)
        throw ValidationError("repcat.mismatch", h->name,
                              "function algebra does not match the group order");
    detail::require_splitting_field(*g, h->one, "cosimple_decomposition");
    const Index n = h->dim;
    const K zero = h->one - h->one;
    HopfPtr<K> b = group_algebra<K>(g, h->one);

    std::vector<Vec<K>> prims = detail::primitive_central_idempotents(g, *b);
    CosimpleDecomposition<K> out;

    CheckResult count("repcat.block-count", "one block per conjugacy class");
    if (prims.size() != g->conjugacy_classes().size())
        count.fail("blocks=" + std::to_string(prims.size()));
    out.checks.add(std::move(count));

    struct Piece {
        Subspace<K> carrier;
        Subspace<K> ideal;
        Index d;
    };
    std::vector<Piece> pieces;
    for (const Vec<K>& e : prims) {
        Mat<K> pmat = Mat<K>::Constant(n, n, zero);
        for (Index a = 0; a < n; ++a) pmat.col(a) = b->mul(e, unit_vec<K>(n, a, h->one));
        Subspace<K> ideal = image(pmat);
        Subspace<K> carrier = row_space(Mat<K>(pmat));
        Index dsq = ideal.dim();
        Index d = Index(std::llround(std::sqrt(double(dsq))));
        if (d * d != dsq)
            throw ValidationError("repcat.split-stuck", "block",
                                  "block dimension " + std::to_string(dsq) +
                                      " is not a perfect square");
        pieces.push_back(Piece{std::move(carrier), std::move(ideal), d});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b2) {
        if (a.d != b2.d) return a.d < b2.d;
        return a.carrier.pivots < b2.carrier.pivots;
    });

    CheckResult dims("repcat.block-dims", "squared simple dimensions sum to the group order");
    Index total = 0;
    for (const Piece& pc : pieces) total += pc.d * pc.d;
    if (total != n) dims.fail("sum=" + std::to_string(total));
    out.checks.add(std::move(dims));

    CheckResult sub("repcat.block-subcoalgebra", "every block carrier is a subcoalgebra");
    CheckResult match("repcat.coefficients-match",
                      "the simple comodule's coefficient span equals its block carrier");
    for (size_t bi = 0; bi < pieces.size(); ++bi) {
        Piece& pc = pieces[bi];
        if (largest_subcoalgebra(*h, pc.carrier).dim() != pc.carrier.dim())
            sub.fail("block " + std::to_string(bi));

        Subspace<K> w = detail::shrink_to_simple(*b, pc.ideal, pc.d);
        Mat<K> coaction = Mat<K>::Constant(pc.d * n, pc.d, zero);
        for (Index gi = 0; gi < n; ++gi)
            for (Index j = 0; j < pc.d; ++j) {
                auto x = coords_in(w, b->mul(unit_vec<K>(n, gi, h->one),
                                             Vec<K>(w.basis.row(j).transpose())));
                if (!x)
                    throw ValidationError("repcat.split-stuck", "module",
                                          "simple candidate is not closed under the action");
                for (Index i = 0; i < pc.d; ++i) coaction(i * n + gi, j) = (*x)(i);
            }
        Comodule<K> simple{h, pc.d, std::move(coaction)};
        Subspace<K> coeff = coefficient_coalgebra(simple);
        if (!(coeff.pivots == pc.carrier.pivots && mat_eq<K>(coeff.basis, pc.carrier.basis)))
            match.fail("block " + std::to_string(bi));
        out.simples.push_back(std::move(simple));
        out.blocks.push_back(CosimpleBlock<K>{std::move(pc.carrier), pc.d});
    }
    out.checks.add(std::move(sub));
    out.checks.add(std::move(match));

    CheckResult direct("repcat.block-sum", "blocks sum directly to the whole coalgebra");
    Subspace<K> acc = zero_subspace<K>(n);
    for (const auto& blk : out.blocks) acc = sum(acc, blk.carrier);
    if (acc.dim() != n) direct.fail("span dim " + std::to_string(acc.dim()));
    out.checks.add(std::move(direct));
    return out;
}

template <class K>
CheckReport semisimplicity_check(const CosimpleDecomposition<K>& dec) {
    CheckReport rep = dec.checks;
    for (size_t i = 0; i < dec.simples.size(); ++i)
        rep.merge_prefixed(comodule_check(dec.simples[i]),
                           "repcat.simple" + std::to_string(i) + ".");
    CheckResult ends("repcat.end-dims",
                     "hom spaces between simples have dimension delta_ij");
    for (size_t i = 0; i < dec.simples.size(); ++i)
        for (size_t j = 0; j < dec.simples.size(); ++j) {
            Index dim = intertwiner_space(dec.simples[i], dec.simples[j]).dim();
            Index want = (i == j) ? 1 : 0;
            if (dim != want)
                ends.fail("hom(" + std::to_string(i) + "," + std::to_string(j) +
                          ") dim=" + std::to_string(dim));
        }
    rep.add(std::move(ends));
    return rep;
}

template <class K>
CheckReport semisimplicity_check(const GroupPtr& g, const HopfPtr<K>& h) {
    return semisimplicity_check(cosimple_decomposition(g, h));
}

// ----- representation-category structure maps -----

// Restriction along a group homomorphism: the coaction composes with the
// dualized map on functions.
template <class K>
Comodule<K> rep_functor(const GroupHom& f, const Comodule<K>& m, HopfPtr<K> target = nullptr) {
    if (m.coalgebra->dim != f.cod->order)
        throw ValidationError("repcat.mismatch", m.coalgebra->name,
                              "comodule does not live over functions on the codomain");
    if (!target) target = function_algebra<K>(f.dom, m.coalgebra->one);
    if (target->dim != f.dom->order)
        throw ValidationError("repcat.mismatch", target->name,
                              "target coalgebra does not match the domain group");
    const Index nc = m.coalgebra->dim, nt = target->dim, d = m.dim;
    const K zero = m.coalgebra->one - m.coalgebra->one;
    Mat<K> co = Mat<K>::Constant(d * nt, d, zero);
    for (Index j = 0; j < d; ++j)
        for (Index i = 0; i < d; ++i)
            for (Index x = 0; x < nt; ++x) co(i * nt + x, j) = m.coaction(i * nc + f(int(x)), j);
    return Comodule<K>{std::move(target), d, std::move(co)};
}

// Restriction along the vertical composition, viewed as a homomorphism from
// the materialized composable-pair group.
template <class K>
Comodule<K> rep_underline_delta(const TwoGroup& tg, const Comodule<K>& m,
                                HopfPtr<K> target = nullptr) {
    GroupPullback composable = pullback(tg.s, tg.t);
    std::vector<int> table(composable.pairs.size());
    for (size_t i = 0; i < composable.pairs.size(); ++i)
        table[i] = compose_vertical(tg, composable.pairs[i].first, composable.pairs[i].second);
    GroupHom comp = make_hom(composable.group, tg.G1, table);
    return rep_functor(comp, m, std::move(target));
}

// Restriction along vertical inversion; the induced map on functions is
// checked to be a coalgebra morphism before use.
template <class K>
Comodule<K> rep_antipode(const TwoGroup& tg, const Comodule<K>& m) {
    if (m.coalgebra->dim != tg.G1->order)
        throw ValidationError("repcat.mismatch", m.coalgebra->name,
                              "comodule does not live over functions on the cell group");
    std::vector<int> table(size_t(tg.G1->order));
    for (int a = 0; a < tg.G1->order; ++a) table[size_t(a)] = vertical_inverse(tg, a);
    GroupHom xi = make_hom(tg.G1, tg.G1, table);
    HopfHom<K> kxi = dualize_hom(xi, m.coalgebra, m.coalgebra);
    CheckReport hc = hopf_hom_check(kxi);
    const CheckResult* co = hc.find("hopfhom.comultiplicative");
    const CheckResult* cu = hc.find("hopfhom.counit");
    if (!co || !cu || !co->pass || !cu->pass)
        throw ValidationError("repcat.antipode-upstream", tg.G1->name,
                              "vertical inversion does not induce a coalgebra morphism; "
                              "the 2-group structure is inconsistent");
    return rep_functor(xi, m, m.coalgebra);
}

}  // namespace halg
