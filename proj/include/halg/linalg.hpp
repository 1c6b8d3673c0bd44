#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "halg/scalar.hpp"

namespace halg {

using Index = Eigen::Index;

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
template <class K>
using RowVec = Eigen::Matrix<K, 1, Eigen::Dynamic>;

template <class K>
bool mat_eq(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class K>
bool vec_eq(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (!(a(i) == b(i))) return false;
    return true;
}

template <class K>
bool is_zero(const Mat<K>& m) {
    K zero(0);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == zero)) return false;
    return true;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    K zero(0);
    for (Index i = 0; i < v.size(); ++i)
        if (!(v(i) == zero)) return false;
    return true;
}

// In-place Gauss-Jordan reduction. Returns the pivot columns.
template <class K>
std::vector<Index> rref_in_place(Mat<K>& m) {
    std::vector<Index> pivots;
    const K zero(0);
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index sel = -1;
        for (Index r = row; r < m.rows(); ++r) {
            if (!(m(r, col) == zero)) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row) m.row(sel).swap(m.row(row));
        K inv = K(1) / m(row, col);
        for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            K f = m(r, col);
            if (f == zero) continue;
            for (Index j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
struct Subspace;

// Incrementally maintained reduced row set, keyed by pivot column. insert()
// reduces the candidate against the current rows and, when independent,
// eliminates its pivot column from them, so the rows always form an RREF
// basis of the span so far.
template <class K>
class RrefAccumulator {
  public:
    explicit RrefAccumulator(Index ambient) : ambient_(ambient) {}

    void reduce(Vec<K>& v) const {
        const K zero(0);
        for (const auto& [p, row] : rows_) {
            K f = v(p);
            if (f == zero) continue;
            for (Index j = 0; j < ambient_; ++j) v(j) = v(j) - f * row(j);
        }
    }

    // Returns the normalized remainder when the vector enlarged the span.
    std::optional<Vec<K>> insert(Vec<K> v) {
        const K zero(0);
        reduce(v);
        Index p = -1;
        for (Index j = 0; j < ambient_; ++j)
            if (!(v(j) == zero)) {
                p = j;
                break;
            }
        if (p < 0) return std::nullopt;
        K inv = K(1) / v(p);
        for (Index j = p; j < ambient_; ++j) v(j) = v(j) * inv;
        for (auto& [q, row] : rows_) {
            K f = row(p);
            if (f == zero) continue;
            for (Index j = 0; j < ambient_; ++j) row(j) = row(j) - f * v(j);
        }
        auto [it, fresh] = rows_.emplace(p, std::move(v));
        (void)fresh;
        return it->second;
    }

    Index dim() const { return Index(rows_.size()); }

    Subspace<K> to_subspace() const;

  private:
    Index ambient_;
    std::map<Index, Vec<K>> rows_;
};

// A linear subspace of K^ambient held in canonical form: the rows of `basis`
// are the reduced row echelon basis, so two Subspace values describe the same
// space exactly when they compare equal entrywise.
template <class K>
struct Subspace {
    Index ambient = 0;
    Mat<K> basis;                 // dim() x ambient, RREF, no zero rows
    std::vector<Index> pivots;    // pivot column of each basis row

    Index dim() const { return basis.rows(); }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && mat_eq(basis, o.basis);
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

template <class K>
Subspace<K> RrefAccumulator<K>::to_subspace() const {
    Subspace<K> s;
    s.ambient = ambient_;
    s.basis = Mat<K>(dim(), ambient_);
    Index r = 0;
    for (const auto& [p, row] : rows_) {
        s.basis.row(r++) = row.transpose();
        s.pivots.push_back(p);
    }
    return s;
}

template <class K>
Subspace<K> row_space(Mat<K> m) {
    Subspace<K> s;
    s.ambient = m.cols();
    s.pivots = rref_in_place(m);
    s.basis = m.topRows(Index(s.pivots.size()));
    return s;
}

template <class K>
Subspace<K> zero_subspace(Index ambient) {
    Subspace<K> s;
    s.ambient = ambient;
    s.basis = Mat<K>(0, ambient);
    return s;
}

template <class K>
Subspace<K> full_subspace(Index ambient) {
    return row_space(Mat<K>(Mat<K>::Identity(ambient, ambient)));
}

template <class K>
Subspace<K> span_of_rows(const Mat<K>& rows) {
    return row_space(Mat<K>(rows));
}

template <class K>
Index rank(const Mat<K>& m) {
    Mat<K> c = m;
    return Index(rref_in_place(c).size());
}

// Kernel of the column action v -> m v.
template <class K>
Subspace<K> kernel(const Mat<K>& m) {
    Mat<K> r = m;
    std::vector<Index> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Index c : pivots) is_pivot[size_t(c)] = true;
    Index nfree = m.cols() - Index(pivots.size());
    Mat<K> rows(nfree, m.cols());
    rows.setZero();
    Index k = 0;
    for (Index f = 0; f < m.cols(); ++f) {
        if (is_pivot[size_t(f)]) continue;
        rows(k, f) = K(1);
        for (Index i = 0; i < Index(pivots.size()); ++i) rows(k, pivots[size_t(i)]) = -r(i, f);
        ++k;
    }
    return row_space(rows);
}

// Column space.
template <class K>
Subspace<K> image(const Mat<K>& m) {
    return row_space(Mat<K>(m.transpose()));
}

template <class K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("sum: ambient dimension mismatch");
    Mat<K> stacked(a.dim() + b.dim(), a.ambient);
    stacked.topRows(a.dim()) = a.basis;
    stacked.bottomRows(b.dim()) = b.basis;
    return row_space(stacked);
}

// Linear complement data for K^ambient / w: `proj` (q x n) vanishes exactly on
// w, `section` (n x q) picks the non-pivot coordinates as representatives, and
// proj * section = id.
template <class K>
struct QuotientMap {
    Mat<K> proj;
    Mat<K> section;
    Index dim() const { return proj.rows(); }
};

template <class K>
QuotientMap<K> quotient(const Subspace<K>& w) {
    const Index n = w.ambient;
    std::vector<bool> is_pivot(n, false);
    for (Index c : w.pivots) is_pivot[size_t(c)] = true;
    const Index q = n - w.dim();
    QuotientMap<K> out;
    out.proj = Mat<K>::Zero(q, n);
    out.section = Mat<K>::Zero(n, q);
    Index k = 0;
    for (Index j = 0; j < n; ++j) {
        if (is_pivot[size_t(j)]) continue;
        out.proj(k, j) = K(1);
        for (Index i = 0; i < w.dim(); ++i) out.proj(k, w.pivots[size_t(i)]) = -w.basis(i, j);
        out.section(j, k) = K(1);
        ++k;
    }
    return out;
}

template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    QuotientMap<K> qa = quotient(a), qb = quotient(b);
    Mat<K> stacked(qa.proj.rows() + qb.proj.rows(), a.ambient);
    stacked.topRows(qa.proj.rows()) = qa.proj;
    stacked.bottomRows(qb.proj.rows()) = qb.proj;
    return kernel(stacked);
}

// Coordinates of v in the RREF basis of s, or nullopt if v is outside s.
template <class K>
std::optional<Vec<K>> coords_in(const Subspace<K>& s, const Vec<K>& v) {
    if (v.size() != s.ambient) throw std::invalid_argument("coords_in: size mismatch");
    const K zero(0);
    Vec<K> x(s.dim());
    for (Index i = 0; i < s.dim(); ++i) x(i) = v(s.pivots[size_t(i)]);
    Vec<K> recon = Vec<K>::Constant(s.ambient, zero);
    for (Index i = 0; i < s.dim(); ++i) {
        if (x(i) == zero) continue;
        for (Index j = 0; j < s.ambient; ++j)
            if (!(s.basis(i, j) == zero)) recon(j) += x(i) * s.basis(i, j);
    }
    if (!vec_eq<K>(recon, v)) return std::nullopt;
    return x;
}

template <class K>
bool contains(const Subspace<K>& s, const Vec<K>& v) {
    return coords_in(s, v).has_value();
}

template <class K>
bool contains(const Subspace<K>& outer, const Subspace<K>& inner) {
    for (Index i = 0; i < inner.dim(); ++i)
        if (!contains(outer, Vec<K>(inner.basis.row(i).transpose()))) return false;
    return true;
}

// Kronecker product with the pair index (i, j) -> i * dim_b + j on both axes.
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k)
            for (Index j = 0; j < b.rows(); ++j)
                for (Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
    return out;
}

template <class K>
Vec<K> kron_vec(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < b.size(); ++j) out(i * b.size() + j) = a(i) * b(j);
    return out;
}

// Swap of tensor legs as a permutation matrix: e_{i * db + j} -> e_{j * da + i}.
template <class K>
Mat<K> swap_legs(Index da, Index db) {
    Mat<K> out = Mat<K>::Zero(da * db, da * db);
    for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < db; ++j) out(j * da + i, i * db + j) = K(1);
    return out;
}

template <class K>
std::optional<Mat<K>> inverse_matrix(const Mat<K>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const Index n = m.rows();
    Mat<K> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Mat<K>::Identity(n, n);
    std::vector<Index> piv = rref_in_place(aug);
    if (Index(piv.size()) != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
    return Mat<K>(aug.rightCols(n));
}

template <class K>
Mat<K> vcat(const Mat<K>& a, const Mat<K>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
    Mat<K> out(a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

template <class K>
Vec<K> unit_vec(Index n, Index i, const K& one) {
    Vec<K> v = Vec<K>::Zero(n);
    v(i) = one;
    return v;
}

}  // namespace halg
