#ifndef REFLEXA_LINALG_HPP
#define REFLEXA_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "reflexa/errors.hpp"

namespace reflexa {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

template <class K>
SparseVec<K> sv_unit(std::uint32_t i) {
    return {{i, K(1)}};
}

template <class K>
K sv_get(const SparseVec<K>& v, std::uint32_t i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& e, std::uint32_t x) { return e.first < x; });
    return (it != v.end() && it->first == i) ? it->second : K(0);
}

/// a + c*b, merged.
template <class K>
SparseVec<K> sv_axpy(const SparseVec<K>& a, const K& c, const SparseVec<K>& b) {
    if (c.is_zero()) return a;
    SparseVec<K> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            K v = c * b[j].second;
            if (!v.is_zero()) r.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            K v = a[i].second + c * b[j].second;
            if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return r;
}

template <class K>
SparseVec<K> sv_scale(SparseVec<K> v, const K& c) {
    if (c.is_zero()) return {};
    for (auto& e : v) e.second = e.second * c;
    return v;
}

template <class K>
K sv_dot(const SparseVec<K>& a, const SparseVec<K>& b) {
    K acc(0);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else acc += a[i++].second * b[j++].second;
    }
    return acc;
}

/// Collapses an unsorted (index, value) soup into a sparse vector.
template <class K>
SparseVec<K> sv_collect(std::vector<std::pair<std::uint32_t, K>> soup) {
    std::sort(soup.begin(), soup.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<K> r;
    for (auto& e : soup) {
        if (!r.empty() && r.back().first == e.first)
            r.back().second += e.second;
        else
            r.push_back(std::move(e));
        if (!r.empty() && r.back().second.is_zero()) r.pop_back();
    }
    return r;
}

/// Row-major sparse matrix over an exact field.
template <class K>
class SparseMat {
public:
    SparseMat() : rows_(0), cols_(0) {}
    SparseMat(std::uint32_t r, std::uint32_t c) : rows_(r), cols_(c), row_(r) {}

    static SparseMat identity(std::uint32_t n) {
        SparseMat m(n, n);
        for (std::uint32_t i = 0; i < n; ++i) m.row_[i] = sv_unit<K>(i);
        return m;
    }
    static SparseMat from_rows(std::vector<SparseVec<K>> rows, std::uint32_t cols) {
        SparseMat m;
        m.rows_ = static_cast<std::uint32_t>(rows.size());
        m.cols_ = cols;
        m.row_ = std::move(rows);
        return m;
    }

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    const SparseVec<K>& row(std::uint32_t i) const { return row_[i]; }
    SparseVec<K>& row_mut(std::uint32_t i) { return row_[i]; }

    void set(std::uint32_t r, std::uint32_t c, K v) {
        auto& rw = row_[r];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& e, std::uint32_t x) { return e.first < x; });
        if (it != rw.end() && it->first == c) {
            if (v.is_zero()) rw.erase(it);
            else it->second = std::move(v);
        } else if (!v.is_zero()) {
            rw.insert(it, {c, std::move(v)});
        }
    }
    K get(std::uint32_t r, std::uint32_t c) const { return sv_get(row_[r], c); }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : row_) n += r.size();
        return n;
    }
    bool is_zero() const {
        for (const auto& r : row_)
            if (!r.empty()) return false;
        return true;
    }

    SparseMat transpose() const {
        SparseMat t(cols_, rows_);
        std::vector<std::size_t> cnt(cols_, 0);
        for (const auto& r : row_)
            for (const auto& e : r) ++cnt[e.first];
        for (std::uint32_t c = 0; c < cols_; ++c) t.row_[c].reserve(cnt[c]);
        for (std::uint32_t i = 0; i < rows_; ++i)
            for (const auto& e : row_[i]) t.row_[e.first].emplace_back(i, e.second);
        return t;
    }

    /// Matrix product (this * b).
    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        internal_check(a.cols_ == b.rows_, "matrix product shape mismatch");
        SparseMat c(a.rows_, b.cols_);
        for (std::uint32_t i = 0; i < a.rows_; ++i) {
            std::vector<std::pair<std::uint32_t, K>> soup;
            for (const auto& [k, v] : a.row_[i])
                for (const auto& [j, w] : b.row_[k]) soup.emplace_back(j, v * w);
            c.row_[i] = sv_collect(std::move(soup));
        }
        return c;
    }

    /// this * v, v in column coordinates.
    SparseVec<K> mul_vec(const SparseVec<K>& v) const {
        SparseVec<K> r;
        for (std::uint32_t i = 0; i < rows_; ++i) {
            K d = sv_dot(row_[i], v);
            if (!d.is_zero()) r.emplace_back(i, std::move(d));
        }
        return r;
    }

    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        internal_check(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
        SparseMat c(a.rows_, a.cols_);
        for (std::uint32_t i = 0; i < a.rows_; ++i) c.row_[i] = sv_axpy(a.row_[i], K(-1), b.row_[i]);
        return c;
    }

    static SparseMat vstack(const std::vector<const SparseMat*>& parts) {
        internal_check(!parts.empty(), "vstack of nothing");
        std::uint32_t cols = parts[0]->cols_, rows = 0;
        for (auto* p : parts) {
            internal_check(p->cols_ == cols, "vstack column mismatch");
            rows += p->rows_;
        }
        SparseMat m(rows, cols);
        std::uint32_t at = 0;
        for (auto* p : parts)
            for (std::uint32_t i = 0; i < p->rows_; ++i) m.row_[at++] = p->row_[i];
        return m;
    }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
    }

private:
    std::uint32_t rows_, cols_;
    std::vector<SparseVec<K>> row_;
};

/// Reduced row echelon form: rows with unit leading entries at strictly
/// increasing pivot columns, fully reduced above and below. Pivot choice is
/// deterministic (lowest column, then sparsest row, then first created), so
/// every downstream basis is reproducible.
template <class K>
struct Echelon {
    SparseMat<K> mat;                  // RREF rows, no zero rows
    std::vector<std::uint32_t> pivots; // ascending, one per row
    std::uint32_t amb = 0;

    std::uint32_t rank() const { return static_cast<std::uint32_t>(pivots.size()); }

    /// v minus the unique combination of rows matching v on pivot columns.
    SparseVec<K> reduce(SparseVec<K> v) const {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            K c = sv_get(v, pivots[i]);
            if (!c.is_zero()) v = sv_axpy(v, -c, mat.row(static_cast<std::uint32_t>(i)));
        }
        return v;
    }
    bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }
};

template <class K>
Echelon<K> echelon(std::vector<SparseVec<K>> rows, std::uint32_t ncols) {
    struct Item {
        SparseVec<K> v;
        std::uint64_t seq;
    };
    std::map<std::uint32_t, std::vector<Item>> buckets;
    std::uint64_t seq = 0;
    auto push = [&](SparseVec<K>&& v) {
        if (!v.empty()) buckets[v.front().first].push_back({std::move(v), seq++});
    };
    for (auto& r : rows) push(std::move(r));

    std::vector<SparseVec<K>> pivot_rows;
    std::vector<std::uint32_t> pivot_cols;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        std::uint32_t col = it->first;
        std::vector<Item> items = std::move(it->second);
        buckets.erase(it);
        std::size_t best = 0;
        for (std::size_t i = 1; i < items.size(); ++i) {
            if (items[i].v.size() < items[best].v.size() ||
                (items[i].v.size() == items[best].v.size() && items[i].seq < items[best].seq))
                best = i;
        }
        SparseVec<K> piv = std::move(items[best].v);
        {
            K inv = K(1) / piv.front().second;
            piv = sv_scale(std::move(piv), inv);
        }
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i == best) continue;
            SparseVec<K> r = sv_axpy(items[i].v, -items[i].v.front().second, piv);
            if (!r.empty()) buckets[r.front().first].push_back({std::move(r), items[i].seq});
        }
        pivot_rows.push_back(std::move(piv));
        pivot_cols.push_back(col);
    }

    // Back-substitution: clear pivot columns above.
    for (std::size_t i = pivot_rows.size(); i-- > 0;) {
        for (std::size_t j = i + 1; j < pivot_rows.size(); ++j) {
            K c = sv_get(pivot_rows[i], pivot_cols[j]);
            if (!c.is_zero()) pivot_rows[i] = sv_axpy(pivot_rows[i], -c, pivot_rows[j]);
        }
    }

    Echelon<K> e;
    e.mat = SparseMat<K>::from_rows(std::move(pivot_rows), ncols);
    e.pivots = std::move(pivot_cols);
    e.amb = ncols;
    return e;
}

template <class K>
Echelon<K> echelon_of(const SparseMat<K>& m) {
    std::vector<SparseVec<K>> rows;
    rows.reserve(m.rows());
    for (std::uint32_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return echelon(std::move(rows), m.cols());
}

template <class K>
std::uint32_t rank_of(const SparseMat<K>& m) {
    return echelon_of(m).rank();
}

/// A subspace of k^amb presented by a basis in which every basis vector has a
/// private unit coordinate (basis[i][coords[j]] = delta_ij). Coordinates of a
/// member are read off directly; membership is verified exactly.
template <class K>
struct Frame {
    SparseMat<K> basis;                // dim x amb
    std::vector<std::uint32_t> coords; // dim unit-coordinate columns

    std::uint32_t dim() const { return basis.rows(); }
    std::uint32_t amb() const { return basis.cols(); }

    /// Expresses v in the basis; throws if v is not in the subspace.
    SparseVec<K> coords_of(const SparseVec<K>& v) const {
        SparseVec<K> out;
        for (std::uint32_t j = 0; j < coords.size(); ++j) {
            K c = sv_get(v, coords[j]);
            if (!c.is_zero()) out.emplace_back(j, std::move(c));
        }
        SparseVec<K> resid = v;
        for (const auto& [j, c] : out) resid = sv_axpy(resid, -c, basis.row(j));
        internal_check(resid.empty(), "vector lies outside the expected subspace");
        return out;
    }

    bool contains(const SparseVec<K>& v) const {
        SparseVec<K> resid = v;
        for (std::uint32_t j = 0; j < coords.size(); ++j) {
            K c = sv_get(resid, coords[j]);
            if (!c.is_zero()) resid = sv_axpy(resid, -c, basis.row(j));
        }
        return resid.empty();
    }

    /// Embeds coordinates back into the ambient space.
    SparseVec<K> lift(const SparseVec<K>& c) const {
        SparseVec<K> v;
        for (const auto& [j, x] : c) v = sv_axpy(v, x, basis.row(j));
        return v;
    }
};

/// Column-driven application of a fixed matrix to many vectors: the
/// transpose is materialized once so each product costs only the touched
/// columns, independent of the row count.
template <class K>
class ColApplier {
public:
    explicit ColApplier(const SparseMat<K>& m) : t_(m.transpose()) {}

    SparseVec<K> apply(const SparseVec<K>& v) const {
        std::vector<std::pair<std::uint32_t, K>> soup;
        for (const auto& [j, c] : v)
            for (const auto& [i, w] : t_.row(j)) soup.emplace_back(i, c * w);
        return sv_collect(std::move(soup));
    }
    /// Column j of the original matrix.
    const SparseVec<K>& column(std::uint32_t j) const { return t_.row(j); }

private:
    SparseMat<K> t_;
};

/// Incrementally grown row-echelon span: dimension and membership only.
/// Rows keep unit leading entries; reduction cancels leading entries
/// left-to-right, which is sound because eliminating a pivot only introduces
/// entries to its right.
template <class K>
class IncrementalSpan {
public:
    explicit IncrementalSpan(std::uint32_t amb) : amb_(amb) {}

    std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
    std::uint32_t ambient() const { return amb_; }

    SparseVec<K> reduce(SparseVec<K> v) const {
        SparseVec<K> out;
        while (!v.empty()) {
            auto it = by_pivot_.find(v.front().first);
            if (it == by_pivot_.end()) {
                out.push_back(v.front());
                v.erase(v.begin());
            } else {
                v = sv_axpy(v, -v.front().second, rows_[it->second]);
            }
        }
        return out;
    }

    bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

    /// Adds v to the span; returns true iff the dimension grew.
    bool add(SparseVec<K> v) {
        SparseVec<K> r = reduce(std::move(v));
        if (r.empty()) return false;
        K inv = K(1) / r.front().second;
        r = sv_scale(std::move(r), inv);
        by_pivot_[r.front().first] = rows_.size();
        rows_.push_back(std::move(r));
        return true;
    }

private:
    std::uint32_t amb_;
    std::vector<SparseVec<K>> rows_;
    std::map<std::uint32_t, std::size_t> by_pivot_;
};

/// Row space of m as a frame (coords = pivot columns).
template <class K>
Frame<K> rowspace_frame(const SparseMat<K>& m) {
    Echelon<K> e = echelon_of(m);
    return Frame<K>{std::move(e.mat), std::move(e.pivots)};
}

template <class K>
Frame<K> span_frame(std::vector<SparseVec<K>> vectors, std::uint32_t amb) {
    Echelon<K> e = echelon(std::move(vectors), amb);
    return Frame<K>{std::move(e.mat), std::move(e.pivots)};
}

/// Solution space of m x = 0 as a frame (coords = free columns).
template <class K>
Frame<K> nullspace_frame(const SparseMat<K>& m) {
    Echelon<K> e = echelon_of(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    // Column access into the echelon rows.
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, K>>> by_col;
    for (std::uint32_t i = 0; i < e.mat.rows(); ++i)
        for (const auto& [c, v] : e.mat.row(i))
            if (!is_pivot[c]) by_col[c].emplace_back(i, v);

    std::vector<SparseVec<K>> rows;
    std::vector<std::uint32_t> coords;
    for (std::uint32_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::pair<std::uint32_t, K>> soup;
        soup.emplace_back(f, K(1));
        auto it = by_col.find(f);
        if (it != by_col.end())
            for (const auto& [i, v] : it->second) soup.emplace_back(e.pivots[i], -v);
        rows.push_back(sv_collect(std::move(soup)));
        coords.push_back(f);
    }
    return Frame<K>{SparseMat<K>::from_rows(std::move(rows), m.cols()), std::move(coords)};
}

}  // namespace reflexa

#endif
