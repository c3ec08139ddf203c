#ifndef REFLEXA_MODULE_HPP
#define REFLEXA_MODULE_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "reflexa/algebra.hpp"

namespace reflexa {

template <class K>
class RealizedModule;
template <class K>
using ModulePtr = std::shared_ptr<const RealizedModule<K>>;

/// Polynomial matrix: the map R^cols -> R^rows with column j sending the j-th
/// generator to the column's entries.
template <class K>
struct PolyMat {
    std::uint32_t rows = 0, cols = 0;
    std::vector<Poly<K>> entries;  // row-major, rows*cols

    const Poly<K>& at(std::uint32_t r, std::uint32_t c) const { return entries[r * cols + c]; }
    Poly<K>& at(std::uint32_t r, std::uint32_t c) { return entries[r * cols + c]; }

    PolyMat transpose() const {
        PolyMat t;
        t.rows = cols;
        t.cols = rows;
        t.entries.resize(entries.size());
        for (std::uint32_t r = 0; r < rows; ++r)
            for (std::uint32_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }
};

/// A finite presentation: coker(F1 -> F0) over a fixed algebra.
template <class K>
struct Presentation {
    AlgebraPtr<K> algebra;
    PolyMat<K> matrix;  // rows = rank F0, cols = rank F1
};

/// A finitely generated module realized as a finite-dimensional k-space with
/// one commuting nilpotent action matrix per variable. Identified only up to
/// invariants; all outputs are reproducible because bases come from
/// deterministic echelon pivoting.
template <class K>
class RealizedModule : public std::enable_shared_from_this<RealizedModule<K>> {
public:
    RealizedModule(AlgebraPtr<K> alg, std::uint32_t dim, std::vector<SparseMat<K>> actions,
                   std::vector<SparseVec<K>> gen_markers = {})
        : alg_(std::move(alg)), dim_(dim), act_(std::move(actions)), gens_(std::move(gen_markers)) {
        validate();
    }

    const AlgebraPtr<K>& algebra() const { return alg_; }
    std::uint32_t dim() const { return dim_; }  // = length as a k-space
    const SparseMat<K>& action(std::size_t a) const { return act_[a]; }
    const std::vector<SparseMat<K>>& actions() const { return act_; }
    bool has_markers() const { return !gens_.empty() || dim_ == 0; }
    const std::vector<SparseVec<K>>& gen_markers() const { return gens_; }

    SparseVec<K> apply_monomial(const Monomial& m, SparseVec<K> v) const {
        for (std::size_t a = 0; a < alg_->nvars(); ++a)
            for (std::uint32_t t = 0; t < m.e[a]; ++t) v = act_[a].mul_vec(v);
        return v;
    }

    SparseVec<K> apply_poly(const Poly<K>& p, const SparseVec<K>& v) const {
        const Poly<K> pr = alg_->nvars() ? alg_->gb().reduce(p) : p;
        SparseVec<K> out;
        for (const auto& [m, c] : pr.terms()) out = sv_axpy(out, c, apply_monomial(m, v));
        return out;
    }

private:
    void validate() const {
        for (std::size_t a = 0; a < act_.size(); ++a)
            internal_check(act_[a].rows() == dim_ && act_[a].cols() == dim_,
                           "module action has wrong shape");
        internal_check(act_.size() == alg_->nvars(), "one action per variable required");
        for (std::size_t a = 0; a < act_.size(); ++a)
            for (std::size_t b = a + 1; b < act_.size(); ++b)
                internal_check((act_[a] * act_[b] - act_[b] * act_[a]).is_zero(),
                               "module actions fail to commute");
        for (std::size_t a = 0; a < act_.size(); ++a) {
            SparseMat<K> p = SparseMat<K>::identity(dim_);
            for (std::uint32_t t = 0; t < alg_->loewy() && !p.is_zero(); ++t) p = p * act_[a];
            internal_check(p.is_zero(), "module action is not nilpotent at the Loewy bound");
        }
        for (const auto& g : gens_)
            for (const auto& [i, c] : g)
                internal_check(i < dim_, "generator marker out of range");
    }

    AlgebraPtr<K> alg_;
    std::uint32_t dim_;
    std::vector<SparseMat<K>> act_;
    std::vector<SparseVec<K>> gens_;
};

/// An R-linear map between realized modules; R-linearity (the matrix
/// intertwines every variable action) is checked on construction.
template <class K>
struct ModuleMap {
    ModulePtr<K> source, target;
    SparseMat<K> matrix;  // target.dim x source.dim

    ModuleMap(ModulePtr<K> src, ModulePtr<K> tgt, SparseMat<K> m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        internal_check(source->algebra() == target->algebra(), "module map across algebras");
        internal_check(matrix.rows() == target->dim() && matrix.cols() == source->dim(),
                       "module map has wrong shape");
        for (std::size_t a = 0; a < source->algebra()->nvars(); ++a)
            internal_check((matrix * source->action(a) - target->action(a) * matrix).is_zero(),
                           "intertwining violation: map is not R-linear");
    }

    std::uint32_t rank() const { return rank_of(matrix); }
    bool injective() const { return rank() == source->dim(); }
    bool surjective() const { return rank() == target->dim(); }
};

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

template <class K>
ModulePtr<K> free_module(const AlgebraPtr<K>& A, std::uint32_t n) {
    const std::uint32_t L = A->length();
    std::vector<SparseMat<K>> acts;
    for (std::size_t a = 0; a < A->nvars(); ++a) {
        const SparseMat<K>& blk = A->var_action(a);
        SparseMat<K> M(n * L, n * L);
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t i = 0; i < L; ++i)
                for (const auto& [j, v] : blk.row(i)) M.set(b * L + i, b * L + j, v);
        acts.push_back(std::move(M));
    }
    std::vector<SparseVec<K>> gens;
    for (std::uint32_t b = 0; b < n; ++b) gens.push_back(sv_unit<K>(b * L));
    return std::make_shared<RealizedModule<K>>(A, n * L, std::move(acts), std::move(gens));
}

template <class K>
ModulePtr<K> residue_field(const AlgebraPtr<K>& A) {
    std::vector<SparseMat<K>> acts(A->nvars(), SparseMat<K>(1, 1));
    return std::make_shared<RealizedModule<K>>(A, 1, std::move(acts),
                                               std::vector<SparseVec<K>>{sv_unit<K>(0)});
}

/// The k-linear dual of R with transposed actions: the top of the injective
/// tower, of length l(R) and minimally generated by type(R) elements.
template <class K>
ModulePtr<K> canonical_module(const AlgebraPtr<K>& A) {
    std::vector<SparseMat<K>> acts;
    for (std::size_t a = 0; a < A->nvars(); ++a) acts.push_back(A->var_action(a).transpose());
    return std::make_shared<RealizedModule<K>>(A, A->length(), std::move(acts));
}

// ---------------------------------------------------------------------------
// Sub/quotient machinery
// ---------------------------------------------------------------------------

/// Realizes the subspace given by a frame as a module: checks closure under
/// every action and rewrites the actions in frame coordinates. Returns the
/// module and (optionally) the inclusion map.
template <class K>
ModulePtr<K> submodule_from_frame(const ModulePtr<K>& M, const Frame<K>& fr,
                                  std::optional<ModuleMap<K>>* inclusion_out = nullptr) {
    const std::size_t nv = M->algebra()->nvars();
    std::vector<SparseMat<K>> acts;
    for (std::size_t a = 0; a < nv; ++a) {
        ColApplier<K> ap(M->action(a));
        SparseMat<K> act(fr.dim(), fr.dim());
        for (std::uint32_t j = 0; j < fr.dim(); ++j) {
            SparseVec<K> w = ap.apply(fr.basis.row(j));
            for (const auto& [i, c] : fr.coords_of(w)) act.set(i, j, c);
        }
        acts.push_back(std::move(act));
    }
    auto sub = std::make_shared<RealizedModule<K>>(M->algebra(), fr.dim(), std::move(acts));
    if (inclusion_out) inclusion_out->emplace(sub, M, fr.basis.transpose());
    return sub;
}

/// Quotient of M by the subspace spanned by fr (must be action-stable).
/// Quotient coordinates are the complement of the frame's unit columns.
template <class K>
ModulePtr<K> quotient_by_frame(const ModulePtr<K>& M, const Frame<K>& fr,
                               std::optional<ModuleMap<K>>* projection_out = nullptr) {
    std::vector<bool> killed(M->dim(), false);
    for (auto c : fr.coords) killed[c] = true;
    std::vector<std::uint32_t> keep;
    for (std::uint32_t i = 0; i < M->dim(); ++i)
        if (!killed[i]) keep.push_back(i);

    // pi(v): eliminate the frame coordinates, then read the kept ones.
    auto project = [&](SparseVec<K> v) {
        for (std::uint32_t j = 0; j < fr.dim(); ++j) {
            K c = sv_get(v, fr.coords[j]);
            if (!c.is_zero()) v = sv_axpy(v, -c, fr.basis.row(j));
        }
        SparseVec<K> out;
        for (std::uint32_t t = 0; t < keep.size(); ++t) {
            K c = sv_get(v, keep[t]);
            if (!c.is_zero()) out.emplace_back(t, std::move(c));
        }
        return out;
    };

    const std::uint32_t qdim = static_cast<std::uint32_t>(keep.size());
    std::vector<SparseMat<K>> acts;
    for (std::size_t a = 0; a < M->algebra()->nvars(); ++a) {
        ColApplier<K> ap(M->action(a));
        SparseMat<K> act(qdim, qdim);
        for (std::uint32_t j = 0; j < qdim; ++j) {
            SparseVec<K> w = project(ap.column(keep[j]));
            for (const auto& [i, c] : w) act.set(i, j, c);
        }
        acts.push_back(std::move(act));
    }
    std::vector<SparseVec<K>> markers;
    for (const auto& g : M->gen_markers()) {
        auto w = project(g);
        markers.push_back(std::move(w));
    }
    auto Q = std::make_shared<RealizedModule<K>>(M->algebra(), qdim, std::move(acts),
                                                 std::move(markers));
    if (projection_out) {
        SparseMat<K> pm(qdim, M->dim());
        for (std::uint32_t j = 0; j < M->dim(); ++j)
            for (const auto& [i, c] : project(sv_unit<K>(j))) pm.set(i, j, c);
        projection_out->emplace(M, Q, std::move(pm));
    }
    return Q;
}

/// Smallest action-stable subspace containing the given vectors.
template <class K>
Frame<K> saturate_span(const ModulePtr<K>& M, std::vector<SparseVec<K>> seed) {
    std::vector<ColApplier<K>> aps;
    for (std::size_t a = 0; a < M->algebra()->nvars(); ++a) aps.emplace_back(M->action(a));
    Frame<K> fr = span_frame(std::move(seed), M->dim());
    while (true) {
        std::vector<SparseVec<K>> next;
        for (std::uint32_t i = 0; i < fr.dim(); ++i) next.push_back(fr.basis.row(i));
        bool grew = false;
        for (std::uint32_t i = 0; i < fr.dim(); ++i)
            for (const auto& ap : aps) {
                auto w = ap.apply(fr.basis.row(i));
                if (!w.empty() && !fr.contains(w)) {
                    next.push_back(std::move(w));
                    grew = true;
                }
            }
        if (!grew) return fr;
        fr = span_frame(std::move(next), M->dim());
    }
}

// ---------------------------------------------------------------------------
// Presentations and ideals
// ---------------------------------------------------------------------------

/// The k-linear matrix of the free-module map R^cols -> R^rows given by a
/// polynomial matrix.
template <class K>
SparseMat<K> free_map_matrix(const AlgebraPtr<K>& A, const PolyMat<K>& P) {
    const std::uint32_t L = A->length();
    SparseMat<K> m(P.rows * L, P.cols * L);
    for (std::uint32_t r = 0; r < P.rows; ++r)
        for (std::uint32_t c = 0; c < P.cols; ++c) {
            const Poly<K>& p = P.at(r, c);
            if (p.is_zero()) continue;
            SparseMat<K> blk = A->poly_action(p);
            for (std::uint32_t i = 0; i < L; ++i)
                for (const auto& [j, v] : blk.row(i)) m.set(r * L + i, c * L + j, v);
        }
    return m;
}

/// Cokernel of the presentation: quotient of the free module by the column
/// span of the matrix. Generator markers are the images of the free basis.
template <class K>
ModulePtr<K> realize(const Presentation<K>& p) {
    if (p.matrix.entries.size() != std::size_t(p.matrix.rows) * p.matrix.cols)
        throw InputError("presentation matrix shape does not match its entries");
    auto F0 = free_module(p.algebra, p.matrix.rows);
    if (p.matrix.cols == 0 || p.matrix.rows == 0) return F0;
    SparseMat<K> rel = free_map_matrix(p.algebra, p.matrix);
    Frame<K> U = rowspace_frame(rel.transpose());
    return quotient_by_frame(F0, U);
}

/// The ideal generated by the given elements of m, as a submodule of R.
template <class K>
ModulePtr<K> ideal_module(const AlgebraPtr<K>& A, const std::vector<Poly<K>>& gens,
                          std::optional<ModuleMap<K>>* inclusion_out = nullptr) {
    auto R = free_module(A, 1);
    std::vector<SparseVec<K>> vecs;
    for (const auto& g : gens) {
        SparseVec<K> v = A->nf_vec(g);
        if (!sv_get(v, 0u).is_zero())
            throw InputError("ideal generator reduces to a unit; the ideal is all of R");
        if (!v.empty()) vecs.push_back(std::move(v));
    }
    Frame<K> fr = saturate_span(R, vecs);
    auto I = submodule_from_frame(R, fr);
    // Markers: the generators, in subspace coordinates.
    std::vector<SparseVec<K>> markers;
    for (const auto& g : gens) {
        auto v = A->nf_vec(g);
        if (!v.empty()) markers.push_back(fr.coords_of(v));
    }
    auto I2 = std::make_shared<RealizedModule<K>>(A, I->dim(), I->actions(), std::move(markers));
    if (inclusion_out) inclusion_out->emplace(I2, R, fr.basis.transpose());
    return I2;
}

template <class K>
ModulePtr<K> max_ideal(const AlgebraPtr<K>& A, std::optional<ModuleMap<K>>* inclusion_out = nullptr) {
    std::vector<Poly<K>> vars;
    for (std::size_t a = 0; a < A->nvars(); ++a)
        vars.push_back(Poly<K>::variable(A->nvars(), a));
    return ideal_module(A, vars, inclusion_out);
}

// ---------------------------------------------------------------------------
// Kernel / image / cokernel / sums
// ---------------------------------------------------------------------------

template <class K>
ModulePtr<K> kernel(const ModuleMap<K>& f, std::optional<ModuleMap<K>>* inclusion_out = nullptr) {
    Frame<K> fr = nullspace_frame(f.matrix);
    return submodule_from_frame(f.source, fr, inclusion_out);
}

template <class K>
ModulePtr<K> image(const ModuleMap<K>& f, std::optional<ModuleMap<K>>* inclusion_out = nullptr) {
    Frame<K> fr = rowspace_frame(f.matrix.transpose());
    return submodule_from_frame(f.target, fr, inclusion_out);
}

template <class K>
ModulePtr<K> cokernel(const ModuleMap<K>& f, std::optional<ModuleMap<K>>* projection_out = nullptr) {
    Frame<K> fr = rowspace_frame(f.matrix.transpose());
    return quotient_by_frame(f.target, fr, projection_out);
}

template <class K>
ModulePtr<K> direct_sum(const ModulePtr<K>& A, const ModulePtr<K>& B) {
    internal_check(A->algebra() == B->algebra(), "direct sum across algebras");
    const std::uint32_t da = A->dim(), db = B->dim();
    std::vector<SparseMat<K>> acts;
    for (std::size_t a = 0; a < A->algebra()->nvars(); ++a) {
        SparseMat<K> m(da + db, da + db);
        for (std::uint32_t i = 0; i < da; ++i)
            for (const auto& [j, v] : A->action(a).row(i)) m.set(i, j, v);
        for (std::uint32_t i = 0; i < db; ++i)
            for (const auto& [j, v] : B->action(a).row(i)) m.set(da + i, da + j, v);
        acts.push_back(std::move(m));
    }
    std::vector<SparseVec<K>> markers;
    if (A->has_markers() && B->has_markers()) {
        markers = A->gen_markers();
        for (auto g : B->gen_markers()) {
            for (auto& e : g) e.first += da;
            markers.push_back(std::move(g));
        }
    }
    return std::make_shared<RealizedModule<K>>(A->algebra(), da + db, std::move(acts),
                                               std::move(markers));
}

// ---------------------------------------------------------------------------
// Minimal generators, freeness, trace
// ---------------------------------------------------------------------------

/// The subspace mM = sum of the images of the variable actions.
template <class K>
Frame<K> radical_subspace(const ModulePtr<K>& M) {
    std::vector<SparseVec<K>> rows;
    for (std::size_t a = 0; a < M->algebra()->nvars(); ++a) {
        SparseMat<K> t = M->action(a).transpose();
        for (std::uint32_t j = 0; j < M->dim(); ++j)
            if (!t.row(j).empty()) rows.push_back(t.row(j));
    }
    return span_frame(std::move(rows), M->dim());
}

template <class K>
std::uint32_t min_generator_count(const ModulePtr<K>& M) {
    return M->dim() - radical_subspace(M).dim();
}

/// Minimal generators and the corresponding minimal free cover. The
/// generator choice is the deterministic greedy one over the coordinate
/// basis, so covers are reproducible.
template <class K>
std::pair<std::uint32_t, ModuleMap<K>> min_generators(const ModulePtr<K>& M) {
    IncrementalSpan<K> span(M->dim());
    for (std::size_t a = 0; a < M->algebra()->nvars(); ++a) {
        SparseMat<K> t = M->action(a).transpose();
        for (std::uint32_t j = 0; j < M->dim(); ++j)
            if (!t.row(j).empty()) span.add(t.row(j));
    }
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t i = 0; i < M->dim(); ++i)
        if (span.add(sv_unit<K>(i))) chosen.push_back(i);

    const std::uint32_t mu = static_cast<std::uint32_t>(chosen.size());
    auto F = free_module(M->algebra(), mu);
    const std::uint32_t L = M->algebra()->length();
    std::vector<ColApplier<K>> aps;
    for (std::size_t a = 0; a < M->algebra()->nvars(); ++a) aps.emplace_back(M->action(a));
    SparseMat<K> cm(M->dim(), mu * L);
    for (std::uint32_t b = 0; b < mu; ++b)
        for (std::uint32_t u = 0; u < L; ++u) {
            const Monomial& mono = M->algebra()->std_monomials()[u];
            SparseVec<K> w = sv_unit<K>(chosen[b]);
            for (std::size_t a = 0; a < aps.size() && !w.empty(); ++a)
                for (std::uint32_t t = 0; t < mono.e[a] && !w.empty(); ++t) w = aps[a].apply(w);
            for (const auto& [i, c] : w) cm.set(i, b * L + u, c);
        }
    ModuleMap<K> cover(F, M, std::move(cm));
    internal_check(cover.surjective(), "minimal cover failed to be surjective");
    return {mu, std::move(cover)};
}

/// Freeness by length count: the minimal cover of a module of length
/// mu * l(R) is injective, hence an isomorphism.
template <class K>
bool is_free(const ModulePtr<K>& M) {
    return std::uint64_t(M->dim()) == std::uint64_t(min_generator_count(M)) * M->algebra()->length();
}

}  // namespace reflexa

#endif
