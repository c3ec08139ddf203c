#ifndef REFLEXA_HOM_HPP
#define REFLEXA_HOM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reflexa/module.hpp"
#include "reflexa/rational.hpp"

namespace reflexa {

/// Hom_R(M, N) realized as the space of intertwining k-linear maps, kept with
/// its functional coordinates: basis element t is a target.dim x source.dim
/// matrix flattened column-major into k^{lN*lM}. Evaluation is exact matrix
/// application, so natural maps need no choices.
template <class K>
struct HomModule {
    ModulePtr<K> mod;  // Hom(M,N) as a module: (r.f)(m) = r.f(m)
    ModulePtr<K> source, target;
    Frame<K> frame;  // basis rows in k^{lN*lM}

    /// Entry (i, j) of a flattened map sits at j*lN + i.
    SparseMat<K> basis_matrix(std::uint32_t t) const {
        const std::uint32_t lN = target->dim(), lM = source->dim();
        SparseMat<K> G(lN, lM);
        for (const auto& [idx, v] : frame.basis.row(t)) G.set(idx % lN, idx / lN, v);
        return G;
    }

    /// f_t(m) in target coordinates.
    SparseVec<K> eval(std::uint32_t t, const SparseVec<K>& m) const {
        const std::uint32_t lN = target->dim();
        std::vector<std::pair<std::uint32_t, K>> soup;
        for (const auto& [idx, v] : frame.basis.row(t)) {
            K c = sv_get(m, idx / lN);
            if (!c.is_zero()) soup.emplace_back(idx % lN, v * c);
        }
        return sv_collect(std::move(soup));
    }
};

template <class K>
HomModule<K> hom_module(const ModulePtr<K>& M, const ModulePtr<K>& N) {
    if (M->algebra() != N->algebra()) throw InputError("Hom of modules over different algebras");
    const std::uint32_t lM = M->dim(), lN = N->dim();
    const std::size_t nv = M->algebra()->nvars();
    if (std::uint64_t(lM) * lN > 50000000ull)
        throw BudgetExceeded("Hom space of dimension " + std::to_string(std::uint64_t(lM) * lN));

    // Intertwining constraints X^N f = f X^M, one row per (variable, i, j).
    std::vector<SparseVec<K>> rows;
    for (std::size_t a = 0; a < nv; ++a) {
        const SparseMat<K>& XN = N->action(a);
        const SparseMat<K> XMT = M->action(a).transpose();
        for (std::uint32_t i = 0; i < lN; ++i) {
            const auto& nrow = XN.row(i);
            for (std::uint32_t j = 0; j < lM; ++j) {
                const auto& mcol = XMT.row(j);
                if (nrow.empty() && mcol.empty()) continue;
                std::vector<std::pair<std::uint32_t, K>> soup;
                soup.reserve(nrow.size() + mcol.size());
                for (const auto& [t, v] : nrow) soup.emplace_back(j * lN + t, v);
                for (const auto& [s, w] : mcol) soup.emplace_back(s * lN + i, -w);
                auto r = sv_collect(std::move(soup));
                if (!r.empty()) rows.push_back(std::move(r));
            }
        }
    }
    Frame<K> fr;
    if (rows.empty()) {
        std::vector<SparseVec<K>> units;
        for (std::uint32_t i = 0; i < lM * lN; ++i) units.push_back(sv_unit<K>(i));
        fr = span_frame(std::move(units), lM * lN);
    } else {
        fr = nullspace_frame(SparseMat<K>::from_rows(std::move(rows), lM * lN));
    }

    // Module structure: (x_a . f) = X^N_a o f, re-expressed in the basis.
    std::vector<SparseMat<K>> acts;
    for (std::size_t a = 0; a < nv; ++a) {
        const SparseMat<K> XNT = N->action(a).transpose();
        SparseMat<K> act(fr.dim(), fr.dim());
        for (std::uint32_t t = 0; t < fr.dim(); ++t) {
            std::vector<std::pair<std::uint32_t, K>> soup;
            for (const auto& [idx, v] : fr.basis.row(t)) {
                const std::uint32_t j = idx / lN, s = idx % lN;
                for (const auto& [i, w] : XNT.row(s)) soup.emplace_back(j * lN + i, v * w);
            }
            for (const auto& [i, c] : fr.coords_of(sv_collect(std::move(soup)))) act.set(i, t, c);
        }
        acts.push_back(std::move(act));
    }
    HomModule<K> h;
    h.mod = std::make_shared<RealizedModule<K>>(M->algebra(), fr.dim(), std::move(acts));
    h.source = M;
    h.target = N;
    h.frame = std::move(fr);
    return h;
}

template <class K>
HomModule<K> dual(const ModulePtr<K>& M) {
    return hom_module(M, free_module(M->algebra(), 1));
}

/// The natural evaluation map M -> M**, built coordinate by coordinate from
/// the retained functional frames; R-linearity is verified on construction.
template <class K>
ModuleMap<K> natural_map(const ModulePtr<K>& M, const HomModule<K>& star,
                         const HomModule<K>& bistar) {
    const std::uint32_t lR = M->algebra()->length();
    const std::uint32_t ls = star.mod->dim();
    SparseMat<K> phi(bistar.mod->dim(), M->dim());
    for (std::uint32_t j = 0; j < M->dim(); ++j) {
        // phi(e_j) sends the functional f_t to f_t(e_j).
        std::vector<std::pair<std::uint32_t, K>> soup;
        for (std::uint32_t t = 0; t < ls; ++t) {
            const auto& row = star.frame.basis.row(t);
            auto lo = std::lower_bound(row.begin(), row.end(), j * lR,
                                       [](const auto& e, std::uint32_t x) { return e.first < x; });
            for (auto it = lo; it != row.end() && it->first < (j + 1) * lR; ++it)
                soup.emplace_back(t * lR + (it->first - j * lR), it->second);
        }
        for (const auto& [i, c] : bistar.frame.coords_of(sv_collect(std::move(soup))))
            phi.set(i, j, c);
    }
    return ModuleMap<K>(M, bistar.mod, std::move(phi));
}

/// Functorial dual of a map: f* : N* -> M*, g |-> g o f.
template <class K>
ModuleMap<K> dual_map(const ModuleMap<K>& f, const HomModule<K>& target_star,
                      const HomModule<K>& source_star) {
    internal_check(target_star.source == f.target && source_star.source == f.source,
                   "dual_map frames do not match the map");
    const std::uint32_t lR = f.source->algebra()->length();
    SparseMat<K> m(source_star.mod->dim(), target_star.mod->dim());
    for (std::uint32_t t = 0; t < target_star.mod->dim(); ++t) {
        SparseMat<K> comp = target_star.basis_matrix(t) * f.matrix;  // lR x lM
        std::vector<std::pair<std::uint32_t, K>> soup;
        for (std::uint32_t i = 0; i < lR; ++i)
            for (const auto& [j, v] : comp.row(i)) soup.emplace_back(j * lR + i, v);
        for (const auto& [i, c] : source_star.frame.coords_of(sv_collect(std::move(soup))))
            m.set(i, t, c);
    }
    return ModuleMap<K>(target_star.mod, source_star.mod, std::move(m));
}

template <class K>
struct DualTriple {
    HomModule<K> star;    // M*
    HomModule<K> bistar;  // M**
    ModuleMap<K> nat;     // phi_M
};

template <class K>
DualTriple<K> dual_triple(const ModulePtr<K>& M) {
    HomModule<K> star = dual(M);
    HomModule<K> bistar = dual(star.mod);
    ModuleMap<K> phi = natural_map(M, star, bistar);
    return DualTriple<K>{std::move(star), std::move(bistar), std::move(phi)};
}

struct ReflexivityFlags {
    bool torsionless = false;      // phi injective
    bool weakly_reflexive = false; // phi surjective
    bool reflexive = false;        // phi bijective
    std::uint64_t dual_len = 0, bidual_len = 0;
    std::uint32_t phi_rank = 0;
};

template <class K>
ReflexivityFlags reflexivity_flags_of(const ModulePtr<K>& M, const DualTriple<K>& t) {
    ReflexivityFlags f;
    f.dual_len = t.star.mod->dim();
    f.bidual_len = t.bistar.mod->dim();
    f.phi_rank = t.nat.rank();
    f.torsionless = (f.phi_rank == M->dim());
    f.weakly_reflexive = (f.phi_rank == t.bistar.mod->dim());
    f.reflexive = f.torsionless && f.weakly_reflexive;
    return f;
}

template <class K>
ReflexivityFlags reflexivity_flags(const ModulePtr<K>& M) {
    return reflexivity_flags_of(M, dual_triple(M));
}

// ---------------------------------------------------------------------------
// Minimal presentations and the transpose
// ---------------------------------------------------------------------------

/// Reads a k-linear map between free modules back as a polynomial matrix.
template <class K>
PolyMat<K> extract_poly_matrix(const AlgebraPtr<K>& A, const SparseMat<K>& kmat,
                               std::uint32_t target_rank, std::uint32_t source_rank) {
    const std::uint32_t L = A->length();
    internal_check(kmat.rows() == target_rank * L && kmat.cols() == source_rank * L,
                   "free map has unexpected shape");
    PolyMat<K> P;
    P.rows = target_rank;
    P.cols = source_rank;
    P.entries.assign(std::size_t(target_rank) * source_rank, Poly<K>(A->nvars()));
    ColApplier<K> cols(kmat);
    for (std::uint32_t j = 0; j < source_rank; ++j) {
        const SparseVec<K>& w = cols.column(j * L);
        std::vector<SparseVec<K>> blocks(target_rank);
        for (const auto& [idx, v] : w) blocks[idx / L].emplace_back(idx % L, v);
        for (std::uint32_t b = 0; b < target_rank; ++b)
            if (!blocks[b].empty()) P.at(b, j) = A->poly_of_vec(blocks[b]);
    }
    return P;
}

/// Minimal presentation F1 -> F0 -> M -> 0 as a polynomial matrix with
/// entries in the maximal ideal.
template <class K>
struct MinimalPresentation {
    std::uint32_t mu = 0;     // rank F0
    std::uint32_t beta1 = 0;  // rank F1
    PolyMat<K> matrix;        // mu x beta1
};

template <class K>
MinimalPresentation<K> minimal_presentation(const ModulePtr<K>& M) {
    auto [mu, cover] = min_generators(M);
    MinimalPresentation<K> pres;
    pres.mu = mu;
    if (mu == 0) {
        pres.matrix = PolyMat<K>{0, 0, {}};
        return pres;
    }
    std::optional<ModuleMap<K>> inc;
    auto syz = kernel(cover, &inc);
    auto [b1, cover1] = min_generators(syz);
    pres.beta1 = b1;
    pres.matrix = extract_poly_matrix(M->algebra(), inc->matrix * cover1.matrix, mu, b1);
    for (const auto& e : pres.matrix.entries)
        internal_check(e.constant_coeff().is_zero(),
                       "minimal presentation entry has a unit coefficient");
    return pres;
}

/// Transpose construction: dualize the minimal presentation and take the
/// cokernel. Kills free modules; pairs with phi_M through the length identity
/// of its second Ext against coker(phi_M).
template <class K>
ModulePtr<K> aus_transpose(const ModulePtr<K>& M) {
    MinimalPresentation<K> pres = minimal_presentation(M);
    if (pres.mu == 0 || pres.beta1 == 0) return free_module(M->algebra(), 0);
    Presentation<K> dualized{M->algebra(), pres.matrix.transpose()};
    return realize(dualized);
}

// ---------------------------------------------------------------------------
// Trace ideal and free summands
// ---------------------------------------------------------------------------

/// Sum of the images of all maps M -> R, as a submodule of R.
template <class K>
ModulePtr<K> trace_ideal(const ModulePtr<K>& M) {
    HomModule<K> star = dual(M);
    auto R = free_module(M->algebra(), 1);
    std::vector<SparseVec<K>> cols;
    for (std::uint32_t t = 0; t < star.mod->dim(); ++t)
        for (std::uint32_t j = 0; j < M->dim(); ++j) {
            auto v = star.eval(t, sv_unit<K>(j));
            if (!v.empty()) cols.push_back(std::move(v));
        }
    Frame<K> fr = span_frame(std::move(cols), M->algebra()->length());
    // An ideal is action-stable by construction; saturation is a cross-check.
    Frame<K> sat = saturate_span(R, [&] {
        std::vector<SparseVec<K>> rows;
        for (std::uint32_t i = 0; i < fr.dim(); ++i) rows.push_back(fr.basis.row(i));
        return rows;
    }());
    internal_check(sat.dim() == fr.dim(), "trace ideal failed to be action-stable");
    return submodule_from_frame(R, fr);
}

/// Over a local ring, M has a free direct summand iff its trace ideal is all
/// of R.
template <class K>
bool has_free_summand(const ModulePtr<K>& M) {
    return trace_ideal(M)->dim() == M->algebra()->length();
}

// ---------------------------------------------------------------------------
// Dual towers
// ---------------------------------------------------------------------------

struct TowerResult {
    std::vector<std::uint64_t> lengths;  // l(M), l(M*), ..., as far as computed
    std::vector<Rat> ratios;             // lengths[i] / type^i, exact
    std::uint32_t requested_depth = 0;
    bool truncated = false;              // budget stopped the tower early
    std::string ratio_trend;             // "constant" | "nonincreasing" | "nondecreasing" | "mixed"
};

template <class K>
TowerResult dual_tower(const ModulePtr<K>& M, std::uint32_t depth, std::uint64_t budget) {
    TowerResult r;
    r.requested_depth = depth;
    r.lengths.push_back(M->dim());
    ModulePtr<K> cur = M;
    for (std::uint32_t i = 1; i <= depth; ++i) {
        if (cur->dim() > budget) {
            r.truncated = true;
            break;
        }
        cur = dual(cur).mod;
        r.lengths.push_back(cur->dim());
    }
    const Rat type(static_cast<long>(M->algebra()->type()));
    for (std::size_t i = 0; i < r.lengths.size(); ++i)
        r.ratios.push_back(Rat::from_u64(r.lengths[i]) / Rat::pow(type, static_cast<unsigned long>(i)));
    bool up = false, down = false;
    for (std::size_t i = 1; i < r.ratios.size(); ++i) {
        int s = (r.ratios[i] - r.ratios[i - 1]).sign();
        if (s > 0) up = true;
        if (s < 0) down = true;
    }
    r.ratio_trend = (!up && !down) ? "constant" : (up && down) ? "mixed" : up ? "nondecreasing" : "nonincreasing";
    return r;
}

}  // namespace reflexa

#endif
