#ifndef REFLEXA_CLASSIFY_HPP
#define REFLEXA_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reflexa/resolution.hpp"
#include "reflexa/verdict.hpp"

namespace reflexa {

/// Per-module classification. Rule priority is fixed: direct length/rank
/// facts, then the type-1 shortcut, then the strict-Betti-growth shortcut,
/// then the bounded Ext scan. Whenever a shortcut and a direct computation
/// both apply they must agree; any disagreement aborts with a diagnostic
/// rather than picking a side.
template <class K>
struct ClassReport {
    Verdict free, torsionless, weakly_reflexive, reflexive;
    Verdict totally_reflexive, weakly_gorenstein, skew_gorenstein;

    std::uint32_t bound = 0;  // requested Ext scan bound
    ReflexivityFlags flags;
    std::vector<std::uint64_t> ext_m;      // l(Ext^i(M,R)), i = 0..
    std::vector<std::uint64_t> ext_mstar;  // l(Ext^i(M*,R)), i = 0..
    std::uint64_t length = 0, mu = 0;
    bool scans_truncated = false;

    /// Logical closure between the predicates; violations are internal bugs.
    void validate_closure() const {
        auto implies = [](const Verdict& p, const Verdict& q) {
            return !p.is_true() || q.is_true();
        };
        internal_check(implies(reflexive, torsionless), "closure: reflexive => torsionless");
        internal_check(implies(reflexive, weakly_reflexive), "closure: reflexive => weakly reflexive");
        internal_check(implies(totally_reflexive, reflexive), "closure: totally reflexive => reflexive");
        internal_check(implies(totally_reflexive, weakly_gorenstein),
                       "closure: totally reflexive => weakly Gorenstein");
        internal_check(implies(totally_reflexive, skew_gorenstein),
                       "closure: totally reflexive => skew Gorenstein");
        if (free.is_true())
            for (const Verdict* v : {&torsionless, &weakly_reflexive, &reflexive,
                                     &totally_reflexive, &weakly_gorenstein, &skew_gorenstein})
                internal_check(v->is_true(), "closure: free => everything");
    }
};

namespace detail {

/// First index in [1, computed] with a nonzero length; 0 if none.
inline std::uint32_t first_nonzero_tail(const std::vector<std::uint64_t>& lengths) {
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (lengths[i] != 0) return static_cast<std::uint32_t>(i);
    return 0;
}

}  // namespace detail

template <class K>
ClassReport<K> classify(const ModulePtr<K>& M, std::uint32_t B, std::uint64_t dim_budget = 1000000) {
    if (B < 2) throw InputError("classification bound must be at least 2");
    const auto& A = M->algebra();
    ClassReport<K> rep;
    rep.bound = B;
    rep.length = M->dim();
    rep.mu = min_generator_count(M);

    // Rule 1: direct facts. Freeness by length count, the three phi-rank
    // predicates from the explicitly constructed natural map.
    const bool free = is_free(M);
    rep.free = free ? Verdict::certified_true("length-count",
                                              "l(M) = mu(M) * l(R) = " + std::to_string(rep.length))
                    : Verdict::certified_false("length-count",
                                               "l(M) = " + std::to_string(rep.length) + ", mu(M)*l(R) = " +
                                                   std::to_string(rep.mu * A->length()));
    DualTriple<K> tri = dual_triple(M);
    rep.flags = reflexivity_flags_of(M, tri);
    auto phi_witness = "rank(phi) = " + std::to_string(rep.flags.phi_rank) + ", l(M) = " +
                       std::to_string(rep.length) + ", l(M**) = " + std::to_string(rep.flags.bidual_len);
    rep.torsionless = rep.flags.torsionless ? Verdict::certified_true("phi-rank", phi_witness)
                                            : Verdict::certified_false("phi-rank", phi_witness);
    rep.weakly_reflexive = rep.flags.weakly_reflexive
                               ? Verdict::certified_true("phi-rank", phi_witness)
                               : Verdict::certified_false("phi-rank", phi_witness);
    rep.reflexive = rep.flags.reflexive ? Verdict::certified_true("phi-rank", phi_witness)
                                        : Verdict::certified_false("phi-rank", phi_witness);

    // Rule 4 evidence (always computed so shortcuts can be cross-checked).
    ExtLengths<K> extM = ext_lengths(M, B, dim_budget);
    ExtLengths<K> extS = ext_lengths(tri.star.mod, B, dim_budget);
    rep.ext_m = extM.lengths;
    rep.ext_mstar = extS.lengths;
    rep.scans_truncated = extM.truncated || extS.truncated;
    const std::uint32_t m_nz = detail::first_nonzero_tail(extM.lengths);
    const std::uint32_t s_nz = detail::first_nonzero_tail(extS.lengths);
    const bool mstar_free = is_free(tri.star.mod);

    const bool gorenstein = A->gorenstein();
    const Verdict bnsi = A->bnsi_certificate();
    const bool bnsi_applies = bnsi.is_true() && !free;

    // Shortcut/direct agreement. These aborts are the verification feature:
    // a certified structural rule contradicting an exact computation means a
    // bug somewhere, never an output.
    if (gorenstein) {
        internal_check(rep.flags.reflexive,
                       "type-1 algebra produced a non-reflexive module (phi rank defect)");
        internal_check(m_nz == 0 && s_nz == 0,
                       "type-1 algebra produced a nonzero Ext length in the scan");
    }
    if (bnsi_applies) {
        internal_check(!rep.flags.weakly_reflexive,
                       "strict-Betti-growth rule vs direct phi rank disagree: nonfree module "
                       "with surjective phi over a certified ring");
        if (extM.lengths.size() > 2)
            internal_check(extM.lengths[2] != 0,
                           "strict-Betti-growth rule vs Ext scan disagree at i = 2");
        internal_check(!mstar_free, "dual of a nonfree module is free over a certified ring");
        if (extS.lengths.size() > 2)
            internal_check(extS.lengths[2] != 0,
                           "strict-Betti-growth rule vs dual Ext scan disagree at i = 2");
    }
    if (free) {
        internal_check(rep.flags.reflexive, "free module with non-bijective phi");
        internal_check(m_nz == 0 && s_nz == 0, "free module with nonvanishing Ext");
    }

    const std::uint32_t m_ach = extM.lengths.empty() ? 0 : extM.achieved;
    const std::uint32_t s_ach = extS.lengths.empty() ? 0 : extS.achieved;

    // weakly Gorenstein: Ext^i(M,R) = 0 for all i > 0.
    if (free) {
        rep.weakly_gorenstein = Verdict::certified_true("free", "free modules have vanishing Ext");
    } else if (gorenstein) {
        rep.weakly_gorenstein = Verdict::certified_true("gorenstein-type-1", "type(R) = 1");
    } else if (bnsi_applies && extM.lengths.size() > 2) {
        rep.weakly_gorenstein = Verdict::certified_false(
            "bnsi-nonfree", "rule " + bnsi.rule + "; l(Ext^2(M,R)) = " + std::to_string(extM.lengths[2]));
    } else if (m_nz != 0) {
        rep.weakly_gorenstein = Verdict::certified_false(
            "ext-scan", "l(Ext^" + std::to_string(m_nz) + "(M,R)) = " + std::to_string(extM.lengths[m_nz]));
    } else {
        rep.weakly_gorenstein = Verdict::unknown_up_to(m_ach);
    }

    // skew Gorenstein: Ext^i(M*,R) = 0 for all i > 0.
    if (free) {
        rep.skew_gorenstein = Verdict::certified_true("free", "duals of free modules are free");
    } else if (gorenstein) {
        rep.skew_gorenstein = Verdict::certified_true("gorenstein-type-1", "type(R) = 1");
    } else if (bnsi_applies && extS.lengths.size() > 2) {
        rep.skew_gorenstein = Verdict::certified_false(
            "bnsi-dual-nonfree", "rule " + bnsi.rule + "; M* nonfree, l(Ext^2(M*,R)) = " +
                                     std::to_string(extS.lengths[2]));
    } else if (s_nz != 0) {
        rep.skew_gorenstein = Verdict::certified_false(
            "ext-scan", "l(Ext^" + std::to_string(s_nz) + "(M*,R)) = " + std::to_string(extS.lengths[s_nz]));
    } else {
        rep.skew_gorenstein = Verdict::unknown_up_to(s_ach);
    }

    // totally reflexive: reflexive with both Ext conditions.
    if (free) {
        rep.totally_reflexive = Verdict::certified_true("free", "free modules are totally reflexive");
    } else if (gorenstein) {
        rep.totally_reflexive = Verdict::certified_true("gorenstein-type-1", "type(R) = 1");
    } else if (!rep.flags.reflexive) {
        rep.totally_reflexive = Verdict::certified_false("phi-rank", phi_witness);
    } else if (rep.weakly_gorenstein.is_false()) {
        rep.totally_reflexive =
            Verdict::certified_false(rep.weakly_gorenstein.rule, rep.weakly_gorenstein.witness);
    } else if (rep.skew_gorenstein.is_false()) {
        rep.totally_reflexive =
            Verdict::certified_false(rep.skew_gorenstein.rule, rep.skew_gorenstein.witness);
    } else if (rep.weakly_gorenstein.is_true() && rep.skew_gorenstein.is_true()) {
        rep.totally_reflexive = Verdict::certified_true("components", "reflexive + both Ext conditions");
    } else {
        rep.totally_reflexive = Verdict::unknown_up_to(std::min(m_ach, s_ach));
    }

    rep.validate_closure();
    return rep;
}

/// Ring-level classification. The torsion-lessness of the canonical module
/// is computed directly from phi and must reproduce the type-1 flag; that
/// equivalence is enforced, not assumed.
template <class K>
struct RingReport {
    bool gorenstein = false;
    Verdict bnsi;
    bool omega_torsionless = false;
};

template <class K>
RingReport<K> classify_ring(const AlgebraPtr<K>& A, std::uint32_t B = 2) {
    if (B < 2) throw InputError("classification bound must be at least 2");
    RingReport<K> rep;
    rep.gorenstein = A->gorenstein();
    rep.bnsi = A->bnsi_certificate();
    auto omega = canonical_module(A);
    rep.omega_torsionless = reflexivity_flags(omega).torsionless;
    internal_check(rep.omega_torsionless == rep.gorenstein,
                   "canonical-module torsion-lessness disagrees with the type-1 test");
    return rep;
}

}  // namespace reflexa

#endif
