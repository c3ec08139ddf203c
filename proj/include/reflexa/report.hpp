#ifndef REFLEXA_REPORT_HPP
#define REFLEXA_REPORT_HPP

#include "reflexa/spec_io.hpp"

namespace reflexa {

// JSON views of the computation results. Key order is fixed by insertion,
// rationals are exact "p/q" strings, and nothing time- or host-dependent is
// ever embedded, so reports are byte-identical across runs and thread
// counts.

inline Json verdict_json(const Verdict& v) {
    Json j;
    j["status"] = v.status == Verdict::Status::CertifiedTrue    ? "certified_true"
                  : v.status == Verdict::Status::CertifiedFalse ? "certified_false"
                                                                : "unknown";
    if (v.status == Verdict::Status::Unknown) j["bound"] = v.bound;
    if (!v.rule.empty()) j["rule"] = v.rule;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

template <class K>
Json algebra_json(const AlgebraPtr<K>& A) {
    Json j;
    j["length"] = A->length();
    j["type"] = A->type();
    j["socle_dim"] = A->type();
    j["mu_m"] = A->mu_m();
    j["loewy"] = A->loewy();
    j["gorenstein"] = A->gorenstein();
    std::vector<std::string> socle;
    for (std::uint32_t i = 0; i < A->socle().dim(); ++i)
        socle.push_back(A->vec_str(A->socle().basis.row(i)));
    std::sort(socle.begin(), socle.end());
    j["socle"] = socle;
    j["m_power_dims"] = A->m_power_dims();
    j["order"] = order_name(A->order());
    std::vector<std::string> gb;
    for (const auto& g : A->gb().gens) gb.push_back(A->poly_str(g));
    j["groebner_basis"] = gb;
    return j;
}

template <class K>
Json ring_report_json(const RingReport<K>& r) {
    Json j;
    j["gorenstein"] = r.gorenstein;
    j["bnsi"] = verdict_json(r.bnsi);
    j["omega_torsionless"] = r.omega_torsionless;
    return j;
}

template <class K>
Json class_report_json(const ClassReport<K>& r) {
    Json j;
    j["bound"] = r.bound;
    j["length"] = r.length;
    j["mu"] = r.mu;
    j["dual_length"] = r.flags.dual_len;
    j["bidual_length"] = r.flags.bidual_len;
    j["phi_rank"] = r.flags.phi_rank;
    j["free"] = verdict_json(r.free);
    j["torsionless"] = verdict_json(r.torsionless);
    j["weakly_reflexive"] = verdict_json(r.weakly_reflexive);
    j["reflexive"] = verdict_json(r.reflexive);
    j["totally_reflexive"] = verdict_json(r.totally_reflexive);
    j["weakly_gorenstein"] = verdict_json(r.weakly_gorenstein);
    j["skew_gorenstein"] = verdict_json(r.skew_gorenstein);
    j["ext_m"] = r.ext_m;
    j["ext_mstar"] = r.ext_mstar;
    j["scans_truncated"] = r.scans_truncated;
    return j;
}

inline Json tower_json(const TowerResult& t) {
    Json j;
    j["lengths"] = t.lengths;
    std::vector<std::string> ratios;
    for (const auto& r : t.ratios) ratios.push_back(r.str());
    j["ratios"] = ratios;
    j["requested_depth"] = t.requested_depth;
    j["truncated"] = t.truncated;
    j["ratio_trend"] = t.ratio_trend;
    return j;
}

template <class K>
Json resolution_json(const Resolution<K>& res, const AlgebraPtr<K>& A) {
    Json j;
    j["betti"] = res.betti;
    j["computed_steps"] = res.computed_steps;
    j["truncated"] = res.truncated;
    Json diffs = Json::array();
    for (const auto& d : res.differentials) {
        Json rows = Json::array();
        for (std::uint32_t r = 0; r < d.rows; ++r) {
            Json row = Json::array();
            for (std::uint32_t c = 0; c < d.cols; ++c) row.push_back(A->poly_str(d.at(r, c)));
            rows.push_back(row);
        }
        diffs.push_back(rows);
    }
    j["differentials"] = diffs;
    return j;
}

inline Json betti_bounds_json(const BettiBoundReport& r) {
    Json j;
    j["socle_mod_m2"] = r.socle_mod_m2;
    j["fact_constant"] = r.fact_constant;
    j["m2_zero"] = r.m2_zero;
    j["vacuous"] = r.vacuous;
    j["all_pass"] = r.all_pass;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["i"] = row.i;
        x["beta_i"] = row.beta_i;
        x["beta_next"] = row.beta_next;
        if (row.a_applicable) {
            x["socle_bound_required"] = row.a_required;
            x["socle_bound_pass"] = row.a_pass;
        }
        if (row.b_applicable) {
            x["loewy_bound_required"] = row.b_required;
            x["loewy_bound_pass"] = row.b_pass;
        }
        rows.push_back(x);
    }
    j["rows"] = rows;
    return j;
}

inline Json ext_closed_form_json(const ExtClosedFormReport& r) {
    Json j;
    j["applicable"] = r.applicable;
    j["all_match"] = r.all_match;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["i"] = row.i;
        x["computed"] = row.computed;
        x["closed_form"] = row.closed_form;
        x["match"] = row.match;
        rows.push_back(x);
    }
    j["rows"] = rows;
    j["note"] = r.note;
    return j;
}

}  // namespace reflexa

#endif
