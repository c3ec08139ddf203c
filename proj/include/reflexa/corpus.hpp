#ifndef REFLEXA_CORPUS_HPP
#define REFLEXA_CORPUS_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "reflexa/random_modules.hpp"
#include "reflexa/report.hpp"

namespace reflexa {

constexpr std::uint64_t kDefaultSeed = 2026;
constexpr std::uint64_t kDefaultBudget = 10000;

/// One machine-comparable expectation: a path into the entry's observed
/// report and the exact value it must equal. `source` records where the
/// value comes from: "published" (asserted by the source being verified),
/// "trivial" (axiomatic), or "derived" (computed by an independent oracle).
struct CorpusCheck {
    std::string path;
    Json expected;
    std::string source;
};

struct ModuleJob {
    std::string label;
    ModuleSpec spec;
    std::uint32_t resolve_steps = 0;  // 0 = skip resolution section
    std::uint32_t tower_depth = 0;    // 0 = skip tower section
    bool betti_bounds = false;
    bool ext_closed_form = false;
};

struct CorpusEntry {
    std::string id;
    std::string claim;
    RingSpec ring;
    std::vector<ModuleJob> modules;
    std::vector<CorpusCheck> checks;
    std::uint32_t bound = 6;
};

// ---------------------------------------------------------------------------
// Ring specs by corpus id
// ---------------------------------------------------------------------------

inline std::vector<std::string> power_ideal_strings(const std::vector<std::string>& vars,
                                                    std::uint32_t n) {
    // all monomials of total degree n, in deterministic odometer order
    std::vector<std::string> out;
    std::vector<std::uint32_t> e(vars.size(), 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == vars.size()) {
            e[i] = left;
            std::string s;
            for (std::size_t a = 0; a < vars.size(); ++a) {
                if (!e[a]) continue;
                if (!s.empty()) s += "*";
                s += vars[a];
                if (e[a] > 1) s += "^" + std::to_string(e[a]);
            }
            out.push_back(s);
            return;
        }
        for (std::uint32_t d = 0; d <= left; ++d) {
            e[i] = d;
            rec(i + 1, left - d);
        }
    };
    rec(0, n);
    return out;
}

inline RingSpec corpus_ring_spec(const std::string& id) {
    RingSpec s;
    if (id == "lam") {
        s.vars = {"x", "y"};
        s.ideal = {"x^2", "x*y", "y^2"};
    } else if (id == "ex56") {
        s.vars = {"x", "y"};
        s.ideal = {"x^2", "x*y", "y^3"};
    } else if (id == "ex57") {
        s.vars = {"x", "y"};
        s.ideal = {"x^2", "x*y", "y^2"};
    } else if (id == "gor415") {
        s.vars = {"x", "y", "z"};
        s.ideal = {"x^2-y^2", "y^2-z^2", "x*y", "y*z", "z*x"};
    } else if (id.rfind("kxn:", 0) == 0) {
        std::uint32_t n = static_cast<std::uint32_t>(std::stoul(id.substr(4)));
        if (n < 1) throw InputError("kxn:{n} needs n >= 1");
        s.vars = {"x"};
        s.ideal = {"x^" + std::to_string(n)};
    } else if (id.rfind("power:", 0) == 0) {
        auto comma = id.find(',');
        if (comma == std::string::npos) throw InputError("power:{m},{n} malformed: " + id);
        std::uint32_t m = static_cast<std::uint32_t>(std::stoul(id.substr(6, comma - 6)));
        std::uint32_t n = static_cast<std::uint32_t>(std::stoul(id.substr(comma + 1)));
        if (m < 1 || n < 1) throw InputError("power:{m},{n} needs m,n >= 1");
        static const std::vector<std::string> short_names{"x", "y", "z"};
        for (std::uint32_t i = 0; i < m; ++i)
            s.vars.push_back(m <= 3 ? short_names[i] : "x" + std::to_string(i + 1));
        s.ideal = power_ideal_strings(s.vars, n);
    } else {
        throw InputError("unknown corpus ring id: " + id);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Entry runner
// ---------------------------------------------------------------------------

inline const Json* json_at_path(const Json& root, const std::string& path) {
    const Json* cur = &root;
    std::stringstream ss(path);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (cur->is_array()) {
            try {
                std::size_t idx = std::stoul(tok);
                if (idx >= cur->size()) return nullptr;
                cur = &(*cur)[idx];
                continue;
            } catch (...) {
                return nullptr;
            }
        }
        if (!cur->is_object() || !cur->contains(tok)) return nullptr;
        cur = &(*cur)[tok];
    }
    return cur;
}

struct EntryOutcome {
    std::string id;
    bool pass = true;
    std::string error;  // nonempty if the entry threw
    Json report;
};

inline EntryOutcome run_corpus_entry(const CorpusEntry& entry, std::uint64_t budget) {
    EntryOutcome out;
    out.id = entry.id;
    Json rep;
    rep["id"] = entry.id;
    rep["claim"] = entry.claim;
    rep["input"] = entry.ring.to_json();
    rep["input_hash"] = spec_hash(entry.ring.to_json());
    rep["bound"] = entry.bound;
    rep["budget"] = budget;
    try {
        auto A = build_algebra<Rat>(entry.ring);
        Json ring = algebra_json(A);
        ring["classify"] = ring_report_json(classify_ring(A, entry.bound));
        rep["ring"] = ring;
        Json modules = Json::object();
        Json towers = Json::object();
        Json resolutions = Json::object();
        Json bounds = Json::object();
        Json closed = Json::object();
        for (const auto& job : entry.modules) {
            auto M = build_module(A, job.spec, budget);
            Json mj = class_report_json(classify(M, entry.bound, budget));
            mj["input"] = job.spec.to_json();
            mj["input_hash"] = spec_hash(job.spec.to_json());
            modules[job.label] = mj;
            if (job.tower_depth) towers[job.label] = tower_json(dual_tower(M, job.tower_depth, budget));
            if (job.resolve_steps)
                resolutions[job.label] = resolution_json(min_resolution(M, job.resolve_steps, budget), A);
            if (job.betti_bounds)
                bounds[job.label] = betti_bounds_json(
                    betti_bound_checks(M, std::max(job.resolve_steps, 4u), budget));
            if (job.ext_closed_form)
                closed[job.label] = ext_closed_form_json(
                    ext_closed_form_comparison(M, std::max(entry.bound, 6u), budget));
        }
        rep["modules"] = modules;
        if (!towers.empty()) rep["towers"] = towers;
        if (!resolutions.empty()) rep["resolutions"] = resolutions;
        if (!bounds.empty()) rep["betti_bounds"] = bounds;
        if (!closed.empty()) rep["ext_closed_form"] = closed;

        Json checks = Json::array();
        for (const auto& c : entry.checks) {
            const Json* got = json_at_path(rep, c.path);
            Json cj;
            cj["path"] = c.path;
            cj["source"] = c.source;
            cj["expected"] = c.expected;
            cj["got"] = got ? *got : Json();
            bool ok = got && *got == c.expected;
            cj["pass"] = ok;
            out.pass = out.pass && ok;
            checks.push_back(cj);
        }
        rep["checks"] = checks;
    } catch (const std::exception& e) {
        out.pass = false;
        out.error = e.what();
        rep["error"] = e.what();
    }
    rep["pass"] = out.pass;
    out.report = std::move(rep);
    return out;
}

// ---------------------------------------------------------------------------
// The built-in corpus
// ---------------------------------------------------------------------------

inline std::vector<CorpusEntry> corpus_entries() {
    std::vector<CorpusEntry> es;
    auto chk = [](std::string path, Json expected, std::string source) {
        return CorpusCheck{std::move(path), std::move(expected), std::move(source)};
    };

    {
        CorpusEntry e;
        e.id = "lam";
        e.claim =
            "over Q[x,y]/(x,y)^2 the maximal ideal has dual lengths 4 and 8, k is "
            "torsion-less but not reflexive with nonvanishing Ext in degrees 2..6, "
            "beta_i(k) = 2^i, and the ring certifies strict Betti growth";
        e.ring = corpus_ring_spec("lam");
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 6, false, false});
        e.modules.push_back({"k", ModuleSpec::named("k"), 8, 0, true, true});
        e.checks = {
            chk("ring.length", 3, "trivial"),
            chk("ring.type", 2, "published"),
            chk("ring.mu_m", 2, "trivial"),
            chk("ring.gorenstein", false, "published"),
            chk("ring.classify.bnsi.status", "certified_true", "published"),
            chk("ring.classify.bnsi.rule", "m2=0", "published"),
            chk("ring.classify.omega_torsionless", false, "published"),
            chk("modules.m.length", 2, "trivial"),
            chk("modules.m.dual_length", 4, "published"),
            chk("modules.m.bidual_length", 8, "published"),
            chk("modules.m.weakly_reflexive.status", "certified_false", "published"),
            chk("modules.m.reflexive.status", "certified_false", "published"),
            chk("modules.k.torsionless.status", "certified_true", "published"),
            chk("modules.k.reflexive.status", "certified_false", "published"),
            chk("modules.k.weakly_gorenstein.status", "certified_false", "published"),
            chk("modules.k.ext_m", Json::array({2, 3, 6, 12, 24, 48, 96}), "derived"),
            chk("resolutions.k.betti", Json::array({1, 2, 4, 8, 16, 32, 64, 128, 256}), "derived"),
            chk("betti_bounds.k.socle_mod_m2", 2, "derived"),
            chk("betti_bounds.k.all_pass", true, "published"),
            chk("ext_closed_form.k.all_match", true, "derived"),
            chk("towers.m.lengths", Json::array({2, 4, 8, 16, 32, 64, 128}), "derived"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "ex56";
        e.claim =
            "over Q[x,y]/(x^2,xy,y^3): length 4, socle (x,y^2), type 2, l(m) = 3, the "
            "ring certifies strict Betti growth via the m^3 = 0 rule, and the dual "
            "tower of m has lengths 2^(n+1)+1 with ratios 2 + 2^-n";
        e.ring = corpus_ring_spec("ex56");
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 10, false, false});
        e.modules.push_back({"q", ModuleSpec::presentation_of({{"x", "y^2"}}), 0, 0, false, false});
        e.checks = {
            chk("ring.length", 4, "published"),
            chk("ring.type", 2, "published"),
            chk("ring.socle", Json::array({"x", "y^2"}), "published"),
            chk("ring.mu_m", 2, "published"),
            chk("ring.loewy", 3, "published"),
            chk("ring.gorenstein", false, "published"),
            chk("ring.classify.bnsi.status", "certified_true", "published"),
            chk("ring.classify.bnsi.rule", "m3=0&m2!=socle", "published"),
            chk("modules.m.length", 3, "published"),
            chk("modules.m.mu", 2, "published"),
            chk("modules.m.reflexive.status", "certified_false", "published"),
            chk("modules.q.dual_length", 3, "published"),
            chk("towers.m.lengths",
                Json::array({3, 5, 9, 17, 33, 65, 129, 257, 513, 1025, 2049}), "published"),
            chk("towers.m.ratios",
                Json::array({"3", "5/2", "9/4", "17/8", "33/16", "65/32", "129/64", "257/128",
                             "513/256", "1025/512", "2049/1024"}),
                "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "ex57";
        e.claim = "over Q[x,y]/(x^2,xy,y^2) the dual tower of m has lengths exactly 2^(n+1)";
        e.ring = corpus_ring_spec("ex57");
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 10, false, false});
        e.checks = {
            chk("ring.length", 3, "published"),
            chk("ring.type", 2, "published"),
            chk("towers.m.lengths",
                Json::array({2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048}), "published"),
            chk("towers.m.ratios",
                Json::array({"2", "2", "2", "2", "2", "2", "2", "2", "2", "2", "2"}), "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "gor415";
        e.claim =
            "Q[x,y,z]/(x^2-y^2,y^2-z^2,xy,yz,zx) is Gorenstein of length 5 with mu(m) = 3 "
            "and m^3 = 0; k is totally reflexive but not free";
        e.ring = corpus_ring_spec("gor415");
        e.modules.push_back({"k", ModuleSpec::named("k"), 6, 0, true, false});
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 0, false, false});
        e.checks = {
            chk("ring.length", 5, "published"),
            chk("ring.type", 1, "published"),
            chk("ring.gorenstein", true, "published"),
            chk("ring.mu_m", 3, "published"),
            chk("ring.loewy", 3, "published"),
            chk("ring.classify.omega_torsionless", true, "published"),
            chk("modules.k.totally_reflexive.status", "certified_true", "published"),
            chk("modules.k.free.status", "certified_false", "published"),
            chk("modules.k.reflexive.status", "certified_true", "published"),
            chk("modules.m.reflexive.status", "certified_true", "published"),
            chk("betti_bounds.k.fact_constant", 2, "published"),
            chk("betti_bounds.k.all_pass", true, "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "kxn:3";
        e.claim =
            "Q[x]/(x^3) is Gorenstein, not of strict Betti growth (witness R/(x)), and "
            "k has constant Betti numbers with differentials alternating x and x^2";
        e.ring = corpus_ring_spec("kxn:3");
        e.modules.push_back({"k", ModuleSpec::named("k"), 6, 0, false, false});
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 0, false, false});
        e.checks = {
            chk("ring.length", 3, "published"),
            chk("ring.type", 1, "published"),
            chk("ring.gorenstein", true, "published"),
            chk("ring.classify.bnsi.status", "certified_false", "published"),
            chk("ring.classify.bnsi.rule", "principal-max-ideal", "published"),
            chk("modules.k.reflexive.status", "certified_true", "published"),
            chk("modules.k.totally_reflexive.status", "certified_true", "published"),
            chk("modules.k.ext_m", Json::array({1, 0, 0, 0, 0, 0, 0}), "trivial"),
            chk("modules.m.reflexive.status", "certified_true", "published"),
            chk("resolutions.k.betti", Json::array({1, 1, 1, 1, 1, 1, 1}), "published"),
            chk("resolutions.k.differentials.0", Json::array({Json::array({"x"})}), "published"),
            chk("resolutions.k.differentials.1", Json::array({Json::array({"x^2"})}), "published"),
            chk("resolutions.k.differentials.2", Json::array({Json::array({"x"})}), "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "kxn:4";
        e.claim = "over Q[x]/(x^4) every sampled module is reflexive";
        e.ring = corpus_ring_spec("kxn:4");
        e.modules.push_back({"k", ModuleSpec::named("k"), 0, 0, false, false});
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 0, false, false});
        e.modules.push_back({"i2", ModuleSpec::ideal_of({"x^2"}), 0, 0, false, false});
        e.modules.push_back({"q2", ModuleSpec::presentation_of({{"x^2"}}), 0, 0, false, false});
        e.checks = {
            chk("ring.gorenstein", true, "published"),
            chk("modules.k.reflexive.status", "certified_true", "published"),
            chk("modules.m.reflexive.status", "certified_true", "published"),
            chk("modules.i2.reflexive.status", "certified_true", "published"),
            chk("modules.q2.reflexive.status", "certified_true", "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "kxn:5";
        e.claim = "Q[x]/(x^5) is Gorenstein but fails strict Betti growth";
        e.ring = corpus_ring_spec("kxn:5");
        e.modules.push_back({"k", ModuleSpec::named("k"), 0, 0, false, false});
        e.checks = {
            chk("ring.gorenstein", true, "published"),
            chk("ring.classify.bnsi.status", "certified_false", "published"),
            chk("modules.k.reflexive.status", "certified_true", "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "power:2,3";
        e.claim =
            "Q[x,y]/(x,y)^3 certifies strict Betti growth by the power-ideal rule "
            "(its m^2 equals the socle, so the m^3 = 0 rule does not apply)";
        e.ring = corpus_ring_spec("power:2,3");
        e.bound = 3;
        e.modules.push_back({"k", ModuleSpec::named("k"), 0, 0, false, false});
        e.checks = {
            chk("ring.length", 6, "trivial"),
            chk("ring.type", 3, "derived"),
            chk("ring.mu_m", 2, "trivial"),
            chk("ring.socle", Json::array({"x*y", "x^2", "y^2"}), "derived"),
            chk("ring.classify.bnsi.status", "certified_true", "published"),
            chk("ring.classify.bnsi.rule", "power-ideal", "published"),
            chk("modules.k.reflexive.status", "certified_false", "published"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "power:3,2";
        e.claim =
            "Q[x,y,z]/(x,y,z)^2 has square-zero maximal ideal of spread 3; the dual "
            "of m has length l(m) * mu(m) = 9";
        e.ring = corpus_ring_spec("power:3,2");
        e.bound = 3;
        e.modules.push_back({"m", ModuleSpec::named("m"), 0, 2, false, false});
        e.modules.push_back({"k", ModuleSpec::named("k"), 0, 0, false, true});
        e.checks = {
            chk("ring.length", 4, "trivial"),
            chk("ring.type", 3, "derived"),
            chk("ring.mu_m", 3, "trivial"),
            chk("ring.classify.bnsi.status", "certified_true", "published"),
            chk("ring.classify.bnsi.rule", "m2=0", "published"),
            chk("modules.m.dual_length", 9, "derived"),
            chk("modules.k.reflexive.status", "certified_false", "published"),
            chk("ext_closed_form.k.all_match", true, "derived"),
        };
        es.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "power:3,3";
        e.claim = "Q[x,y,z]/(x,y,z)^3 certifies strict Betti growth by the power-ideal rule";
        e.ring = corpus_ring_spec("power:3,3");
        e.modules.push_back({"k", ModuleSpec::named("k"), 0, 0, false, false});
        e.bound = 2;  // Betti numbers grow quickly here
        e.checks = {
            chk("ring.length", 10, "trivial"),
            chk("ring.type", 6, "derived"),
            chk("ring.mu_m", 3, "trivial"),
            chk("ring.classify.bnsi.status", "certified_true", "published"),
            chk("ring.classify.bnsi.rule", "power-ideal", "published"),
            chk("modules.k.reflexive.status", "certified_false", "published"),
        };
        es.push_back(std::move(e));
    }
    return es;
}

// ---------------------------------------------------------------------------
// Randomized property entries
// ---------------------------------------------------------------------------

struct PropertyResult {
    bool pass = true;
    Json detail;
};

struct PropertyEntry {
    std::string id;
    std::string claim;
    std::function<PropertyResult(std::uint64_t seed, std::uint64_t budget)> run;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& salt) {
    return seed ^ std::stoull(fnv1a_hex(salt).substr(0, 15), nullptr, 16);
}

}  // namespace detail

inline std::vector<PropertyEntry> property_entries() {
    std::vector<PropertyEntry> ps;

    ps.push_back(
        {"prop:gor-random-reflexive",
         "every randomized module over the length-5 Gorenstein ring is reflexive",
         [](std::uint64_t seed, std::uint64_t budget) {
             PropertyResult r;
             auto A = build_algebra<Rat>(corpus_ring_spec("gor415"));
             Rng rng(detail::mix_seed(seed, "gor-random-reflexive"));
             int n = 50;
             for (int i = 0; i < n; ++i) {
                 auto M = random_module(A, rng);
                 if (!reflexivity_flags(M).reflexive) {
                     r.pass = false;
                     r.detail["counterexample_index"] = i;
                     break;
                 }
             }
             r.detail["modules_checked"] = n;
             r.detail["budget"] = budget;
             return r;
         }});

    ps.push_back(
        {"prop:menzin",
         "over square-zero-maximal-ideal rings, summand-free modules satisfy "
         "l(M*) = l(m) mu(M) and l(M^((n+1)*)) = l(m)^n mu(M*)",
         [](std::uint64_t seed, std::uint64_t budget) {
             PropertyResult r;
             Rng rng(detail::mix_seed(seed, "menzin"));
             int checked = 0;
             for (const char* rid : {"lam", "power:3,2"}) {
                 auto A = build_algebra<Rat>(corpus_ring_spec(rid));
                 const std::uint64_t lm = A->length() - 1;
                 for (int i = 0; i < 60; ++i) {
                     auto M = random_module_no_free_summand(A, rng);
                     auto star = dual(M).mod;
                     const std::uint64_t muM = min_generator_count(M);
                     const std::uint64_t muS = min_generator_count(star);
                     if (star->dim() != lm * muM) {
                         r.pass = false;
                         r.detail["failure"] = std::string(rid) + ": l(M*) != l(m) mu(M)";
                         return r;
                     }
                     ++checked;
                     // cur = M^{(n+1)*} must have length l(m)^n mu(M*).
                     ModulePtr<Rat> cur = star;
                     std::uint64_t expect = muS;
                     for (int n = 0; n <= 2; ++n) {
                         if (cur->dim() > budget) break;
                         if (cur->dim() != expect) {
                             r.pass = false;
                             r.detail["failure"] =
                                 std::string(rid) + ": l(M^(" + std::to_string(n + 1) +
                                 "*)) != l(m)^" + std::to_string(n) + " mu(M*)";
                             return r;
                         }
                         ++checked;
                         cur = dual(cur).mod;
                         expect *= lm;
                     }
                 }
             }
             r.detail["identities_checked"] = checked;
             return r;
         }});

    ps.push_back(
        {"prop:third-dual",
         "the dual of the natural map composed with the natural map of the dual is "
         "the identity on M*, as an exact matrix identity",
         [](std::uint64_t seed, std::uint64_t budget) {
             PropertyResult r;
             Rng rng(detail::mix_seed(seed, "third-dual"));
             int checked = 0;
             for (const char* rid : {"lam", "ex56", "ex57", "gor415", "kxn:3", "kxn:4", "kxn:5",
                                     "power:2,3", "power:3,2"}) {
                 auto A = build_algebra<Rat>(corpus_ring_spec(rid));
                 for (int i = 0; i < 25; ++i) {
                     auto M = random_module(A, rng);
                     HomModule<Rat> star = dual(M);
                     if (std::uint64_t(star.mod->dim()) * A->length() > budget * 4) continue;
                     HomModule<Rat> bistar = dual(star.mod);
                     HomModule<Rat> tristar = dual(bistar.mod);
                     ModuleMap<Rat> phi = natural_map(M, star, bistar);
                     ModuleMap<Rat> phi_star = dual_map(phi, tristar, star);
                     ModuleMap<Rat> phi_of_star = natural_map(star.mod, bistar, tristar);
                     SparseMat<Rat> comp = phi_star.matrix * phi_of_star.matrix;
                     if (!(comp == SparseMat<Rat>::identity(star.mod->dim()))) {
                         r.pass = false;
                         r.detail["failure"] = std::string(rid) + " at sample " + std::to_string(i);
                         return r;
                     }
                     ++checked;
                 }
             }
             r.detail["modules_checked"] = checked;
             r.pass = r.pass && checked >= 200;
             return r;
         }});

    for (const char* rid : {"lam", "ex56", "ex57", "gor415", "kxn:3", "kxn:4", "kxn:5", "power:2,3",
                            "power:3,2", "power:3,3"}) {
        ps.push_back(
            {std::string("prop:classifier-consistency:") + rid,
             std::string("rule-based and computation-based verdicts agree on 200 randomized "
                         "modules over ") +
                 rid,
             [rid](std::uint64_t seed, std::uint64_t budget) {
                 PropertyResult r;
                 Rng rng(detail::mix_seed(seed, std::string("classifier-consistency:") + rid));
                 auto A = build_algebra<Rat>(corpus_ring_spec(rid));
                 const bool m2zero_spread = A->m_power_dim(2) == 0 && A->mu_m() > 1;
                 // Large rings get cyclic samples so the dual's resolution stays
                 // within reach; the shortcut checks are identical either way.
                 const std::uint32_t rows = A->length() >= 8 ? 1 : 2;
                 int checked = 0;
                 for (int i = 0; i < 200; ++i) {
                     auto M = random_module(A, rng, rows, 4);
                     // classify aborts with a diagnostic on any shortcut/direct
                     // disagreement; reaching the report is the property.
                     auto rep = classify(M, 2, budget);
                     if (m2zero_spread && rep.free.is_false()) {
                         bool refl_false = rep.reflexive.is_false();
                         bool ext2 = rep.ext_m.size() > 2 && rep.ext_m[2] != 0;
                         if (!refl_false || !ext2) {
                             r.pass = false;
                             r.detail["failure"] = std::string(rid) + " sample " + std::to_string(i);
                             return r;
                         }
                     }
                     ++checked;
                 }
                 r.detail["modules_checked"] = checked;
                 return r;
             }});
    }

    ps.push_back(
        {"prop:dual-stages-not-reflexive",
         "over the square-zero ring of spread 2, no dual-tower stage of a nonfree "
         "module is reflexive",
         [](std::uint64_t seed, std::uint64_t budget) {
             PropertyResult r;
             auto A = build_algebra<Rat>(corpus_ring_spec("lam"));
             Rng rng(detail::mix_seed(seed, "dual-stages"));
             int checked = 0;
             std::vector<ModulePtr<Rat>> samples{residue_field(A), max_ideal(A)};
             for (int i = 0; i < 18; ++i) {
                 auto M = random_module(A, rng);
                 if (M->dim() > 0 && !is_free(M)) samples.push_back(M);
             }
             for (const auto& M0 : samples) {
                 ModulePtr<Rat> cur = M0;
                 for (int stage = 0; stage <= 3; ++stage) {
                     if (cur->dim() > budget) break;
                     if (reflexivity_flags(cur).reflexive) {
                         r.pass = false;
                         r.detail["failure"] = "stage " + std::to_string(stage);
                         return r;
                     }
                     ++checked;
                     cur = dual(cur).mod;
                 }
             }
             r.detail["stages_checked"] = checked;
             return r;
         }});

    return ps;
}

// ---------------------------------------------------------------------------
// verify runner
// ---------------------------------------------------------------------------

inline bool glob_match(const std::string& pat, const std::string& s) {
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t p, std::size_t i) -> bool {
        while (p < pat.size()) {
            if (pat[p] == '*') {
                for (std::size_t k = i; k <= s.size(); ++k)
                    if (rec(p + 1, k)) return true;
                return false;
            }
            if (i == s.size()) return false;
            if (pat[p] != '?' && pat[p] != s[i]) return false;
            ++p, ++i;
        }
        return i == s.size();
    };
    return rec(0, 0);
}

struct VerifyOptions {
    std::string filter = "*";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;  // 0 = automatic
};

struct VerifySummary {
    std::vector<EntryOutcome> outcomes;  // sorted by id
    bool all_pass = true;
    Json report;
};

inline VerifySummary verify_paper(const VerifyOptions& opt) {
    struct Task {
        std::string id;
        std::function<EntryOutcome()> run;
    };
    std::vector<Task> tasks;
    for (const auto& e : corpus_entries())
        if (glob_match(opt.filter, e.id))
            tasks.push_back({e.id, [e, &opt] { return run_corpus_entry(e, opt.budget); }});
    for (const auto& p : property_entries())
        if (glob_match(opt.filter, p.id))
            tasks.push_back({p.id, [p, &opt] {
                                 EntryOutcome o;
                                 o.id = p.id;
                                 Json rep;
                                 rep["id"] = p.id;
                                 rep["claim"] = p.claim;
                                 rep["seed"] = opt.seed;
                                 rep["budget"] = opt.budget;
                                 try {
                                     PropertyResult pr = p.run(opt.seed, opt.budget);
                                     o.pass = pr.pass;
                                     rep["detail"] = pr.detail;
                                 } catch (const std::exception& ex) {
                                     o.pass = false;
                                     o.error = ex.what();
                                     rep["error"] = ex.what();
                                 }
                                 rep["pass"] = o.pass;
                                 o.report = std::move(rep);
                                 return o;
                             }});

    std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) { return a.id < b.id; });

    unsigned nthreads = opt.threads;
    if (nthreads == 0) {
        if (const char* env = std::getenv("REFLEXA_THREADS")) nthreads = std::atoi(env);
        if (nthreads == 0) nthreads = std::max(1u, std::thread::hardware_concurrency());
    }
    nthreads = std::min<unsigned>(nthreads, tasks.empty() ? 1 : static_cast<unsigned>(tasks.size()));

    std::vector<EntryOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            outcomes[i] = tasks[i].run();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerifySummary sum;
    sum.outcomes = std::move(outcomes);
    Json entries = Json::array();
    for (const auto& o : sum.outcomes) {
        sum.all_pass = sum.all_pass && o.pass;
        entries.push_back(o.report);
    }
    sum.report["filter"] = opt.filter;
    sum.report["budget"] = opt.budget;
    sum.report["seed"] = opt.seed;
    sum.report["entries"] = entries;
    sum.report["pass"] = sum.all_pass;
    return sum;
}

}  // namespace reflexa

#endif
