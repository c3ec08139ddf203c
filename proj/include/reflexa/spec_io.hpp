#ifndef REFLEXA_SPEC_IO_HPP
#define REFLEXA_SPEC_IO_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "reflexa/classify.hpp"

namespace reflexa {

using Json = nlohmann::ordered_json;

/// Wire format for a ring: field, variables in order, ideal generators as
/// polynomial strings, monomial order tag.
struct RingSpec {
    bool rational_field = true;  // "Q" vs {"Fp": p}
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
    std::string order = "grevlex";

    Json to_json() const {
        Json j;
        if (rational_field)
            j["field"] = "Q";
        else
            j["field"] = Json{{"Fp", p}};
        j["vars"] = vars;
        j["ideal"] = ideal;
        j["order"] = order;
        return j;
    }

    static RingSpec from_json(const Json& j) {
        RingSpec s;
        if (!j.is_object()) throw InputError("ring spec must be a JSON object");
        if (!j.contains("field")) throw InputError("ring spec is missing \"field\"");
        const auto& f = j["field"];
        if (f.is_string() && f.get<std::string>() == "Q") {
            s.rational_field = true;
        } else if (f.is_object() && f.contains("Fp")) {
            s.rational_field = false;
            s.p = f["Fp"].get<std::uint32_t>();
            Fp::check_modulus(s.p);
        } else {
            throw InputError("ring spec field must be \"Q\" or {\"Fp\": p}");
        }
        if (!j.contains("vars") || !j["vars"].is_array())
            throw InputError("ring spec needs a \"vars\" array");
        for (const auto& v : j["vars"]) s.vars.push_back(v.get<std::string>());
        if (!j.contains("ideal") || !j["ideal"].is_array())
            throw InputError("ring spec needs an \"ideal\" array of polynomial strings");
        for (const auto& g : j["ideal"]) s.ideal.push_back(g.get<std::string>());
        if (j.contains("order")) s.order = j["order"].get<std::string>();
        order_from_name(s.order);  // validate
        return s;
    }
};

/// Wire format for a module over a ring: a named builder or a presentation.
struct ModuleSpec {
    std::string builder;                          // k | m | R | omega | ideal | presentation | syzygy
    std::vector<std::string> gens;                // ideal
    std::vector<std::vector<std::string>> matrix; // presentation (rows of entries)
    std::uint32_t index = 0;                      // syzygy
    std::shared_ptr<ModuleSpec> base;             // syzygy

    static ModuleSpec named(std::string b) {
        ModuleSpec s;
        s.builder = std::move(b);
        return s;
    }
    static ModuleSpec ideal_of(std::vector<std::string> gens) {
        ModuleSpec s;
        s.builder = "ideal";
        s.gens = std::move(gens);
        return s;
    }
    static ModuleSpec presentation_of(std::vector<std::vector<std::string>> rows) {
        ModuleSpec s;
        s.builder = "presentation";
        s.matrix = std::move(rows);
        return s;
    }
    static ModuleSpec syzygy_of(std::uint32_t i, ModuleSpec base_spec) {
        ModuleSpec s;
        s.builder = "syzygy";
        s.index = i;
        s.base = std::make_shared<ModuleSpec>(std::move(base_spec));
        return s;
    }

    Json to_json() const {
        Json j;
        j["builder"] = builder;
        if (builder == "ideal") j["gens"] = gens;
        if (builder == "presentation") j["matrix"] = matrix;
        if (builder == "syzygy") {
            j["index"] = index;
            j["base"] = base ? base->to_json() : Json();
        }
        return j;
    }

    static ModuleSpec from_json(const Json& j) {
        ModuleSpec s;
        if (j.is_string()) {  // shorthand: "k", "m", "R", "omega"
            s.builder = j.get<std::string>();
        } else if (j.is_object()) {
            if (!j.contains("builder")) throw InputError("module spec is missing \"builder\"");
            s.builder = j["builder"].get<std::string>();
            if (s.builder == "ideal") {
                if (!j.contains("gens")) throw InputError("ideal module spec needs \"gens\"");
                for (const auto& g : j["gens"]) s.gens.push_back(g.get<std::string>());
            } else if (s.builder == "presentation") {
                if (!j.contains("matrix")) throw InputError("presentation module spec needs \"matrix\"");
                for (const auto& row : j["matrix"]) {
                    std::vector<std::string> r;
                    for (const auto& e : row) r.push_back(e.get<std::string>());
                    s.matrix.push_back(std::move(r));
                }
            } else if (s.builder == "syzygy") {
                if (!j.contains("index") || !j.contains("base"))
                    throw InputError("syzygy module spec needs \"index\" and \"base\"");
                s.index = j["index"].get<std::uint32_t>();
                s.base = std::make_shared<ModuleSpec>(from_json(j["base"]));
            }
        } else {
            throw InputError("module spec must be a string or an object");
        }
        static const std::vector<std::string> known{"k", "m", "R", "omega",
                                                    "ideal", "presentation", "syzygy"};
        bool ok = false;
        for (const auto& b : known) ok = ok || b == s.builder;
        if (!ok) throw InputError("unknown module builder: " + s.builder);
        return s;
    }
};

template <class K>
AlgebraPtr<K> build_algebra(const RingSpec& spec);

template <>
inline AlgebraPtr<Rat> build_algebra<Rat>(const RingSpec& spec) {
    if (!spec.rational_field) throw InputError("spec does not describe the rational field");
    FieldCtx<Rat> ctx;
    std::vector<Poly<Rat>> gens;
    for (const auto& g : spec.ideal) gens.push_back(parse_poly<Rat>(g, spec.vars, ctx));
    return Algebra<Rat>::build(gens, spec.vars, order_from_name(spec.order), ctx);
}

template <>
inline AlgebraPtr<Fp> build_algebra<Fp>(const RingSpec& spec) {
    if (spec.rational_field) throw InputError("spec does not describe a prime field");
    FieldCtx<Fp> ctx{spec.p};
    std::vector<Poly<Fp>> gens;
    for (const auto& g : spec.ideal) gens.push_back(parse_poly<Fp>(g, spec.vars, ctx));
    return Algebra<Fp>::build(gens, spec.vars, order_from_name(spec.order), ctx);
}

template <class K>
ModulePtr<K> build_module(const AlgebraPtr<K>& A, const ModuleSpec& spec,
                          std::uint64_t dim_budget = 1000000) {
    if (spec.builder == "k") return residue_field(A);
    if (spec.builder == "m") return max_ideal(A);
    if (spec.builder == "R") return free_module(A, 1);
    if (spec.builder == "omega") return canonical_module(A);
    if (spec.builder == "ideal") {
        std::vector<Poly<K>> gens;
        for (const auto& g : spec.gens) gens.push_back(A->parse(g));
        return ideal_module(A, gens);
    }
    if (spec.builder == "presentation") {
        Presentation<K> p;
        p.algebra = A;
        p.matrix.rows = static_cast<std::uint32_t>(spec.matrix.size());
        p.matrix.cols = spec.matrix.empty() ? 0 : static_cast<std::uint32_t>(spec.matrix[0].size());
        for (const auto& row : spec.matrix)
            if (row.size() != p.matrix.cols)
                throw InputError("presentation matrix rows have differing lengths");
        for (const auto& row : spec.matrix)
            for (const auto& e : row) p.matrix.entries.push_back(A->parse(e));
        return realize(p);
    }
    if (spec.builder == "syzygy") {
        if (!spec.base) throw InputError("syzygy module spec needs a base module");
        auto base = build_module(A, *spec.base, dim_budget);
        Resolution<K> res = min_resolution(base, spec.index, dim_budget);
        if (res.truncated)
            throw BudgetExceeded("syzygy index " + std::to_string(spec.index) +
                                 " exceeds the dimension budget");
        return res.syzygies.at(spec.index);
    }
    throw InputError("unknown module builder: " + spec.builder);
}

/// Deterministic 64-bit FNV-1a hash of a canonical serialization, for report
/// provenance lines.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline std::string spec_hash(const Json& j) { return fnv1a_hex(j.dump()); }

}  // namespace reflexa

#endif
