#ifndef REFLEXA_TESTS_HELPERS_HPP
#define REFLEXA_TESTS_HELPERS_HPP

#include "reflexa/reflexa.hpp"

namespace reflexa::testing {

inline AlgebraPtr<Rat> make_ring(const std::vector<std::string>& vars,
                                 const std::vector<std::string>& gens,
                                 MonomialOrder ord = MonomialOrder::Grevlex) {
    FieldCtx<Rat> ctx;
    std::vector<Poly<Rat>> ps;
    for (const auto& g : gens) ps.push_back(parse_poly<Rat>(g, vars, ctx));
    return Algebra<Rat>::build(ps, vars, ord, ctx);
}

inline AlgebraPtr<Rat> ring_by_id(const std::string& id) {
    return build_algebra<Rat>(corpus_ring_spec(id));
}

inline Poly<Rat> qpoly(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly<Rat>(text, vars, FieldCtx<Rat>{});
}

inline ModulePtr<Rat> present(const AlgebraPtr<Rat>& A,
                              const std::vector<std::vector<std::string>>& rows) {
    return build_module(A, ModuleSpec::presentation_of(rows));
}

}  // namespace reflexa::testing

#endif
