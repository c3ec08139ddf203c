#ifndef REFLEXA_GROEBNER_HPP
#define REFLEXA_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "reflexa/poly.hpp"

namespace reflexa {

/// Remainder of f on division by the (ordered) family G under the given
/// order. Deterministic: the first divisor in G order wins at every step.
template <class K>
Poly<K> normal_form(Poly<K> f, const std::vector<Poly<K>>& G, MonomialOrder ord) {
    Poly<K> r(f.nvars());
    while (!f.is_zero()) {
        const auto& [lm, lc] = f.leading_term(ord);
        bool divided = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            const auto& [gm, gc] = g.leading_term(ord);
            if (gm.divides(lm)) {
                f = f - g.times_monomial(gm.quotient_of(lm), lc / gc);
                divided = true;
                break;
            }
        }
        if (!divided) {
            r = r + Poly<K>::monomial(lm, lc);
            f = f - Poly<K>::monomial(lm, lc);
        }
    }
    return r;
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g, MonomialOrder ord) {
    const auto& [fm, fc] = f.leading_term(ord);
    const auto& [gm, gc] = g.leading_term(ord);
    Monomial l = lcm(fm, gm);
    return f.times_monomial(fm.quotient_of(l), K(1) / fc) -
           g.times_monomial(gm.quotient_of(l), K(1) / gc);
}

template <class K>
struct GroebnerBasis {
    std::vector<Poly<K>> gens;  // reduced, monic, sorted by ascending leading monomial
    MonomialOrder order = MonomialOrder::Grevlex;

    Poly<K> reduce(const Poly<K>& f) const { return normal_form(f, gens, order); }
    bool contains(const Poly<K>& f) const { return reduce(f).is_zero(); }
};

/// Buchberger with the normal (degree-ordered, first-come) pair strategy and
/// the coprime-leading-term skip. Output is the reduced basis, so it is a
/// canonical invariant of the ideal and the order.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& generators, MonomialOrder ord) {
    std::vector<Poly<K>> G;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        const auto& [m, c] = g.leading_term(ord);
        G.push_back(g.scaled(K(1) / c));
    }
    if (G.empty()) throw InputError("cannot take a Groebner basis of the zero ideal");

    using Pair = std::tuple<std::uint64_t, std::size_t, std::size_t>;  // (deg lcm, i, j)
    std::set<Pair> queue;
    auto enqueue = [&](std::size_t i, std::size_t j) {
        const Monomial& mi = G[i].leading_term(ord).first;
        const Monomial& mj = G[j].leading_term(ord).first;
        Monomial l = lcm(mi, mj);
        if (l.deg() == mi.deg() + mj.deg()) return;  // coprime leading terms
        queue.insert({l.deg(), i, j});
    };
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) enqueue(i, j);

    while (!queue.empty()) {
        auto [d, i, j] = *queue.begin();
        queue.erase(queue.begin());
        Poly<K> r = normal_form(s_polynomial(G[i], G[j], ord), G, ord);
        if (r.is_zero()) continue;
        const auto& [m, c] = r.leading_term(ord);
        G.push_back(r.scaled(K(1) / c));
        for (std::size_t t = 0; t + 1 < G.size(); ++t) enqueue(t, G.size() - 1);
    }

    // Minimalize: drop generators whose leading term is divisible by another's.
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Monomial& mi = G[i].leading_term(ord).first;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Monomial& mj = G[j].leading_term(ord).first;
            if (mj.divides(mi) && (mj != mi || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Fully reduce each generator against the others.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly<K>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly<K> r = normal_form(minimal[i], others, ord);
            internal_check(!r.is_zero(), "minimal generator reduced to zero");
            const auto& [m, c] = r.leading_term(ord);
            r = r.scaled(K(1) / c);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return mono_cmp(a.leading_term(ord).first, b.leading_term(ord).first, ord) < 0;
    });

    GroebnerBasis<K> gb;
    gb.gens = std::move(minimal);
    gb.order = ord;
    return gb;
}

}  // namespace reflexa

#endif
