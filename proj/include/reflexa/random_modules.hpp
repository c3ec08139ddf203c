#ifndef REFLEXA_RANDOM_MODULES_HPP
#define REFLEXA_RANDOM_MODULES_HPP

#include <cstdint>
#include <random>

#include "reflexa/hom.hpp"

namespace reflexa {

/// Deterministic random source for property runs. mt19937_64 has a pinned
/// output sequence, and all derived draws go through explicit arithmetic, so
/// a seed reproduces the same modules on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n ? g_() % n : 0; }
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    std::uint64_t raw() { return g_(); }

private:
    std::mt19937_64 g_;
};

/// A random finite presentation with entries in the maximal ideal: up to
/// `max_rows` generators and `max_cols` relations, coefficients in [-2, 2].
template <class K>
Presentation<K> random_presentation(const AlgebraPtr<K>& A, Rng& rng, std::uint32_t max_rows = 2,
                                    std::uint32_t max_cols = 4) {
    const auto& mons = A->std_monomials();
    Presentation<K> p;
    p.algebra = A;
    p.matrix.rows = 1 + static_cast<std::uint32_t>(rng.below(max_rows));
    p.matrix.cols = static_cast<std::uint32_t>(rng.below(max_cols + 1));
    p.matrix.entries.assign(std::size_t(p.matrix.rows) * p.matrix.cols, Poly<K>(A->nvars()));
    for (auto& e : p.matrix.entries) {
        std::vector<typename Poly<K>::Term> terms;
        for (std::size_t u = 1; u < mons.size(); ++u) {
            if (rng.below(2) == 0) continue;
            long c = static_cast<long>(rng.in_range(-2, 2));
            if (c == 0) continue;
            terms.emplace_back(mons[u], K(c));
        }
        e = Poly<K>::from_terms(A->nvars(), std::move(terms));
    }
    return p;
}

template <class K>
ModulePtr<K> random_module(const AlgebraPtr<K>& A, Rng& rng, std::uint32_t max_rows = 2,
                           std::uint32_t max_cols = 4) {
    return realize(random_presentation(A, rng, max_rows, max_cols));
}

/// Draws until the module is nonzero and has no free direct summand.
template <class K>
ModulePtr<K> random_module_no_free_summand(const AlgebraPtr<K>& A, Rng& rng,
                                           std::uint32_t max_rows = 2, std::uint32_t max_cols = 4) {
    for (int tries = 0; tries < 500; ++tries) {
        auto M = random_module(A, rng, max_rows, max_cols);
        if (M->dim() > 0 && !has_free_summand(M)) return M;
    }
    throw InternalCheckFailure("random generator failed to produce a summand-free module");
}

}  // namespace reflexa

#endif
