#ifndef REFLEXA_MONOMIAL_HPP
#define REFLEXA_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "reflexa/errors.hpp"

namespace reflexa {

enum class MonomialOrder { Grevlex, Grlex, Lex };

inline std::string order_name(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::Grevlex: return "grevlex";
        case MonomialOrder::Grlex: return "grlex";
        case MonomialOrder::Lex: return "lex";
    }
    return "?";
}

inline MonomialOrder order_from_name(const std::string& s) {
    if (s == "grevlex") return MonomialOrder::Grevlex;
    if (s == "grlex") return MonomialOrder::Grlex;
    if (s == "lex") return MonomialOrder::Lex;
    throw InputError("unknown monomial order: " + s);
}

/// Exponent vector over a fixed ambient variable list.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
        Monomial m(nvars);
        m.e[i] = k;
        return m;
    }

    std::size_t nvars() const { return e.size(); }
    std::uint64_t deg() const { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }
    bool is_one() const {
        for (auto x : e) if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    /// o / *this, assuming divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }
    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Three-way comparison under the given order: negative if a < b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::Lex:
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case MonomialOrder::Grlex: {
            auto da = a.deg(), db = b.deg();
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        }
        case MonomialOrder::Grevlex: {
            auto da = a.deg(), db = b.deg();
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = a.e.size(); i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    return mono_cmp(a, b, ord) < 0;
}

}  // namespace reflexa

#endif
