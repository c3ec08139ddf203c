#ifndef REFLEXA_POLY_HPP
#define REFLEXA_POLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reflexa/monomial.hpp"

namespace reflexa {

/// Sparse multivariate polynomial with exact scalars. Terms are stored in
/// descending grevlex order with no zero coefficients, so two polynomials are
/// equal iff their term vectors are equal. Immutable in spirit: arithmetic
/// returns fresh values.
template <class K>
class Poly {
public:
    using Term = std::pair<Monomial, K>;

    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly constant(std::size_t nvars, K c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace_back(Monomial::one(nvars), std::move(c));
        return p;
    }
    static Poly monomial(Monomial m, K c) {
        Poly p(m.nvars());
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t i) {
        return monomial(Monomial::var(nvars, i), K(1));
    }

    /// Builds from arbitrary (monomial, coeff) pairs, combining duplicates.
    static Poly from_terms(std::size_t nvars, std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
            return mono_cmp(a.first, b.first, MonomialOrder::Grevlex) > 0;
        });
        Poly p(nvars);
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first)
                p.terms_.back().second += t.second;
            else
                p.terms_.push_back(std::move(t));
            if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
        }
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient of the monomial 1; nonzero iff the value is a unit in any
    /// artinian quotient by an ideal inside the maximal ideal.
    K constant_coeff() const {
        for (const auto& [m, c] : terms_)
            if (m.is_one()) return c;
        return K(0);
    }

    std::uint64_t total_deg() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
        return d;
    }

    /// Leading term under the given order (terms are stored in grevlex order,
    /// so other orders scan; term counts stay tiny).
    const Term& leading_term(MonomialOrder ord) const {
        internal_check(!terms_.empty(), "leading term of zero polynomial");
        if (ord == MonomialOrder::Grevlex) return terms_.front();
        const Term* best = &terms_.front();
        for (const auto& t : terms_)
            if (mono_cmp(t.first, best->first, ord) > 0) best = &t;
        return *best;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, true); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_compatible(a, b);
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) acc.emplace_back(ma * mb, ca * cb);
        return from_terms(a.nvars_, std::move(acc));
    }

    Poly scaled(const K& c) const {
        if (c.is_zero()) return zero(nvars_);
        Poly r(*this);
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }

    Poly times_monomial(const Monomial& m, const K& c) const {
        if (c.is_zero()) return zero(nvars_);
        Poly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
        // Multiplying every monomial by a fixed one preserves grevlex order.
        return r;
    }

    Poly pow(std::uint32_t n) const {
        Poly r = constant(nvars_, K(1));
        for (std::uint32_t i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Prints in descending grevlex order; parse(print(p)) == p.
    std::string str(const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string ms = mono_str(m, vars);
            if (ms.empty())
                out += cs;
            else if (cs == "1")
                out += ms;
            else
                out += cs + "*" + ms;
        }
        return out;
    }

private:
    static std::string mono_str(const Monomial& m, const std::vector<std::string>& vars) {
        std::string out;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i]) continue;
            if (!out.empty()) out += "*";
            out += vars[i];
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    static void check_compatible(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_)
            throw InputError("polynomial operands live in different variable lists");
    }

    static Poly merged(const Poly& a, const Poly& b, bool subtract) {
        check_compatible(a, b);
        Poly r(a.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int which;
            if (i == a.terms_.size())
                which = 1;
            else if (j == b.terms_.size())
                which = -1;
            else
                which = -mono_cmp(a.terms_[i].first, b.terms_[j].first, MonomialOrder::Grevlex);
            if (which < 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (which > 0) {
                auto t = b.terms_[j++];
                if (subtract) t.second = -t.second;
                r.terms_.push_back(std::move(t));
            } else {
                K c = subtract ? a.terms_[i].second - b.terms_[j].second
                               : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
    std::size_t nvars_;
};

}  // namespace reflexa

#endif
