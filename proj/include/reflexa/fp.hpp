#ifndef REFLEXA_FP_HPP
#define REFLEXA_FP_HPP

#include <cstdint>
#include <string>

#include "reflexa/errors.hpp"

namespace reflexa {

/// Prime-field scalar with a runtime modulus p < 2^31. Residues are kept in
/// [0, p). A value built from a bare integer literal carries no modulus yet
/// and adopts one the first time it meets a bound scalar; this lets generic
/// code write K(0) and K(1) without a field handle.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long n) : v_(n), p_(0) {}  // NOLINT: implicit by design
    Fp(long n, std::uint32_t p) : v_(n), p_(p) { check_modulus(p); reduce(); }

    static Fp from_decimal_mod(const std::string& s, std::uint32_t p) {
        check_modulus(p);
        // Parse digit-by-digit mod p so arbitrarily long literals are fine.
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        if (i == s.size()) throw InputError("malformed integer literal: " + s);
        std::int64_t acc = 0;
        std::int64_t den = -1;
        for (; i < s.size(); ++i) {
            if (s[i] == '/') {
                if (den >= 0 || i + 1 == s.size()) throw InputError("malformed rational literal: " + s);
                den = acc;
                acc = 0;
                continue;
            }
            if (s[i] < '0' || s[i] > '9') throw InputError("malformed numeric literal: " + s);
            acc = (acc * 10 + (s[i] - '0')) % p;
        }
        Fp num(neg ? -acc : acc, p);
        if (den < 0) return num;
        return num / Fp(den, p);
    }

    bool is_zero() const { return v_ == 0; }
    std::uint32_t modulus() const { return p_; }

    Fp& operator+=(const Fp& o) { bind(o); v_ += o.bound_to(p_); reduce(); return *this; }
    Fp& operator-=(const Fp& o) { bind(o); v_ -= o.bound_to(p_); reduce(); return *this; }
    Fp& operator*=(const Fp& o) { bind(o); v_ *= o.bound_to(p_); reduce(); return *this; }
    Fp& operator/=(const Fp& o) {
        bind(o);
        std::int64_t w = o.bound_to(p_);
        if (p_ == 0) {
            // Two raw literals: exact integer division only.
            if (w == 0) throw InputError("division by zero");
            if (v_ % w != 0)
                throw InternalCheckFailure("prime-field literal division before a modulus is known");
            v_ /= w;
            return *this;
        }
        if (w == 0) throw InputError("division by zero");
        v_ *= inverse_mod(w, p_);
        reduce();
        return *this;
    }

    friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
    friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
    friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
    friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
    Fp operator-() const { Fp r(*this); r.v_ = -r.v_; r.reduce(); return r; }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint32_t p = a.p_ ? a.p_ : b.p_;
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw InternalCheckFailure("mixed prime-field moduli in comparison");
        if (p == 0) return a.v_ == b.v_;
        return a.bound_to(p) == b.bound_to(p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(bound_to(p_)); }

    static void check_modulus(std::uint32_t p) {
        if (p < 2 || p >= (1u << 31)) throw InputError("prime modulus must satisfy 2 <= p < 2^31");
    }

private:
    void reduce() {
        if (p_ == 0) return;
        v_ %= p_;
        if (v_ < 0) v_ += p_;
    }
    void bind(const Fp& o) {
        if (p_ == 0) {
            p_ = o.p_;
            reduce();
        } else if (o.p_ != 0 && o.p_ != p_) {
            throw InternalCheckFailure("mixed prime-field moduli in arithmetic");
        }
    }
    std::int64_t bound_to(std::uint32_t p) const {
        if (p == 0) return v_;
        std::int64_t w = v_ % p;
        return w < 0 ? w + p : w;
    }
    static std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
        std::int64_t t = 0, nt = 1, r = p, nr = a % p;
        if (nr < 0) nr += p;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw InputError("not invertible: modulus is not prime");
        return t < 0 ? t + p : t;
    }

    std::int64_t v_;
    std::uint32_t p_;
};

}  // namespace reflexa

#endif
