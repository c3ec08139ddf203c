#ifndef REFLEXA_RATIONAL_HPP
#define REFLEXA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "reflexa/errors.hpp"

namespace reflexa {

/// Arbitrary-precision rational scalar. Always kept in lowest terms with a
/// positive denominator (GMP's canonical form), so equality is structural.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw InputError("rational with zero denominator");
        v_.canonicalize();
    }

    /// Accepts "123", "-4", "2/3", "-10/4" (canonicalized).
    static Rat from_decimal(const std::string& s) {
        try {
            Rat r;
            r.v_ = mpq_class(s);
            if (r.v_.get_den() == 0) throw InputError("rational with zero denominator: " + s);
            r.v_.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw InputError("malformed rational literal: " + s);
        }
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw InputError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    /// "p/q" with q > 1, otherwise just "p".
    std::string str() const { return v_.get_str(); }

    /// Exact integer power, n >= 0.
    static Rat pow(const Rat& base, unsigned long n) {
        Rat r;
        mpz_pow_ui(r.v_.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
        mpz_pow_ui(r.v_.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
        r.v_.canonicalize();
        return r;
    }

    static Rat from_u64(std::uint64_t n) {
        Rat r;
        mpz_import(r.v_.get_num_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
        return r;
    }

private:
    mpq_class v_;
};

}  // namespace reflexa

#endif
