#ifndef REFLEXA_PARSE_HPP
#define REFLEXA_PARSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reflexa/fp.hpp"
#include "reflexa/poly.hpp"
#include "reflexa/rational.hpp"

namespace reflexa {

/// Scalar construction context: how to turn numeric literals into field
/// elements. The prime-field context carries the modulus.
template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Rat> {
    Rat from_literal(const std::string& s) const { return Rat::from_decimal(s); }
    std::string name() const { return "Q"; }
};

template <>
struct FieldCtx<Fp> {
    std::uint32_t p = 0;
    Fp from_literal(const std::string& s) const { return Fp::from_decimal_mod(s, p); }
    std::string name() const { return "F" + std::to_string(p); }
};

/// Recursive-descent parser for the polynomial exchange syntax: integer or
/// rational coefficients, + - * ^, parentheses. Errors carry the offset of
/// the offending character.
template <class K>
class PolyParser {
public:
    PolyParser(std::string text, std::vector<std::string> vars, FieldCtx<K> ctx)
        : text_(std::move(text)), vars_(std::move(vars)), ctx_(std::move(ctx)) {}

    Poly<K> parse() {
        Poly<K> p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Poly<K> expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        Poly<K> acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly<K> factor() {
        Poly<K> base = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            std::uint64_t n = 0;
            while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + (text_[pos_] - '0');
                if (n > 100000) fail("exponent too large");
                ++pos_;
            }
            if (pos_ == start) fail("expected a nonnegative integer exponent");
            return base.pow(static_cast<std::uint32_t>(n));
        }
        return base;
    }

    Poly<K> atom() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<K> p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (isdigit(static_cast<unsigned char>(c))) return number();
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly<K> number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        return Poly<K>::constant(vars_.size(), ctx_.from_literal(text_.substr(start, pos_ - start)));
    }

    Poly<K> variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return Poly<K>::variable(vars_.size(), i);
        pos_ = start;
        fail("unknown variable '" + name + "'");
    }

    std::string text_;
    std::vector<std::string> vars_;
    FieldCtx<K> ctx_;
    std::size_t pos_ = 0;
};

template <class K>
Poly<K> parse_poly(const std::string& text, const std::vector<std::string>& vars,
                   const FieldCtx<K>& ctx = {}) {
    return PolyParser<K>(text, vars, ctx).parse();
}

}  // namespace reflexa

#endif
