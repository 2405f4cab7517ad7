#pragma once

/**
 * @file wordexpr.hpp
 * @brief Parser for the small word-expression grammar used by the CLI:
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := rational | 'qh' | generator
 *   rational := INT ['/' INT]        generator := 'I' digit digit   (k, l)
 *
 * 'qh' is the scalar q^{1/2} = p. The result is normal-ordered.
 */

#include <uqso/pbw.hpp>
#include <uqso/scalar.hpp>

#include <cctype>
#include <string>

namespace uqso {

namespace detail {

struct WordParser {
    const std::string& src;
    size_t pos = 0;
    int n;
    const DeformationParameter& d;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + src + "'");
    }

    AlgebraElement parse_expr() {
        skip_ws();
        bool neg = eat('-');
        AlgebraElement acc = parse_term();
        if (neg) acc = Scalar(-1) * acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        skip_ws();
        if (pos != src.size()) fail("unexpected input");
        return acc;
    }

    AlgebraElement parse_term() {
        AlgebraElement acc = parse_factor();
        while (true) {
            skip_ws();
            if (!eat('*')) break;
            acc = acc * parse_factor();
        }
        return acc;
    }

    AlgebraElement parse_factor() {
        skip_ws();
        if (pos >= src.size()) fail("expected factor");
        char c = src[pos];
        if (c == 'I') return parse_generator();
        if (c == 'q') {
            if (src.compare(pos, 2, "qh") == 0) {
                pos += 2;
                return Scalar(d.p()) * AlgebraElement::unit(n, d);
            }
            fail("unknown identifier");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        fail("expected generator, rational, or qh");
    }

    AlgebraElement parse_generator() {
        ++pos;  // 'I'
        if (pos + 1 >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])) ||
            !std::isdigit(static_cast<unsigned char>(src[pos + 1])))
            fail("generator needs two digits");
        int k = src[pos] - '0';
        int l = src[pos + 1] - '0';
        pos += 2;
        if (!(1 <= l && l < k && k <= n)) fail("generator I" + std::to_string(k) + std::to_string(l) + " out of range");
        return generator(n, k, l, d);
    }

    AlgebraElement parse_rational() {
        long num = parse_int();
        long den = 1;
        skip_ws();
        if (eat('/')) {
            skip_ws();
            den = parse_int();
            if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        return Scalar(r) * AlgebraElement::unit(n, d);
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(src.substr(start, pos - start));
    }
};

}  // namespace detail

/// Parses a word expression over U'_q(so_n) and returns its normal form.
inline AlgebraElement parse_word_expression(const std::string& src, int n,
                                            const DeformationParameter& d) {
    if (n < 2 || n > 9) throw ParseError("word grammar supports 2 <= n <= 9");
    detail::WordParser p{src, 0, n, d};
    return p.parse_expr();
}

}  // namespace uqso
