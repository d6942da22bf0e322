#pragma once

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "hadwalk/engine.hpp"

namespace hadwalk {

/**
 * A parsed initial state. Every well-formed input yields the floating view;
 * the exact view exists only when both amplitudes are Gaussian integers
 * over a power of sqrt(2) (e.g. "1,0", "i/sqrt2", "(1+i)/2", "-1/sqrt2^3").
 * Decimal inputs such as "0.6,0.8i" are float-only.
 */
struct ParsedPhi {
    bool exact_ok = false;
    QubitState<DyadicGaussian> exact;
    QubitState<ComplexF> floating;
};

namespace detail {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(pos, w.size()) != w)
            return false;
        pos += w.size();
        return true;
    }
};

// One numerator term: an integer or decimal, possibly imaginary.
struct NumTerm {
    bool imaginary = false;
    bool decimal = false;
    BigInt int_val{1};
    double dec_val = 1.0;
    int sign = 1;
};

inline std::optional<NumTerm> parse_term(Cursor& c) {
    NumTerm t;
    if (c.eat('-'))
        t.sign = -1;
    else
        c.eat('+');
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '.'))
        ++c.pos;
    std::string digits(c.s.substr(start, c.pos - start));
    bool has_i = c.eat('i');
    if (digits.empty() && !has_i)
        return std::nullopt; // a bare sign is not a term
    t.imaginary = has_i;
    if (!digits.empty()) {
        if (digits.find('.') != std::string::npos) {
            t.decimal = true;
            t.dec_val = std::stod(digits);
        } else {
            t.int_val = BigInt(digits);
        }
    }
    return t;
}

// Numerator: one term, or a real and an imaginary term joined by +/-.
// Parentheses are required around two-term numerators when a denominator
// follows, and harmless otherwise.
struct Numerator {
    bool decimal = false;
    bool two_terms = false;
    BigInt re{0}, im{0};
    double re_d = 0, im_d = 0;
};

inline std::optional<Numerator> parse_numerator(Cursor& c) {
    Numerator n;
    auto absorb = [&n](const NumTerm& t) {
        if (t.decimal)
            n.decimal = true;
        if (t.imaginary) {
            n.im += t.sign * t.int_val;
            n.im_d += t.sign * (t.decimal ? t.dec_val : t.int_val.convert_to<double>());
        } else {
            n.re += t.sign * t.int_val;
            n.re_d += t.sign * (t.decimal ? t.dec_val : t.int_val.convert_to<double>());
        }
    };
    auto first = parse_term(c);
    if (!first)
        return std::nullopt;
    absorb(*first);
    if (c.peek() == '+' || c.peek() == '-') {
        auto second = parse_term(c);
        if (!second || second->imaginary == first->imaginary)
            return std::nullopt; // need one real and one imaginary part
        absorb(*second);
        n.two_terms = true;
    }
    // decimal parts began life in int_val's default; recompute cleanly
    if (n.decimal) {
        n.re_d = 0;
        n.im_d = 0;
        return n; // caller re-parses; see parse_amp
    }
    n.re_d = n.re.convert_to<double>();
    n.im_d = n.im.convert_to<double>();
    return n;
}

// Denominator: sqrt2[^k], a positive integer, or an integer times sqrt2.
struct Denominator {
    bool present = false;
    BigInt factor{1};    // plain integer part
    unsigned sqrt2s = 0; // number of sqrt2 factors
};

inline std::optional<Denominator> parse_denominator(Cursor& c) {
    Denominator d;
    if (!c.eat('/')) {
        return d; // absent is fine
    }
    d.present = true;
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        ++c.pos;
    if (c.pos > start)
        d.factor = BigInt(std::string(c.s.substr(start, c.pos - start)));
    bool root = c.eat_word("sqrt2") || c.eat_word("sqrt(2)") || c.eat_word("√2");
    if (root) {
        d.sqrt2s = 1;
        if (c.eat('^')) {
            std::size_t es = c.pos;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
                ++c.pos;
            if (c.pos == es)
                return std::nullopt;
            d.sqrt2s = static_cast<unsigned>(std::stoul(std::string(c.s.substr(es, c.pos - es))));
        }
    }
    if (c.pos == start && !root)
        return std::nullopt; // "/" followed by nothing usable
    if (d.factor <= 0)
        return std::nullopt;
    return d;
}

struct ParsedAmp {
    bool exact_ok = false;
    DyadicGaussian exact;
    ComplexF floating{0.0, 0.0};
};

inline std::optional<ParsedAmp> parse_amp(std::string_view text) {
    Cursor c{text};
    bool paren = c.eat('(');
    auto num = parse_numerator(c);
    if (!num)
        return std::nullopt;
    if (paren && !c.eat(')'))
        return std::nullopt;
    auto den = parse_denominator(c);
    if (!den || !c.done())
        return std::nullopt;
    // "1+i/sqrt2" reads as 1 + (i/sqrt2); require "(1+i)/sqrt2" instead
    if (den->present && num->two_terms && !paren)
        return std::nullopt;

    if (num->decimal) {
        // float-only input; reparse the numerator numerically
        Cursor c2{text};
        bool p2 = c2.eat('(');
        double re = 0, im = 0;
        int terms = 0;
        while (true) {
            auto t = parse_term(c2);
            if (!t)
                return std::nullopt;
            double v = t->sign * (t->decimal ? t->dec_val : t->int_val.convert_to<double>());
            (t->imaginary ? im : re) += v;
            ++terms;
            if (c2.peek() != '+' && c2.peek() != '-')
                break;
        }
        if (p2 && !c2.eat(')'))
            return std::nullopt;
        auto d2 = parse_denominator(c2);
        if (!d2 || !c2.done())
            return std::nullopt;
        if (d2->present && terms > 1 && !p2)
            return std::nullopt;
        double denom = d2->factor.convert_to<double>() *
                       std::pow(2.0, 0.5 * d2->sqrt2s);
        ParsedAmp out;
        out.floating = ComplexF(re, im) / denom;
        return out;
    }

    // integer numerator: exact when the plain factor is a power of two
    BigInt f = den->factor;
    unsigned twos = 0;
    while (f % 2 == 0) {
        f /= 2;
        ++twos;
    }
    ParsedAmp out;
    if (f == 1) {
        out.exact_ok = true;
        out.exact = DyadicGaussian(num->re, num->im, 2 * twos + den->sqrt2s);
        out.floating = to_complexf(out.exact);
    } else {
        double denom = den->factor.convert_to<double>() *
                       std::pow(2.0, 0.5 * den->sqrt2s);
        out.floating = ComplexF(num->re_d, num->im_d) / denom;
    }
    return out;
}

} // namespace detail

// Parse "alpha,beta". Throws std::invalid_argument on malformed input;
// normalization is the caller's concern.
inline ParsedPhi parse_phi(std::string_view text) {
    // split on the top-level comma
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == ',' && depth == 0) {
            if (split != std::string_view::npos)
                throw std::invalid_argument("state needs exactly two components");
            split = i;
        }
    }
    if (split == std::string_view::npos)
        throw std::invalid_argument("state needs exactly two components");
    auto a = detail::parse_amp(text.substr(0, split));
    auto b = detail::parse_amp(text.substr(split + 1));
    if (!a || !b)
        throw std::invalid_argument("could not parse amplitude in \"" +
                                    std::string(text) + "\"");
    ParsedPhi out;
    out.exact_ok = a->exact_ok && b->exact_ok;
    if (out.exact_ok)
        out.exact = {a->exact, b->exact};
    out.floating = {a->floating, b->floating};
    return out;
}

} // namespace hadwalk
