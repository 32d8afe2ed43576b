#ifndef REALSAMPLE_POLYCORE_PARSE_HPP
#define REALSAMPLE_POLYCORE_PARSE_HPP

#include <realsample/errors.hpp>
#include <realsample/polycore/polynomial.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace realsample {

namespace detail {

// poly := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := integer ['/' integer] | var ['^' nat]
class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        Polynomial result(ring_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        for (;;) {
            Term t = parse_term();
            if (negate) t.coeff = -t.coeff;
            terms_.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
            negate = c == '-';
            ++pos_;
        }
        return Polynomial::from_terms(ring_, std::move(terms_));
    }

private:
    Term parse_term() {
        Term t{Monomial(ring_.size()), Rational(1)};
        for (;;) {
            skip_ws();
            if (at_end()) throw ParseError("expected a number or variable", pos_);
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                std::string name = parse_identifier();
                auto idx = ring_.index_of(name);
                if (!idx) throw ParseError("unknown variable '" + name + "'", start);
                std::uint32_t e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = parse_nat();
                }
                t.mono.set(*idx, t.mono[*idx] + e);
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return t;
        }
    }

    Rational parse_number() {
        std::size_t start = pos_;
        std::string num = digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator", pos_);
            std::string den = digits();
            if (Integer(den) == 0) throw ParseError("zero denominator", start);
            return make_rational(Integer(num), Integer(den));
        }
        return Rational(Integer(num));
    }

    std::uint32_t parse_nat() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
        std::size_t start = pos_;
        std::string d = digits();
        if (d.size() > 6) throw ParseError("exponent too large", start);
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string parse_identifier() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
    std::vector<Term> terms_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    return detail::PolyParser(text, ring).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& varnames) {
    return parse_polynomial(text, Ring(varnames));
}

}  // namespace realsample

#endif
