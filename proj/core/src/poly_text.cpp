#include "arcseries/poly_text.hpp"

#include <cctype>

namespace arcs {

namespace {

class Parser {
public:
    Parser(std::string_view text, MonomialOrder order) : text_(text), order_(order) {}

    Polynomial run() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = consume('-');
        terms.push_back(parse_term(negative));
        skip_ws();
        while (!at_end()) {
            bool neg;
            if (consume('+')) neg = false;
            else if (consume('-')) neg = true;
            else throw ParseError("expected '+' or '-' between terms", pos_);
            terms.push_back(parse_term(neg));
            skip_ws();
        }
        return Polynomial(std::move(terms), order_);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string parse_digits() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a number", pos_);
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // digit runs used as indices or exponents must fit 32 bits
    std::uint32_t parse_small_number() {
        std::size_t at = pos_;
        std::string digits = parse_digits();
        std::size_t nz = digits.find_first_not_of('0');
        if (nz == std::string::npos) return 0;
        digits.erase(0, nz);
        if (digits.size() > 10) throw ParseError("number out of range", at);
        unsigned long long v = std::stoull(digits);
        if (v > UINT32_MAX) throw ParseError("number out of range", at);
        return static_cast<std::uint32_t>(v);
    }

    Monomial::Entry parse_factor() {
        skip_ws();
        std::size_t start = pos_;
        VarId v;
        if (consume('y')) {
            v = {1, parse_small_number()};
        } else if (consume('x')) {
            std::uint32_t coord = parse_small_number();
            if (coord == 0) throw ParseError("coordinate index must be positive", start);
            if (!consume('_')) throw ParseError("expected '_' after coordinate index", pos_);
            v = {coord, parse_small_number()};
        } else {
            throw ParseError("expected a variable", pos_);
        }
        std::uint32_t e = 1;
        if (consume('^')) {
            std::size_t at = pos_;
            e = parse_small_number();
            if (e == 0) throw ParseError("exponent must be positive", at);
        }
        return {v, e};
    }

    Term parse_term(bool negative) {
        skip_ws();
        Rational coef(1);
        std::vector<Monomial::Entry> entries;
        bool have_coef = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num(parse_digits(), 10);
            if (consume('/')) {
                std::size_t at = pos_;
                Int den(parse_digits(), 10);
                if (sgn(den) == 0) throw ParseError("zero denominator", at);
                coef = make_rational(std::move(num), std::move(den));
            } else {
                coef = Rational(std::move(num));
            }
            have_coef = true;
        }
        if (!have_coef) {
            entries.push_back(parse_factor());
        }
        while (consume('*')) entries.push_back(parse_factor());
        if (negative) coef = -coef;
        return {std::move(coef), Monomial(std::move(entries))};
    }

    std::string_view text_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

std::string coef_magnitude(const Rational& c) {
    Rational a = abs(c);
    return a.get_str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, MonomialOrder order) {
    Parser p(text, order);
    return p.run();
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [v, e] : m.entries()) {
        if (!first) out += '*';
        out += to_string(v);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
        first = false;
    }
    return out;
}

std::string to_string(const Term& t) {
    Rational a = abs(t.coef);
    std::string out = sgn(t.coef) < 0 ? "-" : "";
    if (t.mono.is_one()) return out + a.get_str();
    if (a == 1) return out + to_string(t.mono);
    return out + a.get_str() + "*" + to_string(t.mono);
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        if (first) {
            if (sgn(t.coef) < 0) out += '-';
            first = false;
        } else {
            out += sgn(t.coef) < 0 ? " - " : " + ";
        }
        std::string body;
        std::string mag = coef_magnitude(t.coef);
        if (t.mono.is_one()) body = mag;
        else if (mag == "1") body = to_string(t.mono);
        else body = mag + "*" + to_string(t.mono);
        out += body;
    }
    return out;
}

}  // namespace arcs
