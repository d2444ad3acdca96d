#include "waring/text.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace waring {

namespace {

class PolynomialParser {
   public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    ParsedPolynomial parse(std::optional<std::size_t> nvars) {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = get() == '-';
        read_term(negate);
        for (skip_ws(); !at_end(); skip_ws()) {
            char op = get();
            if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
            read_term(op == '-');
        }

        const std::size_t n = nvars.value_or(max_index_ ? *max_index_ + 1 : 1);
        if (max_index_ && *max_index_ >= n)
            throw ParseError("variable index " + std::to_string(*max_index_) + " out of range for " +
                             std::to_string(n) + " variables");
        Polynomial p(n);
        for (const auto& [exps, c] : terms_) {
            std::vector<unsigned> e(n, 0);
            for (const auto& [var, k] : exps) e[var] = k;
            p.add_term(ExponentVector(std::move(e)), c);
        }
        return {std::move(p), letter_ == 'X' ? Ring::dual : Ring::primal};
    }

   private:
    using SparseExps = std::map<std::size_t, unsigned>;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    void read_term(bool negate) {
        Rational coeff = negate ? -1 : 1;
        SparseExps exps;
        read_factor(coeff, exps);
        for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
            ++pos_;
            read_factor(coeff, exps);
        }
        terms_.emplace_back(std::move(exps), coeff);
    }

    void read_factor(Rational& coeff, SparseExps& exps) {
        skip_ws();
        if (at_end()) fail("expected a factor");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            digits();
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                digits();
            }
            std::string number;
            for (char ch : text_.substr(start, pos_ - start))
                if (!std::isspace(static_cast<unsigned char>(ch))) number += ch;
            try {
                coeff *= parse_rational(number);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            return;
        }
        if (c != 'x' && c != 'X') fail(std::string("unexpected character '") + c + "'");
        if (letter_ != 0 && letter_ != c) fail("mixed x and X variables");
        letter_ = c;
        ++pos_;
        const std::size_t var = std::stoul(std::string(digits()));
        unsigned k = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            k = static_cast<unsigned>(std::stoul(std::string(digits())));
        }
        exps[var] += k;
        if (!max_index_ || var > *max_index_) max_index_ = var;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char letter_ = 0;
    std::optional<std::size_t> max_index_;
    std::vector<std::pair<SparseExps, Rational>> terms_;
};

std::string monomial_body(const ExponentVector& e, char letter) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += letter + std::to_string(i);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text, std::optional<std::size_t> nvars) {
    return PolynomialParser(text).parse(nvars);
}

Monomial parse_monomial(std::string_view text) {
    ParsedPolynomial parsed = parse_polynomial(text);
    const Polynomial& p = parsed.polynomial;
    if (p.size() != 1) throw ParseError("not a monomial: '" + std::string(text) + "'");
    const auto& [e, c] = p.leading();
    if (c != 1) throw ParseError("monomial must have coefficient 1: '" + std::string(text) + "'");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == 0)
            throw ParseError("variable x" + std::to_string(i) + " missing from '" + std::string(text) +
                             "'; every variable up to the highest index must occur");
    try {
        return Monomial(e);
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

std::string format_polynomial(const Polynomial& p, Ring ring) {
    if (p.is_zero()) return "0";
    const char letter = ring == Ring::dual ? 'X' : 'x';
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        std::string body = monomial_body(e, letter);
        if (body.empty())
            out << to_string(mag);
        else if (mag == 1)
            out << body;
        else
            out << to_string(mag) << '*' << body;
    }
    return out.str();
}

std::string format_monomial(const Monomial& m) { return monomial_body(m.exponents(), 'x'); }

std::string format_linear_form(const LinearForm& form) { return "(" + format_polynomial(form.to_polynomial()) + ")"; }

}  // namespace waring
