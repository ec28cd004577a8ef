#pragma once

// Text form of polynomials and polynomial vectors.
//
//   vector := '(' poly (',' poly)* ')' | poly
//   poly   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := number | name ['^' digits]
//   number := digits ['/' digits]        (the fraction only over Q)
//
// Whitespace is insignificant. The printer writes terms in decreasing order
// of the component's monomial order, so parse(print(f)) == f.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sgb/errors.hpp"
#include "sgb/polyvec.hpp"

namespace sgb {

using VarNames = std::vector<std::string>;

/// Identifiers in order of first appearance.
inline VarNames infer_variables(std::string_view text) {
    VarNames out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            std::string name(text.substr(i, j - i));
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        } else {
            ++i;
        }
    }
    return out;
}

template <EuclideanDomain R>
class Parser {
public:
    /// `line` and `column` locate text[0] in the enclosing input (1-based).
    Parser(std::string_view text, const VarNames& vars, std::size_t line = 1, std::size_t column = 1)
        : text_(text), vars_(vars), line_(line), column_(column) {}

    /// A vector of the given rank, or of whatever rank is written when rank is 0.
    PolyVector<R> vector(std::size_t rank = 0) {
        skip_ws();
        std::vector<PolyVector<R>> entries;
        if (peek() == '(') {
            ++pos_;
            entries.push_back(poly());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                entries.push_back(poly());
                skip_ws();
            }
            expect(')');
        } else {
            entries.push_back(poly());
        }
        finish();
        if (rank != 0 && entries.size() != rank)
            fail("expected a vector with " + std::to_string(rank) + " entries, found " +
                 std::to_string(entries.size()));
        std::vector<TermVector<R>> ts;
        for (std::size_t j = 0; j < entries.size(); ++j) {
            for (const auto& t : entries[j].terms()) ts.push_back({t.coeff, MonomialVector{t.mono.exps, j}});
        }
        return PolyVector<R>(vars_.size(), entries.size(), std::move(ts));
    }

    /// A single polynomial spanning the whole input.
    PolyVector<R> polynomial() {
        PolyVector<R> p = poly();
        finish();
        return p;
    }

private:
    PolyVector<R> poly() {
        std::vector<TermVector<R>> ts;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        ts.push_back(term(negative));
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negative = peek() == '-';
            ++pos_;
            ts.push_back(term(negative));
        }
        return PolyVector<R>(vars_.size(), 1, std::move(ts));
    }

    TermVector<R> term(bool negative) {
        R coeff(1L);
        Exponents exps(vars_.size(), 0);
        factor(coeff, exps);
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            factor(coeff, exps);
        }
        if (negative) coeff = -coeff;
        return {std::move(coeff), MonomialVector{std::move(exps), 0}};
    }

    void factor(R& coeff, Exponents& exps) {
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string literal = digits();
            if (peek() == '/') {
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
                literal += '/' + digits();
            }
            try {
                coeff = coeff * R::parse(literal);
            } catch (const std::invalid_argument& e) {
                fail(e.what(), start);
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = pos_;
            while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
            std::string name(text_.substr(pos_, j - pos_));
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) fail("unknown variable '" + name + "'");
            pos_ = j;
            std::size_t power = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
                const std::size_t at = pos_;
                std::string e = digits();
                if (e.size() > 9) fail("exponent too large", at);
                power = std::stoul(e);
            }
            exps[static_cast<std::size_t>(it - vars_.begin())] += static_cast<Exponent>(power);
            return;
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string digits() {
        std::size_t j = pos_;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        std::string out(text_.substr(pos_, j - pos_));
        pos_ = j;
        return out;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        std::size_t line = line_, column = column_;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(what, line, column);
    }

    std::string_view text_;
    const VarNames& vars_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

template <EuclideanDomain R>
PolyVector<R> parse_polynomial(std::string_view text, const VarNames& vars) {
    return Parser<R>(text, vars).polynomial();
}

template <EuclideanDomain R>
PolyVector<R> parse_vector(std::string_view text, const VarNames& vars, std::size_t rank = 0) {
    return Parser<R>(text, vars).vector(rank);
}

/// Component `comp` of f, terms in decreasing order.
template <EuclideanDomain R>
std::string format_component(const PolyVector<R>& f, std::size_t comp, const VarNames& vars,
                             const AdmissibleOrder& ord) {
    std::vector<const TermVector<R>*> ts;
    for (const auto& t : f.terms()) {
        if (t.mono.comp == comp) ts.push_back(&t);
    }
    if (ts.empty()) return "0";
    const MonomialOrder& mo = ord.component_order(comp);
    std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) { return mo.compare(a->mono.exps, b->mono.exps) > 0; });
    std::string out;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        std::string c = to_string(ts[k]->coeff);
        const bool negative = !c.empty() && c.front() == '-';
        if (negative) c.erase(0, 1);
        if (k == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        const auto& e = ts[k]->mono.exps;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += v < vars.size() ? vars[v] : "x" + std::to_string(v + 1);
            if (e[v] > 1) mono += '^' + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += c;
        } else if (c == "1") {
            out += mono;
        } else {
            out += c + '*' + mono;
        }
    }
    return out;
}

/// "(a, b, c)"; a rank-1 vector prints bare unless `parens` is set.
template <EuclideanDomain R>
std::string format_vector(const PolyVector<R>& f, const VarNames& vars, const AdmissibleOrder& ord,
                          bool parens = false) {
    if (f.rank() == 1 && !parens) return format_component(f, 0, vars, ord);
    std::string out = "(";
    for (std::size_t j = 0; j < f.rank(); ++j) {
        if (j > 0) out += ", ";
        out += format_component(f, j, vars, ord);
    }
    return out + ")";
}

/// "[[2,0],[0,1]]"
template <class T>
std::string format_scalar_matrix(const std::vector<std::vector<T>>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) out += ',';
        out += '[';
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j > 0) out += ',';
            out += to_string(m[i][j]);
        }
        out += ']';
    }
    return out + "]";
}

}  // namespace sgb
