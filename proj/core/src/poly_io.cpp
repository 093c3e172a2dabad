#include "sonc/poly_io.hpp"

#include <cctype>
#include <json.hpp>
#include <vector>

namespace sonc {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    char take() {
        char c = peek();
        if (pos < text.size()) advance();
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

    Integer integer() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos];
            advance();
        }
        if (digits.empty()) fail("expected an integer");
        return Integer(digits);
    }
};

struct RawTerm {
    Rational coef;
    std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
};

}  // namespace

SparsePoly parse_poly_text(std::string_view text, int index_base,
                           std::optional<int> n_vars) {
    Cursor cur{text};
    std::vector<RawTerm> terms;
    int max_index = -1;

    bool first = true;
    while (!cur.eof()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        first = false;

        RawTerm term;
        term.coef = sign;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = cur.integer();
                Integer den = 1;
                if (cur.peek() == '/') {
                    cur.take();
                    den = cur.integer();
                    if (den == 0) cur.fail("zero denominator");
                }
                term.coef *= make_rational(num, den);
                saw_factor = true;
            } else if (c == 'x' || c == 'X') {
                cur.take();
                Integer idx_big = cur.integer();
                if (idx_big > 256) cur.fail("variable index too large");
                int idx = static_cast<int>(idx_big.get_si());
                if (idx < index_base) {
                    if (index_base == 1 && idx == 0)
                        cur.fail("x0 is reserved for the homogenizing variable");
                    cur.fail("variable index below the allowed range");
                }
                int e = 1;
                if (cur.peek() == '^') {
                    cur.take();
                    Integer e_big = cur.integer();
                    if (e_big > 10000) cur.fail("exponent too large");
                    e = static_cast<int>(e_big.get_si());
                }
                term.powers.emplace_back(idx - index_base, e);
                max_index = std::max(max_index, idx - index_base);
                saw_factor = true;
            } else {
                cur.fail("expected a coefficient or a variable power");
            }
            if (cur.peek() == '*') {
                cur.take();
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) cur.fail("empty term");
        terms.push_back(std::move(term));
    }
    if (terms.empty()) cur.fail("empty polynomial");

    int n = n_vars.value_or(max_index + 1);
    if (n < max_index + 1) throw DomainError("polynomial uses more variables than requested");
    SparsePoly p(n);
    for (const auto& term : terms) {
        Exponent e(n, 0);
        for (auto [idx, pow] : term.powers) e[idx] += pow;
        p.add_term(std::move(e), term.coef);
    }
    return p;
}

SparsePoly parse_poly_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        // nlohmann reports a byte offset; recover line/column for the message.
        std::size_t byte = err.byte > 0 ? err.byte - 1 : 0;
        int line = 1, col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, "invalid JSON");
    }
    try {
        int n = j.at("n").get<int>();
        if (n < 0) throw DomainError("negative variable count");
        SparsePoly p(n);
        for (const auto& t : j.at("terms")) {
            Exponent e = t.at("exp").get<std::vector<int>>();
            Rational c = rational_from_string(t.at("coef").get<std::string>());
            p.add_term(std::move(e), std::move(c));
        }
        return p;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(1, 1, std::string("polynomial JSON: ") + err.what());
    }
}

SparsePoly parse_poly_auto(std::string_view text, int index_base,
                           std::optional<int> n_vars) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_poly_json(text);
        break;
    }
    return parse_poly_text(text, index_base, n_vars);
}

}  // namespace sonc
