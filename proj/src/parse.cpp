#include "mindenom/parse.hpp"

#include "mindenom/errors.hpp"

#include <cctype>
#include <sstream>

namespace mindenom {

namespace {

std::string strip(std::string_view s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
    return r;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Split a sum into signed terms at top level (outside brackets).
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if ((c == '+' || c == '-') && depth == 0 && i > 0) {
            terms.emplace_back(sign, cur);
            cur.clear();
            sign = c == '-' ? -1 : 1;
            continue;
        }
        if ((c == '+' || c == '-') && i == 0) {
            sign = c == '-' ? -1 : 1;
            continue;
        }
        cur.push_back(c);
    }
    terms.emplace_back(sign, cur);
    return terms;
}

std::uint64_t parse_uint(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::uint64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad integer literal: '" + s + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 1'000'000'000ull) throw ParseError("integer literal too large: '" + s + "'");
    }
    return v;
}

// One term of a sum in variable `var` ("x" or "t"): coefficient and power.
// Accepts "3", "x", "x^2", "2*x^2", "2x", "[t+1]*x^2", "[t]".
struct Term {
    std::string coef; // decimal or bracket payload; empty = 1
    std::size_t power = 0;
};

Term parse_term(const std::string& s, char var) {
    Term t;
    std::size_t i = 0;
    if (i < s.size() && s[i] == '[') {
        std::size_t close = s.find(']', i);
        if (close == std::string::npos) throw ParseError("unbalanced '[' in '" + s + "'");
        t.coef = s.substr(i + 1, close - i - 1);
        i = close + 1;
    } else {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        t.coef = s.substr(i, j - i);
        i = j;
    }
    if (i < s.size() && s[i] == '*') ++i;
    if (i == s.size()) {
        if (t.coef.empty()) throw ParseError("empty term");
        return t;
    }
    if (s[i] != var) throw ParseError("unexpected symbol in term '" + s + "'");
    ++i;
    t.power = 1;
    if (i < s.size()) {
        if (s[i] != '^') throw ParseError("expected '^' in term '" + s + "'");
        t.power = static_cast<std::size_t>(parse_uint(s.substr(i + 1)));
        i = s.size();
    }
    return t;
}

FieldElem parse_elem_stripped(const Field& f, const std::string& s);

FieldElem term_coef_elem(const Field& f, const Term& t) {
    if (t.coef.empty()) return f.one();
    return parse_elem_stripped(f, t.coef);
}

// Element expression in t (already stripped of whitespace/brackets).
FieldElem parse_elem_stripped(const Field& f, const std::string& s) {
    if (s.empty()) throw ParseError("empty field-element literal");
    bool plain_int = true;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) plain_int = false;
    if (plain_int) {
        std::uint64_t v = parse_uint(s);
        if (f.extension_degree() == 1) return f.elem(static_cast<std::uint32_t>(v % f.characteristic()));
        if (v >= f.size())
            throw ParseError("element index " + s + " out of range for " + f.name());
        return f.elem(static_cast<std::uint32_t>(v));
    }
    if (f.extension_degree() == 1)
        throw ParseError("generator 't' used over a prime field: '" + s + "'");
    FieldElem acc = f.zero();
    for (const auto& [sign, body] : split_terms(s)) {
        Term t = parse_term(body, 't');
        if (t.power >= f.extension_degree())
            throw ParseError("t-power too large in '" + s + "'");
        std::uint32_t cv = t.coef.empty()
                               ? 1
                               : static_cast<std::uint32_t>(parse_uint(t.coef) % f.characteristic());
        std::vector<std::uint32_t> coeffs(f.extension_degree(), 0);
        coeffs[t.power] = cv;
        FieldElem e = f.elem_from_coeffs(coeffs);
        acc = sign < 0 ? acc - e : acc + e;
    }
    return acc;
}

} // namespace

FieldElem parse_elem(const Field& f, std::string_view s) {
    std::string t = strip(s);
    if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    return parse_elem_stripped(f, t);
}

Poly parse_poly(const Field& f, std::string_view s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("empty polynomial literal");
    if (t.find('x') == std::string::npos) {
        // Coefficient CSV (a single cell is a constant polynomial).
        auto cells = split(t, ',');
        std::vector<FieldElem> coeffs;
        coeffs.reserve(cells.size());
        for (const auto& c : cells) coeffs.push_back(parse_elem(f, c));
        return Poly(f, std::move(coeffs));
    }
    Poly acc(f);
    for (const auto& [sign, body] : split_terms(t)) {
        Term term = parse_term(body, 'x');
        FieldElem c = term_coef_elem(f, term);
        Poly mono = Poly::monomial(f, term.power) * c;
        acc = sign < 0 ? acc - mono : acc + mono;
    }
    return acc;
}

std::vector<FieldElem> parse_digits(const Field& f, std::string_view s) {
    std::string t = strip(s);
    if (t.empty()) return {};
    std::vector<FieldElem> out;
    for (const auto& c : split(t, ',')) out.push_back(parse_elem(f, c));
    return out;
}

std::string to_string(const FieldElem& e) {
    Field f = e.field();
    if (f.extension_degree() == 1) return std::to_string(e.index());
    auto c = e.coeffs();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const bool ext = p.field().extension_degree() > 1;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const FieldElem& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = to_string(c);
        if (i == 0) {
            os << (ext && !c.is_one() && cs.find('t') != std::string::npos ? "[" + cs + "]" : cs);
            continue;
        }
        if (!c.is_one()) {
            if (ext && cs.find('t') != std::string::npos)
                os << "[" << cs << "]*";
            else
                os << cs << "*";
        }
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::string digits_to_string(std::span<const FieldElem> digits) {
    std::ostringstream os;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ",";
        os << to_string(digits[i]);
    }
    return os.str();
}

} // namespace mindenom
