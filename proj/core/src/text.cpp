#include "dyndeg/text.hpp"

#include <cctype>
#include <sstream>

namespace dyndeg {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Int parse_int(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("empty integer literal");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError("bare sign is not an integer: '" + s + "'");
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError("bad integer literal: '" + s + "'");
    return Int(t, 10); // explicit base: leading zeros must not mean octal
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

IntPoly parse_poly_human(const std::string& s) {
    // term grammar: [+-] [coeff] ['*'] [xX ['^' power]]
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty polynomial");

    std::vector<Int> coeffs;
    auto add_term = [&coeffs](const Int& c, int power) {
        if (power < 0) throw ParseError("negative power");
        if (coeffs.size() <= static_cast<size_t>(power)) coeffs.resize(static_cast<size_t>(power) + 1);
        coeffs[static_cast<size_t>(power)] += c;
    };

    size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = (t[i] == '-') ? -1 : 1;
            ++i;
            if (i == t.size()) throw ParseError("dangling sign in polynomial");
        }
        std::string digits;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
        if (i < t.size() && t[i] == '*') {
            if (digits.empty()) throw ParseError("'*' without a coefficient");
            ++i;
        }
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        int power = 0;
        if (i < t.size() && (t[i] == 'x' || t[i] == 'X')) {
            ++i;
            power = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                std::string pd;
                while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) pd += t[i++];
                if (pd.empty()) throw ParseError("'^' without an exponent");
                power = std::stoi(pd);
                if (power > 4096) throw ParseError("exponent too large");
            }
        } else if (digits.empty()) {
            throw ParseError("unexpected character in polynomial: '" + std::string(1, t[i]) + "'");
        }
        add_term(sign * coeff, power);
        if (i < t.size() && t[i] != '+' && t[i] != '-')
            throw ParseError("expected '+' or '-' between terms");
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly parse_poly(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("empty polynomial");
    if (t.find('x') != std::string::npos || t.find('X') != std::string::npos)
        return parse_poly_human(t);
    if (t.find(',') == std::string::npos) {
        // single number: a constant polynomial
        return IntPoly(std::vector<Int>{parse_int(t)});
    }
    auto parts = split(t, ',');
    // tolerate one trailing comma
    if (!parts.empty() && strip(parts.back()).empty()) parts.pop_back();
    if (parts.empty()) throw ParseError("empty coefficient list");
    std::vector<Int> coeffs;
    coeffs.reserve(parts.size());
    for (const auto& part : parts) coeffs.push_back(parse_int(part));
    return IntPoly(std::move(coeffs));
}

std::string poly_coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ',';
        os << p.coeffs()[i].get_str();
    }
    return os.str();
}

IntMatrix parse_matrix(const std::string& s) {
    auto rows = split(strip(s), ';');
    if (rows.empty()) throw ParseError("empty matrix");
    const size_t dim = rows.size();
    std::vector<Int> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        auto cells = split(row, ',');
        if (cells.size() != dim)
            throw ParseError("matrix is not square: expected " + std::to_string(dim) +
                             " entries per row");
        for (const auto& cell : cells) entries.push_back(parse_int(cell));
    }
    return IntMatrix(static_cast<int>(dim), std::move(entries));
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.dim(); ++i) {
        if (i) os << ';';
        for (int j = 0; j < m.dim(); ++j) {
            if (j) os << ',';
            os << m.at(i, j).get_str();
        }
    }
    return os.str();
}

Rat parse_rat(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError("empty rational literal");
    if (auto pos = t.find('/'); pos != std::string::npos) {
        Int num = parse_int(t.substr(0, pos));
        Int den = parse_int(t.substr(pos + 1));
        if (den == 0) throw ParseError("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    if (t.find('.') == std::string::npos && t.find('e') == std::string::npos &&
        t.find('E') == std::string::npos)
        return Rat(parse_int(t));

    // decimal with optional exponent: [+-] digits [. digits] [eE [+-] digits]
    size_t i = 0;
    bool neg = false;
    if (t[i] == '+' || t[i] == '-') {
        neg = (t[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
    if (i < t.size() && t[i] == '.') {
        ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            digits += t[i++];
            ++frac_len;
        }
    }
    if (digits.empty()) throw ParseError("bad rational literal: '" + s + "'");
    long exp10 = 0;
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        if (i == t.size()) throw ParseError("bad exponent in '" + s + "'");
        bool eneg = false;
        if (t[i] == '+' || t[i] == '-') {
            eneg = (t[i] == '-');
            ++i;
        }
        std::string ed;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ed += t[i++];
        if (ed.empty() || ed.size() > 6) throw ParseError("bad exponent in '" + s + "'");
        exp10 = std::stol(ed);
        if (eneg) exp10 = -exp10;
    }
    if (i != t.size()) throw ParseError("bad rational literal: '" + s + "'");
    Int mantissa(digits, 10); // explicit base: leading zeros must not mean octal
    if (neg) mantissa = -mantissa;
    long net = exp10 - frac_len;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    Rat r = (net >= 0) ? Rat(mantissa * pow10) : Rat(mantissa, pow10);
    r.canonicalize();
    return r;
}

} // namespace dyndeg
