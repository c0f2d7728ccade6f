#include "artin/intpoly.hpp"

#include <cctype>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return IntPoly(std::move(d));
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPoly(std::move(r));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    std::vector<Int> rem = a.c;
    int db = b.degree();
    if (a.degree() < db) {
        if (!a.is_zero()) throw DomainError("polynomial division is not exact");
        return IntPoly();
    }
    std::vector<Int> q(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Int coef = rem[i] / b.lead();
        if (coef * b.lead() != rem[i]) throw DomainError("polynomial division is not exact");
        q[i - db] = coef;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= coef * b.c[j];
    }
    for (const Int& r : rem)
        if (r != 0) throw DomainError("polynomial division is not exact");
    return IntPoly(std::move(q));
}

namespace {

// Bareiss fraction-free elimination; determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const int n = a.degree(), m = b.degree();
    if (n == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.c[0].get_mpz_t(), m);
        return r;
    }
    if (m == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.c[0].get_mpz_t(), n);
        return r;
    }
    const size_t dim = n + m;
    std::vector<std::vector<Int>> s(dim, std::vector<Int>(dim, Int(0)));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[row][row + n - j] = a.c[j];
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[m + row][row + m - j] = b.c[j];
    return bareiss_det(std::move(s));
}

Int poly_discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw DomainError("discriminant needs degree >= 1");
    if (n == 1) return 1;
    Int res = resultant(f, f.derivative());
    Int d = res / f.lead();
    if (d * f.lead() != res) throw DomainError("discriminant division not exact");
    return ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? d : Int(-d);
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

IntPoly parse_terms(const std::string& s) {
    // sequence of terms: [+-] [coef] [x [^ exp]]
    std::vector<Int> coeffs;
    auto bump = [&](size_t e, const Int& v) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, Int(0));
        coeffs[e] += v;
    };
    size_t i = 0;
    skip_ws(s, i);
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            throw DomainError("polynomial parse error near '" + s.substr(i) + "'");
        }
        first = false;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        skip_ws(s, i);
        bool has_var = false;
        size_t exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X' || s[i] == 't')) {
            has_var = true;
            ++i;
            skip_ws(s, i);
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws(s, i);
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
                if (ed.empty()) throw DomainError("polynomial parse error: missing exponent");
                exp = std::stoul(ed);
            }
            if (i < s.size() && s[i] == '*') {
                throw DomainError("polynomial parse error: coefficient must precede the variable");
            }
        }
        if (digits.empty() && !has_var)
            throw DomainError("polynomial parse error near '" + s.substr(i) + "'");
        Int coef = digits.empty() ? Int(1) : Int(digits);
        if (i < s.size() && s[i] == '*') { // "2*x^3" form
            ++i;
            skip_ws(s, i);
            if (i < s.size() && (s[i] == 'x' || s[i] == 'X' || s[i] == 't')) {
                has_var = true;
                ++i;
                skip_ws(s, i);
                exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    skip_ws(s, i);
                    std::string ed;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
                    if (ed.empty()) throw DomainError("polynomial parse error: missing exponent");
                    exp = std::stoul(ed);
                }
            } else {
                throw DomainError("polynomial parse error after '*'");
            }
        }
        bump(has_var ? exp : 0, sign * coef);
        skip_ws(s, i);
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly IntPoly::parse(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<Int> coeffs;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t a = 0, b = tok.size();
            while (a < b && std::isspace(static_cast<unsigned char>(tok[a]))) ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(tok[b - 1]))) --b;
            if (a == b) throw DomainError("empty coefficient in polynomial list");
            coeffs.emplace_back(tok.substr(a, b - a));
        }
        return IntPoly(std::move(coeffs));
    }
    return parse_terms(text);
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        const Int& v = c[e];
        if (v == 0) continue;
        Int a = abs(v);
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += (v < 0) ? " - " : " + ";
        }
        if (e == 0 || a != 1) out += a.get_str();
        if (e >= 1) {
            out += "x";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace artin
