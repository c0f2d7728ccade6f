#pragma once

#include <string>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

// Dense integer polynomial, coefficients low to high, no trailing zeros.
// The zero polynomial has an empty coefficient vector (degree -1).
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Int& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Int eval(const Int& x) const;
    IntPoly derivative() const;

    // Accepts "x^3 - 2" style or comma-separated coefficients low to high
    // ("-2,0,0,1"). Both syntaxes are valid everywhere a polynomial is read.
    static IntPoly parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division; throws DomainError if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);

// Resultant of a and b via a fraction-free (Bareiss) determinant of the
// Sylvester matrix.
Int resultant(const IntPoly& a, const IntPoly& b);

// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f), exact.
Int poly_discriminant(const IntPoly& f);

} // namespace artin
