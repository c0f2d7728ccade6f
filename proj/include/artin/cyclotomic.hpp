#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "artin/intpoly.hpp"
#include "artin/rational.hpp"

namespace artin {

// N-th cyclotomic polynomial, computed by exact division of x^N - 1 by the
// lower-level factors. Monic, integer coefficients, degree phi(N).
const IntPoly& cyclotomic_polynomial(int N);

int euler_phi(int N);

// An element of Q(zeta_N), stored as the canonical residue mod Phi_N on the
// power basis 1, zeta, ..., zeta^{phi(N)-1}. Canonical form makes equality a
// plain coefficient comparison. Values are immutable in spirit: every
// operation returns a fresh value, so sharing across threads is safe.
//
// Arithmetic requires equal orders; callers lift explicitly (lifted_to /
// common_order) when mixing fields. Silent promotion is deliberately absent.
class CycNum {
public:
    CycNum() : order_(1), coeffs_(1, Rat(0)) {}

    static CycNum zero(int order = 1);
    static CycNum one(int order = 1);
    static CycNum from_rat(const Rat& r, int order = 1);
    static CycNum from_int(long v, int order = 1) { return from_rat(Rat(v), order); }
    // zeta_N^k
    static CycNum root_of_unity(int N, long k);
    // Coefficient vector of length phi(order), already canonical or reduced here.
    static CycNum from_coeffs(int order, std::vector<Rat> coeffs);
    // Arbitrary-degree polynomial in zeta_order, reduced mod Phi_order.
    static CycNum from_poly(int order, std::vector<Rat> poly);

    int order() const { return order_; }
    std::span<const Rat> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws DomainError when the value is not rational.
    Rat rational_value() const;

    // Image under zeta_M -> zeta_N^{N/M}; requires M | N.
    CycNum lifted_to(int N) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);

    CycNum scaled(const Rat& r) const;

    // Multiplicative inverse via extended gcd with Phi_N; zero input throws.
    CycNum inverse() const;

    // Field automorphism zeta -> zeta^{N-1} (complex conjugation on values).
    CycNum conjugate() const;

    std::complex<double> to_complex() const;

    bool operator==(const CycNum&) const = default;

    // Total order used for deterministic table layouts: (order, coeff lex).
    static int compare(const CycNum& a, const CycNum& b);

    std::string str() const;

private:
    int order_;
    std::vector<Rat> coeffs_;
};

inline int common_order(int a, int b) { return to_long(lcm(Int(a), Int(b))); }

// Lift both to lcm of the orders; the explicit spelling at call sites is the
// point, see the class comment.
std::pair<CycNum, CycNum> lifted_pair(const CycNum& a, const CycNum& b);

} // namespace artin
