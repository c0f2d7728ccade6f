#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "artin/characters.hpp"
#include "artin/field_spec.hpp"

namespace artin {

// Polynomial in t with exact cyclotomic coefficients, low to high.
using CycPoly = std::vector<CycNum>;

CycPoly cyc_poly_mul(const CycPoly& a, const CycPoly& b);
CycPoly cyc_poly_power_substitute(const CycPoly& a, int l); // t -> t^l
bool cyc_poly_equal(const CycPoly& a, const CycPoly& b);    // lifts orders, pads zeros
std::complex<double> cyc_poly_eval(const CycPoly& a, std::complex<double> t);
std::string cyc_poly_str(const CycPoly& a);

// Coefficients of det(E - tA) at one conjugacy class: c_0 = 1, c_k = (-1)^k e_k
// with the elementary symmetric functions e_k obtained from the power sums
// chi(class of sigma^nu) through Newton's identities. The representation
// matrices themselves are never formed.
struct EulerFactorData {
    CycPoly coeffs; // length degree+1
};

EulerFactorData euler_charpoly(const ClassFunction& chi, const ClassData& cd, int class_idx);

// Numerical check that every root of the factor polynomial has modulus 1.
bool unit_root_check(const EulerFactorData& f, double tol = 1e-9);

struct LSeriesResult {
    std::complex<double> value{1.0, 0.0};
    long factor_count = 0;
    long skipped = 0; // ramified primes
};

// Truncated Euler product over unramified p <= limit with the factor at p
// chosen by the observed cycle type. Characters that are not constant on a
// merged multi-class key are rejected. Factors are combined in ascending
// prime order; the parallel path reduces fixed chunks in that same order,
// so results do not depend on the thread count.
LSeriesResult truncated_L(const ClassFunction& chi, const FieldSpec& spec,
                          std::complex<double> s, uint64_t limit);
LSeriesResult truncated_L_serial(const ClassFunction& chi, const FieldSpec& spec,
                                 std::complex<double> s, uint64_t limit);

// Double sum of chi(p^nu) / (nu * p^(nu s)) over unramified p <= limit and
// nu with p^nu below the cutoff max(limit^2, 2^24); exp of this agrees with
// the truncated product built from the same primes.
LSeriesResult log_L(const ClassFunction& chi, const FieldSpec& spec, std::complex<double> s,
                    uint64_t limit);

// Exact per-class identity behind the induction theorem: the characteristic
// polynomial of the induced character at sigma equals the product over
// <sigma>-orbits on the right cosets of H of the subgroup factor at
// t*sigma^l*t^{-1} with t substituted by t^l. Returns both sides.
std::pair<CycPoly, CycPoly> induced_charpoly_identity(const Group& g, const ClassData& cd,
                                                      const SubgroupContext& h,
                                                      const ClassFunction& psi, int sigma_elem);

// Dedekind zeta Euler factor of the monogenic field at p: the product of
// (1 - p^{-d s})^{-1} over the residue degrees d.
std::complex<double> zeta_euler_factor(const FieldSpec& spec, uint64_t p,
                                       std::complex<double> s);

} // namespace artin
