#include "artin/factor_mod.hpp"

#include <algorithm>

#include "artin/errors.hpp"

namespace artin {

namespace {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
using MPoly = std::vector<uint64_t>;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t pow_mod_u(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return pow_mod_u(a, p - 2, p); }

void trim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly mul(const MPoly& a, const MPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % p;
    }
    trim(r);
    return r;
}

// remainder of a mod m (m nonzero)
MPoly rem(MPoly a, const MPoly& m, uint64_t p) {
    const int dm = deg(m);
    uint64_t lead_inv = inv_mod(m.back(), p);
    while (deg(a) >= dm) {
        int da = deg(a);
        uint64_t c = mul_mod(a.back(), lead_inv, p);
        for (int j = 0; j <= dm; ++j) {
            uint64_t sub = mul_mod(c, m[j], p);
            uint64_t& tgt = a[da - dm + j];
            tgt = (tgt + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

MPoly quot(MPoly a, const MPoly& m, uint64_t p) {
    const int dm = deg(m);
    if (deg(a) < dm) return {};
    MPoly q(deg(a) - dm + 1, 0);
    uint64_t lead_inv = inv_mod(m.back(), p);
    while (deg(a) >= dm) {
        int da = deg(a);
        uint64_t c = mul_mod(a.back(), lead_inv, p);
        q[da - dm] = c;
        for (int j = 0; j <= dm; ++j) {
            uint64_t sub = mul_mod(c, m[j], p);
            uint64_t& tgt = a[da - dm + j];
            tgt = (tgt + p - sub) % p;
        }
        trim(a);
    }
    trim(q);
    return q;
}

MPoly monic(MPoly f, uint64_t p) {
    if (f.empty()) return f;
    uint64_t s = inv_mod(f.back(), p);
    for (auto& c : f) c = mul_mod(c, s, p);
    return f;
}

MPoly gcd(MPoly a, MPoly b, uint64_t p) {
    while (!b.empty()) {
        MPoly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

MPoly derivative(const MPoly& f, uint64_t p) {
    MPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(mul_mod(f[i], i % p, p));
    trim(d);
    return d;
}

MPoly pow_mod_poly(MPoly base, uint64_t e, const MPoly& m, uint64_t p) {
    MPoly r{1};
    base = rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

} // namespace

std::vector<int> factor_degrees(const IntPoly& f, uint64_t p) {
    if (f.degree() < 1) throw DomainError("factor_degrees needs degree >= 1");
    if (!f.is_monic()) throw DomainError("factor_degrees expects a monic polynomial");
    if (p < 2) throw DomainError("modulus must be prime");

    MPoly g(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i)
        g[i] = mpz_fdiv_ui(f.c[i].get_mpz_t(), p);
    // monic, so the degree survives reduction
    if (deg(g) != f.degree()) throw DomainError("reduction lost the leading coefficient");

    // p | disc(f) exactly when f mod p has a repeated factor.
    MPoly d = derivative(g, p);
    if (d.empty() || deg(gcd(g, d, p)) > 0)
        throw RamifiedPrimeError("ramified prime excluded: " + std::to_string(p));

    std::vector<int> degrees;
    // h tracks x^{p^d} mod g via repeated p-th powering of the previous stage.
    MPoly h{0, 1};
    int d_stage = 0;
    while (deg(g) >= 2 * (d_stage + 1)) {
        ++d_stage;
        h = pow_mod_poly(std::move(h), p, g, p);
        MPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p; // h - x
        trim(diff);
        MPoly common = gcd(g, diff, p);
        if (deg(common) > 0) {
            for (int i = 0; i < deg(common) / d_stage; ++i) degrees.push_back(d_stage);
            g = quot(std::move(g), common, p);
            if (deg(g) > 0) h = rem(std::move(h), g, p);
        }
    }
    if (deg(g) > 0) degrees.push_back(deg(g));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

} // namespace artin
