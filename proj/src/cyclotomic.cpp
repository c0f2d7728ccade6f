#include "artin/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

int euler_phi(int N) {
    if (N < 1) throw DomainError("euler_phi needs N >= 1");
    int result = N, n = N;
    for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const IntPoly& cyclotomic_polynomial(int N) {
    if (N < 1) throw DomainError("cyclotomic_polynomial needs N >= 1");
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // x^N - 1 divided by the product of Phi_d over proper divisors d.
    std::vector<Int> xn(N + 1, Int(0));
    xn[0] = -1;
    xn[N] = 1;
    IntPoly num{std::move(xn)};
    for (int d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        auto sub = cache.find(d);
        if (sub == cache.end()) {
            // Fill recursively; the mutex is already held, do the work inline.
            std::vector<Int> xd(d + 1, Int(0));
            xd[0] = -1;
            xd[d] = 1;
            IntPoly numd{std::move(xd)};
            for (int e = 1; e < d; ++e)
                if (d % e == 0) numd = poly_div_exact(numd, cache.at(e));
            sub = cache.emplace(d, std::move(numd)).first;
        }
        num = poly_div_exact(num, sub->second);
    }
    return cache.emplace(N, std::move(num)).first->second;
}

namespace {

// Remainder of a rational polynomial mod the (monic, integer) Phi_N.
void reduce_mod_phi(std::vector<Rat>& p, int N) {
    const IntPoly& phi = cyclotomic_polynomial(N);
    const int d = phi.degree();
    for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        p[i] = 0;
        for (int j = 0; j < d; ++j) {
            if (phi.c[j] != 0) p[i - d + j] -= c * Rat(phi.c[j]);
        }
    }
    p.resize(d, Rat(0));
    for (auto& x : p) x.canonicalize();
}

int poly_deg(const std::vector<Rat>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Extended Euclid over Q[t]: returns (g, u) with u*a + v*m = g, g the gcd.
// Only u is needed (inverse of a mod m).
std::pair<std::vector<Rat>, std::vector<Rat>> ext_gcd_mod(const std::vector<Rat>& a,
                                                          const std::vector<Rat>& m) {
    std::vector<Rat> r0 = m, r1 = a;
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
    while (poly_deg(r1) >= 0) {
        // divmod r0 by r1
        int d1 = poly_deg(r1);
        std::vector<Rat> rem = r0;
        std::vector<Rat> q(std::max<int>(poly_deg(r0) - d1 + 1, 1), Rat(0));
        for (int i = poly_deg(rem); i >= d1; --i) {
            if (rem[i] == 0) continue;
            Rat coef = rem[i] / r1[d1];
            q[i - d1] = coef;
            for (int j = 0; j <= d1; ++j) rem[i - d1 + j] -= coef * r1[j];
            rem[i] = 0;
        }
        // u_next = u0 - q*u1
        std::vector<Rat> qu(q.size() + u1.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
        }
        std::vector<Rat> u2(std::max(u0.size(), qu.size()), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] += u0[i];
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {r0, u0};
}

} // namespace

CycNum CycNum::zero(int order) { return from_rat(Rat(0), order); }
CycNum CycNum::one(int order) { return from_rat(Rat(1), order); }

CycNum CycNum::from_rat(const Rat& r, int order) {
    CycNum v;
    v.order_ = order;
    v.coeffs_.assign(euler_phi(order), Rat(0));
    v.coeffs_[0] = r;
    if (order == 1) {
        // basis is the single power zeta_1^0 = 1, nothing to reduce
    }
    return v;
}

CycNum CycNum::root_of_unity(int N, long k) {
    k %= N;
    if (k < 0) k += N;
    std::vector<Rat> poly(static_cast<size_t>(k) + 1, Rat(0));
    poly[static_cast<size_t>(k)] = 1;
    return from_poly(N, std::move(poly));
}

CycNum CycNum::from_coeffs(int order, std::vector<Rat> coeffs) {
    if (static_cast<int>(coeffs.size()) != euler_phi(order))
        throw DomainError("coefficient vector length must be phi(order)");
    for (auto& c : coeffs) c.canonicalize();
    CycNum v;
    v.order_ = order;
    v.coeffs_ = std::move(coeffs);
    return v;
}

CycNum CycNum::from_poly(int order, std::vector<Rat> poly) {
    reduce_mod_phi(poly, order);
    CycNum v;
    v.order_ = order;
    v.coeffs_ = std::move(poly);
    return v;
}

bool CycNum::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational");
    return coeffs_[0];
}

CycNum CycNum::lifted_to(int N) const {
    if (N == order_) return *this;
    if (N % order_ != 0) throw OrderMismatchError("lift target must be a multiple of the order");
    const long step = N / order_;
    std::vector<Rat> poly(static_cast<size_t>((coeffs_.size() - 1) * step + 1), Rat(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
    return from_poly(N, std::move(poly));
}

CycNum CycNum::operator-() const {
    CycNum v = *this;
    for (auto& c : v.coeffs_) c = -c;
    return v;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (order_ != o.order_) throw OrderMismatchError("cyclotomic orders differ; lift explicitly");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (order_ != o.order_) throw OrderMismatchError("cyclotomic orders differ; lift explicitly");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) throw OrderMismatchError("cyclotomic orders differ; lift explicitly");
    std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return CycNum::from_poly(a.order_, std::move(prod));
}

CycNum CycNum::scaled(const Rat& r) const {
    CycNum v = *this;
    for (auto& c : v.coeffs_) c *= r;
    return v;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZeroError("zero has no inverse");
    const IntPoly& phi = cyclotomic_polynomial(order_);
    std::vector<Rat> m(phi.c.size());
    for (size_t i = 0; i < phi.c.size(); ++i) m[i] = Rat(phi.c[i]);
    auto [g, u] = ext_gcd_mod(coeffs_, m);
    int dg = poly_deg(g);
    if (dg != 0) throw DomainError("inverse failed: representative shares a factor with the modulus");
    Rat scale = Rat(1) / g[0];
    for (auto& c : u) c *= scale;
    return from_poly(order_, std::move(u));
}

CycNum CycNum::conjugate() const {
    std::vector<Rat> poly(static_cast<size_t>(order_), Rat(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        size_t e = (j == 0) ? 0 : static_cast<size_t>((order_ - static_cast<long>(j)) % order_);
        poly[e] += coeffs_[j];
    }
    return from_poly(order_, std::move(poly));
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double w = 2.0 * std::numbers::pi / order_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double c = coeffs_[j].get_d();
        acc += std::complex<double>(c * std::cos(w * j), c * std::sin(w * j));
    }
    return acc;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = mpq_cmp(a.coeffs_[i].get_mpq_t(), b.coeffs_[i].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (any) os << " + ";
        os << coeffs_[j].get_str();
        if (j >= 1) {
            os << "*z" << order_;
            if (j > 1) os << "^" << j;
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

std::pair<CycNum, CycNum> lifted_pair(const CycNum& a, const CycNum& b) {
    int n = common_order(a.order(), b.order());
    return {a.lifted_to(n), b.lifted_to(n)};
}

} // namespace artin
