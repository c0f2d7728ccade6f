#include "artin/lseries.hpp"

#include <algorithm>
#include <cmath>

#include "artin/errors.hpp"
#include "artin/primes.hpp"

namespace artin {

CycPoly cyc_poly_mul(const CycPoly& a, const CycPoly& b) {
    if (a.empty() || b.empty()) return {};
    int ord = 1;
    for (const CycNum& c : a) ord = common_order(ord, c.order());
    for (const CycNum& c : b) ord = common_order(ord, c.order());
    CycPoly r(a.size() + b.size() - 1, CycNum::zero(ord));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        CycNum ai = a[i].lifted_to(ord);
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += ai * b[j].lifted_to(ord);
        }
    }
    return r;
}

CycPoly cyc_poly_power_substitute(const CycPoly& a, int l) {
    if (a.empty()) return {};
    CycPoly r((a.size() - 1) * l + 1, CycNum::zero(a[0].order()));
    for (size_t i = 0; i < a.size(); ++i) r[i * l] = a[i];
    return r;
}

bool cyc_poly_equal(const CycPoly& a, const CycPoly& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        CycNum x = i < a.size() ? a[i] : CycNum::zero(1);
        CycNum y = i < b.size() ? b[i] : CycNum::zero(1);
        auto [lx, ly] = lifted_pair(x, y);
        if (!(lx == ly)) return false;
    }
    return true;
}

std::complex<double> cyc_poly_eval(const CycPoly& a, std::complex<double> t) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + it->to_complex();
    return acc;
}

std::string cyc_poly_str(const CycPoly& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + "]";
}

EulerFactorData euler_charpoly(const ClassFunction& chi, const ClassData& cd, int class_idx) {
    if (chi.size() != cd.count()) throw GroupError("character does not match the class data");
    if (class_idx < 0 || class_idx >= static_cast<int>(cd.count()))
        throw DomainError("class index out of range");
    const CycNum& deg_val = chi.values[0];
    if (!deg_val.is_rational() || !is_integer(deg_val.rational_value()) ||
        deg_val.rational_value() <= 0)
        throw NotACharacterError("not a character: degree is not a positive integer");
    const long f = to_long(deg_val.rational_value().get_num());

    int ord = 1;
    for (const CycNum& v : chi.values) ord = common_order(ord, v.order());

    // power sums p_nu = chi(class of sigma^nu)
    std::vector<CycNum> power(f + 1, CycNum::zero(ord));
    for (long nu = 1; nu <= f; ++nu)
        power[nu] = chi.values[cd.power_class(class_idx, nu)].lifted_to(ord);

    // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<CycNum> elem(f + 1, CycNum::zero(ord));
    elem[0] = CycNum::one(ord);
    for (long k = 1; k <= f; ++k) {
        CycNum acc = CycNum::zero(ord);
        for (long i = 1; i <= k; ++i) {
            CycNum term = elem[k - i] * power[i];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        elem[k] = acc.scaled(frac(1, k));
        for (const Rat& c : elem[k].coeffs())
            if (!is_integer(c))
                throw NotACharacterError("not a character: non-integral symmetric function");
    }

    EulerFactorData out;
    out.coeffs.reserve(f + 1);
    for (long k = 0; k <= f; ++k)
        out.coeffs.push_back((k % 2 == 0) ? elem[k] : -elem[k]);
    return out;
}

bool unit_root_check(const EulerFactorData& f, double tol) {
    // Durand-Kerner on the reversed polynomial (roots of det(E - tA) are the
    // reciprocals of the eigenvalues; both have modulus 1 when all is well).
    std::vector<std::complex<double>> c;
    for (const CycNum& v : f.coeffs) c.push_back(v.to_complex());
    while (c.size() > 1 && std::abs(c.back()) < 1e-14) c.pop_back();
    const size_t n = c.size() - 1;
    if (n == 0) return true;
    for (auto& v : c) v /= c.back();
    std::vector<std::complex<double>> roots(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur(1.0, 0.0);
    for (size_t i = 0; i < n; ++i) {
        cur *= seed;
        roots[i] = cur;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> num(0.0, 0.0);
            for (auto it = c.rbegin(); it != c.rend(); ++it) num = num * roots[i] + *it;
            std::complex<double> den(1.0, 0.0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) den *= roots[i] - roots[j];
            std::complex<double> delta = num / den;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    for (const auto& r : roots)
        if (std::abs(std::abs(r) - 1.0) > tol) return false;
    return true;
}

namespace {

// One factor polynomial per observable cycle-type key, with the class chosen
// from the key; requires the character to be constant on merged classes.
struct FactorTable {
    std::map<std::vector<int>, std::vector<std::complex<double>>> poly_by_type;
    std::map<std::vector<int>, int> class_by_type;
};

FactorTable build_factor_table(const ClassFunction& chi, const FieldSpec& spec) {
    if (chi.group_order != spec.galois.order() || chi.size() != spec.classes.count())
        throw GroupError("character does not live on the field's Galois group");
    FactorTable tab;
    for (const auto& [type, classes] : spec.type_to_classes) {
        for (size_t i = 1; i < classes.size(); ++i) {
            auto [a, b] = lifted_pair(chi.values[classes[0]], chi.values[classes[i]]);
            if (!(a == b))
                throw UnobservableCharacterError(
                    "character not observable for this field: classes sharing cycle type " +
                    cycle_type_key(type) + " carry different values");
        }
        EulerFactorData fd = euler_charpoly(chi, spec.classes, classes[0]);
        std::vector<std::complex<double>> poly;
        poly.reserve(fd.coeffs.size());
        for (const CycNum& v : fd.coeffs) poly.push_back(v.to_complex());
        tab.poly_by_type.emplace(type, std::move(poly));
        tab.class_by_type.emplace(type, classes[0]);
    }
    return tab;
}

std::complex<double> eval_poly(const std::vector<std::complex<double>>& c,
                               std::complex<double> t) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void require_convergent(std::complex<double> s) {
    if (s.real() <= 1.0)
        throw DomainError("evaluation point must have Re(s) > 1");
}

} // namespace

LSeriesResult truncated_L_serial(const ClassFunction& chi, const FieldSpec& spec,
                                 std::complex<double> s, uint64_t limit) {
    require_convergent(s);
    FactorTable tab = build_factor_table(chi, spec);
    LSeriesResult res;
    if (limit < 2) return res; // empty product
    for (uint64_t p : prime_sieve(limit)) {
        if (mpz_divisible_ui_p(spec.disc.get_mpz_t(), p)) {
            ++res.skipped;
            continue;
        }
        std::vector<int> type = frobenius_cycle_type(spec, p);
        std::complex<double> t = std::exp(-s * std::log(static_cast<double>(p)));
        res.value /= eval_poly(tab.poly_by_type.at(type), t);
        ++res.factor_count;
    }
    return res;
}

LSeriesResult truncated_L(const ClassFunction& chi, const FieldSpec& spec,
                          std::complex<double> s, uint64_t limit) {
    require_convergent(s);
    FactorTable tab = build_factor_table(chi, spec);
    LSeriesResult res;
    if (limit < 2) return res;
    std::vector<uint64_t> primes = prime_sieve_parallel(limit);
    const long nchunk = 512;
    const long nprimes = static_cast<long>(primes.size());
    const long chunks = (nprimes + nchunk - 1) / nchunk;
    std::vector<std::complex<double>> part(chunks, std::complex<double>(1.0, 0.0));
    std::vector<long> cnt(chunks, 0), skip(chunks, 0);
    std::string pending_error;

#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < chunks; ++c) {
        try {
            for (long i = c * nchunk; i < std::min((c + 1) * nchunk, nprimes); ++i) {
                uint64_t p = primes[i];
                if (mpz_divisible_ui_p(spec.disc.get_mpz_t(), p)) {
                    ++skip[c];
                    continue;
                }
                std::vector<int> type = frobenius_cycle_type(spec, p);
                std::complex<double> t = std::exp(-s * std::log(static_cast<double>(p)));
                part[c] /= eval_poly(tab.poly_by_type.at(type), t);
                ++cnt[c];
            }
        } catch (const std::exception& e) {
#pragma omp critical
            pending_error = e.what();
        }
    }
    if (!pending_error.empty()) throw InconsistentGaloisError(pending_error);
    for (long c = 0; c < chunks; ++c) {
        res.value *= part[c];
        res.factor_count += cnt[c];
        res.skipped += skip[c];
    }
    return res;
}

LSeriesResult log_L(const ClassFunction& chi, const FieldSpec& spec, std::complex<double> s,
                    uint64_t limit) {
    require_convergent(s);
    FactorTable tab = build_factor_table(chi, spec); // validates observability
    int ord = 1;
    for (const CycNum& v : chi.values) ord = common_order(ord, v.order());
    // chi(p^nu) per (key class, nu); nu ranges are tiny, precompute lazily.
    LSeriesResult res;
    res.value = 0.0;
    if (limit < 2) return res;
    const double cutoff =
        std::max(static_cast<double>(limit) * static_cast<double>(limit), 16777216.0);
    std::map<std::pair<int, long>, std::complex<double>> chi_pow;
    auto chi_at_power = [&](int cls, long nu) {
        auto key = std::make_pair(cls, nu);
        auto it = chi_pow.find(key);
        if (it != chi_pow.end()) return it->second;
        std::complex<double> v = chi.values[spec.classes.power_class(cls, nu)].to_complex();
        chi_pow.emplace(key, v);
        return v;
    };
    for (uint64_t p : prime_sieve(limit)) {
        if (mpz_divisible_ui_p(spec.disc.get_mpz_t(), p)) {
            ++res.skipped;
            continue;
        }
        std::vector<int> type = frobenius_cycle_type(spec, p);
        int cls = tab.class_by_type.at(type);
        const double logp = std::log(static_cast<double>(p));
        double pnu = static_cast<double>(p);
        for (long nu = 1; pnu <= cutoff; ++nu, pnu *= static_cast<double>(p)) {
            std::complex<double> denom = std::exp(s * (static_cast<double>(nu) * logp));
            res.value += chi_at_power(cls, nu) / (static_cast<double>(nu) * denom);
        }
        ++res.factor_count;
    }
    return res;
}

std::pair<CycPoly, CycPoly> induced_charpoly_identity(const Group& g, const ClassData& cd,
                                                      const SubgroupContext& h,
                                                      const ClassFunction& psi, int sigma_elem) {
    ClassFunction chi_ind = induce_character(g, cd, h, psi);
    CycPoly left = euler_charpoly(chi_ind, cd, cd.class_of[sigma_elem]).coeffs;

    int ord = 1;
    for (const CycNum& v : psi.values) ord = common_order(ord, v.order());
    CycPoly right{CycNum::one(ord)};
    const long ncosets = h.sub.index();
    std::vector<char> done(ncosets, 0);
    for (long start = 0; start < ncosets; ++start) {
        if (done[start]) continue;
        // orbit of the coset H*S_start under right multiplication by sigma
        int l = 0;
        long cur = start;
        do {
            done[cur] = 1;
            int moved = g.mul(h.sub.coset_reps[cur], sigma_elem);
            cur = h.sub.coset_of[moved];
            ++l;
        } while (cur != start);
        // u = t sigma^l t^{-1} lies in H for the orbit representative t
        int t = h.sub.coset_reps[start];
        int sig_l = g.identity();
        for (int i = 0; i < l; ++i) sig_l = g.mul(sig_l, sigma_elem);
        int u = g.mul(g.mul(t, sig_l), g.inv(t));
        int hu = h.from_parent[u];
        if (hu < 0) throw Error("orbit representative power left the subgroup");
        CycPoly factor = euler_charpoly(psi, h.classes, h.classes.class_of[hu]).coeffs;
        right = cyc_poly_mul(right, cyc_poly_power_substitute(factor, l));
    }
    return {std::move(left), std::move(right)};
}

std::complex<double> zeta_euler_factor(const FieldSpec& spec, uint64_t p,
                                       std::complex<double> s) {
    require_convergent(s);
    std::vector<int> type = frobenius_cycle_type(spec, p); // ramified throws
    std::complex<double> acc(1.0, 0.0);
    for (int d : type) {
        std::complex<double> td =
            std::exp(-s * (static_cast<double>(d) * std::log(static_cast<double>(p))));
        acc /= (1.0 - td);
    }
    return acc;
}

} // namespace artin
