#include "artin/field_spec.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "artin/cyclotomic.hpp"
#include "artin/errors.hpp"
#include "artin/factor_mod.hpp"
#include "artin/log_integral.hpp"
#include "artin/primes.hpp"

namespace artin {

std::string cycle_type_key(const std::vector<int>& type) {
    std::string s;
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(type[i]);
    }
    return s;
}

FieldSpec FieldSpec::make(IntPoly poly, Group galois) {
    if (!poly.is_monic()) throw DomainError("field polynomial must be monic");
    if (poly.degree() != galois.degree())
        throw GroupError("group degree must equal the polynomial degree");
    FieldSpec spec;
    spec.poly = std::move(poly);
    spec.galois = std::move(galois);
    spec.classes = conjugacy_classes(spec.galois);
    spec.disc = poly_discriminant(spec.poly);
    if (spec.disc == 0) throw DomainError("polynomial has repeated roots (discriminant 0)");
    for (int c = 0; c < static_cast<int>(spec.classes.count()); ++c) {
        std::vector<int> type = spec.galois.elem(spec.classes.reps[c]).cycle_type();
        spec.type_to_classes[type].push_back(c);
    }
    return spec;
}

std::vector<int> frobenius_cycle_type(const FieldSpec& spec, uint64_t p) {
    std::vector<int> degs = factor_degrees(spec.poly, p); // ascending; ramified throws
    std::sort(degs.rbegin(), degs.rend());
    if (!spec.type_to_classes.count(degs))
        throw InconsistentGaloisError("galois group inconsistent with polynomial at p=" +
                                      std::to_string(p) + " (pattern " + cycle_type_key(degs) + ")");
    return degs;
}

long cyclotomic_frobenius(long m, uint64_t p) {
    if (m < 1) throw DomainError("modulus must be >= 1");
    if (std::gcd<uint64_t>(p % m, m) != 1)
        throw RamifiedPrimeError("ramified prime excluded: " + std::to_string(p));
    return static_cast<long>(p % m);
}

namespace {

DensityReport finish_report(const FieldSpec& spec, uint64_t limit,
                            std::map<std::string, long>&& counts, long total, long skipped) {
    DensityReport rep;
    rep.limit = limit;
    rep.total = total;
    rep.ramified_skipped = skipped;
    rep.li_value = log_integral(static_cast<double>(limit));
    const long n = spec.galois.order();
    for (const auto& [type, cls] : spec.type_to_classes) {
        KeyStats st;
        Rat pred(0);
        for (int c : cls) pred += frac(spec.classes.sizes[c], n);
        st.predicted = pred;
        auto it = counts.find(cycle_type_key(type));
        st.count = (it == counts.end()) ? 0 : it->second;
        st.empirical = (total > 0) ? static_cast<double>(st.count) / total : 0.0;
        st.li_predicted = pred.get_d() * rep.li_value;
        rep.per_key.emplace(cycle_type_key(type), std::move(st));
    }
    return rep;
}

} // namespace

DensityReport sample_frobenius_serial(const FieldSpec& spec, uint64_t limit) {
    if (limit < 2) throw DomainError("sampling limit must be >= 2");
    std::map<std::string, long> counts;
    long total = 0, skipped = 0;
    for (uint64_t p : prime_sieve(limit)) {
        if (mpz_divisible_ui_p(spec.disc.get_mpz_t(), p)) {
            ++skipped;
            continue;
        }
        counts[cycle_type_key(frobenius_cycle_type(spec, p))]++;
        ++total;
    }
    return finish_report(spec, limit, std::move(counts), total, skipped);
}

DensityReport sample_frobenius(const FieldSpec& spec, uint64_t limit) {
    if (limit < 2) throw DomainError("sampling limit must be >= 2");
    std::vector<uint64_t> primes = prime_sieve_parallel(limit);
    const long nchunk = 256;
    const long nprimes = static_cast<long>(primes.size());
    const long chunks = (nprimes + nchunk - 1) / nchunk;
    std::vector<std::map<std::string, long>> chunk_counts(chunks);
    std::vector<long> chunk_total(chunks, 0), chunk_skipped(chunks, 0);
    std::string pending_error;

#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < chunks; ++c) {
        try {
            for (long i = c * nchunk; i < std::min((c + 1) * nchunk, nprimes); ++i) {
                uint64_t p = primes[i];
                if (mpz_divisible_ui_p(spec.disc.get_mpz_t(), p)) {
                    ++chunk_skipped[c];
                    continue;
                }
                chunk_counts[c][cycle_type_key(frobenius_cycle_type(spec, p))]++;
                ++chunk_total[c];
            }
        } catch (const std::exception& e) {
#pragma omp critical
            pending_error = e.what();
        }
    }
    if (!pending_error.empty()) throw InconsistentGaloisError(pending_error);

    std::map<std::string, long> counts;
    long total = 0, skipped = 0;
    for (long c = 0; c < chunks; ++c) {
        for (const auto& [k, v] : chunk_counts[c]) counts[k] += v;
        total += chunk_total[c];
        skipped += chunk_skipped[c];
    }
    return finish_report(spec, limit, std::move(counts), total, skipped);
}

DensityReport sample_cyclotomic(long m, uint64_t limit) {
    if (limit < 2) throw DomainError("sampling limit must be >= 2");
    if (m < 2) throw DomainError("cyclotomic modulus must be >= 2");
    DensityReport rep;
    rep.limit = limit;
    rep.li_value = log_integral(static_cast<double>(limit));
    const long phi = euler_phi(static_cast<int>(m));
    std::map<std::string, long> counts;
    for (uint64_t p : prime_sieve_parallel(limit)) {
        if (std::gcd<long>(static_cast<long>(p % m), m) != 1) {
            ++rep.ramified_skipped;
            continue;
        }
        counts[std::to_string(p % m)]++;
        ++rep.total;
    }
    for (long r = 1; r < m; ++r) {
        if (std::gcd(r, m) != 1) continue;
        KeyStats st;
        st.predicted = frac(1, phi);
        auto it = counts.find(std::to_string(r));
        st.count = (it == counts.end()) ? 0 : it->second;
        st.empirical = rep.total > 0 ? static_cast<double>(st.count) / rep.total : 0.0;
        st.li_predicted = st.predicted.get_d() * rep.li_value;
        rep.per_key.emplace(std::to_string(r), std::move(st));
    }
    return rep;
}

std::map<uint64_t, std::vector<int>> load_sample_cache(const std::string& path) {
    std::map<uint64_t, std::vector<int>> cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'p') continue; // header or blank
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        uint64_t p = std::stoull(line.substr(0, comma));
        std::vector<int> type;
        std::stringstream ss(line.substr(comma + 1));
        std::string part;
        while (std::getline(ss, part, '+')) type.push_back(std::stoi(part));
        cache.emplace(p, std::move(type));
    }
    return cache;
}

void save_sample_cache(const std::string& path,
                       const std::map<uint64_t, std::vector<int>>& samples) {
    std::ofstream out(path);
    out << "p,cycle_type\n";
    for (const auto& [p, type] : samples) out << p << ',' << cycle_type_key(type) << '\n';
}

DensityReport sample_frobenius_cached(const FieldSpec& spec, uint64_t limit,
                                      std::map<uint64_t, std::vector<int>>& cache) {
    if (limit < 2) throw DomainError("sampling limit must be >= 2");
    std::map<std::string, long> counts;
    long total = 0, skipped = 0;
    std::vector<uint64_t> primes = prime_sieve_parallel(limit);
    std::vector<uint64_t> missing;
    for (uint64_t p : primes) {
        if (mpz_divisible_ui_p(spec.disc.get_mpz_t(), p)) {
            ++skipped;
            continue;
        }
        if (!cache.count(p)) missing.push_back(p);
    }
    const long nmissing = static_cast<long>(missing.size());
    std::vector<std::vector<int>> computed(nmissing);
#pragma omp parallel for schedule(dynamic, 256)
    for (long i = 0; i < nmissing; ++i) computed[i] = frobenius_cycle_type(spec, missing[i]);
    for (long i = 0; i < nmissing; ++i) cache.emplace(missing[i], std::move(computed[i]));
    for (uint64_t p : primes) {
        auto it = cache.find(p);
        if (it == cache.end()) continue;
        counts[cycle_type_key(it->second)]++;
        ++total;
    }
    return finish_report(spec, limit, std::move(counts), total, skipped);
}

} // namespace artin
