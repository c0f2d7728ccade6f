#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "artin/group.hpp"
#include "artin/intpoly.hpp"
#include "artin/rational.hpp"

namespace artin {

std::string cycle_type_key(const std::vector<int>& type); // "2+1"

// A monogenic field: monic integer polynomial plus the labeled Galois action
// on its roots. The group is supplied, not computed; sampling falsifies a
// wrong one by producing a factorization pattern outside the key set.
struct FieldSpec {
    IntPoly poly;
    Group galois;
    ClassData classes;
    Int disc;
    // cycle type (descending partition) -> ascending class indices
    std::map<std::vector<int>, std::vector<int>> type_to_classes;

    static FieldSpec make(IntPoly poly, Group galois);
};

// Residue degrees of p in the field, descending; always a key of
// type_to_classes. Ramified p throws.
std::vector<int> frobenius_cycle_type(const FieldSpec& spec, uint64_t p);

// Frobenius of p in Q(zeta_m)/Q: the residue p mod m. gcd(p, m) must be 1.
long cyclotomic_frobenius(long m, uint64_t p);

struct KeyStats {
    long count = 0;
    double empirical = 0.0;
    Rat predicted;      // sum of |C|/|G| over the classes sharing the key
    double li_predicted = 0.0;
};

struct DensityReport {
    uint64_t limit = 0;
    long total = 0;            // unramified primes counted
    long ramified_skipped = 0;
    double li_value = 0.0;
    std::map<std::string, KeyStats> per_key;

    bool operator==(const DensityReport& o) const {
        if (limit != o.limit || total != o.total || ramified_skipped != o.ramified_skipped)
            return false;
        if (per_key.size() != o.per_key.size()) return false;
        for (const auto& [k, v] : per_key) {
            auto it = o.per_key.find(k);
            if (it == o.per_key.end() || it->second.count != v.count) return false;
        }
        return true;
    }
};

// Bucket every unramified p <= limit by cycle type. Conjugacy classes that
// share a cycle type are merged into one observable key; their density adds.
// Prime ranges are processed in parallel chunks and the integer counts merged,
// so the report is identical to the serial one.
DensityReport sample_frobenius(const FieldSpec& spec, uint64_t limit);
DensityReport sample_frobenius_serial(const FieldSpec& spec, uint64_t limit);

// Same bucketing for Q(zeta_m)/Q, keyed by the residue p mod m.
DensityReport sample_cyclotomic(long m, uint64_t limit);

// Resumable sample cache: CSV lines "p,cycle_type".
std::map<uint64_t, std::vector<int>> load_sample_cache(const std::string& path);
void save_sample_cache(const std::string& path, const std::map<uint64_t, std::vector<int>>& samples);

// Like sample_frobenius but reusing / extending cached per-prime samples.
DensityReport sample_frobenius_cached(const FieldSpec& spec, uint64_t limit,
                                      std::map<uint64_t, std::vector<int>>& cache);

} // namespace artin
