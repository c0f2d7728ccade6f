#include "artin/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "artin/errors.hpp"

namespace artin {

namespace {

constexpr uint64_t kSegmentThreshold = 10'000'000; // plain sieve below this
constexpr uint64_t kSegmentSize = 1 << 20;
constexpr uint64_t kDefaultCap = 10'000'000'000ULL;

std::vector<uint64_t> small_sieve(uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

// Primes in (low, high] marked against the base primes <= sqrt(high).
void sieve_segment(uint64_t low, uint64_t high, const std::vector<uint64_t>& base,
                   std::vector<uint64_t>& out) {
    const uint64_t len = high - low;
    std::vector<char> composite(len, 0); // index i represents low + 1 + i
    for (uint64_t p : base) {
        if (p * p > high) break;
        uint64_t start = std::max(p * p, ((low + p) / p) * p);
        if (start <= low) start += p;
        for (uint64_t m = start; m <= high; m += p) composite[m - low - 1] = 1;
    }
    for (uint64_t i = 0; i < len; ++i)
        if (!composite[i]) out.push_back(low + 1 + i);
}

} // namespace

uint64_t prime_cap() {
    if (const char* env = std::getenv("ARTINLAB_PRIME_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
        throw DomainError("ARTINLAB_PRIME_CAP must be an integer >= 2");
    }
    return kDefaultCap;
}

std::vector<uint64_t> prime_sieve(uint64_t limit) {
    if (limit < 2) throw DomainError("sieve limit must be >= 2");
    if (limit > prime_cap())
        throw DomainError("sieve limit " + std::to_string(limit) + " exceeds the configured cap");
    if (limit <= kSegmentThreshold) return small_sieve(limit);

    const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<uint64_t> base = small_sieve(root);
    std::vector<uint64_t> primes;
    for (uint64_t p : base)
        if (p <= limit) primes.push_back(p);
    for (uint64_t low = root; low < limit; low += kSegmentSize)
        sieve_segment(low, std::min(low + kSegmentSize, limit), base, primes);
    return primes;
}

std::vector<uint64_t> prime_sieve_parallel(uint64_t limit) {
    if (limit < 2) throw DomainError("sieve limit must be >= 2");
    if (limit > prime_cap())
        throw DomainError("sieve limit " + std::to_string(limit) + " exceeds the configured cap");
    if (limit <= kSegmentThreshold) return small_sieve(limit);

    const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<uint64_t> base = small_sieve(root);
    const uint64_t span = limit - root;
    const long nseg = static_cast<long>((span + kSegmentSize - 1) / kSegmentSize);
    std::vector<std::vector<uint64_t>> chunks(nseg);

#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < nseg; ++s) {
        uint64_t low = root + static_cast<uint64_t>(s) * kSegmentSize;
        uint64_t high = std::min(low + kSegmentSize, limit);
        sieve_segment(low, high, base, chunks[s]);
    }

    std::vector<uint64_t> primes;
    for (uint64_t p : base)
        if (p <= limit) primes.push_back(p);
    for (auto& c : chunks) primes.insert(primes.end(), c.begin(), c.end());
    return primes;
}

} // namespace artin
