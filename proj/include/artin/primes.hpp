#pragma once

#include <cstdint>
#include <vector>

namespace artin {

// Maximum sieve limit; overridable through ARTINLAB_PRIME_CAP.
uint64_t prime_cap();

// All primes <= limit, ascending. Serial reference implementation: a plain
// sieve below the segment threshold, a segmented sieve above it.
std::vector<uint64_t> prime_sieve(uint64_t limit);

// Same output, segments processed with OpenMP and concatenated in order.
std::vector<uint64_t> prime_sieve_parallel(uint64_t limit);

} // namespace artin
