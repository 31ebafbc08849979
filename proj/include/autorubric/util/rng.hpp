#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "autorubric/errors.hpp"
#include "autorubric/util/hash.hpp"

namespace autorubric::rngutil {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// One run seed fans out into independent per-purpose streams so components
// can be tested in isolation without coupling their random sequences.
inline std::mt19937_64 substream(std::uint64_t seed, std::string_view purpose) {
    return std::mt19937_64(splitmix64(seed ^ fnv1a64(purpose)));
}

// uniform_int_distribution is implementation-defined; rejection sampling on
// the standardized mt19937_64 output keeps draws identical everywhere.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    if (n == 0) throw InvalidArgument("uniform_index: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_index(rng, i)]);
    }
}

// k distinct indices in [0, n), in draw order (partial Fisher-Yates).
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    if (k > n) throw InvalidArgument("sample_indices: k exceeds population");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(pool[i], pool[i + uniform_index(rng, n - i)]);
    }
    pool.resize(k);
    return pool;
}

inline std::string save_state(const std::mt19937_64& rng) {
    std::ostringstream os;
    os << rng;
    return os.str();
}

inline void load_state(std::mt19937_64& rng, const std::string& state) {
    std::istringstream is(state);
    is >> rng;
    if (is.fail()) throw InvalidArgument("rng state string is corrupt");
}

}  // namespace autorubric::rngutil
