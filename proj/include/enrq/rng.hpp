#pragma once
#include <cstdint>
#include <string>
#include <string_view>

namespace enrq {

// 64-bit FNV-1a, used for content digests and sub-seed derivation.
inline uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) { s[i] = d[v & 0xf]; v >>= 4; }
    return s;
}

// Deterministic splitmix64 generator. Not std::mt19937_64 +
// uniform_int_distribution: distributions are implementation-defined,
// and reports must be byte-identical across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0, rejection sampling
    uint64_t below(uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // independent substream labelled by a string
    Rng fork(std::string_view label) const {
        return Rng(fnv1a(label, state_ ^ 0xa5a5a5a55a5a5a5aull));
    }

private:
    uint64_t state_;
};

} // namespace enrq
