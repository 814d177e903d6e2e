#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace codesum {

// 64-bit FNV-1a. Used for seed derivation and content digests.
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Derives an independent stream seed from the root seed and a textual tag
// (sample id, repo slug, ...). All randomness in the pipeline flows from
// one root seed through this function, so results do not depend on input
// order or parallel scheduling.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag) {
    char root_bytes[8];
    for (int i = 0; i < 8; ++i) {
        root_bytes[i] = static_cast<char>((root >> (8 * i)) & 0xff);
    }
    return fnv1a64(tag, fnv1a64(std::string_view(root_bytes, 8)));
}

// splitmix64 generator with hand-rolled distribution helpers.
// std::uniform_*_distribution is implementation-defined, which would break
// the cross-platform determinism contract, so the draws are done manually.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Poisson draw by inversion of the CDF from a single uniform.
    int poisson(double lambda) {
        const double u = unit();
        double p = std::exp(-lambda);
        double s = p;
        int k = 0;
        while (u > s && k < 1000000) {
            ++k;
            p *= lambda / k;
            s += p;
        }
        return k;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    // k distinct indices from [0, n), uniform without replacement,
    // returned in ascending order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

private:
    std::uint64_t state_;
};

}  // namespace codesum
