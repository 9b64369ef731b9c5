#ifndef GRAPHMARK_RNG_HPP
#define GRAPHMARK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace graphmark {

// Deterministic random source. The raw engine (mt19937_64) is fully specified
// by the standard, and the uniform/normal transforms below are written out
// explicitly instead of going through std::*_distribution, whose output is
// implementation-defined. All generated artifacts are therefore bit-stable
// for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Standard normal via Box-Muller (first variate only; keeps the
    // generator stateless apart from the engine).
    double normal();

    // Uniform integer on [lo, hi], inclusive, rejection-sampled.
    int uniform_int(int lo, int hi);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(
                uniform_int(0, static_cast<int>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

// Constant-time seed derivation for independent substreams
// (splitmix64 finalizer over master + stream index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

} // namespace graphmark

#endif // GRAPHMARK_RNG_HPP
