#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bsplan {

// Seeded generator with distribution code owned here rather than taken from
// <random>, so identical seeds give identical streams on every platform.
// mt19937_64 itself is fully specified by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Knuth's product method on chunks of mean <= 16 (sums of independent
    // Poisson draws are Poisson), exact for any mean
    long long poisson(double mean) {
        long long total = 0;
        while (mean > 16.0) {
            total += poisson_block(16.0);
            mean -= 16.0;
        }
        if (mean > 0.0) total += poisson_block(mean);
        return total;
    }

    static const char* algorithm_id() { return "mt19937_64/u53-uniform/knuth-poisson"; }

private:
    long long poisson_block(double mean) {
        const double limit = std::exp(-mean);
        long long k = 0;
        double prod = uniform01();
        while (prod > limit) {
            ++k;
            prod *= uniform01();
        }
        return k;
    }

    std::mt19937_64 gen_;
};

} // namespace bsplan
