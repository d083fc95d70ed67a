// Counter-based random numbers (Philox4x64-10, Salmon et al. SC 2011).
//
// Every draw is a pure function of (seed, stream, key a, key b, index), so
// any worker can reproduce any other worker's draws without sharing state.
// That property is what makes connectome generation and external drive
// independent of how columns are partitioned.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace csnn {

struct Philox4x64 {
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

    static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            unsigned __int128 p0 = static_cast<unsigned __int128>(kMul0) * ctr[0];
            unsigned __int128 p1 = static_cast<unsigned __int128>(kMul1) * ctr[2];
            std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
            std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
            std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
            std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

// Map 64 random bits to a double in [0,1) with full 53-bit resolution.
inline double u01_from_bits(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Independent draw streams. The tag enters the Philox key, so streams never
// collide even for identical (a, b) draw keys.
enum class RngStream : std::uint64_t {
    pair_sample = 1,     // Bernoulli per ordered neuron pair
    external_drive = 2,  // Poisson counts per (neuron, timestep)
    generic = 3,
};

// Buffered uniform draws for one (stream, a, b) key; consumes Philox blocks
// sequentially through counter word 2.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, RngStream stream, std::uint64_t a, std::uint64_t b)
        : key_{seed, static_cast<std::uint64_t>(stream)}, ctr_{a, b, 0, 0} {}

    double next() {
        if (pos_ == 4) {
            buf_ = Philox4x64::block(ctr_, key_);
            ++ctr_[2];
            pos_ = 0;
        }
        return u01_from_bits(buf_[pos_++]);
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> ctr_;
    std::array<std::uint64_t, 4> buf_{};
    int pos_ = 4;
};

// Stateless keyed draws over a fixed 64-bit seed.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // One uniform in [0,1) for the draw key (a, b).
    double uniform01(RngStream stream, std::uint64_t a, std::uint64_t b) const {
        auto out = Philox4x64::block({a, b, 0, 0},
                                     {seed_, static_cast<std::uint64_t>(stream)});
        return u01_from_bits(out[0]);
    }

    UniformStream stream(RngStream stream, std::uint64_t a, std::uint64_t b) const {
        return UniformStream(seed_, stream, a, b);
    }

    // Poisson count with the given mean for the draw key (a, b). Knuth's
    // product method; means above 30 are split into additive sub-draws so the
    // uniform consumption stays bounded.
    std::uint64_t poisson(RngStream str, std::uint64_t a, std::uint64_t b,
                          double mean) const {
        if (mean < 0.0) throw std::invalid_argument("poisson mean must be >= 0");
        if (mean == 0.0) return 0;
        UniformStream us = stream(str, a, b);
        std::uint64_t parts = static_cast<std::uint64_t>(mean / 30.0) + 1;
        double part_mean = mean / static_cast<double>(parts);
        double limit = std::exp(-part_mean);
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i < parts; ++i) {
            double prod = 1.0;
            std::uint64_t k = 0;
            do {
                prod *= us.next();
                ++k;
            } while (prod > limit);
            total += k - 1;
        }
        return total;
    }

private:
    std::uint64_t seed_;
};

}  // namespace csnn
