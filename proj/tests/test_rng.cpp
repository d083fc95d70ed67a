#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "csnn/rng.hpp"

using namespace csnn;

TEST_CASE("philox4x64-10 known-answer vectors") {
    // Reference values generated with an independent Philox implementation
    // (cross-checked against numpy.random.Philox raw output).
    auto out = Philox4x64::block({0, 0, 0, 0}, {0, 0});
    REQUIRE(out[0] == 0x16554d9eca36314cull);
    REQUIRE(out[1] == 0xdb20fe9d672d0fdcull);
    REQUIRE(out[2] == 0xd7e772cee186176bull);
    REQUIRE(out[3] == 0x7e68b68aec7ba23bull);

    out = Philox4x64::block({1, 0, 0, 0}, {0, 0});
    REQUIRE(out[0] == 0x02f4ba6408e4d89bull);
    REQUIRE(out[1] == 0x3dd62b0b9ca8c5b2ull);
    REQUIRE(out[2] == 0x1c8667a55d902e79ull);
    REQUIRE(out[3] == 0x907d7a052fd5b4dcull);

    out = Philox4x64::block({0, 0, 0, 0}, {0xffffffffffffffffull, 0xffffffffffffffffull});
    REQUIRE(out[0] == 0x44b7493d1acfc229ull);
    REQUIRE(out[1] == 0x6636af8e997921ddull);
    REQUIRE(out[2] == 0x3f73e132b5b3780eull);
    REQUIRE(out[3] == 0x605644dde03b01b1ull);

    out = Philox4x64::block({0x243f6a8885a308d4ull, 0x13198a2e03707344ull,
                             0xa4093822299f31d0ull, 0x082efa98ec4e6c89ull},
                            {0x452821e638d01377ull, 0xbe5466cf34e90c6cull});
    REQUIRE(out[0] == 0x69cb1191c5f276acull);
    REQUIRE(out[1] == 0xae4698db8f7a2330ull);
    REQUIRE(out[2] == 0xa8abc9d306ba398full);
    REQUIRE(out[3] == 0xf043802eb134aaf7ull);

    out = Philox4x64::block({2, 2, 3, 4}, {5, 6});
    REQUIRE(out[0] == 0x92ab6a0e75619263ull);
    REQUIRE(out[1] == 0xd8ff75bdc6bf8f60ull);
    REQUIRE(out[2] == 0x450e124938725640ull);
    REQUIRE(out[3] == 0x94eb1a7cffd20cbbull);
}

TEST_CASE("keyed draws are deterministic and stream-separated") {
    CounterRng rng(42);
    double a = rng.uniform01(RngStream::pair_sample, 7, 9);
    REQUIRE(a == rng.uniform01(RngStream::pair_sample, 7, 9));
    REQUIRE(a >= 0.0);
    REQUIRE(a < 1.0);

    // different stream, seed, or draw key changes the value
    REQUIRE(a != rng.uniform01(RngStream::external_drive, 7, 9));
    REQUIRE(a != rng.uniform01(RngStream::pair_sample, 9, 7));
    REQUIRE(a != CounterRng(43).uniform01(RngStream::pair_sample, 7, 9));
}

TEST_CASE("uniform stream is reproducible and well distributed") {
    CounterRng rng(2024);
    auto s1 = rng.stream(RngStream::generic, 1, 2);
    auto s2 = rng.stream(RngStream::generic, 1, 2);
    for (int i = 0; i < 100; ++i) REQUIRE(s1.next() == s2.next());

    // sample moments: mean 1/2 (sd ~ 1/sqrt(12n)), var 1/12
    auto s = rng.stream(RngStream::generic, 3, 4);
    const int n = 1'000'000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = s.next();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sumsq += u * u;
    }
    double mean = sum / n;
    double var = sumsq / n - mean * mean;
    REQUIRE(mean == Catch::Approx(0.5).margin(3.0 * std::sqrt(1.0 / 12.0 / n)));
    REQUIRE(var == Catch::Approx(1.0 / 12.0).margin(0.001));
}

TEST_CASE("poisson draws match mean and variance") {
    CounterRng rng(7);

    REQUIRE(rng.poisson(RngStream::external_drive, 1, 1, 0.0) == 0);

    // external drive scale: 540 synapses x 3 Hz x 0.1 ms -> mean 0.162
    const double mean = 0.162;
    const int n = 1'000'000;
    std::uint64_t total = 0;
    double sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        auto k = rng.poisson(RngStream::external_drive, 5, static_cast<std::uint64_t>(i), mean);
        total += k;
        sumsq += static_cast<double>(k) * static_cast<double>(k);
    }
    double m = static_cast<double>(total) / n;
    double var = sumsq / n - m * m;
    // 3 sigma of the sample mean of a Poisson
    REQUIRE(m == Catch::Approx(mean).margin(3.0 * std::sqrt(mean / n)));
    REQUIRE(var == Catch::Approx(mean).epsilon(0.02));
}

TEST_CASE("poisson mean splitting stays consistent for large means") {
    CounterRng rng(11);
    const double mean = 95.0;  // three sub-draws
    const int n = 20000;
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        total += static_cast<double>(
            rng.poisson(RngStream::generic, 1, static_cast<std::uint64_t>(i), mean));
    double m = total / n;
    REQUIRE(m == Catch::Approx(mean).margin(3.0 * std::sqrt(mean / n)));
}
