#include <doctest.h>

#include "sweepmc/rng.hpp"

using sweepmc::Philox4x32;

TEST_CASE("philox4x32-10 known-answer vectors") {
    // Reference vectors from the Random123 test suite.
    CHECK(Philox4x32::encrypt({0u, 0u, 0u, 0u}, {0u, 0u}) ==
          Philox4x32::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox4x32::encrypt({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                              {0xffffffffu, 0xffffffffu}) ==
          Philox4x32::Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Philox4x32::encrypt({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                              {0xa4093822u, 0x299f31d0u}) ==
          Philox4x32::Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("the word stream walks the counter blocks in order") {
    Philox4x32 rng(0, 0);
    const auto block0 = Philox4x32::encrypt({0u, 0u, 0u, 0u}, {0u, 0u});
    const auto block1 = Philox4x32::encrypt({1u, 0u, 0u, 0u}, {0u, 0u});
    for (const std::uint32_t expected : block0) CHECK(rng.next_u32() == expected);
    for (const std::uint32_t expected : block1) CHECK(rng.next_u32() == expected);
}

TEST_CASE("same seed and stream reproduce, different streams diverge") {
    Philox4x32 a(42, 0), b(42, 0), c(42, 1), d(43, 0);
    bool stream_differs = false;
    bool seed_differs = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next_u64();
        CHECK(va == b.next_u64());
        stream_differs |= va != c.next_u64();
        seed_differs |= va != d.next_u64();
    }
    CHECK(stream_differs);
    CHECK(seed_differs);
}

TEST_CASE("uniform doubles stay in the half-open unit interval") {
    Philox4x32 rng(7, 3);
    double sum = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const double u = rng.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.01));
}
