#pragma once

#include <array>
#include <cstdint>

namespace sweepmc {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
///
/// The generator is a pure function of (seed, stream, position): the 64-bit
/// seed forms the key, the 64-bit stream id occupies the upper counter
/// words and the block position the lower ones. Distinct (seed, stream)
/// pairs yield statistically independent streams, so concurrent chains can
/// split a single seed by stream id. Trajectories produced from a given
/// (seed, stream) are reproducible bit-for-bit across platforms.
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    Philox4x32() : Philox4x32(0, 0) {}
    explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0);

    /// The 10-round Philox4x32 bijection; exposed for known-answer tests.
    static Block encrypt(Block counter, Key key);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_uniform();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    void refill();

    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t block_ = 0;   // position of the next block to encrypt
    Block buffer_{};            // decrypted words of the current block
    int word_ = 4;              // next unread word in buffer_, 4 = empty
};

}  // namespace sweepmc
