#include "sweepmc/rng.hpp"

namespace sweepmc {

namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;
constexpr std::uint32_t kMultA = 0xD2511F53u;
constexpr std::uint32_t kMultB = 0xCD9E8D57u;

inline void round_once(Philox4x32::Block& ctr, const Philox4x32::Key& key) {
    const std::uint64_t prod_a = static_cast<std::uint64_t>(kMultA) * ctr[0];
    const std::uint64_t prod_b = static_cast<std::uint64_t>(kMultB) * ctr[2];
    const std::uint32_t hi_a = static_cast<std::uint32_t>(prod_a >> 32);
    const std::uint32_t lo_a = static_cast<std::uint32_t>(prod_a);
    const std::uint32_t hi_b = static_cast<std::uint32_t>(prod_b >> 32);
    const std::uint32_t lo_b = static_cast<std::uint32_t>(prod_b);
    ctr = {hi_b ^ ctr[1] ^ key[0], lo_b, hi_a ^ ctr[3] ^ key[1], lo_a};
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {}

Philox4x32::Block Philox4x32::encrypt(Block counter, Key key) {
    for (int r = 0; r < 9; ++r) {
        round_once(counter, key);
        key[0] += kWeylA;
        key[1] += kWeylB;
    }
    round_once(counter, key);
    return counter;
}

void Philox4x32::refill() {
    const Block counter = {static_cast<std::uint32_t>(block_),
                           static_cast<std::uint32_t>(block_ >> 32),
                           static_cast<std::uint32_t>(stream_),
                           static_cast<std::uint32_t>(stream_ >> 32)};
    const Key key = {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    buffer_ = encrypt(counter, key);
    ++block_;
    word_ = 0;
}

std::uint32_t Philox4x32::next_u32() {
    if (word_ == 4) refill();
    return buffer_[static_cast<std::size_t>(word_++)];
}

std::uint64_t Philox4x32::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double Philox4x32::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace sweepmc
