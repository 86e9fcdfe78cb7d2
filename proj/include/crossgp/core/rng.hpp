#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace crossgp {

/// Counter-based random stream.
///
/// The n-th draw is a pure function of (key, n): a SplitMix64 finalizer
/// applied to `key + n * golden_gamma`. Streams are therefore reproducible
/// bit-for-bit on every platform, and independent streams are obtained by
/// deriving distinct keys with derive_rng(). All sampling helpers are
/// implemented here rather than through <random> distributions, whose
/// algorithms are implementation-defined.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t key = 0) noexcept : key_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next(); }
    std::uint64_t next() noexcept;

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) noexcept;
    // Uniform integer in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;
    // Uniform real in [0, 1) with 53 random bits.
    double uniform01() noexcept;
    double uniform(double lo, double hi) noexcept;
    // True with probability p; p <= 0 never, p >= 1 always.
    bool bernoulli(double p) noexcept;

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

/// Independent stream for (seed, stream_id). Same pair, same stream.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream_id) noexcept;

/// k distinct indices from [0, n), in draw order (Floyd's algorithm).
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng);

} // namespace crossgp
