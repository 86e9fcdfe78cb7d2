#include "crossgp/core/rng.hpp"

#include <algorithm>

namespace crossgp {

namespace {
constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next() noexcept
{
    ++counter_;
    return mix64(key_ + counter_ * golden_gamma);
}

std::uint64_t Rng::below(std::uint64_t n) noexcept
{
    // Rejection on the low end keeps the draw exactly uniform.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) {
            return r % n;
        }
    }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) noexcept
{
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(next());
    }
    return lo + static_cast<std::int64_t>(below(span));
}

double Rng::uniform01() noexcept
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) noexcept
{
    return lo + (hi - lo) * uniform01();
}

bool Rng::bernoulli(double p) noexcept
{
    if (p <= 0.0) {
        return false;
    }
    if (p >= 1.0) {
        return true;
    }
    return uniform01() < p;
}

Rng derive_rng(std::uint64_t seed, std::uint64_t stream_id) noexcept
{
    const std::uint64_t a = mix64(seed + golden_gamma);
    const std::uint64_t b = mix64(stream_id ^ 0xd1b54a32d192ed03ULL);
    return Rng(mix64(a ^ (b + golden_gamma + (a << 6) + (a >> 2))));
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng)
{
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    for (std::size_t j = n - k; j < n; ++j) {
        const auto t = static_cast<std::size_t>(rng.below(j + 1));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
            chosen.push_back(t);
        } else {
            chosen.push_back(j);
        }
    }
    return chosen;
}

} // namespace crossgp
