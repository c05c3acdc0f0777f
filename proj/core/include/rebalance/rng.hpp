#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace rebalance {

/// Portable seeded pseudo-random generator shared by every resampler.
///
/// The generator is fully specified so that independent implementations
/// (including the test oracles and any reimplementation in another language)
/// reproduce bit-identical streams from the same seed:
///
///   * State: xoshiro256** (Blackman & Vigna). The four 64-bit state words
///     are the first four outputs of splitmix64 applied to the seed.
///   * `next_u64` is the raw xoshiro256** output.
///   * `below(n)` draws unbiased integers in [0, n) by masked rejection:
///     let `mask` be the smallest 2^b - 1 >= n - 1; draw `next_u64() & mask`
///     until the value is < n.
///   * `unit()` is (next_u64() >> 11) * 2^-53, uniform on [0, 1).
///   * `unit_open()` is ((next_u64() >> 11) + 1) * 2^-53, uniform on (0, 1].
///   * `normal()` is Box-Muller on (unit_open, unit), cos branch first,
///     sin branch cached for the next call.
///   * `shuffle` is a Fisher-Yates walk from the last element down, swapping
///     index i with `below(i + 1)`.
///   * `sample(n, k)` is a partial Fisher-Yates over [0, n): for i in
///     [0, k), swap position i with i + below(n - i); the first k entries
///     are returned in draw order (not sorted).
///
/// Consumers document their own draw order on top of this; together the two
/// levels make every resampling run reproducible across platforms.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed);

    uint64_t next_u64();

    /// Unbiased draw in [0, n). n must be >= 1.
    uint64_t below(uint64_t n);

    /// Uniform double in [0, 1), 53-bit resolution.
    double unit();

    /// Uniform double in (0, 1]; safe as a log() argument.
    double unit_open();

    /// Standard normal deviate (Box-Muller, pair cached).
    double normal();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices from [0, n) in draw order.
    std::vector<size_t> sample(size_t n, size_t k);

private:
    uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace rebalance
