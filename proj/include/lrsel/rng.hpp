#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace lrsel {

/// Counter-based random generator. Each (seed, rep, role) triple names an
/// independent substream, so parallel replications never share state.
/// The output function is the splitmix64 finalizer applied to a keyed counter.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t rep, std::uint64_t role)
        : key_(mix(mix(mix(0x9e3779b97f4a7c15ULL ^ seed) + rep) + role)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

    result_type operator()() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform on (0, 1]; never returns 0 so it is safe under log().
    double uniform() {
        return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (fully specified, no library state).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace lrsel
