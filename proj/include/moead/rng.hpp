#ifndef MOEAD_RNG_HPP
#define MOEAD_RNG_HPP

#include <cstdint>
#include <random>

namespace moead
{

// Thin wrapper over mt19937_64. The standard distributions are
// implementation-defined, so draws are derived from raw engine output to keep
// results identical across standard libraries.
class rng
{
public:
    explicit rng(std::uint64_t seed) : m_engine(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform()
    {
        return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer in the closed range [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
        if (span == 0u) { // full 64-bit range
            return static_cast<std::int64_t>(m_engine());
        }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw = m_engine();
        while (draw >= limit) {
            draw = m_engine();
        }
        return lo + static_cast<std::int64_t>(draw % span);
    }

    std::size_t index(std::size_t n)
    {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

    bool bernoulli(double prob)
    {
        return uniform() < prob;
    }

    /// Standard normal draw (Box-Muller, no caching).
    double normal();

    std::mt19937_64 &engine()
    {
        return m_engine;
    }

private:
    std::mt19937_64 m_engine;
};

} // namespace moead

#endif
