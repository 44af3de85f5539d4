#ifndef MOEAD_CORE_TYPES_HPP
#define MOEAD_CORE_TYPES_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace moead
{

/// A point f(x) in m-dimensional objective space. All problems are minimized.
using objective_vector = std::vector<double>;

using real_vector = std::vector<double>;
using bit_string = std::vector<std::uint8_t>;
using permutation = std::vector<int>;

/// Decision vector in one of the three supported encodings.
using encoding = std::variant<real_vector, bit_string, permutation>;

enum class encoding_kind { real, binary, permutation };

encoding_kind kind_of(const encoding &x);

struct individual {
    encoding x;
    objective_vector f;
};

/// Members are indexed by subproblem; the size is fixed for a whole run.
using population = std::vector<individual>;

enum class reference_mode { ideal, utopian };

/// Reference point z* for scalarization.
///
/// The running ideal point is always tracked. In utopian mode the exposed
/// values are the ideal shifted down by a positive per-objective epsilon.
class reference_point
{
public:
    static constexpr double default_epsilon = 1e-4;

    /// Ideal-mode reference with every entry at +infinity (nothing seen yet).
    explicit reference_point(std::size_t m, reference_mode mode = reference_mode::ideal,
                             double epsilon = default_epsilon);
    reference_point(std::vector<double> ideal, reference_mode mode = reference_mode::ideal,
                    double epsilon = default_epsilon);

    std::span<const double> values() const
    {
        return m_values;
    }
    std::span<const double> ideal() const
    {
        return m_ideal;
    }
    reference_mode mode() const
    {
        return m_mode;
    }
    std::span<const double> epsilon() const
    {
        return m_epsilon;
    }
    std::size_t size() const
    {
        return m_ideal.size();
    }

    /// Entry-wise minimum of the tracked ideal point and f.
    void update(std::span<const double> f);

private:
    void refresh();

    std::vector<double> m_ideal;
    std::vector<double> m_epsilon;
    std::vector<double> m_values;
    reference_mode m_mode;
};

/// Pareto dominance for minimization: u <= v everywhere and u < v somewhere.
bool dominates(std::span<const double> u, std::span<const double> v);

/// Members not dominated by any other member; duplicates collapse to the first
/// occurrence. Input order of the survivors is preserved.
std::vector<objective_vector> nondominated_filter(const std::vector<objective_vector> &set);

/// Functional form of reference_point::update.
reference_point update_ideal(reference_point z, std::span<const double> f);

void check_same_dimension(std::size_t a, std::size_t b, const char *what);

} // namespace moead

#endif
