#ifndef MOEAD_ERRORS_HPP
#define MOEAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moead
{

/// Vectors of mismatched length were combined.
class dimension_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric parameter is outside its admissible range (p < 1, T < 1, ...).
class parameter_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A function was evaluated outside its mathematical domain.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An encoding does not match the problem or is structurally invalid.
class encoding_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Experiment or run configuration is inconsistent.
class config_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation produced a non-finite value.
class numeric_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace moead

#endif
