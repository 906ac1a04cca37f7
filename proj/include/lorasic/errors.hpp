#pragma once

#include <stdexcept>
#include <string>

namespace lorasic {

/// A distance that falls outside the coverage disc (d <= 0 or d > R).
class OutOfCoverageError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// An iterative method (series, quadrature) failed to reach its tolerance.
class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A planning target that cannot be met for any admissible load.
class InfeasibleError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration text or override; the message names the key.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lorasic
