#ifndef SUBGROWTH_ERROR_HPP
#define SUBGROWTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace subgrowth {

/// An argument lies outside the domain of the requested operation.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force request exceeds the enforced feasibility bound.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold (integrality, divisibility, sign) did not.
/// Seeing one of these means a formula or an input provider is wrong.
class consistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace subgrowth

#endif // SUBGROWTH_ERROR_HPP
