#pragma once

#include <stdexcept>
#include <string>

namespace semicomm {

/// Operand dimensions do not fit the operation.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input is outside the mathematical domain of the operation
/// (e.g. a matrix with negative entries passed to an order-theoretic test).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A rejection-sampling generator exhausted its retry budget.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace semicomm
