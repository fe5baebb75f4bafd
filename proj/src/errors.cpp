#include "dmu/errors.hpp"

#include <sstream>

namespace dmu {

UnsupportedDegree::UnsupportedDegree(long degree, std::size_t atoms)
    : Error("degree " + std::to_string(degree) + " is below s - 1 = " +
            std::to_string(static_cast<long>(atoms) - 1) +
            "; the closed form needs n >= s - 1"),
      degree_(degree),
      atoms_(atoms) {}

FormulaDiscrepancy::FormulaDiscrepancy(std::vector<std::complex<double>> fast,
                                       std::vector<std::complex<double>> expansion,
                                       double max_error)
    : ConsistencyError("fast monomial formula differs from the basis expansion by " +
                       std::to_string(max_error)),
      fast_(std::move(fast)),
      expansion_(std::move(expansion)),
      max_error_(max_error) {}

IllConditioned::IllConditioned(std::size_t pivot_index, double condition_estimate)
    : Error([&] {
          std::ostringstream msg;
          msg << "Gram matrix is ill-conditioned: pivot " << pivot_index
              << " collapsed (condition estimate " << condition_estimate << ")";
          return msg.str();
      }()),
      pivot_index_(pivot_index),
      condition_estimate_(condition_estimate) {}

}  // namespace dmu
