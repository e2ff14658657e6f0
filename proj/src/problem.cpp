#include "dams/problem.hpp"

#include <stdexcept>

namespace dams {

OneMax::OneMax(int length) : length_(length) {
  if (length < 1) {
    throw std::invalid_argument("OneMax: length must be >= 1");
  }
}

Fitness OneMax::evaluate(const BitString& x) const {
  if (x.length() != length_) {
    throw std::invalid_argument("OneMax::evaluate: solution length mismatch");
  }
  return x.count_ones();
}

}  // namespace dams
