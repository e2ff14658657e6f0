#pragma once

#include "dams/bitstring.hpp"
#include "dams/types.hpp"

namespace dams {

/// Optimization problem over fixed-length bit strings. Evaluation is
/// deterministic and pure.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual int length() const = 0;
  virtual Fitness optimum() const = 0;
  virtual Fitness evaluate(const BitString& x) const = 0;
  virtual BitString initial_solution() const = 0;
};

/// Maximize the count of 1-bits; optimum = length. The search starts from
/// the all-zeros string.
class OneMax final : public Problem {
 public:
  explicit OneMax(int length);

  int length() const override { return length_; }
  Fitness optimum() const override { return length_; }
  Fitness evaluate(const BitString& x) const override;
  BitString initial_solution() const override { return BitString(length_); }

 private:
  int length_;
};

}  // namespace dams
