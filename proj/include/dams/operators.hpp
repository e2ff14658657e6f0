#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dams/bitstring.hpp"
#include "dams/problem.hpp"
#include "dams/rng.hpp"
#include "dams/types.hpp"

namespace dams {

/// A mutation operator: either "flip exactly b uniformly chosen bits" or
/// "flip every bit independently with probability 1/l".
struct OperatorDescriptor {
  enum class Kind { ExactBits, RateFlip };

  Kind kind = Kind::ExactBits;
  int bits = 1;  // ExactBits only

  std::string name() const;

  bool operator==(const OperatorDescriptor&) const = default;
};

/// The standard four-operator set: {1-bit, 3-bit, 5-bit, rate-1/l bit-flip}.
std::vector<OperatorDescriptor> standard_operator_set();

/// Copy of x with exactly b distinct uniformly chosen positions flipped.
BitString mutate_exact_b(const BitString& x, int b, Rng& rng);

/// Copy of x with each bit independently flipped with probability 1/length.
BitString mutate_rate(const BitString& x, Rng& rng);

struct EaStepResult {
  BitString solution;
  Reward reward = 0;
  std::int64_t evaluations = 0;
};

/// One (1+lambda)-EA iteration: generate lambda offspring of x with op,
/// keep the best offspring only if it is strictly better than x (ties among
/// equally good offspring go to the lowest offspring index).
EaStepResult ea_step(const Problem& problem, const BitString& x, const OperatorDescriptor& op,
                     int lambda, Rng& rng);

/// Reusable-buffer form of ea_step for tight loops. Tracks total offspring
/// evaluations across calls.
class EaStepper {
 public:
  explicit EaStepper(const Problem& problem) : problem_(&problem) {}

  /// Applies one (1+lambda)-EA iteration in place. `fitness` must equal
  /// problem.evaluate(x) on entry and is updated to match on exit.
  /// Returns the reward f(x_new) - f(x_old) >= 0.
  Reward step_in_place(BitString& x, Fitness& fitness, const OperatorDescriptor& op, int lambda,
                       Rng& rng);

  std::int64_t evaluations() const { return evaluations_; }

 private:
  const Problem* problem_;
  BitString scratch_;
  std::vector<int> positions_;
  std::vector<int> best_positions_;
  std::int64_t evaluations_ = 0;
};

/// Draws the flip positions used by the operators; exposed so the mutate_*
/// functions and ea_step share one sampling path.
void draw_flip_positions(const OperatorDescriptor& op, int length, Rng& rng,
                         std::vector<int>& out);

}  // namespace dams
