#include "dams/operators.hpp"

#include <stdexcept>

namespace dams {

std::string OperatorDescriptor::name() const {
  if (kind == Kind::RateFlip) {
    return "bit-flip";
  }
  return std::to_string(bits) + "-bit";
}

std::vector<OperatorDescriptor> standard_operator_set() {
  using Kind = OperatorDescriptor::Kind;
  return {
      {Kind::ExactBits, 1},
      {Kind::ExactBits, 3},
      {Kind::ExactBits, 5},
      {Kind::RateFlip, 0},
  };
}

void draw_flip_positions(const OperatorDescriptor& op, int length, Rng& rng,
                         std::vector<int>& out) {
  if (op.kind == OperatorDescriptor::Kind::ExactBits) {
    if (op.bits < 1 || op.bits > length) {
      throw std::invalid_argument("exact-b mutation: need 1 <= b <= length");
    }
    rng.sample_distinct(length, op.bits, out);
  } else {
    // Flip count ~ Binomial(l, 1/l); positions uniform without replacement.
    // Jointly identical to flipping each bit independently with rate 1/l.
    const int flips = rng.binomial(length, 1.0 / static_cast<double>(length));
    rng.sample_distinct(length, flips, out);
  }
}

BitString mutate_exact_b(const BitString& x, int b, Rng& rng) {
  BitString out = x;
  std::vector<int> positions;
  draw_flip_positions({OperatorDescriptor::Kind::ExactBits, b}, x.length(), rng, positions);
  for (int p : positions) {
    out.flip(p);
  }
  return out;
}

BitString mutate_rate(const BitString& x, Rng& rng) {
  if (x.length() < 1) {
    throw std::invalid_argument("mutate_rate: length must be >= 1");
  }
  BitString out = x;
  std::vector<int> positions;
  draw_flip_positions({OperatorDescriptor::Kind::RateFlip, 0}, x.length(), rng, positions);
  for (int p : positions) {
    out.flip(p);
  }
  return out;
}

Reward EaStepper::step_in_place(BitString& x, Fitness& fitness, const OperatorDescriptor& op,
                                int lambda, Rng& rng) {
  if (lambda < 1) {
    throw std::invalid_argument("ea_step: lambda must be >= 1");
  }
  if (x.length() != problem_->length()) {
    throw std::invalid_argument("ea_step: solution length mismatch");
  }
  Reward best_gain = 0;
  best_positions_.clear();
  for (int j = 0; j < lambda; ++j) {
    draw_flip_positions(op, x.length(), rng, positions_);
    scratch_ = x;
    for (int p : positions_) {
      scratch_.flip(p);
    }
    const Fitness offspring_fitness = problem_->evaluate(scratch_);
    ++evaluations_;
    const Reward gain = offspring_fitness - fitness;
    if (gain > best_gain) {  // strictly-better acceptance, lowest index wins ties
      best_gain = gain;
      best_positions_ = positions_;
    }
  }
  if (best_gain > 0) {
    for (int p : best_positions_) {
      x.flip(p);
    }
    fitness += best_gain;
  }
  return best_gain;
}

EaStepResult ea_step(const Problem& problem, const BitString& x, const OperatorDescriptor& op,
                     int lambda, Rng& rng) {
  EaStepper stepper(problem);
  EaStepResult result;
  result.solution = x;
  Fitness fitness = problem.evaluate(result.solution);
  result.reward = stepper.step_in_place(result.solution, fitness, op, lambda, rng);
  result.evaluations = stepper.evaluations();
  return result;
}

}  // namespace dams
