#pragma once

#include <cstdint>
#include <string>

#include "dams/bitstring.hpp"
#include "dams/rng.hpp"

namespace dams {

/// Count of 1-bits of a solution.
using Fitness = std::int32_t;

/// Fitness gain of the most recent atomic application. Elitist acceptance
/// keeps it >= 0, but the type is signed so other acceptance rules fit.
using Reward = std::int32_t;

/// Index into the configured operator set.
using OperatorId = std::int32_t;

/// Round-start snapshot (r, k, P) a node sends to each neighbor.
struct Envelope {
  Reward reward = 0;
  OperatorId op = 0;
  BitString solution;

  bool operator==(const Envelope&) const = default;
};

/// Per-node local information: current solution, the operator applied in
/// the previous round and its reward, and the node's private random stream.
struct NodeState {
  int node_id = 0;
  BitString solution;
  OperatorId op = 0;
  Reward reward = 0;
  Rng rng;

  Envelope envelope() const { return Envelope{reward, op, solution}; }

  bool operator==(const NodeState&) const = default;
};

/// Lossless text round trip for NodeState (JSON).
std::string node_state_to_json(const NodeState& state);
NodeState node_state_from_json(const std::string& text);

}  // namespace dams
