#include "dams/types.hpp"

#include <nlohmann/json.hpp>

namespace dams {

std::string node_state_to_json(const NodeState& state) {
  nlohmann::json j;
  j["node_id"] = state.node_id;
  j["solution"] = state.solution.to_string();
  j["operator"] = state.op;
  j["reward"] = state.reward;
  // 64-bit state as a decimal string: JSON numbers lose precision past 2^53.
  j["rng_state"] = std::to_string(state.rng.state());
  return j.dump();
}

NodeState node_state_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  NodeState state;
  state.node_id = j.at("node_id").get<int>();
  state.solution = BitString::parse(j.at("solution").get<std::string>());
  state.op = j.at("operator").get<OperatorId>();
  state.reward = j.at("reward").get<Reward>();
  state.rng = Rng::from_state(std::stoull(j.at("rng_state").get<std::string>()));
  return state;
}

}  // namespace dams
