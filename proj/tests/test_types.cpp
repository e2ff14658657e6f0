#include <doctest.h>

#include "dams/types.hpp"

using namespace dams;

TEST_CASE("node state serialization round trip") {
  NodeState state;
  state.node_id = 7;
  state.solution = BitString::parse("0110100111");
  state.op = 2;
  state.reward = 5;
  state.rng = Rng::stream(99, 7);
  state.rng.next_u64();  // mid-stream state must survive too

  const std::string text = node_state_to_json(state);
  const NodeState back = node_state_from_json(text);
  CHECK(back == state);
  CHECK(back.envelope() == state.envelope());
}
