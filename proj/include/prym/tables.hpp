#pragma once

// Published reference data used as test oracles. Nothing here is derived:
// each constant is copied from the source tables and checked against
// computation elsewhere.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/prototype.hpp"

namespace prym::tables {

using ESet = std::vector<std::int64_t>;
using EPartition = std::vector<ESet>;

// Discriminants where the generic P^A_D component count does not apply.
const std::vector<std::int64_t>& exc1();
// D = 1 mod 8 discriminants where P^{A2}_D splits in two.
const std::vector<std::int64_t>& exc2();
bool in_exc1(std::int64_t D);
bool in_exc2(std::int64_t D);

// Expected number of P^A_D components for D in Exc1.
int exc1_component_count(std::int64_t D);

// Discriminants excluded from the generic S^1_D and S^2_D statements.
const std::vector<std::int64_t>& s1_exceptions();
const std::vector<std::int64_t>& s2_exceptions();

// Explicit S^h_D partitions quoted in the text, nullopt if none is quoted.
std::optional<EPartition> s_partition(std::int64_t D, int h);

struct SquareBridgeRow {
  std::int64_t d;
  Prototype p;
  std::int64_t lo, mid, hi;  // h < w - e - h < (e + d) / 2
};
const std::vector<SquareBridgeRow>& square_bridge_rows();
std::optional<SquareBridgeRow> square_bridge_row(std::int64_t d);

// One step of a published chain. "move" is "B1", "B_inf", "S2", "ModelBSplit", ...
// A target with w = 0 gives only its e.
struct ChainStep {
  std::string move;
  Prototype target;
};

struct Chain {
  std::int64_t D;
  Prototype start;
  std::vector<ChainStep> steps;
};

const std::vector<Chain>& butterfly_chains();
// Two-parameter butterfly chains for D = 12+16k, 4+32k, 20+32k, 1+16k, 9+16k.
std::vector<Chain> family_chains(std::int64_t k);
const std::vector<Chain>& switch_chains();

// Surfaces built from (lA, lB, lC) and the simple cylinders quoted on them.
struct SquareWitness {
  std::int64_t D;
  std::int64_t lA, lB, lC;
  // slope num/den of the simple cylinder, den = 0 for vertical
  std::int64_t num, den;
  std::int64_t area;
  std::int64_t e;
  std::optional<Prototype> prototype;
};
const std::vector<SquareWitness>& square_witnesses();

// Explicit P^A_D components quoted for special discriminants.
struct NamedComponent {
  std::int64_t D;
  std::vector<Prototype> members;
};
const std::vector<NamedComponent>& named_components();
// Quoted P^{A2}_D for small D = 1 mod 8 where it is a single component.
const std::vector<NamedComponent>& named_a2_sets();

// The twelve covering strategies, in their listed order.
const std::vector<std::vector<int>>& strategies();
constexpr std::int64_t kStrategyThreeCount = 7350;
constexpr std::int64_t kStrategyFiveMinusThreeCount = 1960;

}  // namespace prym::tables
