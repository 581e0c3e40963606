#pragma once

// The mod 105 strategy calculus for F-moves on S^h_D, the exhaustive residue
// scan, the sets T^h_D and U^h_D, and the walk of an element of S^h_D into T^h_D.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prym {

using Strategy = std::vector<int>;

constexpr int kModulus = 105;

std::string to_string(const Strategy& s);

// Sum of the F-move displacements, in units of h.
std::int64_t net_displacement(const Strategy& s);

// Throws std::invalid_argument for a step outside {±3, ±5, ±7}.
bool strategy_applies(int d_res, int e_res, int h, const Strategy& s);

struct StrategyScan {
  int h = 1;
  std::vector<Strategy> strategies;
  std::vector<std::int64_t> first_match;  // pairs whose first applicable strategy is strategies[i]
  std::vector<std::int64_t> any_match;    // pairs where strategies[i] applies
  std::vector<std::pair<int, int>> uncovered;
  // pairs outside the listed strategies' reach that no sequence of length <= 4 covers
  std::vector<std::pair<int, int>> search_uncovered;
};

// threads = 0 picks the hardware concurrency.
StrategyScan strategy_scan(int h, unsigned threads = 1);

// Breadth-first search over sequences of length <= max_len whose partial sums
// stay in the window [-24h, 32h]; nullopt if none reaches +8h.
std::optional<Strategy> search_strategy(int d_res, int e_res, int h, int max_len = 4);

// First listed strategy applying to (D, e), nullopt for the two exceptional classes.
std::optional<Strategy> find_strategy(std::int64_t D, std::int64_t e, int h);

class RangeSets {
 public:
  RangeSets(std::int64_t D, int h);

  std::int64_t D() const { return D_; }
  int h() const { return h_; }
  bool in_s(std::int64_t e) const;
  bool in_t(std::int64_t e) const;
  bool in_u(std::int64_t e) const;
  std::vector<std::int64_t> t_set() const;

 private:
  std::int64_t D_;
  int h_;
};

struct WalkStep {
  int q = 0;  // 0 for the reflection e -> -e - 4h
  std::int64_t from = 0, to = 0;
};

class WalkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Moves e into T^h_D by a reflection and F_q moves with the smallest usable
// prime q. Needs D >= (55h)^2 for h = 1 and D >= (63h)^2 for h = 2.
std::vector<WalkStep> walk_to_t(std::int64_t D, int h, std::int64_t e, std::int64_t budget = 10000);

// Apply a strategy to concrete (D, e) with integer F-moves; returns e + 8h.
std::int64_t run_strategy(std::int64_t D, std::int64_t e, int h, const Strategy& s);

}  // namespace prym
