#pragma once

// Butterfly moves, their S-level shadows and F composites, the switch moves
// S_1..S_7 out of Model B, and the Model B decomposition of a reduced prototype.

#include <optional>
#include <string>

#include "prym/prototype.hpp"
#include "prym/surface.hpp"

namespace prym {

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ButterflyParam {
  enum class Kind { Finite, Infinite, General } kind = Kind::Finite;
  std::int64_t p = 1;
  std::int64_t q = 1;

  static ButterflyParam finite(std::int64_t q) { return {Kind::Finite, 1, q}; }
  static ButterflyParam infinite() { return {Kind::Infinite, 0, 1}; }
  // Pairs other than (1,q) and (0,1); not used by the component relation.
  static ButterflyParam general(std::int64_t p, std::int64_t q);

  std::string label() const;
};

bool butterfly_admissible(const Prototype& p, const ButterflyParam& bp);
Prototype butterfly(const Prototype& p, const ButterflyParam& bp);
// Direction of the simple cylinder realizing the move on X_D(p).
Direction butterfly_direction(const Prototype& p, const ButterflyParam& bp);
// Largest finite q with B_q admissible (0 if none).
std::int64_t max_butterfly_q(const Prototype& p);

// e' if B_q maps [e] back into S^h_D, nullopt if it leaves S^h_D.
std::optional<std::int64_t> s_level_step(std::int64_t e, int h, std::int64_t D, const ButterflyParam& q);

// F_q (q > 0) or F_{-|q|} (q < 0) on S^h_D.
bool f_move_admissible(std::int64_t e, int h, std::int64_t D, int q);
std::int64_t f_move(std::int64_t e, int h, std::int64_t D, int q);

struct SwitchResult {
  bool admissible = false;
  std::int64_t e = 0;
  ModelClass target = ModelClass::A;
  std::optional<Direction> slope;
  std::string reason;
};

SwitchResult switch_move(const Prototype& p, int i);

struct ModelBResult {
  std::int64_t e = 0;
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::int64_t n = 0;
  int epsilon = 0;
  Surd slope;
};

ModelBResult model_b_of_reduced(const Prototype& p);

enum class MoveKind { Butterfly, Switch, ModelBSplit, Traced };
std::string to_string(MoveKind k);

struct MoveRecord {
  MoveKind kind = MoveKind::Traced;
  std::string label;
  std::optional<Prototype> source;
  std::string surface;  // description when the source is not a prototypical surface
  std::optional<Prototype> target;
  std::int64_t target_e = 0;
  ModelClass target_model = ModelClass::A;
  std::optional<Direction> witness;
  std::optional<Surd> area;
};

// Certify a move geometrically: trace the direction on the source surface and
// read off the full landing prototype.
MoveRecord traced_move(const FlatSurface& s, const Direction& dir, MoveKind kind, const std::string& label);

}  // namespace prym
