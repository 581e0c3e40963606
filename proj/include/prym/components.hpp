#pragma once

// Components of P^A_D, S^1_D and S^2_D under butterfly moves, the bridges
// between them built from switch moves and explicit surfaces, and orbit counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/moves.hpp"
#include "prym/prototype.hpp"

namespace prym {

enum class Level { PA, S1, S2 };
std::string to_string(Level l);
std::optional<Level> parse_level(const std::string& s);

struct ComponentPartition {
  std::int64_t D = 0;
  Level level = Level::PA;
  std::vector<Prototype> universe;  // enumeration order
  std::vector<int> label;           // index into universe of the smallest member of the class
  std::vector<MoveRecord> generators;

  int count() const;
  int label_of(const Prototype& p) const;  // -1 if p is not in the universe
  // classes in order of their smallest member, members in enumeration order
  std::vector<std::vector<Prototype>> components() const;
  std::vector<std::vector<std::int64_t>> e_components() const;
};

struct PartitionOptions {
  bool record_generators = false;
  // nonzero: visit edges in a pseudo-random order drawn from this seed
  std::uint64_t shuffle_seed = 0;
};

ComponentPartition component_partition(std::int64_t D, Level level, const PartitionOptions& opt = {});

struct TheoremReport {
  std::int64_t D = 0;
  std::string theorem;  // "pd", "s1", "s2", "orbits"
  bool applicable = true;
  bool claimed = true;  // false when the published data makes no statement for this D
  bool match = true;
  int expected = -1;
  int actual = -1;
  std::vector<std::string> details;
};

TheoremReport verify_pd_theorem(std::int64_t D);
TheoremReport verify_sd_theorem(std::int64_t D, int h);

// Bridges. Every returned record is certified by tracing: its target is read
// off the traced decomposition, never taken from a formula alone.
struct Bridge {
  std::vector<MoveRecord> moves;  // all moves live on one GL+(2,R) orbit
  std::string route;
};

class BridgeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bridge bridge_even(std::int64_t D);

struct Bridge1Mod8 {
  Bridge bridge;
  std::optional<Prototype> window_prototype;  // (w,2,0,e) with 4 | w and the floor gap, when D > 441
  std::int64_t e = 0, m = 0, n = 0, e_target = 0;
};
Bridge1Mod8 bridge_1mod8(std::int64_t D);

// Model B splits of reduced prototypes plus switch moves explored breadth first over P^B_D.
Bridge model_b_bridges(std::int64_t D);

// Two-cylinder square-tiled constructions and the bounded direction search for square D.
Bridge square_bridges(std::int64_t D);

struct OrbitReport {
  std::int64_t D = 0;
  int pa_components = 0;
  int orbits = 0;
  std::vector<Bridge> bridges;
};

OrbitReport orbit_report(std::int64_t D);
int orbit_count(std::int64_t D);
int square_tiled_orbits(std::int64_t n);

}  // namespace prym
