#pragma once

// Flat surfaces in Prym(6) stored as horizontal cylinders. A cylinder is a
// rectangle of the given width and height whose vertical sides are glued; its
// bottom and top edges are cut into horizontal saddle connections, each of
// which appears once on some bottom and once on some top. Bottom and top
// positions of a cylinder share one coordinate, so a top point sits directly
// above the bottom point with the same coordinate.

#include <optional>
#include <string>
#include <vector>

#include "prym/exact.hpp"
#include "prym/prototype.hpp"

namespace prym {

struct Vec2 {
  Surd x;
  Surd y;
};

struct Segment {
  int connection;
  Surd start;
};

struct Cylinder {
  std::string name;
  Surd width;
  Surd height;
  std::vector<Segment> bottom;
  std::vector<Segment> top;
  // The involution maps bottom coordinate x of this cylinder to top
  // coordinate (flip - x) of the partner cylinder.
  int partner = -1;
  Surd flip;
};

struct Connection {
  std::string name;
  Surd length;
  int bottom_cylinder = -1;
  int top_cylinder = -1;
  Surd bottom_start;
  Surd top_start;
  int partner = -1;
};

struct CylinderSpec {
  std::string name;
  Surd width;
  Surd height;
  std::vector<std::pair<std::string, Surd>> bottom;
  std::vector<std::pair<std::string, Surd>> top;
  std::string partner;
  Surd flip;
};

class FlatSurface {
 public:
  FlatSurface(Discriminant d, const std::vector<CylinderSpec>& specs, std::string description);

  Discriminant disc() const { return d_; }
  const std::vector<Cylinder>& cylinders() const { return cylinders_; }
  const std::vector<Connection>& connections() const { return connections_; }
  const std::string& description() const { return description_; }
  Surd area() const;

  // Holonomies generating the relative period lattice.
  std::vector<Vec2> period_generators() const;

  // A point on the top edge of cylinder k at coordinate x (any real) is the
  // same as a point on the bottom edge of another cylinder. Returns that
  // cylinder, the bottom coordinate in [0, width), and whether x is a vertex.
  struct Landing {
    int cylinder;
    Surd x;
    bool vertex;
  };
  Landing cross_top(int k, const Surd& x) const;

  // Number of cone points; 1 for every surface built here.
  int vertex_count() const;

  std::optional<Prototype> prototype;

  std::string svg() const;

 private:
  void check() const;

  Discriminant d_;
  std::vector<Cylinder> cylinders_;
  std::vector<Connection> connections_;
  std::string description_;
  // top segments of each cylinder sorted by start reduced to [0, width)
  std::vector<std::vector<std::pair<Surd, int>>> top_index_;
};

FlatSurface build_prototype_surface(const Prototype& p);
FlatSurface build_two_cylinder_st(std::int64_t lA, std::int64_t lB, std::int64_t lC);

// Flow direction: vertical, or a finite non-zero slope, or horizontal (slope 0).
class Direction {
 public:
  static Direction vertical(Discriminant d) { return Direction(Surd(0, d), true); }
  static Direction slope(const Surd& s) { return Direction(s, false); }

  bool is_vertical() const { return vertical_; }
  bool is_horizontal() const { return !vertical_ && slope_.sign() == 0; }
  const Surd& slope_value() const { return slope_; }
  // dx/dy for non-horizontal directions
  Surd cotangent() const;
  std::string str() const;

 private:
  Direction(Surd s, bool v) : slope_(std::move(s)), vertical_(v) {}
  Surd slope_;
  bool vertical_;
};

enum class DecompositionKind { TwoCylinder, FourCylinderA, FourCylinderB, Other };
std::string to_string(DecompositionKind k);

struct BoundaryMark {
  int connection;
  Surd position;
};

// A cylinder in the traced direction, described in coordinates where the
// direction is horizontal (pointing east): circumference along the flow,
// height across it. Marks are the starting points of boundary saddle
// connections along the top (north) and bottom (south) boundary.
struct TracedCylinder {
  Surd circumference;
  Surd height;
  Surd twist;
  Surd area;
  std::vector<BoundaryMark> top;
  std::vector<BoundaryMark> bottom;
  Vec2 holonomy;

  bool simple() const { return top.size() == 1 && bottom.size() == 1; }
  bool semi_simple() const { return top.size() == 1 || bottom.size() == 1; }
};

struct TracedConnection {
  Surd length;  // along the flow, in normalized coordinates
  Vec2 holonomy;
};

struct CylinderDecomposition {
  Direction direction;
  std::vector<TracedCylinder> cylinders;
  std::vector<TracedConnection> connections;
  std::vector<int> pairing;
  DecompositionKind kind = DecompositionKind::Other;
  std::size_t crossings = 0;

  Surd total_area() const;
};

class TraceBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceOptions {
  std::size_t crossing_budget = 100000;
};

CylinderDecomposition trace_direction(const FlatSurface& s, const Direction& dir, const TraceOptions& opt = {});

// Index of a simple cylinder, else a semi-simple one, else -1.
int semi_simple_index(const CylinderDecomposition& dec);

std::int64_t e_from_area(const FlatSurface& s, const CylinderDecomposition& dec);
std::int64_t e_from_area(const FlatSurface& s, const CylinderDecomposition& dec, int cylinder);

Prototype extract_prototype(const FlatSurface& s, const CylinderDecomposition& dec);

// Trace and extract in one step; nullopt when the decomposition has two cylinders.
std::optional<Prototype> traced_prototype(const FlatSurface& s, const Direction& dir);

std::string decomposition_svg(const CylinderDecomposition& dec);

}  // namespace prym
