#include <algorithm>

#include "prym/surface.hpp"

namespace prym {

namespace {

const BoundaryMark* find_mark(const std::vector<BoundaryMark>& marks, int connection) {
  for (const auto& m : marks)
    if (m.connection == connection) return &m;
  return nullptr;
}

int cylinder_with_top(const CylinderDecomposition& dec, int connection) {
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i)
    if (find_mark(dec.cylinders[i].top, connection)) return static_cast<int>(i);
  throw NormalizationError("connection missing from every top boundary");
}

std::int64_t integer_of(const Surd& v, const char* what) {
  if (!v.is_integer()) throw NormalizationError(std::string(what) + " is not an integer: " + v.str());
  return to_int64(v.a());
}

}  // namespace

std::int64_t e_from_area(const FlatSurface& s, const CylinderDecomposition& dec, int cylinder) {
  Discriminant d = s.disc();
  Surd root = Surd::root(d);
  Surd lam = 2 * root * dec.cylinders.at(cylinder).area / s.area();
  Surd e = 2 * lam - root;
  if (!e.is_integer()) throw NormalizationError("area gives non-integral e': " + e.str());
  return to_int64(e.a());
}

std::int64_t e_from_area(const FlatSurface& s, const CylinderDecomposition& dec) {
  int i = semi_simple_index(dec);
  if (i < 0) throw NormalizationError("decomposition has no semi-simple cylinder");
  return e_from_area(s, dec, i);
}

Prototype extract_prototype(const FlatSurface& s, const CylinderDecomposition& dec) {
  if (dec.kind != DecompositionKind::FourCylinderA && dec.kind != DecompositionKind::FourCylinderB)
    throw NormalizationError("extract_prototype needs a four-cylinder decomposition, got " + to_string(dec.kind));
  const auto& cyl = dec.cylinders;
  Discriminant d = s.disc();

  int small = -1, big = -1;
  Surd s_small(0, d), s_big(0, d);
  if (dec.kind == DecompositionKind::FourCylinderA) {
    // Both simple cylinders rest on one large cylinder; take the one whose
    // bottom connection is followed there by the other's.
    std::vector<int> simple;
    for (std::size_t i = 0; i < cyl.size(); ++i)
      if (cyl[i].simple()) simple.push_back(static_cast<int>(i));
    if (simple.size() != 2) throw NormalizationError("Model A decomposition without two simple cylinders");
    int under = cylinder_with_top(dec, cyl[simple[0]].bottom[0].connection);
    if (cylinder_with_top(dec, cyl[simple[1]].bottom[0].connection) != under)
      throw NormalizationError("simple cylinders do not share a large cylinder");
    const auto& top = cyl[under].top;
    for (int cand : simple) {
      int other = cand == simple[0] ? simple[1] : simple[0];
      auto it = std::find_if(top.begin(), top.end(),
                             [&](const BoundaryMark& m) { return m.connection == cyl[cand].bottom[0].connection; });
      auto nx = std::next(it) == top.end() ? top.begin() : std::next(it);
      if (nx->connection == cyl[other].bottom[0].connection) small = cand;
    }
    if (small < 0) throw NormalizationError("cannot order the simple cylinders");
    big = under;
    int partner = dec.pairing[big];
    const BoundaryMark* y = nullptr;
    for (const auto& m : cyl[big].bottom)
      if (find_mark(cyl[partner].top, m.connection)) y = &m;
    if (!y) throw NormalizationError("no connection shared by the large cylinders");
    const auto& c = cyl[small];
    s_small = c.top[0].position - c.bottom[0].position;
    s_big = find_mark(cyl[big].top, c.bottom[0].connection)->position - y->position;
  } else {
    for (std::size_t i = 0; i < cyl.size(); ++i)
      if (cyl[i].bottom.size() == 1 && cyl[i].top.size() == 2) small = static_cast<int>(i);
    if (small < 0) throw NormalizationError("Model B decomposition without a semi-simple cylinder");
    const auto& c = cyl[small];
    big = cylinder_with_top(dec, c.bottom[0].connection);
    const BoundaryMark* a = nullptr;
    for (const auto& m : c.top)
      if (find_mark(cyl[big].bottom, m.connection)) a = &m;
    if (!a) throw NormalizationError("semi-simple cylinder shares no connection with the large one");
    s_small = a->position - c.bottom[0].position;
    s_big = find_mark(cyl[big].top, c.bottom[0].connection)->position -
            find_mark(cyl[big].bottom, a->connection)->position;
  }

  std::int64_t e = e_from_area(s, dec, small);
  Surd half_lambda = Surd(e, 1, 4, d);
  const auto& c = cyl[small];
  const auto& b = cyl[big];
  // Upper-triangular [[x, y], [0, z]] sending the small cylinder to a square of side lambda'/2.
  Surd x = half_lambda / c.circumference;
  Surd z = half_lambda / c.height;
  Surd y = -(x * s_small) / c.height;
  std::int64_t w = integer_of(2 * x * b.circumference, "w'");
  std::int64_t h = integer_of(2 * z * b.height, "h'");
  std::int64_t t = integer_of(2 * (x * s_big + y * b.height), "t'");
  if (w <= 0 || h <= 0) throw NormalizationError("non-positive normalized widths");
  t = mod_floor(t, gcd64(w, h));
  auto r = validate(w, h, t, e, d.value());
  if (auto* rej = std::get_if<Rejection>(&r))
    throw NormalizationError("normalized quadruple (" + std::to_string(w) + "," + std::to_string(h) + "," +
                             std::to_string(t) + "," + std::to_string(e) + ") rejected: " + rej->message);
  Prototype p = std::get<Prototype>(r);
  ModelClass want = dec.kind == DecompositionKind::FourCylinderA ? ModelClass::A : ModelClass::B;
  if (classify_model(p) != want) throw NormalizationError("normalized prototype " + p.str() + " has the wrong model");
  return p;
}

std::optional<Prototype> traced_prototype(const FlatSurface& s, const Direction& dir) {
  auto dec = trace_direction(s, dir);
  if (dec.kind == DecompositionKind::TwoCylinder) return std::nullopt;
  return extract_prototype(s, dec);
}

}  // namespace prym
