#include <doctest.h>

#include "prym/moves.hpp"
#include "prym/surface.hpp"

using namespace prym;

namespace {

Prototype P(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  return make_prototype(w, h, t, e, D);
}

Direction horizontal(std::int64_t D) { return Direction::slope(Surd(0, Discriminant(D))); }

Direction rational(std::int64_t num, std::int64_t den, std::int64_t D) {
  return Direction::slope(surd_make(num, 0, den, Discriminant(D)));
}

int cylinder_with_area(const CylinderDecomposition& dec, const Surd& a) {
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i)
    if (dec.cylinders[i].area == a) return static_cast<int>(i);
  return -1;
}

void check_conservation(const FlatSurface& s, const CylinderDecomposition& dec) {
  REQUIRE(dec.total_area() == s.area());
  REQUIRE((dec.cylinders.size() == 2 || dec.cylinders.size() == 4));
  REQUIRE(dec.pairing.size() == dec.cylinders.size());
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(dec.pairing[i]);
    REQUIRE(static_cast<std::size_t>(dec.pairing[j]) == i);
    REQUIRE(dec.cylinders[i].circumference == dec.cylinders[j].circumference);
    REQUIRE(dec.cylinders[i].height == dec.cylinders[j].height);
  }
}

}  // namespace

TEST_CASE("golden surface at D = 5") {
  auto s = build_prototype_surface(P(1, 1, 0, -1, 5));
  Surd x = surd_make(-1, 1, 2, Discriminant(5));
  CHECK(s.cylinders()[0].width == x / 2);
  CHECK(s.prototype->lambda() == x);
  CHECK(s.vertex_count() == 1);
  auto dec = trace_direction(s, horizontal(5));
  CHECK(dec.kind == DecompositionKind::FourCylinderB);
  CHECK(extract_prototype(s, dec) == P(1, 1, 0, -1, 5));
}

TEST_CASE("area identity and horizontal round-trips") {
  auto p = P(12, 1, 0, -2, 52);
  auto s = build_prototype_surface(p);
  CHECK(s.area() == p.lambda() * Surd::root(Discriminant(52)) / 2);
  CHECK(e_from_area(s, trace_direction(s, horizontal(52))) == -2);

  for (std::int64_t D = 5; D <= 400; ++D) {
    if (!is_discriminant(D)) continue;
    Surd root = Surd::root(Discriminant(D));
    for (const auto& q : enumerate(D, Filter::All)) {
      auto sq = build_prototype_surface(q);
      REQUIRE(sq.vertex_count() == 1);
      REQUIRE(sq.area() == q.lambda() * root / 2);
      auto dec = trace_direction(sq, horizontal(D));
      check_conservation(sq, dec);
      REQUIRE(dec.kind == (classify_model(q) == ModelClass::A ? DecompositionKind::FourCylinderA
                                                               : DecompositionKind::FourCylinderB));
      REQUIRE(extract_prototype(sq, dec) == q);
    }
  }
}

TEST_CASE("D = 52 Model B datum") {
  auto p = P(12, 1, 0, -2, 52);
  auto s = build_prototype_surface(p);
  Surd h(1, Discriminant(52));
  auto dec = trace_direction(s, Direction::slope(h / p.lambda()));
  CHECK(dec.cylinders.size() == 4);
  CHECK(dec.kind == DecompositionKind::FourCylinderB);
  CHECK(extract_prototype(s, dec) == P(3, 4, 0, -2, 52));

  auto b = build_prototype_surface(P(3, 4, 0, -2, 52));
  CHECK(extract_prototype(b, trace_direction(b, horizontal(52))) == P(3, 4, 0, -2, 52));
}

TEST_CASE("switch direction out of Model B at D = 60") {
  auto p = P(11, 1, 0, 4, 60);
  REQUIRE(classify_model(p) == ModelClass::B);
  auto s = build_prototype_surface(p);
  Surd one(1, Discriminant(60));
  auto dec = trace_direction(s, Direction::slope((p.lambda() + one) / p.lambda()));
  CHECK(dec.cylinders.size() == 4);
  CHECK(dec.kind == DecompositionKind::FourCylinderA);
  CHECK(e_from_area(s, dec) == switch_move(p, 1).e);
}

TEST_CASE("S5 at D = 41") {
  auto p = P(2, 4, 1, -3, 41);
  auto sw = switch_move(p, 5);
  REQUIRE(sw.admissible);
  auto s = build_prototype_surface(p);
  CHECK(extract_prototype(s, trace_direction(s, *sw.slope)) == P(10, 1, 0, 1, 41));
}

TEST_CASE("two-cylinder square-tiled surfaces") {
  struct Row {
    std::int64_t lA, lB, lC, d;
  };
  for (auto r : {Row{2, 1, 1, 6}, Row{2, 2, 1, 8}, Row{2, 4, 1, 12}}) {
    auto s = build_two_cylinder_st(r.lA, r.lB, r.lC);
    CHECK(s.disc().value() == r.d * r.d);
    CHECK(s.area() == Surd(2 * r.d, s.disc()));
    CHECK(s.vertex_count() == 1);
    CHECK(s.cylinders().size() == 2);
  }
  CHECK(build_two_cylinder_st(2, 4, 1).area() == Surd(24, Discriminant(144)));
  CHECK_THROWS_AS(build_two_cylinder_st(0, 1, 1), std::invalid_argument);
}

TEST_CASE("e from area on ST(2,1,1)") {
  auto s = build_two_cylinder_st(2, 1, 1);
  auto dec = trace_direction(s, rational(3, 5, 36));
  check_conservation(s, dec);
  int c = cylinder_with_area(dec, Surd(3, s.disc()));
  REQUIRE(c >= 0);
  CHECK(e_from_area(s, dec, c) == 0);

  auto vert = trace_direction(s, Direction::vertical(s.disc()));
  check_conservation(s, vert);
  int cv = cylinder_with_area(vert, Surd(2, s.disc()));
  REQUIRE(cv >= 0);
  CHECK(vert.cylinders[cv].simple());
  CHECK(e_from_area(s, vert, cv) == -2);
  CHECK(traced_prototype(s, Direction::vertical(s.disc())) == P(8, 1, 0, -2, 36));
}

TEST_CASE("two-cylinder decompositions are refused by extraction") {
  auto s = build_two_cylinder_st(2, 1, 1);
  auto dec = trace_direction(s, horizontal(36));
  CHECK(dec.kind == DecompositionKind::TwoCylinder);
  CHECK_THROWS_AS(extract_prototype(s, dec), NormalizationError);
  CHECK_FALSE(traced_prototype(s, horizontal(36)).has_value());
}

TEST_CASE("crossing budget") {
  auto s = build_prototype_surface(P(12, 1, 0, -2, 52));
  TraceOptions tiny;
  tiny.crossing_budget = 1;
  Surd h(1, Discriminant(52));
  CHECK_THROWS_AS(trace_direction(s, Direction::slope(h / s.prototype->lambda()), tiny), TraceBudgetExceeded);
  tiny.crossing_budget = 100000;
  CHECK_NOTHROW(trace_direction(s, Direction::slope(h / s.prototype->lambda()), tiny));
}

TEST_CASE("switch formulas agree with the tracer up to D = 300") {
  int checked = 0;
  for (std::int64_t D = 5; D <= 300; ++D) {
    if (!is_discriminant(D)) continue;
    for (const auto& p : enumerate(D, Filter::B)) {
      auto s = build_prototype_surface(p);
      for (int i = 1; i <= 7; ++i) {
        auto sw = switch_move(p, i);
        if (!sw.admissible) continue;
        auto dec = trace_direction(s, *sw.slope);
        check_conservation(s, dec);
        REQUIRE(e_from_area(s, dec) == sw.e);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("butterfly formulas agree with the tracer up to D = 200") {
  for (std::int64_t D = 5; D <= 200; ++D) {
    if (!is_discriminant(D)) continue;
    for (const auto& p : enumerate(D, Filter::A)) {
      auto s = build_prototype_surface(p);
      std::vector<ButterflyParam> params{ButterflyParam::infinite()};
      for (std::int64_t q = 1; q <= std::min<std::int64_t>(3, max_butterfly_q(p)); ++q)
        params.push_back(ButterflyParam::finite(q));
      for (const auto& bp : params) {
        auto dec = trace_direction(s, butterfly_direction(p, bp));
        REQUIRE(extract_prototype(s, dec) == butterfly(p, bp));
      }
    }
  }
}
