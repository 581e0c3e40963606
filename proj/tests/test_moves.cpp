#include <doctest.h>

#include <deque>
#include <numeric>
#include <set>

#include "prym/moves.hpp"
#include "prym/tables.hpp"
#include "support.hpp"

using namespace prym;

namespace {

Prototype P(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  return make_prototype(w, h, t, e, D);
}

const auto Binf = ButterflyParam::infinite();
ButterflyParam B(std::int64_t q) { return ButterflyParam::finite(q); }

std::vector<ButterflyParam> all_params(const Prototype& p) {
  std::vector<ButterflyParam> v{Binf};
  for (std::int64_t q = 1; q <= max_butterfly_q(p); ++q) v.push_back(B(q));
  return v;
}

}  // namespace

TEST_CASE("butterfly chains through reference data") {
  CHECK(butterfly(P(12, 1, 0, -5, 73), B(3)) == P(2, 3, 0, -7, 73));
  CHECK(butterfly(P(2, 3, 0, -7, 73), Binf) == P(4, 3, 0, -5, 73));
  CHECK(butterfly(P(4, 3, 0, -5, 73), B(1)) == P(6, 1, 0, -7, 73));

  CHECK(butterfly(P(32, 1, 0, 2, 132), B(2)) == P(4, 2, 1, -10, 132));
  CHECK(butterfly(P(4, 2, 1, -10, 132), B(2)) == P(12, 2, 1, -6, 132));
  CHECK(butterfly(P(12, 2, 1, -6, 132), B(1)) == P(32, 1, 0, -2, 132));

  CHECK(butterfly(P(6, 1, 0, -8, 88), B(4)) == P(3, 2, 0, -8, 88));
  CHECK(butterfly(P(3, 2, 0, -8, 88), B(1)) == P(22, 1, 0, 0, 88));

  for (const auto& ch : tables::butterfly_chains()) CHECK(testing::replay(ch) == "");
  for (std::int64_t k = 4; k <= 40; ++k)
    for (const auto& ch : tables::family_chains(k)) CHECK(testing::replay(ch) == "");
}

TEST_CASE("inadmissible butterflies are rejected") {
  Prototype p = P(12, 1, 0, -2, 52);
  CHECK(max_butterfly_q(p) == 2);
  CHECK_THROWS_AS(butterfly(p, B(3)), MoveError);
  CHECK_THROWS_AS(butterfly(P(3, 4, 0, -2, 52), Binf), MoveError);
  CHECK_THROWS_AS(ButterflyParam::general(2, 4), MoveError);
  CHECK(ButterflyParam::general(1, 3).kind == ButterflyParam::Kind::Finite);
}

TEST_CASE("S-level steps") {
  CHECK(s_level_step(0, 1, 88, B(1)) == -4);
  CHECK(s_level_step(-8, 1, 88, B(1)) == 4);
  CHECK(s_level_step(-5, 2, 41, Binf) == -3);
  CHECK_THROWS(s_level_step(1, 1, 88, B(1)));
}

TEST_CASE("F moves") {
  // (D, e) = (0, 3) mod 105
  CHECK(f_move(3, 1, 945, 5) == 19);
  CHECK(f_move(19, 1, 945, -3) == 11);
  CHECK(f_move_admissible(2, 1, 3000, 3));
  CHECK(f_move(2, 1, 3000, 3) == 10);
  CHECK_THROWS_AS(f_move(2, 1, 3000, 9), MoveError);
  CHECK_FALSE(f_move_admissible(1, 1, 3001, 3));
}

TEST_CASE("switch moves") {
  auto s2 = switch_move(P(3, 4, 0, -2, 52), 2);
  CHECK(s2.admissible);
  CHECK(s2.e == -4);
  CHECK(s2.target == ModelClass::A);

  auto s4 = switch_move(P(8, 1, 0, 6, 68), 4);
  CHECK(s4.admissible);
  CHECK(s4.e == 2);

  auto s6 = switch_move(P(4, 4, 3, -1, 65), 6);
  CHECK(s6.admissible);
  CHECK(s6.target == ModelClass::B);
  CHECK(s6.e == 5);

  auto s5 = switch_move(P(2, 4, 1, -3, 41), 5);
  CHECK(s5.admissible);
  CHECK(s5.e == 1);

  CHECK_THROWS(switch_move(P(12, 1, 0, -2, 52), 1));
  CHECK_THROWS(switch_move(P(3, 4, 0, -2, 52), 8));
}

TEST_CASE("Model B decomposition of reduced prototypes") {
  auto a = model_b_of_reduced(P(12, 1, 0, -2, 52));
  CHECK(a.n == 4);
  CHECK(a.e == -2);
  CHECK(a.w == 3);
  CHECK(a.h == 4);
  auto b = model_b_of_reduced(P(16, 1, 0, -2, 68));
  CHECK(b.n == 5);
  CHECK(b.e == 6);
  CHECK(b.w == 8);
  CHECK(b.h == 1);
  auto c = model_b_of_reduced(P(20, 1, 0, 2, 84));
  CHECK(c.n == 3);
  CHECK(c.e == -2);
  CHECK(c.w == 4);
  CHECK(c.h == 5);
  CHECK_THROWS(model_b_of_reduced(P(8, 1, 0, -2, 36)));
}

TEST_CASE("butterfly properties up to 1000") {
  for (std::int64_t D = 5; D <= 1000; ++D) {
    if (!is_discriminant(D)) continue;
    for (const auto& p : enumerate(D, Filter::A)) {
      for (const auto& bp : all_params(p)) {
        Prototype q = butterfly(p, bp);
        REQUIRE(is_valid(q.w, q.h, q.t, q.e, D));
        REQUIRE(classify_model(q) == ModelClass::A);
        std::int64_t e2 = bp.kind == ButterflyParam::Kind::Infinite ? -p.e - 4 * p.h : -p.e - 4 * bp.q * p.h;
        REQUIRE(q.e == e2);
        REQUIRE(invariant_class(q) == invariant_class(p));
      }
      if (p.t == 0) REQUIRE(butterfly(butterfly(p, Binf), Binf) == p);
    }
    if (mod_floor(D, 8) != 1) continue;
    for (const auto& p : enumerate(D, Filter::Reduced2)) {
      for (std::int64_t q = 1; q <= max_butterfly_q(p); ++q) {
        if (std::gcd(p.w / 2, q) != 1) continue;
        Prototype img = butterfly(p, B(q));
        REQUIRE(img.h == 2);
        REQUIRE(img.t == 0);
        REQUIRE(img.w % 2 == 0);
      }
    }
  }
}

TEST_CASE("every P^A prototype reduces to S^1 or S^2") {
  for (std::int64_t D = 5; D <= 600; ++D) {
    if (!is_discriminant(D)) continue;
    auto a = enumerate(D, Filter::A);
    for (const auto& start : a) {
      std::set<Prototype> seen{start};
      std::deque<Prototype> queue{start};
      bool reached = false;
      while (!queue.empty() && !reached) {
        Prototype p = queue.front();
        queue.pop_front();
        reached = is_reduced(p) || is_almost_reduced(p);
        for (const auto& bp : all_params(p)) {
          Prototype q = butterfly(p, bp);
          if (seen.insert(q).second) queue.push_back(q);
        }
      }
      REQUIRE(reached);
    }
  }
}

TEST_CASE("S-level steps agree with full butterflies") {
  for (std::int64_t D = 12; D <= 800; ++D) {
    if (!is_discriminant(D)) continue;
    for (int h : {1, 2}) {
      if (h == 2 && mod_floor(D, 8) != 1) continue;
      for (std::int64_t e : reduced_e_set(D, h)) {
        Prototype p = reduced_prototype(D, h, e);
        for (const auto& bp : all_params(p)) {
          Prototype q = butterfly(p, bp);
          bool stays = q.h == h && q.t == 0 && (h == 1 || q.w % 2 == 0);
          auto step = s_level_step(e, h, D, bp);
          REQUIRE(step.has_value() == stays);
          if (stays) REQUIRE(*step == q.e);
        }
      }
    }
  }
}
