#include <doctest.h>

#include <random>

#include "prym/exact.hpp"

using namespace prym;

namespace {

// High-precision decimal evaluation, used only to cross-check exact results.
mpf_class eval(const Surd& x) {
  mpf_class root(x.disc().value(), 800);
  root = sqrt(root);
  mpf_class num(x.a(), 800), b(x.b(), 800), den(x.den(), 800);
  return (num + b * root) / den;
}

Surd random_surd(std::mt19937_64& rng, Discriminant d) {
  std::uniform_int_distribution<long> coef(-60, 60), den(1, 40);
  return Surd(coef(rng), coef(rng), den(rng), d);
}

}  // namespace

TEST_CASE("discriminants") {
  CHECK(is_discriminant(4));
  CHECK(is_discriminant(5));
  CHECK_FALSE(is_discriminant(6));
  CHECK_FALSE(is_discriminant(7));
  CHECK(Discriminant(36).is_square());
  CHECK_FALSE(Discriminant(52).is_square());
  CHECK(Discriminant(52).root() == 7);
}

TEST_CASE("canonical form") {
  Surd x = surd_make(-2, 1, 2, Discriminant(52));
  CHECK(x.a() == -2);
  CHECK(x.b() == 1);
  CHECK(x.den() == 2);

  Surd y = surd_make(2, 2, 4, Discriminant(5));
  CHECK(y.a() == 1);
  CHECK(y.b() == 1);
  CHECK(y.den() == 2);

  Surd z = surd_make(4, 1, 1, Discriminant(36));
  CHECK(z.a() == 10);
  CHECK(z.b() == 0);
  CHECK(z.den() == 1);

  Surd n = surd_make(3, -1, -6, Discriminant(5));
  CHECK(n.den() > 0);
  CHECK(n == Surd(-3, 1, 6, Discriminant(5)));

  CHECK_THROWS_AS(surd_make(1, 1, 0, Discriminant(5)), ArithmeticError);
}

TEST_CASE("comparisons") {
  Discriminant d52(52), d60(60);
  Surd lam = surd_make(-2, 1, 2, d52);
  CHECK(surd_cmp(lam, Surd(3, d52)) == Ordering::Less);
  CHECK(surd_cmp(lam, lam) == Ordering::Equal);
  CHECK(surd_cmp(surd_make(4, 1, 2, d60), Surd(11 - 4 - 1, d60)) == Ordering::Less);
  CHECK_THROWS(surd_cmp(Surd(1, d52), Surd(1, d60)));
}

TEST_CASE("arithmetic") {
  Discriminant d5(5), d52(52);
  Surd lam = surd_make(-1, 1, 2, d5);
  CHECK(lam * lam == surd_make(3, -1, 2, d5));
  CHECK(lam * lam == Surd(-1, d5) * lam + Surd(1, d5));

  Surd l52 = surd_make(-2, 1, 2, d52);
  CHECK(surd_arith(l52, Surd(2, d52), ArithOp::Mul) == surd_make(-2, 1, 1, d52));
  Surd q = surd_arith(Surd(12, d52), l52, ArithOp::Div);
  CHECK(q * l52 == Surd(12, d52));
  CHECK(q == surd_make(12, 6, 12, d52));
  CHECK_THROWS_AS(l52 / Surd(0, d52), ArithmeticError);
}

TEST_CASE("floor") {
  Discriminant d52(52), d68(68);
  CHECK(surd_floor(Surd(12, d52) / surd_make(-2, 1, 2, d52)) == 4);
  CHECK(surd_floor(Surd(16, d68) / surd_make(-2, 1, 2, d68)) == 5);
  CHECK(surd_floor(Surd(0, d52)) == 0);
  CHECK(surd_floor(surd_make(-1, 0, 2, d52)) == -1);
}

TEST_CASE("lambda satisfies its minimal polynomial") {
  for (std::int64_t D = 5; D <= 400; ++D) {
    if (!is_discriminant(D)) continue;
    Discriminant d(D);
    for (std::int64_t e = -static_cast<std::int64_t>(d.root()); e * e < D; ++e) {
      if ((D - e * e) % 4 != 0) continue;
      std::int64_t wh = (D - e * e) / 4;
      Surd lam = surd_make(e, 1, 2, d);
      CHECK(lam * lam == Surd(e, d) * lam + Surd(wh, d));
    }
  }
}

TEST_CASE("randomized order, floor and decimal agreement") {
  std::mt19937_64 rng(20261015);
  for (std::int64_t D : {5, 8, 13, 36, 41, 52, 100, 2017}) {
    Discriminant d(D);
    for (int i = 0; i < 200; ++i) {
      Surd x = random_surd(rng, d), y = random_surd(rng, d), z = random_surd(rng, d);
      Ordering xy = surd_cmp(x, y), yx = surd_cmp(y, x);
      CHECK((xy == Ordering::Less) == (yx == Ordering::Greater));
      CHECK((xy == Ordering::Equal) == (yx == Ordering::Equal));
      if (x <= y && y <= z) CHECK(x <= z);

      Integer f = surd_floor(x);
      CHECK(Surd(f, 0, 1, d) <= x);
      CHECK(x < Surd(f + 1, 0, 1, d));

      mpf_class tol(1, 800);
      tol = tol / 1e150;
      for (ArithOp op : {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div}) {
        if (op == ArithOp::Div && y.sign() == 0) continue;
        mpf_class expect(0, 800);
        if (op == ArithOp::Add) expect = eval(x) + eval(y);
        if (op == ArithOp::Sub) expect = eval(x) - eval(y);
        if (op == ArithOp::Mul) expect = eval(x) * eval(y);
        if (op == ArithOp::Div) expect = eval(x) / eval(y);
        mpf_class diff = eval(surd_arith(x, y, op)) - expect;
        CHECK(abs(diff) < tol);
      }
    }
  }
}
