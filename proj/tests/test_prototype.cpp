#include <doctest.h>

#include <algorithm>
#include <set>

#include "prym/prototype.hpp"

using namespace prym;

namespace {

Prototype P(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  return make_prototype(w, h, t, e, D);
}

std::vector<std::int64_t> es(const std::vector<Prototype>& v) {
  std::vector<std::int64_t> out;
  for (const auto& p : v) out.push_back(p.e);
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(std::holds_alternative<Prototype>(validate(1, 1, 0, -1, 5)));
  CHECK(std::holds_alternative<Prototype>(validate(3, 1, 0, -2, 16)));

  auto r = validate(1, 3, 0, 0, 12);
  REQUIRE(std::holds_alternative<Rejection>(r));
  CHECK(std::get<Rejection>(r).clause == ValidityClause::LambdaRange);

  CHECK(std::get<Rejection>(validate(2, 1, 0, -1, 13)).clause == ValidityClause::Discriminant);
  CHECK(std::get<Rejection>(validate(2, 4, 2, -3, 41)).clause == ValidityClause::TwistRange);
  CHECK(std::get<Rejection>(validate(8, 2, 0, -2, 68)).clause == ValidityClause::Primitivity);
  CHECK_THROWS_AS(make_prototype(1, 3, 0, 0, 12), std::invalid_argument);
}

TEST_CASE("square discriminant excludes lambda = w/2") {
  // D = 36, e = -2: lambda = 2, so w = 4 gives lambda = w/2
  CHECK_FALSE(is_valid(4, 2, 0, -2, 36));
  CHECK(is_valid(8, 1, 0, -2, 36));
}

TEST_CASE("integer fast path agrees with exact validation") {
  for (std::int64_t D = 4; D <= 260; ++D) {
    for (std::int64_t e = -17; e <= 17; ++e)
      for (std::int64_t w = 1; w <= 70; ++w)
        for (std::int64_t h = 1; h <= 8; ++h)
          for (std::int64_t t = 0; t <= 8; ++t) CHECK(is_valid_fast(w, h, t, e, D) == is_valid(w, h, t, e, D));
  }
}

TEST_CASE("model classification") {
  CHECK(classify_model(P(12, 1, 0, -2, 52)) == ModelClass::A);
  CHECK(classify_model(P(3, 4, 0, -2, 52)) == ModelClass::B);
  CHECK(classify_model(P(1, 1, 0, -1, 5)) == ModelClass::B);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate(4, Filter::All).empty());
  CHECK(enumerate(9, Filter::All).empty());
  CHECK(enumerate(12, Filter::A) == std::vector<Prototype>{P(2, 1, 0, -2, 12)});
  CHECK(es(enumerate(52, Filter::Reduced1)) == std::vector<std::int64_t>{-6, -4, -2, 0, 2});
  CHECK(reduced_e_set(52, 1) == std::vector<std::int64_t>{-6, -4, -2, 0, 2});
  CHECK(es(enumerate(41, Filter::Reduced2)) == std::vector<std::int64_t>{-5, -3});
}

TEST_CASE("enumeration properties up to 3000") {
  for (std::int64_t D = 4; D <= 3000; ++D) {
    if (!is_discriminant(D)) continue;
    auto all = enumerate(D, Filter::All), a = enumerate(D, Filter::A), b = enumerate(D, Filter::B);
    REQUIRE(std::is_sorted(all.begin(), all.end()));
    REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    std::vector<Prototype> merged;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    REQUIRE(merged == all);
    for (const auto& p : a) REQUIRE(classify_model(p) == ModelClass::A);
    for (const auto& p : b) REQUIRE(classify_model(p) == ModelClass::B);
    if (D % 2 == 0)
      for (const auto& p : all) REQUIRE(p.e % 2 == 0);

    for (int h : {1, 2}) {
      if (h == 2 && mod_floor(D, 8) != 1) continue;
      auto red = enumerate(D, h == 1 ? Filter::Reduced1 : Filter::Reduced2);
      REQUIRE(es(red) == reduced_e_set(D, h));
      for (const auto& p : red) {
        REQUIRE(is_valid(p.w, p.h, p.t, p.e, D));
        REQUIRE(p == reduced_prototype(D, h, p.e));
        REQUIRE(std::binary_search(a.begin(), a.end(), p));
        if (h == 2) REQUIRE(p.w % 2 == 0);
      }
    }
    if (mod_floor(D, 8) == 1) {
      std::set<std::string> labels;
      for (const auto& p : a) {
        auto c = invariant_class(p);
        REQUIRE(c.kind == InvariantClass::Kind::Parity);
        REQUIRE((c.value == 2) == (p.w % 2 == 0 && p.h % 2 == 0 && p.t % 2 == 0));
        labels.insert(c.label());
      }
      REQUIRE(labels.size() <= 2);
    }
  }
}

TEST_CASE("small discriminants quoted explicitly") {
  CHECK(enumerate(5, Filter::All) == std::vector<Prototype>{P(1, 1, 0, -1, 5)});
  CHECK(enumerate(5, Filter::B).size() == 1);
  CHECK(enumerate(16, Filter::A) == std::vector<Prototype>{P(3, 1, 0, -2, 16)});
}

TEST_CASE("invariant classes") {
  CHECK(invariant_class(P(6, 2, 0, -5, 73)).label() == "A2");
  CHECK(invariant_class(P(12, 2, 1, -2, 100)).value == 2);
  CHECK(invariant_class(P(4, 1, 0, -5, 41)).label() == "A1");
  CHECK(invariant_class(P(1, 1, 0, -1, 5)).kind == InvariantClass::Kind::Single);
}

TEST_CASE("primitive square counts") {
  CHECK(primitive_square_count(P(4, 1, 0, -3, 25)).count == 10);
  CHECK(primitive_square_count(P(8, 1, 0, -2, 36)).count == 12);

  // S^2_49 is empty; d = 9 has one almost-reduced prototype on each branch of (e + d)/2
  CHECK(enumerate(49, Filter::Reduced2).empty());
  auto odd = P(4, 2, 0, -7, 81), even = P(10, 2, 0, -1, 81);
  CHECK(is_almost_reduced(odd));
  CHECK(is_almost_reduced(even));
  auto so = primitive_square_count(odd), se = primitive_square_count(even);
  CHECK(so.count == 18);
  CHECK(se.count == 18);
  CHECK(so.rescale.num[3] == 2);
  CHECK(se.rescale.num[3] == 1);

  CHECK_THROWS(primitive_square_count(P(12, 1, 0, -2, 52)));

  for (std::int64_t d = 3; d <= 20; ++d) {
    for (int h : {1, 2}) {
      if (h == 2 && mod_floor(d * d, 8) != 1) continue;
      for (const auto& p : enumerate(d * d, h == 1 ? Filter::Reduced1 : Filter::Reduced2))
        CHECK(primitive_square_count(p).count == 2 * d);
    }
  }
}
