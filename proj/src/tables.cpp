#include "prym/tables.hpp"

#include <algorithm>

namespace prym::tables {

namespace {

Prototype P(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  return Prototype{w, h, t, e, D};
}
// only e is quoted
Prototype E(std::int64_t e, std::int64_t D) { return Prototype{0, 0, 0, e, D}; }

bool contains(const std::vector<std::int64_t>& v, std::int64_t D) { return std::find(v.begin(), v.end(), D) != v.end(); }

}  // namespace

const std::vector<std::int64_t>& exc1() {
  static const std::vector<std::int64_t> v{4, 5, 8, 9, 12, 16, 17, 25, 33, 36, 41, 49, 52, 68, 84, 100};
  return v;
}

const std::vector<std::int64_t>& exc2() {
  static const std::vector<std::int64_t> v{113, 145, 153, 177, 209, 265, 313, 481};
  return v;
}

bool in_exc1(std::int64_t D) { return contains(exc1(), D); }
bool in_exc2(std::int64_t D) { return contains(exc2(), D); }

int exc1_component_count(std::int64_t D) {
  if (contains({4, 5, 9}, D)) return 0;
  if (contains({8, 12, 16, 17, 25, 33, 49}, D)) return 1;
  // 36 is listed with the three-component cases, but its two components are
  // also quoted explicitly and computation agrees with the explicit list.
  if (D == 36) return 2;
  if (contains({41, 52, 68, 84, 100}, D)) return 3;
  return -1;
}

const std::vector<std::int64_t>& s1_exceptions() {
  static const std::vector<std::int64_t> v{12,  16,  17,  20,  25,  28,  36,  73,  88,  97,  105, 112, 121, 124,
                                           136, 145, 148, 169, 172, 184, 193, 196, 201, 217, 220, 241, 244, 265,
                                           268, 292, 304, 316, 364, 385, 436, 484, 556, 604, 676, 796, 844, 1684};
  return v;
}

const std::vector<std::int64_t>& s2_exceptions() {
  static const std::vector<std::int64_t> v{17,  25,  33,  49,  113, 145, 153, 177, 209, 217,
                                           265, 273, 313, 321, 361, 385, 417, 481, 513};
  return v;
}

std::optional<EPartition> s_partition(std::int64_t D, int h) {
  if (h == 1) {
    switch (D) {
      case 20:
      case 28:
      case 36:
        return EPartition{{-2}, {-4, 0}};
      case 41:
        return EPartition{{-5, 1}, {-3, -1}};
      case 52:
        return EPartition{{-6, 2}, {-4, 0}, {-2}};
      // The list quoted for 68 omits e = -8, which lies in S^1_68; it is not used.
      case 73:
        return EPartition{{-5, 1}, {-7, 3}, {-3, -1}};
      case 84:
        return EPartition{{-6, 2}, {-8, -4, 0, 4}, {-2}};
      case 88:
        return EPartition{{0, -4}, {-8, 4}, {2, -6, -2}};
      default:
        return std::nullopt;
    }
  }
  if (h != 2) return std::nullopt;
  if (contains({17, 25, 33, 49}, D)) return EPartition{};
  switch (D) {
    case 41:
      return EPartition{{-5, -3}};
    case 113:
    case 145:
    case 177:
    case 209:
      return EPartition{{-7, -1}, {1, -9}};
    case 153:
      return EPartition{{3, -11}, {-5, -3}};
    case 217:
    case 313:
      return EPartition{{3, -11}, {-13, -3, 5, -5}};
    case 265:
    case 361:
      return EPartition{{3, -3, -11, -5}, {-13, 5}};
    case 273:
      return EPartition{{1, -9}, {-15, -7, -1, 7}};
    case 321:
    case 417:
    case 513:
      return EPartition{{1, -7, -9, 9, -1, -17}, {-15, 7}};
    case 385:
    case 481:
      return EPartition{{1, -15, 7, -7, -9, -1}, {9, -17}};
    default:
      return std::nullopt;
  }
}

const std::vector<SquareBridgeRow>& square_bridge_rows() {
  static const std::vector<SquareBridgeRow> v{
      {14, P(15, 3, 0, 4, 196), 3, 8, 9},     {18, P(16, 5, 0, 2, 324), 5, 9, 10},
      {20, P(25, 3, 0, 10, 400), 3, 12, 15},  {22, P(21, 5, 0, 8, 484), 5, 8, 15},
      {24, P(20, 7, 0, 4, 576), 7, 9, 14},    {32, P(28, 9, 0, 4, 1024), 9, 15, 18},
      {34, P(45, 5, 0, 16, 1156), 5, 24, 25}, {36, P(35, 9, 0, 6, 1296), 9, 20, 21},
      {46, P(35, 15, 0, 4, 2116), 15, 16, 25},
  };
  return v;
}

std::optional<SquareBridgeRow> square_bridge_row(std::int64_t d) {
  for (const auto& r : square_bridge_rows())
    if (r.d == d) return r;
  return std::nullopt;
}

const std::vector<Chain>& butterfly_chains() {
  static const std::vector<Chain> v{
      {73, P(12, 1, 0, -5, 73), {{"B3", P(2, 3, 0, -7, 73)}, {"B_inf", P(4, 3, 0, -5, 73)}, {"B1", P(6, 1, 0, -7, 73)}}},
      {73, P(6, 1, 0, -7, 73), {{"B2", P(9, 2, 0, -1, 73)}, {"B_inf", P(3, 2, 0, -7, 73)}, {"B1", P(18, 1, 0, -1, 73)}}},
      {88, P(6, 1, 0, -8, 88), {{"B4", P(3, 2, 0, -8, 88)}, {"B1", P(22, 1, 0, 0, 88)}}},
      {217,
       P(6, 2, 0, -13, 217),
       {{"B3", P(4, 6, 0, -11, 217)}, {"B_inf", P(2, 6, 0, -13, 217)}, {"B1", P(12, 2, 0, -11, 217)}}},
  };
  return v;
}

std::vector<Chain> family_chains(std::int64_t k) {
  std::vector<Chain> out;
  auto s1 = [](std::int64_t D, std::int64_t e) { return P((D - e * e) / 4, 1, 0, e, D); };
  std::int64_t D = 12 + 16 * k;
  // The middle step is quoted with e = -5, impossible for even D; -2 is what B_inf gives.
  out.push_back({D, s1(D, -2), {{"B2", P(2 * k - 3, 2, 0, -6, D)}, {"B_inf", P(2 * k + 1, 2, 0, -2, D)}, {"B1", s1(D, -6)}}});
  D = 4 + 32 * k;
  out.push_back({D, s1(D, 2), {{"B2", P(4 * k - 12, 2, 1, -10, D)}, {"B2", P(4 * k - 4, 2, 1, -6, D)}, {"B1", s1(D, -2)}}});
  D = 20 + 32 * k;
  out.push_back({D, s1(D, 2), {{"B2", P(4 * k - 10, 2, 1, -10, D)}, {"B2", P(2 * k - 1, 4, 0, -6, D)}, {"B1", s1(D, -10)}}});
  D = 1 + 16 * k;
  out.push_back({D, s1(D, -5), {{"B2", P(2 * k - 1, 2, 0, -3, D)}, {"B_inf", P(2 * k - 3, 2, 0, -5, D)}, {"B1", s1(D, -3)}}});
  D = 9 + 16 * k;
  out.push_back({D, s1(D, -7), {{"B2", P(2 * k + 1, 2, 0, -1, D)}, {"B_inf", P(2 * k - 5, 2, 0, -7, D)}, {"B1", s1(D, -1)}}});
  return out;
}

const std::vector<Chain>& switch_chains() {
  static const std::vector<Chain> v{
      {52, P(12, 1, 0, -2, 52), {{"ModelBSplit", P(3, 4, 0, -2, 52)}, {"S2", P(9, 1, 0, -4, 52)}}},
      {52, P(12, 1, 0, 2, 52), {{"ModelBSplit", P(3, 4, 0, -2, 52)}}},
      {68, P(16, 1, 0, -2, 68), {{"ModelBSplit", P(8, 1, 0, 6, 68)}, {"S2", P(13, 1, 0, 4, 68)}}},
      {68, P(8, 1, 0, 6, 68), {{"S4", P(16, 1, 0, 2, 68)}}},
      {84, P(20, 1, 0, -2, 84), {{"ModelBSplit", P(4, 5, 0, -2, 84)}, {"S2", P(17, 1, 0, -4, 84)}}},
      {84, P(20, 1, 0, 2, 84), {{"ModelBSplit", P(4, 5, 0, -2, 84)}}},
      {41, P(2, 4, 0, -3, 41), {{"S5", P(8, 1, 0, 3, 41)}, {"S3", P(10, 1, 0, 1, 41)}}},
      {41, P(2, 4, 1, -3, 41), {{"S5", P(10, 1, 0, 1, 41)}}},
      {65, P(4, 4, 0, -1, 65), {{"S2", E(-3, 65)}}},
      {65, P(4, 4, 1, -1, 65), {{"S5", P(14, 1, 0, 3, 65)}}},
      {65, P(4, 4, 2, -1, 65), {{"S6", P(14, 1, 0, 3, 65)}}},
      {65, P(4, 4, 3, -1, 65), {{"S6", P(10, 1, 0, 5, 65)}, {"S2", E(-3, 65)}}},
      {73, P(2, 6, 0, -5, 73), {{"S2", E(-7, 73)}}},
      {73, P(2, 6, 1, -5, 73), {{"S7", P(12, 1, 0, 5, 73)}, {"S2", E(-7, 73)}}},
      {105, P(4, 6, 0, -3, 105), {{"S4", E(-7, 105)}}},
      {105, P(4, 6, 1, -3, 105), {{"S6", E(-1, 105)}}},
  };
  return v;
}

const std::vector<SquareWitness>& square_witnesses() {
  static const std::vector<SquareWitness> v{
      {36, 2, 1, 1, 1, 0, 2, -2, P(8, 1, 0, -2, 36)},
      {36, 2, 1, 1, 3, 5, 3, 0, P(9, 1, 0, 0, 36)},
      {64, 2, 2, 1, 1, 0, 2, -4, std::nullopt},
      {64, 2, 2, 1, 2, 7, 3, -2, std::nullopt},
      {100, 4, 1, 2, 3, 8, 3, -4, std::nullopt},
      // quoted as (14,1,0,2), which has discriminant 60
      {100, 2, 3, 1, -2, 1, 6, 2, P(24, 1, 0, 2, 100)},
      {100, 2, 3, 1, 2, 9, 5, 0, P(25, 1, 0, 0, 100)},
      {144, 2, 4, 1, 1, 0, 2, -8, std::nullopt},
      // quoted with area 7 and prototype (27,1,0,6); area 7 forces e = 2, and tracing gives (35,1,0,2)
      {144, 2, 4, 1, 2, 11, 7, 2, P(35, 1, 0, 2, 144)},
  };
  return v;
}

const std::vector<NamedComponent>& named_components() {
  static const std::vector<NamedComponent> v{
      {16, {P(3, 1, 0, -2, 16)}},
      {36, {P(5, 1, 0, -4, 36), P(9, 1, 0, 0, 36)}},
      {36, {P(8, 1, 0, -2, 36)}},
      // third member quoted as (14,1,0,2), which has discriminant 60
      {100, {P(16, 1, 0, -6, 100), P(12, 2, 1, -2, 100), P(24, 1, 0, 2, 100)}},
      {100, {P(8, 2, 1, -6, 100), P(24, 1, 0, -2, 100)}},
  };
  return v;
}

const std::vector<NamedComponent>& named_a2_sets() {
  static const std::vector<NamedComponent> v{
      {65, {P(2, 2, 0, -7, 65), P(8, 2, 0, -1, 65)}},
      {73, {P(6, 2, 0, -5, 73), P(8, 2, 0, -3, 73)}},
      {105, {P(10, 2, 0, -5, 105), P(12, 2, 0, -3, 105)}},
  };
  return v;
}

const std::vector<std::vector<int>>& strategies() {
  static const std::vector<std::vector<int>> v{{3},        {5, -3},     {7, -5},      {-3, 5},
                                               {-5, 7},    {5, 3, -5},  {-5, 3, 5},   {5, 5, -7},
                                               {-7, 5, 5}, {-3, 7, -3}, {-5, 3, 7, -3}, {-3, 7, 3, -5}};
  return v;
}

}  // namespace prym::tables
