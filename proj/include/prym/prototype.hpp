#pragma once

// Prototypes (w, h, t, e) of four-cylinder decompositions in Prym(6) and the
// sets P_D, P^A_D, P^B_D, S^1_D, S^2_D built from them.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prym/exact.hpp"

namespace prym {

enum class ModelClass { A, B };

std::string to_string(ModelClass m);

struct Prototype {
  std::int64_t w = 0;
  std::int64_t h = 0;
  std::int64_t t = 0;
  std::int64_t e = 0;
  std::int64_t D = 0;

  Discriminant disc() const { return Discriminant(D); }
  // (e + sqrt D) / 2
  Surd lambda() const;
  std::string str() const;

  bool operator==(const Prototype&) const = default;
  // Enumeration order: lexicographic on (e, w, h, t).
  auto operator<=>(const Prototype& o) const {
    return std::array{e, w, h, t, D} <=> std::array{o.e, o.w, o.h, o.t, o.D};
  }
};

struct PrototypeHash {
  std::size_t operator()(const Prototype& p) const noexcept;
};

enum class ValidityClause { Discriminant, Positivity, TwistRange, Primitivity, LambdaRange, LambdaHalf };

struct Rejection {
  ValidityClause clause;
  std::string message;
};

std::variant<Prototype, Rejection> validate(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e,
                                            std::int64_t D);
// Throws std::invalid_argument with the rejection message.
Prototype make_prototype(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D);
bool is_valid(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D);
// Same verdict as validate using integer comparisons only; for hot loops.
bool is_valid_fast(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D);

ModelClass classify_model(const Prototype& p);

enum class Filter { All, A, B, Reduced1, Reduced2 };

std::vector<Prototype> enumerate(std::int64_t D, Filter filter);

// e-set views of S^1_D and S^2_D (the latter only for D = 1 mod 8).
std::vector<std::int64_t> reduced_e_set(std::int64_t D, int h);
bool in_reduced_set(std::int64_t D, int h, std::int64_t e);
// The quadruple (w, h, 0, e) of an element of S^h_D.
Prototype reduced_prototype(std::int64_t D, int h, std::int64_t e);

struct InvariantClass {
  enum class Kind { EvenResidue, Parity, Single } kind;
  // e mod 4 for EvenResidue, 1 or 2 for Parity (A1/A2), 0 for Single.
  int value = 0;

  std::string label() const;
  bool operator==(const InvariantClass&) const = default;
};

InvariantClass invariant_class(const Prototype& p);

struct RationalMatrix {
  // entries as exact fractions num/den
  std::array<Integer, 4> num;
  std::array<Integer, 4> den;
  std::string str() const;
};

struct SquareCount {
  std::int64_t count = 0;
  RationalMatrix rescale;
};

bool is_reduced(const Prototype& p);
bool is_almost_reduced(const Prototype& p);

SquareCount primitive_square_count(const Prototype& p);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

}  // namespace prym
