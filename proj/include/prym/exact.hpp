#pragma once

// Exact arithmetic in Q(sqrt D). Every decision (sign, order, floor) is made
// on integers; doubles are produced only for display.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace prym {

using Integer = mpz_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Discriminant {
 public:
  explicit Discriminant(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  bool is_square() const noexcept { return square_; }
  // floor(sqrt(value))
  std::int64_t root() const noexcept { return root_; }

  bool operator==(const Discriminant& o) const noexcept { return value_ == o.value_; }

 private:
  std::int64_t value_;
  std::int64_t root_;
  bool square_;
};

bool is_discriminant(std::int64_t value) noexcept;

enum class Ordering { Less, Equal, Greater };

enum class ArithOp { Add, Sub, Mul, Div };

// (a + b sqrt D) / den, canonical: den > 0, gcd(a, b, den) = 1, b = 0 for square D.
class Surd {
 public:
  Surd(Integer a, Integer b, Integer den, Discriminant d);
  Surd(long value, Discriminant d) : Surd(Integer(value), 0, 1, d) {}

  static Surd rational(const Integer& num, const Integer& den, Discriminant d) {
    return Surd(num, 0, den, d);
  }
  static Surd root(Discriminant d) { return Surd(0, 1, 1, d); }

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& den() const noexcept { return den_; }
  Discriminant disc() const noexcept { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && den_ == 1; }
  int sign() const;
  Surd conjugate() const;
  Integer floor() const;
  double approx() const;
  std::string str() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);
  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  friend Surd operator*(Surd x, long k) { return x *= Surd(k, x.d_); }
  friend Surd operator*(long k, Surd x) { return x *= Surd(k, x.d_); }
  friend Surd operator/(Surd x, long k) { return x /= Surd(k, x.d_); }
  friend Surd operator+(Surd x, long k) { return x += Surd(k, x.d_); }
  friend Surd operator-(Surd x, long k) { return x -= Surd(k, x.d_); }

  friend bool operator==(const Surd& x, const Surd& y);
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
  friend std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.str(); }

 private:
  void canonicalize();
  Integer a_, b_, den_;
  Discriminant d_;
};

Surd surd_make(const Integer& a, const Integer& b, const Integer& den, Discriminant d);
Ordering surd_cmp(const Surd& x, const Surd& y);
Surd surd_arith(const Surd& x, const Surd& y, ArithOp op);
Integer surd_floor(const Surd& x);

// Sign of p + q sqrt(D) for D > 0.
int sign_of(const Integer& p, const Integer& q, std::int64_t d);

// floor(p / q) for q != 0
Integer floor_div(const Integer& p, const Integer& q);

// Reduce x into [0, m) for positive m.
Surd reduce_mod(const Surd& x, const Surd& m);

std::int64_t to_int64(const Integer& v);

}  // namespace prym
