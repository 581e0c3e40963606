#include "prym/exact.hpp"

#include <cmath>
#include <sstream>

namespace prym {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_same(const Surd& x, const Surd& y) {
  if (!(x.disc() == y.disc()))
    throw ArithmeticError("surds over different discriminants: " + std::to_string(x.disc().value()) +
                          " vs " + std::to_string(y.disc().value()));
}

int sgn_int(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

}  // namespace

bool is_discriminant(std::int64_t value) noexcept {
  return value > 0 && (value % 4 == 0 || value % 4 == 1);
}

Discriminant::Discriminant(std::int64_t value) : value_(value) {
  if (!is_discriminant(value))
    throw std::invalid_argument("not a discriminant: " + std::to_string(value));
  root_ = isqrt64(value);
  square_ = root_ * root_ == value;
}

int sign_of(const Integer& p, const Integer& q, std::int64_t d) {
  int sp = sgn_int(p), sq = sgn_int(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Integer lhs = p * p;
  Integer rhs = q * q;
  rhs *= static_cast<long>(d);
  if (lhs > rhs) return sp;
  if (lhs < rhs) return sq;
  return 0;
}

Integer floor_div(const Integer& p, const Integer& q) {
  if (q == 0) throw ArithmeticError("division by zero");
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw ArithmeticError("integer out of 64-bit range: " + v.get_str());
  return v.get_si();
}

Surd::Surd(Integer a, Integer b, Integer den, Discriminant d)
    : a_(std::move(a)), b_(std::move(b)), den_(std::move(den)), d_(d) {
  if (den_ == 0) throw ArithmeticError("zero denominator");
  canonicalize();
}

void Surd::canonicalize() {
  if (d_.is_square() && b_ != 0) {
    a_ += b_ * static_cast<long>(d_.root());
    b_ = 0;
  }
  if (den_ < 0) {
    den_ = -den_;
    a_ = -a_;
    b_ = -b_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

int Surd::sign() const { return sign_of(a_, b_, d_.value()); }

Surd Surd::conjugate() const { return Surd(a_, -b_, den_, d_); }

Surd Surd::operator-() const { return Surd(-a_, -b_, den_, d_); }

Surd& Surd::operator+=(const Surd& o) {
  require_same(*this, o);
  if (den_ == o.den_) {
    a_ += o.a_;
    b_ += o.b_;
  } else {
    a_ = a_ * o.den_ + o.a_ * den_;
    b_ = b_ * o.den_ + o.b_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
  require_same(*this, o);
  Integer na = a_ * o.a_ + b_ * o.b_ * static_cast<long>(d_.value());
  Integer nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  require_same(*this, o);
  // (a + b r)/n / ((c + f r)/m) = m (a + b r)(c - f r) / (n (c^2 - f^2 D))
  Integer norm = o.a_ * o.a_ - o.b_ * o.b_ * static_cast<long>(d_.value());
  if (norm == 0) throw ArithmeticError("division by zero");
  Integer na = a_ * o.a_ - b_ * o.b_ * static_cast<long>(d_.value());
  Integer nb = b_ * o.a_ - a_ * o.b_;
  a_ = na * o.den_;
  b_ = nb * o.den_;
  den_ *= norm;
  canonicalize();
  return *this;
}

bool operator==(const Surd& x, const Surd& y) {
  require_same(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_ && x.den_ == y.den_;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  switch (surd_cmp(x, y)) {
    case Ordering::Less:
      return std::strong_ordering::less;
    case Ordering::Greater:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

Integer Surd::floor() const {
  if (b_ == 0) return floor_div(a_, den_);
  // b sqrt D lies strictly between s and s+1 (b > 0) or -s-1 and -s (b < 0),
  // s = floor(sqrt(b^2 D)); D is not a square here since b != 0.
  Integer bb = b_ * b_ * static_cast<long>(d_.value());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), bb.get_mpz_t());
  Integer guess = b_ > 0 ? floor_div(a_ + s, den_) : floor_div(a_ - s - 1, den_);
  // Two exact comparisons bracket the answer.
  Surd lo(guess, 0, 1, d_);
  Surd hi(guess + 1, 0, 1, d_);
  if (surd_cmp(lo, *this) == Ordering::Greater || surd_cmp(*this, hi) != Ordering::Less)
    throw ArithmeticError("floor bracketing failed for " + str());
  return guess;
}

double Surd::approx() const {
  return (a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_.value()))) / den_.get_d();
}

std::string Surd::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
  } else {
    os << "(" << a_ << (b_ < 0 ? "-" : "+");
    Integer ab = abs(b_);
    if (ab != 1) os << ab << "*";
    os << "sqrt(" << d_.value() << "))";
  }
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

Surd surd_make(const Integer& a, const Integer& b, const Integer& den, Discriminant d) {
  return Surd(a, b, den, d);
}

Ordering surd_cmp(const Surd& x, const Surd& y) {
  require_same(x, y);
  // x - y = (a1 n2 - a2 n1 + (b1 n2 - b2 n1) r) / (n1 n2), denominators positive
  Integer p = x.a() * y.den() - y.a() * x.den();
  Integer q = x.b() * y.den() - y.b() * x.den();
  int s = sign_of(p, q, x.disc().value());
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

Surd surd_arith(const Surd& x, const Surd& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return x + y;
    case ArithOp::Sub:
      return x - y;
    case ArithOp::Mul:
      return x * y;
    case ArithOp::Div:
      return x / y;
  }
  throw std::logic_error("unknown arithmetic op");
}

Integer surd_floor(const Surd& x) { return x.floor(); }

Surd reduce_mod(const Surd& x, const Surd& m) {
  Integer k = (x / m).floor();
  if (k == 0) return x;
  return x - m * Surd(k, 0, 1, x.disc());
}

}  // namespace prym
