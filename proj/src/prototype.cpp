#include "prym/prototype.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "prym/surface.hpp"

namespace prym {

std::string to_string(ModelClass m) { return m == ModelClass::A ? "A" : "B"; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Surd Prototype::lambda() const { return Surd(e, 1, 2, Discriminant(D)); }

std::string Prototype::str() const {
  std::ostringstream os;
  os << "(" << w << "," << h << "," << t << "," << e << ")";
  return os.str();
}

std::size_t PrototypeHash::operator()(const Prototype& p) const noexcept {
  std::size_t s = 0;
  for (std::int64_t v : {p.w, p.h, p.t, p.e, p.D}) s = s * 1000003u ^ std::hash<std::int64_t>{}(v);
  return s;
}

std::variant<Prototype, Rejection> validate(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e,
                                            std::int64_t D) {
  auto reject = [](ValidityClause c, std::string msg) { return Rejection{c, std::move(msg)}; };
  if (!is_discriminant(D)) return reject(ValidityClause::Discriminant, "D is not a discriminant");
  if (w <= 0 || h <= 0) return reject(ValidityClause::Positivity, "w and h must be positive");
  if (D != e * e + 4 * w * h) return reject(ValidityClause::Discriminant, "D != e^2 + 4wh");
  if (t < 0 || t >= std::gcd(w, h)) return reject(ValidityClause::TwistRange, "t outside [0, gcd(w,h))");
  if (std::gcd(std::gcd(w, h), std::gcd(t, e)) != 1)
    return reject(ValidityClause::Primitivity, "gcd(w,h,t,e) != 1");
  Discriminant d(D);
  Surd lam(e, 1, 2, d);
  Surd zero(0, d), wide(w, d);
  if (!(zero < lam) || !(lam < wide)) return reject(ValidityClause::LambdaRange, "0 < lambda < w fails");
  if (lam == Surd(w, 0, 2, d)) return reject(ValidityClause::LambdaHalf, "lambda = w/2");
  return Prototype{w, h, t, e, D};
}

Prototype make_prototype(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  if (is_valid_fast(w, h, t, e, D)) return Prototype{w, h, t, e, D};
  auto r = validate(w, h, t, e, D);
  if (auto* rej = std::get_if<Rejection>(&r))
    throw std::invalid_argument("invalid prototype (" + std::to_string(w) + "," + std::to_string(h) + "," +
                                std::to_string(t) + "," + std::to_string(e) + ") for D=" + std::to_string(D) +
                                ": " + rej->message);
  throw std::logic_error("integer and exact validity checks disagree");
}

bool is_valid(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  return std::holds_alternative<Prototype>(validate(w, h, t, e, D));
}

ModelClass classify_model(const Prototype& p) {
  std::int64_t a = p.e + 4 * p.h;
  return a * a < p.D ? ModelClass::A : ModelClass::B;
}

namespace {

// Integer form of the lambda conditions; the Surd form lives in validate.
bool lambda_ok(std::int64_t w, std::int64_t e, std::int64_t D, const Discriminant& d) {
  std::int64_t u = 2 * w - e;
  if (u <= 0 || D >= u * u) return false;
  if (d.is_square() && d.root() == w - e) return false;
  return true;
}

}  // namespace

bool is_valid_fast(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  if (!is_discriminant(D) || w <= 0 || h <= 0 || D != e * e + 4 * w * h) return false;
  if (t < 0 || t >= std::gcd(w, h) || std::gcd(std::gcd(w, h), std::gcd(t, e)) != 1) return false;
  if (e < 0 && e * e >= D) return false;
  return lambda_ok(w, e, D, Discriminant(D));
}

std::vector<Prototype> enumerate(std::int64_t D, Filter filter) {
  std::vector<Prototype> out;
  if (!is_discriminant(D)) return out;
  if (filter == Filter::Reduced1 || filter == Filter::Reduced2) {
    int h = filter == Filter::Reduced1 ? 1 : 2;
    for (std::int64_t e : reduced_e_set(D, h)) out.push_back(reduced_prototype(D, h, e));
    return out;
  }
  Discriminant d(D);
  std::int64_t r = d.root();
  for (std::int64_t e = -r; e <= r; ++e) {
    if (e * e >= D || mod_floor(D - e * e, 4) != 0) continue;
    std::int64_t n = (D - e * e) / 4;
    for (std::int64_t w = 1; w <= n; ++w) {
      if (n % w != 0) continue;
      std::int64_t h = n / w;
      if (!lambda_ok(w, e, D, d)) continue;
      std::int64_t g = std::gcd(w, h);
      for (std::int64_t t = 0; t < g; ++t) {
        if (std::gcd(std::gcd(g, t), e) != 1) continue;
        Prototype p{w, h, t, e, D};
        if (filter == Filter::A && classify_model(p) != ModelClass::A) continue;
        if (filter == Filter::B && classify_model(p) != ModelClass::B) continue;
        out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<std::int64_t> reduced_e_set(std::int64_t D, int h) {
  std::vector<std::int64_t> out;
  if (!is_discriminant(D)) return out;
  if (h == 2 && mod_floor(D, 8) != 1) return out;
  std::int64_t r = Discriminant(D).root();
  for (std::int64_t e = -r; e <= r; ++e)
    if (in_reduced_set(D, h, e)) out.push_back(e);
  return out;
}

bool in_reduced_set(std::int64_t D, int h, std::int64_t e) {
  if (h == 1) {
    std::int64_t f = e + 4;
    return mod_floor(D - e * e, 4) == 0 && e * e < D && f * f < D;
  }
  if (h == 2) {
    if (mod_floor(D, 8) != 1) return false;
    std::int64_t f = e + 8;
    return mod_floor(D - e * e, 16) == 0 && e * e < D && f * f < D;
  }
  throw std::invalid_argument("reduced level must be 1 or 2");
}

Prototype reduced_prototype(std::int64_t D, int h, std::int64_t e) {
  if (!in_reduced_set(D, h, e))
    throw std::invalid_argument("e=" + std::to_string(e) + " not in S^" + std::to_string(h) + " for D=" +
                                std::to_string(D));
  return make_prototype((D - e * e) / (4 * h), h, 0, e, D);
}

std::string InvariantClass::label() const {
  switch (kind) {
    case Kind::EvenResidue:
      return value == 0 ? "e0mod4" : "e2mod4";
    case Kind::Parity:
      return value == 1 ? "A1" : "A2";
    default:
      return "single";
  }
}

InvariantClass invariant_class(const Prototype& p) {
  if (p.D % 2 == 0) return {InvariantClass::Kind::EvenResidue, static_cast<int>(mod_floor(p.e, 4))};
  if (mod_floor(p.D, 8) == 1) {
    bool all_even = p.w % 2 == 0 && p.h % 2 == 0 && p.t % 2 == 0;
    return {InvariantClass::Kind::Parity, all_even ? 2 : 1};
  }
  return {InvariantClass::Kind::Single, 0};
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << "[[";
  for (int i = 0; i < 4; ++i) {
    if (i == 2) os << "],[";
    else if (i) os << ",";
    os << num[i];
    if (den[i] != 1) os << "/" << den[i];
  }
  os << "]]";
  return os.str();
}

bool is_reduced(const Prototype& p) {
  return p.h == 1 && p.t == 0 && classify_model(p) == ModelClass::A;
}

bool is_almost_reduced(const Prototype& p) {
  return p.h == 2 && p.t == 0 && p.w % 2 == 0 && classify_model(p) == ModelClass::A;
}

SquareCount primitive_square_count(const Prototype& p) {
  Discriminant d(p.D);
  if (!d.is_square()) throw std::invalid_argument("primitive_square_count needs a square discriminant");
  std::int64_t root = d.root();
  std::int64_t ed = p.e + root;  // = 2 lambda
  SquareCount out;
  // Diagonal rescale diag(x, y) as fractions.
  Integer xn, xd, yn, yd;
  if (is_reduced(p)) {
    xn = 4, xd = ed, yn = 2, yd = 1;  // 2 / lambda
  } else if (is_almost_reduced(p)) {
    if ((ed / 2) % 2 != 0) {
      xn = 4, xd = ed, yn = 2, yd = 1;
    } else {
      xn = 8, xd = ed, yn = 1, yd = 1;
    }
  } else {
    throw std::invalid_argument("primitive_square_count needs a reduced or almost-reduced prototype");
  }
  out.rescale.num = {xn, 0, 0, yn};
  out.rescale.den = {xd, 1, 1, yd};
  for (int i = 0; i < 4; ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), out.rescale.num[i].get_mpz_t(), out.rescale.den[i].get_mpz_t());
    if (g != 0 && g != 1) {
      out.rescale.num[i] /= g;
      out.rescale.den[i] /= g;
    }
  }

  FlatSurface s = build_prototype_surface(p);
  Surd sx = Surd::rational(xn, xd, d), sy = Surd::rational(yn, yd, d);
  Surd area = s.area() * sx * sy;
  if (!area.is_integer()) throw ArithmeticError("rescaled area is not an integer");
  out.count = to_int64(area.a());

  // Periods must be integral and generate Z^2: gcd of all 2x2 minors equals 1.
  std::vector<std::pair<Integer, Integer>> gens;
  for (const auto& v : s.period_generators()) {
    Surd gx = v.x * sx, gy = v.y * sy;
    if (!gx.is_integer() || !gy.is_integer())
      throw ArithmeticError("rescaled period " + gx.str() + "," + gy.str() + " is not integral");
    gens.emplace_back(gx.a(), gy.a());
  }
  Integer g = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Integer m = gens[i].first * gens[j].second - gens[i].second * gens[j].first;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
  if (g != 1) throw ArithmeticError("rescaled period lattice has index " + g.get_str());
  return out;
}

}  // namespace prym
