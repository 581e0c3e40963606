#include "prym/moves.hpp"

#include <numeric>

namespace prym {

namespace {

// x*a + y*b = gcd(a, b) >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

std::int64_t square(std::int64_t v) { return v * v; }

}  // namespace

ButterflyParam ButterflyParam::general(std::int64_t p, std::int64_t q) {
  if (q <= 0 || std::gcd(p, q) != 1) throw MoveError("butterfly pair needs q > 0 and gcd(p,q) = 1");
  if (p == 1) return finite(q);
  if (p == 0 && q == 1) return infinite();
  return {Kind::General, p, q};
}

std::string ButterflyParam::label() const {
  switch (kind) {
    case Kind::Finite:
      return "B_" + std::to_string(q);
    case Kind::Infinite:
      return "B_inf";
    default:
      return "B_(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
}

bool butterfly_admissible(const Prototype& p, const ButterflyParam& bp) {
  if (classify_model(p) != ModelClass::A) return false;
  if (bp.kind == ButterflyParam::Kind::Infinite) return true;
  return square(p.e + 4 * bp.q * p.h) < p.D;
}

std::int64_t max_butterfly_q(const Prototype& p) {
  std::int64_t q = 0;
  while (square(p.e + 4 * (q + 1) * p.h) < p.D) ++q;
  return q;
}

Prototype butterfly(const Prototype& p, const ButterflyParam& bp) {
  if (!butterfly_admissible(p, bp))
    throw MoveError(bp.label() + " is not admissible on " + p.str() + " for D=" + std::to_string(p.D));
  const std::int64_t w = p.w, h = p.h, t = p.t, e = p.e, q = bp.q;
  // Rows (a,b),(c,d) with the choice (r,s) of ps - rq = 1.
  std::int64_t r, s;
  if (bp.kind == ButterflyParam::Kind::Finite) {
    r = 0, s = 1;
  } else if (bp.kind == ButterflyParam::Kind::Infinite) {
    r = -1, s = 0;
  } else {
    std::int64_t x, y;
    ext_gcd(bp.p, q, x, y);  // x p + y q = 1
    s = x, r = -y;
  }
  const std::int64_t a = s * h, b = -4 * q * h - r * w - s * t - 2 * e;
  const std::int64_t c = -q * h, d = bp.p * w + q * t;

  const std::int64_t e2 = -e - 4 * q * h;
  const std::int64_t h_closed = bp.kind == ButterflyParam::Kind::Infinite ? std::gcd(t, h) : std::gcd(q * h, d);
  std::int64_t x, y;
  const std::int64_t g = ext_gcd(c, d, x, y);
  if (g != h_closed) throw std::logic_error("butterfly: gcd(c,d) disagrees with the closed form for h'");
  // A = [[d/g, x], [-c/g, y]] has determinant 1 and (c,d) A = (0, g).
  std::int64_t u = a * (d / g) - b * (c / g);
  std::int64_t v = a * x + b * y;
  const std::int64_t det = a * d - b * c;
  if (u < 0) {
    u = -u;
    v = -v;
  }
  const std::int64_t h2 = g;
  if (det != u * h2 || 4 * det != p.D - e2 * e2)
    throw std::logic_error("butterfly: determinant check failed on " + p.str() + " " + bp.label());
  const std::int64_t w2 = u;
  const std::int64_t t2 = mod_floor(v, std::gcd(w2, h2));
  return make_prototype(w2, h2, t2, e2, p.D);
}

Direction butterfly_direction(const Prototype& p, const ButterflyParam& bp) {
  Discriminant d(p.D);
  // core curve p*alpha + q*beta of the large cylinder: (p w + q t, q h) / 2
  std::int64_t dx = bp.p * p.w + bp.q * p.t, dy = bp.q * p.h;
  if (dx == 0) return Direction::vertical(d);
  return Direction::slope(Surd::rational(dy, dx, d));
}

std::optional<std::int64_t> s_level_step(std::int64_t e, int h, std::int64_t D, const ButterflyParam& q) {
  Prototype p = reduced_prototype(D, h, e);
  Prototype img = butterfly(p, q);
  if (img.e != -e - 4 * q.q * h) throw std::logic_error("s_level_step: e' closed form mismatch");
  bool same_h = std::gcd(p.w, q.q * h) == h;
  if (q.kind == ButterflyParam::Kind::Finite && same_h != (img.h == h))
    throw std::logic_error("s_level_step: gcd side condition disagrees with h'");
  bool back = img.h == h && img.t == 0 && (h == 1 || img.w % 2 == 0);
  if (back && !in_reduced_set(D, h, img.e)) throw std::logic_error("s_level_step: image outside the e-set");
  if (!back) return std::nullopt;
  return img.e;
}

bool f_move_admissible(std::int64_t e, int h, std::int64_t D, int q) {
  std::int64_t aq = q < 0 ? -q : q;
  std::int64_t base = q > 0 ? e : e + 4 * h;
  if (mod_floor(D - base * base, aq) == 0) return false;
  std::int64_t target = q > 0 ? e + 4 * h * (aq - 1) : e - 4 * h * (aq - 1);
  return in_reduced_set(D, h, e) && in_reduced_set(D, h, target);
}

std::int64_t f_move(std::int64_t e, int h, std::int64_t D, int q) {
  std::int64_t aq = q < 0 ? -q : q;
  if (aq < 3 || aq % 2 == 0) throw MoveError("F-move needs an odd prime");
  for (std::int64_t k = 3; k * k <= aq; k += 2)
    if (aq % k == 0) throw MoveError("F-move needs an odd prime");
  if (!in_reduced_set(D, h, e)) throw MoveError("F-move source not in S");
  std::int64_t base = q > 0 ? e : e + 4 * h;
  if (mod_floor(D - base * base, aq) == 0)
    throw MoveError("F_" + std::to_string(q) + " fails the congruence condition at e=" + std::to_string(e));
  std::int64_t expected = q > 0 ? e + 4 * h * (aq - 1) : e - 4 * h * (aq - 1);
  if (!in_reduced_set(D, h, expected)) throw MoveError("F-move target outside S");
  auto fin = ButterflyParam::finite(aq), inf = ButterflyParam::infinite();
  auto step = [&](std::int64_t x, const ButterflyParam& bp) {
    Prototype p = reduced_prototype(D, h, x);
    if (!butterfly_admissible(p, bp)) throw MoveError("F-move leg " + bp.label() + " inadmissible");
    auto r = s_level_step(x, h, D, bp);
    if (!r) throw MoveError("F-move leg " + bp.label() + " leaves S");
    return *r;
  };
  std::int64_t out = q > 0 ? step(step(e, fin), inf) : step(step(e, inf), fin);
  if (out != expected) throw std::logic_error("F-move composite disagrees with e + 4h(q-1)");
  return out;
}

SwitchResult switch_move(const Prototype& p, int i) {
  if (i < 1 || i > 7) throw MoveError("switch index must be in 1..7");
  if (classify_model(p) != ModelClass::B) throw MoveError("switch moves start from Model B, got " + p.str());
  Discriminant d(p.D);
  const std::int64_t w = p.w, h = p.h, t = p.t, e = p.e;
  const Surd lam = p.lambda();
  auto n = [&](std::int64_t v) { return Surd(v, d); };
  SwitchResult r;
  r.target = ModelClass::A;
  auto need_t0 = [&] {
    if (t != 0) r.reason = "requires t = 0";
    return t == 0;
  };
  switch (i) {
    case 1:
      if (!need_t0()) return r;
      r.admissible = 2 * h + e - w < 0;
      r.e = 3 * e - 2 * w + 4 * h;
      r.slope = Direction::slope((lam + n(h)) / lam);
      break;
    case 2:
      if (!need_t0()) return r;
      r.admissible = n(w - e - h) < lam;
      r.e = 3 * e - 2 * w + 2 * h;
      r.slope = Direction::slope(-(lam + n(h)) / lam);
      break;
    case 3:
      if (!need_t0()) return r;
      r.admissible = 6 * h + 3 * e - 2 * w < 0;
      r.e = 7 * e + 12 * h - 4 * w;
      r.slope = Direction::slope((2 * lam + n(3 * h)) / lam);
      break;
    case 4:
      if (!need_t0()) return r;
      r.admissible = n(w - e - h) < lam / 2;
      r.e = 5 * e - 4 * w + 4 * h;
      r.slope = Direction::slope(-2 * (lam + n(h)) / lam);
      break;
    case 5:
      if (t == 0) {
        r.admissible = true;
        r.e = 3 * e + 4 * h - 2 * w;
        r.target = ModelClass::B;
        r.slope = Direction::vertical(d);
      } else {
        r.admissible = (lam + n(e + 2 * h - w - t)).sign() > 0;
        r.e = 3 * e + 4 * h - 2 * w - 2 * t;
        r.slope = Direction::slope((n(h) + lam) / n(t));
      }
      break;
    case 6: {
      r.admissible = true;
      std::int64_t s = w + t - 2 * h - e;
      r.e = s > 0 ? 3 * e + 4 * h - 2 * w : e + 2 * t;
      r.target = s == 0 ? ModelClass::B : ModelClass::A;
      r.slope = Direction::slope((lam + n(h)) / (lam + n(t)));
      break;
    }
    case 7:
      r.admissible = lam > n(w - h - t);
      r.e = t < e + h ? e + 2 * h - 2 * w + 2 * t : 3 * e + 4 * h - 2 * w;
      r.target = t == e + h ? ModelClass::B : ModelClass::A;
      r.slope = Direction::slope(-(lam + n(h)) / n(w - t));
      break;
  }
  if (!r.admissible) r.reason = "inequality fails";
  return r;
}

ModelBResult model_b_of_reduced(const Prototype& p) {
  Discriminant d(p.D);
  if (d.is_square()) throw MoveError("square discriminant: the direction may split into two cylinders");
  bool reduced = is_reduced(p), almost = is_almost_reduced(p);
  if (!reduced && !almost) throw MoveError("model_b_of_reduced needs a reduced or almost-reduced prototype");
  const Surd lam = p.lambda();
  Surd ratio = Surd(p.w, d) / lam;
  std::int64_t n = to_int64(ratio.floor());
  ModelBResult out{0, 0, 0, n, 0, Surd(p.h, d) / lam};
  Surd q(0, d);
  if (reduced) {
    q = (lam + n) / (lam + (n + 1));
  } else {
    Surd frac = ratio - n;
    out.epsilon = frac > Surd(1, 0, 2, d) ? 1 : 0;
    q = (2 * lam + 2 * (2 * n + out.epsilon)) / (2 * lam + 2 * (2 * n + 1 + out.epsilon));
  }
  // (e' + sqrt D) / (2 w') = q0 + q1 sqrt D
  Surd q1(q.b(), 0, q.den(), d), q0(q.a(), 0, q.den(), d);
  if (q1.sign() == 0) throw std::logic_error("model_b_of_reduced: rational ratio");
  Surd w2 = Surd(1, d) / (2 * q1);
  Surd e2 = q0 / q1;
  if (!w2.is_integer() || !e2.is_integer())
    throw std::logic_error("model_b_of_reduced: non-integral solution for " + p.str());
  out.w = to_int64(w2.a());
  out.e = to_int64(e2.a());
  std::int64_t num = p.D - out.e * out.e;
  if (num <= 0 || num % (4 * out.w) != 0) throw std::logic_error("model_b_of_reduced: h' not integral");
  out.h = num / (4 * out.w);
  Prototype probe{out.w, out.h, 0, out.e, p.D};
  if (classify_model(probe) != ModelClass::B) throw std::logic_error("model_b_of_reduced: result not Model B");
  return out;
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Butterfly:
      return "butterfly";
    case MoveKind::Switch:
      return "switch";
    case MoveKind::ModelBSplit:
      return "model-b-of-reduced";
    default:
      return "traced";
  }
}

MoveRecord traced_move(const FlatSurface& s, const Direction& dir, MoveKind kind, const std::string& label) {
  auto dec = trace_direction(s, dir);
  MoveRecord m;
  m.kind = kind;
  m.label = label;
  m.source = s.prototype;
  if (!s.prototype) m.surface = s.description();
  m.witness = dir;
  if (dec.kind == DecompositionKind::TwoCylinder)
    throw NormalizationError("direction " + dir.str() + " on " + s.description() + " has two cylinders");
  Prototype p = extract_prototype(s, dec);
  m.target = p;
  m.target_e = p.e;
  m.target_model = classify_model(p);
  m.area = dec.cylinders[semi_simple_index(dec)].area;
  if (e_from_area(s, dec) != p.e) throw std::logic_error("area and extraction disagree on e'");
  return m;
}

}  // namespace prym
