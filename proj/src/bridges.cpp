#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <deque>
#include <set>

#include "prym/components.hpp"
#include "prym/surface.hpp"
#include "prym/tables.hpp"

namespace prym {

namespace {

MoveRecord certify_switch(const Prototype& p, int i) {
  SwitchResult sw = switch_move(p, i);
  if (!sw.admissible) throw BridgeError("S" + std::to_string(i) + " not admissible on " + p.str());
  auto s = build_prototype_surface(p);
  MoveRecord m = traced_move(s, *sw.slope, MoveKind::Switch, "S_" + std::to_string(i));
  if (m.target_e != sw.e || m.target_model != sw.target)
    throw std::logic_error("S" + std::to_string(i) + " on " + p.str() + ": traced " + m.target->str() +
                           " disagrees with e'=" + std::to_string(sw.e));
  return m;
}

MoveRecord certify_model_b_split(const Prototype& p) {
  ModelBResult mb = model_b_of_reduced(p);
  auto s = build_prototype_surface(p);
  MoveRecord m = traced_move(s, Direction::slope(mb.slope), MoveKind::ModelBSplit, "model B split");
  const Prototype& t = *m.target;
  if (t.e != mb.e || t.w != mb.w || t.h != mb.h || m.target_model != ModelClass::B)
    throw std::logic_error("Model B decomposition of " + p.str() + " traced as " + t.str());
  return m;
}

MoveRecord certify_st(std::int64_t lA, std::int64_t lB, std::int64_t lC, const Direction& dir,
                      std::optional<std::int64_t> area, const std::string& label) {
  auto s = build_two_cylinder_st(lA, lB, lC);
  MoveRecord m = traced_move(s, dir, MoveKind::Traced, label);
  if (area && !(*m.area == Surd(*area, s.disc())))
    throw std::logic_error("simple cylinder in direction " + dir.str() + " on " + s.description() + " has area " +
                           m.area->str() + ", expected " + std::to_string(*area));
  return m;
}

Direction rational_direction(std::int64_t num, std::int64_t den, std::int64_t D) {
  Discriminant d(D);
  return den == 0 ? Direction::vertical(d) : Direction::slope(Surd::rational(num, den, d));
}

bool differ_by_two_mod4(std::int64_t a, std::int64_t b) { return mod_floor(a - b, 4) == 2; }

// Search slopes a/b by height max(|a|, b) for a four-cylinder direction on
// X_D(p) whose prototype lies outside the P^A component of p.
std::optional<MoveRecord> direction_search(const Prototype& p, const ComponentPartition& part, std::int64_t bound) {
  auto s = build_prototype_surface(p);
  int own = part.label_of(p);
  for (std::int64_t size = 1; size <= bound; ++size) {
    for (std::int64_t b = 1; b <= size; ++b) {
      for (std::int64_t a = -size; a <= size; ++a) {
        if (a == 0 || std::max(std::abs(a), b) != size || std::gcd(a, b) != 1) continue;
        try {
          MoveRecord m = traced_move(s, rational_direction(a, b, p.D), MoveKind::Traced, "direction search");
          if (m.target_model == ModelClass::A && part.label_of(*m.target) != own) return m;
        } catch (const NormalizationError&) {
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<MoveRecord> replay_switch_chains(std::int64_t D) {
  std::vector<MoveRecord> out;
  for (const auto& ch : tables::switch_chains()) {
    if (ch.D != D) continue;
    Prototype cur = ch.start;
    for (const auto& st : ch.steps) {
      MoveRecord m = st.move == "ModelBSplit" ? certify_model_b_split(cur) : certify_switch(cur, st.move[1] - '0');
      bool ok = st.target.w == 0 ? m.target_e == st.target.e : *m.target == st.target;
      if (!ok) throw std::logic_error("chain step " + st.move + " from " + cur.str() + " gives " + m.target->str());
      cur = *m.target;
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

Bridge square_bridges(std::int64_t D) {
  Discriminant disc(D);
  if (!disc.is_square() || D % 2 != 0) throw BridgeError("square_bridges needs an even square discriminant");
  const std::int64_t d = disc.root();
  Bridge b;
  if (d <= 4) {
    b.route = "single component";
    return b;
  }
  if (d <= 12) {
    b.route = "explicit square-tiled witnesses";
    for (const auto& w : tables::square_witnesses()) {
      if (w.D != D) continue;
      std::string label = "ST(" + std::to_string(w.lA) + "," + std::to_string(w.lB) + "," + std::to_string(w.lC) + ")";
      MoveRecord m = certify_st(w.lA, w.lB, w.lC, rational_direction(w.num, w.den, D), w.area, label);
      if (m.target_e != w.e) throw std::logic_error("witness e mismatch on " + label);
      if (w.prototype && *m.target != *w.prototype) throw std::logic_error("witness prototype mismatch on " + label);
      b.moves.push_back(std::move(m));
    }
    if (D == 100) {
      // The component of (24,1,0,-2) is reached by a direction on its own surface.
      auto part = component_partition(D, Level::PA);
      auto m = direction_search(Prototype{24, 1, 0, -2, 100}, part, 12);
      if (!m) throw BridgeError("no direction leaves the component of (24,1,0,-2)");
      b.moves.push_back(std::move(*m));
      b.route += " + direction search";
    }
    return b;
  }
  if (auto row = tables::square_bridge_row(d)) {
    const Prototype& p = row->p;
    if (!(p.h == row->lo && p.w - p.e - p.h == row->mid && (p.e + d) / 2 == row->hi && row->lo < row->mid &&
          row->mid < row->hi))
      throw std::logic_error("table row inequality does not hold for d=" + std::to_string(d));
    MoveRecord m1 = certify_switch(p, 1), m2 = certify_switch(p, 2);
    if (m1.target_e - m2.target_e != 2 * p.h || !differ_by_two_mod4(m1.target_e, m2.target_e))
      throw BridgeError("S1/S2 on " + p.str() + " do not differ by 2h");
    b.moves = {m1, m2};
    b.route = "model B switches S1,S2 from " + p.str();
    return b;
  }
  for (std::int64_t lB = 1; 4 * lB - 2 < d; lB += 2) {
    if (!(7 * lB > d + 4 && 11 * lB < 2 * d + 5)) continue;
    std::int64_t lC = lB - 1, lA = d - 4 * lB + 2;
    std::string label = "ST(" + std::to_string(lA) + "," + std::to_string(lB) + "," + std::to_string(lC) + ")";
    MoveRecord c = certify_st(lA, lB, lC, rational_direction(3, lA + 2 * lB + lC, D), 3 * lB, label);
    MoveRecord c2 = certify_st(lA, lB, lC, rational_direction(-2, lC, D), 2 * lB, label);
    if (!differ_by_two_mod4(c.target_e, c2.target_e)) throw BridgeError(label + ": e values agree mod 4");
    b.moves = {c, c2};
    b.route = "two simple cylinders on " + label;
    return b;
  }
  throw BridgeError("no odd l_B in the window for d=" + std::to_string(d));
}

Bridge bridge_even(std::int64_t D) {
  if (D < 8 || D % 2 != 0 || !is_discriminant(D)) throw BridgeError("bridge_even needs an even discriminant >= 8");
  Discriminant disc(D);
  if (disc.is_square()) return square_bridges(D);
  Bridge b;
  if (D == 8 || D == 12) {
    b.route = "single component";
    return b;
  }
  if (D == 52 || D == 68 || D == 84) {
    b.route = "model B chains";
    b.moves = replay_switch_chains(D);
    return b;
  }
  std::int64_t r = disc.root();  // floor sqrt D
  std::int64_t e = r - 3;
  while ((e + 2) * (e + 2) >= D || (e + 4) * (e + 4) <= D || mod_floor(e, 2) != 0) ++e;
  Prototype p = make_prototype((D - e * e) / 4, 1, 0, e, D);
  if (classify_model(p) != ModelClass::B) throw std::logic_error("bridge_even: start is not Model B");
  auto sq = [](std::int64_t v) { return v * v; };
  std::pair<int, int> moves;
  if (sq(e + 2) + 4 < D && D < sq(e + 4) - 4)
    moves = {1, 2};
  else if (D == sq(e + 4) - 4)
    moves = {1, 3};
  else
    moves = {2, 4};
  MoveRecord m1 = certify_switch(p, moves.first), m2 = certify_switch(p, moves.second);
  if (!differ_by_two_mod4(m1.target_e, m2.target_e))
    throw BridgeError("switch targets of " + p.str() + " agree mod 4");
  b.route = "S" + std::to_string(moves.first) + ",S" + std::to_string(moves.second) + " from " + p.str();
  b.moves = {m1, m2};
  return b;
}

Bridge model_b_bridges(std::int64_t D) {
  Bridge b;
  b.route = "model B exploration";
  if (Discriminant(D).is_square()) throw BridgeError("model_b_bridges needs a non-square discriminant");
  std::set<Prototype> seen;
  std::deque<Prototype> queue;
  for (int h : {1, 2}) {
    for (const auto& p : enumerate(D, h == 1 ? Filter::Reduced1 : Filter::Reduced2)) {
      MoveRecord m = certify_model_b_split(p);
      if (seen.insert(*m.target).second) queue.push_back(*m.target);
      b.moves.push_back(std::move(m));
    }
  }
  while (!queue.empty()) {
    Prototype p = queue.front();
    queue.pop_front();
    for (int i = 1; i <= 7; ++i) {
      SwitchResult sw = switch_move(p, i);
      if (!sw.admissible) continue;
      MoveRecord m = certify_switch(p, i);
      if (m.target_model == ModelClass::B && seen.insert(*m.target).second) queue.push_back(*m.target);
      b.moves.push_back(std::move(m));
    }
  }
  return b;
}

Bridge1Mod8 bridge_1mod8(std::int64_t D) {
  if (mod_floor(D, 8) != 1 || D <= 9) throw BridgeError("bridge_1mod8 needs D = 1 mod 8 and D > 9");
  Bridge1Mod8 out;
  if (D == 17 || D == 25 || D == 33 || D == 49) {
    out.bridge.route = "S^2 empty";
    return out;
  }
  if (D == 41 || D == 65 || D == 73 || D == 105 || tables::in_exc2(D)) {
    out.bridge = model_b_bridges(D);
    auto chains = replay_switch_chains(D);
    if (!chains.empty()) out.bridge.route += " + reference chains";
    out.bridge.moves.insert(out.bridge.moves.end(), chains.begin(), chains.end());
    return out;
  }
  Discriminant disc(D);
  const Surd root = Surd::root(disc);
  const std::int64_t h = 2;
  const Surd half(1, 0, 2, disc);

  std::vector<Prototype> pool = enumerate(D, Filter::Reduced2);
  std::vector<Prototype> window;
  if (D > 441) {
    for (const auto& p : pool) {
      Surd lam = p.lambda();
      if (!(Surd(p.e, disc) + root < Surd(21, disc)) || p.w % 4 != 0) continue;
      Surd gap = Surd(to_int64((lam / 2).floor()) + 1, disc) - lam / 2;
      if (gap < half) continue;
      window.push_back(p);
    }
    if (window.empty()) throw BridgeError("no prototype with 4 | w and the floor gap near -sqrt D");
    out.window_prototype = window.front();
  }

  auto attempt = [&](const Prototype& p, bool even_only) -> bool {
    const Surd lam = p.lambda();
    const std::int64_t m = to_int64((lam / h).floor());
    const Surd k1 = Surd(h, disc) / lam;
    const Surd k0 = (lam + h) / ((m + 2) * lam);
    const Surd span = (Surd(p.w, disc) + m * lam) / 2;
    const Surd q0 = k0 * span, q1 = k1 * span;
    std::int64_t lo = std::max<std::int64_t>(0, to_int64(((2 * q0 - lam) / h).floor()) - 1);
    std::int64_t hi = to_int64(((2 * q1 - lam) / h).floor()) + 1;
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (even_only && n % 2 != 0) continue;
      Surd y = lam / 2 + Surd((n + 1) * h, 0, 2, disc);
      if (!(q0 < y && y < q1)) continue;
      std::int64_t e2 = 3 * p.e - 2 * p.w + 4 * h + 2 * n * (m + 2) * h;
      if (mod_floor((D - e2 * e2) / 4, 4) == 0) continue;
      Surd k = (Surd((n + 1) * h, disc) + lam) / (Surd(p.w, disc) + m * lam);
      MoveRecord rec;
      try {
        rec = traced_move(build_prototype_surface(p), Direction::slope(k), MoveKind::Traced, "simple cylinder");
      } catch (const NormalizationError&) {
        continue;
      }
      if (rec.target_e != e2) throw std::logic_error("area e' disagrees with 3e-2w+4h+2n(m+2)h on " + p.str());
      if (invariant_class(*rec.target).value != 1) throw std::logic_error("landing prototype not in P^{A1}");
      out.e = p.e, out.m = m, out.n = n, out.e_target = e2;
      out.bridge.moves.push_back(std::move(rec));
      return true;
    }
    return false;
  };

  for (const auto& p : window)
    if (attempt(p, true)) {
      out.bridge.route = "simple cylinder from " + p.str() + " with even n";
      return out;
    }
  for (const auto& p : pool)
    if (attempt(p, false)) {
      out.bridge.route = "simple cylinder from " + p.str();
      return out;
    }
  throw BridgeError("no simple cylinder into P^{A1} found for D=" + std::to_string(D));
}

}  // namespace prym
