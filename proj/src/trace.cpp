#include "prym/surface.hpp"

#include <algorithm>

namespace prym {

namespace {

struct CutPoint {
  Surd x;
  int separatrix;
  bool start;
};

CylinderDecomposition horizontal(const FlatSurface& s, const Direction& dir) {
  CylinderDecomposition dec{dir, {}, {}, {}, DecompositionKind::Other, 0};
  Discriminant d = s.disc();
  for (const auto& c : s.cylinders()) {
    TracedCylinder tc{c.width, c.height, Surd(0, d), c.width * c.height, {}, {}, {c.width, Surd(0, d)}};
    for (const auto& seg : c.top) tc.top.push_back({seg.connection, reduce_mod(seg.start, c.width)});
    std::sort(tc.top.begin(), tc.top.end(), [](const auto& a, const auto& b) { return a.position < b.position; });
    for (const auto& seg : c.bottom) tc.bottom.push_back({seg.connection, seg.start});
    tc.twist = reduce_mod(tc.top.front().position - tc.bottom.front().position, c.width);
    dec.cylinders.push_back(std::move(tc));
    dec.pairing.push_back(c.partner);
  }
  for (const auto& sc : s.connections()) dec.connections.push_back({sc.length, {sc.length, Surd(0, d)}});
  return dec;
}

// index of the last cut point <= x, cyclically
std::size_t locate(const std::vector<CutPoint>& cuts, const Surd& x) {
  auto it = std::upper_bound(cuts.begin(), cuts.end(), x,
                             [](const Surd& v, const CutPoint& c) { return v < c.x; });
  return it == cuts.begin() ? cuts.size() - 1 : static_cast<std::size_t>(it - cuts.begin()) - 1;
}

}  // namespace

CylinderDecomposition trace_direction(const FlatSurface& s, const Direction& dir, const TraceOptions& opt) {
  CylinderDecomposition dec = [&] {
    if (dir.is_horizontal()) return horizontal(s, dir);
    return CylinderDecomposition{dir, {}, {}, {}, DecompositionKind::Other, 0};
  }();
  const auto& cyls = s.cylinders();
  const auto& conns = s.connections();
  Discriminant d = s.disc();

  if (!dir.is_horizontal()) {
    Surd c = dir.cotangent();
    std::vector<Surd> shift;  // c * height reduced mod width
    for (const auto& cy : cyls) shift.push_back(reduce_mod(c * cy.height, cy.width));

    std::vector<std::vector<CutPoint>> cuts(cyls.size());
    std::size_t crossings = 0;
    for (std::size_t j = 0; j < conns.size(); ++j) {
      int k = conns[j].bottom_cylinder;
      Surd x = conns[j].bottom_start;
      Surd rise(0, d);
      bool first = true;
      while (true) {
        cuts[k].push_back({x, static_cast<int>(j), first});
        first = false;
        if (++crossings > opt.crossing_budget)
          throw TraceBudgetExceeded("direction " + dir.str() + " not certified periodic within " +
                                    std::to_string(opt.crossing_budget) + " crossings");
        rise += cyls[k].height;
        Surd p = x + shift[k];
        if (!(p < cyls[k].width)) p -= cyls[k].width;
        auto land = s.cross_top(k, p);
        if (land.vertex) break;
        k = land.cylinder;
        x = std::move(land.x);
      }
      dec.connections.push_back({rise, {c * rise, rise}});
    }
    dec.crossings = crossings;

    for (auto& v : cuts)
      std::sort(v.begin(), v.end(), [](const CutPoint& a, const CutPoint& b) { return a.x < b.x; });

    // Intervals between consecutive cut points are permuted by the return map.
    std::vector<std::size_t> base(cyls.size() + 1, 0);
    for (std::size_t k = 0; k < cyls.size(); ++k) base[k + 1] = base[k] + cuts[k].size();
    std::size_t n = base.back();
    std::vector<std::size_t> next(n);
    std::vector<int> owner(n);
    std::vector<Surd> length;
    length.reserve(n);
    for (std::size_t k = 0; k < cyls.size(); ++k) {
      const auto& v = cuts[k];
      for (std::size_t i = 0; i < v.size(); ++i) {
        owner[base[k] + i] = static_cast<int>(k);
        Surd len = i + 1 < v.size() ? v[i + 1].x - v[i].x : v[0].x + cyls[k].width - v[i].x;
        length.push_back(len);
        Surd p = v[i].x + shift[k];
        if (!(p < cyls[k].width)) p -= cyls[k].width;
        auto land = s.cross_top(static_cast<int>(k), p);
        const auto& w = cuts[land.cylinder];
        std::size_t idx = locate(w, land.x);
        if (!(w[idx].x == land.x))
          throw std::logic_error("return map does not send cut points to cut points");
        next[base[k] + i] = base[land.cylinder] + idx;
      }
    }

    std::vector<int> cycle_of(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
      if (cycle_of[start] >= 0) continue;
      int id = static_cast<int>(dec.cylinders.size());
      const Surd ell = length[start];
      Surd u(0, d);
      TracedCylinder tc{Surd(0, d), ell, Surd(0, d), Surd(0, d), {}, {}, {Surd(0, d), Surd(0, d)}};
      std::size_t cur = start;
      do {
        if (!(length[cur] == ell)) throw std::logic_error("return map changes interval lengths");
        cycle_of[cur] = id;
        int k = owner[cur];
        std::size_t i = cur - base[k];
        const auto& v = cuts[k];
        const CutPoint& left = v[i];
        const CutPoint& right = v[(i + 1) % v.size()];
        if (left.start) tc.top.push_back({left.separatrix, u});
        if (right.start) tc.bottom.push_back({right.separatrix, u});
        u += cyls[k].height;
        cur = next[cur];
      } while (cur != start);
      tc.circumference = u;
      tc.area = ell * u;
      tc.holonomy = {c * u, u};
      if (tc.top.empty() || tc.bottom.empty()) throw std::logic_error("cylinder boundary without a vertex");
      tc.twist = reduce_mod(tc.top.front().position - tc.bottom.front().position, u);
      dec.cylinders.push_back(std::move(tc));
    }

    // Involution pairing: push an interior point of each cylinder through it.
    for (std::size_t ci = 0; ci < dec.cylinders.size(); ++ci) {
      std::size_t iv = std::find(cycle_of.begin(), cycle_of.end(), static_cast<int>(ci)) - cycle_of.begin();
      int k = owner[iv];
      Surd mid = cuts[k][iv - base[k]].x + length[iv] / 2;
      const Cylinder& cy = cyls[k];
      auto land = s.cross_top(cy.partner, reduce_mod(cy.flip - mid, cyls[cy.partner].width));
      std::size_t idx = locate(cuts[land.cylinder], land.x);
      dec.pairing.push_back(cycle_of[base[land.cylinder] + idx]);
    }
  }

  std::size_t n = dec.cylinders.size();
  for (std::size_t i = 0; i < n; ++i) {
    int j = dec.pairing[i];
    if (j < 0 || j == static_cast<int>(i) || dec.pairing[j] != static_cast<int>(i))
      throw std::logic_error("traced cylinders are not paired by the involution");
    const auto& a = dec.cylinders[i];
    const auto& b = dec.cylinders[j];
    if (!(a.circumference == b.circumference) || !(a.height == b.height))
      throw std::logic_error("paired cylinders differ in size");
  }
  if (!(dec.total_area() == s.area())) throw std::logic_error("cylinder areas do not sum to the surface area");

  if (n == 2) {
    dec.kind = DecompositionKind::TwoCylinder;
  } else if (n == 4) {
    bool simple = std::any_of(dec.cylinders.begin(), dec.cylinders.end(), [](const auto& c) { return c.simple(); });
    bool semi = std::any_of(dec.cylinders.begin(), dec.cylinders.end(), [](const auto& c) { return c.semi_simple(); });
    dec.kind = simple ? DecompositionKind::FourCylinderA
                      : (semi ? DecompositionKind::FourCylinderB : DecompositionKind::Other);
  }
  return dec;
}

int semi_simple_index(const CylinderDecomposition& dec) {
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i)
    if (dec.cylinders[i].simple()) return static_cast<int>(i);
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i)
    if (dec.cylinders[i].semi_simple()) return static_cast<int>(i);
  return -1;
}

std::string decomposition_svg(const CylinderDecomposition& dec) {
  const double scale = 30.0;
  double y = 10.0, maxw = 0.0;
  std::string body;
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i) {
    const auto& c = dec.cylinders[i];
    double w = c.circumference.approx() * scale, h = c.height.approx() * scale;
    maxw = std::max(maxw, w);
    body += "<rect x=\"10\" y=\"" + std::to_string(y) + "\" width=\"" + std::to_string(w) + "\" height=\"" +
            std::to_string(h) + "\" fill=\"#efe\" stroke=\"#000\"/>\n";
    for (const auto& m : c.top)
      body += "<circle cx=\"" + std::to_string(10 + m.position.approx() * scale) + "\" cy=\"" + std::to_string(y) +
              "\" r=\"2\"/>\n";
    for (const auto& m : c.bottom)
      body += "<circle cx=\"" + std::to_string(10 + m.position.approx() * scale) + "\" cy=\"" +
              std::to_string(y + h) + "\" r=\"2\" fill=\"red\"/>\n";
    y += h + 20;
  }
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(maxw + 20) + "\" height=\"" +
         std::to_string(y) + "\">\n" + body + "</svg>\n";
}

}  // namespace prym
