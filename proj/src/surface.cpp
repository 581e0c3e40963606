#include "prym/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace prym {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Lengths of a cyclic cut of [0, width) given sorted starts.
std::vector<Surd> cyclic_lengths(const std::vector<Surd>& starts, const Surd& width) {
  std::vector<Surd> out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    Surd next = i + 1 < starts.size() ? starts[i + 1] : starts[0] + width;
    out.push_back(next - starts[i]);
  }
  return out;
}

}  // namespace

FlatSurface::FlatSurface(Discriminant d, const std::vector<CylinderSpec>& specs, std::string description)
    : d_(d), description_(std::move(description)) {
  std::map<std::string, int> conn_ids;
  std::map<std::string, int> cyl_ids;
  for (std::size_t k = 0; k < specs.size(); ++k) cyl_ids[specs[k].name] = static_cast<int>(k);
  auto conn = [&](const std::string& n) {
    auto it = conn_ids.find(n);
    if (it != conn_ids.end()) return it->second;
    int id = static_cast<int>(connections_.size());
    conn_ids[n] = id;
    connections_.push_back(Connection{n, Surd(0, d), -1, -1, Surd(0, d), Surd(0, d), -1});
    return id;
  };

  for (std::size_t k = 0; k < specs.size(); ++k) {
    const CylinderSpec& cs = specs[k];
    Cylinder c{cs.name, cs.width, cs.height, {}, {}, cyl_ids.at(cs.partner), cs.flip};
    if (cs.width.sign() <= 0 || cs.height.sign() <= 0) throw std::invalid_argument("degenerate cylinder " + cs.name);
    for (const auto& [n, x] : cs.bottom) c.bottom.push_back({conn(n), reduce_mod(x, cs.width)});
    for (const auto& [n, x] : cs.top) c.top.push_back({conn(n), x});
    auto by_start = [](const Segment& a, const Segment& b) { return a.start < b.start; };
    std::sort(c.bottom.begin(), c.bottom.end(), by_start);

    std::vector<Surd> bs;
    for (const auto& s : c.bottom) bs.push_back(s.start);
    auto blen = cyclic_lengths(bs, cs.width);
    for (std::size_t i = 0; i < c.bottom.size(); ++i) {
      Connection& sc = connections_[c.bottom[i].connection];
      if (sc.bottom_cylinder >= 0) throw std::invalid_argument("connection " + sc.name + " on two bottoms");
      sc.bottom_cylinder = static_cast<int>(k);
      sc.bottom_start = c.bottom[i].start;
      sc.length = blen[i];
    }
    cylinders_.push_back(std::move(c));
  }

  top_index_.resize(cylinders_.size());
  for (std::size_t k = 0; k < cylinders_.size(); ++k) {
    const Cylinder& c = cylinders_[k];
    auto& idx = top_index_[k];
    for (const auto& s : c.top) idx.emplace_back(reduce_mod(s.start, c.width), s.connection);
    std::sort(idx.begin(), idx.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Surd> ts;
    for (const auto& [x, id] : idx) ts.push_back(x);
    auto tlen = cyclic_lengths(ts, c.width);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      Connection& sc = connections_[idx[i].second];
      if (sc.top_cylinder >= 0) throw std::invalid_argument("connection " + sc.name + " on two tops");
      sc.top_cylinder = static_cast<int>(k);
      sc.top_start = idx[i].first;
      if (sc.bottom_cylinder < 0) throw std::invalid_argument("connection " + sc.name + " has no bottom");
      if (!(sc.length == tlen[i]))
        throw std::invalid_argument("connection " + sc.name + " has mismatched lengths " + sc.length.str() +
                                    " vs " + tlen[i].str());
    }
  }
  check();
}

void FlatSurface::check() const {
  for (const auto& sc : connections_)
    if (sc.top_cylinder < 0) throw std::invalid_argument("connection " + sc.name + " has no top");

  // Involution: each bottom segment maps onto a top segment of the partner.
  std::vector<int> partner(connections_.size(), -1);
  for (std::size_t k = 0; k < cylinders_.size(); ++k) {
    const Cylinder& c = cylinders_[k];
    const Cylinder& pc = cylinders_[c.partner];
    if (pc.partner != static_cast<int>(k) || c.partner == static_cast<int>(k))
      throw std::invalid_argument("involution does not pair cylinder " + c.name);
    if (!(pc.width == c.width) || !(pc.height == c.height))
      throw std::invalid_argument("paired cylinders differ: " + c.name);
    for (const auto& s : c.bottom) {
      const Connection& sc = connections_[s.connection];
      Surd image = reduce_mod(c.flip - s.start - sc.length, pc.width);
      int hit = -1;
      for (const auto& [x, id] : top_index_[c.partner])
        if (x == image) hit = id;
      if (hit < 0 || !(connections_[hit].length == sc.length))
        throw std::invalid_argument("involution does not map connection " + sc.name + " onto a connection");
      partner[s.connection] = hit;
    }
  }
  int fixed = 0;
  for (std::size_t j = 0; j < partner.size(); ++j) {
    if (partner[partner[j]] != static_cast<int>(j)) throw std::invalid_argument("involution is not an involution");
    if (partner[j] == static_cast<int>(j)) ++fixed;
  }
  // The zero is fixed; the only other fixed point is the midpoint of the one
  // connection mapped to itself.
  if (fixed != 1) throw std::invalid_argument("involution fixes " + std::to_string(fixed) + " connections");
  auto& self = const_cast<FlatSurface&>(*this);
  for (std::size_t j = 0; j < partner.size(); ++j) self.connections_[j].partner = partner[j];

  if (vertex_count() != 1) throw std::invalid_argument("surface has more than one cone point");
}

int FlatSurface::vertex_count() const {
  // Node 2j is the left end of connection j, 2j+1 its right end.
  int n = static_cast<int>(connections_.size());
  Dsu dsu(2 * n);
  auto chain = [&](const std::vector<std::pair<Surd, int>>& order) {
    for (std::size_t i = 0; i < order.size(); ++i)
      dsu.unite(2 * order[i].second + 1, 2 * order[(i + 1) % order.size()].second);
  };
  for (std::size_t k = 0; k < cylinders_.size(); ++k) {
    std::vector<std::pair<Surd, int>> b;
    for (const auto& s : cylinders_[k].bottom) b.emplace_back(s.start, s.connection);
    chain(b);
    chain(top_index_[k]);
  }
  int classes = 0;
  for (int i = 0; i < 2 * n; ++i)
    if (dsu.find(i) == i) ++classes;
  return classes;
}

Surd FlatSurface::area() const {
  Surd a(0, d_);
  for (const auto& c : cylinders_) a += c.width * c.height;
  return a;
}

std::vector<Vec2> FlatSurface::period_generators() const {
  std::vector<Vec2> out;
  Surd zero(0, d_);
  for (const auto& sc : connections_) out.push_back({sc.length, zero});
  for (const auto& c : cylinders_) out.push_back({c.top.front().start - c.bottom.front().start, c.height});
  return out;
}

FlatSurface::Landing FlatSurface::cross_top(int k, const Surd& x) const {
  const Cylinder& c = cylinders_[k];
  Surd p = reduce_mod(x, c.width);
  const auto& idx = top_index_[k];
  // last start <= p, wrapping to the final segment
  auto it = std::upper_bound(idx.begin(), idx.end(), p,
                             [](const Surd& v, const std::pair<Surd, int>& e) { return v < e.first; });
  std::size_t i = it == idx.begin() ? idx.size() - 1 : static_cast<std::size_t>(it - idx.begin()) - 1;
  Surd offset = p - idx[i].first;
  if (offset.sign() < 0) offset += c.width;
  const Connection& sc = connections_[idx[i].second];
  Surd bx = sc.bottom_start + offset;
  const Surd& bw = cylinders_[sc.bottom_cylinder].width;
  if (!(bx < bw)) bx -= bw;
  return {sc.bottom_cylinder, bx, offset.sign() == 0};
}

std::string FlatSurface::svg() const {
  const double scale = 40.0;
  double y = 10.0, maxw = 0.0;
  std::ostringstream body;
  for (const auto& c : cylinders_) {
    double w = c.width.approx() * scale, h = c.height.approx() * scale;
    maxw = std::max(maxw, w);
    body << "<rect x=\"10\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
         << "\" fill=\"#eef\" stroke=\"#000\"/>\n";
    body << "<text x=\"" << 10 + w / 2 << "\" y=\"" << y + h / 2 << "\" font-size=\"10\">" << c.name << "</text>\n";
    for (const auto& s : c.top) {
      double x = 10 + reduce_mod(s.start, c.width).approx() * scale;
      body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2\"/><text x=\"" << x + 2 << "\" y=\"" << y + 9
           << "\" font-size=\"8\">" << connections_[s.connection].name << "</text>\n";
    }
    for (const auto& s : c.bottom) {
      double x = 10 + s.start.approx() * scale;
      body << "<circle cx=\"" << x << "\" cy=\"" << y + h << "\" r=\"2\"/><text x=\"" << x + 2 << "\" y=\""
           << y + h - 2 << "\" font-size=\"8\">" << connections_[s.connection].name << "</text>\n";
    }
    y += h + 20;
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << maxw + 20 << "\" height=\"" << y << "\">\n"
     << body.str() << "</svg>\n";
  return os.str();
}

FlatSurface build_prototype_surface(const Prototype& p) {
  Discriminant d(p.D);
  Surd L = p.lambda() / 2;
  Surd W(p.w, 0, 2, d), H(p.h, 0, 2, d), T(p.t, 0, 2, d);
  Surd zero(0, d);
  std::vector<CylinderSpec> specs;
  if (classify_model(p) == ModelClass::A) {
    specs = {
        {"C11", L, L, {{"s1", zero}}, {{"s2", zero}}, "C12", L},
        {"C21", W, H, {{"sY", zero}, {"sX", 2 * L}}, {{"s1", T}, {"s3", T + L}, {"sX", T + 2 * L}}, "C22", T + W},
        {"C12", L, L, {{"s3", zero}}, {{"s4", zero}}, "C11", L},
        {"C22", W, H, {{"sX'", zero}, {"s2", W - 2 * L}, {"s4", W - L}}, {{"sX'", T}, {"sY", T + W - 2 * L}}, "C21",
         T + W},
    };
  } else {
    Surd a = 2 * L - W, S = 2 * W - 2 * L;
    specs = {
        {"C11", L, L, {{"s1", zero}}, {{"sa", zero}, {"sc", a}}, "C12", L},
        {"C21", W, H, {{"sa", zero}, {"sS", a}}, {{"s1", T}, {"sb", T + L}}, "C22", T + W},
        {"C12", L, L, {{"sb", zero}, {"sd", W - L}}, {{"s1'", zero}}, "C11", L},
        {"C22", W, H, {{"sc", zero}, {"s1'", W - L}}, {{"sS", T}, {"sd", T + S}}, "C21", T + W},
    };
  }
  FlatSurface s(d, specs, "X_" + std::to_string(p.D) + p.str());
  s.prototype = p;
  return s;
}

FlatSurface build_two_cylinder_st(std::int64_t lA, std::int64_t lB, std::int64_t lC) {
  if (lA <= 0 || lB <= 0 || lC <= 0) throw std::invalid_argument("two-cylinder lengths must be positive");
  std::int64_t dd = lA + 2 * lB + 2 * lC;
  Discriminant d(dd * dd);
  auto n = [&](std::int64_t v) { return Surd(v, d); };
  Surd one = n(1), width = n(dd);
  std::vector<CylinderSpec> specs = {
      {"top",
       width,
       one,
       {{"A", n(0)}, {"S", n(lA)}},
       {{"A", n(0)}, {"B", n(lA)}, {"C", n(lA + lB)}, {"B'", n(lA + lB + lC)}, {"C'", n(lA + 2 * lB + lC)}},
       "bottom",
       width},
      {"bottom",
       width,
       one,
       {{"C", n(0)}, {"B", n(lC)}, {"C'", n(lC + lB)}, {"B'", n(2 * lC + lB)}, {"A'", n(2 * lC + 2 * lB)}},
       {{"S", n(0)}, {"A'", n(dd - lA)}},
       "top",
       width},
  };
  return FlatSurface(d, specs,
                     "ST(" + std::to_string(lA) + "," + std::to_string(lB) + "," + std::to_string(lC) + ")");
}

Surd Direction::cotangent() const {
  if (vertical_) return Surd(0, slope_.disc());
  if (slope_.sign() == 0) throw ArithmeticError("horizontal direction has no cotangent");
  return Surd(1, slope_.disc()) / slope_;
}

std::string Direction::str() const { return vertical_ ? std::string("vertical") : slope_.str(); }

std::string to_string(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::TwoCylinder:
      return "two-cylinder";
    case DecompositionKind::FourCylinderA:
      return "four-cylinder-A";
    case DecompositionKind::FourCylinderB:
      return "four-cylinder-B";
    default:
      return "other";
  }
}

Surd CylinderDecomposition::total_area() const {
  Surd a(0, direction.slope_value().disc());
  for (const auto& c : cylinders) a += c.area;
  return a;
}

}  // namespace prym
