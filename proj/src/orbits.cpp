#include <algorithm>
#include <map>

#include "prym/components.hpp"
#include "prym/tables.hpp"

namespace prym {

namespace {

class NodeUnion {
 public:
  int node(const std::string& key) {
    auto [it, fresh] = ids_.emplace(key, static_cast<int>(parent_.size()));
    if (fresh) parent_.push_back(it->second);
    return it->second;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::map<std::string, int> ids_;
  std::vector<int> parent_;
};

// Components are nodes keyed by their label; Model B prototypes and auxiliary
// surfaces are nodes of their own.
std::string key_of(const ComponentPartition& part, const Prototype& p, ModelClass m) {
  if (m == ModelClass::A) {
    int l = part.label_of(p);
    if (l < 0) throw std::logic_error("Model A prototype " + p.str() + " missing from P^A_D");
    return "A:" + std::to_string(l);
  }
  return "B:" + p.str();
}

int count_orbits(const ComponentPartition& part, const std::vector<Bridge>& bridges) {
  NodeUnion u;
  std::vector<int> comps;
  for (std::size_t i = 0; i < part.universe.size(); ++i)
    if (part.label[i] == static_cast<int>(i)) comps.push_back(u.node("A:" + std::to_string(i)));
  for (const auto& b : bridges) {
    for (const auto& m : b.moves) {
      int from = m.source ? u.node(key_of(part, *m.source, classify_model(*m.source))) : u.node("S:" + m.surface);
      int to = u.node(key_of(part, *m.target, m.target_model));
      u.unite(from, to);
    }
  }
  std::vector<int> roots;
  for (int c : comps) roots.push_back(u.find(c));
  std::sort(roots.begin(), roots.end());
  return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

}  // namespace

OrbitReport orbit_report(std::int64_t D) {
  OrbitReport r;
  r.D = D;
  if (!is_discriminant(D) || D < 5) return r;
  if (enumerate(D, Filter::All).empty()) return r;
  auto part = component_partition(D, Level::PA);
  r.pa_components = part.count();
  if (D == 5) {
    // P_5 is a single Model B prototype
    r.orbits = 1;
    return r;
  }
  if (r.pa_components > 1) {
    if (D % 2 == 0) {
      r.bridges.push_back(bridge_even(D));
    } else if (mod_floor(D, 8) == 1 && !tables::in_exc1(D)) {
      r.bridges.push_back(bridge_1mod8(D).bridge);
    }
  }
  r.orbits = count_orbits(part, r.bridges);
  if (r.orbits > 1 && !Discriminant(D).is_square() && D > 9) {
    r.bridges.push_back(model_b_bridges(D));
    r.orbits = count_orbits(part, r.bridges);
  }
  return r;
}

int orbit_count(std::int64_t D) { return orbit_report(D).orbits; }

int square_tiled_orbits(std::int64_t n) {
  if (n % 2 != 0 || n < 8) return 0;
  const std::int64_t D = n * n / 4;
  for (const auto& p : enumerate(D, Filter::Reduced1))
    if (primitive_square_count(p).count != n) throw std::logic_error("square count of " + p.str() + " is not n");
  return orbit_count(D);
}

}  // namespace prym
