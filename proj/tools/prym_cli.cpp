#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "prym/cache.hpp"
#include "prym/components.hpp"
#include "prym/report.hpp"
#include "prym/strategies.hpp"
#include "prym/tables.hpp"
#include "prym/surface.hpp"

using namespace prym;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t n, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    }
  } catch (const std::logic_error&) {
    throw UsageError(what + " must be " + std::to_string(n) + " comma-separated integers");
  }
  if (out.size() != n) throw UsageError(what + " must be " + std::to_string(n) + " comma-separated integers");
  return out;
}

// "a..b", endpoints moved inward to the nearest discriminants.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b");
  std::int64_t a, b;
  try {
    a = std::stoll(s.substr(0, dots));
    b = std::stoll(s.substr(dots + 2));
  } catch (const std::logic_error&) {
    throw UsageError("range must look like a..b");
  }
  if (a > b) throw UsageError("empty range " + s);
  std::int64_t a2 = std::max<std::int64_t>(a, 4), b2 = b;
  while (a2 <= b2 && !is_discriminant(a2)) ++a2;
  while (b2 >= a2 && !is_discriminant(b2)) --b2;
  if (a2 != a || b2 != b)
    std::cerr << "warning: range " << s << " rounded to " << a2 << ".." << b2 << "\n";
  return {a2, b2};
}

std::vector<std::int64_t> discriminants(std::pair<std::int64_t, std::int64_t> r) {
  std::vector<std::int64_t> out;
  for (std::int64_t D = r.first; D <= r.second; ++D)
    if (is_discriminant(D)) out.push_back(D);
  return out;
}

// Evaluate f on every D with up to `jobs` threads; results come back in D order.
std::vector<Json> fan_out(const std::vector<std::int64_t>& Ds, unsigned jobs, const std::function<Json(std::int64_t)>& f) {
  std::vector<Json> out(Ds.size());
  std::atomic<std::size_t> next = 0;
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < Ds.size();) {
      try {
        out[i] = f(Ds[i]);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

Filter parse_filter(const std::string& m) {
  if (m == "A") return Filter::A;
  if (m == "B") return Filter::B;
  if (m == "all") return Filter::All;
  if (m == "reduced1") return Filter::Reduced1;
  if (m == "reduced2") return Filter::Reduced2;
  throw UsageError("unknown model " + m);
}

struct Options {
  std::int64_t D = 0;
  std::string model = "all";
  std::string level = "pa";
  std::string dot;
  std::string theorem;
  std::string range;
  std::string proto;
  std::string slope;
  bool vertical = false;
  std::int64_t n = 0;
  bool scan = false;
  std::string pair;
  int h = 1;
  unsigned jobs = 1;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "table";
};

std::unique_ptr<ResultCache> open_cache(const Options& o) {
  if (o.no_cache) return nullptr;
  auto dir = o.cache_dir.empty() ? ResultCache::default_dir(".prym-cache") : std::filesystem::path(o.cache_dir);
  return std::make_unique<ResultCache>(dir);
}

Json cached(ResultCache* cache, std::int64_t D, const std::string& kind, const std::function<Json()>& f) {
  return cache ? cache->get_or_compute(D, kind, f) : f();
}

int cmd_enumerate(const Options& o) {
  for (const auto& p : enumerate(o.D, parse_filter(o.model))) {
    if (o.format == "json")
      std::cout << to_json(p).dump() << "\n";
    else
      std::cout << p.str() << " " << to_string(classify_model(p)) << "\n";
  }
  return 0;
}

int cmd_components(const Options& o) {
  auto level = parse_level(o.level);
  if (!level) throw UsageError("level must be pa, s1 or s2");
  PartitionOptions opt;
  opt.record_generators = !o.dot.empty();
  auto part = component_partition(o.D, *level, opt);
  if (!o.dot.empty()) write_file(o.dot, partition_dot(part));
  if (o.format == "json") {
    std::cout << to_json(part).dump(2) << "\n";
    return 0;
  }
  std::cout << "D=" << o.D << " level=" << to_string(*level) << " components=" << part.count() << "\n";
  for (const auto& c : part.components()) {
    std::cout << " ";
    for (const auto& p : c) std::cout << " " << p.str();
    std::cout << "\n";
  }
  return 0;
}

int print_reports(const std::vector<Json>& reports, const Options& o) {
  bool all = true;
  for (const auto& r : reports) {
    bool ok = r.contains("matches_theorem") ? r["matches_theorem"].get<bool>() : r["match"].get<bool>();
    all = all && ok;
    if (o.format == "json") {
      std::cout << r.dump() << "\n";
      continue;
    }
    std::cout << "D=" << r["D"];
    if (r.contains("theorem")) {
      std::cout << " " << r["theorem"].get<std::string>();
      std::cout << (ok ? " match" : " MISMATCH") << " expected=" << r["expected"] << " actual=" << r["actual"];
      if (!r["claimed"].get<bool>()) std::cout << " (no claim)";
      for (const auto& d : r["details"]) std::cout << "; " << d.get<std::string>();
    } else {
      std::cout << " orbits=" << r["orbits"] << " pa_components=" << r["pa_components"] << (ok ? " match" : " MISMATCH");
    }
    std::cout << "\n";
  }
  return all ? 0 : kMismatch;
}

int verify_strategies(const Options& o) {
  bool ok = true;
  for (int h : {1, 2}) {
    auto scan = strategy_scan(h, o.jobs);
    std::vector<std::pair<int, int>> expect{{static_cast<int>(mod_floor(4 * h * h, kModulus)), static_cast<int>(mod_floor(-10 * h, kModulus))},
                                            {static_cast<int>(mod_floor(4 * h * h, kModulus)), static_cast<int>(mod_floor(-2 * h, kModulus))}};
    std::sort(expect.begin(), expect.end());
    bool good = scan.uncovered == expect && scan.search_uncovered == expect &&
                scan.first_match[0] == tables::kStrategyThreeCount && scan.first_match[1] == tables::kStrategyFiveMinusThreeCount;
    ok = ok && good;
    if (o.format == "json")
      std::cout << to_json(scan).dump() << "\n";
    else
      std::cout << "scan h=" << h << (good ? " match" : " MISMATCH") << " (3):" << scan.first_match[0]
                << " (5,-3):" << scan.first_match[1] << " uncovered=" << scan.uncovered.size() << "\n";
  }
  if (o.range.empty()) return ok ? 0 : kMismatch;
  auto reports = fan_out(discriminants(parse_range(o.range)), o.jobs, [](std::int64_t D) {
    Json r{{"D", D}, {"theorem", "strategies"}, {"applicable", true}, {"claimed", true}, {"match", true}};
    std::int64_t count = 0;
    Json details = Json::array();
    for (int h : {1, 2}) {
      if (h == 2 && mod_floor(D, 8) != 1) continue;
      for (std::int64_t e : RangeSets(D, h).t_set()) {
        auto s = find_strategy(D, e, h);
        if (!s) continue;
        try {
          run_strategy(D, e, h, *s);
          ++count;
        } catch (const std::exception& ex) {
          r["match"] = false;
          details.push_back(ex.what());
        }
      }
    }
    r["expected"] = count;
    r["actual"] = count;
    r["details"] = details;
    return r;
  });
  return print_reports(reports, o) == 0 && ok ? 0 : kMismatch;
}

int cmd_verify(const Options& o) {
  if (o.theorem == "strategies") return verify_strategies(o);
  if (o.range.empty()) throw UsageError("verify needs --range");
  auto Ds = discriminants(parse_range(o.range));
  auto cache = open_cache(o);
  std::function<Json(std::int64_t)> f;
  if (o.theorem == "pd")
    f = [](std::int64_t D) { return to_json(verify_pd_theorem(D)); };
  else if (o.theorem == "s1")
    f = [](std::int64_t D) { return to_json(verify_sd_theorem(D, 1)); };
  else if (o.theorem == "s2")
    f = [](std::int64_t D) { return to_json(verify_sd_theorem(D, 2)); };
  else if (o.theorem == "orbits")
    f = [](std::int64_t D) { return orbit_json(orbit_report(D)); };
  else
    throw UsageError("unknown theorem " + o.theorem);
  auto all = fan_out(Ds, o.jobs, [&](std::int64_t D) { return cached(cache.get(), D, o.theorem, [&] { return f(D); }); });
  std::vector<Json> reports;
  for (auto& r : all)
    if (!r.contains("applicable") || r["applicable"].get<bool>()) reports.push_back(std::move(r));
  int rc = print_reports(reports, o);
  if (cache) std::cerr << "cache: " << cache->hits() << " hits, " << cache->computed() << " computed\n";
  return rc;
}

int cmd_trace(const Options& o) {
  auto q = parse_ints(o.proto, 4, "--proto");
  Prototype p = make_prototype(q[0], q[1], q[2], q[3], o.D);
  Discriminant d(o.D);
  Direction dir = Direction::vertical(d);
  if (!o.vertical) {
    if (o.slope.empty()) throw UsageError("trace needs --slope p,q,r or --vertical");
    auto s = parse_ints(o.slope, 3, "--slope");
    if (s[2] == 0) throw UsageError("slope denominator is zero");
    dir = Direction::slope(Surd(s[0], s[1], s[2], d));
  }
  auto surface = build_prototype_surface(p);
  auto dec = trace_direction(surface, dir);
  Json j = to_json(dec);
  if (dec.kind == DecompositionKind::FourCylinderA || dec.kind == DecompositionKind::FourCylinderB)
    j["prototype"] = to_json(extract_prototype(surface, dec));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_orbits(const Options& o) {
  if (o.D == 0 && o.range.empty()) throw UsageError("orbits needs --D or --range");
  if (o.D != 0) {
    if (!is_discriminant(o.D)) throw UsageError(std::to_string(o.D) + " is not a discriminant");
    auto r = orbit_report(o.D);
    if (!o.dot.empty()) write_file(o.dot, orbit_dot(r));
    Json j = orbit_json(r);
    if (o.format == "json")
      std::cout << j.dump(2) << "\n";
    else
      print_reports({j}, o);
    return j["matches_theorem"].get<bool>() ? 0 : kMismatch;
  }
  auto cache = open_cache(o);
  auto reports = fan_out(discriminants(parse_range(o.range)), o.jobs, [&](std::int64_t D) {
    return cached(cache.get(), D, "orbits", [D] { return orbit_json(orbit_report(D)); });
  });
  return print_reports(reports, o);
}

int cmd_st_orbits(const Options& o) {
  if (o.n <= 0) throw UsageError("--n must be positive");
  std::cout << square_tiled_orbits(o.n) << "\n";
  return 0;
}

int cmd_strategy(const Options& o) {
  if (o.scan) {
    auto scan = strategy_scan(o.h, o.jobs);
    std::cout << to_json(scan).dump(2) << "\n";
    return 0;
  }
  if (o.pair.empty()) throw UsageError("strategy needs --scan or --pair D,e");
  auto v = parse_ints(o.pair, 2, "--pair");
  auto s = find_strategy(v[0], v[1], o.h);
  Json j{{"D", v[0]}, {"e", v[1]}, {"h", o.h}, {"strategy", s ? Json(to_string(*s)) : Json(nullptr)}};
  RangeSets sets(v[0], o.h);
  j["in_T"] = sets.in_t(v[1]);
  if (s && sets.in_t(v[1])) j["end"] = run_strategy(v[0], v[1], o.h, *s);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prototypes, components and orbits of Prym eigenform loci in genus four"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    c->add_option("--jobs", o.jobs, "worker threads, 0 for all cores");
  };
  auto scans = [&](CLI::App* c) {
    c->add_option("--cache", o.cache_dir, std::string("cache directory (default $") + kCacheEnv + " or .prym-cache)");
    c->add_flag("--no-cache", o.no_cache);
  };

  auto* en = app.add_subcommand("enumerate", "list P_D");
  en->add_option("--D", o.D)->required();
  en->add_option("--model", o.model)->check(CLI::IsMember({"A", "B", "all", "reduced1", "reduced2"}));
  common(en);

  auto* co = app.add_subcommand("components", "butterfly components");
  co->add_option("--D", o.D)->required();
  co->add_option("--level", o.level)->check(CLI::IsMember({"pa", "s1", "s2"}));
  co->add_option("--dot", o.dot, "write the move graph");
  common(co);

  auto* ve = app.add_subcommand("verify", "check a classification statement over a range");
  ve->add_option("--theorem", o.theorem)->required()->check(CLI::IsMember({"pd", "s1", "s2", "strategies", "orbits"}));
  ve->add_option("--range", o.range, "a..b");
  common(ve);
  scans(ve);

  auto* tr = app.add_subcommand("trace", "cylinder decomposition of X_D(w,h,t,e) in a direction");
  tr->add_option("--D", o.D)->required();
  tr->add_option("--proto", o.proto, "w,h,t,e")->required();
  auto* sl = tr->add_option("--slope", o.slope, "p,q,r for (p + q sqrt D)/r");
  tr->add_flag("--vertical", o.vertical)->excludes(sl);
  common(tr);

  auto* orb = app.add_subcommand("orbits", "GL+(2,R)-orbits of the eigenform locus");
  auto* od = orb->add_option("--D", o.D);
  orb->add_option("--range", o.range, "a..b")->excludes(od);
  orb->add_option("--dot", o.dot, "write the orbit graph (with --D)");
  common(orb);
  scans(orb);

  auto* st = app.add_subcommand("st-orbits", "orbits of primitive square-tiled surfaces");
  st->add_option("--n", o.n, "number of squares")->required();
  common(st);

  auto* sg = app.add_subcommand("strategy", "mod 105 strategies");
  sg->set_help_flag("--help", "print this help message and exit");
  sg->add_flag("--scan", o.scan);
  sg->add_option("--pair", o.pair, "D,e");
  sg->add_option("--h", o.h)->check(CLI::IsMember({1, 2}));
  common(sg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (co->parsed()) return cmd_components(o);
    if (ve->parsed()) return cmd_verify(o);
    if (tr->parsed()) return cmd_trace(o);
    if (orb->parsed()) return cmd_orbits(o);
    if (st->parsed()) return cmd_st_orbits(o);
    if (sg->parsed()) return cmd_strategy(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
