#include "seriate/checker.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "check_detail.hpp"

namespace seriate::check {

using nlohmann::ordered_json;

std::string_view to_string(Semantics s) noexcept {
  switch (s) {
    case Semantics::interval: return "interval";
    case Semantics::free: return "free";
    case Semantics::row_continuous: return "row-continuous";
    case Semantics::lattice4: return "lattice-4";
  }
  return "interval";
}

std::optional<Semantics> semantics_from(std::string_view s) noexcept {
  for (Semantics x : {Semantics::interval, Semantics::free, Semantics::row_continuous, Semantics::lattice4}) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

namespace {

using S = Semantics;

const std::vector<std::string> kPoints = {"max_points"};
const std::vector<std::string> kGrid = {"rows", "cols"};
const std::vector<std::string> kPath = {"rows", "cols", "max_path"};
const std::vector<std::string> kMap = {"rows", "cols", "countries"};

std::vector<TheoremInfo> build_registry() {
  const std::vector<S> d1 = {S::interval, S::free};
  const std::vector<S> tr = {S::row_continuous};
  const std::vector<S> lat = {S::lattice4};
  return {
      {"Th1.1", S::interval, d1, kPoints, "two lines meeting only in a shared end point join into one line",
       "L(A,B;x) & L(B,C;y) & [z <-> [x + y]] => L(A,C;z)"},
      {"Th1.2", S::interval, d1, kPoints, "an interior point cuts a line into two lines sharing only that point",
       "[L(A,B;x) & [C -> x] & ~[C = [A | B]]] => [L(A,C;y) & L(C,B;z) & [[y + z] <-> x]]"},
      {"Th1.3", S::interval, d1, kPoints, "two interior points cut a line into three lines exhausting it",
       "[L(A,B;x) & [P -> x] & [Q -> x]] => [L(P,Q;y) & [[L(A,P;z) & L(Q,B;w)] | [L(A,Q;z) & L(P,B;w)]]]"},
      {"Th1.4", S::interval, d1, kPoints, "interior points sit between the two end points",
       "[L(A,B;x) & [C -> x] & ~[C = [A | B]]] => A/C/B(x)"},
      {"Th1.5", S::interval, d1, kPoints, "of three points on a line, some one is between the others",
       "[L(A,B;x) & [[H & J & K] -> x]] => [H/J/K(x) | J/H/K(x) | H/K/J(x)]"},
      {"Th1.6", S::interval, d1, kPoints, "of three points on a line, at most one is between the others",
       "[L(A,B;x) & H/J/K(x)] => [~J/H/K(x) & ~H/K/J(x)]"},
      {"Th1.7", S::interval, d1, kPoints, "an end point is never between two other points of its line",
       "[L(A,B;x) & [[P & Q] -> x]] => [~P/A/Q(x) & ~P/B/Q(x)]"},
      {"Th1.8", S::interval, d1, kPoints, "any two ring points re-cut the ring into two lines sharing only them",
       "RING(P,Q;r) => [L(P,Q;x) & L(P,Q;y) & [[x + y] <-> r] & [[x & y] <-> [P + Q]]]"},
      {"Th1.9", S::interval, d1, kPoints, "each of three ring points is between the other two",
       "RING(H,J,K;r) => [H/J/K(r) & J/H/K(r) & H/K/J(r)]"},
      {"Th1.10", S::interval, d1, kPoints, "no ring fits inside a line",
       "RING(H,J,K;r) & L(A,B;x) => ~[r -> x]"},
      {"Th2.1", S::row_continuous, tr, kGrid, "rows of a family of lines are pairwise disjoint",
       "[S2!(x) & [y -> x] & [z -> x] & ~[y = z]] => ~[P -> [y & z]]"},
      {"Th2.2", S::row_continuous, tr, kGrid, "families split and join along rows like lines along points",
       "[S2!(x) & [y -> x] & ~[y = [x^0 | x^1]]] => [S2!(u) & S2!(v) & [[u + v] <-> x]]"},
      {"Th2.3", S::row_continuous, tr, kGrid, "unfixed family: a seriating line joins points on different rows",
       "[S2!(x) & [P -> x^1] & [Q -> x^2]] => SL(P,Q;a)"},
      {"Th2.4", S::row_continuous, tr, kGrid, "row end points and both end rows form a ring",
       "S2!(x, L(A,B;y), L(C,D;z)) => RING(A,B,D,C;r)"},
      {"Th2.5", S::row_continuous, tr, kGrid, "fixed family: a seriating line joins points on different rows",
       "[S2!(x, L(A,B;y), L(C,D;z)) & RING(A,B,D,C;r) & [P -> x^1] & [Q -> x^2]] => SL(P,Q;a)"},
      {"Th2.6", S::row_continuous, tr, kGrid, "two disjoint boundary lines become the end rows of a new family",
       "[S2!(x) & L(P,Q;y) & L(H,K;z) & [[y + z] -> r] & ~[y = z]] => [S2!(w, L(P,Q;y), L(H,K;z)) & [w <-> x]]"},
      {"Th2.7", S::row_continuous, tr, kGrid, "two non-crossing seriating lines bound a sub-family",
       "[S2!(x) & SL(A,B;y) & SL(C,D;z) & [[A & C] -> x^0] & [[B & D] -> x^1]] => S2!(w, L(A,C;u), L(B,D;v))"},
      {"Th2.8", S::row_continuous, {S::row_continuous, S::free}, kPath,
       "a line meets every row between two rows it touches",
       "[S2!(x) & L(P,Q;p) & [P -> x^0] & [Q -> x^2]] => ~[x^1 -> [a - p]]"},
      {"Th2.9", S::row_continuous, tr, kPath, "a line decomposes into a minimal chain of row runs and seriating runs",
       "[S2!(x) & L(P,Q;p)] => [L(P,H;u) & L(H,Q;v) & [[u + v] <-> p]]"},
      {"Th2.10", S::lattice4, lat, kGrid, "two areas sharing one boundary line merge into one area",
       "[A!(a;_b) & A!(c;_d) & L(P,Q;x) & [[b & d] <-> x]] => [A!(e;_f) & [e <-> [a + c]]]"},
      {"Th2.11", S::lattice4, lat, kPath, "a chord anchored on the boundary splits an area in two",
       "[A!(a;_b) & L(P,Q;x) & [x -> a] & [[P & Q] -> b]] => [A!(c) & A!(e) & [[c + e] <-> a] & [x -> [c & e]]]"},
      {"Th2.12", S::lattice4, lat, kGrid, "a ring inside an area bounds exactly one sub-area",
       "[A!(a;_b) & RING(P,Q;r) & [r -> a]] => [A!(c;_r) & [c -> a]]"},
      {"Th2.13", S::lattice4, lat, kPath, "a line from inside one area to inside another crosses their common boundary",
       "[A!(a;_b) & A!(c;_d) & L(P,Q;p) & [p -> [a + c]] & [H -> p] & [K -> p] & [H -> [a - b]] & [K -> [c - d]]] => "
       "[[J -> p] & [J -> b] & [J -> d]]"},
      {"Th2.14", S::lattice4, lat, kPath, "of three lines with common ends, exactly one pair encloses the third",
       "[A!(a) & L(P,Q;x) & L(P,Q;y) & L(P,Q;z) & [[x + y + z] -> a]] => "
       "[[A!(c;_u) & [u <-> [x + y]] & [z -> c]] | [A!(c;_u) & [u <-> [x + z]] & [y -> c]] | "
       "[A!(c;_u) & [u <-> [y + z]] & [x -> c]]]"},
      {"Th2.15", S::lattice4, lat, kGrid, "no third area touches the interior of a line shared by two others",
       "[A!(a;_b) & A!(c;_d) & A!(e;_f) & L(P,Q;x) & [x -> [b & d]] & [H -> x] & ~[H = [P | Q]]] => ~[H -> f]"},
      {"FiveMap", S::lattice4, lat, kMap, "five areas cannot all pairwise share a boundary line",
       "[A!(a;_b) & A!(c;_d) & A!(e;_f) & A!(g;_h) & A!(i;_j)] => ~[[k^1 -> [b & d]] & [k^2 -> [b & f]] & "
       "[k^3 -> [b & h]] & [k^4 -> [b & j]] & [k^5 -> [d & f]] & [k^6 -> [d & h]] & [k^7 -> [d & j]] & "
       "[k^8 -> [f & h]] & [k^9 -> [f & j]] & [k^10 -> [h & j]]]"},
  };
}

using Fn = detail::Partial (*)(const detail::Context&);

Fn runner(const std::string& id) {
  static const std::vector<std::pair<std::string, Fn>> table = {
      {"Th1.1", detail::th1_1},   {"Th1.2", detail::th1_2},   {"Th1.3", detail::th1_3},   {"Th1.4", detail::th1_4},
      {"Th1.5", detail::th1_5},   {"Th1.6", detail::th1_6},   {"Th1.7", detail::th1_7},   {"Th1.8", detail::th1_8},
      {"Th1.9", detail::th1_9},   {"Th1.10", detail::th1_10}, {"Th2.1", detail::th2_1},   {"Th2.2", detail::th2_2},
      {"Th2.3", detail::th2_3},   {"Th2.4", detail::th2_4},   {"Th2.5", detail::th2_5},   {"Th2.6", detail::th2_6},
      {"Th2.7", detail::th2_7},   {"Th2.8", detail::th2_8},   {"Th2.9", detail::th2_9},   {"Th2.10", detail::th2_10},
      {"Th2.11", detail::th2_11}, {"Th2.12", detail::th2_12}, {"Th2.13", detail::th2_13}, {"Th2.14", detail::th2_14},
      {"Th2.15", detail::th2_15}, {"FiveMap", detail::five_map},
  };
  for (const auto& [k, f] : table) {
    if (k == id) return f;
  }
  throw Error(Errc::unknown_theorem, id);
}

int bound_value(const Bounds& b, const std::string& name) {
  if (name == "max_points") return b.max_points;
  if (name == "rows") return b.rows;
  if (name == "cols") return b.cols;
  if (name == "max_path") return b.max_path;
  return b.countries;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate_bounds(const TheoremInfo& t, const Bounds& b) {
  bool rings = t.id == "Th1.8" || t.id == "Th1.9" || t.id == "Th1.10";
  for (const std::string& n : t.bound_names) {
    int v = bound_value(b, n);
    if (n == "max_points") require(v >= (rings ? 4 : 3), t.id + ": max_points must be at least " + (rings ? "4" : "3"));
    if (n == "rows" || n == "cols") require(v >= 1 && v < 1000, t.id + ": " + n + " must be in 1..999");
    if (n == "max_path") require(v >= 2, t.id + ": max_path must be at least 2");
    if (n == "countries") require(v >= 1 && v <= b.rows * b.cols, t.id + ": countries must be in 1..rows*cols");
  }
}

}  // namespace

const std::vector<TheoremInfo>& registry() {
  static const std::vector<TheoremInfo> r = build_registry();
  return r;
}

const TheoremInfo& lookup(const std::string& id) {
  for (const TheoremInfo& t : registry()) {
    if (t.id == id) return t;
  }
  throw Error(Errc::unknown_theorem, id);
}

Bounds default_bounds(const std::string& id, Semantics s) {
  const TheoremInfo& t = lookup(id);
  Bounds b;
  if (id == "Th1.8" || id == "Th1.9" || id == "Th1.10") {
    b.max_points = 9;
  } else if (id.rfind("Th1.", 0) == 0) {
    b.max_points = 7;
  } else if (id == "FiveMap") {
    b = {0, 3, 3, 0, 5};
  } else if (id == "Th2.8" && s == Semantics::free) {
    b = {0, 3, 3, 9, 0};
  } else if (t.semantics == Semantics::row_continuous && id != "Th2.8" && id != "Th2.9") {
    b = {0, 5, 5, 0, 0};
  } else {
    b = {0, 4, 4, 10, 0};
  }
  return b;
}

std::uint64_t instance_ceiling() {
  if (const char* env = std::getenv("SERIATE_INSTANCE_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000ULL;
}

Verdict check(const std::string& id, const Options& opt) {
  const TheoremInfo& t = lookup(id);
  Semantics sem = opt.semantics.value_or(t.semantics);
  if (std::find(t.modes.begin(), t.modes.end(), sem) == t.modes.end()) {
    throw Error(Errc::unsupported_semantics, id + " has no " + std::string(to_string(sem)) + " semantics");
  }
  Bounds b = default_bounds(id, sem);
  if (opt.bounds.max_points) b.max_points = opt.bounds.max_points;
  if (opt.bounds.rows) b.rows = opt.bounds.rows;
  if (opt.bounds.cols) b.cols = opt.bounds.cols;
  if (opt.bounds.max_path) b.max_path = opt.bounds.max_path;
  if (opt.bounds.countries) b.countries = opt.bounds.countries;
  validate_bounds(t, b);

  detail::Context ctx{sem, b, std::max(1u, opt.jobs), opt.ceiling ? opt.ceiling : instance_ceiling()};
  auto start = std::chrono::steady_clock::now();
  detail::Partial p = runner(id)(ctx);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  Verdict v;
  v.theorem = id;
  v.semantics = sem;
  for (const std::string& n : t.bound_names) v.bounds.emplace_back(n, bound_value(b, n));
  v.instances = p.instances;
  v.verified = !p.cex.has_value();
  if (p.cex) v.counterexample = std::move(p.cex->body);
  if (opt.timing) v.elapsed_ms = ms;
  return v;
}

ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["theorem"] = v.theorem;
  j["semantics"] = std::string(to_string(v.semantics));
  ordered_json b = ordered_json::object();
  for (const auto& [k, x] : v.bounds) b[k] = x;
  j["bounds"] = b;
  j["status"] = v.verified ? "verified" : "refuted";
  j["instances"] = v.instances;
  j["counterexample"] = v.counterexample ? *v.counterexample : ordered_json(nullptr);
  j["elapsed_ms"] = v.elapsed_ms ? ordered_json(*v.elapsed_ms) : ordered_json(nullptr);
  return j;
}

std::string to_text(const Verdict& v) {
  std::ostringstream os;
  os << v.theorem << " [" << to_string(v.semantics) << "]";
  for (const auto& [k, x] : v.bounds) os << " " << k << "=" << x;
  os << "\n  status: " << (v.verified ? "verified" : "refuted") << "\n  instances: " << v.instances << "\n";
  if (v.counterexample) {
    const ordered_json& c = *v.counterexample;
    os << "  counterexample: " << c["statement"].get<std::string>() << "\n";
    os << "    model: " << c["model"].dump() << "\n";
    if (!c["vars"].empty()) os << "    vars: " << c["vars"].dump() << "\n";
  }
  if (v.elapsed_ms) os << "  elapsed_ms: " << *v.elapsed_ms << "\n";
  return os.str();
}

void enumerate_lines(int max_points, const std::function<void(const Line&)>& visit) {
  if (max_points < 3) throw std::invalid_argument("enumerate_lines: max_points must be at least 3");
  for (int n = 3; n <= max_points; ++n) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      if (perm.front() > perm.back()) continue;
      std::vector<PointId> seq;
      for (std::uint32_t x : perm) seq.push_back(PointId{x});
      visit(Line::from(std::move(seq)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

void enumerate_rings(int max_points, const std::function<void(const Ring&)>& visit) {
  if (max_points < 4) throw std::invalid_argument("enumerate_rings: max_points must be at least 4");
  for (int m = 4; m <= max_points; ++m) {
    std::vector<std::uint32_t> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 1u);
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<PointId> cyc{PointId{0}};
      for (std::uint32_t x : rest) cyc.push_back(PointId{x});
      visit(Ring::from(std::move(cyc)));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

namespace detail {

void Partial::refute(Key key, const std::function<ordered_json()>& body) {
  if (cex && !(key < cex->key)) return;
  cex = Counterexample{std::move(key), body()};
}

void Partial::absorb(Partial&& o) {
  instances += o.instances;
  if (o.cex && (!cex || o.cex->key < cex->key)) cex = std::move(o.cex);
}

void guard_estimate(const Context& ctx, double estimate) {
  if (estimate > static_cast<double>(ctx.ceiling)) {
    std::ostringstream os;
    os << "estimated " << static_cast<unsigned long long>(estimate) << " instances exceeds the ceiling of " << ctx.ceiling;
    throw Error(Errc::bounds_too_large, os.str());
  }
}

Partial run_items(const Context& ctx, std::size_t n, const std::function<void(std::size_t, Partial&)>& item) {
  std::vector<Partial> parts(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex mu;

  auto worker = [&] {
    while (!stop.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        item(i, parts[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
      if (total.fetch_add(parts[i].instances) + parts[i].instances > ctx.ceiling) stop = true;
    }
  };
  unsigned threads = static_cast<unsigned>(std::min<std::size_t>(ctx.jobs, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (total.load() > ctx.ceiling) {
    throw Error(Errc::bounds_too_large, "instance count passed the ceiling of " + std::to_string(ctx.ceiling));
  }
  Partial out;
  for (Partial& p : parts) out.absorb(std::move(p));
  return out;
}

ordered_json counterexample_body(const ModelFile& m, const std::string& statement,
                                 const std::vector<std::pair<std::string, std::vector<std::string>>>& vars, Semantics sem) {
  ordered_json j;
  j["model"] = m.to_json();
  j["statement"] = statement;
  ordered_json v = ordered_json::object();
  for (const auto& [k, names] : vars) v[k] = names;
  j["vars"] = v;
  j["semantics"] = std::string(to_string(sem));
  return j;
}

std::vector<std::string> names_of(const std::vector<PointId>& pts) {
  std::vector<std::string> out;
  for (PointId p : pts) out.push_back(point_name(p.value));
  return out;
}

}  // namespace detail

}  // namespace seriate::check
