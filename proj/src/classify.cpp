#include "skewproj/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "skewproj/codes.hpp"
#include "skewproj/epsilon.hpp"
#include "skewproj/errors.hpp"
#include "skewproj/kernels.hpp"

namespace skewproj {

namespace {

std::string edge_string(const Graph& g) {
  std::string s = "{";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return s + "}";
}

int resolve_threads(int requested) {
  int t = requested;
  if (t <= 0)
    if (const char* env = std::getenv("SKEWPROJ_THREADS")) t = std::atoi(env);
  if (t <= 0) t = int(std::thread::hardware_concurrency());
  return std::clamp(t, 1, 64);
}

// One code per switching orbit, ascending; the code space is split into
// contiguous ranges merged back in order, so the result is thread-count
// independent.
std::vector<AdjCode> orbit_minima(int n, const kernels::OrbitScanner& scanner,
                                  int threads) {
  AdjCode end = AdjCode(1) << pair_count(n);
  std::uint64_t expected = std::uint64_t(1) << pair_count(n - 1);
  std::vector<AdjCode> reps;
  reps.reserve(expected);
  if (threads == 1 || end < (AdjCode(1) << 16)) {
    scanner.collect_minima(0, end, reps);
  } else {
    std::vector<std::vector<AdjCode>> parts(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        AdjCode lo = end / AdjCode(threads) * AdjCode(t);
        AdjCode hi = t + 1 == threads ? end : end / AdjCode(threads) * AdjCode(t + 1);
        scanner.collect_minima(lo, hi, parts[t]);
      });
    for (auto& worker : pool) worker.join();
    for (const auto& part : parts) reps.insert(reps.end(), part.begin(), part.end());
  }
  if (reps.size() != expected)
    throw consistency_error("orbit minimum count is off");
  return reps;
}

std::vector<CanonicalForm> mutation_closure(const Graph& g) {
  std::set<CanonicalForm> seen{canonical_form(g)};
  std::deque<Graph> work{g};
  while (!work.empty()) {
    Graph cur = work.front();
    work.pop_front();
    for (int v = 0; v < cur.vertex_count(); ++v) {
      Graph m = mutate(cur, v);
      if (seen.insert(canonical_form(m)).second) work.push_back(m);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

ClassCertificate certificate(const Graph& g, int limit_n) {
  if (limit_n < 1 || limit_n > kMaxVertices)
    fail_input("certificate limit must be between 1 and " +
               std::to_string(kMaxVertices));
  int n = g.vertex_count();
  if (n < 1 || n > limit_n)
    fail_input("certificate covers 1 to " + std::to_string(limit_n) +
               " vertices, got " + std::to_string(n));
  ClassCertificate best = canonical_form(g);
  for (int s = 1; s < 1 << (n - 1); ++s)
    best = std::min(best, canonical_form(switching(g, VertexSet(s << 1))));
  return best;
}

bool switching_equivalent(const Graph& g, const Graph& h, int limit_n) {
  if (g.vertex_count() != h.vertex_count())
    fail_input("switching equivalence needs equal vertex counts, got " +
               std::to_string(g.vertex_count()) + " and " +
               std::to_string(h.vertex_count()));
  bool equal = certificate(g, limit_n) == certificate(h, limit_n);
  if (g.vertex_count() <= 8) {
    bool by_cover = is_isomorphic(switching_graph(g), switching_graph(h));
    if (by_cover != equal)
      throw consistency_error("certificate and double cover routes disagree");
  }
  return equal;
}

std::uint64_t ClassCatalog::labeled_total() const {
  std::uint64_t total = 0;
  for (const auto& rec : classes) total += rec.labeled_count;
  return total;
}

ClassCatalog enumerate_classes(int n, const EnumerateOptions& opts) {
  if (opts.limit_n < 1 || opts.limit_n > 11)
    fail_input("enumeration limit must be between 1 and 11");
  if (n < 1 || n > opts.limit_n)
    fail_input("enumeration covers 1 to " + std::to_string(opts.limit_n) +
               " vertices, got " + std::to_string(n));
  if (n >= 8 && !opts.allow_long)
    fail_input("enumerating " + std::to_string(n) + " vertices scans 2^" +
               std::to_string(pair_count(n)) +
               " codes; opt in to the long run");

  auto masks = switching_masks(n);
  kernels::OrbitScanner scanner(std::span<const AdjCode>(masks).subspan(1));
  std::vector<AdjCode> reps =
      orbit_minima(n, scanner, resolve_threads(opts.threads));

  // Join orbits related by a relabeling; the roots stay the least member, so
  // reps[find(i)] is the minimal code of the class of reps[i].
  std::vector<std::uint32_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> swap01(n), rotate(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  if (n >= 2) std::swap(swap01[0], swap01[1]);
  for (int v = 0; v < n; ++v) rotate[v] = (v + 1) % n;
  for (const auto& perm : {swap01, rotate}) {
    if (n < 2) break;
    auto bit_map = code_bit_permutation(n, perm);
    for (std::uint32_t i = 0; i < reps.size(); ++i) {
      AdjCode image = scanner.orbit_min(permute_code(reps[i], bit_map));
      auto it = std::lower_bound(reps.begin(), reps.end(), image);
      if (it == reps.end() || *it != image)
        throw consistency_error("permuted orbit minimum missing from the scan");
      std::uint32_t a = find(i), b = find(std::uint32_t(it - reps.begin()));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<AdjCode, std::uint64_t> orbit_counts;  // class minimum -> orbits
  for (std::uint32_t i = 0; i < reps.size(); ++i)
    orbit_counts[reps[find(i)]] += 1;

  ClassCatalog catalog;
  catalog.n = n;
  for (const auto& [code, orbits] : orbit_counts) {
    ClassRecord rec;
    rec.representative = decode(n, code);
    rec.certificate = certificate(rec.representative);
    rec.labeled_count = orbits << (n - 1);
    rec.components = point_variety(rec.representative);
    if (n >= 2) rec.type = type_vector(rec.representative);
    rec.dimension = dimension(rec.representative);
    catalog.classes.push_back(std::move(rec));
  }

  if (catalog.labeled_total() != AdjCode(1) << pair_count(n))
    throw consistency_error("class sizes do not cover the code space");
  std::vector<ClassCertificate> certs;
  certs.reserve(catalog.classes.size());
  for (const auto& rec : catalog.classes) certs.push_back(rec.certificate);
  std::sort(certs.begin(), certs.end());
  if (std::adjacent_find(certs.begin(), certs.end()) != certs.end())
    throw consistency_error("two classes share a certificate");
  return catalog;
}

std::optional<MutationPath> mutation_path(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count())
    fail_input("mutation path needs equal vertex counts, got " +
               std::to_string(g.vertex_count()) + " and " +
               std::to_string(h.vertex_count()));
  int n = g.vertex_count();
  if (n < 1 || n > 12)
    fail_input("mutation paths cover 1 to 12 vertices, got " +
               std::to_string(n));

  struct State {
    Graph graph;
    std::vector<int> path;
  };
  auto finish = [&h](const State& s) {
    auto sigma = isomorphism(s.graph, h);
    if (!sigma) throw consistency_error("mutation search landed off target");
    return MutationPath{s.path, *sigma};
  };

  CanonicalForm target = canonical_form(h);
  if (canonical_form(g) == target) return finish(State{g, {}});
  std::set<CanonicalForm> seen{canonical_form(g)};
  std::deque<State> work;
  work.push_back(State{g, {}});
  while (!work.empty()) {
    State cur = std::move(work.front());
    work.pop_front();
    for (int v = 0; v < n; ++v) {
      State next{mutate(cur.graph, v), cur.path};
      next.path.push_back(v);
      CanonicalForm form = canonical_form(next.graph);
      if (!seen.insert(form).second) continue;
      if (form == target) return finish(next);
      work.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

bool TheoremReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoremCheck& c) { return c.pass(); });
}

std::string TheoremReport::to_text() const {
  std::ostringstream out;
  out << "n=" << n << ": " << class_count << " classes, "
      << (exhaustive_pairs ? "all labeled graph pairs"
                           : "class representative pairs")
      << "\n";
  for (const auto& c : checks) {
    out << (c.pass() ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.pairs
        << " pairs]\n";
    for (const auto& witness : c.counterexamples) out << "      " << witness << "\n";
  }
  return out.str();
}

TheoremReport verify_main_theorem(int n) {
  if (n < 2 || n > 5)
    fail_input("theorem verification covers 2 to 5 vertices, got " +
               std::to_string(n));
  TheoremReport report;
  report.n = n;
  report.exhaustive_pairs = n <= 4;

  std::vector<Graph> scope;
  if (report.exhaustive_pairs)
    for (AdjCode c = 0; c < AdjCode(1) << pair_count(n); ++c)
      scope.push_back(decode(n, c));
  else
    for (const auto& rec : enumerate_classes(n).classes)
      scope.push_back(rec.representative);

  struct GraphFacts {
    Graph g;
    ClassCertificate cert;
    CanonicalForm self;
    CanonicalForm cover;
    CanonicalForm doubled;
    FacetFamily components;
    std::vector<CanonicalForm> closure;
  };
  std::vector<GraphFacts> facts;
  facts.reserve(scope.size());
  std::set<ClassCertificate> distinct;
  for (const Graph& g : scope) {
    GraphFacts f;
    f.g = g;
    f.cert = certificate(g);
    f.self = canonical_form(g);
    f.cover = canonical_form(switching_graph(g));
    f.doubled =
        canonical_form(graph_of_epsilon(doubled_algebra(epsilon_of_graph(g))));
    f.components = point_variety(g);
    f.closure = mutation_closure(g);
    distinct.insert(f.cert);
    facts.push_back(std::move(f));
  }
  report.class_count = int(distinct.size());

  report.checks = {
      {"certificate equality <=> double cover isomorphism", 0, {}},
      {"double cover isomorphism <=> doubled algebra isomorphism", 0, {}},
      {"doubled algebra isomorphism <=> facet family isomorphism", 0, {}},
      {"facet family isomorphism <=> mutation reachability", 0, {}},
  };
  auto note = [](TheoremCheck& c, const GraphFacts& a, const GraphFacts& b,
                 bool lhs, bool rhs) {
    ++c.pairs;
    if (lhs != rhs)
      c.counterexamples.push_back(
          "g=" + edge_string(a.g) + " h=" + edge_string(b.g) + ": " +
          (lhs ? "left side holds, right side fails"
               : "right side holds, left side fails"));
  };
  for (std::size_t i = 0; i < facts.size(); ++i)
    for (std::size_t j = i + 1; j < facts.size(); ++j) {
      const GraphFacts& a = facts[i];
      const GraphFacts& b = facts[j];
      bool cert_eq = a.cert == b.cert;
      bool cover_iso = a.cover == b.cover;
      bool doubled_iso = a.doubled == b.doubled;
      bool facet_iso = facet_families_isomorphic(a.components, b.components);
      bool reachable =
          std::binary_search(a.closure.begin(), a.closure.end(), b.self);
      note(report.checks[0], a, b, cert_eq, cover_iso);
      note(report.checks[1], a, b, cover_iso, doubled_iso);
      note(report.checks[2], a, b, doubled_iso, facet_iso);
      note(report.checks[3], a, b, facet_iso, reachable);
    }
  return report;
}

}  // namespace skewproj
