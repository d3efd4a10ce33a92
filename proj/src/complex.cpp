#include "skewproj/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "skewproj/errors.hpp"

namespace skewproj {

namespace {

// Descending cardinality, then ascending lexicographic on sorted labels.
bool facet_less(VertexSet a, VertexSet b) {
  int ca = set_size(a), cb = set_size(b);
  if (ca != cb) return ca > cb;
  VertexSet x = a, y = b;
  while (x && y) {
    int va = set_first(x), vb = set_first(y);
    if (va != vb) return va < vb;
    x = set_remove(x, va);
    y = set_remove(y, vb);
  }
  return false;
}

std::vector<VertexSet> facets_by_projection(const Graph& g) {
  int n = g.vertex_count();
  auto cliques = maximal_cliques(switching_graph(g));
  VertexSet low = full_set(n);
  std::vector<VertexSet> proj;
  proj.reserve(cliques.size());
  for (VertexSet c : cliques) proj.push_back(VertexSet((c & low) | (c >> n)));
  // The layer swap (u,0)<->(u,1) maps a maximal clique to a distinct maximal
  // clique with the same projection whenever the projection has two or more
  // vertices; only the vertical pairs, which project to singletons, are
  // swap-fixed. So every multi-vertex projection must occur an even number of
  // times.
  std::map<VertexSet, int> count;
  for (VertexSet f : proj) ++count[f];
  for (auto [f, c] : count)
    if (set_size(f) >= 2 && c % 2 != 0)
      throw consistency_error("projection " + format_set(f) +
                              " occurs an odd number of times; the layer swap"
                              " should pair the cliques");
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
  // Every facet is the projection of some maximal clique, so keeping the
  // subset-maximal members of this family keeps exactly the facets.
  std::vector<VertexSet> keep;
  for (VertexSet f : proj) {
    bool covered = false;
    for (VertexSet h : proj)
      if (h != f && (f & h) == f) {
        covered = true;
        break;
      }
    if (!covered) keep.push_back(f);
  }
  return keep;
}

std::vector<VertexSet> facets_by_bitmap(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> face(std::size_t(1) << n, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    face[m] = is_face(g, VertexSet(m));
  std::vector<VertexSet> out;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (!face[m]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!set_contains(VertexSet(m), v) && face[m | (1u << v)]) maximal = false;
    if (maximal) out.push_back(VertexSet(m));
  }
  return out;
}

}  // namespace

bool is_face(const Graph& g, VertexSet f) {
  if (f & ~g.vertices())
    fail_input("face candidate contains vertices outside the graph");
  auto vs = set_vertices(f);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      for (std::size_t c = b + 1; c < vs.size(); ++c) {
        int e = int(g.has_edge(vs[a], vs[b])) + int(g.has_edge(vs[a], vs[c])) +
                int(g.has_edge(vs[b], vs[c]));
        if (e == 0 || e == 2) return false;
      }
  return true;
}

std::vector<VertexSet> faces_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (is_face(g, VertexSet(m))) out.push_back(VertexSet(m));
  return out;
}

FacetFamily facets(const Graph& g) {
  int n = g.vertex_count();
  FacetFamily fam;
  fam.n = n;
  if (n == 0) return fam;
  fam.facets = n <= 8 ? facets_by_projection(g) : facets_by_bitmap(g);
  std::sort(fam.facets.begin(), fam.facets.end(), facet_less);
  return fam;
}

FacetFamily point_variety(const Graph& g) { return facets(g); }

std::vector<VertexSet> stanley_reisner_generators(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int e = int(g.has_edge(i, j)) + int(g.has_edge(i, k)) +
                int(g.has_edge(j, k));
        if (e == 0 || e == 2)
          out.push_back(set_add(set_add(set_add(VertexSet(0), i), j), k));
      }
  return out;
}

int dimension(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) fail_input("dimension needs at least one vertex");
  int best = 0;
  for (VertexSet f : facets(g).facets) best = std::max(best, set_size(f));
  if (n >= 2 && n <= 8) {
    int omega = clique_number(switching_graph(g));
    if (omega != best)
      throw consistency_error("facet route gives max cardinality " +
                              std::to_string(best) + " but the double cover has"
                              " clique number " + std::to_string(omega));
  }
  return best - 1;
}

TypeVector type_vector(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) fail_input("type vector needs at least two vertices");
  TypeVector t(n - 1, 0);
  for (VertexSet f : facets(g).facets) ++t[n - set_size(f)];
  return t;
}

TypeVector type_formula_complete_union(std::span<const int> parts) {
  if (parts.size() < 2)
    fail_input("the product formula needs at least two complete summands");
  int n = 0;
  for (int r : parts) {
    if (r < 1) fail_input("complete summand sizes must be positive");
    n += r;
  }
  if (n > kMaxVertices)
    fail_input("total vertex count exceeds 16");
  TypeVector t(n - 1, 0);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      ++t[n - (parts[a] + parts[b])];
  return t;
}

namespace {

struct FamilyMatcher {
  const FacetFamily& a;
  const FacetFamily& b;
  int n;
  std::size_t fc, words;
  std::vector<std::uint64_t> b_with;  // per b-vertex: facets of b containing it
  std::array<VertexSet, kMaxVertices> cand{};
  std::vector<int> order;
  std::vector<int> sigma;
  VertexSet used = 0;

  bool row_all_zero(const std::uint64_t* row) const {
    for (std::size_t w = 0; w < words; ++w)
      if (row[w]) return false;
    return true;
  }

  bool finish() const {
    std::vector<VertexSet> image;
    image.reserve(fc);
    for (VertexSet f : a.facets) {
      VertexSet m = 0;
      for (int v : set_vertices(f)) m = set_add(m, sigma[v]);
      image.push_back(m);
    }
    std::vector<VertexSet> target = b.facets;
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    return image == target;
  }

  bool rec(std::size_t k, const std::vector<std::uint64_t>& comp) {
    if (k == order.size()) return finish();
    int u = order[k];
    for (int w : set_vertices(VertexSet(cand[u] & ~used))) {
      std::vector<std::uint64_t> next = comp;
      bool ok = true;
      for (std::size_t fa = 0; fa < fc && ok; ++fa) {
        std::uint64_t* row = next.data() + fa * words;
        const std::uint64_t* incid = b_with.data() + std::size_t(w) * words;
        if (set_contains(a.facets[fa], u))
          for (std::size_t x = 0; x < words; ++x) row[x] &= incid[x];
        else
          for (std::size_t x = 0; x < words; ++x) row[x] &= ~incid[x];
        ok = !row_all_zero(row);
      }
      if (!ok) continue;
      sigma[u] = w;
      used = set_add(used, w);
      if (rec(k + 1, next)) return true;
      used = set_remove(used, w);
      sigma[u] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> facet_family_isomorphism(const FacetFamily& a,
                                                         const FacetFamily& b) {
  if (a.n != b.n || a.facets.size() != b.facets.size()) return std::nullopt;
  int n = a.n;
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (a.facets.empty())
    return a.facets == b.facets ? std::optional(identity) : std::nullopt;

  auto size_list = [](const FacetFamily& f) {
    std::vector<int> s;
    s.reserve(f.facets.size());
    for (VertexSet x : f.facets) s.push_back(set_size(x));
    std::sort(s.begin(), s.end());
    return s;
  };
  if (size_list(a) != size_list(b)) return std::nullopt;

  std::array<std::vector<int>, kMaxVertices> pa, pb;
  for (VertexSet f : a.facets)
    for (int v : set_vertices(f)) pa[v].push_back(set_size(f));
  for (VertexSet f : b.facets)
    for (int v : set_vertices(f)) pb[v].push_back(set_size(f));
  for (int v = 0; v < n; ++v) {
    std::sort(pa[v].begin(), pa[v].end());
    std::sort(pb[v].begin(), pb[v].end());
  }

  FamilyMatcher m{a, b, n, a.facets.size(), (a.facets.size() + 63) / 64, {}, {}, {}, {}, 0};
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w)
      if (pa[u] == pb[w]) m.cand[u] = set_add(m.cand[u], w);
    if (!m.cand[u]) return std::nullopt;
  }
  m.order = identity;
  std::sort(m.order.begin(), m.order.end(), [&](int x, int y) {
    return set_size(m.cand[x]) < set_size(m.cand[y]);
  });
  m.sigma.assign(n, -1);
  m.b_with.assign(std::size_t(n) * m.words, 0);
  for (std::size_t fb = 0; fb < m.fc; ++fb)
    for (int w : set_vertices(b.facets[fb]))
      m.b_with[std::size_t(w) * m.words + fb / 64] |= std::uint64_t(1) << (fb % 64);
  std::vector<std::uint64_t> comp(m.fc * m.words, 0);
  for (std::size_t fa = 0; fa < m.fc; ++fa)
    for (std::size_t fb = 0; fb < m.fc; ++fb)
      if (set_size(a.facets[fa]) == set_size(b.facets[fb]))
        comp[fa * m.words + fb / 64] |= std::uint64_t(1) << (fb % 64);

  if (!m.rec(0, comp)) return std::nullopt;
  return m.sigma;
}

bool facet_families_isomorphic(const FacetFamily& a, const FacetFamily& b) {
  return facet_family_isomorphism(a, b).has_value();
}

}  // namespace skewproj
