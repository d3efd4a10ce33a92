#include "skewproj/canonical.hpp"

#include <algorithm>

#include "skewproj/codes.hpp"
#include "skewproj/errors.hpp"

namespace skewproj {

CanonicalForm CanonicalForm::from_blocks(int n, std::span<const std::uint16_t> blocks) {
  CanonicalForm f;
  f.data_[0] = std::uint8_t(n);
  f.size_ = std::uint8_t(1 + (pair_count(n) + 7) / 8);
  int p = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++p)
      if ((blocks[j] >> (j - 1 - i)) & 1)
        f.data_[1 + p / 8] |= std::uint8_t(0x80u >> (p % 8));
  return f;
}

CanonicalForm CanonicalForm::from_code(int n, std::uint64_t code) {
  if (n < 0 || pair_count(n) > 64)
    fail_input("packed codes support at most 11 vertices, got " + std::to_string(n));
  CanonicalForm f;
  f.data_[0] = std::uint8_t(n);
  int bits = pair_count(n);
  f.size_ = std::uint8_t(1 + (bits + 7) / 8);
  for (int p = 0; p < bits; ++p)
    if ((code >> (bits - 1 - p)) & 1)
      f.data_[1 + p / 8] |= std::uint8_t(0x80u >> (p % 8));
  return f;
}

std::string CanonicalForm::hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * size_);
  for (int i = 0; i < size_; ++i) {
    out += digits[data_[i] >> 4];
    out += digits[data_[i] & 0xf];
  }
  return out;
}

namespace {

// Depth-first search over vertex orderings for the lexicographically minimal
// upper-triangle bit string. At each depth the candidate block is the chosen
// vertex's adjacency to the prefix; restricting to block-minimal candidates
// is sound because the first differing block decides the comparison, and the
// prefix blocks refine the ordering like an iterated degree partition. One
// representative per twin pair suffices since swapping twins is an
// automorphism.
struct Canon {
  const Graph& g;
  int n;
  bool have_best = false;
  std::array<std::uint16_t, kMaxVertices> best_blk{};
  std::array<int, kMaxVertices> best_ord{};
  std::array<std::uint16_t, kMaxVertices> blk{};
  std::array<std::uint16_t, kMaxVertices> bv{};
  std::array<int, kMaxVertices> ord{};

  explicit Canon(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  int compare_prefix(int depth) const {
    if (!have_best) return -1;
    for (int j = 0; j < depth; ++j)
      if (blk[j] != best_blk[j]) return blk[j] < best_blk[j] ? -1 : 1;
    return 0;
  }

  bool twins(int u, int w) const {
    VertexSet off = VertexSet(full_set(n) & ~set_add(set_add(VertexSet(0), u), w));
    return (g.neighbors(u) & off) == (g.neighbors(w) & off);
  }

  void search(int depth, VertexSet remaining) {
    if (depth == n) {
      if (compare_prefix(n) < 0) {
        best_blk = blk;
        best_ord = ord;
        have_best = true;
      }
      return;
    }
    int rel = compare_prefix(depth);
    if (rel > 0) return;
    std::uint16_t m = 0xffff;
    for (VertexSet t = remaining; t; t &= VertexSet(t - 1))
      m = std::min(m, bv[set_first(t)]);
    if (rel == 0 && m > best_blk[depth]) return;
    int cand[kMaxVertices];
    int k = 0;
    for (VertexSet t = remaining; t; t &= VertexSet(t - 1)) {
      int v = set_first(t);
      if (bv[v] != m) continue;
      bool dup = false;
      for (int c = 0; c < k && !dup; ++c) dup = twins(cand[c], v);
      if (!dup) cand[k++] = v;
    }
    for (int c = 0; c < k; ++c) {
      int v = cand[c];
      ord[depth] = v;
      blk[depth] = m;
      VertexSet rest = set_remove(remaining, v);
      VertexSet nb = g.neighbors(v);
      for (VertexSet t = rest; t; t &= VertexSet(t - 1)) {
        int u = set_first(t);
        bv[u] = std::uint16_t((bv[u] << 1) | (set_contains(nb, u) ? 1u : 0u));
      }
      search(depth + 1, rest);
      for (VertexSet t = rest; t; t &= VertexSet(t - 1)) bv[set_first(t)] >>= 1;
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  int n = g.vertex_count();
  CanonicalLabeling out;
  if (n == 0) return out;
  Canon c(g);
  c.search(0, full_set(n));
  out.form = CanonicalForm::from_blocks(n, {c.best_blk.data(), std::size_t(n)});
  out.labeling.resize(n);
  for (int k = 0; k < n; ++k) out.labeling[c.best_ord[k]] = k;
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return std::nullopt;
  CanonicalLabeling cg = canonical_labeling(g);
  CanonicalLabeling ch = canonical_labeling(h);
  if (cg.form != ch.form) return std::nullopt;
  int n = g.vertex_count();
  std::vector<int> inv(n), p(n);
  for (int v = 0; v < n; ++v) inv[ch.labeling[v]] = v;
  for (int v = 0; v < n; ++v) p[v] = inv[cg.labeling[v]];
  return p;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  return canonical_form(g) == canonical_form(h);
}

}  // namespace skewproj
