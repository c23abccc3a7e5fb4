#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/perm.hpp"
#include "rloop/permgroup.hpp"

namespace rloop {

// An abstract finite group as a multiplication table over element ids.
// Construction verifies the group axioms exhaustively (associativity is the
// m^3 sweep), so holding a FiniteGroupTable means holding a checked group.
struct FiniteGroupTable {
  int order = 0;
  std::vector<std::vector<int>> mul;
  int id = 0;
  std::vector<int> inv;
  std::vector<std::string> labels;

  int at(int x, int y) const { return mul[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  const std::string& label(int x) const { return labels[static_cast<size_t>(x)]; }
};

inline FiniteGroupTable make_group_table(std::vector<std::vector<int>> mul,
                                         std::vector<std::string> labels = {},
                                         const Caps& caps = {}) {
  const int m = static_cast<int>(mul.size());
  if (m == 0) throw input_error("group table: empty");
  if (static_cast<long>(m) > caps.table_cap)
    throw cap_error("group table verification cap " + std::to_string(caps.table_cap) +
                    " exceeded (order " + std::to_string(m) + ")");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != m) throw input_error("group table: not square");
    for (int v : row)
      if (v < 0 || v >= m) throw input_error("group table: entry out of range");
  }
  if (labels.empty()) {
    labels.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != m) throw input_error("group table: label count mismatch");

  FiniteGroupTable g;
  g.order = m;
  g.mul = std::move(mul);
  g.labels = std::move(labels);

  int id = -1;
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) ok = g.at(e, x) == x && g.at(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw input_error("group table: no identity element");
  g.id = id;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int ab = g.at(a, b);
      for (int c = 0; c < m; ++c)
        if (g.at(ab, c) != g.at(a, g.at(b, c)))
          throw input_error("group table: not associative at (" + g.label(a) + ", " + g.label(b) +
                            ", " + g.label(c) + ")");
    }

  g.inv.assign(static_cast<size_t>(m), -1);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y)
      if (g.at(x, y) == id && g.at(y, x) == id) {
        g.inv[static_cast<size_t>(x)] = y;
        break;
      }
    if (g.inv[static_cast<size_t>(x)] < 0)
      throw input_error("group table: element " + g.label(x) + " has no inverse");
  }
  return g;
}

// The abstract table of a permutation group, in its canonical element order.
inline FiniteGroupTable to_group_table(const PermGroupData& g, const Caps& caps = {}) {
  const int m = static_cast<int>(g.order());
  std::vector<std::vector<int>> mul(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int k = g.index_of(compose(g.elements[static_cast<size_t>(i)],
                                       g.elements[static_cast<size_t>(j)]));
      if (k < 0) throw internal_error("to_group_table: element set not closed");
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
    }
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  for (const auto& p : g.elements) labels.push_back(format_cycles_bracket(p));
  return make_group_table(std::move(mul), std::move(labels), caps);
}

inline int element_order(const FiniteGroupTable& g, int x) {
  int n = 1;
  for (int acc = x; acc != g.id; acc = g.at(acc, x)) ++n;
  return n;
}

inline std::map<int, long> order_profile(const FiniteGroupTable& g) {
  std::map<int, long> prof;
  for (int x = 0; x < g.order; ++x) ++prof[element_order(g, x)];
  return prof;
}

inline bool is_abelian(const FiniteGroupTable& g) {
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (g.at(x, y) != g.at(y, x)) return false;
  return true;
}

inline std::vector<int> center(const FiniteGroupTable& g) {
  std::vector<int> out;
  for (int z = 0; z < g.order; ++z) {
    bool central = true;
    for (int x = 0; x < g.order && central; ++x) central = g.at(z, x) == g.at(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

inline bool is_subgroup(const FiniteGroupTable& g, const std::vector<int>& subset) {
  std::set<int> s(subset.begin(), subset.end());
  if (!s.count(g.id)) return false;
  for (int x : s) {
    if (!s.count(g.inv[static_cast<size_t>(x)])) return false;
    for (int y : s)
      if (!s.count(g.at(x, y))) return false;
  }
  return true;
}

// Subgroup generated by the given elements.
inline std::vector<int> span_closure(const FiniteGroupTable& g, const std::vector<int>& gens) {
  std::set<int> seen{g.id};
  std::vector<int> frontier{g.id};
  while (!frontier.empty()) {
    const int cur = frontier.back();
    frontier.pop_back();
    for (int x : gens) {
      const int next = g.at(cur, x);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// Greedy small generating sequence.
inline std::vector<int> generating_sequence(const FiniteGroupTable& g) {
  std::vector<int> gens;
  std::vector<int> span = span_closure(g, gens);
  for (int x = 0; x < g.order; ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = span_closure(g, gens);
    if (static_cast<int>(span.size()) == g.order) break;
  }
  return gens;
}

namespace detail {

// Partial-homomorphism extension used by both the automorphism and the
// isomorphism searches. phi maps a-ids to b-ids (-1 undefined), used marks
// b-ids already hit. Extends phi by g -> m, propagating forced products and
// failing on any conflict; on success `span` has grown to <span ∪ {g}> and
// phi is a verified injective partial homomorphism on it.
inline bool extend_partial(const FiniteGroupTable& a, const FiniteGroupTable& b,
                           std::vector<int>& span, std::vector<int>& phi, std::vector<bool>& used,
                           int g, int m) {
  if (phi[static_cast<size_t>(g)] >= 0) return phi[static_cast<size_t>(g)] == m;
  if (used[static_cast<size_t>(m)]) return false;
  phi[static_cast<size_t>(g)] = m;
  used[static_cast<size_t>(m)] = true;
  span.push_back(g);
  std::vector<int> queue{g};
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    // Iterate over a snapshot index range: span may grow while we loop.
    for (size_t i = 0; i < span.size(); ++i) {
      const int s = span[i];
      for (const auto& [p, q] : {std::pair{a.at(s, x), b.at(phi[static_cast<size_t>(s)],
                                                            phi[static_cast<size_t>(x)])},
                                 std::pair{a.at(x, s), b.at(phi[static_cast<size_t>(x)],
                                                            phi[static_cast<size_t>(s)])}}) {
        const int cur = phi[static_cast<size_t>(p)];
        if (cur >= 0) {
          if (cur != q) return false;
        } else {
          if (used[static_cast<size_t>(q)]) return false;
          phi[static_cast<size_t>(p)] = q;
          used[static_cast<size_t>(q)] = true;
          span.push_back(p);
          queue.push_back(p);
        }
      }
    }
  }
  return true;
}

template <typename OnFound>
inline void map_search(const FiniteGroupTable& a, const FiniteGroupTable& b, OnFound&& on_found) {
  const std::vector<int> gens = generating_sequence(a);
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> c;
    const int og = element_order(a, g);
    for (int m = 0; m < b.order; ++m)
      if (element_order(b, m) == og) c.push_back(m);
    candidates.push_back(std::move(c));
  }

  std::vector<int> phi(static_cast<size_t>(a.order), -1);
  std::vector<bool> used(static_cast<size_t>(b.order), false);
  std::vector<int> span;
  phi[static_cast<size_t>(a.id)] = b.id;
  used[static_cast<size_t>(b.id)] = true;
  span.push_back(a.id);

  bool stop = false;
  auto rec = [&](auto&& self, size_t depth, const std::vector<int>& cur_span,
                 const std::vector<int>& cur_phi, const std::vector<bool>& cur_used) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      if (static_cast<int>(cur_span.size()) == a.order)
        stop = on_found(cur_phi);
      return;
    }
    for (int m : candidates[depth]) {
      std::vector<int> s = cur_span;
      std::vector<int> p = cur_phi;
      std::vector<bool> u = cur_used;
      if (extend_partial(a, b, s, p, u, gens[depth], m)) self(self, depth + 1, s, p, u);
      if (stop) return;
    }
  };
  rec(rec, 0, span, phi, used);
}

}  // namespace detail

// All automorphisms, as permutations of element ids, found by backtracking on
// generator images. Sorted for deterministic output.
inline std::vector<Perm> automorphisms(const FiniteGroupTable& g, const Caps& caps = {}) {
  if (g.order > caps.aut_cap)
    throw cap_error("automorphism search cap " + std::to_string(caps.aut_cap) +
                    " exceeded (order " + std::to_string(g.order) + ")");
  std::vector<Perm> out;
  detail::map_search(g, g, [&](const std::vector<int>& phi) {
    out.emplace_back(phi);
    return false;  // keep searching
  });
  std::sort(out.begin(), out.end());
  return out;
}

// True iff a bijective homomorphism a -> b exists. Fast-rejects on order and
// element-order profile before backtracking.
inline bool isomorphic(const FiniteGroupTable& a, const FiniteGroupTable& b,
                       const Caps& caps = {}) {
  if (a.order > caps.iso_cap || b.order > caps.iso_cap)
    throw cap_error("isomorphism test cap " + std::to_string(caps.iso_cap) + " exceeded");
  if (a.order != b.order) return false;
  if (order_profile(a) != order_profile(b)) return false;
  bool found = false;
  detail::map_search(a, b, [&](const std::vector<int>&) {
    found = true;
    return true;  // stop at the first isomorphism
  });
  return found;
}

}  // namespace rloop
