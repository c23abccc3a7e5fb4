#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/perm.hpp"

namespace rloop {

// A fully expanded permutation group: generators plus the complete element
// set, closed under composition and inverse. Elements are kept sorted by
// image array, so output is deterministic and membership is a binary search.
struct PermGroupData {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;

  long order() const { return static_cast<long>(elements.size()); }

  bool contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }

  // Index in the canonical element order, or -1.
  int index_of(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return -1;
    return static_cast<int>(it - elements.begin());
  }

  bool operator==(const PermGroupData& o) const {
    return degree == o.degree && elements == o.elements;
  }
};

// Breadth-first product closure of the generators.
inline PermGroupData close_generators(int degree, std::vector<Perm> gens, const Caps& caps = {}) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw input_error("close: generator degree mismatch");

  std::set<Perm> seen;
  std::deque<Perm> frontier;
  const Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Perm cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > caps.closure_cap)
          throw cap_error("closure cap " + std::to_string(caps.closure_cap) + " exceeded");
        frontier.push_back(std::move(next));
      }
    }
  }
  PermGroupData out;
  out.degree = degree;
  out.generators = std::move(gens);
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

// Makes a group out of an explicit, already-closed element set.
// Throws internal_error if the set is not closed: callers use this to turn
// brute-force filtered sets into groups while asserting the group axioms.
inline PermGroupData group_from_closed_set(int degree, std::vector<Perm> elems,
                                           const std::string& what) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  PermGroupData g;
  g.degree = degree;
  g.elements = std::move(elems);
  if (!g.contains(Perm::identity(degree)))
    throw internal_error(what + ": filtered set lacks the identity");
  for (const auto& p : g.elements) {
    if (!g.contains(p.inverse())) throw internal_error(what + ": filtered set not inverse-closed");
    for (const auto& q : g.elements)
      if (!g.contains(compose(p, q)))
        throw internal_error(what + ": filtered set not closed under composition");
  }
  // Small generating set, greedy: nicer to print than the full element list.
  std::vector<Perm> gens;
  PermGroupData span = close_generators(degree, {});
  for (const auto& p : g.elements) {
    if (span.contains(p)) continue;
    gens.push_back(p);
    span = close_generators(degree, gens);
  }
  g.generators = std::move(gens);
  return g;
}

// True iff the orbit of any member of `points` under g covers all of `points`.
inline bool is_transitive_on(const PermGroupData& g, const std::vector<int>& points) {
  if (points.empty()) throw input_error("is_transitive_on: empty point set");
  std::set<int> orbit;
  for (const auto& p : g.elements) orbit.insert(p.apply(points.front()));
  for (int x : points)
    if (!orbit.count(x)) return false;
  return true;
}

inline std::vector<Perm> involutions(const PermGroupData& g) {
  std::vector<Perm> out;
  for (const auto& p : g.elements)
    if (p.is_involution()) out.push_back(p);
  return out;
}

inline PermGroupData centralizer(const PermGroupData& g, const Perm& p) {
  if (!g.contains(p)) throw input_error("centralizer: element not in group");
  std::vector<Perm> out;
  for (const auto& q : g.elements)
    if (compose(q, p) == compose(p, q)) out.push_back(q);
  return group_from_closed_set(g.degree, std::move(out), "centralizer");
}

// Element order -> count. An isomorphism invariant.
inline std::map<int, long> order_profile(const PermGroupData& g) {
  std::map<int, long> prof;
  for (const auto& p : g.elements) ++prof[p.order()];
  return prof;
}

}  // namespace rloop
