#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rloop/error.hpp"
#include "rloop/grouptable.hpp"
#include "rloop/perm.hpp"

namespace rloop {

// A validated right-loop Cayley table. The identity is always element 0;
// op[x][y] is x∘y with the row holding the left operand. Validation populates
// left_inverse (the unique s with s∘x = e) and, when x∘x' = e holds for every
// x, the shared two_sided_inverse array. rdiv caches right division:
// rdiv[b][a] is the unique s with s∘a = b.
struct RightLoopTable {
  int order = 0;
  std::vector<std::vector<int>> op;
  std::vector<std::string> labels;
  std::vector<int> left_inverse;
  std::optional<std::vector<int>> two_sided_inverse;
  std::vector<std::vector<int>> rdiv;

  int at(int x, int y) const { return op[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  const std::string& label(int x) const { return labels[static_cast<size_t>(x)]; }
  bool has_unique_inverses() const { return two_sided_inverse.has_value(); }
  int inverse_of(int x) const {
    if (!two_sided_inverse) throw input_error("table has no unique inverses");
    return (*two_sided_inverse)[static_cast<size_t>(x)];
  }

  bool operator==(const RightLoopTable& o) const { return op == o.op; }
};

// Validates a raw table: two-sided identity, every column a permutation.
// The identity may be any id in the raw table; the result is relabeled so
// that it becomes element 0 (other elements keep their relative order).
inline RightLoopTable validate_table(const std::vector<std::vector<int>>& raw, int identity,
                                     std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw input_error("table: empty");
  if (identity < 0 || identity >= n) throw input_error("table: identity id out of range");
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != n) throw input_error("table: not square");
    for (int v : row)
      if (v < 0 || v >= n) throw input_error("table: entry out of range");
  }
  if (labels.empty()) {
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) throw input_error("table: label count mismatch");

  auto lab = [&](int x) { return labels[static_cast<size_t>(x)]; };
  for (int y = 0; y < n; ++y)
    if (raw[static_cast<size_t>(identity)][static_cast<size_t>(y)] != y)
      throw input_error("identity axiom fails at cell (" + lab(identity) + ", " + lab(y) +
                        "): expected " + lab(y) + ", got " +
                        lab(raw[static_cast<size_t>(identity)][static_cast<size_t>(y)]));
  for (int x = 0; x < n; ++x)
    if (raw[static_cast<size_t>(x)][static_cast<size_t>(identity)] != x)
      throw input_error("identity axiom fails at cell (" + lab(x) + ", " + lab(identity) +
                        "): expected " + lab(x) + ", got " +
                        lab(raw[static_cast<size_t>(x)][static_cast<size_t>(identity)]));
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      const int v = raw[static_cast<size_t>(x)][static_cast<size_t>(y)];
      if (seen[static_cast<size_t>(v)])
        throw input_error("column " + lab(y) + " not bijective (value " + lab(v) + " repeats)");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  // Relabel so the identity is element 0.
  std::vector<int> to_new(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) to_new[static_cast<size_t>(i)] = i < identity ? i + 1 : i;
  to_new[static_cast<size_t>(identity)] = 0;

  RightLoopTable t;
  t.order = n;
  t.op.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  t.labels.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) t.labels[static_cast<size_t>(to_new[static_cast<size_t>(i)])] = labels[static_cast<size_t>(i)];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t.op[static_cast<size_t>(to_new[static_cast<size_t>(x)])]
          [static_cast<size_t>(to_new[static_cast<size_t>(y)])] =
          to_new[static_cast<size_t>(raw[static_cast<size_t>(x)][static_cast<size_t>(y)])];

  t.rdiv.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) t.rdiv[static_cast<size_t>(t.at(x, a))][static_cast<size_t>(a)] = x;

  t.left_inverse.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) t.left_inverse[static_cast<size_t>(x)] = t.rdiv[0][static_cast<size_t>(x)];

  bool two_sided = true;
  for (int x = 0; x < n && two_sided; ++x)
    two_sided = t.at(x, t.left_inverse[static_cast<size_t>(x)]) == 0;
  if (two_sided) t.two_sided_inverse = t.left_inverse;
  return t;
}

// The unique s with s∘a = b.
inline int right_divide(const RightLoopTable& t, int b, int a) {
  return t.rdiv[static_cast<size_t>(b)][static_cast<size_t>(a)];
}

// True iff rows are bijective too (left translations are permutations).
inline bool is_loop(const RightLoopTable& t) {
  for (int x = 0; x < t.order; ++x) {
    std::vector<bool> seen(static_cast<size_t>(t.order), false);
    for (int y = 0; y < t.order; ++y) {
      const int v = t.at(x, y);
      if (seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = true;
    }
  }
  return true;
}

// Automorphic inverse property: (a∘b)' = a'∘b' for all a, b.
inline bool has_aip(const RightLoopTable& t) {
  if (!t.has_unique_inverses()) throw input_error("AIP requires unique inverses");
  const auto& inv = *t.two_sided_inverse;
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      if (inv[static_cast<size_t>(t.at(a, b))] !=
          t.at(inv[static_cast<size_t>(a)], inv[static_cast<size_t>(b)]))
        return false;
  return true;
}

// Left alternative law: (a∘a)∘b = a∘(a∘b) for all a, b.
inline bool has_left_alternative(const RightLoopTable& t) {
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b)
      if (t.at(t.at(a, a), b) != t.at(a, t.at(a, b))) return false;
  return true;
}

// Right translation x -> x∘y as a permutation of all of S.
inline Perm right_translation(const RightLoopTable& t, int y) {
  std::vector<int> img(static_cast<size_t>(t.order));
  for (int x = 0; x < t.order; ++x) img[static_cast<size_t>(x)] = t.at(x, y);
  return Perm(img);
}

// Every group table is a right loop table.
inline RightLoopTable from_group(const FiniteGroupTable& g) {
  return validate_table(g.mul, g.id, g.labels);
}

}  // namespace rloop
