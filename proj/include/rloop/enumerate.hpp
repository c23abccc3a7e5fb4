#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/innermaps.hpp"
#include "rloop/rightloop.hpp"
#include "rloop/twistedaut.hpp"
#include "rloop/twistedsub.hpp"

namespace rloop {

// Predicate bits used by the enumeration filter and the census.
namespace pred {
enum : unsigned {
  unique_inverses = 1,    // x∘x' = e for every x
  left_inv_identity = 2,  // f(x',x) = I for every x
  trg = 4,                // twisted right gyrogroup
  ar = 8,                 // every inner mapping is an automorphism
  twisted_gyro = 16,      // trg + right loop property
  aip = 32,               // unique inverses + automorphic inverse property
  left_alternative = 64,
  all = 127,
};
}  // namespace pred

inline const std::vector<std::pair<unsigned, std::string>>& predicate_names() {
  static const std::vector<std::pair<unsigned, std::string>> names{
      {pred::unique_inverses, "unique-inverses"}, {pred::left_inv_identity, "f-inv"},
      {pred::trg, "trg"},                         {pred::ar, "ar"},
      {pred::twisted_gyro, "tgg"},                {pred::aip, "aip"},
      {pred::left_alternative, "la"},
  };
  return names;
}

inline unsigned evaluate_predicates(const RightLoopTable& t, const Caps& caps = {}) {
  unsigned mask = 0;
  if (t.has_unique_inverses()) mask |= pred::unique_inverses;

  bool fi = true;
  for (int y = 0; y < t.order && fi; ++y) {
    const int yp = t.left_inverse[static_cast<size_t>(y)];
    for (int x = 0; x < t.order && fi; ++x) fi = t.at(t.at(x, yp), y) == x;
  }
  if (fi) mask |= pred::left_inv_identity;

  std::vector<std::vector<Perm>> f(static_cast<size_t>(t.order));
  for (int y = 0; y < t.order; ++y)
    for (int z = 0; z < t.order; ++z) f[static_cast<size_t>(y)].push_back(inner_map(t, y, z));

  bool ar = true;
  for (int y = 0; y < t.order && ar; ++y)
    for (int z = 0; z < t.order && ar; ++z)
      ar = detail::satisfies_automorphism_identity(t, f[static_cast<size_t>(y)][static_cast<size_t>(z)]);
  if (ar) mask |= pred::ar;

  if (fi) {
    // f(x',x) = I forces unique inverses.
    if (!t.has_unique_inverses()) throw internal_error("f(x',x) = I without unique inverses");
    bool trg = true;
    for (int y = 0; y < t.order && trg; ++y)
      for (int z = 0; z < t.order && trg; ++z)
        trg = detail::satisfies_twisted_identity(t, f[static_cast<size_t>(y)][static_cast<size_t>(z)]);
    if (trg) {
      mask |= pred::trg;
      bool tgg = true;
      for (int x = 0; x < t.order && tgg; ++x)
        for (int y = 0; y < t.order && tgg; ++y)
          tgg = f[static_cast<size_t>(x)][static_cast<size_t>(y)] ==
                f[static_cast<size_t>(x)][static_cast<size_t>(t.at(x, y))];
      if (tgg) mask |= pred::twisted_gyro;
    }
  }

  if (t.has_unique_inverses() && has_aip(t)) mask |= pred::aip;
  if (has_left_alternative(t)) mask |= pred::left_alternative;
  (void)caps;
  return mask;
}

// Yields every right loop on {0,...,n-1} with identity 0 that satisfies all
// requested predicates. Columns are chosen in lexicographic order, column by
// column, so emission order is deterministic (lexicographic on the
// column-flattened table). When the filter demands f(x',x) = I, inverse
// column pairing prunes the search tree; other predicates are post-filters.
inline void enumerate_right_loops(int n, unsigned filter,
                                  const std::function<void(const RightLoopTable&)>& yield,
                                  const Caps& caps = {}) {
  if (n < 1) throw input_error("enumerate: order must be positive");
  if (n > caps.enumerate_cap)
    throw cap_error("enumeration cap " + std::to_string(caps.enumerate_cap) +
                    " exceeded (order " + std::to_string(n) + ")");

  // All candidate columns for position y: permutations c with c(0) = y.
  std::vector<std::vector<std::vector<int>>> candidates(static_cast<size_t>(n));
  for (int y = 1; y < n; ++y) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != y) rest.push_back(v);
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> col(static_cast<size_t>(n));
      col[0] = y;
      for (int x = 1; x < n; ++x) col[static_cast<size_t>(x)] = rest[static_cast<size_t>(x - 1)];
      candidates[static_cast<size_t>(y)].push_back(std::move(col));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  const bool prune_fi = (filter & (pred::left_inv_identity | pred::trg | pred::twisted_gyro)) != 0;
  std::vector<std::vector<int>> cols(static_cast<size_t>(n));
  cols[0].resize(static_cast<size_t>(n));
  std::iota(cols[0].begin(), cols[0].end(), 0);
  std::vector<std::vector<int>> forced(static_cast<size_t>(n));

  auto col_inverse = [n](const std::vector<int>& c) {
    std::vector<int> inv(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) inv[static_cast<size_t>(c[static_cast<size_t>(x)])] = x;
    return inv;
  };

  auto emit = [&] {
    std::vector<std::vector<int>> raw(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        raw[static_cast<size_t>(x)][static_cast<size_t>(y)] = cols[static_cast<size_t>(y)][static_cast<size_t>(x)];
    RightLoopTable t = validate_table(raw, 0);
    if ((evaluate_predicates(t, caps) & filter) == filter) yield(t);
  };

  auto rec = [&](auto&& self, int y) -> void {
    if (y == n) {
      emit();
      return;
    }
    const bool is_forced = prune_fi && !forced[static_cast<size_t>(y)].empty();
    std::vector<std::vector<int>> forced_pool;
    if (is_forced) forced_pool.push_back(forced[static_cast<size_t>(y)]);
    const auto& pool = is_forced ? forced_pool : candidates[static_cast<size_t>(y)];
    for (const auto& col : pool) {
      if (prune_fi) {
        const std::vector<int> inv = col_inverse(col);
        const int partner = inv[0];  // y' = c_y^{-1}(0), never 0 since c_y(0) = y
        if (partner == y) {
          if (inv != col) continue;  // self-paired column must be an involution
        } else if (partner < y) {
          if (cols[static_cast<size_t>(partner)] != inv) continue;
        } else {
          // Two columns cannot share a partner: that would force equal columns.
          if (!forced[static_cast<size_t>(partner)].empty()) continue;
          forced[static_cast<size_t>(partner)] = inv;
          cols[static_cast<size_t>(y)] = col;
          self(self, y + 1);
          forced[static_cast<size_t>(partner)].clear();
          continue;
        }
      }
      cols[static_cast<size_t>(y)] = col;
      self(self, y + 1);
    }
  };
  rec(rec, 1);
}

// Counts per predicate combination, with one witness per nonempty class.
struct CensusClass {
  unsigned mask = 0;
  long count = 0;
  std::optional<RightLoopTable> witness;
};

struct CensusReport {
  int n = 0;
  long total = 0;
  std::vector<CensusClass> classes;  // ordered by mask
};

inline CensusReport census(int n, const Caps& caps = {}) {
  CensusReport rep;
  rep.n = n;
  std::map<unsigned, CensusClass> classes;
  enumerate_right_loops(
      n, 0,
      [&](const RightLoopTable& t) {
        ++rep.total;
        const unsigned mask = evaluate_predicates(t, caps);
        auto& cls = classes[mask];
        cls.mask = mask;
        ++cls.count;
        if (!cls.witness) cls.witness = t;
      },
      caps);
  for (auto& [mask, cls] : classes) rep.classes.push_back(std::move(cls));
  return rep;
}

}  // namespace rloop
