#pragma once

#include <string>
#include <vector>

#include "rloop/grouptable.hpp"
#include "rloop/permgroup.hpp"

namespace rloop {

inline FiniteGroupTable cyclic_group(int n) {
  if (n < 1) throw input_error("cyclic_group: order must be positive");
  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return make_group_table(std::move(mul));
}

inline FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const int m = a.order * b.order;
  std::vector<std::vector<int>> mul(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::string> labels(static_cast<size_t>(m));
  auto pid = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1) {
      labels[static_cast<size_t>(pid(x1, y1))] = a.label(x1) + "," + b.label(y1);
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          mul[static_cast<size_t>(pid(x1, y1))][static_cast<size_t>(pid(x2, y2))] =
              pid(a.at(x1, x2), b.at(y1, y2));
    }
  return make_group_table(std::move(mul), std::move(labels));
}

inline FiniteGroupTable klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

inline FiniteGroupTable symmetric_group_table(int k) {
  if (k < 1 || k > 7) throw input_error("symmetric_group_table: supported for 1 <= k <= 7");
  std::vector<Perm> gens;
  if (k >= 2) {
    std::vector<int> t(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) t[static_cast<size_t>(i)] = i;
    std::swap(t[0], t[1]);
    gens.emplace_back(t);
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = (i + 1) % k;
    gens.emplace_back(c);
  }
  return to_group_table(close_generators(k, std::move(gens)));
}

inline FiniteGroupTable alternating_four_table() {
  const std::vector<Perm> gens{parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)};
  return to_group_table(close_generators(4, gens));
}

inline FiniteGroupTable dihedral_group_table(int n) {
  if (n < 3) throw input_error("dihedral_group_table: n >= 3");
  std::vector<int> rot(static_cast<size_t>(n)), refl(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<size_t>(i)] = (i + 1) % n;
    refl[static_cast<size_t>(i)] = (n - i) % n;
  }
  return to_group_table(close_generators(n, {Perm(rot), Perm(refl)}));
}

// Quaternions {1, -1, i, -i, j, -j, k, -k}.
inline FiniteGroupTable quaternion_group() {
  const std::vector<std::string> lab{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // sign * unit representation: 0:1, 1:i, 2:j, 3:k
  auto unit_mul = [](int a, int b, int& sign) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // i*j=k, j*k=i, k*i=j; reversed order flips the sign
    static const int table[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    const bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    if (!forward) sign = -sign;
    return table[a][b];
  };
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = (x % 2 == 1 ? -1 : 1) * (y % 2 == 1 ? -1 : 1);
      const int u = unit_mul(x / 2, y / 2, sign);
      mul[static_cast<size_t>(x)][static_cast<size_t>(y)] = 2 * u + (sign < 0 ? 1 : 0);
    }
  std::vector<std::string> labels = lab;
  return make_group_table(std::move(mul), std::move(labels));
}

// Best-effort name for a small group; "unidentified" when the catalog has no
// match of that order.
inline std::string iso_type_guess(const FiniteGroupTable& g, const Caps& caps = {}) {
  const int m = g.order;
  if (m > caps.iso_cap) return "order-" + std::to_string(m) + " group";
  std::vector<std::pair<std::string, FiniteGroupTable>> pool;
  pool.emplace_back("Z" + std::to_string(m), cyclic_group(m));
  for (int a = 2; a * a <= m; ++a)
    if (m % a == 0)
      pool.emplace_back("Z" + std::to_string(a) + "xZ" + std::to_string(m / a),
                        direct_product(cyclic_group(a), cyclic_group(m / a)));
  if (m == 6) pool.emplace_back("S3", symmetric_group_table(3));
  if (m == 8) {
    pool.emplace_back("D4", dihedral_group_table(4));
    pool.emplace_back("Q8", quaternion_group());
    pool.emplace_back("Z2xZ2xZ2", direct_product(klein_four(), cyclic_group(2)));
  }
  if (m == 12) {
    pool.emplace_back("A4", alternating_four_table());
    pool.emplace_back("D6", dihedral_group_table(6));
  }
  if (m == 24) pool.emplace_back("S4", symmetric_group_table(4));
  if (m >= 6 && m % 2 == 0 && m > 8 && m != 12 && m <= 24)
    pool.emplace_back("D" + std::to_string(m / 2), dihedral_group_table(m / 2));
  for (const auto& [name, table] : pool)
    if (isomorphic(g, table, caps)) return name;
  return "unidentified order-" + std::to_string(m) + " group";
}

}  // namespace rloop
