#pragma once

#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/perm.hpp"
#include "rloop/permgroup.hpp"
#include "rloop/report.hpp"
#include "rloop/rightloop.hpp"

namespace rloop {

// The right inner mapping f(y,z): the unique permutation with
//   f(y,z)(x) ∘ (y∘z) = (x∘y)∘z  for every x.
// It fixes the identity.
inline Perm inner_map(const RightLoopTable& t, int y, int z) {
  const int yz = t.at(y, z);
  std::vector<int> img(static_cast<size_t>(t.order));
  for (int x = 0; x < t.order; ++x)
    img[static_cast<size_t>(x)] = right_divide(t, t.at(t.at(x, y), z), yz);
  return Perm(img);
}

// The full f table plus the closed inner mapping group G_S.
struct InnerMapIndex {
  RightLoopTable loop;
  std::vector<std::vector<Perm>> f;  // f[y][z]
  PermGroupData gs;

  const Perm& f_at(int y, int z) const { return f[static_cast<size_t>(y)][static_cast<size_t>(z)]; }
};

inline InnerMapIndex inner_group(const RightLoopTable& t, const Caps& caps = {}) {
  InnerMapIndex idx;
  idx.loop = t;
  idx.f.assign(static_cast<size_t>(t.order), {});
  std::set<Perm> distinct;
  for (int y = 0; y < t.order; ++y) {
    auto& row = idx.f[static_cast<size_t>(y)];
    row.reserve(static_cast<size_t>(t.order));
    for (int z = 0; z < t.order; ++z) {
      Perm p = inner_map(t, y, z);
      if (!p.fixes(0)) throw internal_error("inner mapping moves the identity");
      if ((y == 0 || z == 0) && !p.is_identity())
        throw internal_error("f(x,e) or f(e,x) is not the identity");
      if (!p.is_identity()) distinct.insert(p);
      row.push_back(std::move(p));
    }
  }
  idx.gs = close_generators(t.order, {distinct.begin(), distinct.end()}, caps);
  return idx;
}

// σ_y(h): the unique permutation with h(x∘y) = σ_y(h)(x) ∘ h(y) for all x.
// Defined for any h ∈ Sym(S∖{e}).
inline Perm sigma(const RightLoopTable& t, int y, const Perm& h) {
  if (h.degree() != t.order) throw input_error("sigma: degree mismatch");
  if (!h.fixes(0)) throw input_error("sigma: h moves the identity");
  const int hy = h.apply(y);
  std::vector<int> img(static_cast<size_t>(t.order));
  for (int x = 0; x < t.order; ++x)
    img[static_cast<size_t>(x)] = right_divide(t, h.apply(t.at(x, y)), hy);
  return Perm(img);
}

namespace detail {

// G_S multiplication table by element index, plus σ_y over all of G_S.
struct SigmaTables {
  std::vector<std::vector<int>> gs_mul;       // [i][j] -> index of el_i * el_j
  std::vector<std::vector<Perm>> sig;         // [y][i] -> σ_y(el_i)
};

inline SigmaTables sigma_tables(const InnerMapIndex& idx) {
  SigmaTables st;
  const auto& els = idx.gs.elements;
  const int m = static_cast<int>(els.size());
  st.gs_mul.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int k = idx.gs.index_of(compose(els[static_cast<size_t>(i)], els[static_cast<size_t>(j)]));
      if (k < 0) throw internal_error("G_S element set not closed");
      st.gs_mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
    }
  st.sig.assign(static_cast<size_t>(idx.loop.order), {});
  for (int y = 0; y < idx.loop.order; ++y) {
    auto& row = st.sig[static_cast<size_t>(y)];
    row.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) row.push_back(sigma(idx.loop, y, els[static_cast<size_t>(i)]));
  }
  return st;
}

}  // namespace detail

// Exhaustive verification of the four basic right-loop identities:
//   (i)   f(x,e) = f(e,x) = I
//   (ii)  σ_e(h) = h
//   (iii) σ_y(hk) = σ_y(h) σ_{h(y)}(k)   for all y and h,k ∈ G_S
//   (iv)  f(x,y) f(x∘y,z) = σ_x(f(y,z)) f(f(y,z)(x), y∘z)
// These hold in every right loop; a violation means this library is wrong.
inline CheckReport check_prop2_identities(const InnerMapIndex& idx) {
  CheckReport rep;
  rep.name = "basic right-loop identities (i)-(iv)";
  const RightLoopTable& t = idx.loop;
  const int n = t.order;
  const auto st = detail::sigma_tables(idx);
  const auto& els = idx.gs.elements;
  const int m = static_cast<int>(els.size());

  for (int x = 0; x < n; ++x)
    if (!idx.f_at(x, 0).is_identity() || !idx.f_at(0, x).is_identity())
      rep.fail("(i) fails at x=" + t.label(x));

  for (int i = 0; i < m; ++i)
    if (st.sig[0][static_cast<size_t>(i)] != els[static_cast<size_t>(i)])
      rep.fail("(ii) fails at h=" + format_cycles(els[static_cast<size_t>(i)], t.labels));

  for (int y = 0; y < n; ++y) {
    for (int i = 0; i < m; ++i) {
      const int hy = els[static_cast<size_t>(i)].apply(y);
      for (int j = 0; j < m; ++j) {
        const int ij = st.gs_mul[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (st.sig[static_cast<size_t>(y)][static_cast<size_t>(ij)] !=
            compose(st.sig[static_cast<size_t>(y)][static_cast<size_t>(i)],
                    st.sig[static_cast<size_t>(hy)][static_cast<size_t>(j)])) {
          rep.fail("(iii) fails at y=" + t.label(y) + ", h=" +
                   format_cycles(els[static_cast<size_t>(i)], t.labels) + ", k=" +
                   format_cycles(els[static_cast<size_t>(j)], t.labels));
          j = i = m;  // first witness only
          y = n;
        }
      }
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Perm& fyz = idx.f_at(y, z);
        const int fyz_idx = idx.gs.index_of(fyz);
        if (fyz_idx < 0) throw internal_error("f value missing from G_S");
        const Perm lhs = compose(idx.f_at(x, y), idx.f_at(t.at(x, y), z));
        const Perm rhs = compose(st.sig[static_cast<size_t>(x)][static_cast<size_t>(fyz_idx)],
                                 idx.f_at(fyz.apply(x), t.at(y, z)));
        if (lhs != rhs) {
          rep.fail("(iv) fails at x=" + t.label(x) + ", y=" + t.label(y) + ", z=" + t.label(z));
          z = y = x = n;  // first witness only
        }
      }
  return rep;
}

// σ_y restricted to G_S: is it a homomorphism into G_S?
inline bool check_sigma_homomorphism(const InnerMapIndex& idx, int y) {
  const auto& els = idx.gs.elements;
  const int m = static_cast<int>(els.size());
  std::vector<Perm> sig;
  sig.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    Perm s = sigma(idx.loop, y, els[static_cast<size_t>(i)]);
    if (!idx.gs.contains(s)) return false;
    sig.push_back(std::move(s));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ij = idx.gs.index_of(
          compose(els[static_cast<size_t>(i)], els[static_cast<size_t>(j)]));
      if (sig[static_cast<size_t>(ij)] !=
          compose(sig[static_cast<size_t>(i)], sig[static_cast<size_t>(j)]))
        return false;
    }
  return true;
}

// Homomorphism plus bijectivity on G_S.
inline bool check_sigma_automorphism(const InnerMapIndex& idx, int y) {
  if (!check_sigma_homomorphism(idx, y)) return false;
  std::set<Perm> image;
  for (const auto& h : idx.gs.elements) image.insert(sigma(idx.loop, y, h));
  return static_cast<long>(image.size()) == idx.gs.order();
}

}  // namespace rloop
