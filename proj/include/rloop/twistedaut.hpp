#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/grouptable.hpp"
#include "rloop/innermaps.hpp"
#include "rloop/perm.hpp"
#include "rloop/permgroup.hpp"
#include "rloop/report.hpp"
#include "rloop/rightloop.hpp"

namespace rloop {

namespace detail {

// Twisted-automorphism identity h(x∘y) = (h(x'))' ∘ h(y) for all x and y ≠ e.
// Assumes unique inverses were already checked.
inline bool satisfies_twisted_identity(const RightLoopTable& t, const Perm& h) {
  const auto& inv = *t.two_sided_inverse;
  for (int x = 0; x < t.order; ++x) {
    const int lhs_arg = inv[static_cast<size_t>(h.apply(inv[static_cast<size_t>(x)]))];
    for (int y = 1; y < t.order; ++y)
      if (h.apply(t.at(x, y)) != t.at(lhs_arg, h.apply(y))) return false;
  }
  return true;
}

// Plain automorphism identity h(x∘y) = h(x)∘h(y) for all x, y.
inline bool satisfies_automorphism_identity(const RightLoopTable& t, const Perm& h) {
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y)
      if (h.apply(t.at(x, y)) != t.at(h.apply(x), h.apply(y))) return false;
  return true;
}

template <typename Pred>
inline std::vector<Perm> filter_all_perms(const RightLoopTable& t, Pred&& keep) {
  std::vector<int> img(static_cast<size_t>(t.order));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    Perm h(img);
    if (keep(h)) out.push_back(std::move(h));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline void check_taut_cap(const RightLoopTable& t, const Caps& caps, const char* what) {
  long fact = 1;
  for (int i = 2; i < t.order; ++i) fact *= i;
  if (fact > caps.taut_perm_cap)
    throw cap_error(std::string(what) + ": brute-force cap " +
                    std::to_string(caps.taut_perm_cap) +
                    " exceeded ((n-1)! too large); taut_group_lower_bound gives a "
                    "generated-closure lower bound");
}

}  // namespace detail

// Whether h is a twisted automorphism of t. h may be any bijection of S; the
// filter does not presuppose h(e) = e.
inline bool is_twisted_automorphism(const RightLoopTable& t, const Perm& h) {
  if (!t.has_unique_inverses())
    throw input_error("twisted automorphisms need unique inverses");
  if (h.degree() != t.order) throw input_error("is_twisted_automorphism: degree mismatch");
  return detail::satisfies_twisted_identity(t, h);
}

// All twisted automorphisms, by brute force over every permutation of S.
// Every survivor must fix e; that is asserted, not assumed.
inline PermGroupData taut_group(const RightLoopTable& t, const Caps& caps = {}) {
  if (!t.has_unique_inverses())
    throw input_error("twisted automorphisms need unique inverses");
  detail::check_taut_cap(t, caps, "taut_group");
  auto elems = detail::filter_all_perms(
      t, [&](const Perm& h) { return detail::satisfies_twisted_identity(t, h); });
  for (const auto& h : elems)
    if (!h.fixes(0)) throw internal_error("a twisted automorphism moves the identity");
  return group_from_closed_set(t.order, std::move(elems), "taut_group");
}

// All automorphisms of the right loop, by the same brute-force filter.
inline PermGroupData aut_group(const RightLoopTable& t, const Caps& caps = {}) {
  detail::check_taut_cap(t, caps, "aut_group");
  auto elems = detail::filter_all_perms(
      t, [&](const Perm& h) { return detail::satisfies_automorphism_identity(t, h); });
  for (const auto& h : elems)
    if (!h.fixes(0)) throw internal_error("a right-loop automorphism moves the identity");
  return group_from_closed_set(t.order, std::move(elems), "aut_group");
}

// Exact automorphism search by point-image backtracking; no factorial sweep,
// so it stays usable past the brute-force cap.
inline std::vector<Perm> loop_automorphisms_backtrack(const RightLoopTable& t) {
  const int n = t.order;
  std::vector<int> img(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  img[0] = 0;
  used[0] = true;
  std::vector<Perm> out;
  auto consistent = [&](int just_set) {
    for (int x = 0; x < n; ++x) {
      if (img[static_cast<size_t>(x)] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (img[static_cast<size_t>(y)] < 0) continue;
        if (x != just_set && y != just_set && t.at(x, y) != just_set) continue;
        const int xy = t.at(x, y);
        if (img[static_cast<size_t>(xy)] < 0) continue;
        if (img[static_cast<size_t>(xy)] !=
            t.at(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]))
          return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.emplace_back(img);
      return;
    }
    for (int c = 1; c < n; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      img[static_cast<size_t>(v)] = c;
      used[static_cast<size_t>(c)] = true;
      if (consistent(v)) self(self, v + 1);
      img[static_cast<size_t>(v)] = -1;
      used[static_cast<size_t>(c)] = false;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// η(h): x ↦ (h(x'))' on Sym(S∖{e}). An involution whenever inverses are unique.
inline Perm eta_apply(const RightLoopTable& t, const Perm& h) {
  if (!t.has_unique_inverses()) throw input_error("eta needs unique inverses");
  if (h.degree() != t.order || !h.fixes(0))
    throw input_error("eta: h must fix the identity");
  const auto& inv = *t.two_sided_inverse;
  std::vector<int> img(static_cast<size_t>(t.order));
  for (int x = 0; x < t.order; ++x)
    img[static_cast<size_t>(x)] =
        inv[static_cast<size_t>(h.apply(inv[static_cast<size_t>(x)]))];
  return Perm(img);
}

// Outcome of the twisted-right-gyrogroup test:
//   (i)  f(y',y) = I for every y,
//   (ii) every f(y,z) is a twisted automorphism.
// When both hold, eta_on_gs is the induced involutory automorphism of G_S and
// the exchange identity (x∘y)θh = xθη(h) ∘ yθh has been verified for all
// h ∈ G_S.
struct TwistedGyroAnalysis {
  RightLoopTable loop;
  InnerMapIndex idx;
  bool is_trg = false;
  std::vector<std::string> failure_reasons;
  std::vector<int> eta_on_gs;  // G_S element index -> element index

  const Perm& eta_of(int gs_index) const {
    return idx.gs.elements[static_cast<size_t>(eta_on_gs[static_cast<size_t>(gs_index)])];
  }
};

inline TwistedGyroAnalysis is_twisted_right_gyrogroup(const RightLoopTable& t,
                                                      const Caps& caps = {}) {
  TwistedGyroAnalysis a;
  a.loop = t;
  a.idx = inner_group(t, caps);
  a.is_trg = true;

  for (int y = 0; y < t.order; ++y)
    if (!a.idx.f_at(t.left_inverse[static_cast<size_t>(y)], y).is_identity()) {
      a.is_trg = false;
      a.failure_reasons.push_back("f(y',y) != I at y=" + t.label(y));
    }
  if (a.is_trg && !t.has_unique_inverses())
    throw internal_error("f(y',y) = I must force unique inverses");
  if (a.is_trg) {
    for (int y = 0; y < t.order && a.is_trg; ++y)
      for (int z = 0; z < t.order; ++z)
        if (!detail::satisfies_twisted_identity(t, a.idx.f_at(y, z))) {
          a.is_trg = false;
          a.failure_reasons.push_back("f(" + t.label(y) + "," + t.label(z) +
                                      ") is not a twisted automorphism");
          break;
        }
  }
  if (!a.is_trg) return a;

  const auto& els = a.idx.gs.elements;
  const int m = static_cast<int>(els.size());
  a.eta_on_gs.assign(static_cast<size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const int j = a.idx.gs.index_of(eta_apply(t, els[static_cast<size_t>(i)]));
    if (j < 0) throw internal_error("eta does not preserve G_S");
    a.eta_on_gs[static_cast<size_t>(i)] = j;
  }
  for (int i = 0; i < m; ++i)
    if (a.eta_on_gs[static_cast<size_t>(a.eta_on_gs[static_cast<size_t>(i)])] != i)
      throw internal_error("eta is not an involution on G_S");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ij = a.idx.gs.index_of(compose(els[static_cast<size_t>(i)], els[static_cast<size_t>(j)]));
      const int ei = a.eta_on_gs[static_cast<size_t>(i)];
      const int ej = a.eta_on_gs[static_cast<size_t>(j)];
      if (a.idx.gs.index_of(compose(els[static_cast<size_t>(ei)], els[static_cast<size_t>(ej)])) !=
          a.eta_on_gs[static_cast<size_t>(ij)])
        throw internal_error("eta is not an automorphism of G_S");
    }
  // Exchange identity (x∘y)θh = xθη(h) ∘ yθh for all h ∈ G_S and y ≠ e.
  // At y = e it would read h = η(h), which only an η-fixed h satisfies.
  for (int i = 0; i < m; ++i) {
    const Perm& h = els[static_cast<size_t>(i)];
    const Perm& eh = a.eta_of(i);
    for (int x = 0; x < t.order; ++x)
      for (int y = 1; y < t.order; ++y)
        if (h.apply(t.at(x, y)) != t.at(eh.apply(x), h.apply(y)))
          throw internal_error("exchange identity (x∘y)θh = xθη(h)∘yθh fails");
  }
  return a;
}

// η displayed as the transposed pairs of G_S elements, e.g. ((2 3 4),(2 4 3)).
// Pairs are ordered by their smaller member in the canonical element order.
inline std::vector<std::pair<Perm, Perm>> eta_pairs(const TwistedGyroAnalysis& a) {
  if (!a.is_trg) throw input_error("eta_pairs: not a twisted right gyrogroup");
  std::vector<std::pair<Perm, Perm>> out;
  const auto& els = a.idx.gs.elements;
  for (int i = 0; i < static_cast<int>(els.size()); ++i) {
    const int j = a.eta_on_gs[static_cast<size_t>(i)];
    if (j > i) out.emplace_back(els[static_cast<size_t>(i)], els[static_cast<size_t>(j)]);
  }
  return out;
}

inline std::string format_eta(const TwistedGyroAnalysis& a) {
  std::string out;
  for (const auto& [h, k] : eta_pairs(a)) {
    if (!out.empty()) out += " ";
    out += "(" + format_cycles(h, a.loop.labels) + "," + format_cycles(k, a.loop.labels) + ")";
  }
  if (out.empty()) out = "I";
  return out;
}

// TAut = Aut holds for every group; computes both sides and compares.
inline bool check_group_taut_collapse(const FiniteGroupTable& g, const Caps& caps = {}) {
  const RightLoopTable t = from_group(g);
  return taut_group(t, caps) == aut_group(t, caps);
}

// TAut = Aut under the automorphic inverse property plus the left
// alternative law.
inline bool check_aip_la_collapse(const RightLoopTable& t, const Caps& caps = {}) {
  if (!t.has_unique_inverses() || !has_aip(t) || !has_left_alternative(t))
    throw input_error("check_aip_la_collapse: table lacks AIP or left alternative");
  return taut_group(t, caps) == aut_group(t, caps);
}

// When G_S ∩ Aut(S,∘) = {I}, G_S must be abelian of odd order and
// (x∘y)θh = xθh⁻¹ ∘ yθh for every h ∈ G_S.
inline CheckReport check_odd_abelian(const TwistedGyroAnalysis& a, const Caps& caps = {}) {
  if (!a.is_trg) throw input_error("check_odd_abelian: not a twisted right gyrogroup");
  CheckReport rep;
  rep.name = "odd abelian G_S under trivial G_S ∩ Aut";
  const PermGroupData aut = aut_group(a.loop, caps);
  std::vector<Perm> both;
  for (const auto& h : a.idx.gs.elements)
    if (aut.contains(h)) both.push_back(h);
  if (both.size() > 1) {
    rep.note("hypothesis not met: G_S ∩ Aut has order " + std::to_string(both.size()));
    return rep;
  }
  rep.note("hypothesis met: G_S ∩ Aut = {I}");
  if (a.idx.gs.order() % 2 == 0) rep.fail("G_S has even order " + std::to_string(a.idx.gs.order()));
  [&] {
    for (const auto& h : a.idx.gs.elements)
      for (const auto& k : a.idx.gs.elements)
        if (compose(h, k) != compose(k, h)) {
          rep.fail("G_S not abelian at h=" + format_cycles(h, a.loop.labels) + ", k=" +
                   format_cycles(k, a.loop.labels));
          return;
        }
  }();
  for (const auto& h : a.idx.gs.elements) {
    const Perm hinv = h.inverse();
    for (int x = 0; x < a.loop.order; ++x)
      for (int y = 1; y < a.loop.order; ++y)
        if (h.apply(a.loop.at(x, y)) != a.loop.at(hinv.apply(x), h.apply(y))) {
          rep.fail("(x∘y)θh = xθh⁻¹∘yθh fails at x=" + a.loop.label(x) + ", y=" +
                   a.loop.label(y) + ", h=" + format_cycles(h, a.loop.labels));
          return rep;
        }
  }
  return rep;
}

// Generated-closure lower bound for TAut: the closure of Aut(S,∘) together
// with every member of G_S that individually passes the twisted identity.
// Exact TAut needs the brute-force filter; this stays available above its cap.
struct TautBound {
  PermGroupData group;
  bool complete = false;
};

inline TautBound taut_group_lower_bound(const RightLoopTable& t, const Caps& caps = {}) {
  if (!t.has_unique_inverses())
    throw input_error("twisted automorphisms need unique inverses");
  std::vector<Perm> gens = loop_automorphisms_backtrack(t);
  for (const auto& h : gens)
    if (!is_twisted_automorphism(t, h))
      throw internal_error("an automorphism fails the twisted identity");
  const InnerMapIndex idx = inner_group(t, caps);
  for (const auto& h : idx.gs.elements)
    if (detail::satisfies_twisted_identity(t, h)) gens.push_back(h);
  return TautBound{close_generators(t.order, std::move(gens), caps), false};
}

}  // namespace rloop
