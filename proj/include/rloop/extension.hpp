#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/grouptable.hpp"
#include "rloop/innermaps.hpp"
#include "rloop/perm.hpp"
#include "rloop/report.hpp"
#include "rloop/rightloop.hpp"
#include "rloop/twistedaut.hpp"

namespace rloop {

// The group G_S·S built over a twisted right gyrogroup: all pairs (a, x) with
// a ∈ G_S, x ∈ S, multiplied by
//     (a,x)·(b,y) = (a η(b) f(xθb, y), (xθb)∘y)   for x ≠ e
//     (a,e)·(b,y) = (ab, y).
// Pair ids are a-index major, x minor, so (I,e) is id 0 and the embedded copy
// of S occupies ids 0..n-1.
struct ExtensionGroup {
  TwistedGyroAnalysis base;
  FiniteGroupTable table;
  std::vector<int> embed_h;  // G_S element index -> pair id
  std::vector<int> embed_s;  // loop element -> pair id
};

inline ExtensionGroup build_extension(const TwistedGyroAnalysis& a, const Caps& caps = {}) {
  if (!a.is_trg) throw input_error("build_extension: not a twisted right gyrogroup");
  const RightLoopTable& t = a.loop;
  const int n = t.order;
  const auto& els = a.idx.gs.elements;
  const int gm = static_cast<int>(els.size());
  const long m = static_cast<long>(gm) * n;
  if (m > caps.extension_cap)
    throw cap_error("extension cap " + std::to_string(caps.extension_cap) + " exceeded (order " +
                    std::to_string(m) + ")");
  if (!els[0].is_identity()) throw internal_error("G_S canonical order must start with I");

  // G_S multiplication and f-value indices by element index.
  std::vector<std::vector<int>> gmul(static_cast<size_t>(gm), std::vector<int>(static_cast<size_t>(gm)));
  for (int i = 0; i < gm; ++i)
    for (int j = 0; j < gm; ++j)
      gmul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          a.idx.gs.index_of(compose(els[static_cast<size_t>(i)], els[static_cast<size_t>(j)]));
  std::vector<std::vector<int>> fidx(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      fidx[static_cast<size_t>(y)][static_cast<size_t>(z)] = a.idx.gs.index_of(a.idx.f_at(y, z));
      if (fidx[static_cast<size_t>(y)][static_cast<size_t>(z)] < 0)
        throw internal_error("f value missing from G_S");
    }

  auto pid = [&](int ai, int x) { return ai * n + x; };
  std::vector<std::vector<int>> mul(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int ai = 0; ai < gm; ++ai)
    for (int x = 0; x < n; ++x)
      for (int bi = 0; bi < gm; ++bi)
        for (int y = 0; y < n; ++y) {
          int out;
          if (x == 0) {
            out = pid(gmul[static_cast<size_t>(ai)][static_cast<size_t>(bi)], y);
          } else {
            const int xb = els[static_cast<size_t>(bi)].apply(x);
            const int gpart = gmul[static_cast<size_t>(gmul[static_cast<size_t>(ai)][static_cast<size_t>(
                a.eta_on_gs[static_cast<size_t>(bi)])])]
                                  [static_cast<size_t>(fidx[static_cast<size_t>(xb)][static_cast<size_t>(y)])];
            out = pid(gpart, t.at(xb, y));
          }
          mul[static_cast<size_t>(pid(ai, x))][static_cast<size_t>(pid(bi, y))] = out;
        }

  std::vector<std::string> labels(static_cast<size_t>(m));
  for (int ai = 0; ai < gm; ++ai)
    for (int x = 0; x < n; ++x)
      labels[static_cast<size_t>(pid(ai, x))] =
          format_cycles_bracket(els[static_cast<size_t>(ai)], t.labels) + "*" + t.label(x);

  ExtensionGroup ext;
  ext.base = a;
  Caps table_caps = caps;
  table_caps.table_cap = std::max(table_caps.table_cap, m);
  try {
    ext.table = make_group_table(std::move(mul), std::move(labels), table_caps);
  } catch (const input_error& e) {
    throw internal_error(std::string("extension is not a group: ") + e.what());
  }
  if (ext.table.id != 0) throw internal_error("extension identity is not (I, e)");

  ext.embed_h.resize(static_cast<size_t>(gm));
  for (int ai = 0; ai < gm; ++ai) ext.embed_h[static_cast<size_t>(ai)] = pid(ai, 0);
  ext.embed_s.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) ext.embed_s[static_cast<size_t>(x)] = pid(0, x);

  // x·h = η(h)·(xθh) for x ≠ e.
  for (int x = 1; x < n; ++x)
    for (int hi = 0; hi < gm; ++hi)
      if (ext.table.at(pid(0, x), pid(hi, 0)) !=
          pid(a.eta_on_gs[static_cast<size_t>(hi)], els[static_cast<size_t>(hi)].apply(x)))
        throw internal_error("x·h = η(h)(xθh) fails in the extension");
  // x^{-1} = x' inside the group.
  for (int x = 0; x < n; ++x)
    if (ext.table.inv[static_cast<size_t>(pid(0, x))] != pid(0, t.inverse_of(x)))
      throw internal_error("embedded inverse differs from the loop inverse");
  // x·y = f(x,y)·(x∘y): the induced operation reproduces the input table.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (ext.table.at(pid(0, x), pid(0, y)) !=
          pid(fidx[static_cast<size_t>(x)][static_cast<size_t>(y)], t.at(x, y)))
        throw internal_error("embedded product x·y != f(x,y)·(x∘y)");
  // Closed-form inverse (a,x)^{-1} = (f(x',x)^{-1} η(a^{-1}), x'θa^{-1}).
  for (int ai = 0; ai < gm; ++ai) {
    const int ainv = a.idx.gs.index_of(els[static_cast<size_t>(ai)].inverse());
    for (int x = 0; x < n; ++x) {
      int expect;
      if (x == 0) {
        expect = pid(ainv, 0);
      } else {
        const int xp = t.inverse_of(x);
        const int gpart = a.idx.gs.index_of(
            compose(a.idx.f_at(xp, x).inverse(), els[static_cast<size_t>(a.eta_on_gs[static_cast<size_t>(ainv)])]));
        expect = pid(gpart, els[static_cast<size_t>(ainv)].apply(xp));
      }
      if (ext.table.inv[static_cast<size_t>(pid(ai, x))] != expect)
        throw internal_error("closed-form inverse fails in the extension");
    }
  }
  // The two multiplication cases agree with the single σ-twisted form, where
  // the twist is η for x ≠ e and the identity map for x = e.
  for (int ai = 0; ai < gm; ++ai)
    for (int x = 0; x < n; ++x)
      for (int bi = 0; bi < gm; ++bi)
        for (int y = 0; y < n; ++y) {
          const int tb = x == 0 ? bi : a.eta_on_gs[static_cast<size_t>(bi)];
          const int xb = els[static_cast<size_t>(bi)].apply(x);
          const int gpart = gmul[static_cast<size_t>(gmul[static_cast<size_t>(ai)][static_cast<size_t>(tb)])]
                                [static_cast<size_t>(fidx[static_cast<size_t>(xb)][static_cast<size_t>(y)])];
          if (ext.table.at(pid(ai, x), pid(bi, y)) != pid(gpart, t.at(xb, y)))
            throw internal_error("σ-twisted multiplication form disagrees with the case split");
        }
  return ext;
}

// A subgroup H plus a right transversal S of a finite group, with the unique
// decomposition g = h·s, the induced right loop on S, the cocycle g(x,y), and
// the involutory automorphisms of H compatible with the transversal.
struct TransversalAnalysis {
  FiniteGroupTable group;
  std::vector<int> subgroup;     // sorted element ids
  std::vector<int> transversal;  // identity first, then ascending ids
  std::vector<int> h_part, s_part;  // by element id: g = h_part[g] · s_part[g]
  std::vector<int> s_index;         // element id -> index in transversal, or -1
  std::vector<int> h_index;         // element id -> index in subgroup, or -1
  RightLoopTable induced_op;
  std::vector<std::vector<int>> cocycle;  // [xi][yi] -> element id in H
  bool eta_candidates_computed = false;
  std::vector<std::vector<int>> eta_candidates;  // involutory Aut(H) maps on H indices

  int sub_id(int h_idx) const { return subgroup[static_cast<size_t>(h_idx)]; }
  int trans_id(int s_idx) const { return transversal[static_cast<size_t>(s_idx)]; }
};

inline TransversalAnalysis decompose(const FiniteGroupTable& g, std::vector<int> H,
                                     std::vector<int> S, const Caps& caps = {}) {
  TransversalAnalysis ta;
  ta.group = g;
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  for (int x : H)
    if (x < 0 || x >= g.order) throw input_error("subgroup: element id out of range");
  if (!is_subgroup(g, H)) throw input_error("subgroup: set is not a subgroup");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (int x : S)
    if (x < 0 || x >= g.order) throw input_error("transversal: element id out of range");
  if (std::find(S.begin(), S.end(), g.id) == S.end())
    throw input_error("transversal: does not contain the identity");

  ta.subgroup = H;
  ta.transversal.push_back(g.id);
  for (int s : S)
    if (s != g.id) ta.transversal.push_back(s);

  ta.h_part.assign(static_cast<size_t>(g.order), -1);
  ta.s_part.assign(static_cast<size_t>(g.order), -1);
  for (int s : S)
    for (int h : H) {
      const int x = g.at(h, s);
      if (ta.s_part[static_cast<size_t>(x)] >= 0)
        throw input_error("transversal: element " + g.label(x) +
                          " lies in two cosets H·s (s = " +
                          g.label(ta.s_part[static_cast<size_t>(x)]) + " and " + g.label(s) + ")");
      ta.h_part[static_cast<size_t>(x)] = h;
      ta.s_part[static_cast<size_t>(x)] = s;
    }
  for (int x = 0; x < g.order; ++x)
    if (ta.s_part[static_cast<size_t>(x)] < 0)
      throw input_error("transversal: element " + g.label(x) + " is in no coset H·s");

  const int n = static_cast<int>(ta.transversal.size());
  ta.s_index.assign(static_cast<size_t>(g.order), -1);
  for (int i = 0; i < n; ++i) ta.s_index[static_cast<size_t>(ta.transversal[static_cast<size_t>(i)])] = i;
  ta.h_index.assign(static_cast<size_t>(g.order), -1);
  for (size_t i = 0; i < ta.subgroup.size(); ++i)
    ta.h_index[static_cast<size_t>(ta.subgroup[i])] = static_cast<int>(i);

  std::vector<std::vector<int>> op(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  ta.cocycle.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(g.label(ta.transversal[static_cast<size_t>(i)]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int prod = g.at(ta.trans_id(i), ta.trans_id(j));
      op[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          ta.s_index[static_cast<size_t>(ta.s_part[static_cast<size_t>(prod)])];
      ta.cocycle[static_cast<size_t>(i)][static_cast<size_t>(j)] = ta.h_part[static_cast<size_t>(prod)];
    }
  try {
    ta.induced_op = validate_table(op, 0, std::move(labels));
  } catch (const input_error& e) {
    throw internal_error(std::string("induced operation is not a right loop: ") + e.what());
  }

  const int hm = static_cast<int>(ta.subgroup.size());
  if (hm <= caps.aut_cap) {
    std::vector<std::vector<int>> hmul(static_cast<size_t>(hm), std::vector<int>(static_cast<size_t>(hm)));
    std::vector<std::string> hlabels;
    for (int i = 0; i < hm; ++i) hlabels.push_back(g.label(ta.sub_id(i)));
    for (int i = 0; i < hm; ++i)
      for (int j = 0; j < hm; ++j)
        hmul[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            ta.h_index[static_cast<size_t>(g.at(ta.sub_id(i), ta.sub_id(j)))];
    const FiniteGroupTable htab = make_group_table(std::move(hmul), std::move(hlabels), caps);
    std::set<int> sset(ta.transversal.begin(), ta.transversal.end());
    for (const Perm& phi : automorphisms(htab, caps)) {
      if (!compose(phi, phi).is_identity()) continue;
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) {
        const int x = ta.trans_id(i);
        for (int k = 0; k < hm && ok; ++k) {
          const int eh_inv = g.inv[static_cast<size_t>(ta.sub_id(phi.apply(k)))];
          ok = sset.count(g.at(g.at(eh_inv, x), ta.sub_id(k))) > 0;
        }
      }
      if (ok) ta.eta_candidates.push_back(phi.images());
    }
    ta.eta_candidates_computed = true;
  }
  return ta;
}

enum class TransversalClass { NotInverseClosed, Gyrotransversal, TwistedOnly, Both, Neither };

inline std::string to_string(TransversalClass c) {
  switch (c) {
    case TransversalClass::NotInverseClosed: return "not inverse-closed";
    case TransversalClass::Gyrotransversal: return "gyrotransversal";
    case TransversalClass::TwistedOnly: return "twisted-only";
    case TransversalClass::Both: return "both";
    case TransversalClass::Neither: return "neither";
  }
  return "?";
}

struct TransversalClassification {
  bool inverse_closed = false;
  bool identity_eta_works = false;
  int nontrivial_eta_count = 0;
  TransversalClass cls = TransversalClass::Neither;
  // Per candidate: whether the compatibility condition, evaluated by its
  // formula at x = e (η(h)^{-1} e h ∈ S), also holds. The transversal action
  // is *defined* to fix e, so this is informational; it holds iff η = id.
  std::vector<bool> candidate_holds_at_identity;
};

inline TransversalClassification classify_transversal(const TransversalAnalysis& ta) {
  if (!ta.eta_candidates_computed)
    throw cap_error("classify_transversal: automorphism search cap exceeded for H");
  TransversalClassification c;
  const auto& g = ta.group;
  c.inverse_closed = true;
  for (int s : ta.transversal)
    if (ta.s_index[static_cast<size_t>(g.inv[static_cast<size_t>(s)])] < 0) c.inverse_closed = false;
  std::set<int> sset(ta.transversal.begin(), ta.transversal.end());
  for (const auto& cand : ta.eta_candidates) {
    bool is_id = true;
    for (size_t i = 0; i < cand.size(); ++i) is_id = is_id && cand[i] == static_cast<int>(i);
    if (is_id)
      c.identity_eta_works = true;
    else
      ++c.nontrivial_eta_count;
    bool at_e = true;
    for (size_t k = 0; k < cand.size(); ++k) {
      const int eh_inv = g.inv[static_cast<size_t>(ta.sub_id(cand[k]))];
      at_e = at_e && sset.count(g.at(g.at(eh_inv, g.id), ta.sub_id(static_cast<int>(k)))) > 0;
    }
    c.candidate_holds_at_identity.push_back(at_e);
  }
  if (!c.inverse_closed)
    c.cls = TransversalClass::NotInverseClosed;
  else if (c.identity_eta_works && c.nontrivial_eta_count > 0)
    c.cls = TransversalClass::Both;
  else if (c.identity_eta_works)
    c.cls = TransversalClass::Gyrotransversal;
  else if (c.nontrivial_eta_count > 0)
    c.cls = TransversalClass::TwistedOnly;
  else
    c.cls = TransversalClass::Neither;
  return c;
}

// The induced twisted right gyrogroup, for a chosen compatible η. Verifies
// the bridging identities along the way:
//   h g(xθη(h), yθh) = g(x,y) η(h)          (y ≠ e)
//   xθη(h) ∘ yθh = (x∘y)θh                  (y ≠ e)
//   xθη(h) = (x'θh)'
// plus that the permutation of S induced by each cocycle value g(x,y) is the
// right inner mapping f(x,y) of the induced loop.
inline TwistedGyroAnalysis induce_trg(const TransversalAnalysis& ta, const std::vector<int>& eta,
                                      const Caps& caps = {}) {
  if (!ta.eta_candidates_computed ||
      std::find(ta.eta_candidates.begin(), ta.eta_candidates.end(), eta) ==
          ta.eta_candidates.end())
    throw input_error("induce_trg: eta is not a compatible involutory automorphism");
  const auto& g = ta.group;
  const int n = static_cast<int>(ta.transversal.size());
  const int hm = static_cast<int>(ta.subgroup.size());
  for (int s : ta.transversal)
    if (ta.s_index[static_cast<size_t>(g.inv[static_cast<size_t>(s)])] < 0)
      throw input_error("induce_trg: transversal is not inverse-closed");

  // θ action of H on transversal indices: sθh = η(h)^{-1} s h for s ≠ e.
  std::vector<std::vector<int>> theta(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(hm)));
  for (int k = 0; k < hm; ++k) theta[0][static_cast<size_t>(k)] = 0;
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < hm; ++k) {
      const int eh_inv = g.inv[static_cast<size_t>(ta.sub_id(eta[static_cast<size_t>(k)]))];
      const int image = g.at(g.at(eh_inv, ta.trans_id(i)), ta.sub_id(k));
      const int si = ta.s_index[static_cast<size_t>(image)];
      if (si < 0) throw internal_error("θ action leaves the transversal");
      theta[static_cast<size_t>(i)][static_cast<size_t>(k)] = si;
    }

  const RightLoopTable& ind = ta.induced_op;
  for (int i = 0; i < n; ++i)
    if (ta.s_index[static_cast<size_t>(g.inv[static_cast<size_t>(ta.trans_id(i))])] !=
        ind.left_inverse[static_cast<size_t>(i)])
      throw internal_error("loop inverse differs from the group inverse on S");
  for (int i = 0; i < n; ++i) {
    const int ip = ind.left_inverse[static_cast<size_t>(i)];
    if (ta.cocycle[static_cast<size_t>(ip)][static_cast<size_t>(i)] != g.id ||
        ta.cocycle[static_cast<size_t>(i)][static_cast<size_t>(ip)] != g.id)
      throw internal_error("g(x',x) and g(x,x') must be trivial");
  }

  for (int k = 0; k < hm; ++k) {
    const int ek = eta[static_cast<size_t>(k)];
    for (int x = 0; x < n; ++x) {
      for (int y = 1; y < n; ++y) {
        const int xe = theta[static_cast<size_t>(x)][static_cast<size_t>(ek)];
        const int yh = theta[static_cast<size_t>(y)][static_cast<size_t>(k)];
        // The cocycle identity needs the decomposition of x, y and x∘y off
        // the identity; at x = e or x∘y = e it would collapse to h = η(h).
        if (x != 0 && ind.at(x, y) != 0) {
          const int lhs =
              g.at(ta.sub_id(k), ta.cocycle[static_cast<size_t>(xe)][static_cast<size_t>(yh)]);
          const int rhs =
              g.at(ta.cocycle[static_cast<size_t>(x)][static_cast<size_t>(y)], ta.sub_id(ek));
          if (lhs != rhs) throw internal_error("cocycle bridging identity fails");
        }
        if (ind.at(xe, yh) !=
            theta[static_cast<size_t>(ind.at(x, y))][static_cast<size_t>(k)])
          throw internal_error("xθη(h) ∘ yθh = (x∘y)θh fails");
      }
      const int xp = ind.left_inverse[static_cast<size_t>(x)];
      if (theta[static_cast<size_t>(x)][static_cast<size_t>(ek)] !=
          ind.left_inverse[static_cast<size_t>(theta[static_cast<size_t>(xp)][static_cast<size_t>(k)])])
        throw internal_error("xθη(h) = (x'θh)' fails");
    }
  }

  TwistedGyroAnalysis out = is_twisted_right_gyrogroup(ind, caps);
  if (!out.is_trg) {
    std::string why;
    for (const auto& r : out.failure_reasons) why += " " + r;
    throw internal_error("induced operation is not a twisted right gyrogroup:" + why);
  }
  // The permutation of S induced by g(x,y) equals f(x,y).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int k = ta.h_index[static_cast<size_t>(ta.cocycle[static_cast<size_t>(x)][static_cast<size_t>(y)])];
      for (int s = 0; s < n; ++s)
        if (out.idx.f_at(x, y).apply(s) != theta[static_cast<size_t>(s)][static_cast<size_t>(k)])
          throw internal_error("cocycle action differs from the inner mapping");
    }
  return out;
}

}  // namespace rloop
