#pragma once

#include <set>
#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/extension.hpp"
#include "rloop/grouptable.hpp"
#include "rloop/report.hpp"
#include "rloop/twistedaut.hpp"

namespace rloop {

struct SubsetInGroup {
  FiniteGroupTable group;
  std::vector<int> subset;
};

struct TwistedSubgroupResult {
  bool ok = false;
  std::string witness;  // empty when ok
};

// 1 ∈ S and xyx ∈ S for all x, y ∈ S.
inline TwistedSubgroupResult is_twisted_subgroup(const SubsetInGroup& s) {
  const auto& g = s.group;
  std::set<int> set;
  for (int x : s.subset) {
    if (x < 0 || x >= g.order) throw input_error("subset: element id out of range");
    set.insert(x);
  }
  if (!set.count(g.id)) return {false, "identity not in subset"};
  for (int x : set)
    for (int y : set) {
      const int xyx = g.at(g.at(x, y), x);
      if (!set.count(xyx))
        return {false, "xyx not in subset at x=" + g.label(x) + ", y=" + g.label(y) + " (xyx=" +
                           g.label(xyx) + ")"};
    }
  return {true, ""};
}

// Right loop property f(x,y) = f(x, x∘y) for all x, y.
inline bool is_twisted_gyrogroup(const TwistedGyroAnalysis& a) {
  if (!a.is_trg) throw input_error("is_twisted_gyrogroup: not a twisted right gyrogroup");
  const RightLoopTable& t = a.loop;
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y)
      if (a.idx.f_at(x, y) != a.idx.f_at(x, t.at(x, y))) return false;
  return true;
}

// The five twisted-gyrogroup identities:
//   f(x,y)^{-1} = f(x∘y, y')
//   f(x,y)^{-1} = f(x∘y, x)
//   f(x,y)^{-1} = η(f(y', x'))
//   f(x,y)      = η(f(y'∘x', y'))
//   f(x,y)^{-1} = f(y, x)
// plus, as a corollary of the last one, f(x,x)^2 = I.
inline CheckReport check_tgg_identities(const TwistedGyroAnalysis& a) {
  if (!is_twisted_gyrogroup(a))
    throw input_error("check_tgg_identities: right loop property does not hold");
  CheckReport rep;
  rep.name = "twisted-gyrogroup identities (21)-(25)";
  const RightLoopTable& t = a.loop;
  auto eta_of = [&](const Perm& p) -> Perm {
    const int i = a.idx.gs.index_of(p);
    if (i < 0) throw internal_error("f value missing from G_S");
    return a.eta_of(i);
  };
  auto at = [&](int x, int y) { return t.at(x, y); };
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y) {
      const int xp = t.inverse_of(x);
      const int yp = t.inverse_of(y);
      const Perm finv = a.idx.f_at(x, y).inverse();
      const std::string where = " at x=" + t.label(x) + ", y=" + t.label(y);
      if (finv != a.idx.f_at(at(x, y), yp)) rep.fail("(21) fails" + where);
      if (finv != a.idx.f_at(at(x, y), x)) rep.fail("(22) fails" + where);
      if (finv != eta_of(a.idx.f_at(yp, xp))) rep.fail("(23) fails" + where);
      if (a.idx.f_at(x, y) != eta_of(a.idx.f_at(at(yp, xp), yp))) rep.fail("(24) fails" + where);
      if (finv != a.idx.f_at(y, x)) rep.fail("(25) fails" + where);
      if (x == y && !compose(a.idx.f_at(x, x), a.idx.f_at(x, x)).is_identity())
        rep.fail("corollary f(x,x)^2 = I fails at x=" + t.label(x));
      if (!rep.ok) return rep;  // first witness only
    }
  return rep;
}

// Both directions of the equivalence: the right loop property holds iff the
// embedded S is a twisted subgroup of the extension group with
// f(x,y)^{-1} = f(y,x) throughout. When the left side holds, also verifies
// x y x = (x∘y)∘x inside the extension.
inline CheckReport check_equivalence_theorem(const TwistedGyroAnalysis& a, const Caps& caps = {}) {
  if (!a.is_trg) throw input_error("check_equivalence_theorem: not a twisted right gyrogroup");
  CheckReport rep;
  rep.name = "twisted subgroup ⇔ twisted gyrogroup";
  const bool lhs = is_twisted_gyrogroup(a);

  const ExtensionGroup ext = build_extension(a, caps);
  const TwistedSubgroupResult tsg =
      is_twisted_subgroup({ext.table, ext.embed_s});
  bool f_antisym = true;
  for (int x = 0; x < a.loop.order && f_antisym; ++x)
    for (int y = 0; y < a.loop.order && f_antisym; ++y)
      f_antisym = a.idx.f_at(x, y).inverse() == a.idx.f_at(y, x);
  const bool rhs = tsg.ok && f_antisym;

  rep.note(std::string("right loop property: ") + (lhs ? "holds" : "fails"));
  rep.note(std::string("embedded S twisted subgroup: ") + (tsg.ok ? "yes" : "no (" + tsg.witness + ")"));
  rep.note(std::string("f(x,y)^{-1} = f(y,x): ") + (f_antisym ? "holds" : "fails"));
  if (lhs != rhs)
    rep.fail(std::string("equivalence violated: left ") + (lhs ? "true" : "false") + ", right " +
             (rhs ? "true" : "false"));
  if (lhs) {
    for (int x = 0; x < a.loop.order; ++x)
      for (int y = 0; y < a.loop.order; ++y) {
        const int sx = ext.embed_s[static_cast<size_t>(x)];
        const int sy = ext.embed_s[static_cast<size_t>(y)];
        const int xyx = ext.table.at(ext.table.at(sx, sy), sx);
        if (xyx != ext.embed_s[static_cast<size_t>(a.loop.at(a.loop.at(x, y), x))])
          rep.fail("x y x != (x∘y)∘x at x=" + a.loop.label(x) + ", y=" + a.loop.label(y));
      }
  }
  return rep;
}

}  // namespace rloop
