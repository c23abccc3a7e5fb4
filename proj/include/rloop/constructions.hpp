#pragma once

#include <set>
#include <string>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/extension.hpp"
#include "rloop/innermaps.hpp"
#include "rloop/perm.hpp"
#include "rloop/report.hpp"
#include "rloop/rightloop.hpp"
#include "rloop/twistedaut.hpp"

namespace rloop {

// Unique inverses, f(y',y) = I throughout, and every inner mapping an
// automorphism of (S,∘).
inline bool is_right_gyrogroup(const RightLoopTable& t) {
  if (!t.has_unique_inverses()) return false;
  for (int y = 0; y < t.order; ++y)
    if (!inner_map(t, t.left_inverse[static_cast<size_t>(y)], y).is_identity()) return false;
  for (int y = 0; y < t.order; ++y)
    for (int z = 0; z < t.order; ++z)
      if (!detail::satisfies_automorphism_identity(t, inner_map(t, y, z))) return false;
  return true;
}

// x_i ∘ x_j = x_i for i ≠ j, x_i ∘ x_i = e. Its inner mapping group is all of
// Sym(S∖{e}) and equals its automorphism group.
inline RightLoopTable projection_loop(int n) {
  if (n < 2) throw input_error("projection_loop: order must be at least 2");
  std::vector<std::vector<int>> op(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == 0)
        op[static_cast<size_t>(x)][static_cast<size_t>(y)] = y;
      else if (y == 0)
        op[static_cast<size_t>(x)][static_cast<size_t>(y)] = x;
      else
        op[static_cast<size_t>(x)][static_cast<size_t>(y)] = x == y ? 0 : x;
    }
  std::vector<std::string> labels{"e"};
  for (int i = 1; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return validate_table(op, 0, std::move(labels));
}

// The deformation x ∘_ρ y = ρ(x)∘y for y ≠ e (and x for y = e), for an
// involutory automorphism ρ of a right gyrogroup. The result is a twisted
// right gyrogroup with inverses x'_ρ = ρ(x') and inner mappings
// f_ρ(y,z) = f(yθρ, z)ρ away from z = e and y = z'_ρ, where f_ρ(y,z) = I.
inline RightLoopTable deform_rho(const RightLoopTable& t, const Perm& rho, const Caps& caps = {}) {
  if (!is_right_gyrogroup(t)) throw input_error("deform_rho: table is not a right gyrogroup");
  if (rho.degree() != t.order) throw input_error("deform_rho: rho degree mismatch");
  if (!detail::satisfies_automorphism_identity(t, rho))
    throw input_error("deform_rho: rho is not an automorphism");
  if (!compose(rho, rho).is_identity()) throw input_error("deform_rho: rho is not involutory");

  const int n = t.order;
  std::vector<std::vector<int>> op(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x) {
    op[static_cast<size_t>(x)][0] = x;
    for (int y = 1; y < n; ++y)
      op[static_cast<size_t>(x)][static_cast<size_t>(y)] = t.at(rho.apply(x), y);
  }
  RightLoopTable d;
  try {
    d = validate_table(op, 0, t.labels);
  } catch (const input_error& e) {
    throw internal_error(std::string("deformation is not a right loop: ") + e.what());
  }

  if (!d.has_unique_inverses()) throw internal_error("deformation lost unique inverses");
  for (int x = 0; x < n; ++x)
    if (d.inverse_of(x) != rho.apply(t.inverse_of(x)))
      throw internal_error("deformation inverse x'_ρ != ρ(x')");
  const TwistedGyroAnalysis analysis = is_twisted_right_gyrogroup(d, caps);
  if (!analysis.is_trg) throw internal_error("deformation is not a twisted right gyrogroup");
  for (int y = 0; y < n; ++y) {
    if (!inner_map(d, d.inverse_of(y), y).is_identity())
      throw internal_error("f_ρ(y'_ρ, y) != I");
    if (y == 0) continue;
    // Valid for y, z ≠ e and y ≠ z'_ρ; at those exceptional points f_ρ = I
    // while the right side degenerates to ρ.
    for (int z = 1; z < n; ++z) {
      if (y == d.inverse_of(z)) continue;
      if (inner_map(d, y, z) != compose(inner_map(t, rho.apply(y), z), rho))
        throw internal_error("f_ρ(y,z) != f(yθρ, z)ρ");
    }
  }
  return d;
}

// S_h = {h·x : x ∈ S∖{e}} ∪ {e} for an involution h of H outside its center,
// inside a group where S is a gyrotransversal to H. The result is a twisted
// gyrotransversal for η = conjugation by h, and never a plain gyrotransversal.
struct ShResult {
  TransversalAnalysis analysis;
  std::vector<int> eta_conjugation;  // H-index map k -> h k h
  CheckReport report;
};

inline ShResult s_h_transversal(const TransversalAnalysis& ta, int h, const Caps& caps = {}) {
  const auto& g = ta.group;
  const TransversalClassification base_class = classify_transversal(ta);
  if (!base_class.identity_eta_works)
    throw input_error("s_h_transversal: base transversal is not a gyrotransversal");
  if (ta.transversal.size() < 2) throw input_error("s_h_transversal: transversal is trivial");
  if (ta.h_index[static_cast<size_t>(h)] < 0)
    throw input_error("s_h_transversal: h is not in the subgroup");
  if (h == g.id || g.at(h, h) != g.id) throw input_error("s_h_transversal: h is not an involution");
  bool central = true;
  for (int k : ta.subgroup) central = central && g.at(h, k) == g.at(k, h);
  if (central) throw input_error("s_h_transversal: h is central in the subgroup");

  std::vector<int> sh{g.id};
  for (int s : ta.transversal)
    if (s != g.id) sh.push_back(g.at(h, s));

  ShResult out;
  try {
    out.analysis = decompose(g, ta.subgroup, sh, caps);
  } catch (const input_error& e) {
    throw internal_error(std::string("S_h is not a right transversal: ") + e.what());
  }
  const int hm = static_cast<int>(ta.subgroup.size());
  out.eta_conjugation.resize(static_cast<size_t>(hm));
  for (int k = 0; k < hm; ++k) {
    const int img = ta.h_index[static_cast<size_t>(g.at(g.at(h, ta.sub_id(k)), h))];
    if (img < 0) throw internal_error("conjugation by h leaves the subgroup");
    out.eta_conjugation[static_cast<size_t>(k)] = img;
  }

  const TransversalClassification cls = classify_transversal(out.analysis);
  if (std::find(out.analysis.eta_candidates.begin(), out.analysis.eta_candidates.end(),
                out.eta_conjugation) == out.analysis.eta_candidates.end())
    throw internal_error("η(k) = hkh is not compatible with S_h");
  if (cls.identity_eta_works) throw internal_error("S_h must not be a gyrotransversal");

  out.report.name = "S_h twisted transversal";
  out.report.note("classification: " + to_string(cls.cls));
  out.report.note("η(k) = hkh compatible: yes");
  out.report.note("gyrotransversal: no");
  return out;
}

// Each h ∈ Aut(S,∘) is a twisted automorphism of the deformation, and an
// automorphism of it exactly when it commutes with ρ. Returns membership of
// h in Aut(S, ∘_ρ).
inline bool aut_in_taut_of_deformed(const RightLoopTable& t, const Perm& rho, const Perm& h,
                                    const Caps& caps = {}) {
  const RightLoopTable d = deform_rho(t, rho, caps);
  if (h.degree() != t.order || !detail::satisfies_automorphism_identity(t, h))
    throw input_error("aut_in_taut_of_deformed: h is not an automorphism of the base table");
  if (!is_twisted_automorphism(d, h))
    throw internal_error("h ∈ Aut(S,∘) must be a twisted automorphism of the deformation");
  const bool in_aut = detail::satisfies_automorphism_identity(d, h);
  const bool commutes = compose(h, rho) == compose(rho, h);
  if (in_aut != commutes)
    throw internal_error("Aut(S,∘_ρ) membership must match commutation with ρ");
  return in_aut;
}

}  // namespace rloop
