// Command-line front end: validation, analysis, constructions, extensions,
// transversal decomposition and right-loop enumeration over text table files.
//
// Exit codes: 0 success, 1 property-false (predicate subcommands), 2 input
// error, 3 cap exceeded, 4 internal verification failure.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rloop/rloop.hpp"

using nlohmann::ordered_json;
using namespace rloop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

// Display order for element lists: identity first, fewer moved points first,
// then by least moved point, then lexicographic.
std::vector<Perm> display_sorted(std::vector<Perm> elems) {
  auto keyof = [](const Perm& p) {
    int moved = 0, first = p.degree();
    for (int i = 0; i < p.degree(); ++i)
      if (!p.fixes(i)) {
        ++moved;
        first = std::min(first, i);
      }
    return std::tuple<int, int, std::string>(moved, first, p.key());
  };
  std::sort(elems.begin(), elems.end(),
            [&](const Perm& a, const Perm& b) { return keyof(a) < keyof(b); });
  return elems;
}

std::string join_cycles(const std::vector<Perm>& elems, const std::vector<std::string>& labels,
                        const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += sep;
    out += format_cycles(elems[i], labels);
  }
  return out;
}

std::vector<std::string> split_labels(const std::string& arg) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : arg) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int label_id(const RightLoopTable& t, const std::string& lab) {
  for (int i = 0; i < t.order; ++i)
    if (t.label(i) == lab) return i;
  throw input_error("unknown element '" + lab + "'");
}

std::vector<int> label_ids(const RightLoopTable& t, const std::vector<std::string>& labs) {
  std::vector<int> out;
  out.reserve(labs.size());
  for (const auto& lab : labs) out.push_back(label_id(t, lab));
  return out;
}

struct AnalyzeResult {
  LoadedTable lt;
  InnerMapIndex idx;
  bool sigma_hom_all = false;
  TwistedGyroAnalysis trg;
  bool right_gyro = false;
  bool twisted_gyro = false;
  CheckReport prop2;
  // TAut side; absent without unique inverses.
  bool taut_defined = false;
  bool taut_complete = false;
  PermGroupData taut;
  PermGroupData aut;
};

AnalyzeResult run_analysis(const std::string& path, const Caps& caps) {
  AnalyzeResult r;
  r.lt = load_table_file(path, caps);
  const RightLoopTable& t = r.lt.loop;
  r.idx = inner_group(t, caps);
  r.prop2 = check_prop2_identities(r.idx);
  r.sigma_hom_all = true;
  for (int y = 0; y < t.order; ++y) r.sigma_hom_all = r.sigma_hom_all && check_sigma_homomorphism(r.idx, y);
  r.trg = is_twisted_right_gyrogroup(t, caps);
  r.right_gyro = is_right_gyrogroup(t);
  r.twisted_gyro = r.trg.is_trg && is_twisted_gyrogroup(r.trg);
  r.aut = aut_group(t, caps);
  if (t.has_unique_inverses()) {
    r.taut_defined = true;
    try {
      r.taut = taut_group(t, caps);
      r.taut_complete = true;
    } catch (const cap_error&) {
      r.taut = taut_group_lower_bound(t, caps).group;
      r.taut_complete = false;
    }
  }
  return r;
}

std::string inverses_line(const RightLoopTable& t) {
  std::string out;
  for (int x = 0; x < t.order; ++x) {
    if (x) out += " ";
    out += t.label(x) + "'=" + t.label(t.inverse_of(x));
  }
  return out;
}

std::string iso_guess_of(const PermGroupData& g, const Caps& caps) {
  if (g.order() > caps.iso_cap) return "order-" + std::to_string(g.order()) + " group";
  return iso_type_guess(to_group_table(g, caps), caps);
}

void print_analysis_text(const AnalyzeResult& r, const Caps& caps, std::ostream& os) {
  const RightLoopTable& t = r.lt.loop;
  os << "order: " << t.order << "\n";
  os << "elements:";
  for (const auto& lab : t.labels) os << " " << lab;
  os << "\n";
  os << "identity: " << t.label(0) << "\n";
  os << "loop: " << (is_loop(t) ? "true" : "false") << "\n";
  os << "unique inverses: " << (t.has_unique_inverses() ? "true" : "false") << "\n";
  if (t.has_unique_inverses()) {
    os << "inverses: " << inverses_line(t) << "\n";
    os << "aip: " << (has_aip(t) ? "true" : "false") << "\n";
  }
  os << "left alternative: " << (has_left_alternative(t) ? "true" : "false") << "\n";
  os << "f-table (row y, column z, entry f(y,z)):\n";
  for (int y = 0; y < t.order; ++y) {
    os << "  " << t.label(y) << ":";
    for (int z = 0; z < t.order; ++z) os << " " << format_cycles(r.idx.f_at(y, z), t.labels, true);
    os << "\n";
  }
  os << "G_S order " << r.idx.gs.order() << "\n";
  os << "G_S generators: " << join_cycles(display_sorted(r.idx.gs.generators), t.labels, " ") << "\n";
  std::vector<int> off_identity;
  for (int x = 1; x < t.order; ++x) off_identity.push_back(x);
  if (!off_identity.empty())
    os << "G_S transitive on S\\{e}: "
       << (is_transitive_on(r.idx.gs, off_identity) ? "true" : "false") << "\n";
  os << "G_S isomorphism guess: " << iso_guess_of(r.idx.gs, caps) << "\n";
  os << "Aut = {" << join_cycles(display_sorted(r.aut.elements), t.labels, ",") << "}\n";
  os << "Aut order " << r.aut.order() << "\n";
  if (r.taut_defined) {
    if (r.taut_complete) {
      os << "TAut order " << r.taut.order() << "\n";
      os << "TAut isomorphism guess: " << iso_guess_of(r.taut, caps) << "\n";
    } else {
      os << "TAut order >= " << r.taut.order() << " (incomplete: generated-closure lower bound)\n";
    }
  } else {
    os << "TAut: not defined (no unique inverses)\n";
  }
  os << "sigma homomorphism at every y: " << (r.sigma_hom_all ? "true" : "false") << "\n";
  os << "twisted right gyrogroup: " << (r.trg.is_trg ? "true" : "false") << "\n";
  if (!r.trg.is_trg)
    for (const auto& reason : r.trg.failure_reasons) os << "  reason: " << reason << "\n";
  if (r.trg.is_trg) {
    os << "eta: " << format_eta(r.trg) << "\n";
    std::vector<Perm> fixed;
    for (size_t i = 0; i < r.trg.eta_on_gs.size(); ++i)
      if (r.trg.eta_on_gs[i] == static_cast<int>(i)) fixed.push_back(r.idx.gs.elements[i]);
    os << "eta fixed points in G_S: " << join_cycles(display_sorted(fixed), t.labels, " ") << "\n";
  }
  os << "right gyrogroup: " << (r.right_gyro ? "true" : "false") << "\n";
  os << "twisted gyrogroup: " << (r.twisted_gyro ? "true" : "false") << "\n";
  os << "identity suite (i)-(iv): " << (r.prop2.ok ? "ok" : "VIOLATED") << "\n";
  for (const auto& v : r.prop2.violations) os << "  " << v << "\n";
  if (r.trg.is_trg) {
    const CheckReport odd = check_odd_abelian(r.trg, caps);
    os << "odd-abelian check: " << (odd.ok ? "ok" : "VIOLATED");
    for (const auto& note : odd.notes) os << " (" << note << ")";
    os << "\n";
  }
}

ordered_json analysis_json(const AnalyzeResult& r, const Caps& caps) {
  const RightLoopTable& t = r.lt.loop;
  ordered_json j;
  j["order"] = t.order;
  j["elements"] = t.labels;
  j["identity"] = t.label(0);
  j["loop"] = is_loop(t);
  j["unique_inverses"] = t.has_unique_inverses();
  if (t.has_unique_inverses()) {
    ordered_json inv;
    for (int x = 0; x < t.order; ++x) inv[t.label(x)] = t.label(t.inverse_of(x));
    j["inverses"] = inv;
    j["aip"] = has_aip(t);
  }
  j["left_alternative"] = has_left_alternative(t);
  ordered_json ftab = ordered_json::array();
  for (int y = 0; y < t.order; ++y) {
    ordered_json row = ordered_json::array();
    for (int z = 0; z < t.order; ++z) row.push_back(format_cycles(r.idx.f_at(y, z), t.labels));
    ftab.push_back(row);
  }
  j["f_table"] = ftab;
  ordered_json gs;
  gs["order"] = r.idx.gs.order();
  gs["generators"] = ordered_json::array();
  for (const auto& g : display_sorted(r.idx.gs.generators))
    gs["generators"].push_back(format_cycles(g, t.labels));
  std::vector<int> off_identity;
  for (int x = 1; x < t.order; ++x) off_identity.push_back(x);
  gs["transitive_off_identity"] =
      off_identity.empty() ? true : is_transitive_on(r.idx.gs, off_identity);
  gs["iso_guess"] = iso_guess_of(r.idx.gs, caps);
  j["gs"] = gs;
  ordered_json aut;
  aut["order"] = r.aut.order();
  aut["elements"] = ordered_json::array();
  for (const auto& h : display_sorted(r.aut.elements))
    aut["elements"].push_back(format_cycles(h, t.labels));
  j["aut"] = aut;
  if (r.taut_defined) {
    ordered_json taut;
    taut["order"] = r.taut.order();
    taut["complete"] = r.taut_complete;
    if (r.taut_complete) taut["iso_guess"] = iso_guess_of(r.taut, caps);
    j["taut"] = taut;
  } else {
    j["taut"] = nullptr;
  }
  j["sigma_homomorphism_all_y"] = r.sigma_hom_all;
  ordered_json trg;
  trg["is_trg"] = r.trg.is_trg;
  if (r.trg.is_trg) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [h, k] : eta_pairs(r.trg))
      pairs.push_back({format_cycles(h, t.labels), format_cycles(k, t.labels)});
    trg["eta_pairs"] = pairs;
    ordered_json fixed = ordered_json::array();
    for (size_t i = 0; i < r.trg.eta_on_gs.size(); ++i)
      if (r.trg.eta_on_gs[i] == static_cast<int>(i))
        fixed.push_back(format_cycles(r.idx.gs.elements[i], t.labels));
    trg["eta_fixed"] = fixed;
    const CheckReport odd = check_odd_abelian(r.trg, caps);
    trg["odd_abelian"] = {{"ok", odd.ok}, {"notes", odd.notes}, {"violations", odd.violations}};
  } else {
    trg["failure_reasons"] = r.trg.failure_reasons;
  }
  j["trg"] = trg;
  j["right_gyrogroup"] = r.right_gyro;
  j["twisted_gyrogroup"] = r.twisted_gyro;
  j["prop2"] = {{"ok", r.prop2.ok}, {"violations", r.prop2.violations}};
  return j;
}

ordered_json report_json(const CheckReport& rep) {
  return {{"name", rep.name}, {"ok", rep.ok}, {"notes", rep.notes}, {"violations", rep.violations}};
}

void emit(bool json, const ordered_json& j, const std::function<void()>& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    text();
}

FiniteGroupTable require_group(const LoadedTable& lt) {
  if (!lt.is_group || !lt.group) throw input_error("expected a 'type: group' table file");
  return *lt.group;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyze right loops given as Cayley tables"};
  app.require_subcommand(1);
  app.fallthrough(true);

  Caps caps;
  bool json = false;
  app.add_flag("--json", json, "structured JSON output");
  app.add_option("--closure-cap", caps.closure_cap, "max permutation-closure size");
  app.add_option("--aut-cap", caps.aut_cap, "max group order for automorphism search");
  app.add_option("--iso-cap", caps.iso_cap, "max group order for isomorphism tests");
  app.add_option("--taut-cap", caps.taut_perm_cap, "max (n-1)! for brute TAut/Aut filters");
  app.add_option("--extension-cap", caps.extension_cap, "max extension group order");
  app.add_option("--table-cap", caps.table_cap, "max order for associativity verification");
  app.add_option("--enumerate-cap", caps.enumerate_cap, "max order for enumeration");

  std::function<int()> action;

  // validate
  {
    auto* cmd = app.add_subcommand("validate", "check the right-loop axioms of a table file");
    auto path = std::make_shared<std::string>();
    cmd->add_option("file", *path, "table file")->required();
    cmd->callback([&, path] {
      action = [&, path]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const RightLoopTable& t = lt.loop;
        ordered_json j;
        j["order"] = t.order;
        j["identity"] = t.label(0);
        j["valid"] = true;
        j["type"] = lt.is_group ? "group" : "loop";
        j["loop"] = is_loop(t);
        j["unique_inverses"] = t.has_unique_inverses();
        if (t.has_unique_inverses()) {
          ordered_json inv;
          for (int x = 0; x < t.order; ++x) inv[t.label(x)] = t.label(t.inverse_of(x));
          j["inverses"] = inv;
        }
        emit(json, j, [&] {
          std::cout << "order: " << t.order << "\n";
          std::cout << "identity: " << t.label(0) << "\n";
          std::cout << "right loop: valid\n";
          if (lt.is_group) std::cout << "type: group (associativity verified)\n";
          std::cout << "loop: " << (is_loop(t) ? "true" : "false") << "\n";
          std::cout << "unique inverses: " << (t.has_unique_inverses() ? "true" : "false") << "\n";
          if (t.has_unique_inverses()) std::cout << "inverses: " << inverses_line(t) << "\n";
        });
        return kExitOk;
      };
    });
  }

  // analyze
  {
    auto* cmd = app.add_subcommand("analyze", "full structural report for a table file");
    auto path = std::make_shared<std::string>();
    cmd->add_option("file", *path, "table file")->required();
    cmd->callback([&, path] {
      action = [&, path]() -> int {
        const AnalyzeResult r = run_analysis(*path, caps);
        emit(json, analysis_json(r, caps), [&] { print_analysis_text(r, caps, std::cout); });
        return kExitOk;
      };
    });
  }

  // inner
  {
    auto* cmd = app.add_subcommand("inner", "one right inner mapping f(y,z) in cycle notation");
    auto path = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>(), z = std::make_shared<std::string>();
    cmd->add_option("file", *path)->required();
    cmd->add_option("y", *y, "left element label")->required();
    cmd->add_option("z", *z, "right element label")->required();
    cmd->callback([&, path, y, z] {
      action = [&, path, y, z]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const Perm f = inner_map(lt.loop, label_id(lt.loop, *y), label_id(lt.loop, *z));
        const std::string s = format_cycles(f, lt.loop.labels);
        emit(json, {{"f", s}}, [&] { std::cout << s << "\n"; });
        return kExitOk;
      };
    });
  }

  // sigma
  {
    auto* cmd = app.add_subcommand("sigma", "σ_y(h) for h given in cycle notation");
    auto path = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>(), h = std::make_shared<std::string>();
    cmd->add_option("file", *path)->required();
    cmd->add_option("y", *y, "element label")->required();
    cmd->add_option("perm", *h, "permutation in cycle notation over element labels")->required();
    cmd->callback([&, path, y, h] {
      action = [&, path, y, h]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const Perm hp = parse_cycles(*h, lt.loop.order, lt.loop.labels);
        const Perm s = sigma(lt.loop, label_id(lt.loop, *y), hp);
        const std::string str = format_cycles(s, lt.loop.labels);
        emit(json, {{"sigma", str}}, [&] { std::cout << str << "\n"; });
        return kExitOk;
      };
    });
  }

  // eta
  {
    auto* cmd = app.add_subcommand("eta", "η pairing of a twisted right gyrogroup");
    auto path = std::make_shared<std::string>();
    cmd->add_option("file", *path)->required();
    cmd->callback([&, path] {
      action = [&, path]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(lt.loop, caps);
        if (!a.is_trg) {
          std::cout << "not a twisted right gyrogroup\n";
          for (const auto& reason : a.failure_reasons) std::cout << "  reason: " << reason << "\n";
          return kExitPropertyFalse;
        }
        ordered_json pairs = ordered_json::array();
        for (const auto& [h, k] : eta_pairs(a))
          pairs.push_back({format_cycles(h, lt.loop.labels), format_cycles(k, lt.loop.labels)});
        emit(json, {{"eta", format_eta(a)}, {"pairs", pairs}},
             [&] { std::cout << format_eta(a) << "\n"; });
        return kExitOk;
      };
    });
  }

  // extend
  {
    auto* cmd = app.add_subcommand("extend", "build and verify the extension group G_S·S");
    auto path = std::make_shared<std::string>();
    cmd->add_option("file", *path)->required();
    cmd->callback([&, path] {
      action = [&, path]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(lt.loop, caps);
        if (!a.is_trg) throw input_error("not a twisted right gyrogroup");
        const ExtensionGroup ext = build_extension(a, caps);
        std::string subgroup, transversal;
        for (size_t i = 0; i < ext.embed_h.size(); ++i)
          subgroup += (i ? " " : "") + ext.table.label(ext.embed_h[i]);
        for (size_t i = 0; i < ext.embed_s.size(); ++i)
          transversal += (i ? " " : "") + ext.table.label(ext.embed_s[i]);
        if (json) {
          ordered_json j;
          j["order"] = ext.table.order;
          j["subgroup"] = split_labels(subgroup);
          j["transversal"] = split_labels(transversal);
          j["file"] = serialize_table(ext.table);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "# extension group of order " << ext.table.order
                    << " (associativity verified)\n";
          std::cout << "# subgroup: " << subgroup << "\n";
          std::cout << "# transversal: " << transversal << "\n";
          std::cout << serialize_table(ext.table);
        }
        return kExitOk;
      };
    });
  }

  // transversal
  {
    auto* cmd = app.add_subcommand("transversal", "decompose, classify and induce along H and S");
    auto path = std::make_shared<std::string>();
    auto subgroup = std::make_shared<std::string>(), transversal = std::make_shared<std::string>();
    cmd->add_option("file", *path, "group file")->required();
    cmd->add_option("--subgroup", *subgroup, "comma-separated element labels")->required();
    cmd->add_option("--transversal", *transversal, "comma-separated element labels")->required();
    cmd->callback([&, path, subgroup, transversal] {
      action = [&, path, subgroup, transversal]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const FiniteGroupTable g = require_group(lt);
        const RightLoopTable gl = from_group(g);
        const TransversalAnalysis ta =
            decompose(g, label_ids(gl, split_labels(*subgroup)),
                      label_ids(gl, split_labels(*transversal)), caps);
        const TransversalClassification cls = classify_transversal(ta);
        ordered_json j;
        j["subgroup_order"] = ta.subgroup.size();
        j["transversal_size"] = ta.transversal.size();
        j["classification"] = to_string(cls.cls);
        j["inverse_closed"] = cls.inverse_closed;
        j["identity_eta_works"] = cls.identity_eta_works;
        j["nontrivial_eta_count"] = cls.nontrivial_eta_count;
        j["induced_table"] = serialize_table(ta.induced_op, false);
        ordered_json inductions = ordered_json::array();
        const bool can_induce = cls.cls == TransversalClass::Gyrotransversal ||
                                cls.cls == TransversalClass::TwistedOnly ||
                                cls.cls == TransversalClass::Both;
        if (can_induce)
          for (const auto& eta : ta.eta_candidates) {
            const TwistedGyroAnalysis ind = induce_trg(ta, eta, caps);
            ordered_json one;
            one["eta_is_identity"] =
                std::all_of(eta.begin(), eta.end(),
                            [k = 0](int v) mutable { return v == k++; });
            one["gs_order"] = ind.idx.gs.order();
            one["is_trg"] = ind.is_trg;
            inductions.push_back(one);
          }
        j["inductions"] = inductions;
        emit(json, j, [&] {
          std::cout << "subgroup order: " << ta.subgroup.size() << "\n";
          std::cout << "transversal size: " << ta.transversal.size() << "\n";
          std::cout << "classification: " << to_string(cls.cls) << "\n";
          std::cout << "inverse closed: " << (cls.inverse_closed ? "true" : "false") << "\n";
          std::cout << "identity eta works: " << (cls.identity_eta_works ? "true" : "false")
                    << "\n";
          std::cout << "nontrivial eta candidates: " << cls.nontrivial_eta_count << "\n";
          std::cout << "induced operation:\n" << serialize_table(ta.induced_op, false);
          for (const auto& one : j["inductions"])
            std::cout << "induced twisted right gyrogroup (eta "
                      << (one["eta_is_identity"].get<bool>() ? "identity" : "nontrivial")
                      << "): G_S order " << one["gs_order"].get<long>() << "\n";
        });
        return kExitOk;
      };
    });
  }

  // twisted-subgroup
  {
    auto* cmd = app.add_subcommand("twisted-subgroup", "test 1 ∈ S and xyx-closure of a subset");
    auto path = std::make_shared<std::string>();
    auto subset = std::make_shared<std::string>();
    cmd->add_option("file", *path, "group file")->required();
    cmd->add_option("--subset", *subset, "comma-separated element labels")->required();
    cmd->callback([&, path, subset] {
      action = [&, path, subset]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const FiniteGroupTable g = require_group(lt);
        const TwistedSubgroupResult res =
            is_twisted_subgroup({g, label_ids(from_group(g), split_labels(*subset))});
        emit(json, {{"twisted_subgroup", res.ok}, {"witness", res.witness}}, [&] {
          std::cout << "twisted subgroup: " << (res.ok ? "true" : "false");
          if (!res.ok) std::cout << " (" << res.witness << ")";
          std::cout << "\n";
        });
        return res.ok ? kExitOk : kExitPropertyFalse;
      };
    });
  }

  // equivalence
  {
    auto* cmd = app.add_subcommand(
        "equivalence", "two-sided twisted-subgroup/twisted-gyrogroup check for a table");
    auto path = std::make_shared<std::string>();
    cmd->add_option("file", *path)->required();
    cmd->callback([&, path] {
      action = [&, path]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(lt.loop, caps);
        if (!a.is_trg) throw input_error("not a twisted right gyrogroup");
        const CheckReport rep = check_equivalence_theorem(a, caps);
        emit(json, report_json(rep), [&] {
          for (const auto& note : rep.notes) std::cout << note << "\n";
          std::cout << "equivalence: " << (rep.ok ? "holds" : "VIOLATED") << "\n";
          for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
        });
        return rep.ok ? kExitOk : kExitPropertyFalse;
      };
    });
  }

  // deform
  {
    auto* cmd = app.add_subcommand("deform", "the ∘_ρ deformation of a right gyrogroup");
    auto path = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    cmd->add_option("file", *path)->required();
    cmd->add_option("--rho", *rho, "involutory automorphism in cycle notation")->required();
    cmd->callback([&, path, rho] {
      action = [&, path, rho]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const Perm r = parse_cycles(*rho, lt.loop.order, lt.loop.labels);
        const RightLoopTable d = deform_rho(lt.loop, r, caps);
        const std::string text = serialize_table(d, false);
        emit(json, {{"file", text}}, [&] { std::cout << text; });
        return kExitOk;
      };
    });
  }

  // project
  {
    auto* cmd = app.add_subcommand("project", "the projection right loop of a given order");
    auto n = std::make_shared<int>(0);
    cmd->add_option("n", *n, "order")->required();
    cmd->callback([&, n] {
      action = [&, n]() -> int {
        const std::string text = serialize_table(projection_loop(*n), false);
        emit(json, {{"file", text}}, [&] { std::cout << text; });
        return kExitOk;
      };
    });
  }

  // sh
  {
    auto* cmd = app.add_subcommand("sh", "the S_h twisted transversal of a gyrotransversal");
    auto path = std::make_shared<std::string>();
    auto subgroup = std::make_shared<std::string>(), transversal = std::make_shared<std::string>();
    auto invol = std::make_shared<std::string>();
    cmd->add_option("file", *path, "group file")->required();
    cmd->add_option("--subgroup", *subgroup, "comma-separated element labels")->required();
    cmd->add_option("--transversal", *transversal, "comma-separated element labels")->required();
    cmd->add_option("--involution", *invol, "involution label (must lie outside the center of H)")
        ->required();
    cmd->callback([&, path, subgroup, transversal, invol] {
      action = [&, path, subgroup, transversal, invol]() -> int {
        const LoadedTable lt = load_table_file(*path, caps);
        const FiniteGroupTable g = require_group(lt);
        const RightLoopTable gl = from_group(g);
        const TransversalAnalysis base =
            decompose(g, label_ids(gl, split_labels(*subgroup)),
                      label_ids(gl, split_labels(*transversal)), caps);
        const ShResult sh = s_h_transversal(base, label_id(gl, *invol), caps);
        const TwistedGyroAnalysis induced = induce_trg(sh.analysis, sh.eta_conjugation, caps);
        ordered_json j;
        j["s_h"] = ordered_json::array();
        for (int s : sh.analysis.transversal) j["s_h"].push_back(g.label(s));
        j["classification"] = to_string(classify_transversal(sh.analysis).cls);
        j["induced_gs_order"] = induced.idx.gs.order();
        j["notes"] = sh.report.notes;
        emit(json, j, [&] {
          std::cout << "S_h:";
          for (int s : sh.analysis.transversal) std::cout << " " << g.label(s);
          std::cout << "\n";
          for (const auto& note : sh.report.notes) std::cout << note << "\n";
          std::cout << "induced twisted right gyrogroup: G_S order " << induced.idx.gs.order()
                    << "\n";
        });
        return kExitOk;
      };
    });
  }

  // enumerate
  {
    auto* cmd = app.add_subcommand("enumerate", "exhaustively generate right loops of order n");
    auto n = std::make_shared<int>(0);
    auto filters = std::make_shared<std::vector<std::string>>();
    auto do_census = std::make_shared<bool>(false);
    auto do_print = std::make_shared<bool>(false);
    cmd->add_option("n", *n, "order")->required();
    cmd->add_option("--filter", *filters,
                    "predicates: unique-inverses f-inv trg ar tgg aip la");
    cmd->add_flag("--census", *do_census, "per-predicate-class counts");
    cmd->add_flag("--print", *do_print, "print each table");
    cmd->callback([&, n, filters, do_census, do_print] {
      action = [&, n, filters, do_census, do_print]() -> int {
        unsigned filter = 0;
        for (const auto& name : *filters) {
          bool known = false;
          for (const auto& [bit, pname] : predicate_names())
            if (pname == name) {
              filter |= bit;
              known = true;
            }
          if (!known) throw input_error("unknown filter '" + name + "'");
        }
        if (*do_census && filter == 0) {
          const CensusReport rep = census(*n, caps);
          ordered_json j;
          j["n"] = rep.n;
          j["total"] = rep.total;
          ordered_json classes = ordered_json::array();
          for (const auto& cls : rep.classes) {
            ordered_json c;
            std::string names;
            for (const auto& [bit, pname] : predicate_names())
              if (cls.mask & bit) names += (names.empty() ? "" : " ") + pname;
            if (names.empty()) names = "-";
            c["predicates"] = names;
            c["count"] = cls.count;
            if (*do_print && cls.witness) c["witness"] = serialize_table(*cls.witness, false);
            classes.push_back(c);
          }
          j["classes"] = classes;
          emit(json, j, [&] {
            std::cout << "total right loops: " << rep.total << "\n";
            for (const auto& c : j["classes"])
              std::cout << "class [" << c["predicates"].get<std::string>()
                        << "]: " << c["count"].get<long>() << "\n";
          });
          return kExitOk;
        }
        long count = 0;
        std::ostringstream tables;
        enumerate_right_loops(
            *n, filter,
            [&](const RightLoopTable& t) {
              ++count;
              if (*do_print) tables << serialize_table(t, false) << "\n";
            },
            caps);
        emit(json, {{"n", *n}, {"count", count}}, [&] {
          if (filter == 0)
            std::cout << "total right loops: " << count << "\n";
          else
            std::cout << "matching right loops: " << count << "\n";
          if (*do_print) std::cout << tables.str();
        });
        return kExitOk;
      };
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return action();
  } catch (const cap_error& e) {
    std::cerr << "error: cap: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const internal_error& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const input_error& e) {
    std::cerr << "error: input: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: input: " << e.what() << "\n";
    return kExitInputError;
  }
}
