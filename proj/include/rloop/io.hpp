#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rloop/caps.hpp"
#include "rloop/error.hpp"
#include "rloop/grouptable.hpp"
#include "rloop/rightloop.hpp"

namespace rloop {

// Text table format (UTF-8, LF, '#' comments):
//   elements: 1 2 3 4 5
//   identity: 1
//   type: group          (optional; "loop" is the default)
//   table:
//   1 2 3 4 5
//   ...                  (n rows of n labels, row = left operand)
struct LoadedTable {
  RightLoopTable loop;
  bool is_group = false;
  std::optional<FiniteGroupTable> group;  // set when is_group
};

inline LoadedTable parse_table_text(std::string_view text, const Caps& caps = {}) {
  std::vector<std::string> labels;
  std::string identity_label;
  bool have_identity = false;
  bool is_group = false;
  std::vector<std::string> cells;

  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool in_table = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto toks = split(line);
    if (toks.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (!in_table) {
      if (toks[0] == "elements:") {
        labels.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "identity:") {
        if (toks.size() != 2) throw input_error("identity: expects one label" + where);
        identity_label = toks[1];
        have_identity = true;
      } else if (toks[0] == "type:") {
        if (toks.size() != 2 || (toks[1] != "group" && toks[1] != "loop"))
          throw input_error("type: expects 'group' or 'loop'" + where);
        is_group = toks[1] == "group";
      } else if (toks[0] == "table:") {
        if (toks.size() != 1) throw input_error("table: takes no arguments" + where);
        in_table = true;
      } else {
        throw input_error("unknown directive '" + toks[0] + "'" + where);
      }
    } else {
      cells.insert(cells.end(), toks.begin(), toks.end());
    }
  }

  const int n = static_cast<int>(labels.size());
  if (n == 0) throw input_error("missing 'elements:' line");
  if (!have_identity) throw input_error("missing 'identity:' line");
  if (!in_table) throw input_error("missing 'table:' section");
  for (const auto& lab : labels)
    for (char c : lab)
      if (c == '(' || c == ')' || c == ',')
        throw input_error("label '" + lab + "' contains a reserved character");

  auto index_of = [&](const std::string& lab) -> int {
    for (int i = 0; i < n; ++i)
      if (labels[static_cast<size_t>(i)] == lab) return i;
    return -1;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
        throw input_error("duplicate element label '" + labels[static_cast<size_t>(i)] + "'");
  const int identity = index_of(identity_label);
  if (identity < 0) throw input_error("identity '" + identity_label + "' is not an element");
  if (static_cast<int>(cells.size()) != n * n)
    throw input_error("table has " + std::to_string(cells.size()) + " entries, expected " +
                      std::to_string(n * n));

  std::vector<std::vector<int>> raw(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::string& cell = cells[static_cast<size_t>(x * n + y)];
      const int v = index_of(cell);
      if (v < 0) throw input_error("table entry '" + cell + "' is not an element");
      raw[static_cast<size_t>(x)][static_cast<size_t>(y)] = v;
    }

  LoadedTable out;
  out.is_group = is_group;
  out.loop = validate_table(raw, identity, labels);
  if (is_group) {
    // Associativity is verified on load; reuse the relabeled internal table.
    out.group = make_group_table(out.loop.op, out.loop.labels, caps);
    if (out.group->id != 0) throw internal_error("group identity must be element 0 after relabel");
  }
  return out;
}

inline LoadedTable load_table_file(const std::string& path, const Caps& caps = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table_text(buf.str(), caps);
}

inline std::string serialize_table(const RightLoopTable& t, bool as_group) {
  std::string out = "elements:";
  for (const auto& lab : t.labels) out += " " + lab;
  out += "\nidentity: " + t.labels[0] + "\n";
  if (as_group) out += "type: group\n";
  out += "table:\n";
  for (int x = 0; x < t.order; ++x) {
    for (int y = 0; y < t.order; ++y) {
      if (y > 0) out += " ";
      out += t.labels[static_cast<size_t>(t.at(x, y))];
    }
    out += "\n";
  }
  return out;
}

inline std::string serialize_table(const FiniteGroupTable& g) {
  return serialize_table(from_group(g), true);
}

}  // namespace rloop
