#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rloop/error.hpp"

namespace rloop {

// Permutation of the points {0, ..., degree-1}.
//
// Composition is apply-left-first everywhere in this library:
//   (p * q)(x) = q(p(x))
// so p * q means "apply p, then q". This single convention is asserted by a
// dedicated unit test; nothing else in the codebase restates it.
//
// Images are stored as bytes, which caps the degree at 255. Every search cap
// in Caps keeps degrees far below that.
class Perm {
public:
  static constexpr int max_degree = 255;

  Perm() = default;

  static Perm identity(int degree) {
    check_degree(degree);
    Perm p;
    p.img_.resize(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) p.img_[static_cast<size_t>(i)] = static_cast<char>(i);
    return p;
  }

  explicit Perm(const std::vector<int>& images) {
    check_degree(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    img_.resize(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<size_t>(v)])
        throw input_error("permutation image list is not a bijection");
      seen[static_cast<size_t>(v)] = true;
      img_[i] = static_cast<char>(v);
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return static_cast<unsigned char>(img_[static_cast<size_t>(x)]); }
  int operator()(int x) const { return apply(x); }
  bool fixes(int x) const { return apply(x) == x; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (apply(i) != i) return false;
    return true;
  }

  std::vector<int> images() const {
    std::vector<int> v(static_cast<size_t>(degree()));
    for (int i = 0; i < degree(); ++i) v[static_cast<size_t>(i)] = apply(i);
    return v;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[static_cast<size_t>(apply(i))] = static_cast<char>(i);
    return r;
  }

  int order() const {
    int result = 1;
    std::vector<bool> seen(static_cast<size_t>(degree()), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = apply(j)) {
        seen[static_cast<size_t>(j)] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  bool is_involution() const { return !is_identity() && compose(*this, *this).is_identity(); }

  friend Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw input_error("compose: degree mismatch");
    Perm r;
    r.img_.resize(p.img_.size());
    for (int i = 0; i < p.degree(); ++i)
      r.img_[static_cast<size_t>(i)] = static_cast<char>(q.apply(p.apply(i)));
    return r;
  }

  friend Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  // Raw image bytes; doubles as a deterministic sort/hash key.
  const std::string& key() const { return img_; }

private:
  static void check_degree(int d) {
    if (d < 0 || d > max_degree) throw input_error("permutation degree out of range");
  }

  std::string img_;
};

// Nontrivial cycles, each starting at its least point, ordered by least point.
inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || p.fixes(i)) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = p.apply(j)) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

// Cycle notation over element labels; fixed points omitted, identity is "I".
// With no labels, points print as 0-based indices. The compact form separates
// entries with commas and no spaces, usable as a whitespace-free token.
inline std::string format_cycles(const Perm& p, std::span<const std::string> labels = {},
                                 bool compact = false) {
  const auto cycs = cycles(p);
  if (cycs.empty()) return "I";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out += compact ? "," : " ";
      if (labels.empty())
        out += std::to_string(cyc[i]);
      else
        out += labels[static_cast<size_t>(cyc[i])];
    }
    out += ')';
  }
  return out;
}

// Cycle notation rendered with '[' ']' '.' only, e.g. "[1.2][3.4]". Safe to
// use as an element label in table files, where '(' ')' ',' are reserved for
// cycle parsing.
inline std::string format_cycles_bracket(const Perm& p, std::span<const std::string> labels = {}) {
  const auto cycs = cycles(p);
  if (cycs.empty()) return "I";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '[';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out += '.';
      if (labels.empty())
        out += std::to_string(cyc[i]);
      else
        out += labels[static_cast<size_t>(cyc[i])];
    }
    out += ']';
  }
  return out;
}

// Parses cycle notation: "I", "()", or "(a b c)(d e)". Entries may be
// separated by spaces or commas. With no labels, entries are 0-based indices.
inline Perm parse_cycles(std::string_view text, int degree,
                         std::span<const std::string> labels = {}) {
  auto lookup = [&](const std::string& token) -> int {
    if (labels.empty()) {
      size_t pos = 0;
      int v = -1;
      try {
        v = std::stoi(token, &pos);
      } catch (...) {
        throw input_error("bad point '" + token + "' in cycle notation");
      }
      if (pos != token.size() || v < 0 || v >= degree)
        throw input_error("bad point '" + token + "' in cycle notation");
      return v;
    }
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == token) return static_cast<int>(i);
    throw input_error("unknown element '" + token + "' in cycle notation");
  };

  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> moved(static_cast<size_t>(degree), false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "I") == 0) {
    ++i;
    skip_ws();
    if (i != text.size()) throw input_error("trailing characters after 'I'");
    return Perm(img);
  }
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw input_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        cyc.push_back(lookup(token));
        token.clear();
      }
    };
    for (; i < text.size() && text[i] != ')'; ++i) {
      const char c = text[i];
      if (c == ' ' || c == '\t' || c == ',')
        flush();
      else
        token += c;
    }
    if (i == text.size()) throw input_error("unterminated cycle");
    ++i;  // ')'
    flush();
    any = true;
    if (cyc.size() < 2) continue;  // "()" and one-entry cycles are the identity
    for (size_t k = 0; k < cyc.size(); ++k) {
      const int from = cyc[k];
      const int to = cyc[(k + 1) % cyc.size()];
      if (moved[static_cast<size_t>(from)])
        throw input_error("point repeated across cycles");
      moved[static_cast<size_t>(from)] = true;
      img[static_cast<size_t>(from)] = to;
    }
  }
  if (!any) throw input_error("empty cycle notation");
  return Perm(img);
}

}  // namespace rloop
