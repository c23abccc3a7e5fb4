#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rloop/permgroup.hpp"

using namespace rloop;

namespace {

// Independent closure oracle: saturate by pairwise products, in a shuffled
// iteration order, until stable.
std::set<Perm> saturate(int degree, const std::vector<Perm>& gens, std::mt19937& rng) {
  std::set<Perm> s{Perm::identity(degree)};
  for (const auto& g : gens) s.insert(g);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> cur(s.begin(), s.end());
    std::shuffle(cur.begin(), cur.end(), rng);
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(compose(a, b)).second) changed = true;
  }
  return s;
}

Perm random_perm(std::mt19937& rng, int degree, bool fix_zero) {
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin() + (fix_zero ? 1 : 0), img.end(), rng);
  return Perm(img);
}

}  // namespace

TEST_CASE("closure of the order-12 example generators") {
  const std::vector<Perm> gens{parse_cycles("(1 2 3)", 5), parse_cycles("(1 2)(3 4)", 5)};
  const PermGroupData g = close_generators(5, gens);
  CHECK(g.order() == 12);
  const auto prof = order_profile(g);
  CHECK(prof.at(1) == 1);
  CHECK(prof.at(2) == 3);
  CHECK(prof.at(3) == 8);
  CHECK(is_transitive_on(g, {1, 2, 3, 4}));
  CHECK(involutions(g).size() == 3);
}

TEST_CASE("closure of no generators is trivial") {
  const PermGroupData g = close_generators(4, {});
  CHECK(g.order() == 1);
  CHECK(g.elements[0].is_identity());
  CHECK_FALSE(is_transitive_on(g, {1, 2}));
  CHECK(involutions(g).empty());
}

TEST_CASE("closure reaching the symmetric group on four points") {
  const PermGroupData g =
      close_generators(5, {parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4)", 5)});
  CHECK(g.order() == 24);
}

TEST_CASE("closure equals the saturation oracle") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Perm> gens{random_perm(rng, 5, true), random_perm(rng, 5, true)};
    const PermGroupData g = close_generators(5, gens);
    const std::set<Perm> oracle = saturate(5, gens, rng);
    CHECK(g.order() == static_cast<long>(oracle.size()));
    CHECK(std::equal(g.elements.begin(), g.elements.end(), oracle.begin(), oracle.end()));
  }
}

TEST_CASE("closure cap") {
  Caps caps;
  caps.closure_cap = 100;
  CHECK_THROWS_AS(
      close_generators(6, {parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)}, caps),
      cap_error);
  try {
    close_generators(6, {parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)}, caps);
  } catch (const cap_error& e) {
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
}

TEST_CASE("closure orders divide the symmetric group order") {
  std::mt19937 rng(53);
  long factorial = 1;
  for (int i = 2; i <= 5; ++i) factorial *= i;
  for (int trial = 0; trial < 40; ++trial) {
    const PermGroupData g =
        close_generators(5, {random_perm(rng, 5, false), random_perm(rng, 5, false)});
    CHECK(factorial % g.order() == 0);
  }
}

TEST_CASE("canonical element order is sorted and searchable") {
  const PermGroupData g =
      close_generators(4, {parse_cycles("(0 1 2 3)", 4)});
  CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
  for (int i = 0; i < static_cast<int>(g.order()); ++i)
    CHECK(g.index_of(g.elements[static_cast<size_t>(i)]) == i);
  CHECK(g.index_of(parse_cycles("(0 1)", 4)) == -1);
  CHECK(g.elements[0].is_identity());
}

TEST_CASE("transitivity") {
  const PermGroupData g = close_generators(4, {parse_cycles("(1 2)", 4)});
  CHECK_FALSE(is_transitive_on(g, {1, 2, 3}));
  CHECK(is_transitive_on(g, {1, 2}));
  CHECK_THROWS_AS(is_transitive_on(g, {}), input_error);
}

TEST_CASE("involutions of a generated transposition") {
  const PermGroupData g = close_generators(3, {parse_cycles("(1 2)", 3)});
  const auto inv = involutions(g);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == parse_cycles("(1 2)", 3));
}

TEST_CASE("centralizers by brute scan") {
  // Transposition inside S5 (acting on points 1..5 of degree 6): 2 * 3! = 12.
  const PermGroupData s5 =
      close_generators(6, {parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5)", 6)});
  REQUIRE(s5.order() == 120);
  CHECK(centralizer(s5, parse_cycles("(1 2)", 6)).order() == 12);

  const PermGroupData a4 =
      close_generators(5, {parse_cycles("(1 2 3)", 5), parse_cycles("(1 2)(3 4)", 5)});
  CHECK(centralizer(a4, parse_cycles("(1 2)(3 4)", 5)).order() == 4);
  CHECK(centralizer(a4, Perm::identity(5)) == a4);
  CHECK_THROWS_AS(centralizer(a4, parse_cycles("(1 2)", 5)), input_error);
}
