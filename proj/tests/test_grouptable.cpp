#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "rloop/catalog.hpp"
#include "rloop/grouptable.hpp"

using namespace rloop;

namespace {

// Oracle: every bijection fixing the identity, checked directly. Exponential,
// fine up to order 8.
long brute_automorphism_count(const FiniteGroupTable& g) {
  std::vector<int> img(static_cast<size_t>(g.order));
  std::iota(img.begin(), img.end(), 0);
  // Identity of catalog tables is element 0; keep it fixed and permute the rest.
  REQUIRE(g.id == 0);
  long count = 0;
  std::sort(img.begin() + 1, img.end());
  do {
    bool hom = true;
    for (int x = 0; x < g.order && hom; ++x)
      for (int y = 0; y < g.order && hom; ++y)
        hom = img[static_cast<size_t>(g.at(x, y))] ==
              g.at(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]);
    if (hom) ++count;
  } while (std::next_permutation(img.begin() + 1, img.end()));
  return count;
}

}  // namespace

TEST_CASE("group table validation") {
  auto z3 = cyclic_group(3);
  CHECK(z3.id == 0);
  CHECK(z3.inv[1] == 2);

  auto bad = z3.mul;
  bad[1][2] = 1;  // break bijectivity/associativity
  CHECK_THROWS_AS(make_group_table(bad), input_error);

  std::vector<std::vector<int>> no_id{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(make_group_table(no_id), input_error);
}

TEST_CASE("table cap") {
  Caps caps;
  caps.table_cap = 4;
  CHECK_THROWS_AS(make_group_table(cyclic_group(5).mul, {}, caps), cap_error);
}

TEST_CASE("centers") {
  CHECK(center(cyclic_group(6)).size() == 6);
  CHECK(center(symmetric_group_table(3)) == std::vector<int>{0});
  CHECK(center(alternating_four_table()) == std::vector<int>{0});
  CHECK(center(quaternion_group()).size() == 2);
}

TEST_CASE("element orders and profiles") {
  const auto a4 = alternating_four_table();
  const auto prof = order_profile(a4);
  CHECK(prof.at(1) == 1);
  CHECK(prof.at(2) == 3);
  CHECK(prof.at(3) == 8);
}

TEST_CASE("automorphism counts match the brute oracle") {
  CHECK(automorphisms(cyclic_group(2)).size() == 1);
  CHECK(automorphisms(cyclic_group(4)).size() == 2);
  CHECK(automorphisms(symmetric_group_table(3)).size() == 6);

  for (const auto& g : {cyclic_group(4), cyclic_group(6), klein_four(), symmetric_group_table(3),
                        quaternion_group(), dihedral_group_table(4),
                        direct_product(klein_four(), cyclic_group(2))}) {
    const auto autos = automorphisms(g);
    CHECK(static_cast<long>(autos.size()) == brute_automorphism_count(g));
    for (const auto& phi : autos) {
      CHECK(phi.apply(g.id) == g.id);
      bool hom = true;
      for (int x = 0; x < g.order && hom; ++x)
        for (int y = 0; y < g.order && hom; ++y)
          hom = phi.apply(g.at(x, y)) == g.at(phi.apply(x), phi.apply(y));
      CHECK(hom);
    }
  }
}

TEST_CASE("automorphism cap") {
  Caps caps;
  caps.aut_cap = 10;
  CHECK_THROWS_AS(automorphisms(cyclic_group(12), caps), cap_error);
}

TEST_CASE("isomorphism basics") {
  CHECK_FALSE(isomorphic(cyclic_group(4), klein_four()));
  CHECK(isomorphic(symmetric_group_table(3), dihedral_group_table(3)));
  CHECK_FALSE(isomorphic(cyclic_group(4), cyclic_group(5)));
  CHECK(isomorphic(alternating_four_table(),
                   to_group_table(close_generators(
                       5, {parse_cycles("(1 2 3)", 5), parse_cycles("(1 2)(3 4)", 5)}))));
  CHECK(isomorphic(symmetric_group_table(4),
                   to_group_table(close_generators(
                       5, {parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4)", 5)}))));
}

TEST_CASE("isomorphism is reflexive and symmetric; profiles are invariant") {
  const std::vector<FiniteGroupTable> pool{
      cyclic_group(1),  cyclic_group(4),           klein_four(),
      cyclic_group(6),  symmetric_group_table(3),  cyclic_group(8),
      quaternion_group(), dihedral_group_table(4), alternating_four_table(),
      dihedral_group_table(6), cyclic_group(12),   symmetric_group_table(4)};
  for (const auto& a : pool) {
    CHECK(isomorphic(a, a));
    for (const auto& b : pool) {
      const bool ab = isomorphic(a, b);
      CHECK(ab == isomorphic(b, a));
      if (ab) CHECK(order_profile(a) == order_profile(b));
    }
  }
}

TEST_CASE("isomorphism cap") {
  Caps caps;
  caps.iso_cap = 10;
  CHECK_THROWS_AS(isomorphic(cyclic_group(12), cyclic_group(12), caps), cap_error);
}

TEST_CASE("iso type guesses") {
  CHECK(iso_type_guess(alternating_four_table()) == "A4");
  CHECK(iso_type_guess(symmetric_group_table(4)) == "S4");
  CHECK(iso_type_guess(cyclic_group(6)) == "Z6");
  CHECK(iso_type_guess(klein_four()) == "Z2xZ2");
  CHECK(iso_type_guess(quaternion_group()) == "Q8");
}

TEST_CASE("subgroup recognition and spans") {
  const auto s3 = symmetric_group_table(3);
  CHECK(is_subgroup(s3, {s3.id}));
  const auto full = span_closure(s3, generating_sequence(s3));
  CHECK(static_cast<int>(full.size()) == s3.order);
  CHECK(is_subgroup(s3, full));
}
