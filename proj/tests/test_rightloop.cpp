#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "rloop/catalog.hpp"
#include "rloop/rightloop.hpp"

using namespace rloop;

namespace {

// The order-5 table with unique inverses, 0-indexed, identity 0.
RightLoopTable example_table() {
  return validate_table(
      {
          {0, 1, 2, 3, 4},
          {1, 2, 0, 2, 2},
          {2, 0, 1, 1, 1},
          {3, 3, 3, 0, 3},
          {4, 4, 4, 4, 0},
      },
      0, {"1", "2", "3", "4", "5"});
}

// Random valid table: each column is a random permutation sending 0 to the
// column label.
RightLoopTable random_right_loop(std::mt19937& rng, int n) {
  std::vector<std::vector<int>> raw(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x) raw[static_cast<size_t>(x)][0] = x;
  for (int y = 1; y < n; ++y) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != y) rest.push_back(v);
    std::shuffle(rest.begin(), rest.end(), rng);
    raw[0][static_cast<size_t>(y)] = y;
    for (int x = 1; x < n; ++x)
      raw[static_cast<size_t>(x)][static_cast<size_t>(y)] = rest[static_cast<size_t>(x - 1)];
  }
  return validate_table(raw, 0);
}

}  // namespace

TEST_CASE("golden table validates with the right inverses") {
  const RightLoopTable t = example_table();
  CHECK(t.order == 5);
  // Row is the left operand: 2∘4 = 3 in display labels.
  CHECK(t.at(1, 3) == 2);
  CHECK(t.has_unique_inverses());
  // 2' = 3, 3' = 2, 4' = 4, 5' = 5 in display labels (indices 1..4).
  CHECK(t.inverse_of(0) == 0);
  CHECK(t.inverse_of(1) == 2);
  CHECK(t.inverse_of(2) == 1);
  CHECK(t.inverse_of(3) == 3);
  CHECK(t.inverse_of(4) == 4);
  CHECK_FALSE(is_loop(t));  // the row of element 2 repeats values
}

TEST_CASE("group tables validate") {
  const RightLoopTable z3 = from_group(cyclic_group(3));
  CHECK(z3.has_unique_inverses());
  CHECK(is_loop(z3));
}

TEST_CASE("validation failures carry labels") {
  // repeated entry in one column
  std::vector<std::vector<int>> bad{
      {0, 1, 2},
      {1, 2, 1},
      {2, 2, 0},
  };
  CHECK_THROWS_WITH_AS(validate_table(bad, 0), doctest::Contains("column"), input_error);

  std::vector<std::vector<int>> bad_id{
      {0, 2, 1},
      {1, 2, 0},
      {2, 0, 1},
  };
  CHECK_THROWS_WITH_AS(validate_table(bad_id, 0), doctest::Contains("identity axiom"), input_error);
}

TEST_CASE("identity relabeling puts e at index 0") {
  // Z3 written with identity as the last element.
  std::vector<std::vector<int>> raw{
      {1, 2, 0},
      {2, 0, 1},
      {0, 1, 2},
  };
  const RightLoopTable t = validate_table(raw, 2, {"a", "b", "e"});
  CHECK(t.labels[0] == "e");
  for (int y = 0; y < 3; ++y) CHECK(t.at(0, y) == y);
  for (int x = 0; x < 3; ++x) CHECK(t.at(x, 0) == x);
}

TEST_CASE("right division") {
  const RightLoopTable t = example_table();
  // s∘3 = 2 has the unique solution s = 3 (indices: s∘2 = 1 -> s = 2).
  CHECK(right_divide(t, 1, 2) == 2);
  for (int b = 0; b < t.order; ++b) CHECK(right_divide(t, b, 0) == b);

  const RightLoopTable z4 = from_group(cyclic_group(4));
  CHECK(right_divide(z4, 0, 1) == 3);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RightLoopTable r = random_right_loop(rng, 5);
    for (int x = 0; x < r.order; ++x)
      for (int y = 0; y < r.order; ++y) CHECK(right_divide(r, r.at(x, y), y) == x);
  }
}

TEST_CASE("loop detection") {
  CHECK(is_loop(from_group(symmetric_group_table(3))));
  // projection-style table: rows constant off the diagonal
  std::vector<std::vector<int>> proj{
      {0, 1, 2, 3},
      {1, 0, 1, 1},
      {2, 2, 0, 2},
      {3, 3, 3, 0},
  };
  CHECK_FALSE(is_loop(validate_table(proj, 0)));
}

TEST_CASE("left inverse equals two-sided inverse when the latter exists") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const RightLoopTable r = random_right_loop(rng, 5);
    if (r.has_unique_inverses()) CHECK(*r.two_sided_inverse == r.left_inverse);
  }
}

TEST_CASE("AIP and left alternative") {
  const RightLoopTable v4 = from_group(klein_four());
  CHECK(has_aip(v4));
  CHECK(has_left_alternative(v4));

  const RightLoopTable z6 = from_group(cyclic_group(6));
  CHECK(has_aip(z6));
  CHECK(has_left_alternative(z6));

  const RightLoopTable t = example_table();
  CHECK(has_aip(t));
  CHECK_FALSE(has_left_alternative(t));  // (2∘2)∘4 = 2 but 2∘(2∘4) = 1

  // AIP needs unique inverses.
  std::vector<std::vector<int>> no_ui{
      {0, 1, 2},
      {1, 2, 0},
      {2, 0, 1},
  };
  RightLoopTable z3 = validate_table(no_ui, 0);
  CHECK(z3.has_unique_inverses());
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const RightLoopTable r = random_right_loop(rng, 4);
    if (!r.has_unique_inverses()) {
      CHECK_THROWS_AS(has_aip(r), input_error);
      break;
    }
  }
}

TEST_CASE("validation accepts exactly the tables satisfying the axioms") {
  // Oracle: identity row/column are identity maps and every column is a
  // permutation. Random 3x3 tables, all entries free.
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> entry(0, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::vector<int>> raw(3, std::vector<int>(3));
    for (auto& row : raw)
      for (auto& v : row) v = entry(rng);
    bool expect = true;
    for (int y = 0; y < 3 && expect; ++y) expect = raw[0][static_cast<size_t>(y)] == y;
    for (int x = 0; x < 3 && expect; ++x) expect = raw[static_cast<size_t>(x)][0] == x;
    for (int y = 0; y < 3 && expect; ++y) {
      std::vector<bool> seen(3, false);
      for (int x = 0; x < 3 && expect; ++x) {
        expect = !seen[static_cast<size_t>(raw[static_cast<size_t>(x)][static_cast<size_t>(y)])];
        seen[static_cast<size_t>(raw[static_cast<size_t>(x)][static_cast<size_t>(y)])] = true;
      }
    }
    bool accepted = true;
    try {
      validate_table(raw, 0);
    } catch (const input_error&) {
      accepted = false;
    }
    CHECK(accepted == expect);
  }
}

TEST_CASE("right translations are permutations") {
  const RightLoopTable t = example_table();
  for (int y = 0; y < t.order; ++y) {
    const Perm r = right_translation(t, y);
    CHECK(r.apply(0) == y);
    for (int x = 0; x < t.order; ++x) CHECK(r.apply(x) == t.at(x, y));
  }
}
