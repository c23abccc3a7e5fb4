#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rloop/catalog.hpp"
#include "rloop/constructions.hpp"
#include "rloop/extension.hpp"

using namespace rloop;

namespace {

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

}  // namespace

TEST_CASE("extension of the example has order 60") {
  const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(example_table());
  REQUIRE(a.is_trg);
  const ExtensionGroup ext = build_extension(a);
  CHECK(ext.table.order == 60);
  CHECK(ext.table.id == 0);
  CHECK(ext.table.label(0) == "I*1");
}

TEST_CASE("extension of a group is that group") {
  const auto z4 = cyclic_group(4);
  const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(from_group(z4));
  const ExtensionGroup ext = build_extension(a);
  CHECK(ext.table.order == 4);
  CHECK(isomorphic(ext.table, z4));
}

TEST_CASE("extension of the projection loop") {
  const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(projection_loop(4));
  REQUIRE(a.is_trg);
  const ExtensionGroup ext = build_extension(a);
  CHECK(ext.table.order == 24);  // 3! * 4
}

TEST_CASE("extension cap") {
  Caps caps;
  caps.extension_cap = 30;
  const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(example_table());
  CHECK_THROWS_AS(build_extension(a, caps), cap_error);
}

TEST_CASE("decompose S3 along a transposition subgroup") {
  const auto s3 = symmetric_group_table(3);
  // Elements are labeled by bracket cycles; find ids by label.
  auto id_of = [&](const std::string& lab) {
    for (int i = 0; i < s3.order; ++i)
      if (s3.label(i) == lab) return i;
    FAIL("label not found: ", lab);
    return -1;
  };
  const int e = id_of("I"), t01 = id_of("[0.1]"), c012 = id_of("[0.1.2]"), c021 = id_of("[0.2.1]");
  const TransversalAnalysis ta = decompose(s3, {e, t01}, {e, c012, c021});
  CHECK(ta.induced_op.order == 3);
  CHECK(isomorphic(make_group_table(ta.induced_op.op, ta.induced_op.labels), cyclic_group(3)));
  // A3 is a subgroup, so the cocycle is trivial here.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ta.cocycle[static_cast<size_t>(i)][static_cast<size_t>(j)] == e);
}

TEST_CASE("decompose S3 along a transversal of transpositions") {
  const auto s3 = symmetric_group_table(3);
  auto id_of = [&](const std::string& lab) {
    for (int i = 0; i < s3.order; ++i)
      if (s3.label(i) == lab) return i;
    FAIL("label not found: ", lab);
    return -1;
  };
  const int e = id_of("I"), t01 = id_of("[0.1]"), t02 = id_of("[0.2]"), t12 = id_of("[1.2]");
  const TransversalAnalysis ta = decompose(s3, {e, t01}, {e, t02, t12});
  // The induced operation is the order-3 projection right loop.
  CHECK(ta.induced_op.op == projection_loop(3).op);
  bool nontrivial = false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) nontrivial |= ta.cocycle[static_cast<size_t>(i)][static_cast<size_t>(j)] != e;
  CHECK(nontrivial);
  const TransversalClassification cls = classify_transversal(ta);
  CHECK(cls.inverse_closed);
  CHECK(cls.identity_eta_works);
}

TEST_CASE("trivial subgroup gives back the whole group") {
  const auto v4 = klein_four();
  std::vector<int> all{0, 1, 2, 3};
  const TransversalAnalysis ta = decompose(v4, {v4.id}, all);
  CHECK(ta.induced_op.op == from_group(v4).op);
  CHECK(classify_transversal(ta).cls == TransversalClass::Gyrotransversal);
  const TwistedGyroAnalysis back = induce_trg(ta, ta.eta_candidates.front());
  CHECK(back.is_trg);
  CHECK(back.loop.op == from_group(v4).op);
}

TEST_CASE("decompose rejects bad inputs") {
  const auto s3 = symmetric_group_table(3);
  auto id_of = [&](const std::string& lab) {
    for (int i = 0; i < s3.order; ++i)
      if (s3.label(i) == lab) return i;
    FAIL("label not found: ", lab);
    return -1;
  };
  const int e = id_of("I"), t01 = id_of("[0.1]"), t02 = id_of("[0.2]"), c012 = id_of("[0.1.2]");
  CHECK_THROWS_WITH_AS(decompose(s3, {e, t01, t02}, {e, c012}), doctest::Contains("subgroup"),
                       input_error);
  CHECK_THROWS_WITH_AS(decompose(s3, {e, t01}, {e, t01, c012}), doctest::Contains("coset"),
                       input_error);
  CHECK_THROWS_WITH_AS(decompose(s3, {e, t01}, {t02, c012}), doctest::Contains("identity"),
                       input_error);
}

TEST_CASE("embedded transversal of the example extension is twisted-only") {
  const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(example_table());
  const ExtensionGroup ext = build_extension(a);
  const TransversalAnalysis ta = decompose(ext.table, ext.embed_h, ext.embed_s);
  const TransversalClassification cls = classify_transversal(ta);
  CHECK(cls.inverse_closed);
  CHECK_FALSE(cls.identity_eta_works);
  CHECK(cls.nontrivial_eta_count > 0);
  CHECK(cls.cls == TransversalClass::TwistedOnly);
  for (size_t i = 0; i < ta.eta_candidates.size(); ++i)
    CHECK_FALSE(cls.candidate_holds_at_identity[i]);
}

TEST_CASE("round trip through the extension is the identity on tables") {
  for (const RightLoopTable& t :
       {example_table(), projection_loop(4), from_group(cyclic_group(6))}) {
    const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(t);
    REQUIRE(a.is_trg);
    const ExtensionGroup ext = build_extension(a);
    const TransversalAnalysis ta = decompose(ext.table, ext.embed_h, ext.embed_s);
    // The base eta, transported to subgroup indices, must be a candidate.
    REQUIRE(ta.eta_candidates_computed);
    CHECK(std::find(ta.eta_candidates.begin(), ta.eta_candidates.end(), a.eta_on_gs) !=
          ta.eta_candidates.end());
    const TwistedGyroAnalysis back = induce_trg(ta, a.eta_on_gs);
    CHECK(back.loop.op == t.op);
  }
}

TEST_CASE("induce_trg rejects an incompatible eta") {
  const TwistedGyroAnalysis a = is_twisted_right_gyrogroup(from_group(klein_four()));
  const ExtensionGroup ext = build_extension(a);
  const TransversalAnalysis ta = decompose(ext.table, ext.embed_h, ext.embed_s);
  std::vector<int> bogus{1, 0};  // not even the right size
  CHECK_THROWS_AS(induce_trg(ta, bogus), input_error);
}
