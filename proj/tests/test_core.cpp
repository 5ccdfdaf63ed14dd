#include <algorithm>
#include <vector>

#include "doctest.h"
#include "nomination/core.hpp"
#include "nomination/errors.hpp"
#include "nomination/generators.hpp"

using namespace nomination;

namespace {

NominationScheme scheme_of(const Election& e,
                           const std::vector<std::string>& names) {
  NominationScheme scheme;
  for (const std::string& name : names) {
    scheme.push_back(e.candidate_index(name));
  }
  return scheme;
}

}  // namespace

TEST_CASE("build_election assembles indices and inverse ranks") {
  Election e = named_fixture("two-party-cycle");
  CHECK(e.candidate_count() == 4);
  CHECK(e.party_count() == 2);
  CHECK(e.voter_count() == 3);
  CHECK(e.candidate_index("a2") == 1);
  CHECK(e.candidate_index("nobody") == -1);
  CHECK(e.party_index("B") == 1);
  CHECK(e.party_index("Z") == -1);
  CHECK(e.party_of[e.candidate_index("b2")] == 1);
  CHECK(e.party_members[0] ==
        std::vector<int>{e.candidate_index("a1"), e.candidate_index("a2")});

  const Vote& v = e.votes[0];
  CHECK(v.top() == e.candidate_index("a1"));
  CHECK(v.last() == e.candidate_index("b2"));
  CHECK(v.prefers(e.candidate_index("b1"), e.candidate_index("a2")));
  for (int c = 0; c < e.candidate_count(); ++c) {
    CHECK(v.ranking[v.rank_of[c]] == c);
  }
}

TEST_CASE("build_election rejects malformed inputs") {
  CHECK_THROWS_AS(build_election({}, {}, {}), input_error);
  CHECK_THROWS_AS(build_election({"x", "x"}, {{"P", {"x"}}}, {}),
                  input_error);
  CHECK_THROWS_AS(
      build_election({"x", "y"}, {{"P", {"x", "y"}}, {"Q", {"y"}}}, {}),
      input_error);
  CHECK_THROWS_AS(build_election({"x"}, {{"P", {"x", "z"}}}, {}),
                  input_error);
  CHECK_THROWS_AS(build_election({"x", "y"}, {{"P", {"x"}}}, {}),
                  input_error);
  CHECK_THROWS_AS(
      build_election({"x", "y"}, {{"P", {"x"}}, {"Q", {"y"}}}, {{"x"}}),
      input_error);
  CHECK_THROWS_AS(build_election({"x", "y"}, {{"P", {"x"}}, {"Q", {"y"}}},
                                 {{"x", "x"}}),
                  input_error);
  CHECK_THROWS_AS(build_election({"x", "y"}, {{"P", {"x"}}, {"P", {"y"}}},
                                 {}),
                  input_error);
}

TEST_CASE("reduced scores and winners over the two-party cycle") {
  Election e = named_fixture("two-party-cycle");
  struct Row {
    const char* a;
    const char* b;
    int score_a;
    int score_b;
    int winner;
  };
  const Row rows[] = {
      {"a1", "b1", 2, 1, 0},
      {"a1", "b2", 1, 2, 1},
      {"a2", "b1", 1, 2, 1},
      {"a2", "b2", 3, 0, 0},
  };
  for (const Row& row : rows) {
    NominationScheme scheme = scheme_of(e, {row.a, row.b});
    CHECK(reduced_scores(e, scheme) == ScoreVector{row.score_a, row.score_b});
    CHECK(winners(e, scheme) == std::vector<int>{row.winner});
  }
}

TEST_CASE("nash deviations chase the two-party cycle") {
  Election e = named_fixture("two-party-cycle");
  CHECK(nash_deviations(e, scheme_of(e, {"a1", "b1"})) ==
        std::vector<Deviation>{{1, e.candidate_index("b2")}});
  CHECK(nash_deviations(e, scheme_of(e, {"a1", "b2"})) ==
        std::vector<Deviation>{{0, e.candidate_index("a2")}});
  CHECK(nash_deviations(e, scheme_of(e, {"a2", "b1"})) ==
        std::vector<Deviation>{{0, e.candidate_index("a1")}});
  CHECK(nash_deviations(e, scheme_of(e, {"a2", "b2"})) ==
        std::vector<Deviation>{{1, e.candidate_index("b1")}});
  for (const char* a : {"a1", "a2"}) {
    for (const char* b : {"b1", "b2"}) {
      CHECK_FALSE(is_nash_equilibrium(e, scheme_of(e, {a, b})));
    }
  }
}

TEST_CASE("winning parties never deviate") {
  Election e = named_fixture("aligned-not-single-peaked");
  NominationScheme scheme = scheme_of(e, {"a1", "b"});
  CHECK(winners(e, scheme) == std::vector<int>{0});
  CHECK(nash_deviations(e, scheme).empty());
  CHECK(is_nash_equilibrium(e, scheme));
}

TEST_CASE("validate_scheme rejects wrong nominees") {
  Election e = named_fixture("two-party-cycle");
  CHECK_THROWS_AS(validate_scheme(e, {0}), input_error);
  CHECK_THROWS_AS(validate_scheme(e, {0, 0}), input_error);
  CHECK_THROWS_AS(validate_scheme(e, {-1, 2}), input_error);
  CHECK_THROWS_AS(validate_scheme(e, {0, 4}), input_error);
  CHECK_NOTHROW(validate_scheme(e, {0, 2}));
}

TEST_CASE("zero voters make every party a winner") {
  Election e = build_election({"x", "y"}, {{"P", {"x"}}, {"Q", {"y"}}}, {});
  NominationScheme scheme{0, 1};
  CHECK(reduced_scores(e, scheme) == ScoreVector{0, 0});
  CHECK(winners(e, scheme) == std::vector<int>{0, 1});
  CHECK(is_nash_equilibrium(e, scheme));
}

TEST_CASE("ties produce co-winners in ascending party order") {
  Election e = build_election(
      {"x", "y"}, {{"P", {"x"}}, {"Q", {"y"}}},
      {{"x", "y"}, {"y", "x"}});
  CHECK(winners(e, {0, 1}) == std::vector<int>{0, 1});
  CHECK(is_nash_equilibrium(e, {0, 1}));
}
