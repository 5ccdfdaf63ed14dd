#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "nomination/core.hpp"
#include "nomination/equilibrium.hpp"
#include "nomination/errors.hpp"
#include "nomination/generators.hpp"
#include "nomination/oracle.hpp"
#include "nomination/president.hpp"
#include "nomination/recognition.hpp"

using namespace nomination;

TEST_CASE("possible president on the two-party cycle") {
  Election e = named_fixture("two-party-cycle");

  auto a = possible_president(e, 0);
  REQUIRE(a.has_value());
  CHECK(a->second == 2);
  auto a_champs = winners(e, a->first);
  CHECK(std::binary_search(a_champs.begin(), a_champs.end(), 0));
  CHECK(reduced_scores(e, a->first)[0] == 2);

  auto b = possible_president(e, 1);
  REQUIRE(b.has_value());
  CHECK(b->second == 2);
  auto b_champs = winners(e, b->first);
  CHECK(std::binary_search(b_champs.begin(), b_champs.end(), 1));
  CHECK(reduced_scores(e, b->first)[1] == 2);
}

TEST_CASE("exclusion pins the only winning scheme") {
  Election e = named_fixture("two-party-cycle");
  auto scheme = possible_president_excluding(e, 0, 1);
  REQUIRE(scheme.has_value());
  CHECK(*scheme == NominationScheme{e.candidate_index("a1"),
                                    e.candidate_index("b1")});
  auto other = possible_president_excluding(e, 1, 0);
  REQUIRE(other.has_value());
  CHECK(winners(e, *other) == std::vector<int>{1});
}

TEST_CASE("possible and necessary on the four-party fixture") {
  Election e = named_fixture("four-party-axis");
  CHECK_FALSE(possible_president(e, e.party_index("Pa")).has_value());
  CHECK_FALSE(possible_president(e, e.party_index("Pd")).has_value());

  auto pb = possible_president(e, e.party_index("Pb"));
  REQUIRE(pb.has_value());
  CHECK(pb->second == 2);
  auto pc = possible_president(e, e.party_index("Pc"));
  REQUIRE(pc.has_value());
  CHECK(pc->second == 2);

  for (int p = 0; p < e.party_count(); ++p) {
    CHECK_FALSE(necessary_president(e, p));
  }
}

TEST_CASE("necessary president on the aligned fixture") {
  Election e = named_fixture("aligned-not-single-peaked");
  CHECK(necessary_president(e, 0));
  CHECK_FALSE(necessary_president(e, 1));
  CHECK_FALSE(possible_president(e, 1).has_value());
}

TEST_CASE("president queries validate their inputs") {
  Election e = named_fixture("two-party-cycle");
  CHECK_THROWS_AS(possible_president(e, -1), input_error);
  CHECK_THROWS_AS(necessary_president(e, 2), input_error);
  CHECK_THROWS_AS(possible_president_excluding(e, 0, 0), input_error);
  CHECK_THROWS_AS(possible_president_excluding(e, 0, 9), input_error);

  Election bad = build_election(
      {"a1", "a2", "b", "c"},
      {{"A", {"a1", "a2"}}, {"B", {"b"}}, {"C", {"c"}}},
      {{"a1", "c", "b", "a2"}, {"a1", "b", "c", "a2"}});
  CHECK_THROWS_AS(possible_president(bad, 0), input_error);
  CHECK_THROWS_AS(necessary_president(bad, 0), input_error);
  CHECK_THROWS_AS(possible_president_excluding(bad, 0, 1), input_error);
}

TEST_CASE("single party and silent electorates") {
  Election solo = build_election({"x", "y"}, {{"P", {"x", "y"}}},
                                 {{"x", "y"}, {"y", "x"}});
  auto p = possible_president(solo, 0);
  REQUIRE(p.has_value());
  CHECK(p->second == 2);
  CHECK(necessary_president(solo, 0));

  Election silent =
      build_election({"x", "y"}, {{"P", {"x"}}, {"Q", {"y"}}}, {});
  for (int party = 0; party < 2; ++party) {
    auto w = possible_president(silent, party);
    REQUIRE(w.has_value());
    CHECK(w->second == 0);
    CHECK(necessary_president(silent, party));
  }
  CHECK_FALSE(possible_president_excluding(silent, 0, 1).has_value());
}

TEST_CASE("score-cap tables track the excluded party") {
  Election e = named_fixture("two-party-cycle");
  PartyAxis axis{{0, 1}};
  VoterPartition part = partition_voters(e, axis);

  PPViableScoreTable plain =
      compute_pp_viable_tables(e, axis, part, 1, std::nullopt, 2);
  CHECK(plain.distinguished_position == 1);
  REQUIRE(plain.left.size() == 2);
  CHECK(plain.left[0][0][0] == 1);
  CHECK(plain.left[0][1][0] == 1);

  PPViableScoreTable capped =
      compute_pp_viable_tables(e, axis, part, 1, 0, 2);
  bool a1_feasible = false;
  bool a2_feasible = false;
  for (long long s = 0; s <= 2; ++s) {
    a1_feasible = a1_feasible || capped.left[1][0][s] || capped.left[1][1][s];
  }
  PPViableScoreTable wide =
      compute_pp_viable_tables(e, axis, part, 1, std::nullopt, 3);
  for (long long s = 0; s <= 3; ++s) {
    a2_feasible = a2_feasible || wide.left[1][0][s] || wide.left[1][1][s];
  }
  CHECK(a1_feasible);
  CHECK(a2_feasible);

  CHECK_THROWS_AS(compute_pp_viable_tables(e, axis, part, 1, 1, 2),
                  input_error);
  CHECK_THROWS_AS(compute_pp_viable_tables(e, axis, part, 1, std::nullopt, 9),
                  input_error);
  CHECK_THROWS_AS(compute_pp_viable_tables(e, axis, part, 9, std::nullopt, 2),
                  input_error);
}

TEST_CASE("president solvers agree with the oracle on random instances") {
  const std::vector<std::vector<int>> shapes = {
      {2, 2}, {3, 2, 2}, {1, 2, 3}, {2, 1, 2, 1}};
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (const auto& shape : shapes) {
      auto [e, hint] = random_pasp(seed, shape, (seed % 7) + 1);
      for (int p = 0; p < e.party_count(); ++p) {
        auto fast = possible_president(e, p);
        auto slow = brute_possible_president(e, p);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
          auto champs = winners(e, fast->first);
          CHECK(std::binary_search(champs.begin(), champs.end(), p));
          CHECK(reduced_scores(e, fast->first)[p] == fast->second);
        }
        CHECK(necessary_president(e, p) == brute_necessary_president(e, p));
      }
    }
  }
}

TEST_CASE("equilibrium witnesses imply possible presidents") {
  for (std::uint64_t seed = 100; seed <= 140; ++seed) {
    auto [e, hint] = random_pasp(seed, {2, 2, 2}, 4);
    for (int p = 0; p < e.party_count(); ++p) {
      auto eq = equilibrium_president(e, p);
      if (eq) {
        auto possible = possible_president(e, p);
        REQUIRE(possible.has_value());
        CHECK(possible->second <= eq->second);
      }
    }
  }
}

TEST_CASE("necessary presidents are possible when anyone votes") {
  for (std::uint64_t seed = 150; seed <= 190; ++seed) {
    auto [e, hint] = random_pasp(seed, {2, 1, 2}, (seed % 5) + 1);
    for (int p = 0; p < e.party_count(); ++p) {
      if (necessary_president(e, p)) {
        CHECK(possible_president(e, p).has_value());
      }
    }
  }
}
