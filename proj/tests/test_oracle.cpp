#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "nomination/core.hpp"
#include "nomination/equilibrium.hpp"
#include "nomination/errors.hpp"
#include "nomination/generators.hpp"
#include "nomination/oracle.hpp"
#include "nomination/recognition.hpp"

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

Election random_election(std::mt19937& rng, int parties, int per_party,
                         int voters) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
  for (int p = 0; p < parties; ++p) {
    std::vector<std::string> members;
    for (int c = 0; c < per_party; ++c) {
      members.push_back("c" + std::to_string(p) + "_" + std::to_string(c));
      names.push_back(members.back());
    }
    blocks.emplace_back("P" + std::to_string(p), members);
  }
  std::vector<std::vector<std::string>> rankings;
  for (int v = 0; v < voters; ++v) {
    std::vector<std::string> ranking = names;
    std::shuffle(ranking.begin(), ranking.end(), rng);
    rankings.push_back(ranking);
  }
  return build_election(names, blocks, rankings);
}

Election wide_election(int parties) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
  for (int p = 0; p < parties; ++p) {
    std::vector<std::string> members = {"c" + std::to_string(p) + "_0",
                                        "c" + std::to_string(p) + "_1"};
    names.push_back(members[0]);
    names.push_back(members[1]);
    blocks.emplace_back("P" + std::to_string(p), members);
  }
  return build_election(names, blocks, {});
}

}  // namespace

TEST_CASE("scheme_count multiplies party sizes and saturates") {
  CHECK(scheme_count(named_fixture("two-party-cycle")) == 4);
  CHECK(scheme_count(named_fixture("euclidean-four-party")) == 4);
  CHECK(scheme_count(named_fixture("four-party-axis")) == 4);
  CHECK(scheme_count(named_fixture("aligned-not-single-peaked")) == 2);
  CHECK(scheme_count(wide_election(63)) ==
        std::numeric_limits<long long>::max());
}

TEST_CASE("for_each_scheme walks schemes in declaration order") {
  Election e = named_fixture("two-party-cycle");
  std::vector<NominationScheme> seen;
  for_each_scheme(e, [&seen](const NominationScheme& s) {
    seen.push_back(s);
    return true;
  });
  std::vector<NominationScheme> expected = {
      scheme_of(e, {"a1", "b1"}), scheme_of(e, {"a1", "b2"}),
      scheme_of(e, {"a2", "b1"}), scheme_of(e, {"a2", "b2"})};
  CHECK(seen == expected);
  CHECK(enumerate_schemes(e) == expected);
}

TEST_CASE("for_each_scheme stops when the visitor declines") {
  Election e = named_fixture("euclidean-four-party");
  int visited = 0;
  for_each_scheme(e, [&visited](const NominationScheme&) {
    ++visited;
    return visited < 3;
  });
  CHECK(visited == 3);
}

TEST_CASE("scheme enumeration refuses spaces beyond the cap") {
  Election e = named_fixture("two-party-cycle");
  CHECK(enumerate_schemes(e, 4).size() == 4);
  CHECK_THROWS_WITH_AS(enumerate_schemes(e, 3),
                       "scheme space exceeds the cap of 3 schemes",
                       cap_exceeded_error);
  CHECK_THROWS_AS(brute_equilibria(e, 1), cap_exceeded_error);
  CHECK_THROWS_AS(brute_possible_president(e, 0, 2), cap_exceeded_error);
}

TEST_CASE("brute_equilibria matches the frozen fixture answers") {
  CHECK(brute_equilibria(named_fixture("two-party-cycle")).empty());
  CHECK(brute_equilibria(named_fixture("euclidean-four-party")).empty());

  Election aligned = named_fixture("aligned-not-single-peaked");
  std::vector<NominationScheme> expected = {scheme_of(aligned, {"a1", "b"}),
                                            scheme_of(aligned, {"a2", "b"})};
  CHECK(brute_equilibria(aligned) == expected);
  for (const NominationScheme& s : expected) {
    CHECK(is_nash_equilibrium(aligned, s));
  }
}

TEST_CASE("brute president queries match the frozen fixture answers") {
  Election four = named_fixture("four-party-axis");
  CHECK_FALSE(brute_possible_president(four, 0).has_value());
  CHECK_FALSE(brute_possible_president(four, 3).has_value());
  for (int party : {1, 2}) {
    auto witness = brute_possible_president(four, party);
    REQUIRE(witness.has_value());
    auto win = winners(four, *witness);
    CHECK(std::find(win.begin(), win.end(), party) != win.end());
    CHECK(reduced_scores(four, *witness)[party] == 2);
  }
  for (int party = 0; party < four.party_count(); ++party) {
    CHECK_FALSE(brute_necessary_president(four, party));
    CHECK_FALSE(brute_equilibrium_president(four, party).has_value());
  }

  Election aligned = named_fixture("aligned-not-single-peaked");
  CHECK(brute_necessary_president(aligned, 0));
  CHECK_FALSE(brute_necessary_president(aligned, 1));
  auto eq = brute_equilibrium_president(aligned, 0);
  REQUIRE(eq.has_value());
  CHECK(*eq == scheme_of(aligned, {"a1", "b"}));
  CHECK_FALSE(brute_equilibrium_president(aligned, 1).has_value());
  CHECK_FALSE(brute_possible_president(aligned, 1).has_value());

  Election cycle = named_fixture("two-party-cycle");
  CHECK(brute_possible_president(cycle, 0) == scheme_of(cycle, {"a1", "b1"}));
  CHECK(brute_possible_president(cycle, 1) == scheme_of(cycle, {"a1", "b2"}));
  CHECK_FALSE(brute_necessary_president(cycle, 0));
  CHECK_FALSE(brute_necessary_president(cycle, 1));
}

TEST_CASE("brute president queries validate the party index") {
  Election e = named_fixture("two-party-cycle");
  CHECK_THROWS_WITH_AS(brute_possible_president(e, -1),
                       "party index -1 out of range", input_error);
  CHECK_THROWS_AS(brute_necessary_president(e, 2), input_error);
  CHECK_THROWS_AS(brute_equilibrium_president(e, 9), input_error);
}

TEST_CASE("brute_recognize_pasp finds fixture axes or rejects") {
  Election cycle = named_fixture("two-party-cycle");
  auto axis = brute_recognize_pasp(cycle);
  REQUIRE(axis.has_value());
  CHECK(axis->order == std::vector<int>{0, 1});

  Election four = named_fixture("four-party-axis");
  axis = brute_recognize_pasp(four);
  REQUIRE(axis.has_value());
  CHECK(axis->order == std::vector<int>{0, 1, 2, 3});
  CHECK(verify_profile_under_axis(four, *axis));

  Election euclid = named_fixture("euclidean-four-party");
  axis = brute_recognize_pasp(euclid);
  REQUIRE(axis.has_value());
  CHECK(verify_profile_under_axis(euclid, *axis));
  auto canonical = recognize_pasp(euclid);
  REQUIRE(canonical.has_value());
  bool same = axis->order == canonical->order;
  bool reversed = axis->order == canonical->reversed().order;
  CHECK((same || reversed));
}

TEST_CASE("brute_recognize_pasp refuses too many parties") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks;
  for (int p = 0; p < 7; ++p) {
    names.push_back("c" + std::to_string(p));
    blocks.emplace_back("P" + std::to_string(p),
                        std::vector<std::string>{names.back()});
  }
  Election e = build_election(names, blocks, {});
  CHECK_THROWS_WITH_AS(brute_recognize_pasp(e),
                       "axis search over 7 parties exceeds the cap of 6",
                       cap_exceeded_error);
  CHECK(brute_recognize_pasp(e, 7).has_value());
}

TEST_CASE("recognition agrees with the axis search on mixed inputs") {
  std::mt19937 rng(404);
  for (int round = 0; round < 40; ++round) {
    int parties = 2 + static_cast<int>(rng() % 3);
    int per_party = 1 + static_cast<int>(rng() % 2);
    int voters = 1 + static_cast<int>(rng() % 4);
    Election e = random_election(rng, parties, per_party, voters);
    auto fast = recognize_pasp(e);
    auto slow = brute_recognize_pasp(e);
    CHECK(fast.has_value() == slow.has_value());
    if (fast.has_value()) {
      CHECK(verify_profile_under_axis(e, *fast));
    }
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto [e, axis] = random_pasp(seed, {2, 1, 2, 1}, 5);
    auto fast = recognize_pasp(e);
    auto slow = brute_recognize_pasp(e);
    REQUIRE(fast.has_value());
    REQUIRE(slow.has_value());
    CHECK(verify_profile_under_axis(e, axis));
    CHECK(verify_profile_under_axis(e, *slow));
  }
}
