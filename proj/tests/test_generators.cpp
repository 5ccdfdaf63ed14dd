#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "nomination/core.hpp"
#include "nomination/errors.hpp"
#include "nomination/generators.hpp"
#include "nomination/oracle.hpp"
#include "nomination/recognition.hpp"

using namespace nomination;

TEST_CASE("Rational parses integers, fractions and decimals") {
  CHECK(Rational::parse("12") == Rational{12, 1});
  CHECK(Rational::parse("-3") == Rational{-3, 1});
  CHECK(Rational::parse("+7/3") == Rational{7, 3});
  CHECK(Rational::parse("4/8") == Rational{1, 2});
  CHECK(Rational::parse("8.9") == Rational{89, 10});
  CHECK(Rational::parse("0.50") == Rational{1, 2});
  CHECK(Rational::parse("-8.25") == Rational{-33, 4});

  CHECK(Rational{89, 10}.to_string() == "89/10");
  CHECK(Rational{-3, 1}.to_string() == "-3");
  CHECK(Rational::parse(Rational{-33, 4}.to_string()) == Rational{-33, 4});
}

TEST_CASE("Rational rejects malformed text") {
  CHECK_THROWS_WITH_AS(Rational::parse(""), "invalid rational ''", input_error);
  CHECK_THROWS_AS(Rational::parse("-"), input_error);
  CHECK_THROWS_AS(Rational::parse("a.b"), input_error);
  CHECK_THROWS_AS(Rational::parse("3."), input_error);
  CHECK_THROWS_AS(Rational::parse(".5"), input_error);
  CHECK_THROWS_AS(Rational::parse("1e3"), input_error);
  CHECK_THROWS_AS(Rational::parse("1.1234567890123456"), input_error);
  CHECK_THROWS_WITH_AS(Rational::parse("1/0"),
                       "rational '1/0' has zero denominator", input_error);
  CHECK_THROWS_WITH_AS(Rational::parse("9999999999999999999999"),
                       "rational '9999999999999999999999' is out of range",
                       input_error);
}

TEST_CASE("euclidean_election ranks by exact distance") {
  EuclideanSpec spec;
  spec.candidates = {{"x", "L", Rational::parse("0")},
                     {"y", "R", Rational::parse("3")}};
  spec.voters = {{Rational::parse("1"), 1}, {Rational::parse("2.9"), 2}};
  Election e = euclidean_election(spec);
  CHECK(e.party_index("L") == 0);
  CHECK(e.party_index("R") == 1);
  REQUIRE(e.voter_count() == 3);
  CHECK(e.votes[0].ranking ==
        std::vector<int>{e.candidate_index("x"), e.candidate_index("y")});
  CHECK(e.votes[1].ranking ==
        std::vector<int>{e.candidate_index("y"), e.candidate_index("x")});
  CHECK(e.votes[2] == e.votes[1]);
}

TEST_CASE("euclidean_election rejects ties and bad specs") {
  EuclideanSpec tie;
  tie.candidates = {{"x", "L", Rational::parse("0")},
                    {"y", "R", Rational::parse("2")}};
  tie.voters = {{Rational::parse("1"), 1}};
  CHECK_THROWS_WITH_AS(
      euclidean_election(tie),
      "voter at 1 is equidistant from candidates 'x' and 'y'", input_error);

  EuclideanSpec dup;
  dup.candidates = {{"x", "L", Rational::parse("0")},
                    {"x", "R", Rational::parse("1")}};
  CHECK_THROWS_AS(euclidean_election(dup), input_error);

  EuclideanSpec bad_mult;
  bad_mult.candidates = {{"x", "L", Rational::parse("0")}};
  bad_mult.voters = {{Rational::parse("1"), 0}};
  CHECK_THROWS_AS(euclidean_election(bad_mult), input_error);

  EuclideanSpec no_party;
  no_party.candidates = {{"x", "", Rational::parse("0")}};
  CHECK_THROWS_AS(euclidean_election(no_party), input_error);
}

TEST_CASE("the euclidean fixture is the documented 22-voter profile") {
  Election e = named_fixture("euclidean-four-party");
  CHECK(e.candidate_count() == 6);
  CHECK(e.party_count() == 4);
  CHECK(e.voter_count() == 22);
  CHECK(e.party_index("P3") == 0);
  CHECK(e.party_index("P1") == 1);
  CHECK(profile_single_peaked(e, {0, 1, 2, 3, 4, 5}));
  auto axis = recognize_pasp(e);
  REQUIRE(axis.has_value());
  CHECK(verify_profile_under_axis(e, *axis));
}

TEST_CASE("random_pasp emits verifiable party-aligned profiles") {
  for (std::uint64_t seed : {1, 7, 23}) {
    auto [e, axis] = random_pasp(seed, {2, 3, 1}, 6);
    CHECK(e.party_count() == 3);
    CHECK(e.candidate_count() == 6);
    CHECK(e.voter_count() == 6);
    CHECK(e.party_index("P2") == 1);
    CHECK(e.candidate_index("p2_3") ==
          e.party_members[1][2]);
    CHECK(verify_profile_under_axis(e, axis));
    CHECK(recognize_pasp(e).has_value());
  }

  auto first = random_pasp(42, {2, 2}, 5);
  auto second = random_pasp(42, {2, 2}, 5);
  CHECK(first.first == second.first);
  CHECK(first.second.order == second.second.order);
  auto third = random_pasp(43, {2, 2}, 5);
  CHECK(third.first.votes != first.first.votes);
}

TEST_CASE("random_sp_pasp emits single-peaked profiles on one axis") {
  for (std::uint64_t seed : {2, 9, 31}) {
    auto [e, axis] = random_sp_pasp(seed, {2, 2, 2}, 8);
    CHECK(profile_single_peaked(e, axis));
    CHECK(recognize_pasp(e).has_value());
  }
  auto first = random_sp_pasp(5, {1, 3}, 4);
  auto second = random_sp_pasp(5, {1, 3}, 4);
  CHECK(first.first == second.first);
  CHECK(first.second == second.second);
  CHECK_THROWS_WITH_AS(random_sp_pasp(1, {1, 1, 1, 1}, 2),
                       "the single-peaked generator accepts at most 3 parties",
                       input_error);
}

TEST_CASE("generator size validation") {
  CHECK_THROWS_WITH_AS(random_pasp(1, {}, 3), "at least one party required",
                       input_error);
  CHECK_THROWS_WITH_AS(random_pasp(1, {2, 0}, 3),
                       "party sizes must be positive", input_error);
  CHECK_THROWS_WITH_AS(random_pasp(1, {2}, -1),
                       "voter count must be non-negative", input_error);
  CHECK_THROWS_AS(random_sp_pasp(1, {0}, 3), input_error);
}

TEST_CASE("vote_single_peaked walks an interval around the peak") {
  Election e = build_election({"x", "y", "z"}, {{"P", {"x", "y", "z"}}},
                              {{"y", "x", "z"}, {"x", "z", "y"}});
  CHECK(vote_single_peaked(e.votes[0], {0, 1, 2}, e));
  CHECK_FALSE(vote_single_peaked(e.votes[1], {0, 1, 2}, e));
  CHECK(vote_single_peaked(e.votes[1], {1, 0, 2}, e));
  CHECK_FALSE(profile_single_peaked(e, {0, 1, 2}));
  CHECK_THROWS_WITH_AS(vote_single_peaked(e.votes[0], {0, 1}, e),
                       "candidate axis is not a permutation of the candidates",
                       input_error);
  CHECK_THROWS_AS(profile_single_peaked(e, {0, 0, 2}), input_error);
}

TEST_CASE("single_peaked_any_axis searches all candidate orders") {
  Election aligned = named_fixture("aligned-not-single-peaked");
  CHECK(recognize_pasp(aligned).has_value());
  CHECK_FALSE(single_peaked_any_axis(aligned).has_value());

  CHECK_FALSE(single_peaked_any_axis(named_fixture("two-party-cycle")).has_value());

  auto axis = single_peaked_any_axis(named_fixture("euclidean-four-party"));
  REQUIRE(axis.has_value());
  CHECK(*axis == std::vector<int>{0, 1, 2, 3, 4, 5});

  Election euclid = named_fixture("euclidean-four-party");
  CHECK_THROWS_WITH_AS(single_peaked_any_axis(euclid, 5),
                       "single-peaked axis search over 6 candidates exceeds "
                       "the cap of 5",
                       cap_exceeded_error);
}

TEST_CASE("named_fixture covers every listed name") {
  auto names = fixture_names();
  CHECK(names == std::vector<std::string>{"two-party-cycle",
                                          "euclidean-four-party",
                                          "four-party-axis",
                                          "aligned-not-single-peaked"});
  for (const std::string& name : names) {
    Election e = named_fixture(name);
    CHECK(e.voter_count() > 0);
    CHECK(recognize_pasp(e).has_value());
  }
  CHECK_THROWS_WITH_AS(named_fixture("nope"), "unknown fixture 'nope'",
                       input_error);
}
