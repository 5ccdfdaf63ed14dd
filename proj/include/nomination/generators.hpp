#ifndef NOMINATION_GENERATORS_HPP_
#define NOMINATION_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nomination/core.hpp"
#include "nomination/recognition.hpp"

namespace nomination {

// Exact rational coordinate. Accepts "-3", "89/10", "8.9" style text.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

struct EuclideanCandidate {
  std::string id;
  std::string party;
  Rational position;
};

struct EuclideanVoter {
  Rational position;
  int multiplicity = 1;
};

struct EuclideanSpec {
  std::vector<EuclideanCandidate> candidates;
  std::vector<EuclideanVoter> voters;
};

// Ranks candidates by exact distance on the line; equidistant pairs are an
// error, never perturbed. Parties appear in order of first mention.
Election euclidean_election(const EuclideanSpec& spec);

// Profile built voter by voter from a random perceived candidate axis that
// keeps parties contiguous in a shared random party order; the returned axis
// is a witness accepted by verify_profile_under_axis.
std::pair<Election, PartyAxis> random_pasp(std::uint64_t seed,
                                           const std::vector<int>& party_sizes,
                                           int voter_count);

// One shared candidate axis with contiguous party blocks (at most 3 parties);
// every vote is single-peaked with respect to the returned candidate axis.
std::pair<Election, std::vector<int>> random_sp_pasp(
    std::uint64_t seed, const std::vector<int>& party_sizes, int voter_count);

Election named_fixture(const std::string& name);
std::vector<std::string> fixture_names();

bool vote_single_peaked(const Vote& vote, const std::vector<int>& candidate_axis,
                        const Election& election);
bool profile_single_peaked(const Election& election,
                           const std::vector<int>& candidate_axis);

// Exhaustive search over candidate axes; refuses elections with more
// candidates than max_candidates.
std::optional<std::vector<int>> single_peaked_any_axis(const Election& election,
                                                       int max_candidates = 8);

}  // namespace nomination

#endif  // NOMINATION_GENERATORS_HPP_
