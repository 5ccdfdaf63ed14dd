#ifndef NOMINATION_CORE_HPP_
#define NOMINATION_CORE_HPP_

#include <string>
#include <utility>
#include <vector>

namespace nomination {

// A complete strict ranking of all candidates. ranking[0] is the most
// preferred candidate; rank_of is the inverse permutation.
struct Vote {
  std::vector<int> ranking;
  std::vector<int> rank_of;

  bool prefers(int a, int b) const { return rank_of[a] < rank_of[b]; }
  int top() const { return ranking.front(); }
  int last() const { return ranking.back(); }

  bool operator==(const Vote&) const = default;
};

// An election: candidates partitioned into parties, plus the voter profile.
// Candidates and parties are addressed by index; names are kept for I/O.
struct Election {
  std::vector<std::string> candidate_names;
  std::vector<std::string> candidate_display;
  std::vector<std::string> party_names;
  std::vector<std::vector<int>> party_members;
  std::vector<int> party_of;
  std::vector<Vote> votes;

  int candidate_count() const { return static_cast<int>(candidate_names.size()); }
  int party_count() const { return static_cast<int>(party_members.size()); }
  int voter_count() const { return static_cast<int>(votes.size()); }

  // Index lookups by name; -1 when the name is unknown.
  int candidate_index(const std::string& name) const;
  int party_index(const std::string& name) const;

  bool operator==(const Election&) const = default;
};

// One nominee per party, indexed by party: scheme[i] is the candidate index
// nominated by party i.
using NominationScheme = std::vector<int>;

// Plurality scores indexed by party: scores[i] is the vote count of party i's
// nominee in the reduced election.
using ScoreVector = std::vector<int>;

// A profitable unilateral nominee change: `party` swaps its losing nominee
// for `alternative`, which wins the resulting election.
struct Deviation {
  int party;
  int alternative;

  bool operator==(const Deviation&) const = default;
};

// Validates and assembles an election from named parts. Parties are given as
// (name, member candidate names); rankings list candidate names from most to
// least preferred. Throws input_error with the offending voter or party on
// duplicate identifiers, partition violations, or incomplete rankings.
Election build_election(
    const std::vector<std::string>& candidate_names,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& parties,
    const std::vector<std::vector<std::string>>& rankings);

// Throws input_error unless the scheme nominates exactly one member of every
// party of the election.
void validate_scheme(const Election& election, const NominationScheme& scheme);

// Vote counts of the nominees: each voter supports their most preferred
// candidate among the nominees.
ScoreVector reduced_scores(const Election& election, const NominationScheme& scheme);

// Parties whose nominee attains the maximum score, ascending. Co-winners are
// allowed; there is no tie-breaking. The winning candidates are scheme[i] for
// each returned party i.
std::vector<int> winners(const Election& election, const NominationScheme& scheme);

// All pairs (party, alternative nominee) such that the party's current
// nominee is not a winner but the alternative wins after the swap, ordered by
// party and then by the party's candidate order.
std::vector<Deviation> nash_deviations(const Election& election,
                                       const NominationScheme& scheme);

// True iff the scheme admits no deviation.
bool is_nash_equilibrium(const Election& election, const NominationScheme& scheme);

}  // namespace nomination

#endif  // NOMINATION_CORE_HPP_
