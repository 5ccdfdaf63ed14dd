#ifndef NOMINATION_PRESIDENT_HPP_
#define NOMINATION_PRESIDENT_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nomination/core.hpp"
#include "nomination/equilibrium.hpp"
#include "nomination/recognition.hpp"

namespace nomination {

// Score-cap-only viability: left[i][c][s] is true when the party at walking
// position i can nominate member c collecting exactly s votes from the
// positions walked so far while every finalized score stays at or below the
// target (strictly below for the excluded party). right mirrors the walk from
// the far end; both end at the distinguished position.
struct PPViableScoreTable {
  long long target = 0;
  int distinguished = -1;
  int distinguished_position = -1;
  std::optional<int> excluded;
  PartyAxis axis;
  std::vector<std::vector<std::vector<std::uint8_t>>> left;
  std::vector<std::vector<std::vector<std::uint8_t>>> right;
};

PPViableScoreTable compute_pp_viable_tables(const Election& election,
                                            const PartyAxis& axis,
                                            const VoterPartition& partition,
                                            int distinguished_party,
                                            std::optional<int> excluded_party,
                                            long long target);

// A nomination scheme in which the given party's nominee wins, with the
// winning score, or nothing. Throws input_error when the profile is not
// recognizably party-aligned single-peaked.
std::optional<std::pair<NominationScheme, int>> possible_president(
    const Election& election, int party);

// A scheme in which winner wins and excluded is not a winner, or nothing.
std::optional<NominationScheme> possible_president_excluding(
    const Election& election, int winner, int excluded);

// True when the party's nominee is a winner under every nomination scheme.
bool necessary_president(const Election& election, int party);

}  // namespace nomination

#endif  // NOMINATION_PRESIDENT_HPP_
