#ifndef NOMINATION_EQUILIBRIUM_HPP_
#define NOMINATION_EQUILIBRIUM_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nomination/core.hpp"
#include "nomination/recognition.hpp"

namespace nomination {

// Loyal and swing voter classes for a fixed party axis. All vectors are
// indexed by axis position: loyal[i] holds voters whose vote always goes to
// the party at position i, swing[i] holds voters torn between positions i
// and i+1.
struct VoterPartition {
  PartyAxis axis;
  std::vector<std::vector<int>> loyal;
  std::vector<std::vector<int>> swing;
};

// The party of the vote's top candidate plus, for swing voters, the adjacent
// party hosting the best-ranked outsider among the top |P|+1 entries. Both
// are original party indices.
std::pair<int, std::optional<int>> two_possible_parties(const Vote& vote,
                                                        const PartyAxis& axis,
                                                        const Election& election);

VoterPartition partition_voters(const Election& election, const PartyAxis& axis);

// Aggregated sizes plus pairwise swing preferences. prefer_left[i][a][b]
// counts swing voters at pair (i, i+1) preferring member a of the party at
// position i over member b of the party at position i+1; a and b are
// member-list indices, not candidate ids.
struct SwingCounts {
  std::vector<long long> loyal;
  std::vector<long long> swing;
  std::vector<std::vector<std::vector<long long>>> prefer_left;
};

SwingCounts count_swing_preferences(const Election& election,
                                    const PartyAxis& axis,
                                    const VoterPartition& partition);

// One level of the viable-score tables: boolean entries over
// (c_prev, c_cur, s_prev, s_cur) with both scores in [0, bound]. Candidate
// arguments are member-list indices of the respective parties.
struct PairTable {
  int prev_party = -1;
  int cur_party = -1;
  int prev_size = 0;
  int cur_size = 0;
  long long bound = 0;
  std::vector<std::uint8_t> bits;

  PairTable() = default;
  PairTable(int prev_party, int cur_party, int prev_size, int cur_size,
            long long bound);

  std::size_t index(int c_prev, int c_cur, long long s_prev,
                    long long s_cur) const;
  bool get(int c_prev, int c_cur, long long s_prev, long long s_cur) const;
  void set(int c_prev, int c_cur, long long s_prev, long long s_cur);
};

// Score-pair tables for a distinguished party under a target score. Left
// tables walk the axis towards the distinguished position; right tables walk
// from the far end backwards (mirrored). left[t] covers the axis pair
// (t, t+1); right[t] covers (k-1-t, k-2-t) in walking order.
struct ViableScoreTable {
  long long target = 0;
  int distinguished = -1;
  int distinguished_position = -1;
  PartyAxis axis;
  std::vector<PairTable> left;
  std::vector<PairTable> right;
};

ViableScoreTable compute_viable_tables(const Election& election,
                                       const PartyAxis& axis,
                                       const VoterPartition& partition,
                                       int distinguished_party,
                                       long long target);

// A Nash-equilibrium scheme in which the given party's nominee wins, with the
// winning score, or nothing. The profile must be recognizably party-aligned
// single-peaked; otherwise an input_error is thrown.
std::optional<std::pair<NominationScheme, int>> equilibrium_president(
    const Election& election, int party);

std::optional<NominationScheme> equilibrium_exists(const Election& election);

// Centrist construction for at most 3 parties whose profile is single-peaked
// on the given candidate axis with contiguous party blocks.
NominationScheme centrist_equilibrium(const Election& election,
                                      const std::vector<int>& candidate_axis);

}  // namespace nomination

#endif  // NOMINATION_EQUILIBRIUM_HPP_
