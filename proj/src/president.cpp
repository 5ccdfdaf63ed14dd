#include "nomination/president.hpp"

#include <algorithm>
#include <string>

#include "axis_view.hpp"
#include "nomination/errors.hpp"

namespace nomination {
namespace {

using internal::AxisView;
using internal::make_view;

using SideTable = std::vector<std::vector<std::vector<std::uint8_t>>>;

int position_of(const PartyAxis& axis, int party) {
  for (std::size_t pos = 0; pos < axis.order.size(); ++pos) {
    if (axis.order[pos] == party) return static_cast<int>(pos);
  }
  throw invariant_error("party " + std::to_string(party) +
                        " missing from the axis");
}

void check_party_index(const Election& election, int party) {
  if (party < 0 || party >= election.party_count()) {
    throw input_error("party index " + std::to_string(party) +
                      " out of range");
  }
}

// Walks the view towards the distinguished position, keeping every tentative
// score at or below the target. A party's score is final once its right-hand
// swing block is split, which happens on the transition out of its level;
// that is where the cap is tightened to target - 1 for the excluded party.
SideTable pp_fill(const AxisView& view, long long target,
                  std::optional<int> excluded_pos) {
  int levels = view.last() + 1;
  SideTable viable(levels);
  for (int i = 0; i < levels; ++i) {
    viable[i].assign(view.members[i].size(),
                     std::vector<std::uint8_t>(
                         static_cast<std::size_t>(target) + 1, 0));
  }
  if (view.loyal[0] <= target) {
    for (std::size_t c = 0; c < view.members[0].size(); ++c) {
      viable[0][c][static_cast<std::size_t>(view.loyal[0])] = 1;
    }
  }
  for (int i = 1; i < levels; ++i) {
    long long cap = target;
    if (excluded_pos && *excluded_pos == i - 1) cap -= 1;
    int prev_size = static_cast<int>(view.members[i - 1].size());
    int cur_size = static_cast<int>(view.members[i].size());
    for (int c_prev = 0; c_prev < prev_size; ++c_prev) {
      for (long long s_prev = 0; s_prev <= target; ++s_prev) {
        if (!viable[i - 1][c_prev][static_cast<std::size_t>(s_prev)]) continue;
        for (int c_cur = 0; c_cur < cur_size; ++c_cur) {
          long long transfer = view.pref[i - 1][c_prev][c_cur];
          if (s_prev + transfer > cap) continue;
          long long s_cur = view.loyal[i] + (view.swing[i - 1] - transfer);
          if (s_cur > target) continue;
          viable[i][c_cur][static_cast<std::size_t>(s_cur)] = 1;
        }
      }
    }
  }
  return viable;
}

// Rebuilds one nominee per level by walking the table backwards from the
// distinguished member and its end score.
std::vector<int> reconstruct(const AxisView& view, const SideTable& viable,
                             long long target, std::optional<int> excluded_pos,
                             int w, long long s_end) {
  int levels = view.last() + 1;
  std::vector<int> chosen(levels, -1);
  chosen[levels - 1] = w;
  long long s_cur = s_end;
  for (int i = levels - 1; i >= 1; --i) {
    long long cap = target;
    if (excluded_pos && *excluded_pos == i - 1) cap -= 1;
    int prev_size = static_cast<int>(view.members[i - 1].size());
    bool found = false;
    for (int c_prev = 0; c_prev < prev_size && !found; ++c_prev) {
      for (long long s_prev = 0; s_prev <= target && !found; ++s_prev) {
        if (!viable[i - 1][c_prev][static_cast<std::size_t>(s_prev)]) continue;
        long long transfer = view.pref[i - 1][c_prev][chosen[i]];
        if (s_prev + transfer > cap) continue;
        if (view.loyal[i] + (view.swing[i - 1] - transfer) != s_cur) continue;
        chosen[i - 1] = c_prev;
        s_cur = s_prev;
        found = true;
      }
    }
    if (!found) {
      throw invariant_error("viable-score table reconstruction failed");
    }
  }
  return chosen;
}

// Sweeps winning scores in ascending order and returns the first scheme in
// which the given party wins with that score, avoiding the excluded party as
// a co-winner when one is named.
std::optional<std::pair<NominationScheme, long long>> search_president(
    const Election& election, const PartyAxis& axis, const SwingCounts& counts,
    int party, std::optional<int> excluded) {
  int k = election.party_count();
  int kappa_pos = position_of(axis, party);
  AxisView left_view = make_view(election, axis, counts, kappa_pos, false);
  AxisView right_view = make_view(election, axis, counts, kappa_pos, true);
  std::optional<int> left_excluded;
  std::optional<int> right_excluded;
  if (excluded) {
    int epos = position_of(axis, *excluded);
    if (epos < kappa_pos) {
      left_excluded = epos;
    } else {
      right_excluded = k - 1 - epos;
    }
  }
  long long loyal_kappa = counts.loyal[kappa_pos];
  int member_count = static_cast<int>(election.party_members[party].size());
  long long n = election.voter_count();
  int kv = left_view.last();
  int kv2 = right_view.last();
  for (long long target = 0; target <= n; ++target) {
    SideTable left = pp_fill(left_view, target, left_excluded);
    SideTable right = pp_fill(right_view, target, right_excluded);
    for (int w = 0; w < member_count; ++w) {
      for (long long s_l = 0; s_l <= target; ++s_l) {
        if (!left[kv][w][static_cast<std::size_t>(s_l)]) continue;
        long long s_r = target + loyal_kappa - s_l;
        if (s_r < 0 || s_r > target) continue;
        if (!right[kv2][w][static_cast<std::size_t>(s_r)]) continue;
        std::vector<int> left_chosen =
            reconstruct(left_view, left, target, left_excluded, w, s_l);
        std::vector<int> right_chosen =
            reconstruct(right_view, right, target, right_excluded, w, s_r);
        NominationScheme scheme(k, -1);
        for (int j = 0; j <= kv; ++j) {
          scheme[left_view.party[j]] = left_view.members[j][left_chosen[j]];
        }
        for (int j = 0; j <= kv2; ++j) {
          scheme[right_view.party[j]] = right_view.members[j][right_chosen[j]];
        }
        ScoreVector scores = reduced_scores(election, scheme);
        std::vector<int> champs = winners(election, scheme);
        bool ok =
            std::find(champs.begin(), champs.end(), party) != champs.end() &&
            scores[party] == target;
        if (ok && excluded) {
          ok = std::find(champs.begin(), champs.end(), *excluded) ==
               champs.end();
        }
        if (!ok) {
          throw invariant_error(
              "possible-president witness failed verification");
        }
        return std::make_pair(scheme, target);
      }
    }
  }
  return std::nullopt;
}

PartyAxis recognized_axis_or_throw(const Election& election) {
  std::optional<PartyAxis> axis = recognize_pasp(election);
  if (!axis) {
    throw input_error("profile is not party-aligned single-peaked");
  }
  return *axis;
}

}  // namespace

PPViableScoreTable compute_pp_viable_tables(const Election& election,
                                            const PartyAxis& axis,
                                            const VoterPartition& partition,
                                            int distinguished_party,
                                            std::optional<int> excluded_party,
                                            long long target) {
  check_party_index(election, distinguished_party);
  if (excluded_party) {
    check_party_index(election, *excluded_party);
    if (*excluded_party == distinguished_party) {
      throw input_error("excluded party equals the distinguished party");
    }
  }
  if (target < 0 || target > election.voter_count()) {
    throw input_error("target score out of range");
  }
  SwingCounts counts = count_swing_preferences(election, axis, partition);
  int k = election.party_count();
  int kappa_pos = position_of(axis, distinguished_party);
  std::optional<int> left_excluded;
  std::optional<int> right_excluded;
  if (excluded_party) {
    int epos = position_of(axis, *excluded_party);
    if (epos < kappa_pos) {
      left_excluded = epos;
    } else {
      right_excluded = k - 1 - epos;
    }
  }
  PPViableScoreTable table;
  table.target = target;
  table.distinguished = distinguished_party;
  table.distinguished_position = kappa_pos;
  table.excluded = excluded_party;
  table.axis = axis;
  table.left =
      pp_fill(make_view(election, axis, counts, kappa_pos, false), target,
              left_excluded);
  table.right =
      pp_fill(make_view(election, axis, counts, kappa_pos, true), target,
              right_excluded);
  return table;
}

std::optional<std::pair<NominationScheme, int>> possible_president(
    const Election& election, int party) {
  check_party_index(election, party);
  if (election.party_count() == 1) {
    return std::make_pair(NominationScheme{election.party_members[0][0]},
                          election.voter_count());
  }
  PartyAxis axis = recognized_axis_or_throw(election);
  VoterPartition partition = partition_voters(election, axis);
  SwingCounts counts = count_swing_preferences(election, axis, partition);
  auto found = search_president(election, axis, counts, party, std::nullopt);
  if (!found) return std::nullopt;
  return std::make_pair(found->first, static_cast<int>(found->second));
}

std::optional<NominationScheme> possible_president_excluding(
    const Election& election, int winner, int excluded) {
  check_party_index(election, winner);
  check_party_index(election, excluded);
  if (winner == excluded) {
    throw input_error("winner and excluded parties must differ");
  }
  PartyAxis axis = recognized_axis_or_throw(election);
  VoterPartition partition = partition_voters(election, axis);
  SwingCounts counts = count_swing_preferences(election, axis, partition);
  auto found = search_president(election, axis, counts, winner, excluded);
  if (!found) return std::nullopt;
  return found->first;
}

bool necessary_president(const Election& election, int party) {
  check_party_index(election, party);
  int k = election.party_count();
  if (k == 1) return true;
  PartyAxis axis = recognized_axis_or_throw(election);
  VoterPartition partition = partition_voters(election, axis);
  SwingCounts counts = count_swing_preferences(election, axis, partition);
  for (int rival = 0; rival < k; ++rival) {
    if (rival == party) continue;
    if (search_president(election, axis, counts, rival, party)) return false;
  }
  return true;
}

}  // namespace nomination
