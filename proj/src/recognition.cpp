#include "nomination/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "nomination/errors.hpp"

namespace nomination {

std::vector<PartyExtrema> party_extrema(const Vote& vote, const Election& election) {
  std::vector<PartyExtrema> extrema(election.party_count(), {-1, -1});
  for (int candidate : vote.ranking) {
    int party = election.party_of[candidate];
    if (extrema[party].best == -1) extrema[party].best = candidate;
    extrema[party].worst = candidate;
  }
  return extrema;
}

namespace {

void validate_axis(const PartyAxis& axis, const Election& e) {
  if (static_cast<int>(axis.order.size()) != e.party_count()) {
    throw input_error("axis orders " + std::to_string(axis.order.size()) +
                      " parties, election has " +
                      std::to_string(e.party_count()));
  }
  std::vector<char> seen(e.party_count(), 0);
  for (int party : axis.order) {
    if (party < 0 || party >= e.party_count() || seen[party]) {
      throw input_error("axis is not a permutation of the parties");
    }
    seen[party] = 1;
  }
}

}  // namespace

bool verify_vote_under_axis(const Vote& vote, const PartyAxis& axis,
                            const Election& election) {
  validate_axis(axis, election);
  int k = election.party_count();
  if (k <= 2) return true;

  auto extrema = party_extrema(vote, election);
  auto best_rank = [&](int party) { return vote.rank_of[extrema[party].best]; };
  auto worst_rank = [&](int party) { return vote.rank_of[extrema[party].worst]; };

  std::vector<int> position(k);
  for (int t = 0; t < k; ++t) position[axis.order[t]] = t;
  int j = position[election.party_of[vote.top()]];

  if (j > 0 && j < k - 1) {
    int wj = worst_rank(axis.order[j]);
    if (wj >= best_rank(axis.order[j - 1]) && wj >= best_rank(axis.order[j + 1])) {
      return false;
    }
  }
  for (int t = j + 1; t + 1 < k; ++t) {
    if (worst_rank(axis.order[t]) >= best_rank(axis.order[t + 1])) return false;
  }
  for (int t = 1; t < j; ++t) {
    if (worst_rank(axis.order[t]) >= best_rank(axis.order[t - 1])) return false;
  }
  return true;
}

bool verify_profile_under_axis(const Election& election, const PartyAxis& axis) {
  validate_axis(axis, election);
  for (const auto& vote : election.votes) {
    if (!verify_vote_under_axis(vote, axis, election)) return false;
  }
  return true;
}

std::vector<int> bottom_parties(const Election& election) {
  std::vector<char> seen(election.party_count(), 0);
  for (const auto& vote : election.votes) {
    seen[election.party_of[vote.last()]] = 1;
  }
  std::vector<int> result;
  for (int p = 0; p < election.party_count(); ++p) {
    if (seen[p]) result.push_back(p);
  }
  return result;
}

std::optional<ForcedPlacement> vote_imposed_extension(
    const Election& election, const ExtremalPlacement& placement) {
  int k = election.party_count();
  std::vector<char> placed(k, 0);
  std::vector<char> in_right(k, 0);
  for (int party : placement.left) {
    if (party < 0 || party >= k || placed[party]) {
      throw input_error("placement is not a list of distinct parties");
    }
    placed[party] = 1;
  }
  for (int party : placement.right) {
    if (party < 0 || party >= k || placed[party]) {
      throw input_error("placement is not a list of distinct parties");
    }
    placed[party] = 1;
    in_right[party] = 1;
  }

  int placed_candidates = 0;
  for (int party : election.party_of) {
    if (placed[party]) ++placed_candidates;
  }

  for (const auto& vote : election.votes) {
    int m = static_cast<int>(vote.ranking.size());
    int run = 0;
    while (run < placed_candidates &&
           placed[election.party_of[vote.ranking[m - 1 - run]]]) {
      ++run;
    }
    if (run == placed_candidates) continue;

    int a = vote.ranking[m - 1 - run];
    int b = -1;
    for (int candidate : vote.ranking) {
      if (placed[election.party_of[candidate]]) {
        b = candidate;
        break;
      }
    }
    int forced = election.party_of[a];
    if (placed[forced]) {
      throw input_error("vote forces party '" + election.party_names[forced] +
                        "' into the axis twice; no axis extends this placement");
    }
    PlacementSide side = in_right[election.party_of[b]]
                             ? PlacementSide::after_left
                             : PlacementSide::before_right;
    return ForcedPlacement{forced, side};
  }
  return std::nullopt;
}

namespace {

// Drops the candidates of all parties not marked keep, reindexing candidates
// and parties; sub_to_original maps the restricted party indices back.
Election restrict_election(const Election& e, const std::vector<char>& keep,
                           std::vector<int>& sub_to_original) {
  Election sub;
  sub_to_original.clear();
  std::vector<int> new_party(e.party_count(), -1);
  for (int p = 0; p < e.party_count(); ++p) {
    if (!keep[p]) continue;
    new_party[p] = static_cast<int>(sub_to_original.size());
    sub_to_original.push_back(p);
    sub.party_names.push_back(e.party_names[p]);
    sub.party_members.emplace_back();
  }
  std::vector<int> new_candidate(e.candidate_count(), -1);
  for (int c = 0; c < e.candidate_count(); ++c) {
    if (!keep[e.party_of[c]]) continue;
    new_candidate[c] = sub.candidate_count();
    sub.candidate_names.push_back(e.candidate_names[c]);
    sub.candidate_display.push_back(e.candidate_display[c]);
    sub.party_of.push_back(new_party[e.party_of[c]]);
    sub.party_members[new_party[e.party_of[c]]].push_back(new_candidate[c]);
  }
  for (const auto& vote : e.votes) {
    Vote reduced;
    reduced.rank_of.assign(sub.candidate_count(), -1);
    for (int candidate : vote.ranking) {
      if (new_candidate[candidate] == -1) continue;
      reduced.rank_of[new_candidate[candidate]] =
          static_cast<int>(reduced.ranking.size());
      reduced.ranking.push_back(new_candidate[candidate]);
    }
    sub.votes.push_back(std::move(reduced));
  }
  return sub;
}

std::optional<std::vector<int>> solve_axis(const Election& e) {
  int k = e.party_count();
  if (k <= 2 || e.voter_count() == 0) {
    std::vector<int> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    return identity;
  }

  auto bottoms = bottom_parties(e);
  if (static_cast<int>(bottoms.size()) > 2) return std::nullopt;

  ExtremalPlacement placement;
  placement.left.push_back(bottoms[0]);
  if (bottoms.size() == 2) placement.right.push_back(bottoms[1]);

  std::vector<char> placed(k, 0);
  int placed_count = 0;
  for (int party : bottoms) {
    placed[party] = 1;
    ++placed_count;
  }

  try {
    while (placed_count < k) {
      auto forced = vote_imposed_extension(e, placement);
      if (!forced) break;
      if (forced->side == PlacementSide::after_left) {
        placement.left.push_back(forced->party);
      } else {
        placement.right.insert(placement.right.begin(), forced->party);
      }
      placed[forced->party] = 1;
      ++placed_count;
    }
  } catch (const input_error&) {
    return std::nullopt;
  }

  std::vector<int> order = placement.left;
  if (placed_count < k) {
    std::vector<char> keep(k, 0);
    for (int p = 0; p < k; ++p) keep[p] = !placed[p];
    std::vector<int> sub_to_original;
    Election sub = restrict_election(e, keep, sub_to_original);
    auto middle = solve_axis(sub);
    if (!middle) return std::nullopt;
    for (int sub_party : *middle) order.push_back(sub_to_original[sub_party]);
  }
  order.insert(order.end(), placement.right.begin(), placement.right.end());
  return order;
}

}  // namespace

std::optional<PartyAxis> recognize_pasp(const Election& election) {
  auto order = solve_axis(election);
  if (!order) return std::nullopt;
  PartyAxis axis{std::move(*order)};
  if (!axis.order.empty() && axis.order.back() < axis.order.front()) {
    axis = axis.reversed();
  }
  if (!verify_profile_under_axis(election, axis)) return std::nullopt;
  return axis;
}

}  // namespace nomination
