#include "nomination/core.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "nomination/errors.hpp"

namespace nomination {

int Election::candidate_index(const std::string& name) const {
  for (int c = 0; c < candidate_count(); ++c) {
    if (candidate_names[c] == name) return c;
  }
  return -1;
}

int Election::party_index(const std::string& name) const {
  for (int p = 0; p < party_count(); ++p) {
    if (party_names[p] == name) return p;
  }
  return -1;
}

Election build_election(
    const std::vector<std::string>& candidate_names,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& parties,
    const std::vector<std::vector<std::string>>& rankings) {
  if (parties.empty()) {
    throw input_error("at least one party required");
  }
  Election e;
  e.candidate_names = candidate_names;
  e.candidate_display = candidate_names;

  std::unordered_map<std::string, int> candidate_id;
  for (int c = 0; c < e.candidate_count(); ++c) {
    if (candidate_names[c].empty()) {
      throw input_error("candidate " + std::to_string(c) + " has an empty name");
    }
    if (!candidate_id.emplace(candidate_names[c], c).second) {
      throw input_error("duplicate candidate id '" + candidate_names[c] + "'");
    }
  }

  e.party_of.assign(e.candidate_count(), -1);
  std::unordered_set<std::string> party_ids;
  for (int p = 0; p < static_cast<int>(parties.size()); ++p) {
    const auto& [name, members] = parties[p];
    if (name.empty()) {
      throw input_error("party " + std::to_string(p) + " has an empty name");
    }
    if (!party_ids.insert(name).second) {
      throw input_error("duplicate party id '" + name + "'");
    }
    if (members.empty()) {
      throw input_error("party '" + name + "' has no members");
    }
    std::vector<int> member_ids;
    for (const auto& member : members) {
      auto it = candidate_id.find(member);
      if (it == candidate_id.end()) {
        throw input_error("party '" + name + "' lists unknown candidate '" +
                          member + "'");
      }
      if (e.party_of[it->second] != -1) {
        throw input_error("candidate '" + member +
                          "' belongs to more than one party");
      }
      e.party_of[it->second] = p;
      member_ids.push_back(it->second);
    }
    e.party_names.push_back(name);
    e.party_members.push_back(std::move(member_ids));
  }
  for (int c = 0; c < e.candidate_count(); ++c) {
    if (e.party_of[c] == -1) {
      throw input_error("candidate '" + candidate_names[c] +
                        "' belongs to no party");
    }
  }

  for (int v = 0; v < static_cast<int>(rankings.size()); ++v) {
    Vote vote;
    vote.rank_of.assign(e.candidate_count(), -1);
    for (const auto& name : rankings[v]) {
      auto it = candidate_id.find(name);
      if (it == candidate_id.end()) {
        throw input_error("voter " + std::to_string(v) +
                          " ranks unknown candidate '" + name + "'");
      }
      if (vote.rank_of[it->second] != -1) {
        throw input_error("voter " + std::to_string(v) +
                          " ranks candidate '" + name + "' twice");
      }
      vote.rank_of[it->second] = static_cast<int>(vote.ranking.size());
      vote.ranking.push_back(it->second);
    }
    if (static_cast<int>(vote.ranking.size()) != e.candidate_count()) {
      throw input_error("voter " + std::to_string(v) +
                        " has an incomplete ranking (" +
                        std::to_string(vote.ranking.size()) + " of " +
                        std::to_string(e.candidate_count()) + " candidates)");
    }
    e.votes.push_back(std::move(vote));
  }
  return e;
}

void validate_scheme(const Election& election, const NominationScheme& scheme) {
  if (static_cast<int>(scheme.size()) != election.party_count()) {
    throw input_error("scheme nominates " + std::to_string(scheme.size()) +
                      " candidates for " +
                      std::to_string(election.party_count()) + " parties");
  }
  for (int p = 0; p < election.party_count(); ++p) {
    if (scheme[p] < 0 || scheme[p] >= election.candidate_count() ||
        election.party_of[scheme[p]] != p) {
      throw input_error("scheme nominee for party '" +
                        election.party_names[p] + "' is not one of its members");
    }
  }
}

namespace {

ScoreVector scores_unchecked(const Election& e, const NominationScheme& scheme) {
  ScoreVector scores(e.party_count(), 0);
  for (const auto& vote : e.votes) {
    int best = -1;
    int best_rank = e.candidate_count();
    for (int p = 0; p < e.party_count(); ++p) {
      int rank = vote.rank_of[scheme[p]];
      if (rank < best_rank) {
        best_rank = rank;
        best = p;
      }
    }
    ++scores[best];
  }
  return scores;
}

std::vector<int> winners_of(const ScoreVector& scores) {
  int best = 0;
  for (int s : scores) best = std::max(best, s);
  std::vector<int> result;
  for (int p = 0; p < static_cast<int>(scores.size()); ++p) {
    if (scores[p] == best) result.push_back(p);
  }
  return result;
}

}  // namespace

ScoreVector reduced_scores(const Election& election, const NominationScheme& scheme) {
  validate_scheme(election, scheme);
  return scores_unchecked(election, scheme);
}

std::vector<int> winners(const Election& election, const NominationScheme& scheme) {
  validate_scheme(election, scheme);
  return winners_of(scores_unchecked(election, scheme));
}

std::vector<Deviation> nash_deviations(const Election& election,
                                       const NominationScheme& scheme) {
  validate_scheme(election, scheme);
  std::vector<Deviation> deviations;
  auto winning = winners_of(scores_unchecked(election, scheme));
  NominationScheme modified = scheme;
  for (int p = 0; p < election.party_count(); ++p) {
    if (std::binary_search(winning.begin(), winning.end(), p)) continue;
    for (int alternative : election.party_members[p]) {
      if (alternative == scheme[p]) continue;
      modified[p] = alternative;
      auto new_winning = winners_of(scores_unchecked(election, modified));
      if (std::binary_search(new_winning.begin(), new_winning.end(), p)) {
        deviations.push_back({p, alternative});
      }
    }
    modified[p] = scheme[p];
  }
  return deviations;
}

bool is_nash_equilibrium(const Election& election, const NominationScheme& scheme) {
  return nash_deviations(election, scheme).empty();
}

}  // namespace nomination
