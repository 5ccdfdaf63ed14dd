#include "nomination/equilibrium.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "axis_view.hpp"
#include "nomination/errors.hpp"
#include "nomination/generators.hpp"

namespace nomination {

namespace {

constexpr long long kNegInf = -(1LL << 60);

void validate_party_axis(const PartyAxis& axis, const Election& e) {
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

std::vector<int> axis_positions(const PartyAxis& axis) {
  std::vector<int> position(axis.order.size());
  for (std::size_t t = 0; t < axis.order.size(); ++t) {
    position[axis.order[t]] = static_cast<int>(t);
  }
  return position;
}

}  // namespace

std::pair<int, std::optional<int>> two_possible_parties(const Vote& vote,
                                                        const PartyAxis& axis,
                                                        const Election& election) {
  validate_party_axis(axis, election);
  if (vote.ranking.empty()) throw input_error("vote ranks no candidates");

  int top_party = election.party_of[vote.top()];
  int top_size = static_cast<int>(election.party_members[top_party].size());
  int outsider = -1;
  for (int t = 0; t < top_size; ++t) {
    if (election.party_of[vote.ranking[t]] != top_party) {
      outsider = vote.ranking[t];
      break;
    }
  }
  if (outsider == -1) return {top_party, std::nullopt};

  int other_party = election.party_of[outsider];
  auto position = axis_positions(axis);
  if (std::abs(position[top_party] - position[other_party]) != 1) {
    throw input_error("profile not party-aligned single-peaked under axis");
  }
  return {top_party, other_party};
}

VoterPartition partition_voters(const Election& election, const PartyAxis& axis) {
  validate_party_axis(axis, election);
  VoterPartition partition;
  partition.axis = axis;
  int k = election.party_count();
  partition.loyal.resize(k);
  partition.swing.resize(k > 0 ? k - 1 : 0);
  auto position = axis_positions(axis);
  for (int v = 0; v < election.voter_count(); ++v) {
    auto [first, second] = two_possible_parties(election.votes[v], axis, election);
    if (!second) {
      partition.loyal[position[first]].push_back(v);
    } else {
      partition.swing[std::min(position[first], position[*second])].push_back(v);
    }
  }
  return partition;
}

SwingCounts count_swing_preferences(const Election& election,
                                    const PartyAxis& axis,
                                    const VoterPartition& partition) {
  validate_party_axis(axis, election);
  if (partition.axis.order != axis.order) {
    throw input_error("voter partition does not match the axis");
  }
  int k = election.party_count();
  SwingCounts counts;
  counts.loyal.resize(k, 0);
  counts.swing.resize(k > 0 ? k - 1 : 0, 0);
  counts.prefer_left.resize(k > 0 ? k - 1 : 0);
  for (int i = 0; i < k; ++i) {
    counts.loyal[i] = static_cast<long long>(partition.loyal[i].size());
  }
  for (int i = 0; i + 1 < k; ++i) {
    counts.swing[i] = static_cast<long long>(partition.swing[i].size());
    const auto& lo = election.party_members[axis.order[i]];
    const auto& hi = election.party_members[axis.order[i + 1]];
    counts.prefer_left[i].assign(lo.size(),
                                 std::vector<long long>(hi.size(), 0));
    for (int v : partition.swing[i]) {
      const auto& rank = election.votes[v].rank_of;
      for (std::size_t a = 0; a < lo.size(); ++a) {
        for (std::size_t b = 0; b < hi.size(); ++b) {
          if (rank[lo[a]] < rank[hi[b]]) ++counts.prefer_left[i][a][b];
        }
      }
    }
  }
  return counts;
}

PairTable::PairTable(int prev_party, int cur_party, int prev_size, int cur_size,
                     long long bound)
    : prev_party(prev_party),
      cur_party(cur_party),
      prev_size(prev_size),
      cur_size(cur_size),
      bound(bound),
      bits(static_cast<std::size_t>(prev_size) * cur_size * (bound + 1) *
               (bound + 1),
           0) {}

std::size_t PairTable::index(int c_prev, int c_cur, long long s_prev,
                             long long s_cur) const {
  std::size_t span = static_cast<std::size_t>(bound + 1);
  return ((static_cast<std::size_t>(c_prev) * cur_size + c_cur) * span +
          static_cast<std::size_t>(s_prev)) *
             span +
         static_cast<std::size_t>(s_cur);
}

bool PairTable::get(int c_prev, int c_cur, long long s_prev,
                    long long s_cur) const {
  if (s_prev < 0 || s_prev > bound || s_cur < 0 || s_cur > bound) return false;
  return bits[index(c_prev, c_cur, s_prev, s_cur)] != 0;
}

void PairTable::set(int c_prev, int c_cur, long long s_prev, long long s_cur) {
  bits[index(c_prev, c_cur, s_prev, s_cur)] = 1;
}

namespace {

using internal::AxisView;
using internal::make_view;

std::vector<PairTable> fill_viable_side(const AxisView& view, long long target) {
  std::vector<PairTable> tables;
  int last = view.last();
  for (int t = 0; t + 1 <= last; ++t) {
    tables.emplace_back(view.party[t], view.party[t + 1],
                        static_cast<int>(view.members[t].size()),
                        static_cast<int>(view.members[t + 1].size()), target);
  }
  if (last < 1) return tables;

  int size0 = static_cast<int>(view.members[0].size());
  int size1 = static_cast<int>(view.members[1].size());
  for (int c0 = 0; c0 < size0; ++c0) {
    for (int c1 = 0; c1 < size1; ++c1) {
      long long transfer = view.pref[0][c0][c1];
      long long s0 = view.loyal[0] + transfer;
      long long s1 = view.loyal[1] + view.swing[0] - transfer;
      if (s0 > target || s1 > target) continue;
      bool ok = s0 == target;
      if (!ok) {
        ok = true;
        for (int alt = 0; alt < size0; ++alt) {
          if (alt == c0) continue;
          if (view.loyal[0] + view.pref[0][alt][c1] >= target) {
            ok = false;
            break;
          }
        }
      }
      if (ok) tables[0].set(c0, c1, s0, s1);
    }
  }

  for (int t = 1; t + 1 <= last; ++t) {
    int size_pp = static_cast<int>(view.members[t - 1].size());
    int size_prev = static_cast<int>(view.members[t].size());
    int size_cur = static_cast<int>(view.members[t + 1].size());
    for (int c_pp = 0; c_pp < size_pp; ++c_pp) {
      for (int c_prev = 0; c_prev < size_prev; ++c_prev) {
        std::vector<char> reachable(target + 1, 0);
        for (long long s = 0; s <= target; ++s) {
          for (long long s_pp = 0; s_pp <= target && !reachable[s]; ++s_pp) {
            if (tables[t - 1].get(c_pp, c_prev, s_pp, s)) reachable[s] = 1;
          }
        }
        for (int c_cur = 0; c_cur < size_cur; ++c_cur) {
          long long transfer = view.pref[t][c_prev][c_cur];
          long long s_cur = view.loyal[t + 1] + view.swing[t] - transfer;
          if (s_cur > target) continue;
          bool deviation_free = true;
          for (int alt = 0; alt < size_prev; ++alt) {
            if (alt == c_prev) continue;
            long long f = view.pref[t][alt][c_cur] + view.loyal[t] +
                          (view.swing[t - 1] - view.pref[t - 1][c_pp][alt]);
            if (f >= target) {
              deviation_free = false;
              break;
            }
          }
          for (long long s = 0; s <= target; ++s) {
            if (!reachable[s]) continue;
            long long s_prev = s + transfer;
            if (s_prev > target) continue;
            if (s_prev == target || deviation_free) {
              tables[t].set(c_prev, c_cur, s_prev, s_cur);
            }
          }
        }
      }
    }
  }
  return tables;
}

}  // namespace

ViableScoreTable compute_viable_tables(const Election& election,
                                       const PartyAxis& axis,
                                       const VoterPartition& partition,
                                       int distinguished_party,
                                       long long target) {
  validate_party_axis(axis, election);
  if (distinguished_party < 0 || distinguished_party >= election.party_count()) {
    throw input_error("party index " + std::to_string(distinguished_party) +
                      " out of range");
  }
  if (target < 0 || target > election.voter_count()) {
    throw input_error("target score out of range");
  }
  SwingCounts counts = count_swing_preferences(election, axis, partition);
  auto position = axis_positions(axis);
  int kappa_pos = position[distinguished_party];

  ViableScoreTable table;
  table.target = target;
  table.distinguished = distinguished_party;
  table.distinguished_position = kappa_pos;
  table.axis = axis;
  table.left =
      fill_viable_side(make_view(election, axis, counts, kappa_pos, false), target);
  table.right =
      fill_viable_side(make_view(election, axis, counts, kappa_pos, true), target);
  return table;
}

namespace {

// Exact no-deviation state for one prefix of the axis walk. Keyed by the two
// newest nominees and the finalized score entering the previous position; the
// value triple tracks the pending swing-transfer floor and the two largest
// finalized scores usable as deviation blockers.
struct DpNode {
  int c_prev = -1;
  int c_cur = -1;
  long long p_prev = 0;
  long long tau = 0;
  long long m2 = kNegInf;
  long long m3 = kNegInf;
  int parent = -1;
};

bool value_dominates(const DpNode& a, const DpNode& b) {
  return a.tau <= b.tau && a.m2 >= b.m2 && a.m3 >= b.m3;
}

void insert_node(std::vector<DpNode>& level, const DpNode& node) {
  for (std::size_t i = 0; i < level.size(); ++i) {
    const DpNode& other = level[i];
    if (other.c_prev != node.c_prev || other.c_cur != node.c_cur ||
        other.p_prev != node.p_prev) {
      continue;
    }
    if (value_dominates(other, node)) return;
  }
  std::size_t write = 0;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const DpNode& other = level[i];
    bool same_key = other.c_prev == node.c_prev && other.c_cur == node.c_cur &&
                    other.p_prev == node.p_prev;
    if (same_key && value_dominates(node, other)) continue;
    level[write++] = level[i];
  }
  level.resize(write);
  level.push_back(node);
}

// One admissible ending of a side walk: the distinguished nominee, the votes
// it collects from this side, the largest still-unblocked deviation score of
// the adjacent party, and the largest finalized score on this side.
struct SideOption {
  int w = -1;
  long long side_score = 0;
  long long lambda = kNegInf;
  long long other_max = kNegInf;
  std::vector<int> chosen;
};

void insert_option(std::vector<SideOption>& options, SideOption option) {
  for (const auto& other : options) {
    if (other.w != option.w || other.side_score != option.side_score) continue;
    if (other.lambda <= option.lambda && other.other_max >= option.other_max) {
      return;
    }
  }
  std::size_t write = 0;
  for (std::size_t i = 0; i < options.size(); ++i) {
    const SideOption& other = options[i];
    bool same_key =
        other.w == option.w && other.side_score == option.side_score;
    if (same_key && option.lambda <= other.lambda &&
        option.other_max >= other.other_max) {
      continue;
    }
    if (write != i) options[write] = std::move(options[i]);
    ++write;
  }
  options.resize(write);
  options.push_back(std::move(option));
}

std::vector<SideOption> side_options(const AxisView& view, long long s_star) {
  std::vector<SideOption> options;
  int kv = view.last();

  if (kv == 0) {
    SideOption option;
    option.side_score = view.loyal[0];
    if (option.side_score <= s_star) options.push_back(std::move(option));
    return options;
  }

  int size_kappa = static_cast<int>(view.members[kv].size());

  if (kv == 1) {
    int size0 = static_cast<int>(view.members[0].size());
    for (int c0 = 0; c0 < size0; ++c0) {
      for (int w = 0; w < size_kappa; ++w) {
        long long gain = view.pref[0][c0][w];
        long long t0 = view.loyal[0] + gain;
        if (t0 > s_star) continue;
        long long side = view.loyal[1] + view.swing[0] - gain;
        if (side > s_star) continue;
        long long lambda = kNegInf;
        if (t0 < s_star) {
          for (int alt = 0; alt < size0; ++alt) {
            if (alt == c0) continue;
            long long g = view.loyal[0] + view.pref[0][alt][w];
            long long neighbor = s_star + gain - view.pref[0][alt][w];
            if (neighbor > g) continue;
            lambda = std::max(lambda, g);
          }
        }
        SideOption option;
        option.w = w;
        option.side_score = side;
        option.lambda = lambda;
        option.other_max = t0;
        option.chosen = {c0};
        insert_option(options, std::move(option));
      }
    }
    return options;
  }

  std::vector<std::vector<DpNode>> levels(kv);

  int size0 = static_cast<int>(view.members[0].size());
  int size1 = static_cast<int>(view.members[1].size());
  for (int c0 = 0; c0 < size0; ++c0) {
    for (int c1 = 0; c1 < size1; ++c1) {
      long long gain = view.pref[0][c0][c1];
      long long t0 = view.loyal[0] + gain;
      if (t0 > s_star) continue;
      long long tau = 0;
      bool dead = false;
      if (t0 < s_star) {
        for (int alt = 0; alt < size0 && !dead; ++alt) {
          if (alt == c0) continue;
          long long g = view.loyal[0] + view.pref[0][alt][c1];
          if (g < s_star) continue;
          long long need = g - view.loyal[1] -
                           (view.swing[0] - view.pref[0][alt][c1]) + 1;
          tau = std::max(tau, need);
          if (tau > view.swing[1]) dead = true;
        }
      }
      if (dead) continue;
      DpNode node;
      node.c_prev = c0;
      node.c_cur = c1;
      node.p_prev = view.loyal[0];
      node.tau = tau;
      node.m2 = t0;
      node.m3 = kNegInf;
      insert_node(levels[1], node);
    }
  }

  for (int j = 1; j + 1 <= kv - 1; ++j) {
    int size_prev = static_cast<int>(view.members[j].size());
    int size_next = static_cast<int>(view.members[j + 1].size());
    for (int idx = 0; idx < static_cast<int>(levels[j].size()); ++idx) {
      const DpNode node = levels[j][idx];
      long long p_cur = view.loyal[j] + view.swing[j - 1] -
                        view.pref[j - 1][node.c_prev][node.c_cur];
      for (int c_next = 0; c_next < size_next; ++c_next) {
        long long gain = view.pref[j][node.c_cur][c_next];
        if (gain < node.tau) continue;
        long long t_cur = p_cur + gain;
        if (t_cur > s_star) continue;
        long long tau = 0;
        bool dead = false;
        if (t_cur < s_star) {
          for (int alt = 0; alt < size_prev && !dead; ++alt) {
            if (alt == node.c_cur) continue;
            long long g = view.loyal[j] +
                          (view.swing[j - 1] -
                           view.pref[j - 1][node.c_prev][alt]) +
                          view.pref[j][alt][c_next];
            long long blocker = node.p_prev + view.pref[j - 1][node.c_prev][alt];
            if (blocker > g || g < s_star) continue;
            long long need = g - view.loyal[j + 1] -
                             (view.swing[j] - view.pref[j][alt][c_next]) + 1;
            tau = std::max(tau, need);
            if (tau > view.swing[j + 1]) dead = true;
          }
        }
        if (dead) continue;
        DpNode next;
        next.c_prev = node.c_cur;
        next.c_cur = c_next;
        next.p_prev = p_cur;
        next.tau = tau;
        next.m2 = std::max(node.m2, t_cur);
        next.m3 = node.m2;
        next.parent = idx;
        insert_node(levels[j + 1], next);
      }
    }
  }

  int size_prev = static_cast<int>(view.members[kv - 1].size());
  for (const DpNode& node : levels[kv - 1]) {
    long long p_cur = view.loyal[kv - 1] + view.swing[kv - 2] -
                      view.pref[kv - 2][node.c_prev][node.c_cur];
    for (int w = 0; w < size_kappa; ++w) {
      long long gain = view.pref[kv - 1][node.c_cur][w];
      if (gain < node.tau) continue;
      long long t_cur = p_cur + gain;
      if (t_cur > s_star) continue;
      long long side = view.loyal[kv] + view.swing[kv - 1] - gain;
      if (side > s_star) continue;
      long long lambda = kNegInf;
      if (t_cur < s_star) {
        for (int alt = 0; alt < size_prev; ++alt) {
          if (alt == node.c_cur) continue;
          long long g = view.loyal[kv - 1] +
                        (view.swing[kv - 2] -
                         view.pref[kv - 2][node.c_prev][alt]) +
                        view.pref[kv - 1][alt][w];
          long long blocker = node.p_prev + view.pref[kv - 2][node.c_prev][alt];
          long long neighbor = s_star + gain - view.pref[kv - 1][alt][w];
          if (blocker > g || neighbor > g) continue;
          if (node.m3 > g) continue;
          lambda = std::max(lambda, g);
        }
      }
      SideOption option;
      option.w = w;
      option.side_score = side;
      option.lambda = lambda;
      option.other_max = std::max(node.m2, t_cur);
      option.chosen.assign(kv, -1);
      option.chosen[kv - 1] = node.c_cur;
      option.chosen[kv - 2] = node.c_prev;
      const DpNode* walk = &node;
      for (int level = kv - 1; level > 1; --level) {
        walk = &levels[level - 1][walk->parent];
        option.chosen[level - 2] = walk->c_prev;
      }
      insert_option(options, std::move(option));
    }
  }
  return options;
}

}  // namespace

std::optional<std::pair<NominationScheme, int>> equilibrium_president(
    const Election& election, int party) {
  if (party < 0 || party >= election.party_count()) {
    throw input_error("party index " + std::to_string(party) + " out of range");
  }
  auto axis = recognize_pasp(election);
  if (!axis) throw input_error("profile is not party-aligned single-peaked");

  int k = election.party_count();
  if (k == 1) {
    NominationScheme scheme{election.party_members[0][0]};
    return std::make_pair(scheme, election.voter_count());
  }

  auto partition = partition_voters(election, *axis);
  auto counts = count_swing_preferences(election, *axis, partition);
  auto position = axis_positions(*axis);
  int kappa_pos = position[party];

  AxisView left_view = make_view(election, *axis, counts, kappa_pos, false);
  AxisView right_view = make_view(election, *axis, counts, kappa_pos, true);
  long long kappa_loyal = counts.loyal[kappa_pos];

  for (long long s_star = 0; s_star <= election.voter_count(); ++s_star) {
    auto left = side_options(left_view, s_star);
    if (left.empty()) continue;
    auto right = side_options(right_view, s_star);
    if (right.empty()) continue;
    for (const auto& lo : left) {
      for (const auto& ro : right) {
        if (lo.w != -1 && ro.w != -1 && lo.w != ro.w) continue;
        if (lo.side_score + ro.side_score - kappa_loyal != s_star) continue;
        if (lo.lambda != kNegInf && ro.other_max <= lo.lambda) continue;
        if (ro.lambda != kNegInf && lo.other_max <= ro.lambda) continue;

        int w = lo.w != -1 ? lo.w : ro.w;
        NominationScheme scheme(k, -1);
        for (std::size_t j = 0; j < lo.chosen.size(); ++j) {
          scheme[left_view.party[j]] = left_view.members[j][lo.chosen[j]];
        }
        for (std::size_t j = 0; j < ro.chosen.size(); ++j) {
          scheme[right_view.party[j]] = right_view.members[j][ro.chosen[j]];
        }
        scheme[party] = election.party_members[party][w];

        auto win = winners(election, scheme);
        auto scores = reduced_scores(election, scheme);
        if (!std::binary_search(win.begin(), win.end(), party) ||
            scores[party] != s_star || !is_nash_equilibrium(election, scheme)) {
          throw invariant_error("equilibrium witness failed verification");
        }
        return std::make_pair(scheme, static_cast<int>(s_star));
      }
    }
  }
  return std::nullopt;
}

std::optional<NominationScheme> equilibrium_exists(const Election& election) {
  for (int party = 0; party < election.party_count(); ++party) {
    auto result = equilibrium_president(election, party);
    if (result) return result->first;
  }
  return std::nullopt;
}

NominationScheme centrist_equilibrium(const Election& election,
                                      const std::vector<int>& candidate_axis) {
  if (election.party_count() > 3) {
    throw input_error("centrist construction requires at most 3 parties");
  }
  if (static_cast<int>(candidate_axis.size()) != election.candidate_count()) {
    throw input_error("candidate axis is not a permutation of the candidates");
  }
  {
    std::vector<char> seen(election.candidate_count(), 0);
    for (int c : candidate_axis) {
      if (c < 0 || c >= election.candidate_count() || seen[c]) {
        throw input_error("candidate axis is not a permutation of the candidates");
      }
      seen[c] = 1;
    }
  }

  std::vector<int> block_order;
  std::vector<int> block_first(election.party_count(), -1);
  std::vector<int> block_last(election.party_count(), -1);
  {
    std::vector<char> seen(election.party_count(), 0);
    int current = -1;
    for (int c : candidate_axis) {
      int p = election.party_of[c];
      if (p != current) {
        if (seen[p]) {
          throw input_error("parties are not contiguous on the candidate axis");
        }
        seen[p] = 1;
        block_order.push_back(p);
        block_first[p] = c;
        current = p;
      }
      block_last[p] = c;
    }
  }

  for (int v = 0; v < election.voter_count(); ++v) {
    if (!vote_single_peaked(election.votes[v], candidate_axis, election)) {
      throw input_error("vote " + std::to_string(v + 1) +
                        " is not single-peaked on the candidate axis");
    }
  }

  NominationScheme scheme(election.party_count(), -1);
  if (election.party_count() == 0) return scheme;

  if (block_order.size() == 1) {
    scheme[block_order[0]] = election.party_members[block_order[0]][0];
  } else {
    int leftmost = block_order.front();
    int rightmost = block_order.back();
    scheme[leftmost] = block_last[leftmost];
    scheme[rightmost] = block_first[rightmost];
    if (block_order.size() == 3) {
      int middle = block_order[1];
      scheme[middle] = election.party_members[middle][0];
      for (int nominee : election.party_members[middle]) {
        scheme[middle] = nominee;
        auto win = winners(election, scheme);
        if (std::binary_search(win.begin(), win.end(), middle)) break;
        scheme[middle] = election.party_members[middle][0];
      }
    }
  }

  if (!is_nash_equilibrium(election, scheme)) {
    throw invariant_error("centrist scheme failed equilibrium verification");
  }
  return scheme;
}

}  // namespace nomination
