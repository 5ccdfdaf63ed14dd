#include "nomination/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "nomination/errors.hpp"

namespace nomination {

long long scheme_count(const Election& election) {
  const long long limit = std::numeric_limits<long long>::max();
  long long count = 1;
  for (const auto& members : election.party_members) {
    long long size = static_cast<long long>(members.size());
    if (size == 0) return 0;
    if (count > limit / size) return limit;
    count *= size;
  }
  return count;
}

namespace {

void check_cap(const Election& election, long long cap) {
  long long total = 1;
  for (const auto& members : election.party_members) {
    total *= static_cast<long long>(members.size());
    if (total > cap) {
      throw cap_exceeded_error("scheme space exceeds the cap of " +
                               std::to_string(cap) + " schemes");
    }
  }
}

int party_index_of_party(const Election& election, int party) {
  if (party < 0 || party >= election.party_count()) {
    throw input_error("party index " + std::to_string(party) +
                      " out of range");
  }
  return party;
}

bool party_wins(const Election& election, const NominationScheme& scheme,
                int party) {
  auto win = winners(election, scheme);
  return std::binary_search(win.begin(), win.end(), party);
}

}  // namespace

void for_each_scheme(const Election& election,
                     const std::function<bool(const NominationScheme&)>& visit,
                     long long cap) {
  check_cap(election, cap);
  int k = election.party_count();
  NominationScheme scheme(k);
  std::vector<int> pick(k, 0);
  for (int p = 0; p < k; ++p) scheme[p] = election.party_members[p][0];
  while (true) {
    if (!visit(scheme)) return;
    int p = k - 1;
    while (p >= 0) {
      ++pick[p];
      if (pick[p] < static_cast<int>(election.party_members[p].size())) {
        scheme[p] = election.party_members[p][pick[p]];
        break;
      }
      pick[p] = 0;
      scheme[p] = election.party_members[p][0];
      --p;
    }
    if (p < 0) return;
  }
}

std::vector<NominationScheme> enumerate_schemes(const Election& election,
                                                long long cap) {
  std::vector<NominationScheme> all;
  for_each_scheme(
      election,
      [&all](const NominationScheme& scheme) {
        all.push_back(scheme);
        return true;
      },
      cap);
  return all;
}

std::vector<NominationScheme> brute_equilibria(const Election& election,
                                               long long cap) {
  std::vector<NominationScheme> found;
  for_each_scheme(
      election,
      [&](const NominationScheme& scheme) {
        if (is_nash_equilibrium(election, scheme)) found.push_back(scheme);
        return true;
      },
      cap);
  return found;
}

std::optional<NominationScheme> brute_possible_president(
    const Election& election, int party, long long cap) {
  party_index_of_party(election, party);
  std::optional<NominationScheme> witness;
  for_each_scheme(
      election,
      [&](const NominationScheme& scheme) {
        if (party_wins(election, scheme, party)) {
          witness = scheme;
          return false;
        }
        return true;
      },
      cap);
  return witness;
}

bool brute_necessary_president(const Election& election, int party,
                               long long cap) {
  party_index_of_party(election, party);
  bool necessary = true;
  for_each_scheme(
      election,
      [&](const NominationScheme& scheme) {
        if (!party_wins(election, scheme, party)) {
          necessary = false;
          return false;
        }
        return true;
      },
      cap);
  return necessary;
}

std::optional<NominationScheme> brute_equilibrium_president(
    const Election& election, int party, long long cap) {
  party_index_of_party(election, party);
  std::optional<NominationScheme> witness;
  for_each_scheme(
      election,
      [&](const NominationScheme& scheme) {
        if (party_wins(election, scheme, party) &&
            is_nash_equilibrium(election, scheme)) {
          witness = scheme;
          return false;
        }
        return true;
      },
      cap);
  return witness;
}

std::optional<PartyAxis> brute_recognize_pasp(const Election& election,
                                              int party_cap) {
  if (election.party_count() > party_cap) {
    throw cap_exceeded_error("axis search over " +
                             std::to_string(election.party_count()) +
                             " parties exceeds the cap of " +
                             std::to_string(party_cap));
  }
  std::vector<int> order(election.party_count());
  std::iota(order.begin(), order.end(), 0);
  do {
    PartyAxis axis{order};
    if (verify_profile_under_axis(election, axis)) return axis;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace nomination
