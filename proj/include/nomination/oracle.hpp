#ifndef NOMINATION_ORACLE_HPP_
#define NOMINATION_ORACLE_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "nomination/core.hpp"
#include "nomination/recognition.hpp"

namespace nomination {

inline constexpr long long default_scheme_cap = 1000000;
inline constexpr int default_axis_party_cap = 6;

long long scheme_count(const Election& election);

// Visits every nomination scheme in lexicographic order (party index major,
// candidates in declaration order); the visitor returns false to stop early.
// Throws cap_exceeded_error before visiting anything if the scheme space is
// larger than the cap.
void for_each_scheme(const Election& election,
                     const std::function<bool(const NominationScheme&)>& visit,
                     long long cap = default_scheme_cap);

std::vector<NominationScheme> enumerate_schemes(const Election& election,
                                                long long cap = default_scheme_cap);

std::vector<NominationScheme> brute_equilibria(const Election& election,
                                               long long cap = default_scheme_cap);

std::optional<NominationScheme> brute_possible_president(
    const Election& election, int party, long long cap = default_scheme_cap);

bool brute_necessary_president(const Election& election, int party,
                               long long cap = default_scheme_cap);

std::optional<NominationScheme> brute_equilibrium_president(
    const Election& election, int party, long long cap = default_scheme_cap);

std::optional<PartyAxis> brute_recognize_pasp(
    const Election& election, int party_cap = default_axis_party_cap);

}  // namespace nomination

#endif  // NOMINATION_ORACLE_HPP_
