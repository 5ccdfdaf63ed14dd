#include "nomination/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>

#include "nomination/errors.hpp"

namespace nomination {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::int64_t parse_int64(const std::string& s, const std::string& whole) {
  if (!all_digits(s)) throw input_error("invalid rational '" + whole + "'");
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw input_error("rational '" + whole + "' is out of range");
  }
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string body = text;
  std::int64_t sign = 1;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = -1;
    body = body.substr(1);
  }
  if (body.empty()) throw input_error("invalid rational '" + text + "'");

  std::int64_t num = 0;
  std::int64_t den = 1;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    num = parse_int64(body.substr(0, slash), text);
    den = parse_int64(body.substr(slash + 1), text);
    if (den == 0) throw input_error("rational '" + text + "' has zero denominator");
  } else if (dot != std::string::npos) {
    std::string frac = body.substr(dot + 1);
    num = parse_int64(body.substr(0, dot), text);
    if (!all_digits(frac) || frac.size() > 15) {
      throw input_error("invalid rational '" + text + "'");
    }
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
      if (num > std::numeric_limits<std::int64_t>::max() / 16) {
        throw input_error("rational '" + text + "' is out of range");
      }
    }
  } else {
    num = parse_int64(body, text);
  }

  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{sign * num, den};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Election euclidean_election(const EuclideanSpec& spec) {
  for (const auto& c : spec.candidates) {
    if (c.id.empty()) throw input_error("empty candidate id");
    if (c.party.empty()) {
      throw input_error("candidate '" + c.id + "' has an empty party name");
    }
  }
  for (std::size_t i = 0; i < spec.candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.candidates.size(); ++j) {
      if (spec.candidates[i].id == spec.candidates[j].id) {
        throw input_error("duplicate candidate id '" + spec.candidates[i].id + "'");
      }
    }
  }
  for (const auto& v : spec.voters) {
    if (v.multiplicity <= 0) {
      throw input_error("voter multiplicity must be positive");
    }
  }

  std::int64_t common = 1;
  auto fold_denominator = [&common](std::int64_t den) {
    std::int64_t g = std::gcd(common, den);
    if (common / g > std::numeric_limits<std::int64_t>::max() / den) {
      throw input_error("coordinates too fine to scale exactly");
    }
    common = common / g * den;
  };
  for (const auto& c : spec.candidates) fold_denominator(c.position.den);
  for (const auto& v : spec.voters) fold_denominator(v.position.den);

  auto scaled = [common](const Rational& r) {
    return static_cast<__int128>(r.num) * (common / r.den);
  };

  std::vector<std::string> candidate_names;
  std::vector<__int128> candidate_pos;
  for (const auto& c : spec.candidates) {
    candidate_names.push_back(c.id);
    candidate_pos.push_back(scaled(c.position));
  }

  std::vector<std::pair<std::string, std::vector<std::string>>> parties;
  for (const auto& c : spec.candidates) {
    auto it = std::find_if(parties.begin(), parties.end(),
                           [&](const auto& p) { return p.first == c.party; });
    if (it == parties.end()) {
      parties.push_back({c.party, {c.id}});
    } else {
      it->second.push_back(c.id);
    }
  }

  std::vector<std::vector<std::string>> rankings;
  for (const auto& v : spec.voters) {
    __int128 vp = scaled(v.position);
    std::vector<int> order(spec.candidates.size());
    std::iota(order.begin(), order.end(), 0);
    auto dist = [&](int c) {
      __int128 d = candidate_pos[c] - vp;
      return d < 0 ? -d : d;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist(a) < dist(b); });
    for (std::size_t t = 0; t + 1 < order.size(); ++t) {
      if (dist(order[t]) == dist(order[t + 1])) {
        throw input_error("voter at " + v.position.to_string() +
                          " is equidistant from candidates '" +
                          candidate_names[order[t]] + "' and '" +
                          candidate_names[order[t + 1]] + "'");
      }
    }
    std::vector<std::string> ranking;
    for (int c : order) ranking.push_back(candidate_names[c]);
    for (int copy = 0; copy < v.multiplicity; ++copy) rankings.push_back(ranking);
  }

  return build_election(candidate_names, parties, rankings);
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  while (true) {
    std::uint64_t r = rng();
    if (r >= rem) return r % n;
  }
}

void shuffle_in_place(std::vector<int>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = bounded(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

void validate_generator_sizes(const std::vector<int>& party_sizes,
                              int voter_count) {
  if (party_sizes.empty()) throw input_error("at least one party required");
  for (int size : party_sizes) {
    if (size <= 0) throw input_error("party sizes must be positive");
  }
  if (voter_count < 0) throw input_error("voter count must be non-negative");
}

struct GeneratorNames {
  std::vector<std::string> candidates;
  std::vector<std::pair<std::string, std::vector<std::string>>> parties;
  std::vector<std::vector<int>> members;  // candidate indices per party
};

GeneratorNames make_generator_names(const std::vector<int>& party_sizes) {
  GeneratorNames names;
  int next = 0;
  for (std::size_t i = 0; i < party_sizes.size(); ++i) {
    std::string party = "P" + std::to_string(i + 1);
    std::vector<std::string> member_names;
    std::vector<int> member_ids;
    for (int j = 0; j < party_sizes[i]; ++j) {
      std::string id = "p" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      names.candidates.push_back(id);
      member_names.push_back(id);
      member_ids.push_back(next++);
    }
    names.parties.push_back({party, member_names});
    names.members.push_back(member_ids);
  }
  return names;
}

// Single-peaked walk outward from a random peak on the given candidate axis.
std::vector<int> sample_peaked_vote(const std::vector<int>& axis,
                                    std::mt19937_64& rng) {
  int m = static_cast<int>(axis.size());
  std::vector<int> ranking;
  if (m == 0) return ranking;
  int peak = static_cast<int>(bounded(rng, m));
  int lo = peak;
  int hi = peak;
  ranking.push_back(axis[peak]);
  while (lo > 0 || hi < m - 1) {
    bool go_left;
    if (lo == 0) {
      go_left = false;
    } else if (hi == m - 1) {
      go_left = true;
    } else {
      go_left = bounded(rng, 2) == 0;
    }
    if (go_left) {
      ranking.push_back(axis[--lo]);
    } else {
      ranking.push_back(axis[++hi]);
    }
  }
  return ranking;
}

}  // namespace

std::pair<Election, PartyAxis> random_pasp(std::uint64_t seed,
                                           const std::vector<int>& party_sizes,
                                           int voter_count) {
  validate_generator_sizes(party_sizes, voter_count);
  GeneratorNames names = make_generator_names(party_sizes);
  int k = static_cast<int>(party_sizes.size());

  std::mt19937_64 rng(seed);
  std::vector<int> axis(k);
  std::iota(axis.begin(), axis.end(), 0);
  shuffle_in_place(axis, rng);

  std::vector<std::vector<std::string>> rankings;
  for (int v = 0; v < voter_count; ++v) {
    std::vector<int> perceived;
    for (int pos = 0; pos < k; ++pos) {
      std::vector<int> block = names.members[axis[pos]];
      shuffle_in_place(block, rng);
      perceived.insert(perceived.end(), block.begin(), block.end());
    }
    std::vector<std::string> ranking;
    for (int c : sample_peaked_vote(perceived, rng)) {
      ranking.push_back(names.candidates[c]);
    }
    rankings.push_back(std::move(ranking));
  }

  Election e = build_election(names.candidates, names.parties, rankings);
  return {std::move(e), PartyAxis{axis}};
}

std::pair<Election, std::vector<int>> random_sp_pasp(
    std::uint64_t seed, const std::vector<int>& party_sizes, int voter_count) {
  if (party_sizes.size() > 3) {
    throw input_error("the single-peaked generator accepts at most 3 parties");
  }
  validate_generator_sizes(party_sizes, voter_count);
  GeneratorNames names = make_generator_names(party_sizes);
  int k = static_cast<int>(party_sizes.size());

  std::mt19937_64 rng(seed);
  std::vector<int> party_order(k);
  std::iota(party_order.begin(), party_order.end(), 0);
  shuffle_in_place(party_order, rng);

  std::vector<int> candidate_axis;
  for (int pos = 0; pos < k; ++pos) {
    std::vector<int> block = names.members[party_order[pos]];
    shuffle_in_place(block, rng);
    candidate_axis.insert(candidate_axis.end(), block.begin(), block.end());
  }

  std::vector<std::vector<std::string>> rankings;
  for (int v = 0; v < voter_count; ++v) {
    std::vector<std::string> ranking;
    for (int c : sample_peaked_vote(candidate_axis, rng)) {
      ranking.push_back(names.candidates[c]);
    }
    rankings.push_back(std::move(ranking));
  }

  Election e = build_election(names.candidates, names.parties, rankings);
  return {std::move(e), candidate_axis};
}

Election named_fixture(const std::string& name) {
  if (name == "two-party-cycle") {
    return build_election({"a1", "a2", "b1", "b2"},
                          {{"A", {"a1", "a2"}}, {"B", {"b1", "b2"}}},
                          {{"a1", "b1", "a2", "b2"},
                           {"b1", "a2", "b2", "a1"},
                           {"a2", "b2", "a1", "b1"}});
  }
  if (name == "euclidean-four-party") {
    EuclideanSpec spec;
    spec.candidates = {{"p3", "P3", Rational::parse("0")},
                       {"p1", "P1", Rational::parse("2")},
                       {"p'1", "P1", Rational::parse("5")},
                       {"p2", "P2", Rational::parse("7")},
                       {"p'2", "P2", Rational::parse("11")},
                       {"p4", "P4", Rational::parse("12")}};
    spec.voters = {{Rational::parse("2"), 5},
                   {Rational::parse("3"), 2},
                   {Rational::parse("5"), 6},
                   {Rational::parse("8.9"), 2},
                   {Rational::parse("11"), 7}};
    return euclidean_election(spec);
  }
  if (name == "four-party-axis") {
    return build_election(
        {"a", "b1", "b2", "c1", "c2", "d"},
        {{"Pa", {"a"}}, {"Pb", {"b1", "b2"}}, {"Pc", {"c1", "c2"}}, {"Pd", {"d"}}},
        {{"c2", "b1", "c1", "d", "b2", "a"},
         {"b1", "c1", "b2", "c2", "a", "d"},
         {"b2", "c2", "c1", "d", "b1", "a"}});
  }
  if (name == "aligned-not-single-peaked") {
    return build_election({"a1", "a2", "b"}, {{"A", {"a1", "a2"}}, {"B", {"b"}}},
                          {{"a2", "b", "a1"}, {"a1", "b", "a2"}, {"a1", "a2", "b"}});
  }
  throw input_error("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"two-party-cycle", "euclidean-four-party", "four-party-axis",
          "aligned-not-single-peaked"};
}

namespace {

void validate_candidate_axis(const std::vector<int>& axis, const Election& e) {
  if (static_cast<int>(axis.size()) != e.candidate_count()) {
    throw input_error("candidate axis is not a permutation of the candidates");
  }
  std::vector<char> seen(e.candidate_count(), 0);
  for (int c : axis) {
    if (c < 0 || c >= e.candidate_count() || seen[c]) {
      throw input_error("candidate axis is not a permutation of the candidates");
    }
    seen[c] = 1;
  }
}

}  // namespace

bool vote_single_peaked(const Vote& vote, const std::vector<int>& candidate_axis,
                        const Election& election) {
  validate_candidate_axis(candidate_axis, election);
  if (vote.ranking.empty()) return true;
  std::vector<int> position(candidate_axis.size());
  for (std::size_t t = 0; t < candidate_axis.size(); ++t) {
    position[candidate_axis[t]] = static_cast<int>(t);
  }
  int lo = position[vote.ranking[0]];
  int hi = lo;
  for (std::size_t t = 1; t < vote.ranking.size(); ++t) {
    int p = position[vote.ranking[t]];
    if (p == lo - 1) {
      lo = p;
    } else if (p == hi + 1) {
      hi = p;
    } else {
      return false;
    }
  }
  return true;
}

bool profile_single_peaked(const Election& election,
                           const std::vector<int>& candidate_axis) {
  validate_candidate_axis(candidate_axis, election);
  for (const auto& vote : election.votes) {
    if (!vote_single_peaked(vote, candidate_axis, election)) return false;
  }
  return true;
}

std::optional<std::vector<int>> single_peaked_any_axis(const Election& election,
                                                       int max_candidates) {
  if (election.candidate_count() > max_candidates) {
    throw cap_exceeded_error("single-peaked axis search over " +
                             std::to_string(election.candidate_count()) +
                             " candidates exceeds the cap of " +
                             std::to_string(max_candidates));
  }
  std::vector<int> axis(election.candidate_count());
  std::iota(axis.begin(), axis.end(), 0);
  do {
    if (profile_single_peaked(election, axis)) return axis;
  } while (std::next_permutation(axis.begin(), axis.end()));
  return std::nullopt;
}

}  // namespace nomination
