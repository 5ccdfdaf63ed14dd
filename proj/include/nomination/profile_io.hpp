#ifndef NOMINATION_PROFILE_IO_HPP_
#define NOMINATION_PROFILE_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "nomination/core.hpp"

namespace nomination {

// One candidate declaration: the token used everywhere else in the file plus
// an optional free-form display name (defaults to the id).
struct CandidateDecl {
  std::string id;
  std::string display;

  bool operator==(const CandidateDecl&) const = default;
};

// One vote line before expansion.
struct VoteLine {
  int multiplicity = 1;
  std::vector<std::string> ranking;

  bool operator==(const VoteLine&) const = default;
};

// Parsed form of a profile file:
//   election <candidates> <parties> <voters>
//   candidate <id> [display...]
//   party <id> <member-id>...
//   vote [m:] <candidate-id>...
// Sections appear in that order; full-line # comments and blank lines are
// allowed anywhere. The voter count tallies expanded multiplicities.
struct ProfileDocument {
  int declared_candidates = 0;
  int declared_parties = 0;
  int declared_voters = 0;
  std::vector<CandidateDecl> candidates;
  std::vector<std::pair<std::string, std::vector<std::string>>> parties;
  std::vector<VoteLine> votes;

  Election to_election() const;

  bool operator==(const ProfileDocument&) const = default;
};

// Parses the format above. All diagnostics read "line L, column C: message"
// with 1-based positions.
ProfileDocument parse_document(const std::string& text);

Election parse_profile(const std::string& text);

// Canonical deterministic form: declaration order preserved, display names
// emitted only when they differ from the id, consecutive identical votes
// grouped under one multiplicity line.
std::string serialize_profile(const Election& election);

// Ordered key/value fields describing a query result.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value);
};

// One "key: value" line per field.
std::string serialize_report(const Report& report);

}  // namespace nomination

#endif  // NOMINATION_PROFILE_IO_HPP_
