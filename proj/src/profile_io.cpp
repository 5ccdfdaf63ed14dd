#include "nomination/profile_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "nomination/errors.hpp"

namespace nomination {
namespace {

struct Token {
  std::string text;
  int column = 0;
};

[[noreturn]] void fail(int line, int column, const std::string& message) {
  throw input_error("line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message);
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    tokens.push_back(
        {line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool parse_count(const std::string& text, int& out) {
  if (text.empty() || text.size() > 9) return false;
  long long value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  out = static_cast<int>(value);
  return true;
}

// A multiplicity prefix is digits followed by a lone ':'.
bool parse_multiplicity(const std::string& text, int& out) {
  if (text.size() < 2 || text.back() != ':') return false;
  return parse_count(text.substr(0, text.size() - 1), out);
}

}  // namespace

Election ProfileDocument::to_election() const {
  std::vector<std::string> names;
  names.reserve(candidates.size());
  for (const CandidateDecl& decl : candidates) names.push_back(decl.id);
  std::vector<std::vector<std::string>> rankings;
  for (const VoteLine& line : votes) {
    for (int i = 0; i < line.multiplicity; ++i) rankings.push_back(line.ranking);
  }
  Election election = build_election(names, parties, rankings);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    election.candidate_display[i] = candidates[i].display;
  }
  return election;
}

ProfileDocument parse_document(const std::string& text) {
  ProfileDocument doc;
  bool saw_header = false;
  int header_line = 0;
  int header_columns[3] = {0, 0, 0};
  enum Section { kHeader, kCandidates, kParties, kVotes };
  Section section = kHeader;

  std::map<std::string, std::pair<int, int>> candidate_where;
  std::map<std::string, std::string> candidate_party;
  std::map<std::string, int> party_where;
  long long expanded_voters = 0;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;
    const Token& keyword = tokens[0];

    if (keyword.text == "election") {
      if (saw_header) {
        fail(line_no, keyword.column, "duplicate 'election' header");
      }
      if (tokens.size() != 4) {
        fail(line_no, keyword.column,
             "expected 'election <candidates> <parties> <voters>'");
      }
      int counts[3];
      for (int i = 0; i < 3; ++i) {
        if (!parse_count(tokens[i + 1].text, counts[i])) {
          fail(line_no, tokens[i + 1].column,
               "count '" + tokens[i + 1].text +
                   "' is not a non-negative integer");
        }
        header_columns[i] = tokens[i + 1].column;
      }
      doc.declared_candidates = counts[0];
      doc.declared_parties = counts[1];
      doc.declared_voters = counts[2];
      saw_header = true;
      header_line = line_no;
      section = kCandidates;
      continue;
    }
    if (!saw_header) {
      fail(line_no, keyword.column,
           "expected 'election <candidates> <parties> <voters>' before '" +
               keyword.text + "'");
    }

    if (keyword.text == "candidate") {
      if (section != kCandidates) {
        fail(line_no, keyword.column,
             "candidate declared after the " +
                 std::string(section == kParties ? "party" : "vote") +
                 " section began");
      }
      if (tokens.size() < 2) {
        fail(line_no, keyword.column, "candidate declaration needs an id");
      }
      const Token& id = tokens[1];
      if (id.text.back() == ':') {
        fail(line_no, id.column,
             "candidate id '" + id.text + "' may not end with ':'");
      }
      if (candidate_where.count(id.text)) {
        fail(line_no, id.column, "duplicate candidate '" + id.text + "'");
      }
      std::string display = id.text;
      if (tokens.size() > 2) {
        std::size_t start = static_cast<std::size_t>(tokens[2].column) - 1;
        std::size_t end = raw.find_last_not_of(" \t");
        display = raw.substr(start, end - start + 1);
      }
      candidate_where[id.text] = {line_no, id.column};
      doc.candidates.push_back({id.text, display});
      continue;
    }

    if (keyword.text == "party") {
      if (section == kVotes) {
        fail(line_no, keyword.column,
             "party declared after the vote section began");
      }
      section = kParties;
      if (tokens.size() < 2) {
        fail(line_no, keyword.column, "party declaration needs an id");
      }
      const Token& id = tokens[1];
      if (party_where.count(id.text)) {
        fail(line_no, id.column, "duplicate party '" + id.text + "'");
      }
      if (tokens.size() < 3) {
        fail(line_no, id.column, "party '" + id.text + "' has no members");
      }
      std::vector<std::string> members;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const Token& member = tokens[i];
        if (!candidate_where.count(member.text)) {
          fail(line_no, member.column,
               "unknown candidate '" + member.text + "'");
        }
        auto owner = candidate_party.find(member.text);
        if (owner != candidate_party.end()) {
          fail(line_no, member.column,
               "candidate '" + member.text + "' already belongs to party '" +
                   owner->second + "'");
        }
        candidate_party[member.text] = id.text;
        members.push_back(member.text);
      }
      party_where[id.text] = line_no;
      doc.parties.emplace_back(id.text, std::move(members));
      continue;
    }

    if (keyword.text == "vote") {
      section = kVotes;
      VoteLine vote;
      std::size_t first = 1;
      if (tokens.size() > 1 && parse_multiplicity(tokens[1].text,
                                                  vote.multiplicity)) {
        if (vote.multiplicity == 0) {
          fail(line_no, tokens[1].column, "multiplicity must be positive");
        }
        first = 2;
      }
      if (first >= tokens.size()) {
        fail(line_no, keyword.column, "vote lists no candidates");
      }
      std::vector<bool> seen(doc.candidates.size(), false);
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < doc.candidates.size(); ++i) {
        index[doc.candidates[i].id] = i;
      }
      for (std::size_t i = first; i < tokens.size(); ++i) {
        const Token& entry = tokens[i];
        auto at = index.find(entry.text);
        if (at == index.end()) {
          fail(line_no, entry.column,
               "unknown candidate '" + entry.text + "'");
        }
        if (seen[at->second]) {
          fail(line_no, entry.column,
               "candidate '" + entry.text + "' appears twice in a ranking");
        }
        seen[at->second] = true;
        vote.ranking.push_back(entry.text);
      }
      if (vote.ranking.size() != doc.candidates.size()) {
        for (std::size_t i = 0; i < seen.size(); ++i) {
          if (!seen[i]) {
            fail(line_no, keyword.column,
                 "vote is missing candidate '" + doc.candidates[i].id + "'");
          }
        }
      }
      expanded_voters += vote.multiplicity;
      doc.votes.push_back(std::move(vote));
      continue;
    }

    fail(line_no, keyword.column, "unknown directive '" + keyword.text + "'");
  }

  if (!saw_header) {
    fail(1, 1, "expected 'election <candidates> <parties> <voters>'");
  }
  if (static_cast<int>(doc.candidates.size()) != doc.declared_candidates) {
    fail(header_line, header_columns[0],
         "header declares " + std::to_string(doc.declared_candidates) +
             " candidates, found " + std::to_string(doc.candidates.size()));
  }
  if (static_cast<int>(doc.parties.size()) != doc.declared_parties) {
    fail(header_line, header_columns[1],
         "header declares " + std::to_string(doc.declared_parties) +
             " parties, found " + std::to_string(doc.parties.size()));
  }
  if (expanded_voters != doc.declared_voters) {
    fail(header_line, header_columns[2],
         "header declares " + std::to_string(doc.declared_voters) +
             " voters, found " + std::to_string(expanded_voters));
  }
  for (const CandidateDecl& decl : doc.candidates) {
    if (!candidate_party.count(decl.id)) {
      auto where = candidate_where[decl.id];
      fail(where.first, where.second,
           "candidate '" + decl.id + "' belongs to no party");
    }
  }
  return doc;
}

Election parse_profile(const std::string& text) {
  return parse_document(text).to_election();
}

std::string serialize_profile(const Election& election) {
  std::ostringstream out;
  out << "election " << election.candidate_count() << ' '
      << election.party_count() << ' ' << election.voter_count() << '\n';
  for (int c = 0; c < election.candidate_count(); ++c) {
    out << "candidate " << election.candidate_names[c];
    if (election.candidate_display[c] != election.candidate_names[c]) {
      out << ' ' << election.candidate_display[c];
    }
    out << '\n';
  }
  for (int p = 0; p < election.party_count(); ++p) {
    out << "party " << election.party_names[p];
    for (int member : election.party_members[p]) {
      out << ' ' << election.candidate_names[member];
    }
    out << '\n';
  }
  int v = 0;
  while (v < election.voter_count()) {
    int run = v + 1;
    while (run < election.voter_count() &&
           election.votes[run].ranking == election.votes[v].ranking) {
      ++run;
    }
    out << "vote ";
    if (run - v > 1) out << (run - v) << ": ";
    for (std::size_t i = 0; i < election.votes[v].ranking.size(); ++i) {
      if (i > 0) out << ' ';
      out << election.candidate_names[election.votes[v].ranking[i]];
    }
    out << '\n';
    v = run;
  }
  return out.str();
}

void Report::add(const std::string& key, const std::string& value) {
  fields.emplace_back(key, value);
}

std::string serialize_report(const Report& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.fields) {
    out << key << ": " << value << '\n';
  }
  return out.str();
}

}  // namespace nomination
