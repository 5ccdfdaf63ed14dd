#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "nomination/core.hpp"
#include "nomination/equilibrium.hpp"
#include "nomination/errors.hpp"
#include "nomination/generators.hpp"
#include "nomination/oracle.hpp"
#include "nomination/president.hpp"
#include "nomination/profile_io.hpp"
#include "nomination/recognition.hpp"

namespace {

using namespace nomination;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "text";
  long long max_schemes = default_scheme_cap;
};

std::string read_input(const Options& options) {
  if (options.input == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(options.input);
  if (!file) {
    throw input_error("cannot open input file '" + options.input + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const Options& options, const std::string& text) {
  if (options.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(options.output);
  if (!file) {
    throw input_error("cannot open output file '" + options.output + "'");
  }
  file << text;
}

void emit(const Options& options, const Report& report) {
  if (options.format == "structured") {
    write_output(options, serialize_report(report));
    return;
  }
  Report trimmed;
  for (const auto& field : report.fields) {
    if (field.first != "query") trimmed.fields.push_back(field);
  }
  write_output(options, serialize_report(trimmed));
}

int resolve_party(const Election& election, const std::string& token) {
  int index = election.party_index(token);
  if (index >= 0) return index;
  bool digits = !token.empty();
  for (char c : token) digits = digits && c >= '0' && c <= '9';
  if (digits) {
    index = std::atoi(token.c_str());
    if (index >= 0 && index < election.party_count()) return index;
  }
  throw input_error("unknown party '" + token + "'");
}

std::string axis_to_string(const Election& election, const PartyAxis& axis) {
  std::string text;
  for (std::size_t i = 0; i < axis.order.size(); ++i) {
    if (i > 0) text += ' ';
    text += election.party_names[axis.order[i]];
  }
  return text;
}

std::string scheme_to_string(const Election& election,
                             const NominationScheme& scheme) {
  std::string text;
  for (int p = 0; p < election.party_count(); ++p) {
    if (p > 0) text += ' ';
    text += election.party_names[p] + "=" +
            election.candidate_names[scheme[p]];
  }
  return text;
}

void add_witness(Report& report, const Election& election,
                 const NominationScheme& scheme) {
  report.add("witness", scheme_to_string(election, scheme));
  ScoreVector scores = reduced_scores(election, scheme);
  std::string score_text;
  for (int p = 0; p < election.party_count(); ++p) {
    if (p > 0) score_text += ' ';
    score_text += std::to_string(scores[p]);
  }
  report.add("scores", score_text);
  std::string winner_text;
  for (int p : winners(election, scheme)) {
    if (!winner_text.empty()) winner_text += ' ';
    winner_text += election.party_names[p];
  }
  report.add("winners", winner_text);
}

void add_score_tables(Report& report, const Election& election) {
  if (scheme_count(election) > 64) return;
  for_each_scheme(election, [&](const NominationScheme& scheme) {
    std::string row;
    for (int p = 0; p < election.party_count(); ++p) {
      if (p > 0) row += ' ';
      row += election.candidate_names[scheme[p]];
    }
    row += " =";
    for (int score : reduced_scores(election, scheme)) {
      row += ' ' + std::to_string(score);
    }
    report.add("table", row);
    return true;
  });
}

void add_axis(Report& report, const Election& election) {
  std::optional<PartyAxis> axis = recognize_pasp(election);
  if (axis) report.add("axis", axis_to_string(election, *axis));
}

int run_recognize(const Options& options, bool brute) {
  Election election = parse_profile(read_input(options));
  std::optional<PartyAxis> axis =
      brute ? brute_recognize_pasp(election) : recognize_pasp(election);
  Report report;
  report.add("query", brute ? "brute-recognize" : "recognize");
  report.add("answer", axis ? "yes" : "no");
  if (axis) report.add("axis", axis_to_string(election, *axis));
  if (brute) report.add("oracle", "exhaustive axis search");
  add_score_tables(report, election);
  emit(options, report);
  return axis ? 0 : 1;
}

int run_equilibrium(const Options& options, const std::string& party_token,
                    bool brute) {
  Election election = parse_profile(read_input(options));
  Report report;
  std::optional<NominationScheme> witness;
  std::optional<int> score;
  if (party_token.empty()) {
    report.add("query", brute ? "brute-equilibrium" : "equilibrium");
    if (brute) {
      std::vector<NominationScheme> all =
          brute_equilibria(election, options.max_schemes);
      report.add("count", std::to_string(all.size()));
      if (!all.empty()) witness = all.front();
    } else {
      witness = equilibrium_exists(election);
    }
  } else {
    int party = resolve_party(election, party_token);
    report.add("query", brute ? "brute-equilibrium" : "equilibrium");
    report.add("party", election.party_names[party]);
    if (brute) {
      witness = brute_equilibrium_president(election, party,
                                            options.max_schemes);
    } else {
      auto found = equilibrium_president(election, party);
      if (found) {
        witness = found->first;
        score = found->second;
      }
    }
  }
  report.add("answer", witness ? "yes" : "none");
  if (witness) add_witness(report, election, *witness);
  if (score) report.add("score", std::to_string(*score));
  if (brute) {
    report.add("oracle", "exhaustive scheme search");
  } else {
    add_axis(report, election);
  }
  add_score_tables(report, election);
  emit(options, report);
  return witness ? 0 : 1;
}

int run_possible(const Options& options, const std::string& party_token,
                 bool brute) {
  Election election = parse_profile(read_input(options));
  int party = resolve_party(election, party_token);
  Report report;
  report.add("query", brute ? "brute-possible" : "possible");
  report.add("party", election.party_names[party]);
  std::optional<NominationScheme> witness;
  std::optional<int> score;
  if (brute) {
    witness = brute_possible_president(election, party, options.max_schemes);
  } else {
    auto found = possible_president(election, party);
    if (found) {
      witness = found->first;
      score = found->second;
    }
  }
  report.add("answer", witness ? "yes" : "no");
  if (witness) add_witness(report, election, *witness);
  if (score) report.add("score", std::to_string(*score));
  if (brute) {
    report.add("oracle", "exhaustive scheme search");
  } else {
    add_axis(report, election);
  }
  add_score_tables(report, election);
  emit(options, report);
  return witness ? 0 : 1;
}

int run_necessary(const Options& options, const std::string& party_token,
                  bool brute) {
  Election election = parse_profile(read_input(options));
  int party = resolve_party(election, party_token);
  Report report;
  report.add("query", brute ? "brute-necessary" : "necessary");
  report.add("party", election.party_names[party]);
  bool answer = brute
                    ? brute_necessary_president(election, party,
                                                options.max_schemes)
                    : necessary_president(election, party);
  report.add("answer", answer ? "yes" : "no");
  if (brute) {
    report.add("oracle", "exhaustive scheme search");
  } else {
    add_axis(report, election);
  }
  add_score_tables(report, election);
  emit(options, report);
  return answer ? 0 : 1;
}

int run_check(const Options& options) {
  Election election = parse_profile(read_input(options));
  Report report;
  report.add("query", "cross-validate");
  bool agree = true;
  auto record = [&](const std::string& key, bool same) {
    report.add(key, same ? "agree" : "disagree");
    agree = agree && same;
  };

  std::optional<PartyAxis> fast = recognize_pasp(election);
  std::optional<PartyAxis> slow = brute_recognize_pasp(election);
  record("recognize", fast.has_value() == slow.has_value());
  if (fast) report.add("axis", axis_to_string(election, *fast));

  if (fast && slow) {
    std::vector<NominationScheme> all =
        brute_equilibria(election, options.max_schemes);
    record("equilibrium-exists",
           equilibrium_exists(election).has_value() == !all.empty());
    for (int p = 0; p < election.party_count(); ++p) {
      const std::string& name = election.party_names[p];
      auto dp = equilibrium_president(election, p);
      auto oracle = brute_equilibrium_president(election, p,
                                                options.max_schemes);
      record("equilibrium " + name, dp.has_value() == oracle.has_value());
      auto possible = possible_president(election, p);
      auto possible_oracle =
          brute_possible_president(election, p, options.max_schemes);
      record("possible " + name,
             possible.has_value() == possible_oracle.has_value());
      record("necessary " + name,
             necessary_president(election, p) ==
                 brute_necessary_president(election, p, options.max_schemes));
    }
  }
  report.add("status", agree ? "agree" : "disagree");
  emit(options, report);
  if (!agree) {
    throw invariant_error("solver and oracle disagree");
  }
  return 0;
}

std::vector<int> parse_party_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    for (char c : item) {
      if (c < '0' || c > '9') {
        throw input_error("party sizes must be a comma-separated list of "
                          "positive integers, got '" +
                          text + "'");
      }
    }
    sizes.push_back(std::atoi(item.c_str()));
  }
  if (sizes.empty()) {
    throw input_error("party sizes must be a comma-separated list of "
                      "positive integers, got '" +
                      text + "'");
  }
  return sizes;
}

EuclideanSpec parse_euclidean_spec(const std::string& text) {
  EuclideanSpec spec;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  auto fail = [](int line, int column, const std::string& message) {
    throw input_error("line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message);
  };
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    std::string word;
    while (words >> word) tokens.push_back(word);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "candidate") {
      if (tokens.size() != 4) {
        fail(line_no, 1, "expected 'candidate <id> <party> <position>'");
      }
      spec.candidates.push_back(
          {tokens[1], tokens[2], Rational::parse(tokens[3])});
      continue;
    }
    if (tokens[0] == "voter") {
      if (tokens.size() != 2 && tokens.size() != 3) {
        fail(line_no, 1, "expected 'voter <position> [multiplicity]'");
      }
      EuclideanVoter voter;
      voter.position = Rational::parse(tokens[1]);
      if (tokens.size() == 3) {
        voter.multiplicity = std::atoi(tokens[2].c_str());
        if (voter.multiplicity <= 0) {
          fail(line_no, 1, "multiplicity must be positive");
        }
      }
      spec.voters.push_back(voter);
      continue;
    }
    fail(line_no, 1, "unknown directive '" + tokens[0] + "'");
  }
  return spec;
}

int run_generate(const Options& options, const std::string& kind,
                 std::uint64_t seed, const std::string& parties, int voters,
                 const std::string& name) {
  std::string text;
  if (kind == "pasp") {
    auto [election, axis] = random_pasp(seed, parse_party_sizes(parties),
                                        voters);
    text = "# party axis: " + axis_to_string(election, axis) + "\n" +
           serialize_profile(election);
  } else if (kind == "sp-pasp") {
    auto [election, axis] = random_sp_pasp(seed, parse_party_sizes(parties),
                                           voters);
    std::string axis_text;
    for (std::size_t i = 0; i < axis.size(); ++i) {
      if (i > 0) axis_text += ' ';
      axis_text += election.candidate_names[axis[i]];
    }
    text = "# candidate axis: " + axis_text + "\n" +
           serialize_profile(election);
  } else if (kind == "euclidean") {
    Election election =
        euclidean_election(parse_euclidean_spec(read_input(options)));
    text = serialize_profile(election);
  } else {
    text = serialize_profile(named_fixture(name));
  }
  write_output(options, text);
  return 0;
}

long long initial_scheme_cap() {
  const char* env = std::getenv("NOMINATE_MAX_SCHEMES");
  if (env == nullptr || *env == '\0') return default_scheme_cap;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || value <= 0) {
    throw input_error("NOMINATE_MAX_SCHEMES must be a positive integer");
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  std::string party_token;
  std::string generate_parties = "2,2";
  std::string fixture_name;
  std::uint64_t seed = 1;
  int generate_voters = 4;
  bool cross_validate = false;

  CLI::App app{"Strategic candidate nomination under Plurality voting"};
  app.require_subcommand(1);
  app.add_option("--input", options.input, "Profile file, '-' for stdin");
  app.add_option("--output", options.output, "Output file, '-' for stdout");
  app.add_option("--format", options.format, "Report style")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-schemes", options.max_schemes,
                 "Scheme cap for exhaustive searches");

  CLI::App* recognize = app.add_subcommand(
      "recognize", "Find a party axis certifying the profile");
  CLI::App* equilibrium = app.add_subcommand(
      "equilibrium", "Find a pure Nash equilibrium of the nomination game");
  equilibrium->add_option("--party", party_token,
                          "Require this party's nominee to win");
  CLI::App* possible = app.add_subcommand(
      "possible", "Find a scheme in which the party's nominee wins");
  possible->add_option("--party", party_token, "Party to test")->required();
  CLI::App* necessary = app.add_subcommand(
      "necessary", "Decide whether the party wins under every scheme");
  necessary->add_option("--party", party_token, "Party to test")->required();

  CLI::App* brute = app.add_subcommand(
      "brute", "Answer a query by exhaustive search");
  brute->require_subcommand(1);
  CLI::App* brute_recognize = brute->add_subcommand(
      "recognize", "Try every party permutation as an axis");
  CLI::App* brute_equilibrium = brute->add_subcommand(
      "equilibrium", "Enumerate all schemes and keep equilibria");
  brute_equilibrium->add_option("--party", party_token,
                                "Require this party's nominee to win");
  CLI::App* brute_possible = brute->add_subcommand(
      "possible", "Enumerate schemes until the party wins");
  brute_possible->add_option("--party", party_token, "Party to test")
      ->required();
  CLI::App* brute_necessary = brute->add_subcommand(
      "necessary", "Check the party wins under every scheme");
  brute_necessary->add_option("--party", party_token, "Party to test")
      ->required();

  CLI::App* generate = app.add_subcommand(
      "generate", "Write a profile instead of answering a query");
  generate->require_subcommand(1);
  CLI::App* gen_pasp = generate->add_subcommand(
      "pasp", "Random party-aligned single-peaked profile");
  CLI::App* gen_sp = generate->add_subcommand(
      "sp-pasp", "Random profile single-peaked on one candidate axis");
  CLI::App* gen_euclid = generate->add_subcommand(
      "euclidean", "Profile from 1-D positions read from the input");
  CLI::App* gen_fixture = generate->add_subcommand(
      "fixture", "One of the built-in regression profiles");
  for (CLI::App* sub : {gen_pasp, gen_sp}) {
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--parties", generate_parties,
                    "Comma-separated party sizes");
    sub->add_option("--voters", generate_voters, "Number of voters");
  }
  std::string fixture_help = "Fixture name:";
  for (const std::string& known : fixture_names()) {
    fixture_help += ' ' + known;
  }
  gen_fixture->add_option("--name", fixture_name, fixture_help)->required();

  CLI::App* check = app.add_subcommand(
      "check", "Run solver and oracle on the same profile");
  check->add_flag("--cross-validate", cross_validate,
                  "Assert solver/oracle agreement");

  for (CLI::App* sub :
       {recognize, equilibrium, possible, necessary, brute, brute_recognize,
        brute_equilibrium, brute_possible, brute_necessary, generate, gen_pasp,
        gen_sp, gen_euclid, gen_fixture, check}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    options.max_schemes = app.count("--max-schemes")
                              ? options.max_schemes
                              : initial_scheme_cap();
    if (recognize->parsed()) return run_recognize(options, false);
    if (equilibrium->parsed()) return run_equilibrium(options, party_token,
                                                      false);
    if (possible->parsed()) return run_possible(options, party_token, false);
    if (necessary->parsed()) return run_necessary(options, party_token, false);
    if (brute->parsed()) {
      if (brute_recognize->parsed()) return run_recognize(options, true);
      if (brute_equilibrium->parsed()) {
        return run_equilibrium(options, party_token, true);
      }
      if (brute_possible->parsed()) {
        return run_possible(options, party_token, true);
      }
      return run_necessary(options, party_token, true);
    }
    if (generate->parsed()) {
      std::string kind = gen_pasp->parsed() ? "pasp"
                         : gen_sp->parsed() ? "sp-pasp"
                         : gen_euclid->parsed() ? "euclidean"
                                                : "fixture";
      return run_generate(options, kind, seed, generate_parties,
                          generate_voters, fixture_name);
    }
    if (check->parsed()) return run_check(options);
    return 2;
  } catch (const cap_exceeded_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
