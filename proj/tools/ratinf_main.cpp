// Command-line front end: query, extension, ordering, rank, check, roundtrip.
// Exit codes: 0 ok, 1 check suite found failures, 2 parse error, 3 limit or
// validation error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ratinf/correspondence.hpp"
#include "ratinf/defaults.hpp"
#include "ratinf/dnf.hpp"
#include "ratinf/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitLimitError = 3;

struct QueryText {
  std::string antecedent;
  std::string consequent;
};

// The |~ token must be surrounded by whitespace.
QueryText split_query(const std::string& text) {
  std::size_t pos = text.find("|~");
  if (pos == std::string::npos || pos == 0 || pos + 2 >= text.size() ||
      !std::isspace(static_cast<unsigned char>(text[pos - 1])) ||
      !std::isspace(static_cast<unsigned char>(text[pos + 2])))
    throw ratinf::ParseError("query must have the form \"<formula> |~ <formula>\"", pos);
  return {text.substr(0, pos), text.substr(pos + 2)};
}

ratinf::DefaultBase load_base(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ratinf::ParseError("cannot open base file '" + path + "'", 0);
  return ratinf::parse_base_file(in);
}

ratinf::ExtensionMode parse_mode(const std::string& mode) {
  if (mode == "strict") return ratinf::ExtensionMode::strict;
  if (mode == "liberal") return ratinf::ExtensionMode::liberal;
  throw ratinf::ParseError("mode must be 'strict' or 'liberal'", 0);
}

ratinf::SubsetOrder parse_subset_order(const std::string& order) {
  if (order == "mirrored") return ratinf::SubsetOrder::mirrored;
  if (order == "literal") return ratinf::SubsetOrder::literal;
  throw ratinf::ParseError("subset order must be 'mirrored' or 'literal'", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational inference over orderings, ranked chains and default bases"};
  app.require_subcommand(1);

  std::string base_path;
  std::string mode = "strict";
  std::string subset_order = "mirrored";
  std::string statement;
  std::string input_formula;
  int atoms = 2;
  int trials = 200;
  std::uint64_t seed = 0;

  auto add_base_options = [&](CLI::App* cmd) {
    cmd->add_option("--base", base_path, "default base file")->required();
    cmd->add_option("--mode", mode, "strict or liberal");
    cmd->add_option("--subset-order", subset_order, "mirrored or literal");
  };

  CLI::App* query_cmd = app.add_subcommand("query", "decide \"a |~ b\" against a base");
  add_base_options(query_cmd);
  query_cmd->add_option("statement", statement, "\"<formula> |~ <formula>\"")->required();

  CLI::App* ext_cmd = app.add_subcommand("extension", "print the extension of a formula");
  add_base_options(ext_cmd);
  ext_cmd->add_option("input", input_formula, "input formula")->required();

  CLI::App* ord_cmd = app.add_subcommand("ordering", "dump the induced ordering by level");
  add_base_options(ord_cmd);

  CLI::App* rank_cmd = app.add_subcommand("rank", "rank and range of an assertion");
  add_base_options(rank_cmd);
  rank_cmd->add_option("statement", statement, "\"<formula> |~ <formula>\"")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "verify the representation theorems");
  check_cmd->add_option("--atoms", atoms, "atom count (1..3)");
  check_cmd->add_option("--trials", trials, "number of random chains");
  check_cmd->add_option("--seed", seed, "master seed");

  CLI::App* round_cmd = app.add_subcommand("roundtrip", "round-trip checks only");
  round_cmd->add_option("--atoms", atoms, "atom count (1..3)");
  round_cmd->add_option("--trials", trials, "number of random chains");
  round_cmd->add_option("--seed", seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*query_cmd) {
      ratinf::DefaultBase base = load_base(base_path);
      QueryText q = split_query(statement);
      bool yes = ratinf::query(base, parse_mode(mode),
                               ratinf::parse_formula(q.antecedent, base.env()),
                               ratinf::parse_formula(q.consequent, base.env()),
                               parse_subset_order(subset_order));
      std::cout << (yes ? "yes" : "no") << "\n";
      return kExitOk;
    }

    if (*ext_cmd) {
      ratinf::DefaultBase base = load_base(base_path);
      ratinf::Extension ext =
          ratinf::extension(base, parse_mode(mode),
                            ratinf::parse_formula(input_formula, base.env()),
                            parse_subset_order(subset_order));
      if (!ext.theory.consistent())
        std::cout << "INCONSISTENT\n";
      else
        std::cout << ratinf::dnf_string(ext.theory.models, base.env()) << "\n";
      return kExitOk;
    }

    if (*ord_cmd) {
      ratinf::DefaultBase base = load_base(base_path);
      ratinf::RationalOrdering ord = ratinf::ordering_from_base(
          base, parse_mode(mode), parse_subset_order(subset_order));
      std::cout << ratinf::dump_levels(ord);
      return kExitOk;
    }

    if (*rank_cmd) {
      ratinf::DefaultBase base = load_base(base_path);
      QueryText q = split_query(statement);
      ratinf::RankedChain chain = ratinf::base_chain(base, parse_mode(mode),
                                                     parse_subset_order(subset_order));
      ratinf::AssertionRank rank = ratinf::assertion_rank(
          chain, ratinf::parse_formula(q.antecedent, base.env()),
          ratinf::parse_formula(q.consequent, base.env()), ratinf::Context::full(base.env()));
      if (rank.degenerate)
        std::cout << "degenerate\n";
      else
        std::cout << "rank=" << rank.rank << " range=[" << rank.lo << "," << rank.hi << "]\n";
      return kExitOk;
    }

    if (*check_cmd || *round_cmd) {
      if (atoms < 1 || atoms > ratinf::kMaxExhaustiveAtoms)
        throw ratinf::LimitError("check suites need --atoms between 1 and 3");
      std::vector<std::string> names = {"a", "b", "c"};
      ratinf::AtomEnv env(std::vector<std::string>(names.begin(), names.begin() + atoms));
      ratinf::VerifyReport report = *check_cmd
                                        ? ratinf::verify_theorems(env, trials, seed)
                                        : ratinf::verify_round_trips(env, trials, seed);
      if (report.ok()) {
        std::cout << "OK " << report.trials << "/" << report.trials << "\n";
        return kExitOk;
      }
      std::cout << report.to_text();
      std::cout << "FAIL " << report.failures.size() << " failure(s) in " << report.trials
                << " trial(s)\n";
      return kExitCheckFailed;
    }
  } catch (const ratinf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ratinf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimitError;
  }
  return kExitOk;
}
