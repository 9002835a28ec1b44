#include "combex/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "combex/engine/searcher.hpp"
#include "combex/engine/serialize.hpp"
#include "combex/strategies/pack.hpp"
#include "combex/tilings/perm_oracle.hpp"
#include "combex/transfer/count.hpp"
#include "combex/transfer/gf.hpp"
#include "combex/words/words.hpp"

namespace combex::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void print_terms(std::ostream& out, const std::vector<Integer>& terms) {
  for (const auto& t : terms) out << t << "\n";
}

struct ExploreArgs {
  std::size_t max_expansions = 200000;
  double max_seconds = 300.0;
  std::string json_path;
  std::string dot_path;
};

template <class C>
int explore_and_report(Searcher<C>& searcher, const ExploreArgs& a, std::size_t terms, std::ostream& out,
                       std::ostream& err) {
  SearchLimits limits;
  limits.max_expansions = a.max_expansions;
  limits.max_time = std::chrono::duration<double>(a.max_seconds);
  const ExplorationStatus status = searcher.run(limits);
  err << "classes: " << status.classes_seen << "\n"
      << "rules: " << status.rules_found << "\n"
      << "expansions: " << status.expansions_performed << "\n";
  if (!status.spec_found) {
    err << "no specification found within the limits\n";
    return kLimitsExhausted;
  }
  const Specification& spec = *searcher.specification();
  err << "specification: " << spec.rules.size() << " rules\n";
  if (!a.json_path.empty()) write_file(a.json_path, spec_to_json(spec));
  if (!a.dot_path.empty()) write_file(a.dot_path, spec_to_dot(spec));
  print_terms(out, count_terms(spec, terms));
  return kSpecFound;
}

}  // namespace

std::vector<std::vector<int>> parse_basis(const std::string& text) {
  std::vector<std::vector<int>> basis;
  std::size_t start = 0;
  for (;;) {
    const std::size_t sep = text.find('_', start);
    const std::string tok = text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (tok.empty()) throw tilings::ParseError("empty basis element in '" + text + "'");
    basis.push_back(tilings::parse_pattern(tok));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return basis;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial exploration of permutation classes and factor-avoiding words", "combex"};
  app.require_subcommand(1);

  ExploreArgs explore_args;
  std::string basis_text;
  std::size_t max_req_len = 2;
  auto* explore = app.add_subcommand("explore", "search for a combinatorial specification of Av(basis)");
  explore->add_option("--basis", basis_text, "basis patterns, 1-indexed, separated by '_'")->required();
  explore->add_option("--max-expansions", explore_args.max_expansions, "expansion limit");
  explore->add_option("--max-seconds", explore_args.max_seconds, "time limit in seconds");
  explore->add_option("--max-req-len", max_req_len, "longest pattern used in requirement insertion");
  SearchOptions search_options;
  bool fewest_rules = false;
  explore->add_option("--refine", search_options.refine_expansions,
                      "expansions to keep running after the first specification is found");
  explore->add_flag("--fewest-rules", fewest_rules, "extract a specification with as few rules as possible");
  explore->add_option("--json", explore_args.json_path, "write the specification as JSON");
  explore->add_option("--dot", explore_args.dot_path, "write the specification as Graphviz DOT");

  std::string spec_path;
  std::size_t n = 10;
  auto* count = app.add_subcommand("count", "count a stored specification");
  count->add_option("spec", spec_path, "specification JSON")->required();
  count->add_option("-n", n, "largest size");

  std::string gf_path;
  bool gf_json = false;
  auto* gf = app.add_subcommand("gf", "print the generating-function system of a stored specification");
  gf->add_option("spec", gf_path, "specification JSON")->required();
  gf->add_flag("--json-tree", gf_json, "print expression trees as JSON");

  std::string oracle_basis;
  std::size_t oracle_n = 8;
  auto* oracle = app.add_subcommand("oracle", "count Av(basis) by brute force");
  oracle->add_option("--basis", oracle_basis, "basis patterns, 1-indexed, separated by '_'")->required();
  oracle->add_option("-n", oracle_n, "largest size");

  std::string forbid_text;
  std::size_t words_n = 10;
  ExploreArgs words_args;
  auto* words_cmd = app.add_subcommand("words", "binary words avoiding factors, counted via a specification");
  words_cmd->add_option("--forbid", forbid_text, "forbidden factors separated by ','");
  words_cmd->add_option("-n", words_n, "largest length");
  words_cmd->add_option("--max-expansions", words_args.max_expansions, "expansion limit");
  words_cmd->add_option("--max-seconds", words_args.max_seconds, "time limit in seconds");
  words_cmd->add_option("--json", words_args.json_path, "write the specification as JSON");
  words_cmd->add_option("--dot", words_args.dot_path, "write the specification as Graphviz DOT");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (*explore) {
      const auto basis = parse_basis(basis_text);
      tilings::TilingPackOptions options;
      options.max_req_insert_len = max_req_len;
      if (fewest_rules) search_options.extraction = Extraction::FewestRules;
      Searcher<tilings::Tiling> searcher(tilings::basis_to_root_tiling(basis), tilings::default_tiling_pack(options),
                                         search_options);
      return explore_and_report(searcher, explore_args, 10, out, err);
    }
    if (*count) {
      print_terms(out, count_terms(spec_from_json(read_file(spec_path)), n));
      return 0;
    }
    if (*gf) {
      const GfSystem system = emit_gf_system(spec_from_json(read_file(gf_path)));
      out << (gf_json ? to_json(system) : to_text(system));
      return 0;
    }
    if (*oracle) {
      print_terms(out, tilings::count_avoiders(parse_basis(oracle_basis), oracle_n));
      return 0;
    }
    if (*words_cmd) {
      Searcher<words::WordClass> searcher(words::WordClass(words::parse_factors(forbid_text)), words::words_pack());
      return explore_and_report(searcher, words_args, words_n, out, err);
    }
  } catch (const tilings::ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const SpecFormatError& e) {
    err << e.what() << "\n";
    return kMalformedInput;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace combex::cli
