// ldq: evaluate a query over a simulated web of linked data, either against
// all of its data or against the part reachable from a set of seed URIs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldq/encoding.hpp"
#include "ldq/engine.hpp"
#include "ldq/parser.hpp"
#include "ldq/reachability.hpp"
#include "ldq/web.hpp"

namespace {

bool color_enabled() {
  const char* v = std::getenv("LDQ_COLOR");
  return v && std::string(v) == "1";
}

void diagnostic(const std::string& severity, const std::string& message) {
  if (color_enabled()) {
    const char* code = severity == "error" ? "\033[31m" : "\033[33m";
    std::cerr << code << severity << ":\033[0m " << message << '\n';
  } else {
    std::cerr << severity << ": " << message << '\n';
  }
}

[[noreturn]] void fail(const std::string& message) {
  diagnostic("error", message);
  std::exit(1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::unique_ptr<ldq::WebOfLinkedData> open_web(const std::string& arg) {
  if (arg.starts_with("gen:")) return ldq::make_generator(arg);
  return std::make_unique<ldq::FiniteWeb>(ldq::load_web(arg));
}

ldq::ExprPtr open_query(const std::string& arg) {
  std::string text = trimmed(arg).starts_with("(") ? arg : read_file(arg);
  return ldq::parse_expression(text);
}

ldq::UriSet parse_seed_list(const std::string& arg) {
  ldq::UriSet seeds;
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    std::size_t comma = arg.find(',', pos);
    std::string item = trimmed(arg.substr(pos, comma == std::string::npos ? comma : comma - pos));
    if (!item.empty()) {
      ldq::Term t = ldq::parse_term(item);
      if (!t.is_uri()) fail("seed is not a URI: " + item);
      seeds.insert(std::move(t));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return seeds;
}

ldq::UriSet read_seeds_file(const std::string& path) {
  ldq::UriSet seeds;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string item = trimmed(line);
    if (item.empty() || item[0] == '#') continue;
    ldq::Term t = ldq::parse_term(item);
    if (!t.is_uri()) fail("seed is not a URI: " + item);
    seeds.insert(std::move(t));
  }
  return seeds;
}

// all | none | match | u:<file> | t:<file> | and:<ufile>,<tfile> | or:<ufile>,<tfile>
ldq::ReachabilityCriterion open_criterion(const std::string& arg) {
  using Criterion = ldq::ReachabilityCriterion;
  if (arg == "all") return Criterion::all();
  if (arg == "none") return Criterion::none();
  if (arg == "match") return Criterion::match();
  if (arg.starts_with("u:")) return Criterion::const_u(ldq::load_uri_set(arg.substr(2)));
  if (arg.starts_with("t:")) return Criterion::const_t(ldq::load_triple_set(arg.substr(2)));
  if (arg.starts_with("and:") || arg.starts_with("or:")) {
    bool conjunctive = arg.starts_with("and:");
    std::string files = arg.substr(conjunctive ? 4 : 3);
    std::size_t comma = files.find(',');
    if (comma == std::string::npos) {
      fail("criterion '" + arg + "' needs two files: <urifile>,<triplefile>");
    }
    ldq::UriSet uris = ldq::load_uri_set(files.substr(0, comma));
    ldq::TripleSet triples = ldq::load_triple_set(files.substr(comma + 1));
    return conjunctive ? Criterion::const_and(std::move(uris), std::move(triples))
                       : Criterion::const_or(std::move(uris), std::move(triples));
  }
  fail("unknown criterion '" + arg + "'");
}

void print_summary(const ldq::ExecutionReport& report) {
  std::cout << "status="
            << (report.status == ldq::ExecStatus::Complete ? "Complete" : "BudgetExhausted")
            << '\n'
            << "solutions=" << report.solutions.size() << '\n'
            << "lookups=" << report.lookups_spent << '\n'
            << "docs=" << report.part_size << '\n';
}

int exit_code(ldq::ExecStatus status) {
  return status == ldq::ExecStatus::Complete ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"query engine for simulated webs of linked data"};
  std::string web_arg;
  std::string query_arg;
  std::string semantics;
  std::string criterion_arg;
  std::string seeds_arg;
  std::string seeds_file;
  std::string budget_arg = "unlimited";
  std::string mode = "batch";

  app.add_option("--web", web_arg,
                 "web description file, or gen:numbers | gen:chain:N|inf | gen:star:N|inf")
      ->required();
  app.add_option("--query", query_arg, "query file, or an inline expression starting with '('")
      ->required();
  app.add_option("--semantics", semantics, "full | reach")
      ->required()
      ->check(CLI::IsMember({"full", "reach"}));
  app.add_option("--criterion", criterion_arg,
                 "all | none | match | u:<file> | t:<file> | and:<uf>,<tf> | or:<uf>,<tf>");
  app.add_option("--seeds", seeds_arg, "comma-separated seed URIs in term syntax");
  app.add_option("--seeds-file", seeds_file, "file with one seed URI per line");
  app.add_option("--budget", budget_arg, "maximum number of lookups, or 'unlimited'");
  app.add_option("--mode", mode, "batch | stream")->check(CLI::IsMember({"batch", "stream"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    diagnostic("error", e.what());
    return 1;
  }

  try {
    if (semantics == "full") {
      if (!criterion_arg.empty() || !seeds_arg.empty() || !seeds_file.empty()) {
        fail("--criterion and --seeds apply to --semantics reach only");
      }
      if (mode == "stream") fail("--mode stream requires --semantics reach");
    }

    ldq::Budget budget = ldq::Budget::unlimited();
    if (budget_arg != "unlimited") {
      std::uint64_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoull(budget_arg, &used);
        if (used != budget_arg.size()) throw std::invalid_argument(budget_arg);
      } catch (const std::exception&) {
        fail("--budget must be a positive integer or 'unlimited'");
      }
      if (n == 0) fail("--budget must be a positive integer or 'unlimited'");
      budget = ldq::Budget::limited(n);
    }

    std::unique_ptr<ldq::WebOfLinkedData> web = open_web(web_arg);
    ldq::ExprPtr query = open_query(query_arg);

    if (semantics == "full") {
      ldq::ExecutionReport report = ldq::exec_full_web(*web, *query, budget);
      std::cout << ldq::enc_solution_set(report.solutions);
      print_summary(report);
      return exit_code(report.status);
    }

    ldq::UriSet seeds = parse_seed_list(seeds_arg);
    if (!seeds_file.empty()) {
      ldq::UriSet more = read_seeds_file(seeds_file);
      seeds.insert(more.begin(), more.end());
    }
    if (seeds.empty()) {
      fail("--semantics reach needs a nonempty seed set (--seeds or --seeds-file)");
    }
    ldq::ReachabilityCriterion criterion =
        open_criterion(criterion_arg.empty() ? "all" : criterion_arg);
    if (budget.is_unlimited()) {
      diagnostic("warning", "unlimited budget: the traversal may not terminate on infinite webs");
    }

    if (mode == "stream") {
      ldq::SolutionStream stream =
          ldq::exec_reach_streaming(*web, seeds, criterion, query, budget);
      while (auto item = stream.next()) {
        std::cout << "[iter=" << item->iteration << "] " << ldq::enc_valuation(item->valuation)
                  << std::endl;
      }
      print_summary(stream.report());
      return exit_code(stream.report().status);
    }

    ldq::ExecutionReport report =
        ldq::exec_reach_terminating(*web, seeds, criterion, *query, budget);
    std::cout << ldq::enc_solution_set(report.solutions);
    print_summary(report);
    return exit_code(report.status);
  } catch (const ldq::ParseError& e) {
    diagnostic("error", e.what());
    return 1;
  } catch (const ldq::Error& e) {
    diagnostic("error", e.what());
    return 1;
  } catch (const std::exception& e) {
    diagnostic("error", e.what());
    return 1;
  }
}
