#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toric/cli.hpp"

namespace cli = toric::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of toric spaces built from a simplicial complex", "toric_calc"};
  app.set_version_flag("--version", std::string(TORIC_VERSION));
  app.require_subcommand(1);

  std::string format = "text";
  unsigned threads = 1;
  std::size_t word_cap = 200000;
  int max_degree = 6;
  bool bigraded = false;
  bool inject_fault = false;
  std::string input, lambda_path;

  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")
      ->envname("TORIC_CALC_THREADS")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--word-cap", word_cap, "Cobar words allowed per degree")
      ->envname("TORIC_CALC_WORD_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* info = app.add_subcommand("info", "f- and h-vectors, flagness, missing faces");
  auto* betti = app.add_subcommand("betti-zk", "Betti numbers of the moment-angle complex");
  betti->add_flag("--bigraded", bigraded, "Also print the bigraded table");
  auto* loop = app.add_subcommand("loop", "Loop homology against the graph product");
  loop->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
  auto* quasi = app.add_subcommand("quasitoric", "Dimensions of Q[K]/(L)");
  quasi->add_option("--lambda", lambda_path, "JSON file with the n x m matrix")
      ->required()
      ->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "Run every cross-check");
  verify->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");
  auto* canonical = app.add_subcommand("canonical", "Print the canonical form of the document");

  for (auto* sub : {info, betti, loop, quasi, verify, canonical}) {
    sub->add_option("complex", input, "Complex document (JSON)")->required();
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::invalid_input;
  }

  try {
    auto doc = cli::load_document(input);
    cli::to_complex(doc);
    if (*canonical) {
      std::cout << cli::serialize(doc);
      return cli::ok;
    }
    const auto start = std::chrono::steady_clock::now();
    cli::Output out;
    std::string command;
    if (*info) {
      command = "info";
      out = cli::cmd_info(doc);
    } else if (*betti) {
      command = "betti-zk";
      out = cli::cmd_betti_zk(doc, bigraded, threads);
    } else if (*loop) {
      command = "loop";
      out = cli::cmd_loop(doc, max_degree, {threads, word_cap});
    } else if (*quasi) {
      command = "quasitoric";
      out = cli::cmd_quasitoric(doc, cli::parse_lambda(cli::detail::read_file(lambda_path)));
    } else {
      command = "verify";
      out = cli::cmd_verify(doc, {max_degree, threads, word_cap, inject_fault});
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (format == "json") {
      std::cout << cli::result_document(command, doc, out, ms).dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.exit_code;
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::invalid_input;
  } catch (const toric::ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::cap_exceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::invalid_input;
  }
}
