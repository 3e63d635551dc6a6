#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace qfrob::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for quantum groups at roots of unity"};
  app.require_subcommand(1);
  RunConfig c;

  // Flags live on the top-level app so that a flat key=value config file
  // maps onto them; subcommands fall through.
  app.set_config("--config", "", "key=value file mirroring the long flags");
  app.add_option("--type", c.cartan_type, "A1, A2, B2 or G2")->capture_default_str();
  app.add_option("--ell", c.ell, "even root-of-unity order")->capture_default_str();
  app.add_option("--window", c.window, "lo..hi, a,b..c,d or box (linkage)")->capture_default_str();
  app.add_option("--suite", c.suite, "predict or verify (linkage)")->capture_default_str();
  app.add_option("--group", c.group, "group table file (triple-verify)");
  app.add_flag("--corrupt", c.corrupt, "add a corrupted module (frobenius-check negative control)");
  app.add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* linkage = app.add_subcommand("linkage", "predicted (and for A1 observed) block decomposition");
  auto* frob = app.add_subcommand("frobenius-check", "relations, commutator identity, round trips, Hecke structures");
  app.add_subcommand("triple-verify", "finite group triple: conditions, equivalence, blocks, twists");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CommandResult result;
  try {
    if (*linkage) result = cmd_linkage(c);
    else if (*frob) result = cmd_frobenius_check(c);
    else result = cmd_triple_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = c.format == "text" ? render_text(result) : render_json(result);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << c.out << "'\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code();
}
