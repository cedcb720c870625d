#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hfs/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hesitant fuzzy soft beta-covering spaces: validation, "
               "neighborhoods, rough approximations"};
  app.require_subcommand(1);

  hfs::io::CommonOpts opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "output format: text or json")
        ->default_str("text");
    cmd->add_option("--precision", opts.precision,
                    "digits accepted after the decimal point")
        ->default_val(4);
  };

  std::string space_path;
  std::string target_path;
  std::optional<std::string> kind;
  std::optional<std::string> beta;
  std::optional<std::string> object;
  bool crisp_only = false;
  std::string mode = "hesitant";
  std::string bound = "both";
  std::uint64_t seed = 1;
  std::uint64_t cases = 200;

  CLI::App* validate = app.add_subcommand(
      "validate", "check that beta is below the union of all images");
  validate->add_option("--space", space_path, "space document (JSON or CSV)")
      ->required();
  validate->add_option("--kind", kind, "inclusion kind: p a m s t n");
  validate->add_option("--beta", beta, "threshold, e.g. \"0.5,0.4,0.3\"");
  add_common(validate);

  CLI::App* nbhd = app.add_subcommand(
      "nbhd", "fuzzy and crisp neighborhoods of every object");
  nbhd->add_option("--space", space_path, "space document (JSON or CSV)")
      ->required();
  nbhd->add_option("--x", object, "restrict to a single object");
  nbhd->add_flag("--crisp", crisp_only, "show only the crisp neighborhoods");
  nbhd->add_option("--kind", kind, "inclusion kind: p a m s t n");
  nbhd->add_option("--beta", beta, "threshold, e.g. \"0.5,0.4,0.3\"");
  add_common(nbhd);

  CLI::App* approx = app.add_subcommand(
      "approx", "lower/upper approximations of a target set");
  approx->add_option("--space", space_path, "space document (JSON or CSV)")
      ->required();
  approx->add_option("--target", target_path, "target document (JSON)")
      ->required();
  approx->add_option("--mode", mode, "hesitant or crisp")->default_str("hesitant");
  approx->add_option("--bound", bound, "lower, upper or both")->default_str("both");
  approx->add_option("--kind", kind, "inclusion kind: p a m s t n");
  approx->add_option("--beta", beta, "threshold, e.g. \"0.5,0.4,0.3\"");
  add_common(approx);

  CLI::App* laws = app.add_subcommand(
      "laws", "run the randomized law suite");
  laws->add_option("--seed", seed, "generator seed")->default_val(1);
  laws->add_option("--cases", cases, "cases per law")->default_val(200);
  add_common(laws);

  CLI::App* repro = app.add_subcommand(
      "repro-paper", "re-derive every frozen worked example and diff");
  add_common(repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  hfs::io::CmdResult res;
  if (validate->parsed()) {
    res = hfs::io::cmd_validate(space_path, kind, beta, opts);
  } else if (nbhd->parsed()) {
    res = hfs::io::cmd_neighborhood(space_path, object, crisp_only, kind, beta, opts);
  } else if (approx->parsed()) {
    res = hfs::io::cmd_approx(space_path, target_path, mode, bound, kind, beta, opts);
  } else if (laws->parsed()) {
    res = hfs::io::cmd_laws(seed, cases, opts);
  } else {
    res = hfs::io::cmd_repro(opts);
  }
  std::cout << res.out;
  return res.code;
}
