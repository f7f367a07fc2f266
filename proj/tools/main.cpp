// Command-line surface over the library: table exports, element queries,
// the verification suites, and the table cache.

#include "hyperoct/cli_support.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* cmd, hyperoct::cli::Options& opt, bool with_n = true) {
  if (with_n) cmd->add_option("--n", opt.n, "rank of the group")->required();
  cmd->add_option("--format", opt.format, "output format");
  cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
  cmd->add_option("--cache-dir", opt.cache_dir, "cache directory");
  cmd->add_flag("--no-cache", opt.no_cache, "bypass the table cache");
  cmd->add_option("--max-n", opt.max_n, "override the per-command rank bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the signed-composition Burnside algebra of the "
               "hyperoctahedral group"};
  app.require_subcommand(1);

  hyperoct::cli::Options marks_opt, idem_opt, classes_opt, typesn_opt, element_opt, verify_opt,
      mr_opt;
  hyperoct::cli::ElementQuery query;
  std::string verify_suite;
  bool verify_long = false;

  add_common(app.add_subcommand("marks", "signed table of marks, phi and u matrices"), marks_opt);
  add_common(app.add_subcommand("idempotents", "primitive idempotent coordinates"), idem_opt);
  add_common(app.add_subcommand("classes", "conjugacy class sizes"), classes_opt);
  add_common(app.add_subcommand("typesn", "number of elements of type S_n"), typesn_opt);

  CLI::App* element = app.add_subcommand("element", "length, sign, cycle type of one element");
  add_common(element, element_opt);
  element->add_option("--word", query.word, "whitespace-separated generator word, e.g. 's1 t2'");
  element->add_option("--window", query.window, "window as comma-separated integers, e.g. '-2,1'");
  element->add_option("--comp", query.comp, "signed composition A with w in W_A, e.g. '-2,3,-1,-3,1'");

  CLI::App* verify = app.add_subcommand("verify", "run the named invariant suites");
  add_common(verify, verify_opt);
  verify->add_option("--suite", verify_suite, "one of: marks idempotents mr res-ind counting parity thm35");
  verify->add_flag("--long", verify_long, "enable the long variants (mr closure at n=4)");

  add_common(app.add_subcommand("export-mr", "structure constants of the coset-sum algebra"), mr_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand("marks")) return hyperoct::cli::cmd_marks(marks_opt, std::cout, std::cerr);
  if (app.got_subcommand("idempotents"))
    return hyperoct::cli::cmd_idempotents(idem_opt, std::cout, std::cerr);
  if (app.got_subcommand("classes")) return hyperoct::cli::cmd_classes(classes_opt, std::cout, std::cerr);
  if (app.got_subcommand("typesn")) return hyperoct::cli::cmd_typesn(typesn_opt, std::cout, std::cerr);
  if (app.got_subcommand("element"))
    return hyperoct::cli::cmd_element(element_opt, query, std::cout, std::cerr);
  if (app.got_subcommand("verify"))
    return hyperoct::cli::cmd_verify(verify_opt, verify_suite, verify_long, std::cout, std::cerr);
  if (app.got_subcommand("export-mr")) return hyperoct::cli::cmd_export_mr(mr_opt, std::cout, std::cerr);
  return 2;
}
