#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace hvor::cli;
  CLI::App app{"Voronoi complexes and homology of GL_N over imaginary quadratic integers"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may also follow the subcommand

  RunConfig config;
  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}};
  app.add_option("--disc", config.disc, "negative fundamental discriminant D")->required();
  app.add_option("--rank", config.rank, "matrix size N")->required();
  app.add_option("--out", config.out_dir, "output directory")->capture_default_str();
  app.add_option("--checkpoint", config.checkpoint, "perfect-form checkpoint (JSON lines)");
  app.add_option("--cells", config.cells, "cell database (JSON lines)");
  app.add_option("--workers", config.workers, "worker threads")->capture_default_str();
  app.add_option("--max-classes", config.max_classes, "stop the perfect-form walk after this many classes");
  app.add_option("--format", config.format, "table or json")->transform(CLI::CheckedTransformer(formats));
  app.add_flag("--all-facets", config.all_facets, "walk every facet instead of one per stabilizer orbit");
  app.add_flag("--recompute", config.recompute, "ignore an existing cell database");

  auto* perfect = app.add_subcommand("perfect-forms", "enumerate perfect forms up to GL_N(O)");
  auto* cells = app.add_subcommand("cells", "build the cell complex and store it");
  auto* homology = app.add_subcommand("homology", "homology table with verification");
  auto* verify = app.add_subcommand("verify", "mass formula, chain identity, top cycle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.validate();
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << '\n';
    return 2;
  }
  if (perfect->parsed()) return cmd_perfect_forms(config, std::cout, std::cerr);
  if (cells->parsed()) return cmd_cells(config, std::cout, std::cerr);
  if (homology->parsed()) return cmd_homology(config, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(config, std::cout, std::cerr);
  return 2;
}
