// Fixture generator: writes DIMACS .col files for random G(n, p) graphs
// and balanced planted k-partite graphs (flat-style, k-colorable by
// construction). Used to build local stand-ins when the published
// benchmark files are not available.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kcolor/dimacs.hpp"
#include "kcolor/graph.hpp"
#include "kcolor/instance_gen.hpp"

using namespace kcolor;

int main(int argc, char** argv) {
  CLI::App app{"benchmark instance generator"};
  app.require_subcommand(1);

  int n = 0;
  double density = 0.5;
  int parts = 0;
  std::int64_t edges = 0;
  std::uint64_t seed = 1;
  std::string name, out_path;

  auto* gnp = app.add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gnp->add_option("--n", n, "vertex count")->required();
  gnp->add_option("--density", density, "edge probability")->required();
  gnp->add_option("--seed", seed, "random seed");
  gnp->add_option("--name", name, "instance name (default from parameters)");
  gnp->add_option("-o,--out", out_path, "output .col path")->required();

  auto* flat = app.add_subcommand("flat", "balanced planted k-partite");
  flat->add_option("--n", n, "vertex count")->required();
  flat->add_option("--parts", parts, "number of planted classes")->required();
  flat->add_option("--edges", edges, "total edge count")->required();
  flat->add_option("--seed", seed, "random seed");
  flat->add_option("--name", name, "instance name (default from parameters)");
  flat->add_option("-o,--out", out_path, "output .col path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Graph g;
    if (gnp->parsed()) {
      g = random_graph(n, density, seed);
      if (name.empty())
        name = "gnp" + std::to_string(n) + "_" + std::to_string(density);
    } else {
      g = planted_partition_graph(n, parts, edges, seed);
      if (name.empty())
        name = "flat" + std::to_string(n) + "_" + std::to_string(parts);
    }
    Graph named(g.vertex_count(), g.edges(), name);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_dimacs(out, named);
    std::cout << name << " n " << named.vertex_count() << " m "
              << named.edge_count() << " written to " << out_path << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
