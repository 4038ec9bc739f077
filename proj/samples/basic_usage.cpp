// Builds the s-line graphs of a small hypergraph for s = 1..3 and prints
// their edges and s-connected components.
//
//   basic_usage [path/to/pairs.tsv]

#include <iostream>

#include "sline/sline.hpp"

int main(int argc, char** argv) {
  const char* path = argc > 1 ? argv[1] : "toy.tsv";
  auto h = sline::load_bipartite_file(path);
  std::cout << "m = " << h.num_edges() << ", n = " << h.num_vertices() << '\n';

  for (std::size_t s = 1; s <= 3; ++s) {
    auto plan = sline::PartitionPlan::cyclic(2);
    auto [edges, stats] = sline::efficient_s_overlap(h, s, sline::HeuristicConfig::all(), plan);

    std::cout << "s = " << s << ":";
    for (auto [u, v] : edges.pairs) std::cout << ' ' << h.edge_label(u) << '-' << h.edge_label(v);

    auto [graph, ids] = sline::squeeze(edges);
    auto sizes = sline::component_sizes(sline::connected_components(graph));
    std::cout << "  (" << sizes.size() << " component(s), " << stats.set_intersections << " intersections)\n";
  }
}
