#ifndef CLIQUEMIN_CORPUS_HPP
#define CLIQUEMIN_CORPUS_HPP

#include <vector>

#include "cliquemin/families.hpp"
#include "cliquemin/graph.hpp"

namespace cliquemin {

Graph edgeless_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0

// Two triangles {0,1,2} and {3,4,5} joined by the perfect matching i -- i+3.
Graph prism_graph();

// All labeled graphs on exactly n vertices (2^C(n,2) of them; desk scale).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_graphs_up_to(int max_n);
std::vector<Graph> all_connected_graphs_up_to(int max_n);
std::vector<Graph> all_chordal_graphs_up_to(int max_n);

// All complete multipartite shapes with at most max_total vertices
// (integer partitions, parts descending).
std::vector<MultipartiteSpec> all_multipartite_specs_up_to(int max_total);

}  // namespace cliquemin

#endif  // CLIQUEMIN_CORPUS_HPP
