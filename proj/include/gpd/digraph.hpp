#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpd/vertex_set.hpp"

namespace gpd {

using arc = std::pair<int, int>;
using edge = std::pair<int, int>;

// Hard cap on accepted instance sizes; everything here is exact search at
// desk scale, so refusing absurd inputs early beats dying later.
inline constexpr int max_order = 4096;

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple digraph: no loops, no parallel arcs, 2-cycles allowed.
// Immutable after construction; adjacency sorted ascending.
class digraph {
public:
    digraph() = default;
    digraph(int n, const std::vector<arc>& arcs, std::string name = "");

    int order() const { return n_; }
    int size() const { return m_; }
    const std::string& name() const { return name_; }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(int u, int v) const;

    std::vector<arc> arcs() const;

    bool operator==(const digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::string name_;
};

// Undirected simple graph, same conventions.
class undirected_graph {
public:
    undirected_graph() = default;
    undirected_graph(int n, const std::vector<edge>& edges, std::string name = "");

    int order() const { return n_; }
    int size() const { return m_; }
    const std::string& name() const { return name_; }

    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Canonical edge list: (u,v) with u < v, lexicographic.
    std::vector<edge> edges() const;

    bool operator==(const undirected_graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

struct vertex_classification {
    vertex_set sources;
    vertex_set sinks;
    vertex_set transmitters;
    vertex_set near_sinks;
    vertex_set near_sources;
    vertex_set leaves;

    vertex_set extreme() const { return sources | sinks | transmitters; }
};

// --- file formats -----------------------------------------------------------
//
// .dg:  "D <n> <m>" header, then m lines "<u> <v>" (arc u->v, 0-indexed).
// .ug:  "U <n> <m>" header, then m lines "<u> <v>" (edge).
// '#' starts a comment line; blank lines ignored.

digraph parse_digraph(std::istream& input);
digraph parse_digraph_file(const std::string& path);
undirected_graph parse_undirected(std::istream& input);
undirected_graph parse_undirected_file(const std::string& path);

std::string to_dg(const digraph& d);
std::string to_ug(const undirected_graph& g);
std::string to_dot(const digraph& d);
std::string to_dot(const undirected_graph& g);

// --- structural operations --------------------------------------------------

digraph converse(const digraph& d);

// Induced subdigraph plus the old->new index map (-1 for dropped vertices).
std::pair<digraph, std::vector<int>> induced_subdigraph(const digraph& d, const vertex_set& s);

std::pair<undirected_graph, std::vector<int>> induced_subgraph(const undirected_graph& g,
                                                               const vertex_set& s);

// Disjoint union plus every arc from V(a) to V(b); a's vertices keep their
// indices, b's are shifted by a.order(). Order of arguments matters.
digraph join(const digraph& a, const digraph& b);

// Strong components in a topological order of the condensation
// (all arcs between classes go from lower to higher class index).
std::vector<std::vector<int>> strong_components(const digraph& d);

// One vertex per strong component, arc between classes iff some member arc.
// Fills the vertex->class map when component_of is non-null.
digraph condensation(const digraph& d, std::vector<int>* component_of = nullptr);

bool is_transitive(const digraph& d);

// True iff no 2-cycles.
bool is_oriented(const digraph& d);

vertex_classification classify_vertices(const digraph& d);

undirected_graph underlying_graph(const digraph& d);

// Orientation check helper: d realises exactly one arc per edge of g.
bool is_orientation_of(const digraph& d, const undirected_graph& g);

bool is_weakly_connected(const digraph& d);
bool is_connected(const undirected_graph& g);
bool is_strongly_connected(const digraph& d);

}  // namespace gpd
