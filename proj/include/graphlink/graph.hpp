#ifndef GRAPHLINK_GRAPH_HPP
#define GRAPHLINK_GRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphlink/gf2.hpp"

namespace graphlink {

struct LabeledVertex {
    std::string id;
    int framing = 0; // 0 or 1
    int sign = +1;   // +1 or -1
    bool operator==(const LabeledVertex&) const = default;
};

struct LoopedVertex {
    std::string id;
    bool looped = false;
    bool operator==(const LoopedVertex&) const = default;
};

/// Simple graph whose vertices carry a (framing, sign) label.  Vertices keep
/// their declared order; all matrix extractions use that order.
class LabeledGraph {
  public:
    void add_vertex(const std::string& id, int framing, int sign);
    void add_edge(const std::string& a, const std::string& b);

    std::size_t vertex_count() const { return verts_.size(); }
    const LabeledVertex& vertex(std::size_t i) const { return verts_[i]; }
    std::vector<LabeledVertex>& vertices() { return verts_; }
    const std::vector<LabeledVertex>& vertices() const { return verts_; }

    bool has_vertex(const std::string& id) const;
    std::size_t index_of(const std::string& id) const; // throws UnknownVertex

    bool adjacent(std::size_t i, std::size_t j) const {
        return (adj_[i] >> j) & 1u;
    }
    void toggle_edge(std::size_t i, std::size_t j);
    void set_edge(std::size_t i, std::size_t j, bool present);

    std::size_t degree(std::size_t i) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::uint64_t neighbor_mask(std::size_t i) const { return adj_[i]; }

    LabeledGraph without_vertex(std::size_t i) const;

    bool operator==(const LabeledGraph& other) const;

    LabeledGraph local_complement(const std::string& v) const;
    LabeledGraph pivot(const std::string& u, const std::string& v) const;
    LabeledGraph induced_subgraph(const std::vector<std::string>& ids) const;

    // Diagonal entries are framings, off-diagonal entries adjacency.
    Gf2SymMatrix adjacency_matrix() const;

  private:
    std::vector<LabeledVertex> verts_;
    std::vector<std::uint64_t> adj_;
    std::map<std::string, std::size_t> index_;
};

/// Simple graph with a per-vertex loop flag (Gauss-diagram interlacement
/// presentation of knots).  Loops live in the flag, never as edges.
class LoopedGraph {
  public:
    void add_vertex(const std::string& id, bool looped);
    void add_edge(const std::string& a, const std::string& b);

    std::size_t vertex_count() const { return verts_.size(); }
    const LoopedVertex& vertex(std::size_t i) const { return verts_[i]; }
    std::vector<LoopedVertex>& vertices() { return verts_; }
    const std::vector<LoopedVertex>& vertices() const { return verts_; }

    bool has_vertex(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;

    bool adjacent(std::size_t i, std::size_t j) const {
        return (adj_[i] >> j) & 1u;
    }
    void toggle_edge(std::size_t i, std::size_t j);
    void set_edge(std::size_t i, std::size_t j, bool present);

    std::size_t degree(std::size_t i) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;

    LoopedGraph without_vertex(std::size_t i) const;

    bool operator==(const LoopedGraph& other) const;

    LoopedGraph local_complement(const std::string& v) const;
    LoopedGraph pivot(const std::string& u, const std::string& v) const;

  private:
    std::vector<LoopedVertex> verts_;
    std::vector<std::uint64_t> adj_;
    std::map<std::string, std::size_t> index_;
};

/// Canonical byte strings: equal iff the graphs are isomorphic respecting
/// labels (framing/sign, resp. loop flags).  Throws Error(SizeLimit) above
/// max_vertices.
std::string canonical_form(const LabeledGraph& g, std::size_t max_vertices = 16);
std::string canonical_form(const LoopedGraph& g, std::size_t max_vertices = 16);

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);
bool isomorphic(const LoopedGraph& a, const LoopedGraph& b);

} // namespace graphlink

#endif
