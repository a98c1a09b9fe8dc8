#ifndef GRAPHLINK_PARITY_HPP
#define GRAPHLINK_PARITY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "graphlink/graph.hpp"

namespace graphlink {

enum class Parity { Even, Odd };

using ParityTable = std::map<std::string, Parity>;

// Even iff the non-loop degree is even; loops are ignored.
ParityTable parity_knot(const LoopedGraph& l);

// Parity of a one-component labeled graph, read off its looped graph.
ParityTable parity_knot_labeled(const LabeledGraph& g);

// Two-component parity: even iff oriented.  Throws Error(NotTwoComponents).
ParityTable parity_link2(const LabeledGraph& g);

/// A labeled graph considered up to signs and up to the fourth graph-moves.
/// Stores one concrete representative; class comparisons go through the
/// orbit-minimal canonical form (bounded breadth-first orbit enumeration).
class FreeFramedGraph {
  public:
    explicit FreeFramedGraph(LabeledGraph rep, std::size_t orbit_cap = 100000);

    const LabeledGraph& representative() const { return rep_; }
    std::size_t orbit_cap() const { return cap_; }

    // Minimum sign-stripped canonical form over the fourth-move orbit.
    // Throws Error(OrbitLimit) when the orbit exceeds the node cap.
    const std::string& canonical() const;

  private:
    LabeledGraph rep_;
    std::size_t cap_;
    mutable std::optional<std::string> canon_;
};

bool free_equal(const FreeFramedGraph& a, const FreeFramedGraph& b);

/// The two smoothings at a vertex, as free framed graphs.  For a framing-0
/// isolated vertex the second result carries the fresh pendant partner.
std::pair<FreeFramedGraph, FreeFramedGraph> smooth(const FreeFramedGraph& f,
                                                   const std::string& v);

/// GF(2)-linear combination of free framed graphs keyed by their canonical
/// forms; a graph toggled twice cancels.
class GraphSum {
  public:
    void toggle(const FreeFramedGraph& g);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const FreeFramedGraph& g) const;
    const std::map<std::string, LabeledGraph>& terms() const { return terms_; }

    bool operator==(const GraphSum& other) const;

  private:
    std::map<std::string, LabeledGraph> terms_;
};

// Sum over all vertices of the two-component smoothing.  Requires a
// one-component input (throws Error(NotOneComponent)).
GraphSum delta(const FreeFramedGraph& f);

// i-fold iteration, smoothing at oriented vertices and keeping the smoothing
// with more components at each step.
GraphSum delta_iter(const FreeFramedGraph& f, unsigned iterations);

/// Which graph supplies adjacency when computing multi-component parity:
/// the looped graph of the original input (default) or the smoothed graph.
enum class MultiParityMode { ChiOfOriginal, SmoothedGraph };

GraphSum delta_odd(const FreeFramedGraph& f, unsigned iterations,
                   MultiParityMode mode = MultiParityMode::ChiOfOriginal);
GraphSum delta_even(const FreeFramedGraph& f, unsigned iterations,
                    MultiParityMode mode = MultiParityMode::ChiOfOriginal);

// [G]: smoothings at all even vertices, one-component summands kept.
GraphSum bracket_knot(const LabeledGraph& g);

// {H}: smoothings at all even vertices, trivial summands dropped.
GraphSum bracket_link2(const LabeledGraph& h);

/// Greedy second-move reduction of every summand plus deletion of graphs with
/// a framing-0 pendant pair; sound but not guaranteed complete.
GraphSum reduce_sum(const GraphSum& s);

} // namespace graphlink

#endif
