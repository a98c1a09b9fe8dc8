#ifndef GRAPHLINK_CHI_HPP
#define GRAPHLINK_CHI_HPP

#include "graphlink/graph.hpp"

namespace graphlink {

/// One-component labeled graph -> looped graph: adjacency is the off-diagonal
/// part of (A(G)+E)^-1, loops mark vertices with negative writhe.  Throws
/// Error(NotAKnot) when corank(A(G)+E) != 0.
LoopedGraph chi(const LabeledGraph& g);

/// Looped graph -> labeled graph via the deterministic nonsingular diagonal
/// completion; framings and signs are read off A^-1 + E.
LabeledGraph chi_inverse(const LoopedGraph& l);

} // namespace graphlink

#endif
