#ifndef GRAPHLINK_MOVES_HPP
#define GRAPHLINK_MOVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphlink/graph.hpp"

namespace graphlink {

/// One applicable (or template) move.  Removal/rewrite descriptors carry the
/// concrete site; addition templates leave it empty and record parameters.
struct MoveDescriptor {
    enum class Kind {
        Og1Add,
        Og1Remove,
        Og2Add,
        Og2Remove,
        Og3,
        Og3Inverse,
        Og4,
        Og4Prime,
        R1Add,
        R1Remove,
        R2Add,
        R2Remove,
        R3,
    };

    Kind kind;
    std::vector<std::string> site;      // existing vertices the move acts on
    std::vector<std::string> new_ids;   // fresh ids for additions
    int framing = 0;                    // framing for added vertices
    int sign = +1;                      // sign of the first added vertex
    bool looped = false;                // loop flag for R1/R2 additions
    std::vector<std::string> attach;    // common neighborhood for pair additions
};

std::string move_kind_name(MoveDescriptor::Kind kind);

// Labeled graph-moves.  Preconditions are checked; violations raise
// Error(NotApplicable) with a machine-readable reason code.
LabeledGraph apply_og1_add(const LabeledGraph& g, const std::string& id, int sign);
LabeledGraph apply_og1_remove(const LabeledGraph& g, const std::string& id);
LabeledGraph apply_og2_add(const LabeledGraph& g, const std::string& id1,
                           const std::string& id2, int framing, int sign,
                           const std::vector<std::string>& neighborhood);
LabeledGraph apply_og2_remove(const LabeledGraph& g, const std::string& id1,
                              const std::string& id2);
LabeledGraph apply_og3(const LabeledGraph& g, const std::string& u,
                       const std::string& v, const std::string& w);
LabeledGraph apply_og3_inverse(const LabeledGraph& g, const std::string& u,
                               const std::string& v, const std::string& w);
LabeledGraph apply_og4(const LabeledGraph& g, const std::string& u,
                       const std::string& v);
LabeledGraph apply_og4p(const LabeledGraph& g, const std::string& v);

// Looped-graph Reidemeister moves.
LoopedGraph apply_r1_add(const LoopedGraph& g, const std::string& id, bool looped);
LoopedGraph apply_r1_remove(const LoopedGraph& g, const std::string& id);
LoopedGraph apply_r2_add(const LoopedGraph& g, const std::string& id1,
                         const std::string& id2, bool first_looped, bool adjacent_pair,
                         const std::vector<std::string>& neighborhood);
LoopedGraph apply_r2_remove(const LoopedGraph& g, const std::string& id1,
                            const std::string& id2);
// Toggles the three pairwise adjacencies uv, uw, vw.  Applicable in either
// direction of the third move; v must be looped and w unlooped.
LoopedGraph apply_r3(const LoopedGraph& g, const std::string& u,
                     const std::string& v, const std::string& w);

LabeledGraph apply_move(const LabeledGraph& g, const MoveDescriptor& d);
LoopedGraph apply_move(const LoopedGraph& g, const MoveDescriptor& d);

/// Enumerates every applicable removal/Og3/Og4/Og4' (resp. R3) site plus one
/// template descriptor per addition family.
std::vector<MoveDescriptor> detect_moves(const LabeledGraph& g);
std::vector<MoveDescriptor> detect_moves(const LoopedGraph& g);

bool has_decreasing_second_move(const LabeledGraph& g);
bool has_decreasing_second_move(const LoopedGraph& g);

/// Bounded breadth-first search for a move path from g1 to g2 (compared via
/// canonical_form).  nullopt means not-found-within-bounds, never a proof of
/// inequivalence.
std::optional<std::vector<MoveDescriptor>>
equivalence_search(const LabeledGraph& g1, const LabeledGraph& g2,
                   std::size_t max_vertices, std::size_t max_steps);
std::optional<std::vector<MoveDescriptor>>
equivalence_search(const LoopedGraph& g1, const LoopedGraph& g2,
                   std::size_t max_vertices, std::size_t max_steps);

} // namespace graphlink

#endif
