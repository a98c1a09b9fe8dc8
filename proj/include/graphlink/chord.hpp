#ifndef GRAPHLINK_CHORD_HPP
#define GRAPHLINK_CHORD_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlink/graph.hpp"

namespace graphlink {

struct ChordLabel {
    int framing = 0; // 0 or 1
    int sign = +1;   // +1 or -1
    bool operator==(const ChordLabel&) const = default;
};

/// Chord diagram: a cyclic word of 2n endpoint tokens in which every chord
/// token appears exactly twice, plus a (framing, sign) label per chord.
class ChordDiagram {
  public:
    ChordDiagram() = default;
    ChordDiagram(std::vector<std::string> word,
                 std::map<std::string, ChordLabel> labels);

    const std::vector<std::string>& word() const { return word_; }
    const std::map<std::string, ChordLabel>& labels() const { return labels_; }
    std::size_t chord_count() const { return word_.size() / 2; }

    const ChordLabel& label(const std::string& token) const;
    // The two word positions of a chord, in increasing order.
    std::pair<std::size_t, std::size_t> endpoints(const std::string& token) const;

    // Sub-diagram spanned by the given chords, in circle order.
    ChordDiagram subdiagram(const std::vector<std::string>& keep) const;

    bool operator==(const ChordDiagram&) const = default;

  private:
    std::vector<std::string> word_;
    std::map<std::string, ChordLabel> labels_;
};

/// Labeled intersection graph: one vertex per chord (first-occurrence order),
/// an edge iff the chords are linked, labels copied from the chords.
LabeledGraph intersection_graph(const ChordDiagram& d);

/// Number of circles of the surgery 1-manifold m(D): every framing-0 chord is
/// resmoothed along a parallel copy, every framing-1 chord along a crossed
/// copy.  The empty diagram counts as one circle.
std::size_t surgery_components(const ChordDiagram& d);

/// True iff surgery_components(d) = corank A(intersection_graph(d)) + 1.
bool verify_soboleva(const ChordDiagram& d);

/// Exhaustive search over all (2n-1)!! matchings for a diagram whose labeled
/// intersection graph is isomorphic to g.  Throws Error(SizeLimit) when g has
/// more than max_chords vertices.
std::optional<ChordDiagram> realize(const LabeledGraph& g,
                                    std::size_t max_chords = 8);

/// Looped-graph variant: realizes the underlying simple graph; witness chords
/// carry framing 0 and sign - for looped vertices, + otherwise.
std::optional<ChordDiagram> realize(const LoopedGraph& g,
                                    std::size_t max_chords = 8);

/// Per-connected-component realization (a graph is realizable iff each of its
/// connected components is); the witnesses are listed per component.
std::optional<std::vector<ChordDiagram>>
realize_connected_components(const LabeledGraph& g, std::size_t max_chords = 8);

struct RealizabilityVerdict {
    enum class Kind { RealizableWitness, CertifiedNonRealizable, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<ChordDiagram> witness;
};

std::string verdict_kind_name(RealizabilityVerdict::Kind kind);

/// Graph-link-level realizability: a bounded move search for a representative
/// passing realize; certified non-realizable when the all-odd/no-decreasing-
/// second-move hypotheses hold and realize fails; Unknown otherwise.
RealizabilityVerdict graphlink_realizability(const LabeledGraph& g,
                                             std::size_t max_chords = 8,
                                             std::size_t max_steps = 100000);
RealizabilityVerdict graphlink_realizability(const LoopedGraph& g,
                                             std::size_t max_chords = 8,
                                             std::size_t max_steps = 100000);

} // namespace graphlink

#endif
