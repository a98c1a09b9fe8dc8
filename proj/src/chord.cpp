#include "graphlink/chord.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "graphlink/errors.hpp"
#include "graphlink/invariants.hpp"
#include "graphlink/moves.hpp"

namespace graphlink {

ChordDiagram::ChordDiagram(std::vector<std::string> word,
                           std::map<std::string, ChordLabel> labels)
    : word_(std::move(word)), labels_(std::move(labels)) {
    if (word_.size() % 2 != 0)
        throw Error(ErrorCode::ParseError, "chord word has odd length");
    std::map<std::string, int> counts;
    for (const auto& t : word_)
        ++counts[t];
    for (const auto& [t, c] : counts)
        if (c != 2)
            throw Error(ErrorCode::ParseError,
                        "chord token '" + t + "' occurs " + std::to_string(c) +
                            " times, expected 2");
    for (const auto& [t, c] : counts)
        if (!labels_.count(t))
            throw Error(ErrorCode::ParseError,
                        "chord token '" + t + "' has no label");
    for (const auto& [t, l] : labels_)
        if (!counts.count(t))
            throw Error(ErrorCode::ParseError,
                        "label for unknown chord '" + t + "'");
}

const ChordLabel& ChordDiagram::label(const std::string& token) const {
    auto it = labels_.find(token);
    if (it == labels_.end())
        throw Error(ErrorCode::UnknownVertex, "no chord '" + token + "'");
    return it->second;
}

std::pair<std::size_t, std::size_t>
ChordDiagram::endpoints(const std::string& token) const {
    std::size_t first = word_.size(), second = word_.size();
    for (std::size_t p = 0; p < word_.size(); ++p)
        if (word_[p] == token) {
            if (first == word_.size())
                first = p;
            else
                second = p;
        }
    if (second == word_.size())
        throw Error(ErrorCode::UnknownVertex, "no chord '" + token + "'");
    return {first, second};
}

ChordDiagram ChordDiagram::subdiagram(const std::vector<std::string>& keep) const {
    std::set<std::string> wanted(keep.begin(), keep.end());
    std::vector<std::string> word;
    std::map<std::string, ChordLabel> labels;
    for (const auto& t : word_)
        if (wanted.count(t))
            word.push_back(t);
    for (const auto& t : wanted)
        labels[t] = label(t);
    return ChordDiagram(std::move(word), std::move(labels));
}

LabeledGraph intersection_graph(const ChordDiagram& d) {
    std::vector<std::string> order;
    for (const auto& t : d.word())
        if (std::find(order.begin(), order.end(), t) == order.end())
            order.push_back(t);
    LabeledGraph g;
    for (const auto& t : order) {
        const ChordLabel& l = d.label(t);
        g.add_vertex(t, l.framing, l.sign);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [a1, a2] = d.endpoints(order[i]);
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            auto [b1, b2] = d.endpoints(order[j]);
            bool in1 = a1 < b1 && b1 < a2;
            bool in2 = a1 < b2 && b2 < a2;
            if (in1 != in2)
                g.add_edge(order[i], order[j]);
        }
    }
    return g;
}

std::size_t surgery_components(const ChordDiagram& d) {
    const std::size_t m = d.word().size(); // 2n endpoints, m boundary arcs
    if (m == 0)
        return 1;
    std::vector<std::size_t> partner(m);
    std::vector<int> framing(m);
    {
        std::map<std::string, std::size_t> first_pos;
        for (std::size_t p = 0; p < m; ++p) {
            auto it = first_pos.find(d.word()[p]);
            if (it == first_pos.end()) {
                first_pos[d.word()[p]] = p;
            } else {
                partner[p] = it->second;
                partner[it->second] = p;
            }
            framing[p] = d.label(d.word()[p]).framing;
        }
    }
    // Directed arcs: arc i runs between endpoints i and i+1 (mod m); state
    // 2i is forward travel (toward i+1), 2i+1 is backward (toward i).  On
    // reaching an endpoint, jump to its partner; a framing-0 chord preserves
    // the travel direction, a framing-1 chord reverses it.
    auto next = [&](std::size_t state) {
        std::size_t arc = state / 2;
        bool backward = state % 2;
        std::size_t p = backward ? arc : (arc + 1) % m;
        std::size_t q = partner[p];
        bool out_backward = framing[p] == 0 ? backward : !backward;
        return out_backward ? ((q + m - 1) % m) * 2 + 1 : q * 2;
    };
    std::vector<bool> seen(2 * m, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < 2 * m; ++s) {
        if (seen[s])
            continue;
        ++cycles;
        std::size_t cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = next(cur);
        }
    }
    return cycles / 2;
}

bool verify_soboleva(const ChordDiagram& d) {
    std::size_t predicted = corank(intersection_graph(d).adjacency_matrix()) + 1;
    return surgery_components(d) == predicted;
}

namespace {

struct UnlabeledTarget {
    std::string canonical;
    std::vector<std::size_t> degrees; // sorted
};

LabeledGraph strip_labels(const LabeledGraph& g) {
    LabeledGraph out;
    for (const auto& v : g.vertices())
        out.add_vertex(v.id, 0, +1);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                out.set_edge(i, j, true);
    return out;
}

UnlabeledTarget make_target(const LabeledGraph& g) {
    LabeledGraph stripped = strip_labels(g);
    UnlabeledTarget t;
    t.canonical = canonical_form(stripped);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        t.degrees.push_back(g.degree(i));
    std::sort(t.degrees.begin(), t.degrees.end());
    return t;
}

// Interlacement adjacency of the chords of a complete matching; chords are
// numbered in order of their first endpoint.
std::vector<std::uint64_t> matching_adjacency(const std::vector<std::size_t>& partner,
                                              std::vector<std::size_t>& chord_of,
                                              std::size_t n) {
    const std::size_t m = 2 * n;
    chord_of.assign(m, n);
    std::size_t next_chord = 0;
    for (std::size_t p = 0; p < m; ++p)
        if (chord_of[p] == n) {
            chord_of[p] = chord_of[partner[p]] = next_chord++;
        }
    std::vector<std::size_t> first(n), second(n);
    for (std::size_t p = 0; p < m; ++p) {
        if (p < partner[p])
            first[chord_of[p]] = p;
        else
            second[chord_of[p]] = p;
    }
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool in1 = first[i] < first[j] && first[j] < second[i];
            bool in2 = first[i] < second[j] && second[j] < second[i];
            if (in1 != in2) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    return adj;
}

// Backtracking unlabeled isomorphism from chord indices (adjacency masks) to
// vertices of g; both graphs are known isomorphic when this is called.
bool find_isomorphism(const std::vector<std::uint64_t>& adj, const LabeledGraph& g,
                      std::vector<std::size_t>& map_out) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = static_cast<std::size_t>(__builtin_popcountll(adj[i]));
    map_out.assign(n, n);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n)
            return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != deg[i])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (((adj[i] >> j) & 1u) != (g.adjacent(v, map_out[j]) ? 1u : 0u))
                    ok = false;
            if (!ok)
                continue;
            used[v] = true;
            map_out[i] = v;
            if (self(self, i + 1))
                return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

ChordDiagram diagram_from_matching(const std::vector<std::size_t>& partner,
                                   const std::vector<std::size_t>& chord_of,
                                   const std::vector<std::size_t>& iso,
                                   const LabeledGraph& g) {
    std::vector<std::string> word;
    std::map<std::string, ChordLabel> labels;
    for (std::size_t p = 0; p < partner.size(); ++p) {
        const LabeledVertex& v = g.vertex(iso[chord_of[p]]);
        word.push_back(v.id);
        labels[v.id] = ChordLabel{v.framing, v.sign};
    }
    return ChordDiagram(std::move(word), std::move(labels));
}

std::optional<ChordDiagram> realize_search(const LabeledGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return ChordDiagram{};
    UnlabeledTarget target = make_target(g);
    const std::size_t m = 2 * n;
    std::vector<std::size_t> partner(m, m);
    std::optional<ChordDiagram> found;

    auto leaf = [&]() -> bool {
        std::vector<std::size_t> chord_of;
        std::vector<std::uint64_t> adj = matching_adjacency(partner, chord_of, n);
        std::vector<std::size_t> degs(n);
        for (std::size_t i = 0; i < n; ++i)
            degs[i] = static_cast<std::size_t>(__builtin_popcountll(adj[i]));
        std::sort(degs.begin(), degs.end());
        if (degs != target.degrees)
            return false;
        LabeledGraph candidate;
        for (std::size_t i = 0; i < n; ++i)
            candidate.add_vertex("c" + std::to_string(i), 0, +1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if ((adj[i] >> j) & 1u)
                    candidate.set_edge(i, j, true);
        if (canonical_form(candidate) != target.canonical)
            return false;
        std::vector<std::size_t> iso;
        if (!find_isomorphism(adj, g, iso))
            return false;
        found = diagram_from_matching(partner, chord_of, iso, g);
        return true;
    };

    auto rec = [&](auto&& self, std::size_t done) -> bool {
        if (done == n)
            return leaf();
        std::size_t i = 0;
        while (partner[i] != m)
            ++i;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (partner[j] != m)
                continue;
            partner[i] = j;
            partner[j] = i;
            if (self(self, done + 1))
                return true;
            partner[i] = partner[j] = m;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

} // namespace

std::optional<ChordDiagram> realize(const LabeledGraph& g, std::size_t max_chords) {
    if (g.vertex_count() > max_chords)
        throw Error(ErrorCode::SizeLimit, "graph exceeds the chord bound");
    return realize_search(g);
}

std::optional<ChordDiagram> realize(const LoopedGraph& g, std::size_t max_chords) {
    LabeledGraph as_labeled;
    for (const auto& v : g.vertices())
        as_labeled.add_vertex(v.id, 0, v.looped ? -1 : +1);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                as_labeled.set_edge(i, j, true);
    return realize(as_labeled, max_chords);
}

std::optional<std::vector<ChordDiagram>>
realize_connected_components(const LabeledGraph& g, std::size_t max_chords) {
    if (g.vertex_count() > max_chords)
        throw Error(ErrorCode::SizeLimit, "graph exceeds the chord bound");
    const std::size_t n = g.vertex_count();
    std::vector<bool> visited(n, false);
    std::vector<ChordDiagram> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (visited[s])
            continue;
        std::vector<std::string> ids;
        std::deque<std::size_t> queue{s};
        visited[s] = true;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            ids.push_back(g.vertex(v).id);
            for (std::size_t u : g.neighbors(v))
                if (!visited[u]) {
                    visited[u] = true;
                    queue.push_back(u);
                }
        }
        std::optional<ChordDiagram> d =
            realize_search(g.induced_subgraph(ids));
        if (!d)
            return std::nullopt;
        out.push_back(std::move(*d));
    }
    return out;
}

std::string verdict_kind_name(RealizabilityVerdict::Kind kind) {
    switch (kind) {
    case RealizabilityVerdict::Kind::RealizableWitness:
        return "realizable";
    case RealizabilityVerdict::Kind::CertifiedNonRealizable:
        return "certified-non-realizable";
    case RealizabilityVerdict::Kind::Unknown:
        return "unknown";
    }
    return "?";
}

namespace {

// Concatenates per-component witnesses side by side on one circle.
ChordDiagram merge_diagrams(const std::vector<ChordDiagram>& parts) {
    std::vector<std::string> word;
    std::map<std::string, ChordLabel> labels;
    for (const auto& d : parts) {
        word.insert(word.end(), d.word().begin(), d.word().end());
        labels.insert(d.labels().begin(), d.labels().end());
    }
    return ChordDiagram(std::move(word), std::move(labels));
}

std::optional<ChordDiagram> try_realize_whole(const LabeledGraph& g,
                                              std::size_t max_chords) {
    if (g.vertex_count() > max_chords)
        return std::nullopt;
    auto parts = realize_connected_components(g, max_chords);
    if (!parts)
        return std::nullopt;
    return merge_diagrams(*parts);
}

bool is_addition(MoveDescriptor::Kind k) {
    using K = MoveDescriptor::Kind;
    return k == K::Og1Add || k == K::Og2Add || k == K::R1Add || k == K::R2Add;
}

// Bounded breadth-first search through non-increasing moves for a
// representative that passes realize.
template <typename Graph, typename TryRealize>
std::optional<ChordDiagram> search_realizable(const Graph& start,
                                              std::size_t max_steps,
                                              TryRealize try_realize) {
    std::set<std::string> seen{canonical_form(start)};
    std::deque<Graph> frontier{start};
    std::size_t steps = 0;
    while (!frontier.empty() && steps < max_steps) {
        Graph g = std::move(frontier.front());
        frontier.pop_front();
        for (const MoveDescriptor& d : detect_moves(g)) {
            if (is_addition(d.kind))
                continue;
            if (++steps > max_steps)
                break;
            Graph h = apply_move(g, d);
            if (!seen.insert(canonical_form(h)).second)
                continue;
            if (auto w = try_realize(h))
                return w;
            frontier.push_back(std::move(h));
        }
    }
    return std::nullopt;
}

} // namespace

RealizabilityVerdict graphlink_realizability(const LabeledGraph& g,
                                             std::size_t max_chords,
                                             std::size_t max_steps) {
    if (auto w = try_realize_whole(g, max_chords))
        return {RealizabilityVerdict::Kind::RealizableWitness, std::move(w)};
    if (minimality_certificate(g).verdict ==
        MinimalityCertificate::Verdict::MinimalByOddParity)
        return {RealizabilityVerdict::Kind::CertifiedNonRealizable, std::nullopt};
    if (auto w = search_realizable(g, max_steps, [&](const LabeledGraph& h) {
            return try_realize_whole(h, max_chords);
        }))
        return {RealizabilityVerdict::Kind::RealizableWitness, std::move(w)};
    return {RealizabilityVerdict::Kind::Unknown, std::nullopt};
}

RealizabilityVerdict graphlink_realizability(const LoopedGraph& g,
                                             std::size_t max_chords,
                                             std::size_t max_steps) {
    auto try_looped = [&](const LoopedGraph& h) -> std::optional<ChordDiagram> {
        if (h.vertex_count() > max_chords)
            return std::nullopt;
        return realize(h, max_chords);
    };
    if (auto w = try_looped(g))
        return {RealizabilityVerdict::Kind::RealizableWitness, std::move(w)};
    if (minimality_certificate(g).verdict ==
        MinimalityCertificate::Verdict::MinimalByOddParity)
        return {RealizabilityVerdict::Kind::CertifiedNonRealizable, std::nullopt};
    if (auto w = search_realizable(g, max_steps, try_looped))
        return {RealizabilityVerdict::Kind::RealizableWitness, std::move(w)};
    return {RealizabilityVerdict::Kind::Unknown, std::nullopt};
}

} // namespace graphlink
