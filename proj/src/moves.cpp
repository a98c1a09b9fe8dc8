#include "graphlink/moves.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "graphlink/errors.hpp"

namespace graphlink {

namespace {

[[noreturn]] void not_applicable(const std::string& reason) {
    throw Error(ErrorCode::NotApplicable, "move not applicable: " + reason, reason);
}

std::set<std::size_t> outside_neighborhood(const LabeledGraph& g, std::size_t i,
                                           std::size_t j) {
    std::set<std::size_t> out;
    for (std::size_t k = 0; k < g.vertex_count(); ++k)
        if (k != i && k != j && g.adjacent(i, k))
            out.insert(k);
    return out;
}

std::set<std::size_t> outside_neighborhood(const LoopedGraph& g, std::size_t i,
                                           std::size_t j) {
    std::set<std::size_t> out;
    for (std::size_t k = 0; k < g.vertex_count(); ++k)
        if (k != i && k != j && g.adjacent(i, k))
            out.insert(k);
    return out;
}

// (N(v) symmetric-difference N(w)) minus {u, v, w}.
std::vector<std::size_t> og3_toggle_set(const LabeledGraph& g, std::size_t iu,
                                        std::size_t iv, std::size_t iw) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < g.vertex_count(); ++t) {
        if (t == iu || t == iv || t == iw)
            continue;
        if (g.adjacent(iv, t) != g.adjacent(iw, t))
            out.push_back(t);
    }
    return out;
}

} // namespace

std::string move_kind_name(MoveDescriptor::Kind kind) {
    switch (kind) {
    case MoveDescriptor::Kind::Og1Add: return "og1-add";
    case MoveDescriptor::Kind::Og1Remove: return "og1-remove";
    case MoveDescriptor::Kind::Og2Add: return "og2-add";
    case MoveDescriptor::Kind::Og2Remove: return "og2-remove";
    case MoveDescriptor::Kind::Og3: return "og3";
    case MoveDescriptor::Kind::Og3Inverse: return "og3-inverse";
    case MoveDescriptor::Kind::Og4: return "og4";
    case MoveDescriptor::Kind::Og4Prime: return "og4p";
    case MoveDescriptor::Kind::R1Add: return "r1-add";
    case MoveDescriptor::Kind::R1Remove: return "r1-remove";
    case MoveDescriptor::Kind::R2Add: return "r2-add";
    case MoveDescriptor::Kind::R2Remove: return "r2-remove";
    case MoveDescriptor::Kind::R3: return "r3";
    }
    return "?";
}

LabeledGraph apply_og1_add(const LabeledGraph& g, const std::string& id, int sign) {
    if (g.has_vertex(id))
        not_applicable("id-in-use");
    LabeledGraph out = g;
    out.add_vertex(id, 0, sign);
    return out;
}

LabeledGraph apply_og1_remove(const LabeledGraph& g, const std::string& id) {
    std::size_t i = g.index_of(id);
    if (g.degree(i) != 0)
        not_applicable("not-isolated");
    if (g.vertex(i).framing != 0)
        not_applicable("framing-nonzero");
    return g.without_vertex(i);
}

LabeledGraph apply_og2_add(const LabeledGraph& g, const std::string& id1,
                           const std::string& id2, int framing, int sign,
                           const std::vector<std::string>& neighborhood) {
    if (g.has_vertex(id1) || g.has_vertex(id2) || id1 == id2)
        not_applicable("id-in-use");
    LabeledGraph out = g;
    out.add_vertex(id1, framing, sign);
    out.add_vertex(id2, framing, -sign);
    for (const auto& w : neighborhood) {
        out.add_edge(id1, w);
        out.add_edge(id2, w);
    }
    if (framing == 1)
        out.add_edge(id1, id2);
    return out;
}

LabeledGraph apply_og2_remove(const LabeledGraph& g, const std::string& id1,
                              const std::string& id2) {
    std::size_t i = g.index_of(id1), j = g.index_of(id2);
    if (i == j)
        throw Error(ErrorCode::SameVertex, "second move needs two distinct vertices");
    const auto &a = g.vertex(i), &b = g.vertex(j);
    if (a.framing != b.framing)
        not_applicable("framing-adjacency-mismatch");
    if (a.framing == 0 && g.adjacent(i, j))
        not_applicable("framing-adjacency-mismatch");
    if (a.framing == 1 && !g.adjacent(i, j))
        not_applicable("framing-adjacency-mismatch");
    if (a.sign == b.sign)
        not_applicable("sign-mismatch");
    if (outside_neighborhood(g, i, j) != outside_neighborhood(g, j, i))
        not_applicable("neighborhood-mismatch");
    LabeledGraph out = g.without_vertex(std::max(i, j));
    return out.without_vertex(std::min(i, j));
}

LabeledGraph apply_og3(const LabeledGraph& g, const std::string& u,
                       const std::string& v, const std::string& w) {
    std::size_t iu = g.index_of(u), iv = g.index_of(v), iw = g.index_of(w);
    if (iu == iv || iu == iw || iv == iw)
        throw Error(ErrorCode::SameVertex, "third move needs three distinct vertices");
    for (std::size_t k : {iu, iv, iw})
        if (g.vertex(k).framing != 0 || g.vertex(k).sign != -1)
            not_applicable("labels-not-0-minus");
    if (!g.adjacent(iu, iv) || !g.adjacent(iu, iw) || g.degree(iu) != 2)
        not_applicable("u-not-only-adjacent-to-v-w");
    if (!g.adjacent(iv, iw))
        not_applicable("v-w-not-adjacent");
    LabeledGraph out = g;
    for (std::size_t t : og3_toggle_set(g, iu, iv, iw))
        out.toggle_edge(iu, t);
    out.vertices()[iv].sign = +1;
    out.vertices()[iw].sign = +1;
    return out;
}

LabeledGraph apply_og3_inverse(const LabeledGraph& g, const std::string& u,
                               const std::string& v, const std::string& w) {
    std::size_t iu = g.index_of(u), iv = g.index_of(v), iw = g.index_of(w);
    if (iu == iv || iu == iw || iv == iw)
        throw Error(ErrorCode::SameVertex, "third move needs three distinct vertices");
    if (g.vertex(iu).framing != 0 || g.vertex(iu).sign != -1)
        not_applicable("labels-not-0-minus");
    for (std::size_t k : {iv, iw})
        if (g.vertex(k).framing != 0 || g.vertex(k).sign != +1)
            not_applicable("labels-not-0-plus");
    if (!g.adjacent(iu, iv) || !g.adjacent(iu, iw))
        not_applicable("u-not-adjacent-to-v-w");
    if (!g.adjacent(iv, iw))
        not_applicable("v-w-not-adjacent");
    auto toggles = og3_toggle_set(g, iu, iv, iw);
    std::set<std::size_t> expected(toggles.begin(), toggles.end());
    std::set<std::size_t> actual;
    for (std::size_t t = 0; t < g.vertex_count(); ++t)
        if (t != iv && t != iw && t != iu && g.adjacent(iu, t))
            actual.insert(t);
    if (expected != actual)
        not_applicable("u-neighborhood-mismatch");
    LabeledGraph out = g;
    for (std::size_t t : toggles)
        out.toggle_edge(iu, t);
    out.vertices()[iv].sign = -1;
    out.vertices()[iw].sign = -1;
    return out;
}

LabeledGraph apply_og4(const LabeledGraph& g, const std::string& u,
                       const std::string& v) {
    std::size_t iu = g.index_of(u), iv = g.index_of(v);
    if (iu == iv)
        throw Error(ErrorCode::SameVertex, "fourth move needs two distinct vertices");
    if (!g.adjacent(iu, iv))
        not_applicable("not-adjacent");
    if (g.vertex(iu).framing != 0 || g.vertex(iv).framing != 0)
        not_applicable("framing-nonzero");
    int alpha = g.vertex(iu).sign, beta = g.vertex(iv).sign;
    LabeledGraph out = g.pivot(u, v);
    out.vertices()[iu].sign = -beta;
    out.vertices()[iv].sign = -alpha;
    return out;
}

LabeledGraph apply_og4p(const LabeledGraph& g, const std::string& v) {
    std::size_t iv = g.index_of(v);
    if (g.vertex(iv).framing != 1)
        not_applicable("framing-not-one");
    LabeledGraph out = g.local_complement(v);
    out.vertices()[iv].sign = -out.vertices()[iv].sign;
    for (std::size_t u : g.neighbors(iv))
        out.vertices()[u].framing ^= 1;
    return out;
}

LoopedGraph apply_r1_add(const LoopedGraph& g, const std::string& id, bool looped) {
    if (g.has_vertex(id))
        not_applicable("id-in-use");
    LoopedGraph out = g;
    out.add_vertex(id, looped);
    return out;
}

LoopedGraph apply_r1_remove(const LoopedGraph& g, const std::string& id) {
    std::size_t i = g.index_of(id);
    if (g.degree(i) != 0)
        not_applicable("not-isolated");
    return g.without_vertex(i);
}

LoopedGraph apply_r2_add(const LoopedGraph& g, const std::string& id1,
                         const std::string& id2, bool first_looped, bool adjacent_pair,
                         const std::vector<std::string>& neighborhood) {
    if (g.has_vertex(id1) || g.has_vertex(id2) || id1 == id2)
        not_applicable("id-in-use");
    LoopedGraph out = g;
    out.add_vertex(id1, first_looped);
    out.add_vertex(id2, !first_looped);
    for (const auto& w : neighborhood) {
        out.add_edge(id1, w);
        out.add_edge(id2, w);
    }
    if (adjacent_pair)
        out.add_edge(id1, id2);
    return out;
}

LoopedGraph apply_r2_remove(const LoopedGraph& g, const std::string& id1,
                            const std::string& id2) {
    std::size_t i = g.index_of(id1), j = g.index_of(id2);
    if (i == j)
        throw Error(ErrorCode::SameVertex, "second move needs two distinct vertices");
    if (g.vertex(i).looped == g.vertex(j).looped)
        not_applicable("loop-mismatch");
    if (outside_neighborhood(g, i, j) != outside_neighborhood(g, j, i))
        not_applicable("neighborhood-mismatch");
    LoopedGraph out = g.without_vertex(std::max(i, j));
    return out.without_vertex(std::min(i, j));
}

LoopedGraph apply_r3(const LoopedGraph& g, const std::string& u,
                     const std::string& v, const std::string& w) {
    std::size_t iu = g.index_of(u), iv = g.index_of(v), iw = g.index_of(w);
    if (iu == iv || iu == iw || iv == iw)
        throw Error(ErrorCode::SameVertex, "third move needs three distinct vertices");
    if (!g.vertex(iv).looped || g.vertex(iw).looped)
        not_applicable("loop-pattern");
    bool uv = g.adjacent(iu, iv), uw = g.adjacent(iu, iw), vw = g.adjacent(iv, iw);
    bool forward = !uv && !uw && vw;
    bool backward = uv && uw && !vw;
    if (!forward && !backward)
        not_applicable("adjacency-pattern");
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        if (x == iu || x == iv || x == iw)
            continue;
        int c = int(g.adjacent(x, iu)) + int(g.adjacent(x, iv)) + int(g.adjacent(x, iw));
        if (c != 0 && c != 2)
            not_applicable("incidence-count");
    }
    LoopedGraph out = g;
    out.toggle_edge(iu, iv);
    out.toggle_edge(iu, iw);
    out.toggle_edge(iv, iw);
    return out;
}

LabeledGraph apply_move(const LabeledGraph& g, const MoveDescriptor& d) {
    using K = MoveDescriptor::Kind;
    switch (d.kind) {
    case K::Og1Add:
        return apply_og1_add(g, d.new_ids.at(0), d.sign);
    case K::Og1Remove:
        return apply_og1_remove(g, d.site.at(0));
    case K::Og2Add:
        return apply_og2_add(g, d.new_ids.at(0), d.new_ids.at(1), d.framing, d.sign,
                             d.attach);
    case K::Og2Remove:
        return apply_og2_remove(g, d.site.at(0), d.site.at(1));
    case K::Og3:
        return apply_og3(g, d.site.at(0), d.site.at(1), d.site.at(2));
    case K::Og3Inverse:
        return apply_og3_inverse(g, d.site.at(0), d.site.at(1), d.site.at(2));
    case K::Og4:
        return apply_og4(g, d.site.at(0), d.site.at(1));
    case K::Og4Prime:
        return apply_og4p(g, d.site.at(0));
    default:
        not_applicable("wrong-graph-kind");
    }
}

LoopedGraph apply_move(const LoopedGraph& g, const MoveDescriptor& d) {
    using K = MoveDescriptor::Kind;
    switch (d.kind) {
    case K::R1Add:
        return apply_r1_add(g, d.new_ids.at(0), d.looped);
    case K::R1Remove:
        return apply_r1_remove(g, d.site.at(0));
    case K::R2Add:
        return apply_r2_add(g, d.new_ids.at(0), d.new_ids.at(1), true,
                            d.framing == 1, d.attach);
    case K::R2Remove:
        return apply_r2_remove(g, d.site.at(0), d.site.at(1));
    case K::R3:
        return apply_r3(g, d.site.at(0), d.site.at(1), d.site.at(2));
    default:
        not_applicable("wrong-graph-kind");
    }
}

namespace {

bool og2_removable(const LabeledGraph& g, std::size_t i, std::size_t j) {
    const auto &a = g.vertex(i), &b = g.vertex(j);
    if (a.framing != b.framing || a.sign == b.sign)
        return false;
    if ((a.framing == 0) == g.adjacent(i, j))
        return false;
    return outside_neighborhood(g, i, j) == outside_neighborhood(g, j, i);
}

bool r2_removable(const LoopedGraph& g, std::size_t i, std::size_t j) {
    if (g.vertex(i).looped == g.vertex(j).looped)
        return false;
    return outside_neighborhood(g, i, j) == outside_neighborhood(g, j, i);
}

} // namespace

std::vector<MoveDescriptor> detect_moves(const LabeledGraph& g) {
    using K = MoveDescriptor::Kind;
    std::vector<MoveDescriptor> out;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(i) == 0 && g.vertex(i).framing == 0)
            out.push_back({K::Og1Remove, {g.vertex(i).id}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (og2_removable(g, i, j))
                out.push_back({K::Og2Remove, {g.vertex(i).id, g.vertex(j).id}});
    for (std::size_t u = 0; u < n; ++u) {
        if (g.vertex(u).framing != 0 || g.vertex(u).sign != -1 || g.degree(u) != 2)
            continue;
        auto nb = g.neighbors(u);
        // forward third move
        bool ok = true;
        for (std::size_t k : nb)
            if (g.vertex(k).framing != 0 || g.vertex(k).sign != -1)
                ok = false;
        if (!g.adjacent(nb[0], nb[1]))
            ok = false;
        if (ok)
            out.push_back({K::Og3, {g.vertex(u).id, g.vertex(nb[0]).id, g.vertex(nb[1]).id}});
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (g.vertex(u).framing != 0 || g.vertex(u).sign != -1)
            continue;
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w) {
                if (v == u || w == u)
                    continue;
                MoveDescriptor d{K::Og3Inverse,
                                 {g.vertex(u).id, g.vertex(v).id, g.vertex(w).id}};
                try {
                    apply_og3_inverse(g, d.site[0], d.site[1], d.site[2]);
                } catch (const Error&) {
                    continue;
                }
                out.push_back(std::move(d));
            }
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && g.vertex(u).framing == 0 && g.vertex(v).framing == 0)
                out.push_back({K::Og4, {g.vertex(u).id, g.vertex(v).id}});
    for (std::size_t v = 0; v < n; ++v)
        if (g.vertex(v).framing == 1)
            out.push_back({K::Og4Prime, {g.vertex(v).id}});
    out.push_back({K::Og1Add});
    out.push_back({K::Og2Add});
    return out;
}

std::vector<MoveDescriptor> detect_moves(const LoopedGraph& g) {
    using K = MoveDescriptor::Kind;
    std::vector<MoveDescriptor> out;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(i) == 0)
            out.push_back({K::R1Remove, {g.vertex(i).id}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r2_removable(g, i, j))
                out.push_back({K::R2Remove, {g.vertex(i).id, g.vertex(j).id}});
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) {
                if (u == v || u == w || v == w)
                    continue;
                if (!g.vertex(v).looped || g.vertex(w).looped)
                    continue;
                try {
                    apply_r3(g, g.vertex(u).id, g.vertex(v).id, g.vertex(w).id);
                } catch (const Error&) {
                    continue;
                }
                out.push_back({K::R3, {g.vertex(u).id, g.vertex(v).id, g.vertex(w).id}});
            }
    out.push_back({K::R1Add});
    out.push_back({K::R2Add});
    return out;
}

bool has_decreasing_second_move(const LabeledGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (og2_removable(g, i, j))
                return true;
    return false;
}

bool has_decreasing_second_move(const LoopedGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (r2_removable(g, i, j))
                return true;
    return false;
}

namespace {

std::string fresh_id(std::size_t& counter) {
    return "_n" + std::to_string(++counter);
}

// Children in deterministic order: removals, rewrites, then additions.
template <typename Graph, typename Expand>
std::optional<std::vector<MoveDescriptor>>
bfs_search(const Graph& g1, const Graph& g2, std::size_t max_vertices,
           std::size_t max_steps, Expand expand) {
    if (max_vertices < std::max(g1.vertex_count(), g2.vertex_count()))
        throw Error(ErrorCode::SizeLimit, "max_vertices below input size");
    const std::string target = canonical_form(g2, max_vertices);
    if (canonical_form(g1, max_vertices) == target)
        return std::vector<MoveDescriptor>{};
    struct Node {
        Graph graph;
        std::vector<MoveDescriptor> path;
    };
    std::deque<Node> frontier;
    std::set<std::string> seen;
    frontier.push_back({g1, {}});
    seen.insert(canonical_form(g1, max_vertices));
    std::size_t steps = 0;
    std::size_t counter = 0;
    while (!frontier.empty() && steps < max_steps) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        ++steps;
        for (auto& [child, desc] : expand(node.graph, max_vertices, counter)) {
            std::string key = canonical_form(child, max_vertices);
            auto path = node.path;
            path.push_back(desc);
            if (key == target)
                return path;
            if (seen.insert(key).second)
                frontier.push_back({std::move(child), std::move(path)});
        }
    }
    return std::nullopt;
}

std::vector<std::pair<LabeledGraph, MoveDescriptor>>
expand_labeled(const LabeledGraph& g, std::size_t max_vertices, std::size_t& counter) {
    using K = MoveDescriptor::Kind;
    std::vector<std::pair<LabeledGraph, MoveDescriptor>> out;
    for (const auto& d : detect_moves(g)) {
        if (d.kind == K::Og1Add || d.kind == K::Og2Add)
            continue;
        out.push_back({apply_move(g, d), d});
    }
    const std::size_t n = g.vertex_count();
    if (n + 1 <= max_vertices)
        for (int sign : {+1, -1}) {
            MoveDescriptor d{K::Og1Add};
            d.new_ids = {fresh_id(counter)};
            d.sign = sign;
            out.push_back({apply_move(g, d), d});
        }
    if (n + 2 <= max_vertices && n <= 12)
        for (int framing : {0, 1})
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                MoveDescriptor d{K::Og2Add};
                d.new_ids = {fresh_id(counter), fresh_id(counter)};
                d.framing = framing;
                d.sign = +1;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1u)
                        d.attach.push_back(g.vertex(i).id);
                out.push_back({apply_move(g, d), d});
            }
    return out;
}

std::vector<std::pair<LoopedGraph, MoveDescriptor>>
expand_looped(const LoopedGraph& g, std::size_t max_vertices, std::size_t& counter) {
    using K = MoveDescriptor::Kind;
    std::vector<std::pair<LoopedGraph, MoveDescriptor>> out;
    for (const auto& d : detect_moves(g)) {
        if (d.kind == K::R1Add || d.kind == K::R2Add)
            continue;
        out.push_back({apply_move(g, d), d});
    }
    const std::size_t n = g.vertex_count();
    if (n + 1 <= max_vertices)
        for (bool looped : {false, true}) {
            MoveDescriptor d{K::R1Add};
            d.new_ids = {fresh_id(counter)};
            d.looped = looped;
            out.push_back({apply_move(g, d), d});
        }
    if (n + 2 <= max_vertices && n <= 12)
        for (int adjacent_pair : {0, 1})
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                MoveDescriptor d{K::R2Add};
                d.new_ids = {fresh_id(counter), fresh_id(counter)};
                d.framing = adjacent_pair;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1u)
                        d.attach.push_back(g.vertex(i).id);
                out.push_back({apply_move(g, d), d});
            }
    return out;
}

} // namespace

std::optional<std::vector<MoveDescriptor>>
equivalence_search(const LabeledGraph& g1, const LabeledGraph& g2,
                   std::size_t max_vertices, std::size_t max_steps) {
    return bfs_search(g1, g2, max_vertices, max_steps,
                      [](const LabeledGraph& g, std::size_t mv, std::size_t& c) {
                          return expand_labeled(g, mv, c);
                      });
}

std::optional<std::vector<MoveDescriptor>>
equivalence_search(const LoopedGraph& g1, const LoopedGraph& g2,
                   std::size_t max_vertices, std::size_t max_steps) {
    return bfs_search(g1, g2, max_vertices, max_steps,
                      [](const LoopedGraph& g, std::size_t mv, std::size_t& c) {
                          return expand_looped(g, mv, c);
                      });
}

} // namespace graphlink
