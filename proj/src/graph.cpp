#include "graphlink/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "graphlink/errors.hpp"

namespace graphlink {

void LabeledGraph::add_vertex(const std::string& id, int framing, int sign) {
    if (index_.count(id))
        throw Error(ErrorCode::ParseError, "duplicate vertex id: " + id);
    index_[id] = verts_.size();
    verts_.push_back({id, framing, sign});
    adj_.push_back(0);
}

void LabeledGraph::add_edge(const std::string& a, const std::string& b) {
    std::size_t i = index_of(a), j = index_of(b);
    if (i == j)
        throw Error(ErrorCode::ParseError, "loop edge on vertex " + a);
    set_edge(i, j, true);
}

bool LabeledGraph::has_vertex(const std::string& id) const {
    return index_.count(id) != 0;
}

std::size_t LabeledGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownVertex, "unknown vertex: " + id);
    return it->second;
}

void LabeledGraph::toggle_edge(std::size_t i, std::size_t j) {
    adj_[i] ^= std::uint64_t{1} << j;
    adj_[j] ^= std::uint64_t{1} << i;
}

void LabeledGraph::set_edge(std::size_t i, std::size_t j, bool present) {
    if (present) {
        adj_[i] |= std::uint64_t{1} << j;
        adj_[j] |= std::uint64_t{1} << i;
    } else {
        adj_[i] &= ~(std::uint64_t{1} << j);
        adj_[j] &= ~(std::uint64_t{1} << i);
    }
}

std::size_t LabeledGraph::degree(std::size_t i) const {
    return std::popcount(adj_[i]);
}

std::vector<std::size_t> LabeledGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < verts_.size(); ++j)
        if (adjacent(i, j))
            out.push_back(j);
    return out;
}

LabeledGraph LabeledGraph::without_vertex(std::size_t v) const {
    LabeledGraph g;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != v)
            g.add_vertex(verts_[i].id, verts_[i].framing, verts_[i].sign);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (i != v && j != v && adjacent(i, j))
                g.add_edge(verts_[i].id, verts_[j].id);
    return g;
}

bool LabeledGraph::operator==(const LabeledGraph& other) const {
    return verts_ == other.verts_ && adj_ == other.adj_;
}

LabeledGraph LabeledGraph::local_complement(const std::string& v) const {
    std::size_t c = index_of(v);
    LabeledGraph g = *this;
    auto nbrs = neighbors(c);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b)
            g.toggle_edge(nbrs[a], nbrs[b]);
    return g;
}

LabeledGraph LabeledGraph::pivot(const std::string& u, const std::string& v) const {
    std::size_t iu = index_of(u), iv = index_of(v);
    if (iu == iv)
        throw Error(ErrorCode::SameVertex, "pivot requires two distinct vertices");
    LabeledGraph g = *this;
    for (std::size_t x = 0; x < verts_.size(); ++x)
        for (std::size_t y = x + 1; y < verts_.size(); ++y) {
            if (x == iu || x == iv || y == iu || y == iv)
                continue;
            bool xu = adjacent(iu, x), xv = adjacent(iv, x);
            bool yu = adjacent(iu, y), yv = adjacent(iv, y);
            if ((xu && yv && (!xv || !yu)) || (yu && xv && (!yv || !xu)))
                g.toggle_edge(x, y);
        }
    return g;
}

LabeledGraph LabeledGraph::induced_subgraph(const std::vector<std::string>& ids) const {
    LabeledGraph g;
    for (const auto& id : ids) {
        const auto& v = verts_[index_of(id)];
        g.add_vertex(v.id, v.framing, v.sign);
    }
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (adjacent(index_of(ids[a]), index_of(ids[b])))
                g.add_edge(ids[a], ids[b]);
    return g;
}

Gf2SymMatrix LabeledGraph::adjacency_matrix() const {
    Gf2SymMatrix m(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        m.set(i, i, verts_[i].framing != 0);
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (adjacent(i, j))
                m.set(i, j, true);
    }
    return m;
}

void LoopedGraph::add_vertex(const std::string& id, bool looped) {
    if (index_.count(id))
        throw Error(ErrorCode::ParseError, "duplicate vertex id: " + id);
    index_[id] = verts_.size();
    verts_.push_back({id, looped});
    adj_.push_back(0);
}

void LoopedGraph::add_edge(const std::string& a, const std::string& b) {
    std::size_t i = index_of(a), j = index_of(b);
    if (i == j)
        throw Error(ErrorCode::ParseError, "loop edge on vertex " + a);
    set_edge(i, j, true);
}

bool LoopedGraph::has_vertex(const std::string& id) const {
    return index_.count(id) != 0;
}

std::size_t LoopedGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownVertex, "unknown vertex: " + id);
    return it->second;
}

void LoopedGraph::toggle_edge(std::size_t i, std::size_t j) {
    adj_[i] ^= std::uint64_t{1} << j;
    adj_[j] ^= std::uint64_t{1} << i;
}

void LoopedGraph::set_edge(std::size_t i, std::size_t j, bool present) {
    if (present) {
        adj_[i] |= std::uint64_t{1} << j;
        adj_[j] |= std::uint64_t{1} << i;
    } else {
        adj_[i] &= ~(std::uint64_t{1} << j);
        adj_[j] &= ~(std::uint64_t{1} << i);
    }
}

std::size_t LoopedGraph::degree(std::size_t i) const {
    return std::popcount(adj_[i]);
}

std::vector<std::size_t> LoopedGraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < verts_.size(); ++j)
        if (adjacent(i, j))
            out.push_back(j);
    return out;
}

LoopedGraph LoopedGraph::without_vertex(std::size_t v) const {
    LoopedGraph g;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != v)
            g.add_vertex(verts_[i].id, verts_[i].looped);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (i != v && j != v && adjacent(i, j))
                g.add_edge(verts_[i].id, verts_[j].id);
    return g;
}

bool LoopedGraph::operator==(const LoopedGraph& other) const {
    return verts_ == other.verts_ && adj_ == other.adj_;
}

LoopedGraph LoopedGraph::local_complement(const std::string& v) const {
    std::size_t c = index_of(v);
    LoopedGraph g = *this;
    auto nbrs = neighbors(c);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b)
            g.toggle_edge(nbrs[a], nbrs[b]);
    return g;
}

LoopedGraph LoopedGraph::pivot(const std::string& u, const std::string& v) const {
    std::size_t iu = index_of(u), iv = index_of(v);
    if (iu == iv)
        throw Error(ErrorCode::SameVertex, "pivot requires two distinct vertices");
    LoopedGraph g = *this;
    for (std::size_t x = 0; x < verts_.size(); ++x)
        for (std::size_t y = x + 1; y < verts_.size(); ++y) {
            if (x == iu || x == iv || y == iu || y == iv)
                continue;
            bool xu = adjacent(iu, x), xv = adjacent(iv, x);
            bool yu = adjacent(iu, y), yv = adjacent(iv, y);
            bool hit = (xu && yv && (!xv || !yu)) || (yu && xv && (!yv || !xu));
            if (hit)
                g.toggle_edge(x, y);
        }
    return g;
}

namespace {

// Shared canonicalization: per-vertex label keys plus adjacency rows.
struct CanonInput {
    char tag;
    std::vector<std::pair<int, int>> labels;
    std::vector<std::uint64_t> adj;
};

std::string encode(const CanonInput& in, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    std::string out;
    out.reserve(2 + 3 * n + n * n / 2);
    out.push_back(in.tag);
    out.push_back(static_cast<char>('0' + n));
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(static_cast<char>('0' + in.labels[order[i]].first));
        out.push_back(static_cast<char>('a' + in.labels[order[i]].second));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(((in.adj[order[i]] >> order[j]) & 1u) ? '1' : '0');
    return out;
}

std::string canonicalize(const CanonInput& in, std::size_t max_vertices) {
    const std::size_t n = in.labels.size();
    if (n > max_vertices)
        throw Error(ErrorCode::SizeLimit, "graph too large for canonicalization");
    if (n == 0)
        return encode(in, {});

    // Iterated color refinement seeded by (label, degree).
    std::vector<int> color(n);
    {
        std::vector<std::pair<std::pair<int, int>, int>> keys(n);
        for (std::size_t i = 0; i < n; ++i)
            keys[i] = {in.labels[i], std::popcount(in.adj[i])};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < n; ++i)
            color[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    for (;;) {
        std::vector<std::pair<int, std::vector<int>>> keys(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> nbr;
            for (std::size_t j = 0; j < n; ++j)
                if ((in.adj[i] >> j) & 1u)
                    nbr.push_back(color[j]);
            std::sort(nbr.begin(), nbr.end());
            keys[i] = {color[i], std::move(nbr)};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (std::size_t i = 0; i < n; ++i)
            next[i] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
        if (next == color)
            break;
        color = std::move(next);
    }

    // Cells of equal color, in color order; permutations run within cells.
    int ncolors = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<std::size_t>> cells(ncolors);
    for (std::size_t i = 0; i < n; ++i)
        cells[color[i]].push_back(i);

    std::string best;
    std::vector<std::size_t> order;
    order.reserve(n);
    auto consider = [&]() {
        std::string enc = encode(in, order);
        if (best.empty() || enc < best)
            best = std::move(enc);
    };
    // Product of within-cell permutations via recursive descent.
    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            consider();
            return;
        }
        std::vector<std::size_t> perm = cells[cell];
        do {
            order.insert(order.end(), perm.begin(), perm.end());
            self(self, cell + 1);
            order.resize(order.size() - perm.size());
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
    return best;
}

} // namespace

std::string canonical_form(const LabeledGraph& g, std::size_t max_vertices) {
    CanonInput in;
    in.tag = 'L';
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        in.labels.push_back({g.vertex(i).framing, g.vertex(i).sign > 0 ? 1 : 0});
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                row |= std::uint64_t{1} << j;
        in.adj.push_back(row);
    }
    return canonicalize(in, max_vertices);
}

std::string canonical_form(const LoopedGraph& g, std::size_t max_vertices) {
    CanonInput in;
    in.tag = 'O';
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        in.labels.push_back({g.vertex(i).looped ? 1 : 0, 0});
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                row |= std::uint64_t{1} << j;
        in.adj.push_back(row);
    }
    return canonicalize(in, max_vertices);
}

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic(const LoopedGraph& a, const LoopedGraph& b) {
    if (a.vertex_count() != b.vertex_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace graphlink
