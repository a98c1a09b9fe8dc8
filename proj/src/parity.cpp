#include "graphlink/parity.hpp"

#include <deque>
#include <mutex>
#include <set>

#include "graphlink/chi.hpp"
#include "graphlink/errors.hpp"
#include "graphlink/invariants.hpp"

namespace graphlink {

ParityTable parity_knot(const LoopedGraph& l) {
    ParityTable out;
    for (std::size_t i = 0; i < l.vertex_count(); ++i)
        out[l.vertex(i).id] = l.degree(i) % 2 == 0 ? Parity::Even : Parity::Odd;
    return out;
}

ParityTable parity_knot_labeled(const LabeledGraph& g) {
    return parity_knot(chi(g));
}

ParityTable parity_link2(const LabeledGraph& g) {
    if (component_count(g) != 2)
        throw Error(ErrorCode::NotTwoComponents,
                    "two-component parity needs a two-component graph");
    ParityTable out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        out[g.vertex(i).id] =
            is_oriented_vertex_index(g, i) ? Parity::Even : Parity::Odd;
    return out;
}

namespace {

LabeledGraph strip_signs(LabeledGraph g) {
    for (auto& v : g.vertices())
        v.sign = +1;
    return g;
}

std::size_t corank_ape(const LabeledGraph& g) {
    return corank(g.adjacency_matrix() + Gf2SymMatrix::identity(g.vertex_count()));
}

// Fourth graph-move, signs disregarded: pivot at an adjacent framing-0 pair.
// Realized as the triple local complement so that the neighborhoods of the
// two pivot vertices are exchanged; deleting one of them afterwards (as the
// smoothing does) distinguishes this from edge complementation alone.
LabeledGraph free_og4(const LabeledGraph& g, std::size_t i, std::size_t j) {
    const std::string &u = g.vertex(i).id, &v = g.vertex(j).id;
    return g.local_complement(u).local_complement(v).local_complement(u);
}

// Fourth graph-move at a framing-1 vertex: local complementation plus a
// framing toggle on every neighbor.
LabeledGraph free_og4p(const LabeledGraph& g, std::size_t v) {
    LabeledGraph out = g.local_complement(g.vertex(v).id);
    for (std::size_t u : g.neighbors(v))
        out.vertices()[u].framing ^= 1;
    return out;
}

// All fourth-move images of g (both variants).
std::vector<LabeledGraph> og4_children(const LabeledGraph& g) {
    std::vector<LabeledGraph> children;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j) && g.vertex(i).framing == 0 &&
                g.vertex(j).framing == 0)
                children.push_back(free_og4(g, i, j));
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.vertex(v).framing == 1)
            children.push_back(free_og4p(g, v));
    return children;
}

// Breadth-first fourth-move orbit, deduplicated by labeled canonical form.
std::vector<LabeledGraph> og4_orbit(const LabeledGraph& start, std::size_t cap) {
    std::set<std::string> seen;
    std::deque<LabeledGraph> frontier;
    std::vector<LabeledGraph> out;
    seen.insert(canonical_form(start));
    frontier.push_back(start);
    out.push_back(start);
    while (!frontier.empty()) {
        LabeledGraph g = std::move(frontier.front());
        frontier.pop_front();
        for (auto& child : og4_children(g)) {
            if (!seen.insert(canonical_form(child)).second)
                continue;
            if (seen.size() > cap)
                throw Error(ErrorCode::OrbitLimit,
                            "fourth-move orbit exceeds node cap");
            frontier.push_back(child);
            out.push_back(std::move(child));
        }
    }
    return out;
}

} // namespace

FreeFramedGraph::FreeFramedGraph(LabeledGraph rep, std::size_t orbit_cap)
    : rep_(strip_signs(std::move(rep))), cap_(orbit_cap) {}

namespace {

// Memo from a representative's labeled canonical form to the orbit-minimal
// canonical form of its fourth-move class; every orbit member seen during one
// enumeration maps to the same answer.
std::mutex orbit_memo_mutex;
std::map<std::string, std::string>& orbit_memo() {
    static std::map<std::string, std::string> memo;
    return memo;
}

} // namespace

const std::string& FreeFramedGraph::canonical() const {
    if (canon_)
        return *canon_;
    {
        std::lock_guard<std::mutex> lock(orbit_memo_mutex);
        auto it = orbit_memo().find(canonical_form(rep_));
        if (it != orbit_memo().end()) {
            canon_ = it->second;
            return *canon_;
        }
    }
    std::set<std::string> seen;
    std::deque<LabeledGraph> frontier;
    std::string best = canonical_form(rep_);
    seen.insert(best);
    frontier.push_back(rep_);
    while (!frontier.empty()) {
        LabeledGraph g = std::move(frontier.front());
        frontier.pop_front();
        for (auto& child : og4_children(g)) {
            std::string key = canonical_form(child);
            if (!seen.insert(key).second)
                continue;
            if (seen.size() > cap_)
                throw Error(ErrorCode::OrbitLimit, "fourth-move orbit exceeds node cap");
            if (key < best)
                best = key;
            frontier.push_back(std::move(child));
        }
    }
    {
        std::lock_guard<std::mutex> lock(orbit_memo_mutex);
        for (const auto& key : seen)
            orbit_memo().emplace(key, best);
    }
    canon_ = std::move(best);
    return *canon_;
}

bool free_equal(const FreeFramedGraph& a, const FreeFramedGraph& b) {
    return a.canonical() == b.canonical();
}

std::pair<FreeFramedGraph, FreeFramedGraph> smooth(const FreeFramedGraph& f,
                                                   const std::string& v) {
    const LabeledGraph& h = f.representative();
    std::size_t iv = h.index_of(v);
    const std::size_t cap = f.orbit_cap();

    if (h.vertex(iv).framing == 0 && h.degree(iv) == 0) {
        // Isolated framing-0 vertex: delete it, or attach a fresh framing-0
        // pendant partner.
        std::string partner = v + "*";
        while (h.has_vertex(partner))
            partner += "*";
        LabeledGraph with_partner = h;
        with_partner.add_vertex(partner, 0, +1);
        with_partner.add_edge(v, partner);
        return {FreeFramedGraph(h.without_vertex(iv), cap),
                FreeFramedGraph(std::move(with_partner), cap)};
    }

    // Bring the graph to a representative where a fourth move applies at v.
    LabeledGraph h1 = h;
    if (h1.vertex(iv).framing == 0) {
        std::size_t partner = h1.vertex_count();
        for (std::size_t u : h1.neighbors(iv))
            if (h1.vertex(u).framing == 0) {
                partner = u;
                break;
            }
        if (partner == h1.vertex_count()) {
            // Every neighbor has framing 1; a fourth move there gives v
            // framing 1.
            std::size_t u = h1.neighbors(iv).front();
            h1 = free_og4p(h1, u);
        } else {
            LabeledGraph h2 = free_og4(h1, std::min(iv, partner), std::max(iv, partner));
            return {FreeFramedGraph(h1.without_vertex(iv), cap),
                    FreeFramedGraph(h2.without_vertex(iv), cap)};
        }
    }
    LabeledGraph h2 = free_og4p(h1, iv);
    return {FreeFramedGraph(h1.without_vertex(iv), cap),
            FreeFramedGraph(h2.without_vertex(iv), cap)};
}

void GraphSum::toggle(const FreeFramedGraph& g) {
    std::string key = g.canonical();
    auto it = terms_.find(key);
    if (it != terms_.end())
        terms_.erase(it);
    else
        terms_.emplace(std::move(key), g.representative());
}

bool GraphSum::contains(const FreeFramedGraph& g) const {
    return terms_.count(g.canonical()) != 0;
}

bool GraphSum::operator==(const GraphSum& other) const {
    if (terms_.size() != other.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first)
            return false;
    return true;
}

namespace {

// Parity of a vertex inside an intermediate smoothing, counting oriented
// vertices adjacent to it in the chosen adjacency source.
Parity multi_parity(const LabeledGraph& h, std::size_t iu,
                    const std::vector<bool>& oriented,
                    const LoopedGraph* chi_orig, MultiParityMode mode) {
    int count = 0;
    for (std::size_t t = 0; t < h.vertex_count(); ++t) {
        if (t == iu || !oriented[t])
            continue;
        bool adjacent = false;
        if (mode == MultiParityMode::SmoothedGraph) {
            adjacent = h.adjacent(iu, t);
        } else {
            const std::string &a = h.vertex(iu).id, &b = h.vertex(t).id;
            if (chi_orig->has_vertex(a) && chi_orig->has_vertex(b))
                adjacent = chi_orig->adjacent(chi_orig->index_of(a),
                                              chi_orig->index_of(b));
        }
        if (adjacent)
            ++count;
    }
    return count % 2 == 0 ? Parity::Even : Parity::Odd;
}

enum class StepFilter { All, Odd, Even };

GraphSum delta_iterate(const FreeFramedGraph& f, unsigned iterations,
                       StepFilter filter, MultiParityMode mode) {
    if (corank_ape(f.representative()) != 0)
        throw Error(ErrorCode::NotOneComponent,
                    "delta is defined on one-component free framed graphs");
    LoopedGraph chi_orig;
    if (filter != StepFilter::All)
        chi_orig = chi(f.representative());

    std::vector<LabeledGraph> terms = {f.representative()};
    for (unsigned step = 0; step < iterations; ++step) {
        std::vector<LabeledGraph> next;
        for (const LabeledGraph& h : terms) {
            std::vector<bool> oriented(h.vertex_count());
            for (std::size_t i = 0; i < h.vertex_count(); ++i)
                oriented[i] = is_oriented_vertex_index(h, i);
            for (std::size_t i = 0; i < h.vertex_count(); ++i) {
                if (!oriented[i])
                    continue;
                if (filter != StepFilter::All) {
                    Parity p = multi_parity(h, i, oriented, &chi_orig, mode);
                    if ((filter == StepFilter::Odd) != (p == Parity::Odd))
                        continue;
                }
                auto [s1, s2] = smooth(FreeFramedGraph(h, f.orbit_cap()),
                                       h.vertex(i).id);
                std::size_t c1 = corank_ape(s1.representative());
                std::size_t c2 = corank_ape(s2.representative());
                next.push_back(c1 > c2 ? s1.representative()
                                       : s2.representative());
            }
        }
        terms = std::move(next);
    }
    GraphSum out;
    for (const LabeledGraph& h : terms)
        out.toggle(FreeFramedGraph(h, f.orbit_cap()));
    return out;
}

bool free_og2_removable(const LabeledGraph& g, std::size_t i, std::size_t j) {
    if (g.vertex(i).framing != g.vertex(j).framing)
        return false;
    if ((g.vertex(i).framing == 0) == g.adjacent(i, j))
        return false;
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        if (k == i || k == j)
            continue;
        if (g.adjacent(i, k) != g.adjacent(j, k))
            return false;
    }
    return true;
}

bool has_pendant_zero_pair(const LabeledGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j) && g.degree(i) == 1 && g.degree(j) == 1 &&
                g.vertex(i).framing == 0 && g.vertex(j).framing == 0)
                return true;
    return false;
}

// Greedy second-move reduction across the fourth-move orbit; sets trivial
// when some orbit member exposes relation 2 (a framing-0 pendant pair).
LabeledGraph greedy_reduce(LabeledGraph g, bool& trivial,
                           std::size_t cap = 100000) {
    trivial = false;
    for (;;) {
        std::vector<LabeledGraph> orbit = og4_orbit(g, cap);
        for (const LabeledGraph& m : orbit)
            if (has_pendant_zero_pair(m)) {
                trivial = true;
                return m;
            }
        bool reduced = false;
        for (const LabeledGraph& m : orbit) {
            for (std::size_t i = 0; i < m.vertex_count() && !reduced; ++i)
                for (std::size_t j = i + 1; j < m.vertex_count() && !reduced; ++j)
                    if (free_og2_removable(m, i, j)) {
                        g = m.without_vertex(j).without_vertex(i);
                        reduced = true;
                    }
            if (reduced)
                break;
        }
        if (!reduced)
            return g;
    }
}

} // namespace

GraphSum delta(const FreeFramedGraph& f) {
    return delta_iterate(f, 1, StepFilter::All, MultiParityMode::ChiOfOriginal);
}

GraphSum delta_iter(const FreeFramedGraph& f, unsigned iterations) {
    return delta_iterate(f, iterations, StepFilter::All,
                         MultiParityMode::ChiOfOriginal);
}

GraphSum delta_odd(const FreeFramedGraph& f, unsigned iterations,
                   MultiParityMode mode) {
    return delta_iterate(f, iterations, StepFilter::Odd, mode);
}

GraphSum delta_even(const FreeFramedGraph& f, unsigned iterations,
                    MultiParityMode mode) {
    return delta_iterate(f, iterations, StepFilter::Even, mode);
}

GraphSum bracket_knot(const LabeledGraph& g) {
    if (component_count(g) != 1)
        throw Error(ErrorCode::NotOneComponent,
                    "the knot bracket needs a one-component graph");
    ParityTable parity = parity_knot_labeled(g);
    std::vector<std::string> even_ids;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (parity.at(g.vertex(i).id) == Parity::Even)
            even_ids.push_back(g.vertex(i).id);
    GraphSum out;
    FreeFramedGraph base{g};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << even_ids.size());
         ++mask) {
        FreeFramedGraph cur = base;
        for (std::size_t k = 0; k < even_ids.size(); ++k) {
            auto [s1, s2] = smooth(cur, even_ids[k]);
            cur = ((mask >> k) & 1u) ? s2 : s1;
        }
        if (corank_ape(cur.representative()) == 0)
            out.toggle(cur);
    }
    return out;
}

GraphSum bracket_link2(const LabeledGraph& h) {
    if (component_count(h) != 2)
        throw Error(ErrorCode::NotTwoComponents,
                    "the link bracket needs a two-component graph");
    std::vector<std::string> even_ids;
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        if (is_oriented_vertex_index(h, i))
            even_ids.push_back(h.vertex(i).id);
    GraphSum out;
    FreeFramedGraph base{h};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << even_ids.size());
         ++mask) {
        FreeFramedGraph cur = base;
        for (std::size_t k = 0; k < even_ids.size(); ++k) {
            auto [s1, s2] = smooth(cur, even_ids[k]);
            cur = ((mask >> k) & 1u) ? s2 : s1;
        }
        bool trivial = false;
        greedy_reduce(cur.representative(), trivial);
        if (!trivial)
            out.toggle(cur);
    }
    return out;
}

GraphSum reduce_sum(const GraphSum& s) {
    GraphSum out;
    for (const auto& [key, rep] : s.terms()) {
        bool trivial = false;
        LabeledGraph reduced = greedy_reduce(rep, trivial);
        if (!trivial)
            out.toggle(FreeFramedGraph(std::move(reduced)));
    }
    return out;
}

} // namespace graphlink
