#include "graphlink/chi.hpp"

#include "graphlink/errors.hpp"
#include "graphlink/invariants.hpp"

namespace graphlink {

LoopedGraph chi(const LabeledGraph& g) {
    const std::size_t n = g.vertex_count();
    Gf2SymMatrix m = g.adjacency_matrix() + Gf2SymMatrix::identity(n);
    if (corank(m) != 0)
        throw Error(ErrorCode::NotAKnot, "chi is defined only for one-component graphs");
    Gf2SymMatrix inv = inverse(m);
    WritheResult w = writhe(g);
    LoopedGraph out;
    for (std::size_t i = 0; i < n; ++i)
        out.add_vertex(g.vertex(i).id, w.per_vertex[i] < 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (inv.at(i, j))
                out.add_edge(g.vertex(i).id, g.vertex(j).id);
    return out;
}

LabeledGraph chi_inverse(const LoopedGraph& l) {
    const std::size_t n = l.vertex_count();
    Gf2SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (l.adjacent(i, j))
                a.set(i, j, true);
    a = nondegenerate_completion(a);
    Gf2SymMatrix c = inverse(a) + Gf2SymMatrix::identity(n);
    LabeledGraph out;
    for (std::size_t i = 0; i < n; ++i) {
        int w = l.vertex(i).looped ? -1 : +1;
        int sign = w * (1 - 2 * (a.at(i, i) ? 1 : 0));
        out.add_vertex(l.vertex(i).id, c.at(i, i) ? 1 : 0, sign);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (c.at(i, j))
                out.add_edge(l.vertex(i).id, l.vertex(j).id);
    return out;
}

} // namespace graphlink
