#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "graphlink/errors.hpp"
#include "graphlink/graph.hpp"

using namespace graphlink;

namespace {

LabeledGraph random_labeled(std::mt19937& rng, std::size_t n) {
    LabeledGraph g;
    for (std::size_t i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i), rng() % 2, rng() % 2 ? +1 : -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 2)
                g.set_edge(i, j, true);
    return g;
}

LabeledGraph permuted(const LabeledGraph& g, const std::vector<std::size_t>& perm,
                      const std::vector<std::string>& new_ids) {
    LabeledGraph out;
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        const auto& v = g.vertex(perm[k]);
        out.add_vertex(new_ids[k], v.framing, v.sign);
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(perm[i], perm[j]))
                out.set_edge(i, j, true);
    return out;
}

LabeledGraph triangle(const std::vector<std::string>& ids) {
    LabeledGraph g;
    for (const auto& id : ids)
        g.add_vertex(id, 0, +1);
    g.add_edge(ids[0], ids[1]);
    g.add_edge(ids[1], ids[2]);
    g.add_edge(ids[0], ids[2]);
    return g;
}

} // namespace

TEST_CASE("vertex and edge validation") {
    LabeledGraph g;
    g.add_vertex("a", 0, +1);
    CHECK_THROWS_AS(g.add_vertex("a", 0, +1), Error);
    CHECK_THROWS_AS(g.add_edge("a", "a"), Error);
    CHECK_THROWS_AS(g.index_of("missing"), Error);
    g.add_vertex("b", 1, -1);
    g.add_edge("a", "b");
    LabeledGraph before = g;
    g.add_edge("a", "b"); // simple graph: re-adding is a no-op
    CHECK(g == before);
    CHECK(g.adjacent(0, 1));
    CHECK(g.degree(0) == 1);
}

TEST_CASE("local complementation basics") {
    LabeledGraph path;
    path.add_vertex("a", 0, +1);
    path.add_vertex("v", 0, +1);
    path.add_vertex("b", 0, +1);
    path.add_edge("a", "v");
    path.add_edge("v", "b");
    LabeledGraph lc = path.local_complement("v");
    CHECK(lc.adjacent(0, 2)); // a-b toggled in
    CHECK(lc.adjacent(0, 1));
    CHECK(lc.adjacent(1, 2));

    LabeledGraph iso;
    iso.add_vertex("x", 0, +1);
    iso.add_vertex("y", 1, -1);
    CHECK(iso.local_complement("x") == iso);
}

TEST_CASE("local complementation and pivot are involutions (random)") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        LabeledGraph g = random_labeled(rng, 2 + rng() % 6);
        std::size_t v = rng() % g.vertex_count();
        CHECK(g.local_complement(g.vertex(v).id).local_complement(g.vertex(v).id) ==
              g);
        std::size_t u = rng() % g.vertex_count();
        if (u != v) {
            const std::string &iu = g.vertex(u).id, &iv = g.vertex(v).id;
            CHECK(g.pivot(iu, iv).pivot(iu, iv) == g);
        }
    }
}

TEST_CASE("pivot basics") {
    LabeledGraph two;
    two.add_vertex("u", 0, +1);
    two.add_vertex("v", 0, +1);
    CHECK(two.pivot("u", "v") == two);
    CHECK_THROWS_AS(two.pivot("u", "u"), Error);
}

TEST_CASE("pivot at adjacent pair is isomorphic to triple local complement") {
    std::mt19937 rng(12);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 100; ++trial) {
        LabeledGraph g = random_labeled(rng, 3 + rng() % 4);
        // The lemma concerns the underlying unlabeled graph: use uniform labels.
        for (auto& v : g.vertices()) {
            v.framing = 0;
            v.sign = +1;
        }
        std::size_t u = rng() % g.vertex_count();
        std::size_t v = rng() % g.vertex_count();
        if (u == v || !g.adjacent(u, v))
            continue;
        const std::string &su = g.vertex(u).id, &sv = g.vertex(v).id;
        LabeledGraph lhs = g.pivot(su, sv);
        LabeledGraph rhs =
            g.local_complement(su).local_complement(sv).local_complement(su);
        CHECK(isomorphic(lhs, rhs));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("induced subgraph") {
    LabeledGraph t = triangle({"a", "b", "c"});
    CHECK(t.induced_subgraph({"a", "b", "c"}) == t);
    CHECK(t.induced_subgraph({}).vertex_count() == 0);
    LabeledGraph sub = t.induced_subgraph({"a", "b"});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.adjacent(0, 1));
    CHECK_THROWS_AS(t.induced_subgraph({"zzz"}), Error);
}

TEST_CASE("adjacency matrix") {
    LabeledGraph g;
    g.add_vertex("a", 1, +1);
    CHECK(g.adjacency_matrix().at(0, 0));
    LabeledGraph h;
    h.add_vertex("a", 0, +1);
    h.add_vertex("b", 0, +1);
    h.add_edge("a", "b");
    Gf2SymMatrix m = h.adjacency_matrix();
    CHECK_FALSE(m.at(0, 0));
    CHECK(m.at(0, 1));
    CHECK(LabeledGraph{}.adjacency_matrix().size() == 0);
}

TEST_CASE("induced subgraph matrix is the principal submatrix") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        LabeledGraph g = random_labeled(rng, 2 + rng() % 6);
        std::vector<std::string> keep;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            if (rng() % 2) {
                keep.push_back(g.vertex(i).id);
                idx.push_back(i);
            }
        Gf2SymMatrix sub = g.induced_subgraph(keep).adjacency_matrix();
        Gf2SymMatrix full = g.adjacency_matrix();
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                CHECK(sub.at(i, j) == full.at(idx[i], idx[j]));
    }
}

TEST_CASE("canonical form basics") {
    LabeledGraph t1 = triangle({"a", "b", "c"});
    LabeledGraph t2 = triangle({"x", "z", "y"});
    CHECK(canonical_form(t1) == canonical_form(t2));
    CHECK(isomorphic(t1, t2));

    LabeledGraph path;
    path.add_vertex("a", 0, +1);
    path.add_vertex("b", 0, +1);
    path.add_vertex("c", 0, +1);
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    CHECK(canonical_form(t1) != canonical_form(path));

    LabeledGraph flipped = t1;
    flipped.vertices()[1].sign = -1;
    CHECK(canonical_form(t1) != canonical_form(flipped));
}

TEST_CASE("canonical form equals under random relabeling") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 7;
        LabeledGraph g = random_labeled(rng, n);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i)
            ids.push_back("w" + std::to_string(rng() % 1000) + "_" +
                          std::to_string(i));
        LabeledGraph h = permuted(g, perm, ids);
        CHECK(isomorphic(g, h));
    }
}

TEST_CASE("canonical form size limit") {
    LabeledGraph big;
    for (int i = 0; i < 17; ++i)
        big.add_vertex("v" + std::to_string(i), 0, +1);
    CHECK_THROWS_AS(canonical_form(big), Error);
}

TEST_CASE("looped graph model") {
    LoopedGraph g;
    g.add_vertex("a", true);
    g.add_vertex("b", false);
    g.add_edge("a", "b");
    CHECK(g.vertex(0).looped);
    CHECK(g.degree(0) == 1); // loops are flags, not edges
    LoopedGraph h = g;
    h.vertices()[1].looped = true;
    CHECK(canonical_form(g) != canonical_form(h));
    CHECK(g.local_complement("a") == g); // single neighbor: nothing to toggle
    CHECK(g.pivot("a", "b").pivot("a", "b") == g);
}
