#include "graphlink/invariants.hpp"

#include "graphlink/errors.hpp"
#include "graphlink/moves.hpp"
#include "graphlink/parity.hpp"

namespace graphlink {

namespace {

Gf2SymMatrix a_plus_e(const LabeledGraph& g) {
    return g.adjacency_matrix() + Gf2SymMatrix::identity(g.vertex_count());
}

Gf2SymMatrix principal_submatrix(const Gf2SymMatrix& m, std::uint64_t mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.size(); ++i)
        if ((mask >> i) & 1u)
            keep.push_back(i);
    Gf2SymMatrix out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i; j < keep.size(); ++j)
            out.set(i, j, m.at(keep[i], keep[j]));
    return out;
}

} // namespace

std::size_t component_count(const LabeledGraph& g) {
    return corank(a_plus_e(g)) + 1;
}

WritheResult writhe(const LabeledGraph& g) {
    Gf2SymMatrix base = a_plus_e(g);
    if (corank(base) != 0)
        throw Error(ErrorCode::NotAKnot, "writhe is defined only for one-component graphs");
    WritheResult out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        Gf2SymMatrix bi = base;
        bi.toggle(i, i);
        int w = (corank(bi) % 2 == 0 ? +1 : -1) * g.vertex(i).sign;
        out.per_vertex.push_back(w);
        out.total += w;
    }
    return out;
}

LaurentPoly kauffman_bracket(const LabeledGraph& g, std::size_t max_vertices) {
    const std::size_t n = g.vertex_count();
    if (n > max_vertices)
        throw Error(ErrorCode::SizeLimit, "graph too large for bracket expansion");
    Gf2SymMatrix adj = g.adjacency_matrix();
    LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    std::vector<LaurentPoly> d_pow(n + 1);
    d_pow[0] = LaurentPoly::one();
    for (std::size_t i = 1; i <= n; ++i)
        d_pow[i] = d_pow[i - 1] * d;
    LaurentPoly sum;
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        int alpha = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool in_state = (state >> i) & 1u;
            if (in_state == (g.vertex(i).sign < 0))
                ++alpha;
        }
        int beta = static_cast<int>(n) - alpha;
        std::size_t cr = corank(principal_submatrix(adj, state));
        sum = sum + LaurentPoly::monomial(1, alpha - beta) * d_pow[cr];
    }
    return sum;
}

Rational atom_genus(const LabeledGraph& g) {
    const std::size_t n = g.vertex_count();
    Gf2SymMatrix adj = g.adjacency_matrix();
    std::uint64_t a_state = 0, b_state = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (g.vertex(i).sign < 0)
            a_state |= std::uint64_t{1} << i;
        else
            b_state |= std::uint64_t{1} << i;
    }
    long long k = static_cast<long long>(corank(principal_submatrix(adj, a_state))) + 1;
    long long l = static_cast<long long>(corank(principal_submatrix(adj, b_state))) + 1;
    return Rational::make(2 - (k + l - static_cast<long long>(n)), 2);
}

bool is_alternating(const LabeledGraph& g) {
    return atom_genus(g) == Rational{0, 1};
}

bool is_nonsplit(const LabeledGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (g.degree(i) == 0)
            return false;
    return true;
}

bool is_oriented_vertex_index(const LabeledGraph& g, std::size_t i) {
    Gf2SymMatrix base = a_plus_e(g);
    std::size_t base_corank = corank(base);
    Gf2SymMatrix bi = base;
    bi.toggle(i, i);
    return base_corank <= corank(bi);
}

bool is_oriented_vertex(const LabeledGraph& g, const std::string& id) {
    return is_oriented_vertex_index(g, g.index_of(id));
}

std::string verdict_name(MinimalityCertificate::Verdict v) {
    switch (v) {
    case MinimalityCertificate::Verdict::MinimalByAlternating:
        return "by-alternating";
    case MinimalityCertificate::Verdict::MinimalByOddParity:
        return "by-odd-parity";
    case MinimalityCertificate::Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

std::string parity_evidence(const ParityTable& table) {
    std::string out;
    for (const auto& [id, p] : table) {
        if (!out.empty())
            out += ",";
        out += id + "=" + (p == Parity::Odd ? "odd" : "even");
    }
    return out;
}

bool all_odd(const ParityTable& table) {
    for (const auto& [id, p] : table)
        if (p != Parity::Odd)
            return false;
    return true;
}

} // namespace

MinimalityCertificate minimality_certificate(const LabeledGraph& g) {
    if (is_alternating(g) && is_nonsplit(g))
        return {MinimalityCertificate::Verdict::MinimalByAlternating,
                "genus=0,nonsplit"};
    std::size_t components = component_count(g);
    if (components == 1 || components == 2) {
        ParityTable table =
            components == 1 ? parity_knot_labeled(g) : parity_link2(g);
        if (all_odd(table) && !has_decreasing_second_move(g))
            return {MinimalityCertificate::Verdict::MinimalByOddParity,
                    parity_evidence(table)};
    }
    return {MinimalityCertificate::Verdict::Inconclusive, ""};
}

MinimalityCertificate minimality_certificate(const LoopedGraph& g) {
    ParityTable table = parity_knot(g);
    if (all_odd(table) && !has_decreasing_second_move(g))
        return {MinimalityCertificate::Verdict::MinimalByOddParity,
                parity_evidence(table)};
    return {MinimalityCertificate::Verdict::Inconclusive, ""};
}

} // namespace graphlink
