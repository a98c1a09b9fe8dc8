#ifndef GRAPHLINK_INVARIANTS_HPP
#define GRAPHLINK_INVARIANTS_HPP

#include <numeric>
#include <string>
#include <vector>

#include "graphlink/graph.hpp"
#include "graphlink/laurent.hpp"

namespace graphlink {

/// Exact rational with small numerator/denominator; atom genus can be a
/// half-integer on non-realizable graphs.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long n, long long d) {
        long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0)
            g = 1;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return {n / g, d / g};
    }
    bool operator==(const Rational&) const = default;
    std::string to_string() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

// corank(A(G)+E) + 1.
std::size_t component_count(const LabeledGraph& g);

struct WritheResult {
    std::vector<int> per_vertex; // +1/-1 in declared vertex order
    int total = 0;
};

// Defined only on one-component graphs; throws Error(NotAKnot) otherwise.
WritheResult writhe(const LabeledGraph& g);

/// State sum over all vertex subsets: a^(alpha-beta) * (-a^2-a^-2)^corank.
LaurentPoly kauffman_bracket(const LabeledGraph& g, std::size_t max_vertices = 24);

// 1 - (k + l - n)/2 from the A-state and B-state circle counts.
Rational atom_genus(const LabeledGraph& g);

bool is_alternating(const LabeledGraph& g);
bool is_nonsplit(const LabeledGraph& g);

// corank(A(G)+E) <= corank(B_i(G)) for the vertex with the given id.
bool is_oriented_vertex(const LabeledGraph& g, const std::string& id);
bool is_oriented_vertex_index(const LabeledGraph& g, std::size_t i);

struct MinimalityCertificate {
    enum class Verdict { MinimalByAlternating, MinimalByOddParity, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::string evidence;
};

MinimalityCertificate minimality_certificate(const LabeledGraph& g);
MinimalityCertificate minimality_certificate(const LoopedGraph& g);

std::string verdict_name(MinimalityCertificate::Verdict v);

} // namespace graphlink

#endif
