#pragma once

#include <span>
#include <stdexcept>

#include "k4frac/cliques.hpp"
#include "k4frac/graph.hpp"

namespace k4frac {

// Value of an edge-gadget at one 4-clique; always one of 1/2, -1/6, 1/6, 0.
struct GadgetValue {
    Rational value;

    // numerator in sixths: 3, -1, 1 or 0
    static GadgetValue from_sixths(int s) { return GadgetValue{make_rational(s, 6)}; }
};

namespace detail {

// Core psi rule, no validation: k6_set is the 6-clique's vertex bitset,
// e its distinguished edge, t a 4-clique. Returns sixths.
inline int psi_sixths(const Bitset& k6_set, Edge e, std::span<const int> t) {
    int inside = 0;
    for (int v : t) {
        if (!k6_set.test(v)) return 0;  // T not inside K
        if (v == e.u || v == e.v) ++inside;
    }
    switch (inside) {
        case 0: return 3;   //  1/2: e disjoint from T
        case 1: return -1;  // -1/6: e touches T in one vertex
        default: return 1;  //  1/6: e is an edge of T
    }
}

inline Bitset vertex_bitset(const Graph& g, std::span<const int> vs) {
    Bitset b(g.vertex_count());
    for (int v : vs) b.set(v);
    return b;
}

inline void check_k6(const Graph& g, std::span<const int> k6) {
    if (k6.size() != 6 || !g.is_clique(k6))
        throw std::invalid_argument("not a 6-clique");
}

inline void check_edge_of(std::span<const int> k6, Edge e) {
    bool su = false, sv = false;
    for (int v : k6) {
        su |= (v == e.u);
        sv |= (v == e.v);
    }
    if (!su || !sv) throw std::invalid_argument("edge is not inside the 6-clique");
}

}  // namespace detail

// psi_{K,e}(T): 1/2 if T inside K avoiding e, -1/6 if e meets T in one
// vertex, 1/6 if e is an edge of T, 0 if T is not inside K.
inline GadgetValue psi(const Graph& g, std::span<const int> k6, Edge e,
                       std::span<const int> t) {
    detail::check_k6(g, k6);
    detail::check_edge_of(k6, e);
    if (t.size() != 4 || !g.is_clique(t))
        throw std::invalid_argument("not a 4-clique");
    return GadgetValue::from_sixths(detail::psi_sixths(detail::vertex_bitset(g, k6), e, t));
}

// s(f) = sum of psi_{K,e}(T) over the 4-cliques T containing f. Equals 1
// when f = e and 0 otherwise; computed literally so tests can assert that.
// Every psi value is a multiple of 1/6, so the sum accumulates in int64.
inline Rational gadget_edge_sum(const Graph& g, std::span<const int> k6, Edge e, Edge f) {
    detail::check_k6(g, k6);
    detail::check_edge_of(k6, e);
    if (!g.has_edge(f.u, f.v)) throw std::invalid_argument("f is not an edge of the graph");
    Bitset k6_set = detail::vertex_bitset(g, k6);
    // T must contain f, so T inside K forces f inside V(K); otherwise all terms vanish.
    long long sixths = 0;
    if (k6_set.test(f.u) && k6_set.test(f.v)) {
        const int fv[2] = {f.u, f.v};
        for_each_clique_containing(g, 4, fv, [&](std::span<const int> t) {
            sixths += detail::psi_sixths(k6_set, e, t);
        });
    }
    return make_rational(sixths, 6);
}

}  // namespace k4frac
