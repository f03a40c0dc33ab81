#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "k4frac/bitset.hpp"
#include "k4frac/rational.hpp"

namespace k4frac {

using VertexSet = Bitset;

// Exact arithmetic over all 4/5/6-clique sweeps is desk-scale work; the cap
// keeps accidental huge inputs out.
inline constexpr int kMaxVertices = 4096;

// Dense simple graph with one neighbor bitset per vertex. Symmetric and
// irreflexive by construction; treat as immutable once populated — every
// operation on it is const and safe to share across threads.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
        if (n > kMaxVertices) throw std::invalid_argument("vertex count exceeds cap");
        adj_.assign(n_, Bitset(n_));
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        int best = n_;  // n_ >= 1, degree <= n_ - 1 < best
        for (int v = 0; v < n_; ++v) best = std::min(best, adj_[v].count());
        return best;
    }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].count();
        return twice / 2;
    }

    VertexSet full_vertex_set() const { return Bitset(n_, true); }

    bool is_clique(std::span<const int> vs) const {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            check_vertex(vs[i]);
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!has_edge(vs[i], vs[j])) return false;
        }
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_;
    std::vector<Bitset> adj_;
};

struct Edge {
    int u, v;  // canonical u < v

    static Edge make(int a, int b) {
        if (a == b) throw std::invalid_argument("degenerate edge");
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    bool operator==(const Edge&) const = default;
};

// N(S) = intersection of the neighborhoods of S; the whole vertex set for
// S empty (matching the N-hat(empty) = 1 convention).
inline VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
    if (s.size_bits() != g.vertex_count())
        throw std::invalid_argument("vertex set sized for a different graph");
    VertexSet acc = g.full_vertex_set();
    s.for_each([&](int v) { acc &= g.neighbors(v); });
    return acc;
}

inline VertexSet common_neighbors(const Graph& g, std::span<const int> vs) {
    VertexSet acc = g.full_vertex_set();
    for (int v : vs) acc &= g.neighbors(v);
    return acc;
}

// Common neighbor density |N(S)|/n, exact; 1 for S empty.
inline Rational density_hat(const Graph& g, const VertexSet& s) {
    return make_rational(common_neighbors(g, s).count(), g.vertex_count());
}

inline Rational density_hat(const Graph& g, std::span<const int> vs) {
    return make_rational(common_neighbors(g, vs).count(), g.vertex_count());
}

inline int min_degree(const Graph& g) { return g.min_degree(); }

// Degree deficiency 1 - delta(G)/n.
inline Rational degree_deficiency(const Graph& g) {
    return Rational(1) - make_rational(g.min_degree(), g.vertex_count());
}

}  // namespace k4frac
