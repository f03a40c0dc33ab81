#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "k4frac/graph.hpp"

namespace k4frac {

// An r-clique as a tuple of distinct, mutually adjacent vertex ids.
// Enumeration yields canonical (ascending) tuples; ordered variants are
// permutations produced by the weight layer.
using OrderedClique = std::vector<int>;

inline constexpr int kMinCliqueSize = 2;
inline constexpr int kMaxCliqueSize = 6;

namespace detail {

inline void check_clique_size(int r) {
    if (r < kMinCliqueSize || r > kMaxCliqueSize)
        throw std::invalid_argument("clique size must be in 2..6");
}

// Depth-first extension with per-depth candidate sets. Candidates at depth k
// are common neighbors of the prefix restricted to ids greater than the last
// prefix vertex, giving lexicographic order on ascending tuples.
template <class F>
class CliqueEnumerator {
public:
    CliqueEnumerator(const Graph& g, int r, F& f) : g_(g), r_(r), f_(f) {
        prefix_.reserve(r);
        scratch_.assign(r, Bitset(g.vertex_count()));
    }

    void run_all() {
        const int n = g_.vertex_count();
        for (int v = 0; v < n; ++v) {
            prefix_.assign(1, v);
            scratch_[0] = g_.neighbors(v);
            extend(1, v);
        }
    }

    // Extensions of a fixed base set; emitted tuples are base + extension,
    // re-sorted to canonical form by the caller when needed.
    void run_from(std::span<const int> base, const Bitset& candidates) {
        prefix_.assign(base.begin(), base.end());
        const int depth = static_cast<int>(base.size());
        if (depth == r_) {
            f_(std::span<const int>(prefix_));
            return;
        }
        scratch_[depth - 1] = candidates;
        extend(depth, -1);
    }

private:
    void extend(int depth, int min_vertex) {
        const Bitset& cand = scratch_[depth - 1];
        if (depth == r_ - 1) {
            cand.for_each([&](int v) {
                if (v <= min_vertex) return;
                prefix_.push_back(v);
                f_(std::span<const int>(prefix_));
                prefix_.pop_back();
            });
            return;
        }
        cand.for_each([&](int v) {
            if (v <= min_vertex) return;
            scratch_[depth] = cand;
            scratch_[depth] &= g_.neighbors(v);
            prefix_.push_back(v);
            extend(depth + 1, v);
            prefix_.pop_back();
        });
    }

    const Graph& g_;
    int r_;
    F& f_;
    std::vector<int> prefix_;
    std::vector<Bitset> scratch_;
};

}  // namespace detail

// Visits every r-clique exactly once as an ascending id tuple, in
// lexicographic order.
template <class F>
void for_each_clique(const Graph& g, int r, F&& f) {
    detail::check_clique_size(r);
    detail::CliqueEnumerator<F> e(g, r, f);
    e.run_all();
}

inline std::vector<OrderedClique> enumerate_cliques(const Graph& g, int r) {
    std::vector<OrderedClique> out;
    for_each_clique(g, r, [&](std::span<const int> c) {
        out.emplace_back(c.begin(), c.end());
    });
    return out;
}

inline long long count_cliques(const Graph& g, int r) {
    long long c = 0;
    for_each_clique(g, r, [&](std::span<const int>) { ++c; });
    return c;
}

// Visits the r-cliques whose vertex set contains s. s itself must induce a
// clique. Tuples come out ascending; order is deterministic (lexicographic
// on the extension).
template <class F>
void for_each_clique_containing(const Graph& g, int r, std::span<const int> s, F&& f) {
    detail::check_clique_size(r);
    if (static_cast<int>(s.size()) > r)
        throw std::invalid_argument("base set larger than requested clique size");
    if (!g.is_clique(s)) throw std::invalid_argument("base set is not a clique");
    std::vector<int> base(s.begin(), s.end());
    std::sort(base.begin(), base.end());
    if (std::adjacent_find(base.begin(), base.end()) != base.end())
        throw std::invalid_argument("base set has repeated vertices");
    if (base.empty()) {
        for_each_clique(g, r, std::forward<F>(f));
        return;
    }

    Bitset cand = common_neighbors(g, std::span<const int>(base));
    std::vector<int> sorted;
    auto emit = [&](std::span<const int> c) {
        sorted.assign(c.begin(), c.end());
        std::sort(sorted.begin(), sorted.end());
        f(std::span<const int>(sorted));
    };
    detail::CliqueEnumerator<decltype(emit)> e(g, r, emit);
    e.run_from(base, cand);
}

inline std::vector<OrderedClique> cliques_containing(const Graph& g, int r,
                                                     std::span<const int> s) {
    std::vector<OrderedClique> out;
    for_each_clique_containing(g, r, s, [&](std::span<const int> c) {
        out.emplace_back(c.begin(), c.end());
    });
    return out;
}

}  // namespace k4frac
