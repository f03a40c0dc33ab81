#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <thread>
#include <vector>

#include "k4frac/cliques.hpp"
#include "k4frac/gadget.hpp"
#include "k4frac/graph.hpp"

namespace k4frac {

namespace detail {

inline void check_ordered_clique(const Graph& g, std::span<const int> k, int lo, int hi) {
    const int r = static_cast<int>(k.size());
    if (r < lo || r > hi) throw std::invalid_argument("ordered clique size out of range");
    if (!g.is_clique(k)) throw std::invalid_argument("vertices do not form a clique");
}

template <class S>
S abs_val(const S& v) { return v < S(0) ? S(-v) : v; }

}  // namespace detail

// W(v1..vr) = prod_{i=2..r} 1/|N(v1..vi)|, order-sensitive through the
// prefix chain. Rejects empty intermediate neighborhoods, which can only
// happen when delta(G) <= 4n/5.
inline Rational weight_ordered(const Graph& g, std::span<const int> k) {
    detail::check_ordered_clique(g, k, 2, 5);
    Bitset acc = g.neighbors(k[0]);
    long den = 1;
    for (std::size_t i = 1; i < k.size(); ++i) {
        acc &= g.neighbors(k[i]);
        const int size = acc.count();
        if (size == 0) throw EmptyNeighborhood("empty prefix neighborhood in ordered weight");
        den *= size;
    }
    return make_rational(1, den);
}

// n^{r-1} * W(K) = prod 1/N-hat(prefix)
inline Rational weight_scaled(const Graph& g, std::span<const int> k) {
    const unsigned r = static_cast<unsigned>(k.size());
    return rational_pow(Rational(g.vertex_count()), r - 1) * weight_ordered(g, k);
}

// W_G(O) for an ordered 4-clique O = (x1,x2,x3,x4), evaluated by the
// reorganized double sum over y in R, z in N(y) cap R with R = N(x1..x4).
// Per ordered pair (y,z) the fifteen ordered 6-cliques that contain O in
// order contribute
//   (1/2)[ 1/6 * (six W terms with {v1,v2} = {x1,x2})
//        - 1/6 * (eight W terms with exactly one of v1,v2 in {y,z})
//        + 1/2 * W(y,z,x1,x2,x3) ],
// where each W term is a product of reciprocal prefix-neighborhood sizes.
// O(|R|^2) per call; works in exact rationals or doubles.
template <class S = Rational>
S weight_ordered_k4(const Graph& g, std::span<const int> o) {
    detail::check_ordered_clique(g, o, 4, 4);
    const Bitset& n1 = g.neighbors(o[0]);
    Bitset a2b = n1;
    a2b &= g.neighbors(o[1]);
    Bitset a3b = a2b;
    a3b &= g.neighbors(o[2]);
    Bitset a4b = a3b;  // R
    a4b &= g.neighbors(o[3]);
    const long a2 = a2b.count(), a3 = a3b.count(), a4 = a4b.count();

    using detail::inv_product;
    S total = S(0);
    Bitset b1b, b2b, b3b, yzb;
    a4b.for_each([&](int y) {
        const Bitset& ny = g.neighbors(y);
        b1b = n1;  b1b &= ny;
        b2b = a2b; b2b &= ny;
        b3b = a3b; b3b &= ny;
        yzb = a4b; yzb &= ny;
        const long b1 = b1b.count(), b2 = b2b.count(), b3 = b3b.count(), b4 = yzb.count();
        yzb.for_each([&](int z) {
            const Bitset& nz = g.neighbors(z);
            const long g0 = ny.and_count(nz);   // |N(y,z)|
            const long f1 = b1b.and_count(nz);  // |N(x1,y,z)|
            const long c2 = b2b.and_count(nz);  // |N(x1,x2,y,z)|
            const long c3 = b3b.and_count(nz);  // |N(x1,x2,x3,y,z)|
            // v1,v2 = x1,x2 (gadget value 1/6)
            S pos = inv_product<S>(a2, a3, a4, b4)   // W(x1,x2,x3,x4,y)
                  + inv_product<S>(a2, a3, b3, b4)   // W(x1,x2,x3,y,x4)
                  + inv_product<S>(a2, a3, b3, c3)   // W(x1,x2,x3,y,z)
                  + inv_product<S>(a2, b2, b3, b4)   // W(x1,x2,y,x3,x4)
                  + inv_product<S>(a2, b2, b3, c3)   // W(x1,x2,y,x3,z)
                  + inv_product<S>(a2, b2, c2, c3);  // W(x1,x2,y,z,x3)
            // one of v1,v2 in {y,z} (gadget value -1/6); the (y,x1,...)
            // arrangements repeat the same prefix sets, hence the factor 2
            S neg = inv_product<S>(b1, b2, b3, b4)   // W(x1,y,x2,x3,x4)
                  + inv_product<S>(b1, b2, b3, c3)   // W(x1,y,x2,x3,z)
                  + inv_product<S>(b1, b2, c2, c3)   // W(x1,y,x2,z,x3)
                  + inv_product<S>(b1, f1, c2, c3);  // W(x1,y,z,x2,x3)
            // v1,v2 = y,z (gadget value 1/2)
            S out = inv_product<S>(g0, f1, c2, c3);  // W(y,z,x1,x2,x3)
            total += pos / S(12) - neg / S(6) + out / S(4);
        });
    });
    return total;
}

namespace detail {

inline bool contains_in_order(std::span<const int> seq, std::span<const int> sub) {
    std::size_t j = 0;
    for (int v : seq) {
        if (j < sub.size() && v == sub[j]) ++j;
    }
    return j == sub.size();
}

}  // namespace detail

// Definitional W_G(O): walk all 720 orderings of each 6-clique containing
// V(O), keep those containing O as an ordered subsequence, and accumulate
// W(v1..v5) * psi. Test-grade reference; quadratic term count per pair.
inline Rational weight_ordered_k4_ref(const Graph& g, std::span<const int> o) {
    detail::check_ordered_clique(g, o, 4, 4);
    Bitset r = common_neighbors(g, o);
    Bitset k6_set(g.vertex_count());
    Rational acc(0);
    std::vector<int> verts;
    r.for_each([&](int u) {
        r.for_each([&](int w) {
            if (w <= u || !g.has_edge(u, w)) return;
            verts.assign(o.begin(), o.end());
            verts.push_back(u);
            verts.push_back(w);
            std::sort(verts.begin(), verts.end());
            k6_set = detail::vertex_bitset(g, verts);
            do {
                if (!detail::contains_in_order(verts, o)) continue;
                const int sixths =
                    detail::psi_sixths(k6_set, Edge::make(verts[0], verts[1]), o);
                if (sixths != 0)
                    acc += weight_ordered(g, std::span<const int>(verts).first(5)) * sixths;
            } while (std::next_permutation(verts.begin(), verts.end()));
        });
    });
    return acc / 12;  // 1/2 from the definition, 1/6 from the sixths scale
}

// W_G(T) as the sum of W_G(O) over the 24 orderings of T.
template <class S = Rational>
S weight_k4(const Graph& g, std::span<const int> t) {
    detail::check_ordered_clique(g, t, 4, 4);
    std::array<int, 4> p{t[0], t[1], t[2], t[3]};
    std::sort(p.begin(), p.end());
    S total = S(0);
    do {
        total += weight_ordered_k4<S>(g, p);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Reference W_G(T): ordered 6-clique summation restricted to the 6-cliques
// whose vertex set contains T (all other orderings contribute psi = 0).
inline Rational weight_k4_ref(const Graph& g, std::span<const int> t) {
    detail::check_ordered_clique(g, t, 4, 4);
    Bitset r = common_neighbors(g, t);
    Bitset k6_set(g.vertex_count());
    Rational acc(0);
    std::vector<int> verts;
    r.for_each([&](int u) {
        r.for_each([&](int w) {
            if (w <= u || !g.has_edge(u, w)) return;
            verts.assign(t.begin(), t.end());
            verts.push_back(u);
            verts.push_back(w);
            std::sort(verts.begin(), verts.end());
            k6_set = detail::vertex_bitset(g, verts);
            do {
                const int sixths =
                    detail::psi_sixths(k6_set, Edge::make(verts[0], verts[1]), t);
                if (sixths != 0)
                    acc += weight_ordered(g, std::span<const int>(verts).first(5)) * sixths;
            } while (std::next_permutation(verts.begin(), verts.end()));
        });
    });
    return acc / 12;
}

// W'_G(O) = 1 - 12 W_G(O) / W(x1,x2,x3); W'_G(O) <= 1 certifies W_G(O) >= 0.
inline Rational w_prime(const Graph& g, std::span<const int> o) {
    detail::check_ordered_clique(g, o, 4, 4);
    const Rational w3 = weight_ordered(g, o.first(3));
    return Rational(1) - detail::div_checked(Rational(12) * weight_ordered_k4<Rational>(g, o), w3);
}

// W'_G(O) by the collapsed double sum: the z-independent 6-tuple terms are
// telescoped away, leaving three 4-prefix terms per y and seven 5-prefix
// terms per (y,z), all divided by W(x1,x2,x3). Must agree exactly with
// w_prime; exercising both forms is the point.
inline Rational w_prime_reorganized(const Graph& g, std::span<const int> o) {
    detail::check_ordered_clique(g, o, 4, 4);
    const Bitset& n1 = g.neighbors(o[0]);
    Bitset a2b = n1;
    a2b &= g.neighbors(o[1]);
    Bitset a3b = a2b;
    a3b &= g.neighbors(o[2]);
    Bitset a4b = a3b;
    a4b &= g.neighbors(o[3]);
    const long a2 = a2b.count(), a3 = a3b.count();
    if (a2 == 0 || a3 == 0) throw EmptyNeighborhood("empty prefix neighborhood");

    using detail::inv_product;
    Rational acc(0);
    Bitset b1b, b2b, b3b, yzb;
    a4b.for_each([&](int y) {
        const Bitset& ny = g.neighbors(y);
        b1b = n1;  b1b &= ny;
        b2b = a2b; b2b &= ny;
        b3b = a3b; b3b &= ny;
        yzb = a4b; yzb &= ny;
        const long b1 = b1b.count(), b2 = b2b.count(), b3 = b3b.count();
        if (b1 == 0 || b2 == 0 || b3 == 0)
            throw EmptyNeighborhood("empty prefix neighborhood");
        acc += make_rational(2, b1 * b2 * b3)    // 2 W(x1,y,x2,x3)
             - make_rational(1, a2 * a3 * b3)    //   W(x1,x2,x3,y)
             - make_rational(1, a2 * b2 * b3);   //   W(x1,x2,y,x3)
        yzb.for_each([&](int z) {
            const Bitset& nz = g.neighbors(z);
            const long g0 = ny.and_count(nz);
            const long f1 = b1b.and_count(nz);
            const long c2 = b2b.and_count(nz);
            const long c3 = b3b.and_count(nz);
            acc += Rational(2) * inv_product<Rational>(b1, b2, b3, c3)   // 2 W(x1,y,x2,x3,z)
                 + Rational(2) * inv_product<Rational>(b1, b2, c2, c3)   // 2 W(x1,y,x2,z,x3)
                 + Rational(2) * inv_product<Rational>(b1, f1, c2, c3)   // 2 W(x1,y,z,x2,x3)
                 - inv_product<Rational>(a2, a3, b3, c3)                 //   W(x1,x2,x3,y,z)
                 - inv_product<Rational>(a2, b2, b3, c3)                 //   W(x1,x2,y,x3,z)
                 - inv_product<Rational>(a2, b2, c2, c3)                 //   W(x1,x2,y,z,x3)
                 - Rational(3) * inv_product<Rational>(g0, f1, c2, c3);  // 3 W(y,z,x1,x2,x3)
        });
    });
    return acc * Rational(a2 * a3);  // divide by W(x1,x2,x3) = 1/(a2 a3)
}

enum class DecompStatus { valid, degree_too_low, negative_weight };

template <class S>
struct K4Entry {
    std::array<int, 4> t;
    S weight;
};

// Outcome of a full-graph weighting: the K4 -> weight association keyed by
// exactly the 4-cliques of G (ascending), per-edge sum deviation, and the
// validity verdict. A negative weight is a finding, not an exception.
template <class S>
struct DecompositionResult {
    DecompStatus status = DecompStatus::degree_too_low;
    int n = 0;
    int min_degree = 0;
    std::vector<K4Entry<S>> entries;
    S min_weight = S(0);
    S max_edge_deviation = S(0);
    bool edge_sums_ok = false;
    std::optional<K4Entry<S>> offender;

    bool valid() const { return status == DecompStatus::valid; }
};

namespace detail {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class S>
DecompositionResult<S> decompose(const Graph& g, int threads, const S& neg_tol,
                                 const S& dev_tol) {
    DecompositionResult<S> res;
    res.n = g.vertex_count();
    res.min_degree = g.min_degree();
    if (5LL * res.min_degree <= 4LL * res.n) {
        res.status = DecompStatus::degree_too_low;
        return res;
    }

    std::vector<std::array<int, 4>> ts;
    for_each_clique(g, 4, [&](std::span<const int> c) {
        ts.push_back({c[0], c[1], c[2], c[3]});
    });
    res.entries.resize(ts.size());

    const int nw = std::max(1, std::min(detail::resolve_threads(threads),
                                        static_cast<int>(ts.size() ? ts.size() : 1)));
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            res.entries[i] = K4Entry<S>{ts[i], weight_k4<S>(g, ts[i])};
    };
    if (nw <= 1) {
        work(0, ts.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (ts.size() + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(ts.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // per-edge sums; reduction order is the fixed entry order, so the result
    // does not depend on the thread count
    const int n = res.n;
    std::vector<S> edge_sum(static_cast<std::size_t>(n) * n, S(0));
    bool first = true;
    for (const auto& e : res.entries) {
        if (first || e.weight < res.min_weight) res.min_weight = e.weight;
        first = false;
        if (!res.offender && e.weight < -neg_tol)
            res.offender = e;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                edge_sum[static_cast<std::size_t>(e.t[i]) * n + e.t[j]] += e.weight;
    }
    S max_dev = S(0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            S dev = abs_val<S>(edge_sum[static_cast<std::size_t>(u) * n + v] - S(1));
            if (dev > max_dev) max_dev = dev;
        }
    res.max_edge_deviation = max_dev;
    res.edge_sums_ok = !(max_dev > dev_tol);
    res.status = res.offender ? DecompStatus::negative_weight : DecompStatus::valid;
    return res;
}

}  // namespace detail

// Exact full-graph sweep: requires delta(G) > 4n/5, reports every W_G(T),
// the per-edge deviation (identically zero for such graphs) and the minimum
// weight. Valid iff every weight is >= 0.
inline DecompositionResult<Rational> fractional_k4_decomposition(const Graph& g,
                                                                 int threads = 1) {
    return detail::decompose<Rational>(g, threads, Rational(0), Rational(0));
}

// Double-precision sweep for larger graphs; tolerance bounds both the
// negativity check and the admissible edge-sum deviation.
inline DecompositionResult<double> fractional_k4_decomposition_float(
    const Graph& g, int threads = 1, double tol = 1e-9) {
    return detail::decompose<double>(g, threads, tol, tol);
}

// One record per K4 ("u v w x num/den") under a header carrying the graph
// and verdict summary.
inline void write_weight_map(std::ostream& os, const DecompositionResult<Rational>& r) {
    os << "n=" << r.n << " min-degree=" << r.min_degree
       << " min-weight=" << to_string(r.min_weight)
       << " max-edge-sum-deviation=" << to_string(r.max_edge_deviation) << '\n';
    for (const auto& e : r.entries)
        os << e.t[0] << ' ' << e.t[1] << ' ' << e.t[2] << ' ' << e.t[3] << ' '
           << to_string(e.weight) << '\n';
}

}  // namespace k4frac
