#pragma once

#include <cstdint>

#include "k4frac/programs.hpp"

namespace k4frac {

// splitmix64; fixed algorithm so sampled points are identical across
// platforms and thread counts (one independent stream per point index).
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in 0..m inclusive (m + 1 values); modulo bias is irrelevant for
    // test-point generation and keeps the draw sequence portable
    std::uint64_t below(std::uint64_t m) { return next() % (m + 1); }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
    SplitMix64 r{seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)) ^ (salt << 32)};
    r.next();
    return r.next();
}

// Draws on-domain points by walking the program's variable table in
// dependency order: every interval depends only on variables already set,
// so each draw lands inside its exact bounds by construction.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed, int grid = 1 << 20)
        : seed_(seed), grid_(grid) {}

    ScalarPoint scalar(ProgramId p, const Rational& d, std::uint64_t index) const {
        SplitMix64 rng{mix_seed(seed_, index, static_cast<std::uint64_t>(p))};
        ScalarPoint pt;
        for (const auto& v : detail::program_vars(p)) {
            const Rational lo = v.lo(pt, d), hi = v.hi(pt, d);
            pt.*(v.field) = draw(rng, lo, hi);
        }
        return pt;
    }

    // Random P1/P2 point with up to max_outer outer blocks and (P1) up to
    // max_inner inner blocks each; P2 points carry exactly one inner block.
    StructuredPoint structured(ProgramId p, const Rational& d, std::uint64_t index,
                               int max_outer = 3, int max_inner = 3) const {
        SplitMix64 rng{mix_seed(seed_, index, 0x517ec0ull + static_cast<std::uint64_t>(p))};
        const Rational one(1);
        StructuredPoint pt;
        pt.x = draw(rng, one - d, one);
        pt.e0 = draw(rng, pt.x - d, pt.x);
        pt.g0 = draw(rng, pt.e0 - d, pt.e0);
        pt.r0 = draw(rng, Rational(0), pt.g0);
        const int outer = static_cast<int>(rng.below(max_outer));
        for (int i = 0; i < outer; ++i) {
            OuterBlock ob;
            ob.yp = draw(rng, one - d, one);
            ob.e = draw(rng, pt.x + ob.yp - one, pt.x);
            ob.q0 = draw(rng, ob.e + pt.e0 - pt.x, pt.e0);
            ob.p0 = draw(rng, pt.g0 + ob.e - pt.x, pt.g0);
            ob.r = draw(rng, Rational(0), ob.p0);
            const int inner =
                p == ProgramId::p2 ? 1 : static_cast<int>(rng.below(max_inner));
            for (int j = 0; j < inner; ++j) {
                InnerBlock ib;
                ib.f = draw(rng, ob.yp - d, ob.yp);
                ib.q = draw(rng, ob.e + ib.f - ob.yp, ob.e);
                ib.p = draw(rng, ob.q0 + ib.f - ob.yp, ob.q0);
                ib.h = draw(rng, ob.p0 + ib.q - ob.e, ob.p0);
                ob.inner.push_back(std::move(ib));
            }
            pt.outer.push_back(std::move(ob));
        }
        return pt;
    }

private:
    Rational draw(SplitMix64& rng, const Rational& lo, const Rational& hi) const {
        const long k = static_cast<long>(rng.below(grid_));
        return lo + (hi - lo) * make_rational(k, grid_);
    }

    std::uint64_t seed_;
    int grid_;
};

}  // namespace k4frac
