#pragma once

#include <cctype>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k4frac/rational.hpp"

namespace k4frac {

// The reduction chain P1 .. P12 plus the closed-form bound W13.
enum class ProgramId {
    p1, p2, p3, p4, p5, p6, p7, p8, p9, p10, p11, p12, w13
};

inline const char* to_string(ProgramId p) {
    switch (p) {
        case ProgramId::p1: return "P1";
        case ProgramId::p2: return "P2";
        case ProgramId::p3: return "P3";
        case ProgramId::p4: return "P4";
        case ProgramId::p5: return "P5";
        case ProgramId::p6: return "P6";
        case ProgramId::p7: return "P7";
        case ProgramId::p8: return "P8";
        case ProgramId::p9: return "P9";
        case ProgramId::p10: return "P10";
        case ProgramId::p11: return "P11";
        case ProgramId::p12: return "P12";
        case ProgramId::w13: return "W13";
    }
    return "?";
}

inline std::optional<ProgramId> parse_program(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (ProgramId p : {ProgramId::p1, ProgramId::p2, ProgramId::p3, ProgramId::p4,
                        ProgramId::p5, ProgramId::p6, ProgramId::p7, ProgramId::p8,
                        ProgramId::p9, ProgramId::p10, ProgramId::p11, ProgramId::p12,
                        ProgramId::w13})
        if (s == to_string(p)) return p;
    return std::nullopt;
}

// Named assignment to the scalar programs P3..P12. Fields outside a
// program's variable set are ignored by its objective and domain table.
// yp is the paper-style y'; a, b are the P9..P12 coordinates.
struct ScalarPoint {
    Rational x, yp, e0, e, f, g0, q0, q, p0, p, h, r0, r, a, b;
};

// One inner (z-indexed) block of a P1 point.
struct InnerBlock {
    Rational f, q, p, h;
};

// One outer (y-indexed) block: its scalars, the inner family, and the
// density r_i (equal to R_i/n on graph-derived points).
struct OuterBlock {
    Rational yp, e, q0, p0, r;
    std::vector<InnerBlock> inner;
};

// Point of P1/P2. Block counts are structural (R0 = outer.size(),
// R_i = outer[i].inner.size()); the densities r0 and outer[i].r carry the
// 1/n normalization so the evaluator never needs n itself.
struct StructuredPoint {
    Rational x, e0, g0, r0;
    std::vector<OuterBlock> outer;
};

struct DomainViolation {
    std::string var;
    bool upper = false;  // which bound was violated
    Rational bound;
    Rational value;

    std::string describe() const {
        return var + (upper ? " > " : " < ") + k4frac::to_string(bound) +
               " (value " + k4frac::to_string(value) + ")";
    }
};

// max(v, 0) = (v + |v|)/2
inline Rational ramp(const Rational& v) { return v > 0 ? v : Rational(0); }
inline double ramp(double v) { return v > 0 ? v : 0.0; }

namespace detail {

// Interval table for the scalar programs; each bound depends only on
// earlier variables, so one table drives both exact domain checking and
// feasible-by-construction sampling.
struct VarSpec {
    const char* name;
    Rational ScalarPoint::*field;
    Rational (*lo)(const ScalarPoint&, const Rational&);
    Rational (*hi)(const ScalarPoint&, const Rational&);
};

inline const std::vector<VarSpec>& program_vars(ProgramId p) {
    using P = const ScalarPoint&;
    using D = const Rational&;
    static const VarSpec x{"x", &ScalarPoint::x,
                           [](P, D d) -> Rational { return Rational(1) - d; },
                           [](P, D) -> Rational { return Rational(1); }};
    static const VarSpec yp{"y'", &ScalarPoint::yp,
                            [](P, D d) -> Rational { return Rational(1) - d; },
                            [](P, D) -> Rational { return Rational(1); }};
    static const VarSpec e0{"e0", &ScalarPoint::e0,
                            [](P pt, D d) -> Rational { return pt.x - d; },
                            [](P pt, D) -> Rational { return pt.x; }};
    static const VarSpec e{"e", &ScalarPoint::e,
                           [](P pt, D) -> Rational { return pt.x + pt.yp - 1; },
                           [](P pt, D) -> Rational { return pt.x; }};
    static const VarSpec f{"f", &ScalarPoint::f,
                           [](P pt, D d) -> Rational { return pt.yp - d; },
                           [](P pt, D) -> Rational { return pt.yp; }};
    static const VarSpec g0{"g0", &ScalarPoint::g0,
                            [](P pt, D d) -> Rational { return pt.e0 - d; },
                            [](P pt, D) -> Rational { return pt.e0; }};
    static const VarSpec q0{"q0", &ScalarPoint::q0,
                            [](P pt, D) -> Rational { return pt.e + pt.e0 - pt.x; },
                            [](P pt, D) -> Rational { return pt.e0; }};
    static const VarSpec q{"q", &ScalarPoint::q,
                           [](P pt, D) -> Rational { return pt.e + pt.f - pt.yp; },
                           [](P pt, D) -> Rational { return pt.e; }};
    static const VarSpec p0{"p0", &ScalarPoint::p0,
                            [](P pt, D) -> Rational { return pt.g0 + pt.e - pt.x; },
                            [](P pt, D) -> Rational { return pt.g0; }};
    static const VarSpec pp{"p", &ScalarPoint::p,
                            [](P pt, D) -> Rational { return pt.q0 + pt.f - pt.yp; },
                            [](P pt, D) -> Rational { return pt.q0; }};
    static const VarSpec h{"h", &ScalarPoint::h,
                           [](P pt, D) -> Rational { return pt.p0 + pt.q - pt.e; },
                           [](P pt, D) -> Rational { return pt.p0; }};
    static const VarSpec r0{"r0", &ScalarPoint::r0,
                            [](P, D) -> Rational { return Rational(0); },
                            [](P pt, D) -> Rational { return pt.g0; }};
    static const VarSpec r{"r", &ScalarPoint::r,
                           [](P, D) -> Rational { return Rational(0); },
                           [](P pt, D) -> Rational { return pt.p0; }};
    static const VarSpec a{"a", &ScalarPoint::a,
                           [](P, D) -> Rational { return Rational(0); },
                           [](P, D d) -> Rational { return d; }};
    static const VarSpec b{"b", &ScalarPoint::b,
                           [](P, D) -> Rational { return Rational(0); },
                           [](P, D d) -> Rational { return d; }};

    static const std::vector<VarSpec> full{x, yp, e0, e, f, g0, q0, q, p0, pp, h, r0, r};
    static const std::vector<VarSpec> v5{x, yp, e0, e, f, g0, q0, q, p0};
    static const std::vector<VarSpec> v6{x, yp, e0, e, f, g0, q};
    static const std::vector<VarSpec> v7{x, yp, e0, e, f, g0};
    static const std::vector<VarSpec> v8{x, yp, e0, e, f};
    static const std::vector<VarSpec> v9{x, yp, a, b};
    static const std::vector<VarSpec> v10{x, a, b};
    static const std::vector<VarSpec> v11{a, b};
    static const std::vector<VarSpec> v12{a};
    static const std::vector<VarSpec> none{};

    switch (p) {
        case ProgramId::p3:
        case ProgramId::p4: return full;
        case ProgramId::p5: return v5;
        case ProgramId::p6: return v6;
        case ProgramId::p7: return v7;
        case ProgramId::p8: return v8;
        case ProgramId::p9: return v9;
        case ProgramId::p10: return v10;
        case ProgramId::p11: return v11;
        case ProgramId::p12: return v12;
        default: return none;
    }
}

}  // namespace detail

// Exact interval check of every constraint of the cited program.
// Violations are data, not errors.
inline std::vector<DomainViolation> domain_check(ProgramId p, const ScalarPoint& pt,
                                                 const Rational& d) {
    std::vector<DomainViolation> out;
    for (const auto& v : detail::program_vars(p)) {
        const Rational& val = pt.*(v.field);
        const Rational lo = v.lo(pt, d), hi = v.hi(pt, d);
        if (val < lo) out.push_back({v.name, false, lo, val});
        if (val > hi) out.push_back({v.name, true, hi, val});
    }
    return out;
}

inline std::vector<DomainViolation> domain_check(ProgramId p, const StructuredPoint& pt,
                                                 const Rational& d) {
    if (p != ProgramId::p1 && p != ProgramId::p2)
        throw std::invalid_argument("structured points only belong to P1/P2");
    std::vector<DomainViolation> out;
    auto bound = [&](const std::string& name, const Rational& val, const Rational& lo,
                     const Rational& hi) {
        if (val < lo) out.push_back({name, false, lo, val});
        if (val > hi) out.push_back({name, true, hi, val});
    };
    const Rational one(1);
    bound("x", pt.x, one - d, one);
    bound("e0", pt.e0, pt.x - d, pt.x);
    bound("g0", pt.g0, pt.e0 - d, pt.e0);
    bound("r0", pt.r0, Rational(0), pt.g0);
    for (std::size_t i = 0; i < pt.outer.size(); ++i) {
        const auto& ob = pt.outer[i];
        const std::string si = "[" + std::to_string(i) + "]";
        bound("y'" + si, ob.yp, one - d, one);
        bound("e" + si, ob.e, pt.x + ob.yp - one, pt.x);
        bound("q0" + si, ob.q0, ob.e + pt.e0 - pt.x, pt.e0);
        bound("p0" + si, ob.p0, pt.g0 + ob.e - pt.x, pt.g0);
        bound("r" + si, ob.r, Rational(0), ob.p0);
        if (p == ProgramId::p2 && ob.inner.size() != 1)
            out.push_back({"inner-count" + si, true, Rational(1),
                           Rational(static_cast<long>(ob.inner.size()))});
        for (std::size_t j = 0; j < ob.inner.size(); ++j) {
            const auto& ib = ob.inner[j];
            const std::string sij = si + "[" + std::to_string(j) + "]";
            bound("f" + sij, ib.f, ob.yp - d, ob.yp);
            bound("q" + sij, ib.q, ob.e + ib.f - ob.yp, ob.e);
            bound("p" + sij, ib.p, ob.q0 + ib.f - ob.yp, ob.q0);
            bound("h" + sij, ib.h, ob.p0 + ib.q - ob.e, ob.p0);
        }
    }
    return out;
}

namespace detail {

// Scalar bag shared by the exact and floating evaluators.
template <class S>
struct Vars {
    S x{}, yp{}, e0{}, e{}, f{}, g0{}, q0{}, q{}, p0{}, p{}, h{}, r0{}, r{}, a{}, b{};
};

inline Vars<Rational> to_vars(const ScalarPoint& pt) {
    return {pt.x, pt.yp, pt.e0, pt.e, pt.f, pt.g0, pt.q0, pt.q,
            pt.p0, pt.p, pt.h, pt.r0, pt.r, pt.a, pt.b};
}

template <class S>
S obj_p3(const Vars<S>& v, const S&) {
    const S one(1);
    const S b1 = div_checked(S(2), S(v.e * v.q0)) - div_checked(one, S(v.e0 * v.g0)) -
                 div_checked(one, S(v.e0 * v.q0));
    const S b2 = div_checked(S(2), S(v.e * v.q0 * v.p0)) +
                 div_checked(S(2), S(v.e * v.q0 * v.p)) +
                 div_checked(S(2), S(v.e * v.q * v.p)) -
                 div_checked(one, S(v.e0 * v.g0 * v.p0)) -
                 div_checked(one, S(v.e0 * v.q0 * v.p0)) -
                 div_checked(one, S(v.e0 * v.q0 * v.p)) -
                 div_checked(S(3), S(v.f * v.q * v.p));
    return S(v.e0 * v.g0 * v.r0 *
             (div_checked(one, v.p0) * b1 + div_checked(v.r, v.h) * b2));
}

template <class S>
S obj_p4(const Vars<S>& v, const S&) {
    const S one(1);
    const S part1 =
        (div_checked(one, v.p0) + div_checked(v.r, S(v.h * v.p0))) *
        ((div_checked(one, v.q0) + div_checked(one, v.g0)) *
             div_checked(ramp(S(v.e0 - v.e)), S(v.e * v.e0)) +
         div_checked(ramp(S(v.g0 - v.q0)), S(v.e * v.q0 * v.g0)));
    const S part2 = div_checked(v.r, S(v.h * v.p)) *
                    (div_checked(ramp(S(v.e0 - v.e)), S(v.q0 * v.e * v.e0)) +
                     S(3) * div_checked(ramp(S(v.f - v.e)), S(v.q * v.e * v.f)) +
                     div_checked(ramp(S(v.q - v.q0)), S(v.e * v.q0 * v.q)));
    return S(v.e0 * v.g0 * v.r0 * (part1 + part2));
}

template <class S>
S obj_p5(const Vars<S>& v, const S&) {
    const S one(1);
    const S part1 =
        (div_checked(one, v.p0) + div_checked(one, S(v.p0 + v.q - v.e))) *
        ((div_checked(one, v.q0) + div_checked(one, v.g0)) *
             div_checked(ramp(S(v.e0 - v.e)), S(v.e * v.e0)) +
         div_checked(ramp(S(v.g0 - v.q0)), S(v.e * v.q0 * v.g0)));
    const S part2 =
        div_checked(v.p0, S((v.p0 + v.q - v.e) * (v.q0 + v.f - v.yp))) *
        (div_checked(ramp(S(v.e0 - v.e)), S(v.q0 * v.e * v.e0)) +
         S(3) * div_checked(ramp(S(v.f - v.e)), S(v.q * v.e * v.f)) +
         div_checked(ramp(S(v.q - v.q0)), S(v.e * v.q0 * v.q)));
    return S(v.e0 * v.g0 * v.g0 * (part1 + part2));
}

template <class S>
S obj_p6(const Vars<S>& v, const S&) {
    const S one(1);
    const S ee0x = S(v.e + v.e0 - v.x);
    const S part1 =
        (div_checked(one, S(v.g0 + v.e - v.x)) + div_checked(one, S(v.g0 + v.q - v.x))) *
        ((div_checked(one, ee0x) + div_checked(one, v.g0)) *
             div_checked(ramp(S(v.e0 - v.e)), S(v.e * v.e0)) +
         div_checked(ramp(S(v.g0 - ee0x)), S(v.e * ee0x * v.g0)));
    const S part2 =
        div_checked(S(v.g0 + v.e - v.x),
                    S((v.g0 + v.q - v.x) * (ee0x + v.f - v.yp))) *
        (div_checked(ramp(S(v.e0 - v.e)), S(ee0x * v.e * v.e0)) +
         S(3) * div_checked(ramp(S(v.f - v.e)), S(v.q * v.e * v.f)) +
         div_checked(ramp(S(v.q - ee0x)), S(v.e * ee0x * v.q)));
    return S(v.e0 * v.g0 * v.g0 * (part1 + part2));
}

template <class S>
S obj_p7(const Vars<S>& v, const S&) {
    const S one(1);
    const S ee0x = S(v.e + v.e0 - v.x);
    const S efy = S(v.e + v.f - v.yp);
    const S part1 =
        (div_checked(one, S(v.g0 + v.e - v.x)) +
         div_checked(one, S(v.g0 + efy - v.x))) *
        ((div_checked(one, ee0x) + div_checked(one, v.g0)) *
             div_checked(ramp(S(v.e0 - v.e)), S(v.e * v.e0)) +
         div_checked(ramp(S(v.g0 - ee0x)), S(v.e * ee0x * v.g0)));
    const S part2 =
        div_checked(S(v.g0 + v.e - v.x),
                    S((v.g0 + efy - v.x) * (ee0x + v.f - v.yp))) *
        (div_checked(ramp(S(v.e0 - v.e)), S(ee0x * v.e * v.e0)) +
         S(3) * div_checked(ramp(S(v.f - v.e)), S(efy * v.e * v.f)) +
         div_checked(S(v.x - v.e0), S(v.e * v.e * ee0x)));
    return S(v.e0 * v.g0 * v.g0 * (part1 + part2));
}

template <class S>
S obj_p8(const Vars<S>& v, const S& d) {
    const S one(1);
    const S ee0x = S(v.e + v.e0 - v.x);
    const S efy = S(v.e + v.f - v.yp);
    const S tail = S(v.e0 + v.e + v.f - v.yp - v.x);
    const S part1 = (div_checked(S(v.e0 * v.e0), S(v.e0 + v.e - v.x)) +
                     div_checked(S(v.e0 * v.e0), tail)) *
                    ((div_checked(one, ee0x) + div_checked(one, S(v.e0 - d))) *
                         div_checked(ramp(S(v.e0 - v.e)), v.e) +
                     div_checked(S(v.x - v.e), S(v.e * ee0x)));
    const S part2 =
        div_checked(S((v.e0 + v.e - v.x) * v.e0 * v.e0 * v.e0), S(tail * tail)) *
        (div_checked(ramp(S(v.e0 - v.e)), S(ee0x * v.e * v.e0)) +
         S(3) * div_checked(ramp(S(v.f - v.e)), S(efy * v.e * v.f)) +
         div_checked(S(v.x - v.e0), S(v.e * v.e * ee0x)));
    return part1 + part2;
}

// P9 after the a = x - e0, b = y' - f change of variables
template <class S>
S obj_p9(const Vars<S>& v, const S& d) {
    const S one(1);
    const S A = S(v.x - v.a);
    const S xy1 = S(v.x + v.yp - one);
    const S ay1 = S(A + v.yp - one);
    const S ayb1 = S(A + v.yp - v.b - one);
    const S xyab1 = S(v.x + v.yp - v.a - v.b - one);
    const S r1 = ramp(S(one - v.yp - v.a));
    const S r2 = ramp(S(one - v.x - v.b));
    const S part1 = (div_checked(S(A * A), ay1) + div_checked(S(A * A), ayb1)) *
                    (div_checked(S(r1 + one - v.yp), S(ay1 * xy1)) +
                     div_checked(r1, S((A - d) * xy1)));
    const S part2 = div_checked(S(A * A * r1), S(xy1 * xyab1 * xyab1));
    const S part3 = div_checked(S(v.a * A * A * A), S(xyab1 * xyab1 * xy1 * xy1));
    const S part4 =
        div_checked(S(S(3) * ay1 * A * A * A * r2),
                    S(S(v.x + v.yp - v.b - one) * xy1 * S(v.yp - v.b) * xyab1 * xyab1));
    return S(part1 + part2 + part3 + part4);
}

// P9 before that change of variables (e pinned to x + y' - 1); internal
// cross-check against obj_p9.
template <class S>
S obj_p9_hat(const Vars<S>& v, const S& d) {
    const S one(1);
    const S ey1 = S(v.e0 + v.yp - one);
    const S ef1 = S(v.e0 + v.f - one);
    const S xy1 = S(v.x + v.yp - one);
    const S part1 =
        (div_checked(S(v.e0 * v.e0), ey1) + div_checked(S(v.e0 * v.e0), ef1)) *
        ((div_checked(one, ey1) + div_checked(one, S(v.e0 - d))) *
             div_checked(ramp(S(v.e0 - v.x - v.yp + one)), xy1) +
         div_checked(S(one - v.yp), S(xy1 * ey1)));
    const S part2 =
        div_checked(S(ey1 * v.e0 * v.e0 * v.e0), S(ef1 * ef1)) *
        (div_checked(ramp(S(v.e0 - v.x - v.yp + one)), S(ey1 * xy1 * v.e0)) +
         S(3) * div_checked(ramp(S(v.f - v.x - v.yp + one)),
                            S(S(v.x + v.f - one) * xy1 * v.f)) +
         div_checked(S(v.x - v.e0), S(xy1 * xy1 * ey1)));
    return S(part1 + part2);
}

template <class S>
S obj_p10(const Vars<S>& v, const S& d) {
    const S one(1);
    const S A = S(v.x - v.a);
    const S xad = S(v.x - v.a - d);
    const S xd = S(v.x - d);
    const S xabd = S(v.x - v.a - v.b - d);
    const S part1 = (div_checked(S(A * A), xad) + div_checked(S(A * A), S(xad - v.b))) *
                    div_checked(S(S(3) * d - S(2) * v.a), S(xad * xd));
    const S part2 = div_checked(S(A * A * S(d - v.a)), S(xd * xabd * xabd));
    const S part3 = div_checked(S(v.a * A * A * A), S(xabd * xabd * xd * xd));
    const S part4 = div_checked(
        S(S(3) * xad * A * A * A * ramp(S(one - v.x - v.b))),
        S(S(v.x - v.b - d) * xd * S(one - d - v.b) * xabd * xabd));
    return S(part1 + part2 + part3 + part4);
}

template <class S>
S obj_p11(const Vars<S>& v, const S& d) {
    const S one(1);
    const S B = S(one - d - v.a);
    const S a2d = S(one - v.a - S(2) * d);
    const S abd = S(one - v.a - v.b - S(2) * d);
    const S d2 = S(one - S(2) * d);
    const S part1 = (div_checked(S(B * B), a2d) + div_checked(S(B * B), abd)) *
                    div_checked(S(S(3) * d - S(2) * v.a), S(a2d * d2));
    const S part2 = div_checked(S(B * B * S(d - v.a)), S(d2 * abd * abd));
    const S part3 = div_checked(S(v.a * B * B * B), S(abd * abd * d2 * d2));
    const S part4 = div_checked(
        S(S(3) * a2d * B * B * B * S(d - v.b)),
        S(S(one - v.b - S(2) * d) * d2 * S(one - d - v.b) * abd * abd));
    return S(part1 + part2 + part3 + part4);
}

template <class S>
S obj_p12(const Vars<S>& v, const S& d) {
    const S one(1);
    const S B = S(one - d - v.a);
    const S a2d = S(one - v.a - S(2) * d);
    const S a3d = S(one - v.a - S(3) * d);
    const S d2 = S(one - S(2) * d);
    const S d3 = S(one - S(3) * d);
    const S part1 = (div_checked(S(B * B), a2d) + div_checked(S(B * B), a3d)) *
                    div_checked(S(S(3) * d - S(2) * v.a), S(a2d * d2));
    const S part2 = div_checked(S(B * B * S(d - v.a)), S(d2 * a3d * a3d));
    const S part3 = div_checked(S(v.a * B * B * B), S(a3d * a3d * d2 * d2));
    const S part4 = div_checked(S(S(3) * a2d * B * B * B * d), S(d3 * d2 * d2 * a3d * a3d));
    return S(part1 + part2 + part3 + part4);
}

template <class S>
S obj_w13(const S& d) {
    const S one(1);
    const S C = S(one - d);
    const S d2 = S(one - S(2) * d);
    const S d3 = S(one - S(3) * d);
    return S((div_checked(S(C * C), d2) + div_checked(S(C * C), d3)) *
                 div_checked(S(S(3) * d), S(d2 * d2)) +
             div_checked(S(C * C * d), S(d2 * d3 * d3)) +
             div_checked(S(d * C * C * C), S(d3 * d3 * d2 * d2)) +
             div_checked(S(S(3) * C * C * C * d), S(d3 * d3 * d3 * d2)));
}

}  // namespace detail

// Exact value of the cited program's objective at pt. Throws
// ZeroDenominator when evaluated at a vanishing denominator (off-domain).
inline Rational eval_objective(ProgramId p, const ScalarPoint& pt, const Rational& d) {
    const auto v = detail::to_vars(pt);
    switch (p) {
        case ProgramId::p3: return detail::obj_p3(v, d);
        case ProgramId::p4: return detail::obj_p4(v, d);
        case ProgramId::p5: return detail::obj_p5(v, d);
        case ProgramId::p6: return detail::obj_p6(v, d);
        case ProgramId::p7: return detail::obj_p7(v, d);
        case ProgramId::p8: return detail::obj_p8(v, d);
        case ProgramId::p9: return detail::obj_p9(v, d);
        case ProgramId::p10: return detail::obj_p10(v, d);
        case ProgramId::p11: return detail::obj_p11(v, d);
        case ProgramId::p12: return detail::obj_p12(v, d);
        default:
            throw std::invalid_argument("scalar objective undefined for this program");
    }
}

// P1/P2 in density-normalized form: the outer sum is weighted by r0/R0 and
// each inner sum by r_i/R_i, both equal to 1/n on graph-derived points.
// Empty families contribute zero.
inline Rational eval_objective(ProgramId p, const StructuredPoint& pt, const Rational& d) {
    (void)d;
    if (p != ProgramId::p1 && p != ProgramId::p2)
        throw std::invalid_argument("structured objective only for P1/P2");
    if (pt.outer.empty()) return Rational(0);
    using detail::div_checked;
    const Rational one(1);

    Rational outer_sum(0);
    for (const auto& ob : pt.outer) {
        Rational block = div_checked(one, ob.p0) *
                         (div_checked(Rational(2), Rational(ob.e * ob.q0)) -
                          div_checked(one, Rational(pt.e0 * pt.g0)) -
                          div_checked(one, Rational(pt.e0 * ob.q0)));
        if (!ob.inner.empty()) {
            Rational inner_sum(0);
            for (const auto& ib : ob.inner) {
                inner_sum += div_checked(one, ib.h) *
                             (div_checked(Rational(2), Rational(ob.e * ob.q0 * ob.p0)) +
                              div_checked(Rational(2), Rational(ob.e * ob.q0 * ib.p)) +
                              div_checked(Rational(2), Rational(ob.e * ib.q * ib.p)) -
                              div_checked(one, Rational(pt.e0 * pt.g0 * ob.p0)) -
                              div_checked(one, Rational(pt.e0 * ob.q0 * ob.p0)) -
                              div_checked(one, Rational(pt.e0 * ob.q0 * ib.p)) -
                              div_checked(Rational(3), Rational(ib.f * ib.q * ib.p)));
            }
            // r_i/R_i weight per inner term (the paper's 1/n)
            block += div_checked(ob.r, Rational(static_cast<long>(ob.inner.size()))) *
                     inner_sum;
        }
        outer_sum += block;
    }
    // r0/R0 weight per outer term
    return pt.e0 * pt.g0 *
           div_checked(pt.r0, Rational(static_cast<long>(pt.outer.size()))) * outer_sum;
}

// Closed-form upper bound for OPT(P12).
inline Rational w13(const Rational& d) { return detail::obj_w13<Rational>(d); }

inline double w13_f(double d) { return detail::obj_w13<double>(d); }

}  // namespace k4frac
