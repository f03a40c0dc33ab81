#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k4frac/polynomial.hpp"

namespace k4frac {

// The degree-6 threshold polynomial W(d), built by expanding its six-term
// product form exactly:
//   3d(1-d)^2(1-3d)^3 + 3d(1-d)^2(1-3d)^2(1-2d) + d(1-d)^2(1-2d)^2(1-3d)
// + d(1-d)^3(1-3d)(1-2d) + 3d(1-d)^3(1-2d)^2 - (1-3d)^3(1-2d)^3.
// W(d) < 0 on [0, hi] is exactly the statement w13(hi') <= 1 there.
inline Polynomial threshold_polynomial() {
    const Polynomial d = Polynomial::monomial(Rational(1), 1);
    const Polynomial u1 = Polynomial({Rational(1), Rational(-1)});  // 1 - d
    const Polynomial u2 = Polynomial({Rational(1), Rational(-2)});  // 1 - 2d
    const Polynomial u3 = Polynomial({Rational(1), Rational(-3)});  // 1 - 3d
    Polynomial w = d * u1.pow(2) * u3.pow(3) * Rational(3);
    w = w + d * u1.pow(2) * u3.pow(2) * u2 * Rational(3);
    w = w + d * u1.pow(2) * u2.pow(2) * u3;
    w = w + d * u1.pow(3) * u3 * u2;
    w = w + d * u1.pow(3) * u2.pow(2) * Rational(3);
    w = w - u3.pow(3) * u2.pow(3);
    return w;
}

// One link of the alternating monotonicity/sign chain. `increasing` is the
// claimed direction on [lo, hi]; for the top (quadratic) derivative the
// direction is justified by the parabola data, for every other order by the
// sign concluded one level up.
struct SignStep {
    int order = 0;                           // derivative order of W this step talks about
    bool increasing = false;                 // direction on [lo, hi]
    Rational endpoint_value;                 // exact value at hi
    int concluded_sign = 0;                  // -1 or +1 on the whole interval
    std::optional<Rational> vertex;          // top step only: quadratic vertex
    std::optional<Rational> leading_coeff;   // top step only
};

struct SignCertificate {
    Rational lo, hi;
    std::vector<SignStep> steps;  // orders 4,3,2,1,0 while the chain holds
    bool verdict = false;
    std::optional<std::string> failed_step;

    // Re-derives the verdict from the recorded evidence alone: the top
    // direction from the parabola data, each subsequent direction from the
    // previous sign, each sign from (direction, endpoint sign), and the
    // verdict from the chain reaching order 0 with negative sign. Callers
    // compare the result against the stored verdict.
    bool recheck() const {
        if (steps.size() != 5) return false;
        int prev_sign = 0;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const SignStep& s = steps[i];
            if (s.order != 4 - static_cast<int>(i)) return false;
            bool dir_ok;
            if (i == 0) {
                dir_ok = s.vertex && s.leading_coeff && *s.leading_coeff < 0 &&
                         *s.vertex >= hi && s.increasing;
            } else {
                dir_ok = s.increasing == (prev_sign > 0);
            }
            if (!dir_ok) return false;
            // increasing: max at hi, so endpoint < 0 forces sign < 0 on [lo,hi];
            // decreasing: min at hi, so endpoint > 0 forces sign > 0.
            if (s.increasing) {
                if (!(s.endpoint_value < 0) || s.concluded_sign != -1) return false;
            } else {
                if (!(s.endpoint_value > 0) || s.concluded_sign != 1) return false;
            }
            prev_sign = s.concluded_sign;
        }
        return steps.back().order == 0 && steps.back().concluded_sign == -1;
    }
};

// Reproduces the alternating chain certifying W(d) < 0 on [lo, hi]:
// the quartic derivative is increasing (vertex beyond hi) and negative at
// hi, hence negative throughout; that drives direction and endpoint-sign
// conclusions down to W itself. Every endpoint value is exact. On failure
// the certificate names the first step that broke.
inline SignCertificate certify_sign_chain(const Rational& lo, const Rational& hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("need 0 <= lo <= hi");
    SignCertificate cert;
    cert.lo = lo;
    cert.hi = hi;

    std::vector<Polynomial> w(5);
    w[0] = threshold_polynomial();
    for (int k = 1; k <= 4; ++k) w[k] = w[k - 1].derivative();

    // top: W'''' is a downward parabola increasing left of its vertex
    const Rational c2 = w[4].coeff(2), c1 = w[4].coeff(1);
    if (!(c2 < 0)) {
        cert.failed_step = "order-4 leading coefficient not negative";
        return cert;
    }
    const Rational vertex = -c1 / (2 * c2);
    if (!(vertex >= hi)) {
        cert.failed_step = "order-4 vertex inside interval; monotonicity breaks";
        return cert;
    }

    bool increasing = true;
    for (int order = 4; order >= 0; --order) {
        SignStep step;
        step.order = order;
        step.increasing = increasing;
        step.endpoint_value = w[order](hi);
        if (order == 4) {
            step.vertex = vertex;
            step.leading_coeff = c2;
        }
        if (increasing) {
            if (!(step.endpoint_value < 0)) {
                cert.failed_step = "W" + std::string(order, '\'') +
                                   " endpoint not negative at hi";
                cert.steps.push_back(step);
                return cert;
            }
            step.concluded_sign = -1;
        } else {
            if (!(step.endpoint_value > 0)) {
                cert.failed_step = "W" + std::string(order, '\'') +
                                   " endpoint not positive at hi";
                cert.steps.push_back(step);
                return cert;
            }
            step.concluded_sign = 1;
        }
        cert.steps.push_back(step);
        // negative derivative => next lower order decreasing, and vice versa
        increasing = step.concluded_sign > 0;
    }
    cert.verdict = true;
    return cert;
}

// Largest d (to the given precision) for which the chain still closes on
// [0, d]. Plain bisection; the pass set is downward closed because every
// endpoint condition is monotone in hi.
inline Rational bisect_threshold(const Rational& precision) {
    if (!(precision > 0)) throw std::invalid_argument("precision must be positive");
    Rational lo(0);        // certify_sign_chain(0, 0) holds: W(0) = -1
    Rational hi(1, 4);     // known failure, well past the first root of W
    if (!certify_sign_chain(0, lo).verdict) return lo;
    while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        if (certify_sign_chain(0, mid).verdict)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace k4frac
