#pragma once

#include <string>
#include <vector>

#include "k4frac/rational.hpp"

namespace k4frac {

namespace detail {
inline Rational abs_nonneg(const Rational& v) { return v < 0 ? Rational(-v) : v; }
}

// Univariate polynomial with exact rational coefficients, ascending degree,
// trailing zeros trimmed. Immutable in spirit: operations return new values.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }

    // coeff * d^deg
    static Polynomial monomial(const Rational& coeff, int deg) {
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = coeff;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }

    // Horner evaluation, exact
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double operator()(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> s(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
        return Polynomial(std::move(s));
    }

    Polynomial operator-() const {
        std::vector<Rational> s(c_);
        for (auto& v : s) v = -v;
        return Polynomial(std::move(s));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> p(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(p));
    }

    Polynomial operator*(const Rational& s) const {
        if (s == 0) return Polynomial();
        std::vector<Rational> p(c_);
        for (auto& v : p) v *= s;
        return Polynomial(std::move(p));
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = Polynomial::constant(Rational(1));
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1u) acc = acc * b;
            b = b * b;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const Polynomial&) const = default;

    std::string to_string(const std::string& var = "d") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) out += "-";
            Rational a = detail::abs_nonneg(c_[i]);
            if (i == 0 || a != 1) out += k4frac::to_string(a);
            if (i >= 1) {
                if (a != 1) out += "*";
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace k4frac
