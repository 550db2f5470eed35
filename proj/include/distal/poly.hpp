#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace distal {

// Univariate polynomial over Rational, coefficients ascending by degree.
// Invariant: leading coefficient nonzero unless the zero polynomial (empty).
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& r) { return Poly(std::vector<Rational>{r}); }
    // x - r
    static Poly linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    int sign_eval(const Rational& x) const { return eval(x).sign(); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const Rational& s) const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    Poly operator-() const { return *this * Rational(-1); }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw input_error("poly division by zero");
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quot;
        int db = b.degree();
        while (static_cast<int>(rem.size()) - 1 >= db) {
            Rational f = rem.back() / b.leading();
            int shift = static_cast<int>(rem.size()) - 1 - db;
            if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, Rational(0));
            quot[shift] = f;
            for (int i = 0; i <= db; ++i) rem[shift + i] -= f * b.c_[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) break;
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    // Integer-primitive form with positive leading coefficient; the canonical
    // shape for defining polynomials of algebraic numbers.
    Poly primitive() const {
        if (is_zero()) return *this;
        Integer den_lcm(1);
        for (const auto& co : c_) den_lcm = lcm(den_lcm, denominator(co));
        Integer g(0);
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Integer n = numerator(c_[i]) * (den_lcm / denominator(c_[i]));
            g = gcd(g, n);
            r[i] = Rational(n);
        }
        if (g == 0) g = 1;
        if (r.back() < 0) g = -g;
        for (auto& x : r) x /= g;
        return Poly(std::move(r));
    }

    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = r.is_zero() ? r : r.monic();
        }
        return a.is_zero() ? a : a.primitive();
    }

    Poly square_free_part() const {
        if (is_zero()) throw input_error("square_free_part of zero polynomial");
        if (degree() == 0) return Poly::constant(Rational(1));
        Poly g = gcd(*this, derivative());
        if (g.degree() == 0) return primitive();
        return divmod(*this, g).first.primitive();
    }

    // Yun's square-free decomposition: p = prod f_i^i over returned (f_i, i)
    // with each f_i square-free, nonconstant factors only.
    std::vector<std::pair<Poly, int>> square_free_decomposition() const {
        if (is_zero()) throw input_error("square-free decomposition of zero polynomial");
        std::vector<std::pair<Poly, int>> out;
        Poly p = primitive();
        if (p.degree() == 0) return out;
        Poly dp = p.derivative();
        Poly a = gcd(p, dp);
        Poly b = divmod(p, a).first;
        Poly c = divmod(dp, a).first;
        Poly d = c - b.derivative();
        int i = 1;
        while (b.degree() > 0) {
            Poly f = gcd(b, d);
            if (f.degree() > 0) out.emplace_back(f.primitive(), i);
            b = divmod(b, f).first;
            c = divmod(d, f).first;
            d = c - b.derivative();
            ++i;
        }
        return out;
    }

    // All real roots lie in [-bound, bound].
    Rational cauchy_bound() const {
        if (is_zero() || degree() == 0) return Rational(1);
        Rational m(0);
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            Rational q = distal::abs(c_[i] / leading());
            if (q > m) m = q;
        }
        return m + 1;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += to_string(c_[i]);
            if (i == 1) s += "*x";
            if (i > 1) s += "*x^" + std::to_string(i);
        }
        return s;
    }

  private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Sturm chain of a square-free polynomial.
class SturmChain {
  public:
    explicit SturmChain(const Poly& squarefree) {
        chain_.push_back(squarefree);
        Poly d = squarefree.derivative();
        if (!d.is_zero()) chain_.push_back(d);
        while (chain_.back().degree() > 0) {
            Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.is_zero()) break;
            // Scale by a positive constant only; signs are the whole point.
            Poly next = -r;
            chain_.push_back(next * (Rational(1) / distal::abs(next.leading())));
        }
    }

    int variations_at(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = p.sign_eval(x);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    // Number of distinct roots in (a, b]; requires a <= b.
    int count_roots(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }

  private:
    std::vector<Poly> chain_;
};

}  // namespace distal
