#pragma once

#include <map>
#include <span>
#include <vector>

#include "poly.hpp"

namespace distal {

// Sparse multivariate polynomial over Rational. Exponent vectors are indexed
// by variable; the owning Relation fixes which variables are object vs
// parameter coordinates.
class MultiPoly {
  public:
    using Monomial = std::vector<unsigned>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int var) {
        MultiPoly p(nvars);
        Monomial m(nvars, 0);
        m.at(var) = 1;
        p.terms_[m] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c) {
        if (static_cast<int>(m.size()) != nvars_) throw input_error("monomial arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPoly operator*(const Rational& s) const {
        MultiPoly r(nvars_);
        if (s == 0) return r;
        r.terms_ = terms_;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }

    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) {
            unsigned s = 0;
            for (unsigned e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    Rational eval(std::span<const Rational> values) const {
        if (static_cast<int>(values.size()) != nvars_) throw input_error("eval arity mismatch");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                if (m[i]) t *= distal::pow(values[i], m[i]);
            acc += t;
        }
        return acc;
    }

    // Fix variable `var` to `value`; the variable disappears and later
    // variables shift down by one.
    MultiPoly substitute(int var, const Rational& value) const {
        MultiPoly r(nvars_ - 1);
        for (const auto& [m, c] : terms_) {
            Monomial mm;
            mm.reserve(nvars_ - 1);
            for (int i = 0; i < nvars_; ++i)
                if (i != var) mm.push_back(m[i]);
            r.add_term(mm, m[var] ? c * distal::pow(value, m[var]) : c);
        }
        return r;
    }

    // Univariate polynomial in variable `var` after fixing all others.
    // `others` lists the values of the remaining variables in index order.
    Poly collect_univariate(int var, std::span<const Rational> others) const {
        if (static_cast<int>(others.size()) != nvars_ - 1)
            throw input_error("collect_univariate arity mismatch");
        std::vector<Rational> coeffs(degree_in(var) + 1, Rational(0));
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            int j = 0;
            for (int i = 0; i < nvars_; ++i) {
                if (i == var) continue;
                if (m[i]) t *= distal::pow(others[j], m[i]);
                ++j;
            }
            coeffs[m[var]] += t;
        }
        return Poly(std::move(coeffs));
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += to_string(c);
            for (int i = 0; i < nvars_; ++i) {
                if (!m[i]) continue;
                s += "*";
                s += (i < static_cast<int>(names.size())) ? names[i] : "v" + std::to_string(i);
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

  private:
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace distal
