#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "poly.hpp"

namespace distal {

// A real algebraic number: an exact rational, a root of a square-free
// polynomial isolated by an open rational interval, or +-infinity (so chamber
// endpoints have a uniform type). Immutable as a mathematical value; interval
// refinement only sharpens the representation and is therefore const.
class AlgebraicNumber {
  public:
    enum class Kind { NegInf, Exact, Root, PosInf };

    static AlgebraicNumber neg_inf() { return AlgebraicNumber(Kind::NegInf); }
    static AlgebraicNumber pos_inf() { return AlgebraicNumber(Kind::PosInf); }
    static AlgebraicNumber exact(Rational r) {
        AlgebraicNumber a(Kind::Exact);
        a.value_ = std::move(r);
        return a;
    }

    // `defining` must be square-free with exactly one root in the open
    // interval (lo, hi) and no root at either endpoint. Trusted fast path for
    // isolate_roots; validate() is the checked entry for external data.
    static AlgebraicNumber root_unchecked(Poly defining, Rational lo, Rational hi) {
        if (defining.degree() == 1) {
            const auto& c = defining.coeffs();
            return exact(-c[0] / c[1]);
        }
        AlgebraicNumber a(Kind::Root);
        a.poly_ = defining.primitive();
        a.lo_ = std::move(lo);
        a.hi_ = std::move(hi);
        return a;
    }

    static AlgebraicNumber validated_root(const Poly& p, const Rational& lo, const Rational& hi) {
        if (p.is_zero() || p.degree() < 1) throw input_error("algebraic root: bad defining polynomial");
        Poly sf = p.square_free_part();
        if (sf.sign_eval(lo) == 0 || sf.sign_eval(hi) == 0 || !(lo < hi))
            throw input_error("algebraic root: endpoints must strictly bracket the root");
        SturmChain chain(sf);
        if (chain.count_roots(lo, hi) != 1)
            throw input_error("algebraic root: isolating interval must contain exactly one root");
        return root_unchecked(sf, lo, hi);
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Exact || kind_ == Kind::Root; }
    bool is_exact() const { return kind_ == Kind::Exact; }
    const Rational& exact_value() const {
        if (kind_ != Kind::Exact) throw input_error("exact_value on non-exact algebraic number");
        return value_;
    }
    const Poly& defining_poly() const { return poly_; }
    const Rational& interval_lo() const { return lo_; }
    const Rational& interval_hi() const { return hi_; }

    // Rational bounds lb < x <= value <= y < ub (degenerate for Exact).
    Rational lower_bound() const { return kind_ == Kind::Exact ? value_ : lo_; }
    Rational upper_bound() const { return kind_ == Kind::Exact ? value_ : hi_; }

    // Halve the isolating interval; collapses to Exact when the midpoint is
    // the root itself.
    void refine() const {
        if (kind_ != Kind::Root) return;
        Rational mid = (lo_ + hi_) / 2;
        int sm = poly_.sign_eval(mid);
        if (sm == 0) {
            kind_ = Kind::Exact;
            value_ = mid;
            return;
        }
        if (poly_.sign_eval(lo_) * sm < 0)
            hi_ = mid;
        else
            lo_ = mid;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            case Kind::Exact: return to_string(value_);
            case Kind::Root:
                return "root(" + poly_.str() + ", (" + to_string(lo_) + ", " + to_string(hi_) + "))";
        }
        return {};
    }

  private:
    explicit AlgebraicNumber(Kind k) : kind_(k) {}
    mutable Kind kind_;
    mutable Rational value_;
    Poly poly_;
    mutable Rational lo_, hi_;

    friend int compare(const AlgebraicNumber&, const AlgebraicNumber&);
    friend int sign_at(const Poly&, const AlgebraicNumber&);
};

namespace detail {

// Position of rational r against the root isolated in a: -1 below, 0 equal,
// +1 above.
inline int compare_rational_to_root(const Rational& r, const AlgebraicNumber& a) {
    if (r <= a.interval_lo()) return -1;
    if (r >= a.interval_hi()) return 1;
    int sr = a.defining_poly().sign_eval(r);
    if (sr == 0) return 0;
    int slo = a.defining_poly().sign_eval(a.interval_lo());
    // The unique sign change in (lo, hi) happens at the root.
    return sr == slo ? -1 : 1;
}

}  // namespace detail

// Total order agreeing with the reals; {LT, EQ, GT} as {-1, 0, +1}.
inline int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    using K = AlgebraicNumber::Kind;
    auto rank = [](K k) { return k == K::NegInf ? 0 : k == K::PosInf ? 2 : 1; };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    if (!a.is_finite()) return 0;  // same infinity

    if (a.is_exact() && b.is_exact())
        return a.exact_value() < b.exact_value() ? -1 : a.exact_value() > b.exact_value() ? 1 : 0;
    if (a.is_exact()) return detail::compare_rational_to_root(a.exact_value(), b);
    if (b.is_exact()) return -detail::compare_rational_to_root(b.exact_value(), a);

    // Root vs root. Equality is decided through the gcd of the defining
    // polynomials; distinct roots are then separated by refinement. Roots
    // never sit on their interval endpoints, so touching intervals decide.
    if (a.upper_bound() <= b.lower_bound()) return -1;
    if (b.upper_bound() <= a.lower_bound()) return 1;
    Poly g = gcd(a.defining_poly(), b.defining_poly());
    if (g.degree() >= 1) {
        SturmChain cg(g);
        Rational ilo = std::max(a.interval_lo(), b.interval_lo());
        Rational ihi = std::min(a.interval_hi(), b.interval_hi());
        bool root_in_a = cg.count_roots(a.interval_lo(), a.interval_hi()) == 1;
        bool root_in_b = cg.count_roots(b.interval_lo(), b.interval_hi()) == 1;
        if (root_in_a && root_in_b && ilo < ihi && cg.count_roots(ilo, ihi) == 1) return 0;
    }
    while (true) {
        a.refine();
        b.refine();
        if (a.is_exact() || b.is_exact()) return compare(a, b);
        if (a.upper_bound() <= b.lower_bound()) return -1;
        if (b.upper_bound() <= a.lower_bound()) return 1;
    }
}

inline bool alg_less(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }
inline bool alg_eq(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }

// Exact sign of p at a finite algebraic number.
inline int sign_at(const Poly& p, const AlgebraicNumber& a) {
    if (!a.is_finite()) throw input_error("sign_at requires a finite algebraic number");
    if (p.is_zero()) return 0;
    if (a.is_exact()) return p.sign_eval(a.exact_value());
    Poly g = gcd(p, a.defining_poly());
    if (g.degree() >= 1 && SturmChain(g).count_roots(a.interval_lo(), a.interval_hi()) == 1)
        return 0;  // a is a common root, hence a root of p
    Poly psf = p.square_free_part();
    SturmChain cp(psf);
    while (true) {
        if (a.is_exact()) return p.sign_eval(a.exact_value());
        const Rational& lo = a.interval_lo();
        const Rational& hi = a.interval_hi();
        if (psf.sign_eval(lo) != 0 && psf.sign_eval(hi) != 0 && cp.count_roots(lo, hi) == 0)
            return p.sign_eval((lo + hi) / 2);  // sign constant across (lo, hi)
        a.refine();
    }
}

struct IsolatedRoot {
    AlgebraicNumber root;
    int multiplicity;
};

namespace detail {

inline void isolate_squarefree(const Poly& f, std::vector<AlgebraicNumber>& out) {
    if (f.degree() < 1) return;
    if (f.degree() == 1) {
        out.push_back(AlgebraicNumber::exact(-f.coeff(0) / f.coeff(1)));
        return;
    }
    SturmChain chain(f);
    Rational bound = f.cauchy_bound();  // all roots strictly inside (-bound, bound)
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = chain.count_roots(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(AlgebraicNumber::root_unchecked(f, lo, hi));
            continue;
        }
        Rational mid = (lo + hi) / 2;
        if (f.sign_eval(mid) == 0) {
            out.push_back(AlgebraicNumber::exact(mid));
            Rational w = (hi - lo) / 4;
            while (true) {
                Rational t1 = mid - w, t2 = mid + w;
                if (f.sign_eval(t1) != 0 && f.sign_eval(t2) != 0 && chain.count_roots(t1, t2) == 1) {
                    stack.emplace_back(lo, t1);
                    stack.emplace_back(t2, hi);
                    break;
                }
                w /= 2;
            }
        } else {
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
    }
}

}  // namespace detail

// Every distinct real root of p with multiplicity, in increasing order.
// Optional closed window [win_lo, win_hi] filters the result.
inline std::vector<IsolatedRoot> isolate_roots(
    const Poly& p,
    const std::optional<std::pair<Rational, Rational>>& window = std::nullopt) {
    if (p.is_zero()) throw input_error("isolate_roots: zero polynomial");
    std::vector<IsolatedRoot> result;
    for (const auto& [factor, mult] : p.square_free_decomposition()) {
        std::vector<AlgebraicNumber> roots;
        detail::isolate_squarefree(factor, roots);
        for (auto& r : roots) result.push_back({std::move(r), mult});
    }
    std::sort(result.begin(), result.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return alg_less(x.root, y.root); });
    if (window) {
        auto lo = AlgebraicNumber::exact(window->first);
        auto hi = AlgebraicNumber::exact(window->second);
        std::erase_if(result, [&](const IsolatedRoot& r) {
            return compare(r.root, lo) < 0 || compare(r.root, hi) > 0;
        });
    }
    return result;
}

// A rational strictly between a and b; requires a < b.
inline Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    using K = AlgebraicNumber::Kind;
    if (a.kind() == K::NegInf && b.kind() == K::PosInf) return Rational(0);
    if (a.kind() == K::NegInf) return b.lower_bound() - 1;
    if (b.kind() == K::PosInf) return a.upper_bound() + 1;
    if (a.is_exact() && b.is_exact()) return (a.exact_value() + b.exact_value()) / 2;
    while (true) {
        Rational u = a.upper_bound(), l = b.lower_bound();
        if (u < l) return (u + l) / 2;
        if (u == l) {
            if (!a.is_exact() && !b.is_exact()) return u;  // a < hi_a == lo_b < b
            if (a.is_exact()) {
                // b is a root with lo_b == a; walk down from inside b's interval.
                Rational t = (u + b.interval_hi()) / 2;
                while (detail::compare_rational_to_root(t, b) >= 0) t = (u + t) / 2;
                return t;
            }
            // b exact, a a root with hi_a == b; walk up from inside a's interval.
            Rational t = (a.interval_lo() + u) / 2;
            while (detail::compare_rational_to_root(t, a) <= 0) t = (t + u) / 2;
            return t;
        }
        a.refine();
        b.refine();
        if (a.is_exact() && b.is_exact()) return (a.exact_value() + b.exact_value()) / 2;
    }
}

}  // namespace distal
