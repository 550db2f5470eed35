#pragma once

#include <span>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "multipoly.hpp"

namespace distal {

enum class Backend { Semialg1D, PlaneLines };

inline std::string backend_name(Backend b) {
    return b == Backend::Semialg1D ? "semialg_1d" : "plane_lines";
}

// Sign condition on a polynomial atom. Strict and non-strict atoms mix
// freely; no implicit closure is taken.
enum class SignCond { LT, LE, EQ, NE, GE, GT };

inline bool sign_matches(int s, SignCond c) {
    switch (c) {
        case SignCond::LT: return s < 0;
        case SignCond::LE: return s <= 0;
        case SignCond::EQ: return s == 0;
        case SignCond::NE: return s != 0;
        case SignCond::GE: return s >= 0;
        case SignCond::GT: return s > 0;
    }
    return false;
}

inline std::string sign_cond_name(SignCond c) {
    switch (c) {
        case SignCond::LT: return "<";
        case SignCond::LE: return "<=";
        case SignCond::EQ: return "=";
        case SignCond::NE: return "!=";
        case SignCond::GE: return ">=";
        case SignCond::GT: return ">";
    }
    return "?";
}

struct Atom {
    MultiPoly poly;  // over x variables then y variables
    SignCond cond;
};

struct Formula {
    enum class Op { True, False, Atom, And, Or, Not };
    Op op = Op::True;
    int atom = -1;
    std::vector<Formula> kids;

    static Formula constant(bool v) {
        Formula f;
        f.op = v ? Op::True : Op::False;
        return f;
    }
    static Formula atom_ref(int index) {
        Formula f;
        f.op = Op::Atom;
        f.atom = index;
        return f;
    }
    static Formula con(std::vector<Formula> kids) {
        Formula f;
        f.op = Op::And;
        f.kids = std::move(kids);
        return f;
    }
    static Formula dis(std::vector<Formula> kids) {
        Formula f;
        f.op = Op::Or;
        f.kids = std::move(kids);
        return f;
    }
    static Formula neg(Formula inner) {
        Formula f;
        f.op = Op::Not;
        f.kids.push_back(std::move(inner));
        return f;
    }

    bool eval(std::span<const int> atom_signs, const std::vector<Atom>& atoms) const {
        switch (op) {
            case Op::True: return true;
            case Op::False: return false;
            case Op::Atom: return sign_matches(atom_signs[atom], atoms[atom].cond);
            case Op::And:
                for (const auto& k : kids)
                    if (!k.eval(atom_signs, atoms)) return false;
                return true;
            case Op::Or:
                for (const auto& k : kids)
                    if (k.eval(atom_signs, atoms)) return true;
                return false;
            case Op::Not: return !kids[0].eval(atom_signs, atoms);
        }
        return false;
    }

    void shift_atoms(int offset) {
        if (op == Op::Atom) atom += offset;
        for (auto& k : kids) k.shift_atoms(offset);
    }
};

// A definable edge relation R(x; y): a boolean combination of polynomial sign
// conditions, over one of the two concrete backends. Variables are indexed
// object coordinates first, then parameter coordinates.
struct Relation {
    Backend backend = Backend::Semialg1D;
    int x_arity = 1;
    int y_arity = 1;
    std::vector<Atom> atoms;
    Formula root = Formula::constant(true);

    int nvars() const { return x_arity + y_arity; }

    void validate(unsigned degree_cap = 8) const {
        if (backend == Backend::Semialg1D && x_arity != 1)
            throw input_error("semialg_1d relations have a 1-dimensional object variable");
        if (backend == Backend::PlaneLines && x_arity != 2)
            throw input_error("plane_lines relations have a 2-dimensional object variable");
        if (y_arity < 1) throw input_error("relation needs at least one parameter coordinate");
        for (const auto& a : atoms) {
            if (a.poly.nvars() != nvars()) throw input_error("atom arity mismatch");
            for (int v = 0; v < nvars(); ++v)
                if (a.poly.degree_in(v) > degree_cap)
                    throw input_error("atom degree exceeds the configured cap");
            if (backend == Backend::PlaneLines) {
                for (const auto& [m, c] : a.poly.terms())
                    if (m[0] + m[1] > 1)
                        throw input_error("plane_lines atoms must be affine in the point coordinates");
            }
        }
        check_formula(root);
    }

    bool evaluate(std::span<const Rational> x, std::span<const Rational> y) const {
        if (static_cast<int>(x.size()) != x_arity || static_cast<int>(y.size()) != y_arity)
            throw input_error("evaluate: dimension mismatch");
        std::vector<Rational> all(x.begin(), x.end());
        all.insert(all.end(), y.begin(), y.end());
        std::vector<int> signs(atoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i) signs[i] = atoms[i].poly.eval(all).sign();
        return root.eval(signs, atoms);
    }

    bool evaluate(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        return evaluate(std::span<const Rational>(x), std::span<const Rational>(y));
    }

    // Semialg1D only: object position may be a non-rational algebraic number.
    bool evaluate_at(const AlgebraicNumber& x, std::span<const Rational> y) const {
        if (backend != Backend::Semialg1D)
            throw input_error("algebraic evaluation is 1D-only");
        if (x.is_exact()) {
            std::vector<Rational> xv{x.exact_value()};
            return evaluate(xv, std::vector<Rational>(y.begin(), y.end()));
        }
        std::vector<int> signs(atoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            Poly p = atoms[i].poly.collect_univariate(0, y);
            signs[i] = p.is_zero() ? 0 : sign_at(p, x);
        }
        return root.eval(signs, atoms);
    }

    // Each atom as a univariate polynomial in the object variable with the
    // parameter tuple substituted. Zero polynomials (degenerate parameters)
    // are returned as-is; callers skip them for boundary generation.
    std::vector<Poly> atom_polys_at(std::span<const Rational> y) const {
        if (backend != Backend::Semialg1D) throw input_error("atom_polys_at is 1D-only");
        std::vector<Poly> out;
        out.reserve(atoms.size());
        for (const auto& a : atoms) out.push_back(a.poly.collect_univariate(0, y));
        return out;
    }

    Relation negated() const {
        Relation r = *this;
        r.root = Formula::neg(r.root);
        return r;
    }

    // Fix the object coordinate to a constant; the first parameter coordinate
    // becomes the new object. Realizes the bound-parameter form of a relation
    // with extra parameters fixed.
    Relation substitute_object(const Rational& a) const {
        if (backend != Backend::Semialg1D || x_arity != 1 || y_arity < 2)
            throw input_error("substitute_object needs a 1D object and >= 2 parameter coordinates");
        Relation r;
        r.backend = backend;
        r.x_arity = 1;
        r.y_arity = y_arity - 1;
        r.atoms.reserve(atoms.size());
        for (const auto& at : atoms) r.atoms.push_back({at.poly.substitute(0, a), at.cond});
        r.root = root;
        return r;
    }

  private:
    void check_formula(const Formula& f) const {
        if (f.op == Formula::Op::Atom &&
            (f.atom < 0 || f.atom >= static_cast<int>(atoms.size())))
            throw input_error("formula references a missing atom");
        if (f.op == Formula::Op::Not && f.kids.size() != 1)
            throw input_error("NOT takes exactly one child");
        if ((f.op == Formula::Op::And || f.op == Formula::Op::Or) && f.kids.empty())
            throw input_error("AND/OR need at least one child");
        for (const auto& k : f.kids) check_formula(k);
    }
};

// Conjunction of relations over identical (backend, arities). Atom lists are
// concatenated and formula atom indices shifted.
inline Relation conjoin(const std::vector<Relation>& rels) {
    if (rels.empty()) throw input_error("conjoin: empty list");
    Relation out = rels[0];
    std::vector<Formula> tops{out.root};
    for (std::size_t i = 1; i < rels.size(); ++i) {
        const Relation& r = rels[i];
        if (r.backend != out.backend || r.x_arity != out.x_arity || r.y_arity != out.y_arity)
            throw input_error("conjoin: incompatible relations");
        Formula shifted = r.root;
        shifted.shift_atoms(static_cast<int>(out.atoms.size()));
        out.atoms.insert(out.atoms.end(), r.atoms.begin(), r.atoms.end());
        tops.push_back(std::move(shifted));
    }
    out.root = Formula::con(std::move(tops));
    return out;
}

// ---- Small relation builders used by tests, demos and the CLI. ----

// x < y over the 1D backend.
inline Relation rel_x_less_y() {
    Relation r;
    r.backend = Backend::Semialg1D;
    r.x_arity = 1;
    r.y_arity = 1;
    MultiPoly p(2);
    p.add_term({1, 0}, Rational(1));
    p.add_term({0, 1}, Rational(-1));
    r.atoms.push_back({p, SignCond::LT});
    r.root = Formula::atom_ref(0);
    return r;
}

// sign(x^2 - y) > 0 over the 1D backend.
inline Relation rel_square_exceeds_y() {
    Relation r;
    r.backend = Backend::Semialg1D;
    r.x_arity = 1;
    r.y_arity = 1;
    MultiPoly p(2);
    p.add_term({2, 0}, Rational(1));
    p.add_term({0, 1}, Rational(-1));
    r.atoms.push_back({p, SignCond::GT});
    r.root = Formula::atom_ref(0);
    return r;
}

// "Point above the line": a*x1 + b*x2 + c > 0 with parameters (a, b, c).
inline Relation rel_plane_above() {
    Relation r;
    r.backend = Backend::PlaneLines;
    r.x_arity = 2;
    r.y_arity = 3;
    MultiPoly p(5);
    p.add_term({1, 0, 1, 0, 0}, Rational(1));
    p.add_term({0, 1, 0, 1, 0}, Rational(1));
    p.add_term({0, 0, 0, 0, 1}, Rational(1));
    r.atoms.push_back({p, SignCond::GT});
    r.root = Formula::atom_ref(0);
    return r;
}

// Point (x1,x2) lies on the line x2 = a*x1 + b with parameters (a, b).
inline Relation rel_plane_incidence() {
    Relation r;
    r.backend = Backend::PlaneLines;
    r.x_arity = 2;
    r.y_arity = 2;
    MultiPoly p(4);
    p.add_term({0, 1, 0, 0}, Rational(1));
    p.add_term({1, 0, 1, 0}, Rational(-1));
    p.add_term({0, 0, 0, 1}, Rational(-1));
    r.atoms.push_back({p, SignCond::EQ});
    r.root = Formula::atom_ref(0);
    return r;
}

// k-ary chain x_0 < x_1 < ... < x_{k-1} on the 1D backend, encoded with the
// first coordinate as the object variable.
inline Relation rel_increasing_chain(int k) {
    if (k < 2) throw input_error("chain needs k >= 2");
    Relation r;
    r.backend = Backend::Semialg1D;
    r.x_arity = 1;
    r.y_arity = k - 1;
    std::vector<Formula> parts;
    for (int i = 0; i + 1 < k; ++i) {
        MultiPoly p(k);
        p.add_term([&] {
            MultiPoly::Monomial m(k, 0);
            m[i] = 1;
            return m;
        }(), Rational(1));
        p.add_term([&] {
            MultiPoly::Monomial m(k, 0);
            m[i + 1] = 1;
            return m;
        }(), Rational(-1));
        r.atoms.push_back({p, SignCond::LT});
        parts.push_back(Formula::atom_ref(i));
    }
    r.root = Formula::con(std::move(parts));
    return r;
}

// Constant relation (every pair related / no pair related).
inline Relation rel_constant(Backend backend, bool value, int y_arity = 1) {
    Relation r;
    r.backend = backend;
    r.x_arity = backend == Backend::Semialg1D ? 1 : 2;
    r.y_arity = y_arity;
    r.root = Formula::constant(value);
    return r;
}

// Threshold relation x < t (ignores the parameter side).
inline Relation rel_x_below(const Rational& t) {
    Relation r;
    r.backend = Backend::Semialg1D;
    r.x_arity = 1;
    r.y_arity = 1;
    MultiPoly p(2);
    p.add_term({1, 0}, Rational(1));
    p.add_term({0, 0}, -t);
    r.atoms.push_back({p, SignCond::LT});
    r.root = Formula::atom_ref(0);
    return r;
}

}  // namespace distal
