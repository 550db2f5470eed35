#include "catch_amalgamated.hpp"

#include "distal/measure.hpp"
#include "distal/relation.hpp"
#include "distal/rng.hpp"

using namespace distal;

namespace {
Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.emplace_back(x);
    return p;
}
}  // namespace

TEST_CASE("relation evaluation on the three spec examples") {
    Relation lt = rel_x_less_y();
    CHECK(lt.evaluate(pt({1}), pt({2})));
    CHECK_FALSE(lt.evaluate(pt({2}), pt({2})));

    Relation sq = rel_square_exceeds_y();
    CHECK(sq.evaluate(pt({2}), pt({3})));  // 4 > 3
    CHECK_FALSE(sq.evaluate(pt({1}), pt({3})));

    Relation above = rel_plane_above();
    // x2 > a*x1 + c with line encoded as (a, b, c) = (1, -1, 0): x2 - ... the
    // convention is a*x1 + b*x2 + c > 0; point (0,1) above y = x needs
    // parameters (-1, 1, 0).
    CHECK(above.evaluate(pt({0, 1}), pt({-1, 1, 0})));
    CHECK_FALSE(above.evaluate(pt({2, 1}), pt({-1, 1, 0})));
}

TEST_CASE("relation dimension mismatch and validation") {
    Relation lt = rel_x_less_y();
    CHECK_THROWS_AS(lt.evaluate(pt({1, 2}), pt({2})), input_error);
    lt.validate(8);

    Relation bad = rel_square_exceeds_y();
    CHECK_THROWS_AS(bad.validate(1), input_error);  // degree cap

    Relation plane = rel_plane_above();
    plane.validate(8);
    Relation nonaffine = plane;
    MultiPoly q(5);
    q.add_term({2, 0, 0, 0, 0}, Rational(1));
    nonaffine.atoms.push_back({q, SignCond::GT});
    CHECK_THROWS_AS(nonaffine.validate(8), input_error);
}

TEST_CASE("evaluate at an algebraic object position") {
    Relation sq = rel_square_exceeds_y();
    // sqrt(2)^2 = 2 > 1, not > 3
    auto roots = isolate_roots(Poly({{Rational(-2), Rational(0), Rational(1)}}));
    const auto& sqrt2 = roots[1].root;
    CHECK(sq.evaluate_at(sqrt2, pt({1})));
    CHECK_FALSE(sq.evaluate_at(sqrt2, pt({3})));
    CHECK_FALSE(sq.evaluate_at(sqrt2, pt({2})));  // equality is not >
}

TEST_CASE("substitute_object fixes the object coordinate") {
    Relation chain = rel_increasing_chain(3);  // x0 < x1 < x2
    CHECK(chain.evaluate(pt({1}), pt({2, 3})));
    CHECK_FALSE(chain.evaluate(pt({1}), pt({3, 2})));
    Relation rest = chain.substitute_object(Rational(1));  // 1 < x1 < x2
    CHECK(rest.x_arity == 1);
    CHECK(rest.y_arity == 1);
    CHECK(rest.evaluate(pt({2}), pt({3})));
    CHECK_FALSE(rest.evaluate(pt({0}), pt({3})));

    Relation both = conjoin({rest, rel_x_less_y()});
    CHECK(both.evaluate(pt({2}), pt({3})));
    CHECK_FALSE(both.evaluate(pt({2}), pt({2})));
}

TEST_CASE("atomic measure: masses, localize examples") {
    AtomicMeasure u = AtomicMeasure::uniform_ints(1, 10);
    u.validate();
    // chamber (2,7) open: points 3,4,5,6
    Rational m = u.mass_of([](const Point& p) { return p[0] > 2 && p[0] < 7; });
    CHECK(m == Rational(4, 10));
    CHECK(u.mass_of([](const Point&) { return false; }) == 0);
    CHECK(u.mass_of([](const Point&) { return true; }) == 1);

    AtomicMeasure loc = localize(u, [](const Point& p) { return p[0] > 5; });
    CHECK(loc.size() == 5);
    for (const auto& w : loc.weights) CHECK(w == Rational(1, 5));

    AtomicMeasure same = localize(u, [](const Point&) { return true; });
    CHECK(same.points == u.points);
    CHECK(same.weights == u.weights);

    AtomicMeasure w3;
    w3.dim = 1;
    w3.points = {pt({1}), pt({2}), pt({3})};
    w3.weights = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
    w3.validate();
    AtomicMeasure w2 = localize(w3, std::vector<std::size_t>{1, 2});
    CHECK(w2.weights[0] == Rational(1, 2));
    CHECK(w2.weights[1] == Rational(1, 2));

    CHECK_THROWS_AS(localize(u, [](const Point& p) { return p[0] > 100; }), input_error);
}

TEST_CASE("atomic measure validation rejects bad inputs") {
    AtomicMeasure m;
    m.dim = 1;
    m.points = {pt({1}), pt({1})};
    m.weights = {Rational(1, 2), Rational(1, 2)};
    CHECK_THROWS_AS(m.validate(), input_error);  // duplicate support
    m.points = {pt({1}), pt({2})};
    m.weights = {Rational(1, 2), Rational(1, 3)};
    CHECK_THROWS_AS(m.validate(), input_error);  // mass != 1
}

TEST_CASE("piecewise uniform measure: interval masses") {
    auto u = PiecewiseUniform1D::uniform(Rational(0), Rational(1));
    u.validate();
    CHECK(u.interval_mass(Rational(1, 4), Rational(3, 4)) == Rational(1, 2));
    CHECK(u.interval_mass(Rational(-5), Rational(10)) == 1);
    CHECK(u.interval_mass(Rational(1, 2), Rational(1, 2)) == 0);

    PiecewiseUniform1D pw;
    pw.breakpoints = {Rational(0), Rational(1), Rational(3)};
    pw.densities = {Rational(1, 2), Rational(1, 4)};
    pw.validate();
    CHECK(pw.interval_mass(Rational(0), Rational(2)) == Rational(3, 4));
}

TEST_CASE("localize then measure agrees with conditional mass on random sets") {
    Rng rng(5u);
    AtomicMeasure u = AtomicMeasure::uniform_ints(1, 12);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> a_idx, x_idx;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (rng.index(2)) a_idx.push_back(i);
            if (rng.index(2)) x_idx.push_back(i);
        }
        if (a_idx.empty()) continue;
        AtomicMeasure loc = localize(u, a_idx);
        std::set<Point> xs;
        for (auto i : x_idx) xs.insert(u.points[i]);
        Rational lhs = loc.mass_of([&](const Point& p) { return xs.count(p) > 0; });
        std::vector<std::size_t> both;
        for (auto i : a_idx)
            if (std::find(x_idx.begin(), x_idx.end(), i) != x_idx.end()) both.push_back(i);
        Rational rhs = u.mass_of_indices(both) / u.mass_of_indices(a_idx);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("product measure of rectangles multiplies coordinate masses") {
    Rng rng(9u);
    ProductMeasure pm;
    pm.factors.push_back(AtomicMeasure::uniform_ints(1, 6));
    pm.factors.push_back(AtomicMeasure::uniform_ints(1, 8));
    pm.validate();
    const auto& f0 = std::get<AtomicMeasure>(pm.factors[0]);
    const auto& f1 = std::get<AtomicMeasure>(pm.factors[1]);
    for (int trial = 0; trial < 20; ++trial) {
        Rational lo0(static_cast<long>(rng.index(6))), hi0 = lo0 + static_cast<long>(rng.index(4));
        Rational lo1(static_cast<long>(rng.index(8))), hi1 = lo1 + static_cast<long>(rng.index(5));
        auto in0 = [&](const Point& p) { return p[0] >= lo0 && p[0] <= hi0; };
        auto in1 = [&](const Point& p) { return p[0] >= lo1 && p[0] <= hi1; };
        // joint mass by brute force over the product support
        Rational joint(0);
        for (std::size_t i = 0; i < f0.size(); ++i)
            for (std::size_t j = 0; j < f1.size(); ++j)
                if (in0(f0.points[i]) && in1(f1.points[j])) joint += f0.weights[i] * f1.weights[j];
        CHECK(joint == f0.mass_of(in0) * f1.mass_of(in1));
    }
}
