#include "catch_amalgamated.hpp"

#include "distal/setsystem.hpp"

using namespace distal;

namespace {

Point pt1(long v) { return Point{Rational(v)}; }

std::vector<Point> int_points(long lo, long hi) {
    std::vector<Point> out;
    for (long v = lo; v <= hi; ++v) out.push_back(pt1(v));
    return out;
}

// Independent brute-force shattering search, kept deliberately naive.
int brute_vc(const SetSystem& sys) {
    int best = sys.sets.empty() ? 0 : 0;
    std::size_t n = sys.ground_size;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) subset.push_back(i);
        std::set<std::size_t> traces;
        for (const auto& s : sys.sets) {
            std::size_t t = 0;
            for (std::size_t j = 0; j < subset.size(); ++j)
                if (s.test(subset[j])) t |= std::size_t(1) << j;
            traces.insert(t);
        }
        if (traces.size() == (std::size_t(1) << subset.size()))
            best = std::max(best, static_cast<int>(subset.size()));
    }
    return best;
}

SetSystem interval_traces(long lo, long hi) {
    // all integer-endpoint closed intervals traced on {lo..hi}
    SetSystem sys;
    auto ground = int_points(lo, hi);
    sys.ground_size = ground.size();
    for (long a = lo; a <= hi; ++a)
        for (long b = a; b <= hi; ++b) {
            Bitset s(sys.ground_size);
            for (std::size_t i = 0; i < ground.size(); ++i)
                if (ground[i][0] >= a && ground[i][0] <= b) s.set(i);
            sys.sets.push_back(s);
        }
    Bitset empty(sys.ground_size);
    sys.sets.push_back(empty);
    return sys;
}

}  // namespace

TEST_CASE("vc dimension: half-lines are 1, intervals are 2") {
    // half-lines {x > b} are exactly the traces of x>b, i.e. complements of
    // x<y traces; build via relation traces with y ranging over thresholds.
    Relation lt = rel_x_less_y();
    auto ground = int_points(1, 10);
    std::vector<Point> params;
    for (long b = 0; b <= 11; ++b) params.push_back(pt1(b));
    SetSystem halflines = build_traces(lt, ground, params);  // {x : x < b}
    CHECK(vc_dimension(halflines) == 1);
    CHECK(brute_vc(halflines) == 1);

    SetSystem intervals = interval_traces(1, 10);
    CHECK(vc_dimension(intervals) == 2);
    CHECK(brute_vc(intervals) == 2);
}

TEST_CASE("vc dimension: half-planes on 6 points in general position give 3") {
    Relation above = rel_plane_above();
    // hexagon-ish rational points in general position
    std::vector<Point> ground = {
        {Rational(4), Rational(0)},  {Rational(2), Rational(3)},  {Rational(-2), Rational(3)},
        {Rational(-4), Rational(1)}, {Rational(-2), Rational(-3)}, {Rational(2), Rational(-4)}};
    // lines through every pair, nudged to both sides, both orientations
    std::vector<Point> params;
    for (std::size_t i = 0; i < ground.size(); ++i)
        for (std::size_t j = i + 1; j < ground.size(); ++j) {
            const auto& p = ground[i];
            const auto& q = ground[j];
            Rational a = q[1] - p[1], b = p[0] - q[0];
            Rational c = -(a * p[0] + b * p[1]);
            for (int side = -1; side <= 1; ++side)
                for (int orient : {1, -1}) {
                    Rational cc = c + Rational(side, 100);
                    params.push_back({a * orient, b * orient, cc * orient});
                }
        }
    SetSystem halfplanes = build_traces(above, ground, params);
    CHECK(vc_dimension(halfplanes) == 3);
    CHECK(brute_vc(halfplanes) == 3);
}

TEST_CASE("shatter function examples") {
    Relation lt = rel_x_less_y();
    auto ground = int_points(1, 10);
    std::vector<Point> params;
    for (long b = 0; b <= 11; ++b) params.push_back(pt1(b));
    SetSystem halflines = build_traces(lt, ground, params);
    CHECK(shatter_function(halflines, 3) == 4);  // n+1 prefixes

    SetSystem intervals = interval_traces(1, 10);
    CHECK(shatter_function(intervals, 3) == 7);  // C(3,2)+3+1

    CHECK(shatter_function(intervals, 0) == 1);
}

TEST_CASE("sauer-shelah bound holds exhaustively on small systems") {
    CHECK(sauer_shelah_holds(interval_traces(1, 10)));

    Relation lt = rel_x_less_y();
    auto ground = int_points(1, 12);
    std::vector<Point> params;
    for (long b = 0; b <= 13; ++b) params.push_back(pt1(b));
    CHECK(sauer_shelah_holds(build_traces(lt, ground, params)));

    Rng rng(31u);
    for (int trial = 0; trial < 10; ++trial) {
        SetSystem sys;
        sys.ground_size = 8 + rng.index(5);
        for (int s = 0; s < 20; ++s) {
            Bitset b(sys.ground_size);
            for (std::size_t i = 0; i < sys.ground_size; ++i)
                if (rng.index(2)) b.set(i);
            sys.sets.push_back(b);
        }
        CHECK(sauer_shelah_holds(sys));
    }
}

TEST_CASE("epsilon approximation verified on prefix sets") {
    auto ground = int_points(1, 10);
    std::vector<Rational> weights(10, Rational(1, 10));
    Relation lt = rel_x_less_y();
    std::vector<Point> params;
    for (long b = 1; b <= 11; ++b) params.push_back(pt1(b));
    SetSystem prefixes = build_traces(lt, ground, params);

    auto rep = epsilon_approximation(weights, prefixes, Rational(1, 5), Rng(42));
    CHECK(rep.verified);
    REQUIRE(!rep.elements.empty());
    // independent re-verification
    for (const auto& s : prefixes.sets) {
        std::size_t hits = 0;
        Rational mass(0);
        for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
            mass += weights[i];
        for (auto e : rep.elements)
            if (s.test(e)) ++hits;
        Rational avg(static_cast<unsigned long>(hits),
                     static_cast<unsigned long>(rep.elements.size()));
        CHECK(distal::abs(mass - avg) <= Rational(1, 5));
    }
}

TEST_CASE("epsilon approximation trivial cases") {
    // system {empty, ground}: any single point matches 0 and 1 exactly
    SetSystem sys;
    sys.ground_size = 5;
    sys.sets.emplace_back(5);
    Bitset full(5);
    full.set();
    sys.sets.push_back(full);
    std::vector<Rational> w(5, Rational(1, 5));
    auto rep = epsilon_approximation(w, sys, Rational(1, 2), Rng(1));
    CHECK(rep.verified);

    // all sets lighter than eps: a singleton sample suffices for eps close to 1
    SetSystem light;
    light.ground_size = 5;
    Bitset one(5);
    one.set(3);
    light.sets.push_back(one);
    auto rep2 = epsilon_approximation(w, light, Rational(9, 10), Rng(2));
    CHECK(rep2.verified);
}

TEST_CASE("epsilon net: middle point hits all 6-point intervals, trivial cases") {
    SetSystem sys;
    sys.ground_size = 10;  // ground {1..10}
    for (long a = 1; a + 5 <= 10; ++a) {
        Bitset s(10);
        for (long v = a; v < a + 6; ++v) s.set(static_cast<std::size_t>(v - 1));
        sys.sets.push_back(s);
    }
    std::vector<Rational> w(10, Rational(1, 10));
    auto rep = epsilon_net(w, sys, Rational(1, 2), Rng(7));
    CHECK(rep.verified);
    Bitset nb(10);
    for (auto e : rep.elements) nb.set(e);
    for (const auto& s : sys.sets) CHECK(s.intersects(nb));
    // every 6-point interval contains position 5 or 6 (0-based 4/5); the net
    // must contain at least one element in every set, verified above.

    // all sets of measure <= eps: empty net valid
    SetSystem light;
    light.ground_size = 10;
    Bitset two(10);
    two.set(0);
    two.set(1);
    light.sets.push_back(two);
    auto rep2 = epsilon_net(w, light, Rational(1, 2), Rng(8));
    CHECK(rep2.verified);
    CHECK(rep2.elements.empty());

    // ground of size 1
    SetSystem tiny;
    tiny.ground_size = 1;
    Bitset b1(1);
    b1.set(0);
    tiny.sets.push_back(b1);
    std::vector<Rational> w1{Rational(1)};
    auto rep3 = epsilon_net(w1, tiny, Rational(1, 2), Rng(9));
    CHECK(rep3.verified);
    REQUIRE(rep3.elements.size() == 1);
    CHECK(rep3.elements[0] == 0);
}

TEST_CASE("nets and approximations are deterministic given the seed") {
    SetSystem sys = interval_traces(1, 12);
    std::vector<Rational> w(12, Rational(1, 12));
    auto a1 = epsilon_approximation(w, sys, Rational(1, 4), Rng(123));
    auto a2 = epsilon_approximation(w, sys, Rational(1, 4), Rng(123));
    CHECK(a1.elements == a2.elements);
    auto n1 = epsilon_net(w, sys, Rational(1, 4), Rng(123));
    auto n2 = epsilon_net(w, sys, Rational(1, 4), Rng(123));
    CHECK(n1.elements == n2.elements);
}
