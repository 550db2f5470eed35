#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace distal {

using Integer = boost::multiprecision::cpp_int;

// Exact rational carrier for all measures, weights, densities and defects.
// cpp_rational keeps the canonical form (gcd 1, positive denominator) on
// every operation.
using Rational = boost::multiprecision::cpp_rational;

// Input data was malformed (bad JSON, schema violation, dimension mismatch,
// precondition failure attributable to the caller). CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An inequality the theory guarantees failed to hold. Always a bug.
// CLI exit code 1.
struct theory_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define DISTAL_CHECK(cond, msg)                                        \
    do {                                                               \
        if (!(cond)) throw ::distal::theory_error(std::string(msg));   \
    } while (0)

inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "num/den" or a bare integer "num".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw input_error("cannot parse rational '" + s + "': " + e.what());
    }
}

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer ceil(const Rational& r) { return -floor(Rational(-r)); }

inline Rational pow(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    for (; e; e >>= 1, b *= b)
        if (e & 1) acc *= b;
    return acc;
}

inline Integer ipow(const Integer& base, unsigned e) {
    Integer acc(1), b = base;
    for (; e; e >>= 1, b *= b)
        if (e & 1) acc *= b;
    return acc;
}

// Exact comparison m >= c * sqrt(s) for m, c, s >= 0.
inline bool geq_scaled_sqrt(const Rational& m, const Rational& c, const Rational& s) {
    if (m < 0) throw input_error("geq_scaled_sqrt: negative lhs");
    return m * m >= c * c * s;
}

// Exact comparison m <= c * sqrt(s) for m, c, s >= 0.
inline bool leq_scaled_sqrt(const Rational& m, const Rational& c, const Rational& s) {
    if (m < 0) throw input_error("leq_scaled_sqrt: negative lhs");
    return m * m <= c * c * s;
}

// Exact test  n <= K * r^2 * log2(2r)  via  2^(n*q) <= (2r)^p  where K*r^2 = p/q.
// Used for the cutting size budget; all quantities stay integral.
inline bool within_r2log_budget(std::size_t n, const Rational& K, const Rational& r) {
    Rational kr2 = K * r * r;
    Integer p = numerator(kr2), q = denominator(kr2);
    if (p <= 0) return false;
    Rational two_r = 2 * r;
    // 2^(n*q) <= (2r)^p  <=>  (2^(n*q)) * den(2r)^p <= num(2r)^p
    Integer lhs = ipow(Integer(2), static_cast<unsigned>(n * static_cast<std::size_t>(q)))
                  * ipow(denominator(two_r), static_cast<unsigned>(p));
    Integer rhs = ipow(numerator(two_r), static_cast<unsigned>(p));
    return lhs <= rhs;
}

// Exact test  n <= C * d * (1/eps)^2 * log2(2/eps), same big-integer trick.
inline bool within_approx_budget(std::size_t n, const Rational& C, int d, const Rational& eps) {
    Rational cd = C * d / (eps * eps);
    Integer p = numerator(cd), q = denominator(cd);
    if (p <= 0) return false;
    Rational two_over_eps = 2 / eps;
    Integer lhs = ipow(Integer(2), static_cast<unsigned>(n * static_cast<std::size_t>(q)))
                  * ipow(denominator(two_over_eps), static_cast<unsigned>(p));
    Integer rhs = ipow(numerator(two_over_eps), static_cast<unsigned>(p));
    return lhs <= rhs;
}

}  // namespace distal
