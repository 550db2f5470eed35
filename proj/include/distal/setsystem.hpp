#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "measure.hpp"
#include "relation.hpp"
#include "rng.hpp"

namespace distal {

using Bitset = boost::dynamic_bitset<>;

// Finite set system over an abstract ground set.
struct SetSystem {
    std::size_t ground_size = 0;
    std::vector<Bitset> sets;

    void validate() const {
        for (const auto& s : sets)
            if (s.size() != ground_size) throw input_error("set system: set/ground size mismatch");
    }
};

// Traces phi(ground, b) for b in params; the generator form of a set system.
inline SetSystem build_traces(const Relation& rel, const std::vector<Point>& ground,
                              const std::vector<Point>& params) {
    SetSystem sys;
    sys.ground_size = ground.size();
    sys.sets.reserve(params.size());
    for (const auto& b : params) {
        Bitset s(ground.size());
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (rel.evaluate(ground[i], b)) s.set(i);
        sys.sets.push_back(std::move(s));
    }
    return sys;
}

namespace detail {

inline bool subset_shattered(const SetSystem& sys, const std::vector<std::size_t>& subset) {
    const std::size_t k = subset.size();
    if (k == 0) return !sys.sets.empty();
    if (k > 31) throw input_error("shattering test beyond 31 elements");
    std::vector<bool> seen(std::size_t(1) << k, false);
    std::size_t found = 0;
    for (const auto& s : sys.sets) {
        std::size_t mask = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (s.test(subset[j])) mask |= std::size_t(1) << j;
        if (!seen[mask]) {
            seen[mask] = true;
            if (++found == (std::size_t(1) << k)) return true;
        }
    }
    return false;
}

}  // namespace detail

// Exact VC-dimension by exhaustive shattering search, increasing subset size
// with hereditary pruning (a set can only be shattered if all its subsets
// are). Feasible for |ground| up to ~25.
inline int vc_dimension(const SetSystem& sys) {
    if (sys.ground_size == 0) throw input_error("vc_dimension: empty ground set");
    if (sys.sets.empty()) return 0;
    std::set<std::vector<std::size_t>> frontier{{}};  // shattered subsets of current size
    int dim = 0;
    for (std::size_t k = 1; k <= sys.ground_size; ++k) {
        std::set<std::vector<std::size_t>> next;
        for (const auto& base : frontier) {
            std::size_t start = base.empty() ? 0 : base.back() + 1;
            for (std::size_t e = start; e < sys.ground_size; ++e) {
                std::vector<std::size_t> cand = base;
                cand.push_back(e);
                bool all_sub_shattered = true;
                if (k >= 2) {
                    for (std::size_t drop = 0; drop + 1 < cand.size() && all_sub_shattered; ++drop) {
                        std::vector<std::size_t> sub;
                        for (std::size_t j = 0; j < cand.size(); ++j)
                            if (j != drop) sub.push_back(cand[j]);
                        all_sub_shattered = frontier.count(sub) > 0;
                    }
                }
                if (all_sub_shattered && detail::subset_shattered(sys, cand))
                    next.insert(std::move(cand));
            }
        }
        if (next.empty()) break;
        dim = static_cast<int>(k);
        frontier = std::move(next);
    }
    return dim;
}

// pi_F(n): maximum number of distinct traces over an n-element subset.
inline std::size_t shatter_function(const SetSystem& sys, std::size_t n) {
    if (n > sys.ground_size) throw input_error("shatter_function: n exceeds ground size");
    if (n == 0) return sys.sets.empty() ? 0 : 1;
    std::vector<std::size_t> subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = i;
    std::size_t best = 0;
    while (true) {
        std::set<std::vector<bool>> traces;
        for (const auto& s : sys.sets) {
            std::vector<bool> t(n);
            for (std::size_t j = 0; j < n; ++j) t[j] = s.test(subset[j]);
            traces.insert(std::move(t));
        }
        best = std::max(best, traces.size());
        // next combination
        std::size_t i = n;
        while (i > 0 && subset[i - 1] == sys.ground_size - n + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < n; ++j) subset[j] = subset[j - 1] + 1;
    }
    return best;
}

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r(1);
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<long>(n - i);
        r /= static_cast<long>(i + 1);
    }
    return r;
}

// Fact: pi_F(n) <= sum_{i<=d} C(n,i) for all n >= d.
inline bool sauer_shelah_holds(const SetSystem& sys) {
    int d = vc_dimension(sys);
    for (std::size_t n = static_cast<std::size_t>(d); n <= sys.ground_size; ++n) {
        Integer bound(0);
        for (int i = 0; i <= d; ++i) bound += binomial(n, static_cast<std::size_t>(i));
        if (Integer(static_cast<unsigned long>(shatter_function(sys, n))) > bound) return false;
    }
    return true;
}

struct VcConfig {
    Rational net_constant = Rational(16);
    int retry_cap = 12;
    int vc_exact_ground_cap = 25;  // exhaustive VC search feasibility bound
};

struct SampleReport {
    std::vector<std::size_t> elements;  // multiset for approximations, subset for nets
    int vc_dim_used = 0;
    bool vc_dim_exact = true;
    int attempts = 0;
    bool greedy_fallback = false;
    bool verified = false;
};

namespace detail {

inline int estimate_vc(const SetSystem& sys, const VcConfig& cfg, Rng rng) {
    if (static_cast<int>(sys.ground_size) <= cfg.vc_exact_ground_cap &&
        sys.sets.size() <= 4000)
        return vc_dimension(sys);
    // Lower-bound estimate: exact VC of a few random ground restrictions.
    int best = 1;
    for (int t = 0; t < 3; ++t) {
        std::vector<std::size_t> pick;
        std::set<std::size_t> chosen;
        while (chosen.size() < 18 && chosen.size() < sys.ground_size)
            chosen.insert(rng.index(sys.ground_size));
        pick.assign(chosen.begin(), chosen.end());
        SetSystem restricted;
        restricted.ground_size = pick.size();
        std::set<Bitset> dedup;
        for (const auto& s : sys.sets) {
            Bitset t2(pick.size());
            for (std::size_t j = 0; j < pick.size(); ++j)
                if (s.test(pick[j])) t2.set(j);
            dedup.insert(std::move(t2));
        }
        restricted.sets.assign(dedup.begin(), dedup.end());
        best = std::max(best, vc_dimension(restricted));
    }
    return best;
}

inline std::vector<Rational> set_masses(const SetSystem& sys, const std::vector<Rational>& w) {
    std::vector<Rational> masses(sys.sets.size(), Rational(0));
    for (std::size_t si = 0; si < sys.sets.size(); ++si)
        for (std::size_t i = sys.sets[si].find_first(); i != Bitset::npos;
             i = sys.sets[si].find_next(i))
            masses[si] += w[i];
    return masses;
}

}  // namespace detail

// A multiset sample whose empirical averages eps-approximate the measure on
// every set of the system. Existence comes from the VC theorem; the output is
// made unconditional by exhaustive verification with doubling retries.
inline SampleReport epsilon_approximation(const std::vector<Rational>& weights,
                                          const SetSystem& sys, const Rational& eps, Rng rng,
                                          const VcConfig& cfg = {}) {
    if (weights.size() != sys.ground_size) throw input_error("weights/ground mismatch");
    if (eps <= 0 || eps >= 1) throw input_error("epsilon must lie in (0,1)");
    SampleReport rep;
    rep.vc_dim_exact = static_cast<int>(sys.ground_size) <= cfg.vc_exact_ground_cap &&
                       sys.sets.size() <= 4000;
    rep.vc_dim_used = detail::estimate_vc(sys, cfg, rng.derive(0x5CDEADu));
    auto masses = detail::set_masses(sys, weights);

    std::size_t n = std::max<std::size_t>(
        1, static_cast<std::size_t>(distal::ceil(Rational(rep.vc_dim_used) / eps)));
    for (int attempt = 0; attempt < cfg.retry_cap; ++attempt) {
        if (!within_approx_budget(n, cfg.net_constant, rep.vc_dim_used, eps)) break;
        Rng stream = rng.derive(1000 + attempt);
        std::vector<std::size_t> sample(n);
        std::vector<std::size_t> multiplicity(sys.ground_size, 0);
        for (std::size_t i = 0; i < n; ++i) {
            sample[i] = stream.weighted_index(weights);
            ++multiplicity[sample[i]];
        }
        bool ok = true;
        for (std::size_t si = 0; si < sys.sets.size() && ok; ++si) {
            std::size_t hits = 0;
            for (std::size_t i = sys.sets[si].find_first(); i != Bitset::npos;
                 i = sys.sets[si].find_next(i))
                hits += multiplicity[i];
            Rational avg(static_cast<unsigned long>(hits), static_cast<unsigned long>(n));
            ok = distal::abs(masses[si] - avg) <= eps;
        }
        rep.attempts = attempt + 1;
        if (ok) {
            rep.elements = std::move(sample);
            rep.verified = true;
            return rep;
        }
        n *= 2;
    }
    throw input_error("epsilon_approximation: retry cap exhausted (net constant too small?)");
}

// A subset meeting every set of mass > eps. Sampling with verification, then
// a deterministic greedy hitting-set fallback.
inline SampleReport epsilon_net(const std::vector<Rational>& weights, const SetSystem& sys,
                                const Rational& eps, Rng rng, const VcConfig& cfg = {}) {
    if (weights.size() != sys.ground_size) throw input_error("weights/ground mismatch");
    if (eps <= 0 || eps >= 1) throw input_error("epsilon must lie in (0,1)");
    SampleReport rep;
    rep.vc_dim_exact = static_cast<int>(sys.ground_size) <= cfg.vc_exact_ground_cap &&
                       sys.sets.size() <= 4000;
    rep.vc_dim_used = detail::estimate_vc(sys, cfg, rng.derive(0x5CDEADu));
    auto masses = detail::set_masses(sys, weights);
    std::vector<std::size_t> heavy;
    for (std::size_t si = 0; si < sys.sets.size(); ++si)
        if (masses[si] > eps) heavy.push_back(si);
    if (heavy.empty()) {
        rep.verified = true;
        return rep;  // empty net is valid
    }

    auto verify = [&](const std::vector<std::size_t>& net) {
        Bitset nb(sys.ground_size);
        for (auto i : net) nb.set(i);
        for (auto si : heavy)
            if (!sys.sets[si].intersects(nb)) return false;
        return true;
    };

    std::size_t n = std::max<std::size_t>(
        2, static_cast<std::size_t>(distal::ceil(Rational(rep.vc_dim_used) / eps)));
    for (int attempt = 0; attempt < cfg.retry_cap; ++attempt) {
        if (!within_approx_budget(n, cfg.net_constant, rep.vc_dim_used, eps)) break;
        Rng stream = rng.derive(2000 + attempt);
        std::set<std::size_t> picked;
        for (std::size_t i = 0; i < n; ++i) picked.insert(stream.weighted_index(weights));
        std::vector<std::size_t> net(picked.begin(), picked.end());
        rep.attempts = attempt + 1;
        if (verify(net)) {
            rep.elements = std::move(net);
            rep.verified = true;
            return rep;
        }
        n *= 2;
    }

    // Greedy: repeatedly take the element covering the most uncovered heavy
    // sets (lowest index on ties).
    rep.greedy_fallback = true;
    std::vector<bool> covered(heavy.size(), false);
    std::vector<std::size_t> net;
    std::size_t remaining = heavy.size();
    while (remaining > 0) {
        std::size_t best_elem = 0, best_cover = 0;
        for (std::size_t e = 0; e < sys.ground_size; ++e) {
            std::size_t c = 0;
            for (std::size_t hi = 0; hi < heavy.size(); ++hi)
                if (!covered[hi] && sys.sets[heavy[hi]].test(e)) ++c;
            if (c > best_cover) {
                best_cover = c;
                best_elem = e;
            }
        }
        if (best_cover == 0)
            throw input_error("epsilon_net: heavy set with empty trace");  // cannot be hit
        net.push_back(best_elem);
        for (std::size_t hi = 0; hi < heavy.size(); ++hi)
            if (!covered[hi] && sys.sets[heavy[hi]].test(best_elem)) {
                covered[hi] = true;
                --remaining;
            }
    }
    std::sort(net.begin(), net.end());
    if (!within_approx_budget(net.size(), cfg.net_constant, rep.vc_dim_used, eps))
        throw input_error("epsilon_net: greedy fallback exceeded the size budget");
    if (!verify(net)) throw theory_error("epsilon_net: greedy fallback failed verification");
    rep.elements = std::move(net);
    rep.verified = true;
    return rep;
}

}  // namespace distal
