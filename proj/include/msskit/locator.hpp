// Superstable parameters of the logistic family f_r(x) = r x (1 - x).
//
// Iteration runs in long double: in IEEE double the closest representable r
// for some period-7 sequences still leaves |f^7(1/2) - 1/2| above 1e-13.

#ifndef MSSKIT_LOCATOR_HPP
#define MSSKIT_LOCATOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "msskit/generators.hpp"
#include "msskit/symbolic.hpp"

namespace msskit {

class NotFound : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "not_found"; }
};

using Real = long double;

struct MapParam {
    Real r = 0;
};

inline constexpr Real kDeadBand = 1e-12L;
inline constexpr Real kTolerance = 1e-13L;
inline constexpr std::size_t kBisectionBudget = 200;

/// Symbols of f_r^i(1/2), i = 1..steps; C within eps of 1/2.
inline Word itinerary(MapParam m, std::size_t steps, Real eps = kDeadBand) {
    if (!(m.r > 0 && m.r <= 4)) throw std::invalid_argument("itinerary: r must lie in (0, 4]");
    Word out;
    out.reserve(steps);
    Real x = 0.5L;
    for (std::size_t i = 0; i < steps; ++i) {
        x = m.r * x * (1 - x);
        const Real d = x - 0.5L;
        out.push_back(std::fabs(d) <= eps ? Symbol::C : d > 0 ? Symbol::R : Symbol::L);
    }
    return out;
}

/// |f_r^steps(1/2) - 1/2|.
inline Real orbit_residual(Real r, std::size_t steps) {
    Real x = 0.5L;
    for (std::size_t i = 0; i < steps; ++i) x = r * x * (1 - x);
    return std::fabs(x - 0.5L);
}

/// (f_r^p)'(x_p) along x_i = f_r^i(1/2), i = 1..p.
inline Real cycle_multiplier(Real r, std::size_t p) {
    Real x = 0.5L;
    Real m = 1;
    for (std::size_t i = 0; i < p; ++i) {
        x = r * x * (1 - x);
        m *= r * (1 - 2 * x);
    }
    return m;
}

struct LocatedSequence {
    Sequence sequence;
    Real r_star = 0;
    Real residual = 0;
    std::size_t iterations = 0;
    std::size_t dead_band_hits = 0;  // steps before p that fell within eps of 1/2
};

namespace detail {

// Exact itinerary (C only at exactly 1/2) and whether an earlier step
// landed in the dead band.
inline std::pair<Word, bool> probe(Real r, std::size_t p, Real eps) {
    Word out;
    out.reserve(p);
    bool hit = false;
    Real x = 0.5L;
    for (std::size_t i = 0; i < p; ++i) {
        x = r * x * (1 - x);
        const Real d = x - 0.5L;
        if (i + 1 < p && std::fabs(d) <= eps) hit = true;
        out.push_back(d == 0 ? Symbol::C : d > 0 ? Symbol::R : Symbol::L);
    }
    return {std::move(out), hit};
}

}  // namespace detail

/// Bisection on [3, 4] steered by the parity-lex comparison of the
/// p-step itinerary with the target. Throws NotFound when the result misses
/// the tolerance or the itinerary.
inline LocatedSequence locate(const Sequence& seq, Real tol = kTolerance) {
    if (!(tol > 0)) throw std::invalid_argument("locate: tol must be positive");
    if (seq.size() == 1) return {seq, 2.0L, 0.0L, 0, 0};
    if (!is_mss(seq)) throw NotMss("locate: " + seq.str() + " is not an MSS-sequence");

    const std::size_t p = seq.size();
    Real lo = 3, hi = 4;
    std::size_t it = 0, hits = 0;
    while (it < kBisectionBudget) {
        const Real mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        ++it;
        auto [word, hit] = detail::probe(mid, p, kDeadBand);
        if (hit) {
            ++hits;
            lo = mid;
            continue;
        }
        if (parity_lex_cmp(word, seq.symbols()) < 0) lo = mid;
        else hi = mid;
    }
    const Real e_lo = orbit_residual(lo, p), e_hi = orbit_residual(hi, p);
    const Real r = e_lo <= e_hi ? lo : hi;
    const Real residual = std::min(e_lo, e_hi);
    if (!(residual < tol))
        throw NotFound("locate: " + seq.str() + " residual " + std::to_string(static_cast<double>(residual)) +
                       " after " + std::to_string(it) + " bisection steps");
    const Word check = itinerary({r}, p, kDeadBand);
    if (!std::equal(check.begin(), check.end(), seq.symbols().begin()))
        throw NotFound("locate: itinerary at r = " + std::to_string(static_cast<double>(r)) + " is " +
                       to_string(check) + ", expected " + seq.str());
    return {seq, r, residual, it, hits};
}

struct OrderReport {
    std::size_t pmax = 0;
    bool ok = true;
    std::vector<LocatedSequence> located;  // parity-lex ascending
    Real min_gap = std::numeric_limits<Real>::infinity();
    Real max_residual = 0;
    std::string violation;  // first out-of-order pair, if any
};

/// Locates every MSS-sequence of period 2..pmax and checks that r* ascends
/// with the parity-lex order.
inline OrderReport verify_order(std::size_t pmax, Real tol = kTolerance) {
    if (pmax < 2 || pmax > 12) throw std::invalid_argument("verify_order: pmax must lie in 2..12");
    OrderReport rep;
    rep.pmax = pmax;
    std::vector<Sequence> all;
    for (std::size_t p = 2; p <= pmax; ++p) {
        auto e = enumerate_mss_bruteforce(p);
        all.insert(all.end(), e.sequences.begin(), e.sequences.end());
    }
    std::sort(all.begin(), all.end(), ParityLexLess{});
    for (const auto& s : all) {
        rep.located.push_back(locate(s, tol));
        rep.max_residual = std::max(rep.max_residual, rep.located.back().residual);
    }
    for (std::size_t i = 1; i < rep.located.size(); ++i) {
        const Real gap = rep.located[i].r_star - rep.located[i - 1].r_star;
        rep.min_gap = std::min(rep.min_gap, gap);
        if (gap <= 0 && rep.ok) {
            rep.ok = false;
            rep.violation = rep.located[i - 1].sequence.str() + " < " + rep.located[i].sequence.str() +
                            " but r* does not increase";
        }
    }
    return rep;
}

}  // namespace msskit

#endif  // MSSKIT_LOCATOR_HPP
