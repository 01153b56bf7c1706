// Divisors, the closed-form counts of S-blocks and of composite sequences,
// and their enumerated counterparts.

#ifndef MSSKIT_COUNTING_HPP
#define MSSKIT_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "msskit/composition.hpp"
#include "msskit/generators.hpp"
#include "msskit/structure.hpp"

namespace msskit {

using BigInt = boost::multiprecision::cpp_int;

struct DivisorSet {
    std::size_t p = 0;
    std::vector<std::size_t> divisors;  // ascending
};

inline DivisorSet divisors(std::size_t p) {
    if (p == 0) throw std::invalid_argument("divisors: p must be positive");
    DivisorSet out{p, {}};
    std::vector<std::size_t> high;
    for (std::size_t d = 1; d * d <= p; ++d) {
        if (p % d != 0) continue;
        out.divisors.push_back(d);
        if (d * d != p) high.push_back(p / d);
    }
    out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
    return out;
}

/// Divisors d with 1 < d < p.
inline DivisorSet proper_divisors(std::size_t p) {
    if (p < 2) throw std::invalid_argument("proper_divisors: p must be >= 2");
    DivisorSet all = divisors(p);
    DivisorSet out{p, {}};
    for (std::size_t d : all.divisors)
        if (d != 1 && d != p) out.divisors.push_back(d);
    return out;
}

/// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

/// |S(m, qm1)| = sum_{k=0}^{m-1} sum_r C(k+1, r) C(m-1-rq, k) (-1)^r with
/// q = qm1 + 1; 0 for m = 0.
inline BigInt card_S(std::size_t m, std::size_t qm1) {
    const auto mm = static_cast<std::int64_t>(m);
    const auto q = static_cast<std::int64_t>(qm1) + 1;
    BigInt total = 0;
    for (std::int64_t k = 0; k <= mm - 1; ++k)
        for (std::int64_t r = 0; r <= k + 1; ++r) {
            BigInt term = binomial(k + 1, r) * binomial(mm - 1 - r * q, k);
            if (r % 2 == 0) total += term;
            else total -= term;
        }
    return total;
}

/// Composites of the single-group shape RL^q S C: |D_p| - 2.
inline std::size_t count_nonprimary_single_block(std::size_t p) {
    if (p < 2) throw std::invalid_argument("count_nonprimary_single_block: p must be >= 2");
    return divisors(p).divisors.size() - 2;
}

/// sum over proper divisors d and q = 1..d-2 of |S(d-q-2, q-1)|, where the
/// empty block (d = q + 2, O_d = RL^{d-2}C) counts once.
inline BigInt count_nonprimary_repeated(std::size_t p) {
    if (p < 4) throw std::invalid_argument("count_nonprimary_repeated: p must be >= 4");
    BigInt total = 0;
    for (std::size_t d : proper_divisors(p).divisors)
        for (std::size_t q = 1; q + 2 <= d; ++q) {
            const std::size_t m = d - q - 2;
            total += m == 0 ? BigInt(1) : card_S(m, q - 1);
        }
    return total;
}

struct CountReport {
    std::size_t p = 0;
    BigInt formula_value;
    std::optional<BigInt> enumerated_value;

    bool ok() const { return !enumerated_value || *enumerated_value == formula_value; }
};

/// True for RL^q S C with a single (RL^q)^1 group.
inline bool is_single_group(const Sequence& seq) {
    if (seq.size() < 2 || !seq.starts_with_r() || !check_lemma1(seq)) return false;
    const BlockForm bf = block_decompose(seq);
    return bf.runs.size() == 1 && bf.runs.front().count == 1;
}

/// Single-group MSS-sequences of period p that factor.
inline std::size_t enumerate_nonprimary_single_block(std::size_t p) {
    std::size_t n = 0;
    for (const auto& s : enumerate_mss_bruteforce(p).sequences)
        if (is_single_group(s) && !is_primary(s)) ++n;
    return n;
}

/// Distinct O_d * O_s over proper divisors d of p, O_d a single-group
/// MSS-sequence of period d with q >= 1, O_s any MSS-sequence of period p/d.
inline std::size_t enumerate_nonprimary_repeated(std::size_t p) {
    std::set<Sequence> found;
    for (std::size_t d : proper_divisors(p).divisors) {
        const auto outer = enumerate_mss_bruteforce(p / d).sequences;
        for (const auto& od : enumerate_mss_bruteforce(d).sequences) {
            if (!is_single_group(od) || leading_l_run(od) == 0) continue;
            for (const auto& os : outer) found.insert(compose(od, os));
        }
    }
    return found.size();
}

inline CountReport single_block_report(std::size_t p, bool verify) {
    CountReport r{p, count_nonprimary_single_block(p), std::nullopt};
    if (verify) r.enumerated_value = BigInt(enumerate_nonprimary_single_block(p));
    return r;
}

inline CountReport repeated_report(std::size_t p, bool verify) {
    CountReport r{p, count_nonprimary_repeated(p), std::nullopt};
    if (verify) r.enumerated_value = BigInt(enumerate_nonprimary_repeated(p));
    return r;
}

inline CountReport sblock_report(std::size_t m, std::size_t qm1, bool verify) {
    CountReport r{m, card_S(m, qm1), std::nullopt};
    if (verify) r.enumerated_value = BigInt(enumerate_S({m, qm1}).size());
    return r;
}

}  // namespace msskit

#endif  // MSSKIT_COUNTING_HPP
