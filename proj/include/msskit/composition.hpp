// The *-composition law, factorization by divisor scan, factor trees and the
// two shape recognisers for composite sequences.

#ifndef MSSKIT_COMPOSITION_HPP
#define MSSKIT_COMPOSITION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msskit/structure.hpp"
#include "msskit/symbolic.hpp"

namespace msskit {

class ShapeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "shape"; }
};

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

/// Parity of the number of Rs.
inline Parity r_parity(const Sequence& seq) {
    std::size_t n = 0;
    for (Symbol s : seq.symbols()) n += s == Symbol::R ? 1 : 0;
    return n % 2 == 0 ? Parity::Even : Parity::Odd;
}

struct Factorization {
    Sequence oh;
    Sequence os;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// O_h * O_s = Q y_1 Q y_2 ... Q y_{s-1} Q C, Q = O_h without C, the y_i
/// flipped when O_h has odd R-parity.
inline Sequence compose(const Sequence& oh, const Sequence& os) {
    const WordView q = oh.body();
    const bool odd = r_parity(oh) == Parity::Odd;
    Word out;
    out.reserve(oh.size() * os.size());
    for (Symbol y : os.body()) {
        out.insert(out.end(), q.begin(), q.end());
        out.push_back(odd ? flip(y) : y);
    }
    out.insert(out.end(), q.begin(), q.end());
    out.push_back(Symbol::C);
    return Sequence(std::move(out));
}

namespace detail {

inline void require_mss(const Sequence& seq, const char* what) {
    if (!is_mss(seq)) throw NotMss(std::string(what) + ": " + seq.str() + " is not an MSS-sequence");
}

// Splits seq as Q z_1 ... Q C with |Q| = h - 1; both factors must be MSS.
inline std::optional<Factorization> split_at(const Sequence& seq, std::size_t h) {
    const std::size_t p = seq.size();
    const std::size_t s = p / h;
    const WordView w = seq.symbols();
    const WordView q = w.first(h - 1);
    Word ys;
    for (std::size_t i = 0; i < s; ++i) {
        const WordView block = w.subspan(i * h, h - 1);
        if (!std::equal(block.begin(), block.end(), q.begin())) return std::nullopt;
        if (i + 1 < s) ys.push_back(w[i * h + h - 1]);
    }
    Word oh_word(q.begin(), q.end());
    oh_word.push_back(Symbol::C);
    Sequence oh(std::move(oh_word));
    if (r_parity(oh) == Parity::Odd)
        for (auto& y : ys) y = flip(y);
    ys.push_back(Symbol::C);
    Sequence os(std::move(ys));
    if (!is_mss(oh) || !is_mss(os)) return std::nullopt;
    return Factorization{std::move(oh), std::move(os)};
}

inline std::vector<std::size_t> proper_factors(std::size_t p) {
    std::vector<std::size_t> out;
    for (std::size_t h = 2; h < p; ++h)
        if (p % h == 0) out.push_back(h);
    return out;
}

}  // namespace detail

/// Every valid (O_h, O_s) with compose(O_h, O_s) == seq, by increasing |O_h|.
inline std::vector<Factorization> all_factorizations(const Sequence& seq) {
    detail::require_mss(seq, "all_factorizations");
    std::vector<Factorization> out;
    for (std::size_t h : detail::proper_factors(seq.size()))
        if (auto f = detail::split_at(seq, h)) out.push_back(std::move(*f));
    return out;
}

/// The factorization with the smallest |O_h|, or nullopt for a primary sequence.
inline std::optional<Factorization> factor_once(const Sequence& seq) {
    detail::require_mss(seq, "factor_once");
    for (std::size_t h : detail::proper_factors(seq.size()))
        if (auto f = detail::split_at(seq, h)) return f;
    return std::nullopt;
}

inline bool is_primary(const Sequence& seq) { return !factor_once(seq).has_value(); }

struct FactorTree {
    Sequence node;
    std::vector<FactorTree> children;  // empty, or {O_h, O_s}

    bool is_leaf() const noexcept { return children.empty(); }
};

inline FactorTree factor_tree(const Sequence& seq) {
    auto f = factor_once(seq);
    if (!f) return FactorTree{seq, {}};
    FactorTree t{seq, {}};
    t.children.push_back(factor_tree(f->oh));
    t.children.push_back(factor_tree(f->os));
    return t;
}

/// Primary leaves, left to right.
inline std::vector<Sequence> leaves(const FactorTree& t) {
    if (t.is_leaf()) return {t.node};
    std::vector<Sequence> out;
    for (const auto& c : t.children) {
        auto sub = leaves(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

/// All n_i = 1, r >= 2, S_i = S_r z_i for i < r, with (z_1, z_2) = (L, R)
/// when O_h = RL^q S_r C has odd R-parity and (R, L) when even, and S_r not
/// ending in RL^{q-1}. Anything that does not decompose is false.
inline bool check_thm8_shape(const Sequence& seq) {
    if (seq.size() < 2 || !seq.starts_with_r() || !check_lemma1(seq)) return false;
    const BlockForm bf = block_decompose(seq);
    const std::size_t r = bf.runs.size();
    if (bf.q == 0 || r < 2) return false;
    for (const auto& run : bf.runs)
        if (run.count != 1) return false;

    const Word& sr = bf.runs.back().tail;
    Word ending{Symbol::R};
    ending.insert(ending.end(), bf.q - 1, Symbol::L);
    if (sr.size() >= ending.size() && std::equal(ending.begin(), ending.end(), sr.end() - ending.size()))
        return false;

    Word z;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        const Word& si = bf.runs[i].tail;
        if (si.size() != sr.size() + 1 || !std::equal(sr.begin(), sr.end(), si.begin())) return false;
        z.push_back(si.back());
    }

    Word oh{Symbol::R};
    oh.insert(oh.end(), bf.q, Symbol::L);
    oh.insert(oh.end(), sr.begin(), sr.end());
    oh.push_back(Symbol::C);
    const bool odd = r_parity(Sequence(std::move(oh))) == Parity::Odd;
    const Symbol z1 = odd ? Symbol::L : Symbol::R;
    if (z[0] != z1) return false;
    if (z.size() >= 2 && z[1] != flip(z1)) return false;
    return true;
}

/// P = RL^q (RL^{q-1}R)^{n_1} (RL^q)^{m_1} ... (RL^{q-1}R)^{n_r} (RL^q)^{m_r}
/// RL^{q-1}C with m_r possibly 0 gives O_h = RL^{q-1}C and the recovered O_s.
/// nullopt when the pattern does not match; ShapeError when n_i > n_1.
inline std::optional<Factorization> check_thm9_shape(const Sequence& seq) {
    if (seq.size() < 2 || !seq.starts_with_r()) return std::nullopt;
    const std::size_t q = leading_l_run(seq);
    const std::size_t p = seq.size();
    const std::size_t h = q + 1;
    if (q == 0 || p % h != 0 || p / h < 3) return std::nullopt;

    // Chunks between the leading RL^q and the trailing RL^{q-1}C.
    std::vector<bool> is_a;
    for (std::size_t at = h; at + h < p; at += h) {
        if (seq[at] != Symbol::R) return std::nullopt;
        for (std::size_t i = 1; i < q; ++i)
            if (seq[at + i] != Symbol::L) return std::nullopt;
        is_a.push_back(seq[at + q] == Symbol::R);
    }
    if (seq[p - h] != Symbol::R) return std::nullopt;
    for (std::size_t i = 1; i < q; ++i)
        if (seq[p - h + i] != Symbol::L) return std::nullopt;
    if (is_a.empty() || !is_a.front()) return std::nullopt;

    std::vector<std::size_t> a_runs;
    for (std::size_t i = 0; i < is_a.size(); ++i)
        if (is_a[i] && (i == 0 || !is_a[i - 1])) a_runs.push_back(1);
        else if (is_a[i]) ++a_runs.back();
    for (std::size_t n : a_runs)
        if (n > a_runs.front())
            throw ShapeError("A-run of length " + std::to_string(n) + " exceeds n_1 = " +
                             std::to_string(a_runs.front()) + " in " + seq.str());

    Word oh{Symbol::R};
    oh.insert(oh.end(), q - 1, Symbol::L);
    oh.push_back(Symbol::C);
    Word os{Symbol::R};
    for (bool a : is_a) os.push_back(a ? Symbol::L : Symbol::R);
    os.push_back(Symbol::C);
    return Factorization{Sequence(std::move(oh)), Sequence(std::move(os))};
}

}  // namespace msskit

#endif  // MSSKIT_COMPOSITION_HPP
