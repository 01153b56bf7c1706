// Block form (RL^q)^{n_1} S_1 ... (RL^q)^{n_r} S_r C and the structured MSS
// test that only inspects the shifts landing on an RL^q block.

#ifndef MSSKIT_STRUCTURE_HPP
#define MSSKIT_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msskit/symbolic.hpp"

namespace msskit {

class Lemma1Violation : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "lemma1_violation"; }
};

/// One (RL^q)^count S group.
struct BlockRun {
    std::size_t count = 1;
    Word tail;

    friend bool operator==(const BlockRun&, const BlockRun&) = default;
};

struct BlockForm {
    std::size_t q = 0;
    std::vector<BlockRun> runs;

    friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

/// Length of the L-run after the leading R.
inline std::size_t leading_l_run(const Sequence& seq) {
    std::size_t q = 0;
    while (q + 1 < seq.size() && seq[q + 1] == Symbol::L) ++q;
    return q;
}

inline std::size_t max_l_run(WordView w) {
    std::size_t best = 0, cur = 0;
    for (Symbol s : w) {
        cur = s == Symbol::L ? cur + 1 : 0;
        if (cur > best) best = cur;
    }
    return best;
}

namespace detail {

// 0-based index of the R preceding the first L-run longer than q.
inline std::optional<std::size_t> lemma1_offender(const Sequence& seq, std::size_t q) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] != Symbol::R) continue;
        std::size_t run = 0;
        while (i + 1 + run < seq.size() && seq[i + 1 + run] == Symbol::L) ++run;
        if (run > q) return i;
    }
    return std::nullopt;
}

inline void require_r_start(const Sequence& seq, const char* what) {
    if (seq.size() < 2 || !seq.starts_with_r())
        throw NotAdmissible(std::string(what) + ": expected a sequence of length >= 2 starting with R, got " +
                            seq.str());
}

}  // namespace detail

/// True iff no R is followed by more than q consecutive Ls.
inline bool check_lemma1(const Sequence& seq) {
    detail::require_r_start(seq, "check_lemma1");
    return !detail::lemma1_offender(seq, leading_l_run(seq)).has_value();
}

inline BlockForm block_decompose(const Sequence& seq) {
    detail::require_r_start(seq, "block_decompose");
    const std::size_t q = leading_l_run(seq);
    if (auto at = detail::lemma1_offender(seq, q))
        throw Lemma1Violation("L-run longer than q = " + std::to_string(q) + " after position " +
                              std::to_string(*at + 1) + " in " + seq.str());

    const WordView body = seq.body();
    BlockForm bf{q, {}};
    if (q == 0) {
        // No L at all: R^{p-1} C, every R is an RL^0 block.
        bf.runs.push_back({body.size(), {}});
        return bf;
    }

    BlockRun current{0, {}};
    std::size_t i = 0;
    while (i < body.size()) {
        bool block = false;
        if (body[i] == Symbol::R) {
            std::size_t run = 0;
            while (i + 1 + run < body.size() && body[i + 1 + run] == Symbol::L) ++run;
            block = run == q;
        }
        if (block) {
            if (!current.tail.empty()) {
                bf.runs.push_back(std::move(current));
                current = BlockRun{0, {}};
            }
            ++current.count;
            i += q + 1;
        } else {
            current.tail.push_back(body[i]);
            ++i;
        }
    }
    bf.runs.push_back(std::move(current));
    return bf;
}

inline Sequence reassemble(const BlockForm& bf) {
    Word w;
    for (const auto& run : bf.runs) {
        for (std::size_t n = 0; n < run.count; ++n) {
            w.push_back(Symbol::R);
            w.insert(w.end(), bf.q, Symbol::L);
        }
        w.insert(w.end(), run.tail.begin(), run.tail.end());
    }
    w.push_back(Symbol::C);
    return Sequence(std::move(w));
}

/// False iff n_1 >= 2, or r >= 2 with an empty S_r.
inline bool check_prop1(const BlockForm& bf) {
    if (bf.runs.empty()) throw std::invalid_argument("check_prop1: empty block form");
    if (bf.runs.front().count >= 2) return false;
    if (bf.runs.size() >= 2 && bf.runs.back().tail.empty()) return false;
    return true;
}

enum class FailingRule { Lemma1, Prop1a, Prop1b, Thm4, Thm5 };

inline const char* to_string(FailingRule r) noexcept {
    switch (r) {
    case FailingRule::Lemma1: return "Lemma1";
    case FailingRule::Prop1a: return "Prop1a";
    case FailingRule::Prop1b: return "Prop1b";
    case FailingRule::Thm4: return "Thm4";
    case FailingRule::Thm5: return "Thm5";
    }
    return "?";
}

struct StructuredVerdict {
    bool is_mss = true;
    std::optional<std::size_t> failing_shift;
    std::optional<FailingRule> failing_rule;

    static StructuredVerdict accept() { return {}; }
    static StructuredVerdict reject(std::size_t shift, FailingRule rule) { return {false, shift, rule}; }
};

namespace detail {

struct GroupLayout {
    std::size_t start;       // offset of the first RL^q of the group
    std::size_t tail_start;  // offset of S_i
};

inline std::vector<GroupLayout> layout(const BlockForm& bf) {
    std::vector<GroupLayout> out;
    std::size_t at = 0;
    for (const auto& run : bf.runs) {
        GroupLayout g{at, at + run.count * (bf.q + 1)};
        out.push_back(g);
        at = g.tail_start + run.tail.size();
    }
    return out;
}

// Exponent rule for diverging (RL^q)^a (head) vs (RL^q)^b (shift) groups
// preceded by a common prefix with R parity `odd`. True iff the shift stays
// below P.
inline bool exponent_rule_passes(bool odd, std::size_t a, std::size_t b) {
    if (!odd) return (b > a && a % 2 == 1) || (b < a && b % 2 == 0);
    return (b > a && a % 2 == 0) || (b < a && b % 2 == 1);
}

// Comparison of lambda_{S_j RL^q} against lambda_{S_{k+j}} scaled by the
// parity of the prefix before S_j. Empty when the common span has no
// difference.
inline std::optional<bool> tail_rule_passes(bool odd, const Word& head_tail, std::size_t q, const Word& shift_tail) {
    Word head = head_tail;
    head.push_back(Symbol::R);
    head.insert(head.end(), q, Symbol::L);
    const LambdaSeq lh = lambda_of(head);
    const LambdaSeq ls = lambda_of(shift_tail);
    const int sign = odd ? -1 : 1;
    const std::size_t n = lh.size() < ls.size() ? lh.size() : ls.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lh[i] != ls[i]) return sign * ls[i] < sign * lh[i];
    return std::nullopt;
}

}  // namespace detail

/// L-run filter, block-length filters, single-group fast accept, then the
/// S-group / exponent rules at every shift RL^q S_{k+1} ... S_r C. Each rule
/// verdict is cross-checked against the direct comparison of that shift;
/// a disagreement throws std::logic_error.
inline StructuredVerdict is_mss_structured(const Sequence& seq) {
    detail::require_r_start(seq, "is_mss_structured");
    const std::size_t q = leading_l_run(seq);
    if (auto at = detail::lemma1_offender(seq, q)) return StructuredVerdict::reject(*at, FailingRule::Lemma1);

    const BlockForm bf = block_decompose(seq);
    const std::size_t r = bf.runs.size();
    const std::size_t p = seq.size();
    if (bf.runs.front().count >= 2)
        return StructuredVerdict::reject((bf.runs.front().count - 1) * (q + 1), FailingRule::Prop1a);
    if (r >= 2 && bf.runs.back().tail.empty()) return StructuredVerdict::reject(p - q - 2, FailingRule::Prop1b);
    if (r == 1) return StructuredVerdict::accept();

    const auto groups = detail::layout(bf);
    std::vector<std::size_t> r_before(p + 1, 0);
    for (std::size_t i = 0; i < p; ++i) r_before[i + 1] = r_before[i] + (seq[i] == Symbol::R ? 1 : 0);

    auto check_against_direct = [&](std::size_t shift_at, bool rule_pass, FailingRule rule) {
        const bool direct_pass = parity_lex_cmp(shift(seq, shift_at), seq.symbols()) < 0;
        if (direct_pass != rule_pass)
            throw std::logic_error(std::string("structured rule ") + to_string(rule) +
                                   " disagrees with direct comparison at shift " + std::to_string(shift_at) +
                                   " of " + seq.str());
    };

    // k indexes the 0-based group whose last RL^q the shift lands on.
    for (std::size_t k = 1; k < r; ++k) {
        const std::size_t shift_at = groups[k].start + (bf.runs[k].count - 1) * (q + 1);
        for (std::size_t j = 0;; ++j) {
            const std::size_t head = j;
            const std::size_t tail = k + j;
            const Word& s_head = bf.runs[head].tail;
            const Word& s_tail = bf.runs[tail].tail;
            if (s_head != s_tail) {
                const bool odd = r_before[groups[head].tail_start] % 2 == 1;
                const auto rule = detail::tail_rule_passes(odd, s_head, q, s_tail);
                const bool pass = rule ? *rule : parity_lex_cmp(shift(seq, shift_at), seq.symbols()) < 0;
                if (rule) check_against_direct(shift_at, pass, FailingRule::Thm4);
                if (!pass) return StructuredVerdict::reject(shift_at, FailingRule::Thm4);
                break;
            }
            const std::size_t a = bf.runs[head + 1].count;
            const std::size_t b = tail + 1 < r ? bf.runs[tail + 1].count : 0;
            if (a != b) {
                const bool odd = r_before[groups[head + 1].start] % 2 == 1;
                const bool pass = detail::exponent_rule_passes(odd, a, b);
                check_against_direct(shift_at, pass, FailingRule::Thm5);
                if (!pass) return StructuredVerdict::reject(shift_at, FailingRule::Thm5);
                break;
            }
        }
    }
    return StructuredVerdict::accept();
}

}  // namespace msskit

#endif  // MSSKIT_STRUCTURE_HPP
