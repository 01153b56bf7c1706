// Construction of S(m, h) blocks, derivation of S_i candidates from S_1 RL^q,
// and the two period enumerators (structured and brute force).

#ifndef MSSKIT_GENERATORS_HPP
#define MSSKIT_GENERATORS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "msskit/structure.hpp"
#include "msskit/symbolic.hpp"

namespace msskit {

struct SBlockSpec {
    std::size_t m = 0;     // word length
    std::size_t qcap = 0;  // max consecutive Ls
};

struct PeriodEnumeration {
    std::size_t period = 0;
    std::vector<Sequence> sequences;  // strictly increasing in parity-lex order
};

namespace detail {

// All words over {L, R} of the given length, appended to each prefix.
inline void append_variations(const Word& prefix, std::size_t len, std::vector<Word>& out) {
    const std::size_t count = std::size_t{1} << len;
    for (std::size_t bits = 0; bits < count; ++bits) {
        Word w = prefix;
        for (std::size_t i = 0; i < len; ++i)
            w.push_back((bits >> (len - 1 - i)) & 1U ? Symbol::R : Symbol::L);
        out.push_back(std::move(w));
    }
}

// L^{f-1} R VR(l-f-1) R L^{size-l}, with a single R when f == l.
inline std::vector<Word> fill_block(std::size_t size, std::size_t f, std::size_t l) {
    Word head(f - 1, Symbol::L);
    head.push_back(Symbol::R);
    std::vector<Word> mids;
    if (l == f) {
        mids.push_back(std::move(head));
    } else {
        append_variations(head, l - f - 1, mids);
        for (auto& w : mids) w.push_back(Symbol::R);
    }
    for (auto& w : mids) w.insert(w.end(), size - l, Symbol::L);
    return mids;
}

inline void fill_blocks(std::size_t q, std::size_t blocks_left, std::size_t rest, std::size_t prev_last,
                        bool first, const Word& prefix, std::set<Word>& out) {
    if (blocks_left == 0) {
        // Final partial block F of `rest` boxes.
        if (prev_last < rest + 1) {
            for (std::size_t f = 1; f <= prev_last; ++f)
                for (std::size_t l = f; l <= rest; ++l)
                    for (auto& part : fill_block(rest, f, l)) {
                        Word w = prefix;
                        w.insert(w.end(), part.begin(), part.end());
                        out.insert(std::move(w));
                    }
        } else {
            std::vector<Word> tails;
            append_variations(prefix, rest, tails);
            out.insert(tails.begin(), tails.end());
        }
        return;
    }
    const std::size_t f_max = first ? 1 : prev_last;
    for (std::size_t f = 1; f <= f_max; ++f)
        for (std::size_t l = f; l <= q; ++l)
            for (auto& part : fill_block(q, f, l)) {
                Word w = prefix;
                w.insert(w.end(), part.begin(), part.end());
                fill_blocks(q, blocks_left - 1, rest, l, false, w, out);
            }
}

}  // namespace detail

/// S(m, qcap) by filling m boxes in blocks of q = qcap + 1: every full block
/// holds an R, consecutive blocks keep the L-gap below q, and the final
/// partial block depends on where the last R of the previous block sits.
/// Lexicographic order (L < R).
inline std::vector<Word> enumerate_S(SBlockSpec spec) {
    if (spec.m == 0) return {};
    const std::size_t q = spec.qcap + 1;
    const std::size_t blocks = spec.m / q;
    const std::size_t rest = spec.m % q;
    std::set<Word> out;
    if (blocks == 0) {
        std::vector<Word> words;
        detail::append_variations(Word{Symbol::R}, rest - 1, words);
        out.insert(words.begin(), words.end());
    } else {
        detail::fill_blocks(q, blocks, rest, 0, true, {}, out);
    }
    return {out.begin(), out.end()};
}

/// Candidate S_i derived from S_1 RL^q: flip each admissible -1 of
/// lambda_{S_1 RL^q} to +1 and extend with every tail Q of length
/// 0..max_len that keeps the L-run cap (q - 1) and no run of more than q
/// consecutive +1 through the flipped entry.
inline std::vector<Word> derive_si_candidates(std::size_t q, const Word& s1, std::size_t max_len) {
    if (q == 0) throw std::invalid_argument("derive_si_candidates: q must be positive");
    if (!s1.empty() && s1.front() != Symbol::R)
        throw std::invalid_argument("derive_si_candidates: S_1 must start with R");
    if (max_l_run(s1) > q - 1)
        throw std::invalid_argument("derive_si_candidates: S_1 has more than q-1 consecutive Ls");
    for (Symbol s : s1)
        if (s == Symbol::C) throw std::invalid_argument("derive_si_candidates: S_1 contains C");

    Word base = s1;
    base.push_back(Symbol::R);
    base.insert(base.end(), q, Symbol::L);
    const LambdaSeq a = lambda_of(base);
    const std::size_t m1 = s1.size();

    std::set<Word> out;
    // j is 1-based as in the construction; j = 1 is never flipped.
    for (std::size_t j = 2; j <= m1 + q; ++j) {
        if (a[j - 1] != -1) continue;
        std::size_t k = 0;
        while (k + 1 < j && a[j - 2 - k] == 1) ++k;
        if (k > q - 1) continue;

        LambdaSeq head(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(j - 1));
        head.push_back(1);
        const Word prefix = decode_lambda(head);

        std::vector<Word> candidates;
        for (std::size_t len = 0; len <= max_len; ++len) detail::append_variations(prefix, len, candidates);
        for (auto& w : candidates) {
            if (max_l_run(w) > q - 1) continue;
            const LambdaSeq lw = lambda_of(w);
            std::size_t run = 1;
            for (std::size_t i = j - 1; i > 0 && lw[i - 1] == 1; --i) ++run;
            for (std::size_t i = j; i < lw.size() && lw[i] == 1; ++i) ++run;
            if (run > q) continue;
            out.insert(std::move(w));
        }
    }
    return {out.begin(), out.end()};
}

namespace detail {

inline void sort_parity_lex(std::vector<Sequence>& seqs) {
    std::sort(seqs.begin(), seqs.end(), ParityLexLess{});
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
}

/// Worker count from MSSKIT_THREADS (0 or unset = hardware concurrency).
inline std::size_t default_threads() {
    std::size_t n = 0;
    if (const char* env = std::getenv("MSSKIT_THREADS")) n = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
    if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
    return n;
}

template <typename Task>
void run_parallel(std::size_t tasks, std::size_t threads, Task&& task) {
    threads = std::max<std::size_t>(1, std::min(threads, tasks));
    if (threads == 1) {
        for (std::size_t i = 0; i < tasks; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks; i = next++) task(i);
        });
}

class SBlockCache {
public:
    const std::vector<Word>& get(std::size_t m, std::size_t qcap) {
        auto [it, inserted] = cache_.try_emplace({m, qcap});
        if (inserted) it->second = enumerate_S({m, qcap});
        return it->second;
    }

private:
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> cache_;
};

// Appends (RL^q)^n S groups until `left` symbols are used; S_r nonempty.
inline void extend_groups(std::size_t q, std::size_t left, Word& prefix, SBlockCache& cache,
                          std::vector<Sequence>& accepted) {
    if (left == 0) {
        Word w = prefix;
        w.push_back(Symbol::C);
        Sequence seq(std::move(w));
        if (is_mss_structured(seq).is_mss) accepted.push_back(std::move(seq));
        return;
    }
    for (std::size_t n = 1; n * (q + 1) < left; ++n) {
        const std::size_t for_s = left - n * (q + 1);
        const std::size_t mark = prefix.size();
        for (std::size_t b = 0; b < n; ++b) {
            prefix.push_back(Symbol::R);
            prefix.insert(prefix.end(), q, Symbol::L);
        }
        for (std::size_t m = 1; m <= for_s; ++m)
            for (const Word& s : cache.get(m, q - 1)) {
                const std::size_t before = prefix.size();
                prefix.insert(prefix.end(), s.begin(), s.end());
                extend_groups(q, for_s - m, prefix, cache, accepted);
                prefix.resize(before);
            }
        prefix.resize(mark);
    }
}

}  // namespace detail

/// All MSS-sequences of period p assembled group by group from S-blocks and
/// filtered by the structured test, plus the RL^{p-2}C family.
inline PeriodEnumeration enumerate_mss_structured(std::size_t p, std::size_t threads = 1) {
    if (p < 2) throw std::invalid_argument("enumerate_mss_structured: period must be >= 2");
    PeriodEnumeration out{p, {}};
    {
        Word w{Symbol::R};
        w.insert(w.end(), p - 2, Symbol::L);
        w.push_back(Symbol::C);
        out.sequences.emplace_back(std::move(w));
    }

    // Work items: (q, S_1), the remaining groups are expanded inside a task.
    struct Item {
        std::size_t q;
        Word s1;
    };
    std::vector<Item> items;
    detail::SBlockCache prep;
    for (std::size_t q = 1; q + 3 <= p; ++q) {
        const std::size_t body = p - 1 - (q + 1);
        for (std::size_t m1 = 1; m1 <= body; ++m1)
            for (const Word& s1 : prep.get(m1, q - 1)) items.push_back({q, s1});
    }

    std::vector<std::vector<Sequence>> results(items.size());
    detail::run_parallel(items.size(), threads, [&](std::size_t i) {
        detail::SBlockCache cache;
        const Item& it = items[i];
        Word prefix{Symbol::R};
        prefix.insert(prefix.end(), it.q, Symbol::L);
        prefix.insert(prefix.end(), it.s1.begin(), it.s1.end());
        const std::size_t left = p - 1 - prefix.size();
        detail::extend_groups(it.q, left, prefix, cache, results[i]);
    });
    for (auto& r : results) out.sequences.insert(out.sequences.end(), r.begin(), r.end());
    detail::sort_parity_lex(out.sequences);
    return out;
}

/// Every R{L,R}^{p-2}C kept iff shift-maximal.
inline PeriodEnumeration enumerate_mss_bruteforce(std::size_t p) {
    if (p < 2) throw std::invalid_argument("enumerate_mss_bruteforce: period must be >= 2");
    if (p > 30) throw std::invalid_argument("enumerate_mss_bruteforce: period too large for exhaustive search");
    PeriodEnumeration out{p, {}};
    const std::size_t free = p - 2;
    Word w(p, Symbol::L);
    w.front() = Symbol::R;
    w.back() = Symbol::C;
    for (std::size_t bits = 0; bits < (std::size_t{1} << free); ++bits) {
        for (std::size_t i = 0; i < free; ++i)
            w[1 + i] = (bits >> (free - 1 - i)) & 1U ? Symbol::R : Symbol::L;
        Sequence seq(w);
        if (is_shift_maximal(seq)) out.sequences.push_back(std::move(seq));
    }
    detail::sort_parity_lex(out.sequences);
    return out;
}

}  // namespace msskit

#endif  // MSSKIT_GENERATORS_HPP
