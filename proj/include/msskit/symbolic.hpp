// Symbol words, the lambda encoding, parity-lexicographic order and the two
// shift-maximality tests.
//
// Positions are 1-based where they mirror the usual kneading notation
// (beta), shift amounts are plain counts of dropped symbols.

#ifndef MSSKIT_SYMBOLIC_HPP
#define MSSKIT_SYMBOLIC_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msskit {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Short machine-readable tag, e.g. "parse" or "not_mss".
    virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "parse"; }
};

class NotAdmissible : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "not_admissible"; }
};

class NotMss : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "not_mss"; }
};

// Underlying values carry the order L < C < R, so the built-in comparisons
// are the symbol order.
enum class Symbol : std::uint8_t { L = 0, C = 1, R = 2 };

using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;
using LambdaSeq = std::vector<int>;

constexpr char to_char(Symbol s) noexcept {
    switch (s) {
    case Symbol::L: return 'L';
    case Symbol::C: return 'C';
    case Symbol::R: return 'R';
    }
    return '?';
}

/// R <-> L; C is fixed.
constexpr Symbol flip(Symbol s) noexcept {
    if (s == Symbol::R) return Symbol::L;
    if (s == Symbol::L) return Symbol::R;
    return s;
}

inline std::string to_string(WordView w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(to_char(s));
    return out;
}

/// Run-length notation: "RLLLLC" -> "RL^4C".
inline std::string to_compact_string(WordView w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out.push_back(to_char(w[i]));
        if (j - i > 1) {
            out.push_back('^');
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

namespace detail {

class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    Word run() {
        Word out = group();
        if (i_ < text_.size()) fail("unmatched ')'");
        return out;
    }

private:
    Word group() {
        Word out;
        while (i_ < text_.size() && text_[i_] != ')') {
            Word item;
            const char c = text_[i_];
            if (c == '(') {
                if (++depth_ > kMaxDepth) fail("groups nested too deeply");
                ++i_;
                item = group();
                --depth_;
                if (i_ >= text_.size()) fail("unclosed '('");
                ++i_;
            } else if (c == 'L' || c == 'R' || c == 'C') {
                item.push_back(c == 'L' ? Symbol::L : c == 'R' ? Symbol::R : Symbol::C);
                ++i_;
            } else if (c == ' ' || c == '.') {
                ++i_;  // separators allowed for readability
                continue;
            } else {
                fail("unexpected character '" + std::string(1, c) + "'");
            }
            const std::size_t n = exponent();
            if (out.size() + item.size() * n > kMaxLength) fail("sequence too long");
            for (std::size_t k = 0; k < n; ++k) out.insert(out.end(), item.begin(), item.end());
        }
        return out;
    }

    std::size_t exponent() {
        if (i_ >= text_.size() || text_[i_] != '^') return 1;
        ++i_;
        const std::size_t start = i_;
        std::size_t value = 0;
        while (i_ < text_.size() && text_[i_] >= '0' && text_[i_] <= '9') {
            value = value * 10 + static_cast<std::size_t>(text_[i_] - '0');
            if (value > kMaxLength) fail("exponent too large");
            ++i_;
        }
        if (i_ == start || value == 0) fail("exponent must be a positive integer");
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(i_) + " in \"" + std::string(text_) + "\"");
    }

    static constexpr std::size_t kMaxLength = 1'000'000;
    static constexpr std::size_t kMaxDepth = 64;
    std::string_view text_;
    std::size_t i_ = 0;
    std::size_t depth_ = 0;
};

}  // namespace detail

/// Parses a word over {L, C, R} with exponents on letters or parenthesised
/// groups ("RL^2(RLR)^3C"); spaces and dots are ignored. C is accepted
/// anywhere, admissibility is checked by Sequence.
inline Word parse_word(std::string_view text) { return detail::WordParser(text).run(); }

/// An admissible sequence: letters L/R terminated by exactly one C.
class Sequence {
public:
    /// Throws NotAdmissible unless the word is admissible.
    explicit Sequence(Word symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw NotAdmissible("empty sequence");
        if (symbols_.back() != Symbol::C)
            throw NotAdmissible("sequence must end with C: " + to_string(symbols_));
        for (std::size_t i = 0; i + 1 < symbols_.size(); ++i)
            if (symbols_[i] == Symbol::C)
                throw NotAdmissible("interior C at position " + std::to_string(i + 1) + ": " +
                                    to_string(symbols_));
    }

    /// Grammar: ITEM := ('R'|'L'|'C'|'(' ITEM* ')') ('^' n)?; the expansion must be admissible.
    static Sequence parse(std::string_view text) {
        Word w = parse_word(text);
        try {
            return Sequence(std::move(w));
        } catch (const NotAdmissible& e) {
            throw ParseError(e.what());
        }
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    WordView symbols() const noexcept { return symbols_; }
    /// Everything before the terminal C.
    WordView body() const noexcept { return WordView(symbols_).first(symbols_.size() - 1); }
    bool starts_with_r() const noexcept { return symbols_.front() == Symbol::R; }

    std::string str() const { return to_string(symbols_); }
    std::string compact() const { return to_compact_string(symbols_); }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
    Word symbols_;
};

/// Number of R symbols strictly before 1-based position i.
inline std::size_t beta(const Sequence& seq, std::size_t i) {
    if (i < 1 || i > seq.size())
        throw std::out_of_range("beta: position " + std::to_string(i) + " outside 1.." +
                                std::to_string(seq.size()));
    std::size_t count = 0;
    for (std::size_t k = 0; k + 1 < i; ++k)
        if (seq[k] == Symbol::R) ++count;
    return count;
}

/// Lambda encoding of an arbitrary symbol word (the R count starts at 0).
inline LambdaSeq lambda_of(WordView w) {
    LambdaSeq out;
    out.reserve(w.size());
    bool odd = false;
    for (Symbol s : w) {
        switch (s) {
        case Symbol::R:
            out.push_back(odd ? -1 : 1);
            odd = !odd;
            break;
        case Symbol::L: out.push_back(odd ? 1 : -1); break;
        case Symbol::C: out.push_back(0); break;
        }
    }
    return out;
}

inline LambdaSeq lambda_of(const Sequence& seq) { return lambda_of(seq.symbols()); }

/// Inverse of lambda_of on +-1 entries (0 decodes to C).
inline Word decode_lambda(std::span<const int> lambda) {
    Word out;
    out.reserve(lambda.size());
    bool odd = false;
    for (int a : lambda) {
        if (a == 0) {
            out.push_back(Symbol::C);
        } else if (a == (odd ? -1 : 1)) {
            out.push_back(Symbol::R);
            odd = !odd;
        } else {
            out.push_back(Symbol::L);
        }
    }
    return out;
}

/// sigma^k: the suffix after dropping k symbols, 0 <= k <= length.
inline WordView shift(const Sequence& seq, std::size_t k) {
    if (k > seq.size())
        throw std::out_of_range("shift: k = " + std::to_string(k) + " exceeds length " +
                                std::to_string(seq.size()));
    return seq.symbols().subspan(k);
}

/// Parity-lexicographic comparison over the common span, starting from a
/// given R parity of an already-equal prefix. Exhaustion without a
/// difference is `equal`.
inline std::strong_ordering parity_lex_cmp_from(bool odd_prefix, WordView a, WordView b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            auto direct = a[i] <=> b[i];
            return odd_prefix ? (b[i] <=> a[i]) : direct;
        }
        if (a[i] == Symbol::R) odd_prefix = !odd_prefix;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering parity_lex_cmp(WordView a, WordView b) {
    return parity_lex_cmp_from(false, a, b);
}

inline std::strong_ordering parity_lex_cmp(const Sequence& a, const Sequence& b) {
    return parity_lex_cmp(a.symbols(), b.symbols());
}

/// Strict weak order adaptor for sorting sequences of equal or mixed length.
struct ParityLexLess {
    bool operator()(const Sequence& a, const Sequence& b) const {
        auto c = parity_lex_cmp(a, b);
        if (c != std::strong_ordering::equal) return c < 0;
        return a.size() < b.size();
    }
};

/// Direct test: no right shift exceeds the sequence.
inline bool is_shift_maximal(const Sequence& seq) {
    for (std::size_t k = 1; k < seq.size(); ++k)
        if (parity_lex_cmp(shift(seq, k), seq.symbols()) > 0) return false;
    return true;
}

/// MSS-sequence: period >= 2, starts with R, shift-maximal.
inline bool is_mss(const Sequence& seq) {
    return seq.size() >= 2 && seq.starts_with_r() && is_shift_maximal(seq);
}

/// Lambda-level test: every zero-padded shift of lambda_P, sign-normalised to
/// start with +1, must be below lambda_P.
inline bool is_shift_maximal_lambda(const Sequence& seq) {
    const std::size_t p = seq.size();
    if (p == 1) return true;
    if (!seq.starts_with_r()) return false;
    const LambdaSeq lam = lambda_of(seq);
    for (std::size_t k = 1; k <= p; ++k) {
        // sigma^p(lambda) is all zeros and needs no sign.
        const int s = k < p && lam[k] < 0 ? -1 : 1;
        bool less = false;
        for (std::size_t i = 0; i < p; ++i) {
            const int shifted = i + k < p ? s * lam[i + k] : 0;
            if (shifted != lam[i]) {
                less = shifted < lam[i];
                break;
            }
        }
        if (!less) return false;
    }
    return true;
}

}  // namespace msskit

#endif  // MSSKIT_SYMBOLIC_HPP
