// Reference implementations used only by the tests. They work on plain
// strings and share no code with the library.

#ifndef MSSKIT_TESTS_ORACLE_HPP
#define MSSKIT_TESTS_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline int rank(char c) { return c == 'L' ? 0 : c == 'C' ? 1 : 2; }

// -1, 0, +1 over the common span, reversing after an odd number of Rs.
inline int cmp(const std::string& a, const std::string& b) {
    int rs = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) {
            const int d = rank(a[i]) < rank(b[i]) ? -1 : 1;
            return rs % 2 == 0 ? d : -d;
        }
        if (a[i] == 'R') ++rs;
    }
    return 0;
}

inline bool shift_maximal(const std::string& s) {
    for (std::size_t k = 1; k < s.size(); ++k)
        if (cmp(s.substr(k), s) > 0) return false;
    return true;
}

// The lambda vector straight from its case table.
inline std::vector<int> lambda(const std::string& s) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int beta = 0;
        for (std::size_t k = 0; k < i; ++k) beta += s[k] == 'R';
        if (s[i] == 'C') out.push_back(0);
        else if (s[i] == 'R') out.push_back(beta % 2 == 0 ? 1 : -1);
        else out.push_back(beta % 2 == 0 ? -1 : 1);
    }
    return out;
}

// All R{L,R}^{p-2}C in binary counting order.
inline std::vector<std::string> candidates(std::size_t p) {
    std::vector<std::string> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (p - 2)); ++bits) {
        std::string s = "R";
        for (std::size_t i = p - 2; i-- > 0;) s += (bits >> i) & 1 ? 'R' : 'L';
        out.push_back(s + 'C');
    }
    return out;
}

inline std::set<std::string> mss(std::size_t p) {
    std::set<std::string> out;
    for (const auto& s : candidates(p))
        if (shift_maximal(s)) out.insert(s);
    return out;
}

inline std::size_t max_l_run(const std::string& w) {
    std::size_t best = 0, cur = 0;
    for (char c : w) {
        cur = c == 'L' ? cur + 1 : 0;
        best = cur > best ? cur : best;
    }
    return best;
}

// Words of length m starting with R with at most qcap consecutive Ls.
inline std::set<std::string> s_blocks(std::size_t m, std::size_t qcap) {
    std::set<std::string> out;
    if (m == 0) return out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (m - 1)); ++bits) {
        std::string w = "R";
        for (std::size_t i = m - 1; i-- > 0;) w += (bits >> i) & 1 ? 'R' : 'L';
        if (max_l_run(w) <= qcap) out.insert(w);
    }
    return out;
}

inline std::string compose(const std::string& a, const std::string& b) {
    const std::string q = a.substr(0, a.size() - 1);
    int rs = 0;
    for (char c : q) rs += c == 'R';
    std::string out;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        char y = b[i];
        if (rs % 2 == 1) y = y == 'R' ? 'L' : 'R';
        out += q + y;
    }
    return out + q + 'C';
}

// Every (A, B) with A * B == s and both shift-maximal, found by trying all
// factor pairs of the right lengths.
inline std::vector<std::pair<std::string, std::string>> factorizations(const std::string& s) {
    std::vector<std::pair<std::string, std::string>> out;
    const std::size_t p = s.size();
    for (std::size_t h = 2; h < p; ++h) {
        if (p % h != 0) continue;
        for (const auto& a : mss(h))
            for (const auto& b : mss(p / h))
                if (compose(a, b) == s) out.emplace_back(a, b);
    }
    return out;
}

inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (std::uint64_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[n][k];
}

inline std::size_t divisor_count(std::size_t p) {
    std::size_t n = 0;
    for (std::size_t d = 1; d <= p; ++d) n += p % d == 0;
    return n;
}

// Root of f_r^p(1/2) = 1/2 by sign-change bisection in double.
inline double superstable_root(std::size_t p, double lo, double hi) {
    auto g = [p](double r) {
        double x = 0.5;
        for (std::size_t i = 0; i < p; ++i) x = r * x * (1 - x);
        return x - 0.5;
    };
    double glo = g(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle

#endif  // MSSKIT_TESTS_ORACLE_HPP
