// Cross-checks run by `msskit selftest`.

#ifndef MSSKIT_TOOLS_SELFTEST_HPP
#define MSSKIT_TOOLS_SELFTEST_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "msskit/msskit.hpp"

namespace msskit::tools {

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::size_t checks = 0;
    std::string detail;  // first failure, or a summary
};

namespace detail {

inline void fail_once(SuiteResult& r, const std::string& what) {
    if (r.ok) r.detail = what;
    r.ok = false;
}

inline SuiteResult suite_oracle(std::size_t pmax) {
    SuiteResult r{"oracle", true, 0, {}};
    for (std::size_t p = 2; p <= pmax; ++p) {
        const std::size_t free = p - 2;
        for (std::size_t bits = 0; bits < (std::size_t{1} << free); ++bits) {
            Word w{Symbol::R};
            for (std::size_t i = 0; i < free; ++i) w.push_back((bits >> (free - 1 - i)) & 1U ? Symbol::R : Symbol::L);
            w.push_back(Symbol::C);
            const Sequence s(std::move(w));
            const bool a = is_mss_structured(s).is_mss;
            const bool b = is_shift_maximal(s);
            const bool c = is_shift_maximal_lambda(s);
            ++r.checks;
            if (a != b || b != c) fail_once(r, "disagreement on " + s.str());
        }
    }
    if (r.ok) r.detail = "structured == direct == lambda, p <= " + std::to_string(pmax);
    return r;
}

inline SuiteResult suite_construction(std::size_t pmax, std::size_t threads) {
    SuiteResult r{"construction", true, 0, {}};
    for (std::size_t p = 2; p <= pmax; ++p) {
        ++r.checks;
        if (enumerate_mss_structured(p, threads).sequences != enumerate_mss_bruteforce(p).sequences)
            fail_once(r, "structured enumeration differs at p = " + std::to_string(p));
    }
    if (r.ok) r.detail = "structured == brute force, p <= " + std::to_string(pmax);
    return r;
}

inline SuiteResult suite_counting(std::size_t pmax) {
    SuiteResult r{"counting", true, 0, {}};
    for (std::size_t m = 0; m <= 14; ++m)
        for (std::size_t qm1 = 0; qm1 <= 6; ++qm1) {
            ++r.checks;
            if (card_S(m, qm1) != enumerate_S({m, qm1}).size())
                fail_once(r, "card_S(" + std::to_string(m) + ", " + std::to_string(qm1) + ")");
        }
    for (std::size_t p = 2; p <= pmax; ++p) {
        ++r.checks;
        if (!single_block_report(p, true).ok()) fail_once(r, "single-block count at p = " + std::to_string(p));
    }
    for (std::size_t p = 4; p <= pmax; ++p) {
        ++r.checks;
        const auto rep = repeated_report(p, true);
        if (!rep.ok())
            fail_once(r, "repeated-block count at p = " + std::to_string(p) + ": formula " +
                             rep.formula_value.str() + ", enumerated " + rep.enumerated_value->str());
    }
    if (r.ok) r.detail = "formulas == enumeration, p <= " + std::to_string(pmax);
    return r;
}

inline SuiteResult suite_roundtrip() {
    SuiteResult r{"roundtrip", true, 0, {}};
    constexpr std::size_t kMaxProduct = 24;
    for (std::size_t a = 2; a * 2 <= kMaxProduct; ++a)
        for (std::size_t b = 2; a * b <= kMaxProduct; ++b)
            for (const auto& x : enumerate_mss_bruteforce(a).sequences)
                for (const auto& y : enumerate_mss_bruteforce(b).sequences) {
                    ++r.checks;
                    const Sequence z = compose(x, y);
                    if (!is_mss(z)) {
                        fail_once(r, x.str() + " * " + y.str() + " is not shift-maximal");
                        continue;
                    }
                    const auto f = factor_once(z);
                    if (!f || compose(f->oh, f->os) != z) fail_once(r, "factor round-trip failed for " + z.str());
                }
    if (r.ok) r.detail = "compose/factor round-trip, |A||B| <= " + std::to_string(kMaxProduct);
    return r;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle", "construction", "counting", "roundtrip"};
    return names;
}

inline std::vector<SuiteResult> run_selftest(std::size_t pmax, const std::vector<std::string>& suites,
                                             std::size_t threads) {
    std::vector<SuiteResult> out;
    auto wanted = [&](const std::string& n) {
        return suites.empty() || std::find(suites.begin(), suites.end(), n) != suites.end();
    };
    if (wanted("oracle")) out.push_back(detail::suite_oracle(pmax));
    if (wanted("construction")) out.push_back(detail::suite_construction(pmax, threads));
    if (wanted("counting")) out.push_back(detail::suite_counting(pmax));
    if (wanted("roundtrip")) out.push_back(detail::suite_roundtrip());
    return out;
}

}  // namespace msskit::tools

#endif  // MSSKIT_TOOLS_SELFTEST_HPP
