#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "msskit/composition.hpp"
#include "msskit/generators.hpp"
#include "oracle.hpp"

using namespace msskit;

namespace {

Sequence seq(const std::string& s) { return Sequence::parse(s); }

const char* kWorkedComposite = "RL^4(RL^3R)^2(RL^4)^3 RL^3R RL^3C";

std::string rlq(std::size_t q) { return "R" + std::string(q, 'L') + "C"; }

}  // namespace

TEST(RParity, Examples) {
    EXPECT_EQ(r_parity(seq("RC")), Parity::Odd);
    EXPECT_EQ(r_parity(seq("RLC")), Parity::Odd);
    EXPECT_EQ(r_parity(seq("RLRC")), Parity::Even);
}

TEST(Compose, Examples) {
    EXPECT_EQ(compose(seq("RC"), seq("RC")).str(), "RLRC");
    EXPECT_EQ(compose(seq("RLC"), seq("RLC")).str(), "RLLRLRRLC");
    EXPECT_EQ(compose(seq("RLLLC"), seq("RLLRRRLC")), seq(kWorkedComposite));
}

TEST(Compose, MatchesOracleAndIsClosed) {
    for (std::size_t a = 2; a <= 6; ++a)
        for (std::size_t b = 2; a * b <= 24; ++b)
            for (const auto& x : oracle::mss(a))
                for (const auto& y : oracle::mss(b)) {
                    const Sequence z = compose(seq(x), seq(y));
                    EXPECT_EQ(z.str(), oracle::compose(x, y));
                    EXPECT_EQ(z.size(), x.size() * y.size());
                    EXPECT_TRUE(oracle::shift_maximal(z.str())) << x << " * " << y;
                }
}

TEST(Factor, Examples) {
    auto f = factor_once(seq(kWorkedComposite));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->oh.str(), "RLLLC");
    EXPECT_EQ(f->os.str(), "RLLRRRLC");
    EXPECT_EQ(compose(f->oh, f->os), seq(kWorkedComposite));

    EXPECT_FALSE(factor_once(seq("RLC")).has_value());
    f = factor_once(seq("RLRC"));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->oh.str(), "RC");
    EXPECT_EQ(f->os.str(), "RC");
}

TEST(Factor, RejectsNonMss) {
    EXPECT_THROW(factor_once(seq("RLRLC")), NotMss);
    EXPECT_THROW(factor_once(seq("LRC")), NotMss);
    EXPECT_THROW(is_primary(seq("RRC")), NotMss);
    EXPECT_THROW(factor_tree(seq("RLRLC")), NotMss);
}

TEST(Primary, Examples) {
    EXPECT_TRUE(is_primary(seq("RLLC")));
    EXPECT_FALSE(is_primary(seq("RLRC")));
    EXPECT_FALSE(is_primary(seq("RLLRLC")));
    EXPECT_EQ(compose(seq("RLC"), seq("RC")).str(), "RLLRLC");
}

TEST(Primary, AllFactorizationsMatchOracle) {
    for (std::size_t p = 2; p <= 16; ++p)
        for (const auto& s : enumerate_mss_bruteforce(p).sequences) {
            std::vector<std::pair<std::string, std::string>> got;
            for (const auto& f : all_factorizations(s)) got.emplace_back(f.oh.str(), f.os.str());
            auto expect = oracle::factorizations(s.str());
            std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
                return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a < b;
            });
            EXPECT_EQ(got, expect) << s.str();
            EXPECT_EQ(is_primary(s), expect.empty()) << s.str();
        }
}

TEST(FactorTree, Examples) {
    FactorTree t = factor_tree(seq("RLRC"));
    ASSERT_EQ(t.children.size(), 2U);
    EXPECT_EQ(t.children[0].node.str(), "RC");
    EXPECT_TRUE(t.children[0].is_leaf());
    EXPECT_TRUE(t.children[1].is_leaf());

    EXPECT_TRUE(factor_tree(seq("RLC")).is_leaf());

    t = factor_tree(compose(seq("RLRC"), seq("RC")));
    const auto l = leaves(t);
    ASSERT_EQ(l.size(), 3U);
    for (const auto& x : l) EXPECT_EQ(x.str(), "RC");
}

TEST(FactorTree, InvariantsUpToPeriod16) {
    for (std::size_t p = 2; p <= 16; ++p)
        for (const auto& s : enumerate_mss_bruteforce(p).sequences) {
            std::vector<const FactorTree*> stack;
            const FactorTree t = factor_tree(s);
            stack.push_back(&t);
            while (!stack.empty()) {
                const FactorTree* n = stack.back();
                stack.pop_back();
                if (n->is_leaf()) {
                    EXPECT_TRUE(oracle::factorizations(n->node.str()).empty());
                    continue;
                }
                ASSERT_EQ(n->children.size(), 2U);
                EXPECT_EQ(compose(n->children[0].node, n->children[1].node), n->node);
                EXPECT_EQ(n->node.size(), n->children[0].node.size() * n->children[1].node.size());
                stack.push_back(&n->children[0]);
                stack.push_back(&n->children[1]);
            }
        }
}

// Single-group composites are exactly RL^{q-1}C * RL^{p/(q+1)-2}C.
TEST(SingleGroup, CompositesAreTheDivisorFamily) {
    for (std::size_t p = 2; p <= 16; ++p) {
        std::size_t composites = 0;
        for (const auto& s : oracle::mss(p)) {
            const Sequence x = seq(s);
            const BlockForm bf = block_decompose(x);
            if (bf.runs.size() != 1 || bf.runs[0].count != 1) continue;
            const auto fs = oracle::factorizations(s);
            if (fs.empty()) continue;
            ++composites;
            const std::size_t q = bf.q;
            ASSERT_EQ(p % (q + 1), 0U) << s;
            ASSERT_EQ(fs.size(), 1U) << s;
            EXPECT_EQ(fs[0].first, rlq(q - 1)) << s;
            EXPECT_EQ(fs[0].second, rlq(p / (q + 1) - 2)) << s;
        }
        EXPECT_EQ(composites, oracle::divisor_count(p) - 2) << p;
    }
}

TEST(Thm8Shape, Examples) {
    // Not shift-maximal, and with O_h = RLLRC of even R-parity the z pattern
    // (L, R) would need O_s = LRC.
    EXPECT_FALSE(oracle::shift_maximal("RLLRLRLLRRRLLRC"));
    EXPECT_FALSE(check_thm8_shape(seq("RLLRLRLLRRRLLRC")));
    // S_r = RL ends in RL^{q-1}.
    EXPECT_FALSE(check_thm8_shape(seq("RLLRLRRLLRLC")));
    EXPECT_FALSE(check_thm8_shape(seq("RLLRC")));
    // RLLRC * RLC with even parity: z = (R, L).
    EXPECT_EQ(compose(seq("RLLRC"), seq("RLC")).str(), "RLLRRRLLRLRLLRC");
    EXPECT_TRUE(check_thm8_shape(seq("RLLRRRLLRLRLLRC")));
}

TEST(Thm8Shape, SoundUpToPeriod16) {
    std::size_t hits = 0;
    for (std::size_t p = 4; p <= 16; ++p)
        for (const auto& s : oracle::mss(p))
            if (check_thm8_shape(seq(s))) {
                ++hits;
                EXPECT_FALSE(oracle::factorizations(s).empty()) << s;
            }
    // Count from the string prototype of the parity-aware rule.
    EXPECT_EQ(hits, 18U);
}

TEST(Thm9Shape, Examples) {
    auto f = check_thm9_shape(seq(kWorkedComposite));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->oh.str(), "RLLLC");
    EXPECT_EQ(f->os.str(), "RLLRRRLC");

    f = check_thm9_shape(seq("RLLRLRRLLRLC"));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->oh.str(), "RLC");
    EXPECT_EQ(f->os.str(), "RLRC");
    EXPECT_EQ(compose(f->oh, f->os).str(), "RLLRLRRLLRLC");

    // n_2 = 2 > n_1 = 1.
    EXPECT_THROW(check_thm9_shape(seq("RLL RLR RLL RLR RLR RLC")), ShapeError);
    EXPECT_FALSE(check_thm9_shape(seq("RLLC")).has_value());
    EXPECT_FALSE(check_thm9_shape(seq("RLLRLLRC")).has_value());
}

TEST(Thm9Shape, SoundUpToPeriod16) {
    std::size_t hits = 0;
    for (std::size_t p = 4; p <= 16; ++p)
        for (const auto& s : oracle::mss(p)) {
            const auto f = check_thm9_shape(seq(s));
            if (!f) continue;
            ++hits;
            EXPECT_EQ(compose(f->oh, f->os).str(), s);
            EXPECT_TRUE(oracle::shift_maximal(f->os.str())) << s;
        }
    EXPECT_GT(hits, 0U);
}

// Every composite has a factor with the same q, or the factor RL^{q-1}C.
TEST(Factor, FirstFactorShapeUpToPeriod16) {
    for (std::size_t p = 4; p <= 16; ++p)
        for (const auto& s : enumerate_mss_bruteforce(p).sequences) {
            const auto fs = all_factorizations(s);
            if (fs.empty()) continue;
            const std::size_t q = leading_l_run(s);
            const bool ok = std::any_of(fs.begin(), fs.end(), [&](const Factorization& f) {
                return leading_l_run(f.oh) == q || (q >= 1 && f.oh.str() == rlq(q - 1));
            });
            EXPECT_TRUE(ok) << s.str();
        }
}

TEST(Factor, RoundTripUpTo24) {
    for (std::size_t a = 2; a <= 12; ++a)
        for (std::size_t b = 2; a * b <= 24; ++b)
            for (const auto& x : enumerate_mss_bruteforce(a).sequences)
                for (const auto& y : enumerate_mss_bruteforce(b).sequences) {
                    const Sequence z = compose(x, y);
                    ASSERT_TRUE(is_shift_maximal(z));
                    const auto f = factor_once(z);
                    ASSERT_TRUE(f.has_value()) << z.str();
                    EXPECT_EQ(compose(f->oh, f->os), z);
                }
}
