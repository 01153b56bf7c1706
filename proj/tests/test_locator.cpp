#include <gtest/gtest.h>

#include <cmath>

#include "msskit/locator.hpp"
#include "oracle.hpp"

using namespace msskit;

namespace {

Sequence seq(const char* s) { return Sequence::parse(s); }

}  // namespace

TEST(Itinerary, Examples) {
    EXPECT_EQ(to_string(itinerary({2.0L}, 1, 1e-12L)), "C");
    EXPECT_EQ(to_string(itinerary({4.0L}, 2, 1e-12L)), "RL");
    const double r3 = oracle::superstable_root(3, 3.8, 3.86);
    EXPECT_EQ(to_string(itinerary({static_cast<Real>(r3)}, 3, 1e-9L)), "RLC");
    EXPECT_THROW(itinerary({0.0L}, 3), std::invalid_argument);
    EXPECT_THROW(itinerary({4.5L}, 3), std::invalid_argument);
}

TEST(Locate, Examples) {
    EXPECT_NEAR(static_cast<double>(locate(seq("RC")).r_star), 1 + std::sqrt(5.0), 1e-10);
    EXPECT_EQ(locate(seq("C")).r_star, 2.0L);
    const double rlc = static_cast<double>(locate(seq("RLC")).r_star);
    EXPECT_GT(rlc, 3.8318);
    EXPECT_LT(rlc, 3.8319);
    EXPECT_NEAR(rlc, oracle::superstable_root(3, 3.8, 3.86), 1e-9);
    EXPECT_NEAR(static_cast<double>(locate(seq("RLRC")).r_star), 3.4985616993277016, 1e-12);
}

TEST(Locate, Errors) {
    EXPECT_THROW(locate(seq("RLRLC")), NotMss);
    EXPECT_THROW(locate(seq("RC"), 0), std::invalid_argument);
    // Below long double resolution near r*.
    EXPECT_THROW(locate(seq("RLLLLLLLLLLC"), 1e-30L), NotFound);
}

TEST(Locate, InvariantsUpToPeriod10) {
    for (std::size_t p = 2; p <= 10; ++p)
        for (const auto& s : enumerate_mss_bruteforce(p).sequences) {
            const LocatedSequence l = locate(s);
            EXPECT_LT(l.residual, kTolerance) << s.str();
            EXPECT_EQ(itinerary({l.r_star}, p), Word(s.symbols().begin(), s.symbols().end())) << s.str();
            EXPECT_LT(std::fabs(cycle_multiplier(l.r_star, p)), 1e-6L) << s.str();
        }
}

TEST(VerifyOrder, Examples) {
    OrderReport rep = verify_order(4);
    EXPECT_TRUE(rep.ok);
    ASSERT_EQ(rep.located.size(), 4U);
    EXPECT_EQ(rep.located[0].sequence.str(), "RC");
    EXPECT_EQ(rep.located[1].sequence.str(), "RLRC");
    EXPECT_EQ(rep.located[2].sequence.str(), "RLC");
    EXPECT_EQ(rep.located[3].sequence.str(), "RLLC");

    EXPECT_TRUE(verify_order(2).ok);

    rep = verify_order(8);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.located.size(), 37U);
    EXPECT_GT(rep.min_gap, 1e-6L);
    EXPECT_LT(rep.max_residual, kTolerance);

    EXPECT_THROW(verify_order(13), std::invalid_argument);
    EXPECT_THROW(verify_order(1), std::invalid_argument);
}

TEST(VerifyOrder, Period10GapAboveTolerance) {
    const OrderReport rep = verify_order(10);
    EXPECT_TRUE(rep.ok) << rep.violation;
    EXPECT_GT(rep.min_gap, 10 * kTolerance);
}
