// Per-period table: number of MSS-sequences, how many are primary, and the
// superstable parameter of the largest one.
#include <cstdio>
#include <cstdlib>

#include "msskit/msskit.hpp"

int main(int argc, char** argv) {
    const std::size_t pmax = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
    std::printf("%4s %8s %8s %20s\n", "p", "mss", "primary", "r*(last)");
    for (std::size_t p = 2; p <= pmax; ++p) {
        const auto seqs = msskit::enumerate_mss_structured(p).sequences;
        std::size_t primary = 0;
        for (const auto& s : seqs) primary += msskit::is_primary(s);
        const auto r = msskit::locate(seqs.back()).r_star;
        std::printf("%4zu %8zu %8zu %20.15Lf\n", p, seqs.size(), primary, r);
    }
}
