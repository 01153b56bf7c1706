// Prints the factorization tree of each sequence given on the command line.
#include <iostream>
#include <string>

#include "msskit/msskit.hpp"

namespace {

void print(const msskit::FactorTree& t, int depth) {
    std::cout << std::string(2 * static_cast<std::size_t>(depth), ' ') << t.node.compact()
              << (t.is_leaf() ? "  (primary)" : "") << '\n';
    for (const auto& c : t.children) print(c, depth + 1);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: factor_tree SEQUENCE...\n";
        return 2;
    }
    for (int i = 1; i < argc; ++i) {
        try {
            print(msskit::factor_tree(msskit::Sequence::parse(argv[i])), 0);
        } catch (const std::exception& e) {
            std::cerr << argv[i] << ": " << e.what() << '\n';
            return 1;
        }
    }
}
