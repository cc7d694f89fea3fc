// Walks through the library: decomposition trees, the dynamic program and
// the witness it returns. Usage: lcp_demo [sigma tau]

#include <iostream>

#include "permlcp/permlcp.hpp"

int main(int argc, char** argv) {
    using namespace permlcp;
    try {
        const Permutation sigma = parse_permutation(argc > 2 ? argv[1] : "5 1 10 9 6 7 8 11 2 4 3");
        const Permutation tau = parse_permutation(argc > 2 ? argv[2] : "4 1 3 2 5 6 8 9 7");

        const DecompTree tree = decomposition_tree(sigma);
        std::cout << "sigma = " << sigma << "\n"
                  << "tau   = " << tau << "\n\n"
                  << "labeled tree of sigma:  " << to_bracket(tree) << "\n"
                  << "expanded tree of sigma: " << to_bracket(expand_tree(tree)) << "\n"
                  << "separable: " << (is_separable(sigma) ? "yes" : "no")
                  << ", largest prime arity: " << max_prime_arity(tree) << "\n\n";

        const LcpResult r = lcp(sigma, tau);
        std::cout << "longest common pattern: " << r.pattern << " (length " << r.pattern.size() << ", "
                  << to_string(r.algorithm) << ", guided by " << (r.guide == Guide::sigma ? "sigma" : "tau") << ")\n"
                  << "  in sigma at " << r.occ_sigma << "\n"
                  << "  in tau   at " << r.occ_tau << "\n";

        const LcpResult canonical = lcp(sigma, tau, Algorithm::general, {.canonical = true});
        std::cout << "lexicographically smallest longest pattern: " << canonical.pattern << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
