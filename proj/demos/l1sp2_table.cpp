// Prints L_1SP^m(A) for m = 2, 3, 4 and Tor(A, A) over a few small groups.

#include "dfw/dfw.hpp"

#include <iostream>

int main()
{
    using namespace dfw;
    const std::vector<std::vector<long>> groups{{2}, {2, 2}, {2, 4}, {2, 2, 2}, {3, 9}, {2, 6, 12}};
    for (const auto& d : groups) {
        IntVector v(d.begin(), d.end());
        Presentation p{v.size(), IntMatrix::diagonal(v)};
        std::cout << canonical_form(p.quotient()).to_string() << '\n';
        for (unsigned m = 2; m <= 4; ++m)
            std::cout << "  L1SP^" << m << " = " << canonical_form(l1_sp(m, p)).to_string() << '\n';
        std::cout << "  L2Ls3  = " << canonical_form(l2_superlie3(p)).to_string() << '\n'
                  << "  Tor    = " << canonical_form(tor(p, p)).to_string() << '\n';
    }
}
