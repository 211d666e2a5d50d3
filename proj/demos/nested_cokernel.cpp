// Walks through one nested pair U <= V <= Z^2 by hand: E = Z^2/U, I = V/U,
// and the map L_1SP^2(E) -> L_1SP^2(E/I) with its cokernel.

#include "dfw/dfw.hpp"

#include <iostream>

int main()
{
    using namespace dfw;
    IntMatrix u = IntMatrix::from_rows({{4, 0}, {0, 8}});
    IntMatrix v = IntMatrix::from_rows({{2, 0}, {0, 4}});
    NestedPresentation np(2, u, v);

    std::cout << "E     = " << canonical_form(np.whole()).to_string() << '\n'
              << "I     = " << canonical_form(np.sub()).to_string() << '\n'
              << "E/I   = " << canonical_form(np.top()).to_string() << '\n';

    Hom h = induced_l1_sp2(np);
    std::cout << "L1SP2(E)   = " << canonical_form(h.source).to_string() << '\n'
              << "L1SP2(E/I) = " << canonical_form(h.target).to_string() << '\n'
              << "matrix on cycle coordinates: " << h.matrix.to_string() << '\n'
              << "cokernel   = " << canonical_form(cokernel(h).group).to_string() << '\n';

    TrialOutcome t = thm_3_1_instance(np);
    std::cout << "middle homology of the Koszul-type complex = " << t.lhs << (t.passed ? " (agrees)" : " (differs)")
              << '\n';
}
