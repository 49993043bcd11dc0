// Assemble the descent for the (5,7) torus knot and verify every transition.
#include "braidseq/torus.hpp"

#include <iostream>

int main() {
    using namespace braidseq;

    const UnknottingSequence seq = assemble_sequence(5, 7);
    std::cout << "K(5,7): u = " << seq.u << "\n";
    for (const SequenceStep& s : seq.steps) {
        std::cout << "  K_" << s.index << " = '" << format_braid(s.word) << "'";
        if (s.flip) std::cout << "  (flip letter " << *s.flip << ")";
        if (s.junction) std::cout << "  [junction]";
        std::cout << "\n";
    }

    const SequenceReport rep = verify_sequence(seq);
    std::cout << (rep.ok ? "verified: every step is one crossing change from the next"
                         : "verification FAILED")
              << "\n";
    return rep.ok ? 0 : 1;
}
