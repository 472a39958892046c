// Walks the length-5 example end to end: build the QSD code from its
// self-orthogonal residue, map it to DNA, print the GC weight enumerator and
// the reverse-complement distance profile with witness pairings.

#include <iostream>

#include "qsdna/dna.hpp"
#include "qsdna/enumerators.hpp"

using namespace qsdna;

int main() {
    BinaryCode residue = from_ascii("11000\n00110\n");
    QsdCode code = build_qsd(RingId::E, residue);

    std::cout << "generator matrix over E:\n" << generator_matrix_to_string(code);
    std::cout << "|C| = " << (1u << code.n) << ", residue dimension " << code.k1() << "\n\n";

    DnaCode dna = to_dna(code);
    std::cout << "first DNA words:";
    for (size_t i = 0; i < 6 && i < dna.words.size(); ++i) std::cout << ' ' << dna.words[i];
    std::cout << " ...\n";

    std::cout << "GCW(x,y) = " << to_string(gcw_direct(code)) << "\n\n";

    for (const auto& [m, profile] : d_rc_profile(code)) {
        std::cout << "d_RC^" << m << " = " << profile.d_rc
                  << "   (subcode size " << fixed_gc_subcode_size(code, m)
                  << ", pairing " << profile.witness.to_string() << ")\n";
    }
    return 0;
}
