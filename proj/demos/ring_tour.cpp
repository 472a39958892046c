// Prints the multiplication table, complement and GC fiber of each order-4
// ring, plus the JSON serialization of E.

#include <iostream>

#include "qsdna/json_io.hpp"
#include "qsdna/ring.hpp"

using namespace qsdna;

int main() {
    for (const Ring4& r : all_rings()) {
        std::cout << "ring " << r.name << " (char " << r.characteristic << ")  mul:";
        for (int x = 0; x < 4; ++x) {
            std::cout << "  ";
            for (int y = 0; y < 4; ++y)
                std::cout << r.elem_name(r.mul[x][y]) << (y < 3 ? "," : "");
        }
        std::cout << "\n  x^C = x + " << r.elem_name(r.complement_alpha);
        if (r.gc_beta) {
            std::cout << ", GC fiber {";
            bool first = true;
            for (Elem x = 0; x < 4; ++x)
                if (gc_content(r, x)) {
                    std::cout << (first ? "" : ",") << r.elem_name(x);
                    first = false;
                }
            std::cout << "} via " << (r.gc_beta_right ? "x*" : "") << r.elem_name(*r.gc_beta)
                      << (r.gc_beta_right ? "" : "*x");
        } else {
            std::cout << ", no GC-content map";
        }
        std::cout << "\n";
    }
    std::cout << "\nE as JSON:\n" << ring_to_json(ring(RingId::E)).dump(2) << "\n";
    return 0;
}
