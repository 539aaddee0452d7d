/*
   Copyright 2026 The maxarc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Builds the m = 5 Denniston arc code over GF(32) and its binary subfield
// code, then prints parameters and the dual distance.

#include <iostream>

#include "maxarc/maxarc.hpp"

int main() {
    using namespace maxarc;

    const Field f = Field::build(5, 37);  // x^5 + x^2 + 1
    const DennistonSpec spec = make_denniston_spec(f, 3);
    const DennistonArc arc = denniston_arc(spec);

    const WeightDistribution w = weight_distribution(arc.code);
    std::cout << "C(A): [" << arc.length() << ", " << arc.code.dimension() << ", " << *w.min_distance() << "]\n";
    std::cout << "  " << w.polynomial() << "\n";

    const BinaryCode sub = subfield_expand(arc.augmented, polynomial_basis(f));
    const WeightDistribution ws = weight_distribution(sub);
    std::cout << "binary subfield code: [" << sub.length() << ", " << sub.dimension() << ", " << *ws.min_distance()
              << "]\n";

    const auto d = dual_min_distance(ws, 2, sub.dimension());
    const auto verdict = sphere_packing_verdict(sub.length(), sub.length() - sub.dimension(), *d, 2);
    std::cout << "dual: [" << sub.length() << ", " << sub.length() - sub.dimension() << ", " << *d << "]"
              << (verdict.distance_optimal ? " distance-optimal" : "") << "\n";

    const auto rate = rate_comparison(Family::denniston, 5, 3);
    std::cout << "rates: extended Hamming " << rate.r1.str() << ", this code " << rate.r2.str() << "\n";
    return 0;
}
