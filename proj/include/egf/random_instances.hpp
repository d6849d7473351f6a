#pragma once

#include <random>

#include "egf/limits.hpp"
#include "egf/spectral.hpp"

/* Deterministic random instances for property tests and the verification
 * suite. Complexes are built from a normal form (single generators plus
 * acyclic two-term pairs) and disguised by a random degreewise change of
 * basis, so d² = 0 holds by construction while the differential looks
 * arbitrary. Chain maps between systems are assembled from the elementary
 * morphisms of the normal form and conjugated the same way, which keeps the
 * induced maps on cohomology known. */
namespace egf {

struct RandomComplexSpec {
    int max_gens = 12;
    int deg_lo = 0;
    int deg_hi = 4;
};

GradedComplex random_complex(std::mt19937& rng, const RandomComplexSpec& spec);

/* random complex with a compatible filtration of at most `levels` levels */
FilteredComplex random_filtered_complex(std::mt19937& rng, const RandomComplexSpec& spec,
                                        int levels);

/* direct system whose final `stable_tail` connecting maps induce identities
 * on cohomology, so every degree stabilizes */
DirectSystem random_direct_system(std::mt19937& rng, const RandomComplexSpec& spec, int levels,
                                  int stable_tail);

}  // namespace egf
