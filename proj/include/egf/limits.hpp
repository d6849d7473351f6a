#pragma once

#include <vector>

#include "egf/complex.hpp"

namespace egf {

/* Sequence of complexes with connecting chain maps level n -> n+1. */
struct DirectSystem {
    std::vector<ComplexPtr> levels;
    std::vector<ChainMap> connecting;

    /* validates endpoints and that every connecting map is a chain map */
    static DirectSystem build(std::vector<ComplexPtr> levels, std::vector<ChainMap> connecting);

    int size() const { return static_cast<int>(levels.size()); }
};

/* Sequence of complexes with projections level N+1 -> N. Projections must be
 * chain maps and degreewise surjective (the Mittag-Leffler hypothesis). */
struct TowerOfComplexes {
    std::vector<ComplexPtr> levels;
    std::vector<ChainMap> projections;

    static TowerOfComplexes build(std::vector<ComplexPtr> levels,
                                  std::vector<ChainMap> projections);

    int size() const { return static_cast<int>(levels.size()); }
};

/* Truncated telescope: cone(⊕_{k≤cap} C_k -> ⊕_{k≤cap} C_k) with the arrow
 * id - connecting; the last level maps by id only. */
GradedComplex telescope(const DirectSystem& s, int level_cap);

struct LimitEntry {
    int degree;
    int dim;
    int stabilized_at;  /* first level from which all induced maps are bijective */
};
using LimitTable = std::vector<LimitEntry>;

/* Stabilized colimit of cohomology per degree in [lo, hi]. A degree counts as
 * stabilized from level s on when consecutive dims agree and every induced
 * map on H from level s to the end is bijective; otherwise NotStabilized. */
LimitTable direct_limit_cohomology(const DirectSystem& s, int lo, int hi);

/* Stabilized inverse limit of cohomology per degree; checks that projections
 * induce surjections on H (NotSurjective otherwise). */
LimitTable inverse_limit_cohomology(const TowerOfComplexes& t, int lo, int hi);

/* true when f induces isomorphisms on H across the joint degree support */
bool is_quasi_iso(const ChainMap& f);

}  // namespace egf
