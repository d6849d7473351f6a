#include <random>

#include "doctest.h"
#include "egf/limits.hpp"
#include "egf/random_instances.hpp"
#include "test_util.hpp"

using namespace egf;

namespace {

DirectSystem constant_system(const ComplexPtr& c, int levels) {
    std::vector<ComplexPtr> lv(levels, c);
    std::vector<ChainMap> maps(levels - 1, ChainMap::identity(c));
    return DirectSystem::build(lv, maps);
}

}  // namespace

TEST_CASE("telescope of a constant system recovers the level") {
    std::mt19937 rng(31);
    ComplexPtr c = make_complex(random_complex(rng, {10, 0, 4}));
    DirectSystem s = constant_system(c, 4);
    GradedComplex tel = telescope(s, 3);
    for (int deg = -1; deg <= 5; ++deg)
        CHECK(cohomology_dim(tel, deg) == cohomology_dim(*c, deg));
    CHECK_THROWS_AS(telescope(s, 4), CapExceedsSystem);
}

TEST_CASE("telescope of 0 -> K -> K -> K") {
    ComplexPtr zero = make_complex(GradedComplex::build_indexed({}, {}));
    ComplexPtr pt = make_complex(spheres({0}));
    std::vector<ComplexPtr> lv = {zero, pt, pt, pt};
    std::vector<ChainMap> maps = {ChainMap::zero(zero, pt), ChainMap::identity(pt),
                                  ChainMap::identity(pt)};
    DirectSystem s = DirectSystem::build(lv, maps);
    GradedComplex tel = telescope(s, 3);
    CHECK(cohomology_dim(tel, 0) == 1);
    CHECK(cohomology_dim(tel, -1) == 0);
    CHECK(cohomology_dim(tel, 1) == 0);

    auto table = direct_limit_cohomology(s, 0, 1);
    CHECK(table[0].dim == 1);
    CHECK(table[0].stabilized_at == 1);
    CHECK(table[1].dim == 0);
}

TEST_CASE("direct limit of a constant system is the level cohomology") {
    std::mt19937 rng(32);
    ComplexPtr c = make_complex(random_complex(rng, {10, 0, 4}));
    DirectSystem s = constant_system(c, 3);
    for (const auto& row : direct_limit_cohomology(s, 0, 5)) {
        CHECK(row.dim == cohomology_dim(*c, row.degree));
        CHECK(row.stabilized_at == 0);
    }
}

TEST_CASE("direct limit reports NotStabilized instead of truncating") {
    ComplexPtr pt = make_complex(spheres({0}));
    std::vector<ComplexPtr> lv = {pt, pt};
    std::vector<ChainMap> maps = {ChainMap::zero(pt, pt)};
    DirectSystem s = DirectSystem::build(lv, maps);
    CHECK_THROWS_AS(direct_limit_cohomology(s, 0, 0), NotStabilized);
}

TEST_CASE("telescope equals the direct limit on stabilized degrees") {
    std::mt19937 rng(20240519);
    for (int trial = 0; trial < 15; ++trial) {
        DirectSystem s = random_direct_system(rng, {8, 0, 3}, 4, 2);
        GradedComplex tel = telescope(s, s.size() - 1);
        auto table = direct_limit_cohomology(s, 0, 4);
        for (const auto& row : table) CHECK(cohomology_dim(tel, row.degree) == row.dim);
    }
}

TEST_CASE("tower construction rejects non-surjective projections") {
    ComplexPtr pt = make_complex(spheres({0}));
    ComplexPtr two = make_complex(spheres({0, 0}));
    /* projection two -> two hitting only the first generator */
    ChainMap not_onto{two, two, {{{0, Fp(1)}}, {{0, Fp(1)}}}};
    CHECK_THROWS_AS(TowerOfComplexes::build({two, two}, {not_onto}), NotSurjective);
    (void)pt;
}

TEST_CASE("inverse limit of a constant tower is the level cohomology") {
    std::mt19937 rng(33);
    ComplexPtr c = make_complex(random_complex(rng, {10, 0, 4}));
    TowerOfComplexes t = TowerOfComplexes::build(
        {c, c, c}, {ChainMap::identity(c), ChainMap::identity(c)});
    for (const auto& row : inverse_limit_cohomology(t, 0, 5)) {
        CHECK(row.dim == cohomology_dim(*c, row.degree));
        CHECK(row.stabilized_at == 0);
    }
}

TEST_CASE("inverse limit detects projections that are not surjective on H") {
    /* u -> v maps onto the point class; surjective on cochains, not on H^0 */
    ComplexPtr pair = make_complex(acyclic_pair(0));
    ComplexPtr pt = make_complex(spheres({0}));
    ChainMap p{pair, pt, {{{0, Fp(1)}}, {}}};
    REQUIRE(verify_chain_map(p));
    TowerOfComplexes t = TowerOfComplexes::build({pt, pair}, {p});
    CHECK_THROWS_AS(inverse_limit_cohomology(t, 0, 0), NotSurjective);
}

TEST_CASE("cone is acyclic exactly for quasi-isomorphisms") {
    std::mt19937 rng(77);
    int quasi = 0, non_quasi = 0;
    for (int trial = 0; trial < 20; ++trial) {
        DirectSystem s = random_direct_system(rng, {8, 0, 3}, 3, 1);
        for (const ChainMap& f : s.connecting) {
            GradedComplex k = cone(f);
            bool acyclic = true;
            for (int deg = -2; deg <= 5; ++deg)
                acyclic = acyclic && cohomology_dim(k, deg) == 0;
            bool qiso = is_quasi_iso(f);
            CHECK(acyclic == qiso);
            (qiso ? quasi : non_quasi) += 1;
        }
    }
    CHECK(quasi > 0);
    CHECK(non_quasi > 0);
}
