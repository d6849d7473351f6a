#include "egf/limits.hpp"

#include <algorithm>
#include <string>

namespace egf {

namespace {

void check_chain(const ChainMap& f, const char* what) {
    if (!verify_chain_map(f)) throw NotChainMap(std::string(what) + " is not a chain map");
}

}  // namespace

DirectSystem DirectSystem::build(std::vector<ComplexPtr> levels, std::vector<ChainMap> connecting) {
    if (levels.empty()) throw BadLevels("direct system needs at least one level");
    if (connecting.size() + 1 != levels.size())
        throw BadLevels("direct system needs one connecting map per consecutive pair");
    for (std::size_t i = 0; i < connecting.size(); ++i) {
        if (connecting[i].source != levels[i] || connecting[i].target != levels[i + 1])
            throw BadLevels("connecting map endpoints do not match the levels");
        check_chain(connecting[i], "connecting map");
    }
    return DirectSystem{std::move(levels), std::move(connecting)};
}

TowerOfComplexes TowerOfComplexes::build(std::vector<ComplexPtr> levels,
                                         std::vector<ChainMap> projections) {
    if (levels.empty()) throw BadLevels("tower needs at least one level");
    if (projections.size() + 1 != levels.size())
        throw BadLevels("tower needs one projection per consecutive pair");
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const ChainMap& p = projections[i];
        if (p.source != levels[i + 1] || p.target != levels[i])
            throw BadLevels("projection endpoints do not match the levels");
        check_chain(p, "projection");
        for (int deg : p.target->degrees()) {
            FMatrix m = p.matrix(deg);
            if (rank_of(m) != p.target->dim_in(deg))
                throw NotSurjective("projection onto level " + std::to_string(i) +
                                    " is not surjective in degree " + std::to_string(deg));
        }
    }
    return TowerOfComplexes{std::move(levels), std::move(projections)};
}

namespace {

/* direct sum of levels 0..top with level-tagged labels */
ComplexPtr level_sum(const DirectSystem& s, int top, std::vector<int>& offset) {
    std::vector<Generator> gens;
    offset.assign(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        offset[k] = static_cast<int>(gens.size());
        for (const Generator& g : s.levels[k]->generators())
            gens.push_back({"L" + std::to_string(k) + ":" + g.label, g.degree});
    }
    std::vector<FormalSum> diff(gens.size());
    for (int k = 0; k <= top; ++k)
        for (int i = 0; i < s.levels[k]->size(); ++i)
            for (const auto& [tgt, c] : s.levels[k]->diff(i))
                diff[offset[k] + i].emplace_back(offset[k] + tgt, c);
    return make_complex(GradedComplex::build_indexed(std::move(gens), std::move(diff)));
}

}  // namespace

GradedComplex telescope(const DirectSystem& s, int level_cap) {
    if (level_cap < 0 || level_cap >= s.size())
        throw CapExceedsSystem("telescope cap " + std::to_string(level_cap) +
                               " outside the provided levels");
    /* cone of inclusion - connecting from the sum over 0..cap-1 into the sum
     * over 0..cap; the top level only receives */
    std::vector<int> src_off, tgt_off;
    ComplexPtr target = level_sum(s, level_cap, tgt_off);
    ChainMap arrow;
    if (level_cap == 0) {
        arrow = ChainMap::zero(make_complex(GradedComplex::build_indexed({}, {})), target);
    } else {
        arrow.source = level_sum(s, level_cap - 1, src_off);
        arrow.target = target;
        arrow.assign.resize(arrow.source->size());
        for (int k = 0; k < level_cap; ++k)
            for (int i = 0; i < s.levels[k]->size(); ++i) {
                FormalSum sum = {{tgt_off[k] + i, Fp(1)}};
                for (const auto& [tgt, c] : s.connecting[k].assign[i])
                    sum.emplace_back(tgt_off[k + 1] + tgt, -c);
                arrow.assign[src_off[k] + i] = std::move(sum);
            }
    }
    return cone(arrow);
}

namespace {

bool bijective(const FMatrix& m) {
    return m.rows() == m.cols() && rank_of(m) == m.rows();
}

/* stabilization level: smallest s with every map from level s on bijective */
int stable_from(const std::vector<FMatrix>& maps) {
    int s = static_cast<int>(maps.size());
    while (s > 0 && bijective(maps[s - 1])) --s;
    return s;
}

}  // namespace

LimitTable direct_limit_cohomology(const DirectSystem& s, int lo, int hi) {
    if (lo > hi) throw BadRange("empty degree range");
    const int last = s.size() - 1;
    LimitTable table;
    for (int deg = lo; deg <= hi; ++deg) {
        std::vector<FMatrix> maps;
        for (const ChainMap& f : s.connecting) maps.push_back(induced_on_cohomology(f, deg));
        int from = stable_from(maps);
        if (!maps.empty() && from == static_cast<int>(maps.size()))
            throw NotStabilized("colimit not stabilized in degree " + std::to_string(deg) +
                                    " by level " + std::to_string(last),
                                deg);
        table.push_back({deg, cohomology_dim(*s.levels[last], deg), from});
    }
    return table;
}

LimitTable inverse_limit_cohomology(const TowerOfComplexes& t, int lo, int hi) {
    if (lo > hi) throw BadRange("empty degree range");
    const int last = t.size() - 1;
    LimitTable table;
    for (int deg = lo; deg <= hi; ++deg) {
        std::vector<FMatrix> maps;
        for (int i = 0; i < last; ++i) {
            FMatrix m = induced_on_cohomology(t.projections[i], deg);
            if (rank_of(m) != m.rows())
                throw NotSurjective("projection onto level " + std::to_string(i) +
                                    " is not surjective on H in degree " + std::to_string(deg));
            maps.push_back(std::move(m));
        }
        int from = stable_from(maps);
        if (!maps.empty() && from == static_cast<int>(maps.size()))
            throw NotStabilized("inverse limit not stabilized in degree " + std::to_string(deg) +
                                    " by level " + std::to_string(last),
                                deg);
        table.push_back({deg, cohomology_dim(*t.levels[last], deg), from});
    }
    return table;
}

bool is_quasi_iso(const ChainMap& f) {
    int lo = std::min(f.source->min_degree(), f.target->min_degree());
    int hi = std::max(f.source->max_degree(), f.target->max_degree());
    for (int deg = lo; deg <= hi; ++deg)
        if (!bijective(induced_on_cohomology(f, deg))) return false;
    return true;
}

}  // namespace egf
