#include "egf/random_instances.hpp"

#include <algorithm>
#include <string>

namespace egf {

namespace {

/* normal form: isolated generators (bars) and acyclic two-term pairs */
struct NormalForm {
    std::vector<int> bars;   /* degrees */
    std::vector<int> pairs;  /* degree of the lower generator of each pair */

    int gen_count() const { return static_cast<int>(bars.size() + 2 * pairs.size()); }
};

NormalForm sample_normal_form(std::mt19937& rng, const RandomComplexSpec& spec) {
    NormalForm nf;
    std::uniform_int_distribution<int> deg(spec.deg_lo, spec.deg_hi);
    std::uniform_int_distribution<int> pair_deg(spec.deg_lo, spec.deg_hi - 1);
    int budget = 1 + static_cast<int>(rng() % spec.max_gens);
    while (budget > 0) {
        if (budget >= 2 && rng() % 2 == 0) {
            nf.pairs.push_back(pair_deg(rng));
            budget -= 2;
        } else {
            nf.bars.push_back(deg(rng));
            budget -= 1;
        }
    }
    std::sort(nf.bars.begin(), nf.bars.end());
    std::sort(nf.pairs.begin(), nf.pairs.end());
    return nf;
}

struct NormalBasis {
    std::vector<Generator> gens;
    std::vector<FormalSum> diff;
    std::vector<int> bar_ids;
    std::vector<int> pair_lo_ids;
    std::vector<int> pair_hi_ids;
};

NormalBasis lay_out(const NormalForm& nf, const std::string& tag) {
    NormalBasis nb;
    for (std::size_t i = 0; i < nf.bars.size(); ++i) {
        nb.bar_ids.push_back(static_cast<int>(nb.gens.size()));
        nb.gens.push_back({tag + "b" + std::to_string(i), nf.bars[i]});
    }
    for (std::size_t i = 0; i < nf.pairs.size(); ++i) {
        nb.pair_lo_ids.push_back(static_cast<int>(nb.gens.size()));
        nb.gens.push_back({tag + "u" + std::to_string(i), nf.pairs[i]});
        nb.pair_hi_ids.push_back(static_cast<int>(nb.gens.size()));
        nb.gens.push_back({tag + "v" + std::to_string(i), nf.pairs[i] + 1});
    }
    nb.diff.resize(nb.gens.size());
    for (std::size_t i = 0; i < nf.pairs.size(); ++i)
        nb.diff[nb.pair_lo_ids[i]] = {{nb.pair_hi_ids[i], Fp(1)}};
    return nb;
}

Fp random_scalar(std::mt19937& rng) {
    return Fp(static_cast<long long>(rng() % Fp::modulus()));
}

FMatrix random_invertible(std::mt19937& rng, int n) {
    for (;;) {
        FMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = random_scalar(rng);
        if (rank_of(m) == n) return m;
    }
}

/* degreewise change of basis applied to generators and differential */
struct Disguise {
    std::map<int, FMatrix> fwd;  /* degree -> new basis in terms of the old */
    std::map<int, FMatrix> inv;
};

Disguise sample_disguise(std::mt19937& rng, const GradedComplex& c) {
    Disguise d;
    for (int deg : c.degrees()) {
        FMatrix p = random_invertible(rng, c.dim_in(deg));
        auto cr = column_reduce(p);
        FMatrix pinv(p.cols(), p.cols());
        for (int j = 0; j < p.cols(); ++j) {
            FVector e = FVector::Zero(p.rows());
            e(j) = Fp(1);
            pinv.col(j) = *solve_in_span(cr, e);
        }
        d.fwd[deg] = std::move(p);
        d.inv[deg] = std::move(pinv);
    }
    return d;
}

const FMatrix& basis_or_empty(const std::map<int, FMatrix>& m, int deg) {
    static const FMatrix empty;
    auto it = m.find(deg);
    return it == m.end() ? empty : it->second;
}

GradedComplex apply_disguise(const GradedComplex& c, const Disguise& d) {
    std::vector<Generator> gens = c.generators();
    std::vector<FormalSum> diff(gens.size());
    for (int deg : c.degrees()) {
        const auto& dom = c.gens_in(deg);
        if (c.dim_in(deg + 1) == 0) continue;
        const auto& cod = c.gens_in(deg + 1);
        FMatrix m = basis_or_empty(d.inv, deg + 1) * c.diff_matrix(deg) *
                    basis_or_empty(d.fwd, deg);
        for (int j = 0; j < static_cast<int>(dom.size()); ++j)
            for (int i = 0; i < static_cast<int>(cod.size()); ++i)
                if (!m(i, j).is_zero()) diff[dom[j]].emplace_back(cod[i], m(i, j));
    }
    return GradedComplex::build_indexed(std::move(gens), std::move(diff));
}

ChainMap conjugate(const ChainMap& f, const Disguise& ds, const Disguise& dt,
                   const ComplexPtr& new_src, const ComplexPtr& new_tgt) {
    ChainMap out{new_src, new_tgt, {}};
    out.assign.resize(new_src->size());
    for (int deg : f.source->degrees()) {
        const auto& dom = new_src->gens_in(deg);
        const auto& cod = new_tgt->gens_in(deg);
        if (dom.empty() || cod.empty()) continue;
        FMatrix m = basis_or_empty(dt.inv, deg) * f.matrix(deg) * basis_or_empty(ds.fwd, deg);
        for (int j = 0; j < static_cast<int>(dom.size()); ++j)
            for (int i = 0; i < static_cast<int>(cod.size()); ++i)
                if (!m(i, j).is_zero()) out.assign[dom[j]].emplace_back(cod[i], m(i, j));
    }
    return out;
}

/* chain map between normal forms assembled from the elementary morphisms:
 * bar -> bar, pair -> pair (diagonal), pair.u -> bar, anything -> pair.v.
 * The induced map on H is exactly the bar -> bar block. */
ChainMap normal_form_map(std::mt19937& rng, const NormalForm& snf, const ComplexPtr& src,
                         const NormalBasis& sb, const NormalForm& tnf, const ComplexPtr& tgt,
                         const NormalBasis& tb, bool identity_on_h) {
    ChainMap f{src, tgt, {}};
    f.assign.resize(src->size());
    auto junk_targets = [&](int deg, FormalSum& sum) {
        for (std::size_t m = 0; m < tnf.pairs.size(); ++m)
            if (tnf.pairs[m] + 1 == deg && rng() % 3 == 0)
                sum.emplace_back(tb.pair_hi_ids[m], random_scalar(rng));
    };
    for (std::size_t i = 0; i < snf.bars.size(); ++i) {
        FormalSum sum;
        for (std::size_t j = 0; j < tnf.bars.size(); ++j) {
            if (tnf.bars[j] != snf.bars[i]) continue;
            Fp c = identity_on_h ? Fp(i == j ? 1 : 0) : random_scalar(rng);
            if (!c.is_zero()) sum.emplace_back(tb.bar_ids[j], c);
        }
        junk_targets(snf.bars[i], sum);
        f.assign[sb.bar_ids[i]] = std::move(sum);
    }
    for (std::size_t i = 0; i < snf.pairs.size(); ++i) {
        FormalSum lo, hi;
        for (std::size_t m = 0; m < tnf.pairs.size(); ++m) {
            if (tnf.pairs[m] != snf.pairs[i]) continue;
            Fp c = random_scalar(rng);
            if (c.is_zero()) continue;
            lo.emplace_back(tb.pair_lo_ids[m], c);
            hi.emplace_back(tb.pair_hi_ids[m], c);
        }
        for (std::size_t j = 0; j < tnf.bars.size(); ++j)
            if (tnf.bars[j] == snf.pairs[i] && rng() % 3 == 0)
                lo.emplace_back(tb.bar_ids[j], random_scalar(rng));
        junk_targets(snf.pairs[i], lo);
        f.assign[sb.pair_lo_ids[i]] = std::move(lo);
        f.assign[sb.pair_hi_ids[i]] = std::move(hi);
    }
    return f;
}

}  // namespace

GradedComplex random_complex(std::mt19937& rng, const RandomComplexSpec& spec) {
    NormalForm nf = sample_normal_form(rng, spec);
    NormalBasis nb = lay_out(nf, "g:");
    GradedComplex plain = GradedComplex::build_indexed(nb.gens, nb.diff);
    return apply_disguise(plain, sample_disguise(rng, plain));
}

FilteredComplex random_filtered_complex(std::mt19937& rng, const RandomComplexSpec& spec,
                                        int levels) {
    ComplexPtr c = make_complex(random_complex(rng, spec));
    std::vector<int> lv(c->size());
    for (int& x : lv) x = static_cast<int>(rng() % levels);
    /* repair pass by ascending degree so the differential never drops levels */
    for (int deg : c->degrees())
        for (int id : c->gens_in(deg))
            for (const auto& [tgt, coeff] : c->diff(id)) {
                (void)coeff;
                lv[tgt] = std::max(lv[tgt], lv[id]);
            }
    return FilteredComplex::build(c, std::move(lv));
}

DirectSystem random_direct_system(std::mt19937& rng, const RandomComplexSpec& spec, int levels,
                                  int stable_tail) {
    if (levels < 2) throw BadLevels("random direct system needs at least two levels");
    stable_tail = std::min(stable_tail, levels - 1);
    const int first_stable = levels - 1 - stable_tail;

    NormalForm core = sample_normal_form(rng, spec);
    std::vector<NormalForm> nfs(levels);
    for (int i = 0; i < levels; ++i) {
        nfs[i] = core;
        if (i < first_stable) { /* early levels carry extra transient pieces */
            NormalForm extra = sample_normal_form(rng, spec);
            nfs[i].bars.insert(nfs[i].bars.end(), extra.bars.begin(), extra.bars.end());
            nfs[i].pairs.insert(nfs[i].pairs.end(), extra.pairs.begin(), extra.pairs.end());
        }
    }

    std::vector<NormalBasis> bases(levels);
    std::vector<ComplexPtr> plain(levels);
    for (int i = 0; i < levels; ++i) {
        bases[i] = lay_out(nfs[i], "g:");
        plain[i] = make_complex(GradedComplex::build_indexed(bases[i].gens, bases[i].diff));
    }

    std::vector<Disguise> disguises(levels);
    std::vector<ComplexPtr> dressed(levels);
    for (int i = 0; i < levels; ++i) {
        disguises[i] = sample_disguise(rng, *plain[i]);
        dressed[i] = make_complex(apply_disguise(*plain[i], disguises[i]));
    }

    std::vector<ChainMap> connecting;
    for (int i = 0; i + 1 < levels; ++i) {
        bool stable = i >= first_stable;
        ChainMap f = normal_form_map(rng, nfs[i], plain[i], bases[i], nfs[i + 1], plain[i + 1],
                                     bases[i + 1], stable);
        connecting.push_back(conjugate(f, disguises[i], disguises[i + 1], dressed[i],
                                       dressed[i + 1]));
    }
    return DirectSystem::build(dressed, std::move(connecting));
}

}  // namespace egf
