#pragma once

#include <map>
#include <utility>
#include <vector>

#include "egf/complex.hpp"

namespace egf {

/* Cochain complex with an exhaustive bounded filtration by integer levels.
 * The differential may not decrease the level of any generator. */
class FilteredComplex {
  public:
    static FilteredComplex build(ComplexPtr underlying, std::vector<int> gen_levels);

    const GradedComplex& complex() const { return *underlying_; }
    const ComplexPtr& ptr() const { return underlying_; }
    int level_of(int gen_id) const { return levels_[gen_id]; }
    int min_level() const { return min_level_; }
    int max_level() const { return max_level_; }
    int width() const { return max_level_ - min_level_; }

    /* coordinate basis of F^p C^n (generators of degree n with level >= p) */
    FMatrix filtration_basis(int p, int degree) const;

  private:
    FilteredComplex() = default;
    ComplexPtr underlying_;
    std::vector<int> levels_;
    int min_level_ = 0;
    int max_level_ = 0;
};

/* One page of the spectral sequence of a filtered complex. d_r has bidegree
 * (r, 1-r); entries are stored for the (p, q) window they were computed on. */
struct SSPage {
    int r = 0;
    std::map<std::pair<int, int>, int> dims;
    std::map<std::pair<int, int>, FMatrix> differentials; /* keyed by source (p, q) */

    int dim(int p, int q) const {
        auto it = dims.find({p, q});
        return it == dims.end() ? 0 : it->second;
    }
};

struct Window {
    int p_lo, p_hi, q_lo, q_hi;
};

/* window covering the whole support of the filtered complex */
Window full_window(const FilteredComplex& fc);

/* E_r over the window, by the standard subquotient formula
 * Z_r = F^p C ∩ d^{-1} F^{p+r} C, boundaries from d Z_{r-1}^{p-r+1}. */
SSPage page(const FilteredComplex& fc, int r, const Window& window);

struct LimitPage {
    SSPage einf;       /* computed past the filtration width; no differentials left */
    int collapse_page; /* least r >= 1 with d_s = 0 for every s >= r */
};

LimitPage limit_page(const FilteredComplex& fc);

struct ConvergenceRow {
    int degree;
    int einf_total;
    int h_dim;
};

/* Σ_p dim E_∞^{p,n-p} against dim H^n for every degree in the support */
std::vector<ConvergenceRow> compare_with_cohomology(const FilteredComplex& fc);

/* cellwise check that dim E_{r+1} is the homology of (E_r, d_r), and that
 * d_r ∘ d_r = 0, for every r in [0, r_hi] */
bool page_recursion_holds(const FilteredComplex& fc, int r_hi);

}  // namespace egf
