#include "egf/spectral.hpp"

#include <algorithm>

namespace egf {

FilteredComplex FilteredComplex::build(ComplexPtr underlying, std::vector<int> gen_levels) {
    if (static_cast<int>(gen_levels.size()) != underlying->size())
        throw InvalidFiltration("one filtration level per generator is required");
    FilteredComplex fc;
    fc.underlying_ = std::move(underlying);
    fc.levels_ = std::move(gen_levels);
    const GradedComplex& c = *fc.underlying_;
    for (int i = 0; i < c.size(); ++i)
        for (const auto& [tgt, coeff] : c.diff(i)) {
            (void)coeff;
            if (fc.levels_[tgt] < fc.levels_[i])
                throw InvalidFiltration("differential drops the filtration level of " +
                                        c.generator(i).label);
        }
    if (c.size() == 0) {
        fc.min_level_ = fc.max_level_ = 0;
    } else {
        auto [lo, hi] = std::minmax_element(fc.levels_.begin(), fc.levels_.end());
        fc.min_level_ = *lo;
        fc.max_level_ = *hi;
    }
    return fc;
}

FMatrix FilteredComplex::filtration_basis(int p, int degree) const {
    const auto& block = underlying_->gens_in(degree);
    std::vector<int> keep;
    for (int pos = 0; pos < static_cast<int>(block.size()); ++pos)
        if (levels_[block[pos]] >= p) keep.push_back(pos);
    FMatrix basis = FMatrix::Zero(block.size(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) basis(keep[j], j) = Fp(1);
    return basis;
}

Window full_window(const FilteredComplex& fc) {
    const GradedComplex& c = fc.complex();
    Window w;
    w.p_lo = fc.min_level();
    w.p_hi = fc.max_level();
    w.q_lo = c.min_degree() - fc.max_level();
    w.q_hi = c.max_degree() - fc.min_level();
    return w;
}

namespace {

/* Z_r^{p, n} as columns in C^n coordinates; r = -1 is read as r = 0 */
FMatrix zr(const FilteredComplex& fc, int r, int p, int n) {
    if (r < 0) r = 0;
    const GradedComplex& c = fc.complex();
    FMatrix a = fc.filtration_basis(p, n);
    if (a.cols() == 0) return a;
    FMatrix m = c.diff_matrix(n);
    FMatrix t = fc.filtration_basis(p + r, n + 1);
    FMatrix x = preimage_of(FMatrix(m * a), t);
    return image_of(FMatrix(a * x));
}

struct Cell {
    Quotient<Fp> q;   /* Z_r / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}) */
    Cell(const FilteredComplex& fc, int r, int p, int n)
        : q(denominator(fc, r, p, n), zr(fc, r, p, n)) {}

    static FMatrix denominator(const FilteredComplex& fc, int r, int p, int n) {
        FMatrix zprev = zr(fc, r - 1, p + 1, n);
        FMatrix below = zr(fc, r - 1, p - r + 1, n - 1);
        FMatrix bound = fc.complex().diff_matrix(n - 1) * below;
        return image_of(hcat(zprev, bound));
    }
};

}  // namespace

SSPage page(const FilteredComplex& fc, int r, const Window& window) {
    if (r < 0) throw BadRange("negative page index");
    const GradedComplex& c = fc.complex();
    SSPage out;
    out.r = r;

    std::map<std::pair<int, int>, Cell> cells;
    auto cell_at = [&](int p, int q) -> Cell& {
        auto it = cells.find({p, q});
        if (it == cells.end())
            it = cells.emplace(std::pair(p, q), Cell(fc, r, p, p + q)).first;
        return it->second;
    };

    for (int p = window.p_lo; p <= window.p_hi; ++p)
        for (int q = window.q_lo; q <= window.q_hi; ++q) {
            Cell& src = cell_at(p, q);
            out.dims[{p, q}] = src.q.dim();
            if (src.q.dim() == 0) continue;
            Cell& tgt = cell_at(p + r, q - r + 1);
            FMatrix d = c.diff_matrix(p + q);
            FMatrix mat(tgt.q.dim(), src.q.dim());
            for (int j = 0; j < src.q.dim(); ++j)
                mat.col(j) = tgt.q.coords(d * src.q.reps().col(j));
            out.differentials[{p, q}] = std::move(mat);
        }
    return out;
}

namespace {

bool page_has_nonzero_d(const SSPage& pg) {
    for (const auto& [key, m] : pg.differentials) {
        (void)key;
        if (!is_zero(m)) return true;
    }
    return false;
}

}  // namespace

LimitPage limit_page(const FilteredComplex& fc) {
    const Window w = full_window(fc);
    const int r_max = fc.width() + 1;
    LimitPage out;
    out.collapse_page = 1;
    for (int r = 1; r <= r_max; ++r)
        if (page_has_nonzero_d(page(fc, r, w))) out.collapse_page = r + 1;
    out.einf = page(fc, r_max, w);
    return out;
}

bool page_recursion_holds(const FilteredComplex& fc, int r_hi) {
    const Window w = full_window(fc);
    SSPage cur = page(fc, 0, w);
    for (int r = 0; r <= r_hi; ++r) {
        SSPage next = page(fc, r + 1, w);
        for (int p = w.p_lo; p <= w.p_hi; ++p)
            for (int q = w.q_lo; q <= w.q_hi; ++q) {
                int out_rank = 0, in_rank = 0;
                auto out_it = cur.differentials.find({p, q});
                if (out_it != cur.differentials.end()) out_rank = rank_of(out_it->second);
                auto in_it = cur.differentials.find({p - r, q + r - 1});
                if (in_it != cur.differentials.end()) {
                    in_rank = rank_of(in_it->second);
                    /* d_r ∘ d_r = 0 */
                    if (out_it != cur.differentials.end() &&
                        in_it->second.rows() == out_it->second.cols()) {
                        FMatrix dd = out_it->second * in_it->second;
                        if (!is_zero(dd)) return false;
                    }
                }
                int expect = cur.dim(p, q) - out_rank - in_rank;
                if (next.dim(p, q) != expect) return false;
            }
        cur = std::move(next);
    }
    return true;
}

std::vector<ConvergenceRow> compare_with_cohomology(const FilteredComplex& fc) {
    const GradedComplex& c = fc.complex();
    LimitPage lp = limit_page(fc);
    std::vector<ConvergenceRow> rows;
    if (c.size() == 0) return rows;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        int total = 0;
        for (const auto& [pq, dim] : lp.einf.dims)
            if (pq.first + pq.second == n) total += dim;
        rows.push_back({n, total, cohomology_dim(c, n)});
    }
    return rows;
}

}  // namespace egf
