#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "egf/eigen_support.hpp"
#include "egf/errors.hpp"

/* Exact dense elimination over an arbitrary field scalar. Everything is
 * built on one primitive: a fully reduced column echelon form computed with
 * a caller-chosen row scan order. Pivot choice is deterministic (first
 * eligible column), so every derived basis is reproducible run to run. */
namespace egf {

template <class S>
using DMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool is_zero(const DMatrix<S>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <class S>
struct ColumnReduction {
    DMatrix<S> reduced;           /* n x m, fully reduced columns; = input * transform */
    DMatrix<S> transform;         /* m x m, invertible */
    std::vector<int> pivot_rows;  /* row of the pivot of reduced column i, i < rank */
    std::vector<int> col_origin;  /* original column index now sitting at position j */
    int rank = 0;

    /* which original columns were selected as pivots (in selection order) */
    std::vector<int> pivot_origins() const {
        return {col_origin.begin(), col_origin.begin() + rank};
    }
};

inline std::vector<int> top_down(int rows) {
    std::vector<int> order(rows);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

inline std::vector<int> bottom_up(int rows) {
    std::vector<int> order(rows);
    for (int i = 0; i < rows; ++i) order[i] = rows - 1 - i;
    return order;
}

template <class S>
ColumnReduction<S> column_reduce(const DMatrix<S>& a, const std::vector<int>& row_order) {
    const int n = static_cast<int>(a.rows());
    const int m = static_cast<int>(a.cols());
    ColumnReduction<S> cr;
    cr.reduced = a;
    cr.transform = DMatrix<S>::Identity(m, m);
    cr.col_origin.resize(m);
    std::iota(cr.col_origin.begin(), cr.col_origin.end(), 0);

    auto& w = cr.reduced;
    auto& t = cr.transform;
    int next = 0;
    for (int r : row_order) {
        if (next == m) break;
        int pivot = -1;
        for (int j = next; j < m; ++j)
            if (!w(r, j).is_zero()) {
                pivot = j;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != next) {
            w.col(pivot).swap(w.col(next));
            t.col(pivot).swap(t.col(next));
            std::swap(cr.col_origin[pivot], cr.col_origin[next]);
        }
        S inv = w(r, next).inverse();
        if (!(inv == S(1))) {
            w.col(next) *= inv;
            t.col(next) *= inv;
        }
        for (int j = 0; j < m; ++j) {
            if (j == next) continue;
            S c = w(r, j);
            if (c.is_zero()) continue;
            w.col(j) -= c * w.col(next);
            t.col(j) -= c * t.col(next);
        }
        cr.pivot_rows.push_back(r);
        ++next;
    }
    cr.rank = next;
    (void)n;
    return cr;
}

template <class S>
ColumnReduction<S> column_reduce(const DMatrix<S>& a) {
    return column_reduce(a, top_down(static_cast<int>(a.rows())));
}

template <class S>
int rank_of(const DMatrix<S>& a) {
    return column_reduce(a).rank;
}

/* Basis of ker a as columns: the transform columns whose reduced image is 0. */
template <class S>
DMatrix<S> kernel_of(const DMatrix<S>& a) {
    auto cr = column_reduce(a);
    return cr.transform.rightCols(a.cols() - cr.rank);
}

/* Canonical basis of the column span (column-reduced echelon columns). */
template <class S>
DMatrix<S> image_of(const DMatrix<S>& a) {
    auto cr = column_reduce(a);
    return cr.reduced.leftCols(cr.rank);
}

/* Echelon data reused for membership and normal-form queries. */
template <class S>
struct SpanForm {
    DMatrix<S> basis;             /* column echelon, full reduced */
    std::vector<int> pivot_rows;  /* one per basis column */

    explicit SpanForm(const DMatrix<S>& a) {
        auto cr = column_reduce(a);
        basis = cr.reduced.leftCols(cr.rank);
        pivot_rows = cr.pivot_rows;
    }

    int dim() const { return static_cast<int>(basis.cols()); }
    int ambient() const { return static_cast<int>(basis.rows()); }

    /* canonical representative of v modulo the span: zero on all pivot rows */
    DVector<S> normal_form(const DVector<S>& v) const {
        DVector<S> w = v;
        for (int i = 0; i < dim(); ++i) {
            S c = w(pivot_rows[i]);
            if (!c.is_zero()) w -= c * basis.col(i);
        }
        return w;
    }

    bool contains(const DVector<S>& v) const {
        DVector<S> w = normal_form(v);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (!w(i).is_zero()) return false;
        return true;
    }

    bool contains_all(const DMatrix<S>& vs) const {
        for (Eigen::Index j = 0; j < vs.cols(); ++j)
            if (!contains(vs.col(j))) return false;
        return true;
    }
};

/* Coefficients x with a*x = v, if solvable. */
template <class S>
std::optional<DVector<S>> solve_in_span(const ColumnReduction<S>& cr, const DVector<S>& v) {
    DVector<S> w = v;
    DVector<S> y = DVector<S>::Zero(cr.transform.cols());
    for (int i = 0; i < cr.rank; ++i) {
        S c = w(cr.pivot_rows[i]);
        if (!c.is_zero()) {
            y(i) = c;
            w -= c * cr.reduced.col(i);
        }
    }
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (!w(i).is_zero()) return std::nullopt;
    return DVector<S>(cr.transform * y);
}

/* Concatenate two column collections (same row count). */
template <class S>
DMatrix<S> hcat(const DMatrix<S>& a, const DMatrix<S>& b) {
    DMatrix<S> out(a.rows(), a.cols() + b.cols());
    out << a, b;
    return out;
}

/* Basis of span(a) ∩ span(b). */
template <class S>
DMatrix<S> intersect_spans(const DMatrix<S>& a, const DMatrix<S>& b) {
    DMatrix<S> ker = kernel_of(hcat(a, b));
    DMatrix<S> cand = a * ker.topRows(a.cols());
    return image_of(cand);
}

/* Basis of {v : m*v ∈ span(t)}. */
template <class S>
DMatrix<S> preimage_of(const DMatrix<S>& m, const DMatrix<S>& t) {
    DMatrix<S> ker = kernel_of(hcat(m, t));
    DMatrix<S> cand = ker.topRows(m.cols());
    return image_of(cand);
}

/* Quotient Z / D of two nested spans inside a common ambient space.
 * Representatives are columns of z selected greedily after a basis of d, so
 * each representative is an actual element of Z independent modulo D. */
template <class S>
class Quotient {
  public:
    Quotient(const DMatrix<S>& d, const DMatrix<S>& z) : denom_(d) {
        auto cr = column_reduce(hcat(d, z));
        const int dcols = static_cast<int>(d.cols());
        std::vector<int> sel;
        for (int i = 0; i < cr.rank; ++i)
            if (cr.col_origin[i] >= dcols) sel.push_back(cr.col_origin[i] - dcols);
        reps_.resize(z.rows(), static_cast<Eigen::Index>(sel.size()));
        for (std::size_t j = 0; j < sel.size(); ++j) reps_.col(j) = z.col(sel[j]);
        mixed_ = column_reduce(hcat(reps_, denom_));
    }

    int dim() const { return static_cast<int>(reps_.cols()); }
    const DMatrix<S>& reps() const { return reps_; }

    /* coordinates of the class of v; v must lie in Z */
    DVector<S> coords(const DVector<S>& v) const {
        auto sol = solve_in_span(mixed_, DVector<S>(v));
        if (!sol) throw InvariantError("vector not in the subquotient numerator");
        return sol->topRows(dim());
    }

  private:
    DMatrix<S> reps_;
    DMatrix<S> denom_;
    ColumnReduction<S> mixed_;
};

}  // namespace egf
