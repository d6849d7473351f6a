#include "egf/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "egf/linalg.hpp"

namespace egf {

bool operator==(const SparseMatrix::Entry& a, const SparseMatrix::Entry& b) {
    return a.row == b.row && a.col == b.col && a.value == b.value;
}

void SparseMatrix::check_bounds(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw InvariantError("sparse matrix index out of range");
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Fp(1));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const FMatrix& d) {
    SparseMatrix m(static_cast<int>(d.rows()), static_cast<int>(d.cols()));
    for (int c = 0; c < d.cols(); ++c)
        for (int r = 0; r < d.rows(); ++r)
            if (!d(r, c).is_zero()) m.set(r, c, d(r, c));
    return m;
}

namespace {
bool entry_before(const SparseMatrix::Entry& e, std::pair<int, int> key) {
    return std::pair(e.row, e.col) < key;
}
}  // namespace

void SparseMatrix::add(int r, int c, Fp v) {
    check_bounds(r, c);
    if (v.is_zero()) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(r, c), entry_before);
    if (it != entries_.end() && it->row == r && it->col == c) {
        it->value += v;
        if (it->value.is_zero()) entries_.erase(it);
    } else {
        entries_.insert(it, Entry{r, c, v});
    }
}

void SparseMatrix::set(int r, int c, Fp v) {
    check_bounds(r, c);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(r, c), entry_before);
    if (it != entries_.end() && it->row == r && it->col == c) {
        if (v.is_zero())
            entries_.erase(it);
        else
            it->value = v;
    } else if (!v.is_zero()) {
        entries_.insert(it, Entry{r, c, v});
    }
}

Fp SparseMatrix::at(int r, int c) const {
    check_bounds(r, c);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(r, c), entry_before);
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return Fp(0);
}

FMatrix SparseMatrix::to_dense() const {
    FMatrix d = FMatrix::Zero(rows_, cols_);
    for (const auto& e : entries_) d(e.row, e.col) = e.value;
    return d;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& e : entries_) t.set(e.col, e.row, e.value);
    return t;
}

FVector SparseMatrix::apply(const FVector& v) const {
    if (v.size() != cols_) throw AmbientMismatch("vector length does not match matrix columns");
    FVector out = FVector::Zero(rows_);
    for (const auto& e : entries_) out(e.row) += e.value * v(e.col);
    return out;
}

Subspace::Subspace(int ambient_dim, const FMatrix& spanning_columns) : ambient_(ambient_dim) {
    if (spanning_columns.rows() != ambient_dim && spanning_columns.cols() != 0)
        throw AmbientMismatch("spanning vectors do not live in the ambient space");
    FMatrix cols = spanning_columns;
    if (cols.rows() != ambient_dim) cols.resize(ambient_dim, 0);
    basis_ = image_of(cols);
}

Subspace Subspace::full(int ambient_dim) {
    return Subspace(ambient_dim, FMatrix::Identity(ambient_dim, ambient_dim));
}

bool Subspace::contains(const FVector& v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector not in the ambient space");
    return SpanForm<Fp>(basis_).contains(v);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("subspaces in different ambient spaces");
    return SpanForm<Fp>(basis_).contains_all(other.basis_);
}

namespace detail {

int sparse_rank(const SparseMatrix& m) {
    /* columns as sorted (row -> value) maps */
    std::vector<std::map<int, Fp>> cols(m.cols());
    for (const auto& e : m.entries()) cols[e.col][e.row] = e.value;

    std::vector<bool> done(cols.size(), false);
    int rank = 0;
    for (;;) {
        /* fewest-entries pivot column among the remaining nonzero ones */
        int best = -1;
        std::size_t best_size = 0;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (done[j] || cols[j].empty()) continue;
            if (best < 0 || cols[j].size() < best_size) {
                best = j;
                best_size = cols[j].size();
            }
        }
        if (best < 0) break;
        done[best] = true;
        ++rank;
        const int prow = cols[best].begin()->first;
        const Fp pval = cols[best].begin()->second;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (done[j]) continue;
            auto it = cols[j].find(prow);
            if (it == cols[j].end()) continue;
            Fp factor = it->second / pval;
            for (const auto& [r, v] : cols[best]) {
                auto jt = cols[j].find(r);
                if (jt == cols[j].end()) {
                    cols[j][r] = -(factor * v);
                } else {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) cols[j].erase(jt);
                }
            }
        }
    }
    return rank;
}

}  // namespace detail

int rank(const SparseMatrix& m) {
    if (m.rows() < detail::kDenseCutoff && m.cols() < detail::kDenseCutoff)
        return rank_of(m.to_dense());
    return detail::sparse_rank(m);
}

Subspace kernel_basis(const SparseMatrix& m) {
    return Subspace(m.cols(), kernel_of(m.to_dense()));
}

Subspace image_basis(const SparseMatrix& m) {
    return Subspace(m.rows(), image_of(m.to_dense()));
}

Subspace preimage_subspace(const SparseMatrix& m, const Subspace& target) {
    if (target.ambient_dim() != m.rows())
        throw AmbientMismatch("preimage target must live in the codomain");
    return Subspace(m.cols(), preimage_of(m.to_dense(), target.basis()));
}

int subquotient_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatch("subquotient of subspaces in different ambient spaces");
    if (!a.contains(b)) throw NotContained("denominator is not contained in the numerator");
    return a.dim() - b.dim();
}

}  // namespace egf
