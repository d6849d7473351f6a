#pragma once

#include <vector>

#include "egf/eigen_support.hpp"
#include "egf/errors.hpp"
#include "egf/fp.hpp"

namespace egf {

/* Sparse matrix over F_p in coordinate form. Entries are kept sorted by
 * (row, col), without duplicates and without explicit zeros. */
class SparseMatrix {
  public:
    struct Entry {
        int row;
        int col;
        Fp value;
    };

    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(int n);
    static SparseMatrix from_dense(const FMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /* accumulate into (r, c); the entry is dropped if the sum is zero */
    void add(int r, int c, Fp v);
    void set(int r, int c, Fp v);
    Fp at(int r, int c) const;

    FMatrix to_dense() const;
    SparseMatrix transposed() const;

    FVector apply(const FVector& v) const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    void check_bounds(int r, int c) const;

    int rows_;
    int cols_;
    std::vector<Entry> entries_;
};

bool operator==(const SparseMatrix::Entry& a, const SparseMatrix::Entry& b);

/* Subspace of F_p^n given by an independent set of column vectors. The
 * constructor column-reduces its input, so the stored basis is canonical. */
class Subspace {
  public:
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}
    Subspace(int ambient_dim, const FMatrix& spanning_columns);

    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const FMatrix& basis() const { return basis_; }

    bool contains(const FVector& v) const;
    bool contains(const Subspace& other) const;

  private:
    int ambient_;
    FMatrix basis_;
};

/* exact_linear_algebra operations; all pure */
int rank(const SparseMatrix& m);
Subspace kernel_basis(const SparseMatrix& m);
Subspace image_basis(const SparseMatrix& m);
Subspace preimage_subspace(const SparseMatrix& m, const Subspace& target);
int subquotient_dim(const Subspace& a, const Subspace& b);

namespace detail {
/* list-of-columns elimination with fewest-entries column pivoting; used for
 * matrices past the dense cutoff and cross-checked against the dense route */
int sparse_rank(const SparseMatrix& m);
constexpr int kDenseCutoff = 64;
}  // namespace detail

}  // namespace egf
