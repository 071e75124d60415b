#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dihomol/field.hpp"

namespace dihomol {

struct Entry {
    std::size_t index;
    Scalar value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVector {
public:
    SparseVector() = default;
    /// Sorts, merges duplicate indices and drops zeros.
    explicit SparseVector(std::vector<Entry> entries);

    static SparseVector unit(const Field& f, std::size_t index) {
        return SparseVector(std::vector<Entry>{{index, Scalar::one(f)}});
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    const Entry& back() const { return entries_.back(); }
    Entry pop_back() {
        Entry e = std::move(entries_.back());
        entries_.pop_back();
        return e;
    }

    /// Coefficient at `index`, or zero of `f` when absent.
    Scalar coeff(std::size_t index, const Field& f) const;

    /// this += a * x
    void axpy(const Scalar& a, const SparseVector& x);
    void scale(const Scalar& a);

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
};

/// Exact sparse matrix over one field, stored column by column.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(const Field& field, std::size_t rows, std::size_t cols);

    /// Duplicate (row, col) pairs are summed.
    static ExactMatrix from_triplets(const Field& field, std::size_t rows, std::size_t cols,
                                     std::span<const Triplet> triplets);
    static ExactMatrix from_columns(const Field& field, std::size_t rows, std::vector<SparseVector> columns);
    static ExactMatrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const SparseVector& column(std::size_t c) const { return columns_.at(c); }
    const std::vector<SparseVector>& columns() const { return columns_; }

    Scalar at(std::size_t row, std::size_t col) const;
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }
    /// Nonzero entries ordered by (col, row).
    std::vector<Triplet> triplets() const;

    ExactMatrix transpose() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// a * b. Throws std::invalid_argument on inner-dimension mismatch and
/// FieldMismatch when the fields differ.
ExactMatrix compose(const ExactMatrix& a, const ExactMatrix& b);
/// a + factor * b
ExactMatrix add_scaled(const ExactMatrix& a, const Scalar& factor, const ExactMatrix& b);
SparseVector apply(const ExactMatrix& m, const SparseVector& v);

std::size_t rank(const ExactMatrix& m);

enum class PivotOrder { forward, reversed };

/// Null-space basis of `m` (vectors of length m.cols()). The order is
/// deterministic; `reversed` walks the columns the opposite way and so
/// yields a different, equally valid basis.
std::vector<SparseVector> kernel_basis(const ExactMatrix& m, PivotOrder order = PivotOrder::forward);

/// Incremental row-echelon basis of a subspace. Each stored vector remembers
/// a "track": its expression in terms of the tracked generators inserted so
/// far, which lets callers read off coordinates modulo untracked vectors.
class EchelonReducer {
public:
    explicit EchelonReducer(const Field& field) : field_(field) {}

    struct Reduction {
        SparseVector residual;
        /// v - residual == sum of track[i] * (tracked generator i)
        /// modulo the span of the untracked generators.
        SparseVector track;
    };

    Reduction reduce(SparseVector v) const;

    /// Adds `v` to the span. Returns false when `v` was already in it.
    bool insert(SparseVector v, SparseVector track = {});

    std::size_t size() const { return basis_.size(); }
    const Field& field() const { return field_; }

private:
    struct Stored {
        SparseVector vector;  // pivot (largest index) coefficient is 1
        SparseVector track;
    };
    const Stored* find_pivot(std::size_t index) const;

    Field field_;
    std::vector<Stored> basis_;
    std::vector<std::ptrdiff_t> pivot_slot_;  // index -> basis_ slot or -1
};

}  // namespace dihomol
