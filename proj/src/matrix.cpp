#include "dihomol/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dihomol {

SparseVector::SparseVector(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.index < b.index; });
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().index == e.index) {
            entries_.back().value += e.value;
        } else {
            entries_.push_back(std::move(e));
        }
    }
    std::erase_if(entries_, [](const Entry& e) { return e.value.is_zero(); });
}

Scalar SparseVector::coeff(std::size_t index, const Field& f) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.index < i; });
    if (it != entries_.end() && it->index == index) return it->value;
    return Scalar::zero(f);
}

void SparseVector::axpy(const Scalar& a, const SparseVector& x) {
    if (a.is_zero() || x.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + x.entries_.size());
    auto i = entries_.begin();
    auto j = x.entries_.begin();
    while (i != entries_.end() || j != x.entries_.end()) {
        if (j == x.entries_.end() || (i != entries_.end() && i->index < j->index)) {
            merged.push_back(std::move(*i++));
        } else if (i == entries_.end() || j->index < i->index) {
            merged.push_back({j->index, a * j->value});
            ++j;
        } else {
            Scalar v = std::move(i->value);
            v += a * j->value;
            if (!v.is_zero()) merged.push_back({i->index, std::move(v)});
            ++i;
            ++j;
        }
    }
    entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& a) {
    if (a.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.value *= a;
}

ExactMatrix::ExactMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), columns_(cols) {}

ExactMatrix ExactMatrix::from_triplets(const Field& field, std::size_t rows, std::size_t cols,
                                       std::span<const Triplet> triplets) {
    std::vector<std::vector<Entry>> buckets(cols);
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix shape");
        if (!(t.value.field() == field)) throw FieldMismatch("triplet over " + t.value.field().name());
        buckets[t.col].push_back({t.row, t.value});
    }
    ExactMatrix m(field, rows, cols);
    for (std::size_t c = 0; c < cols; ++c) m.columns_[c] = SparseVector(std::move(buckets[c]));
    return m;
}

ExactMatrix ExactMatrix::from_columns(const Field& field, std::size_t rows, std::vector<SparseVector> columns) {
    for (const auto& col : columns) {
        for (const auto& e : col.entries()) {
            if (e.index >= rows) throw std::out_of_range("column entry outside matrix shape");
            if (!(e.value.field() == field)) throw FieldMismatch("column entry over " + e.value.field().name());
        }
    }
    ExactMatrix m(field, rows, 0);
    m.columns_ = std::move(columns);
    return m;
}

ExactMatrix ExactMatrix::identity(const Field& field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(field, i);
    return m;
}

Scalar ExactMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols()) throw std::out_of_range("matrix index");
    return columns_[col].coeff(row, field_);
}

std::size_t ExactMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.nnz();
    return n;
}

std::vector<Triplet> ExactMatrix::triplets() const {
    std::vector<Triplet> out;
    out.reserve(nonzeros());
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& e : columns_[c].entries()) out.push_back({e.index, c, e.value});
    }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    std::vector<Triplet> t;
    t.reserve(nonzeros());
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& e : columns_[c].entries()) t.push_back({c, e.index, e.value});
    }
    return from_triplets(field_, cols(), rows_, t);
}

SparseVector apply(const ExactMatrix& m, const SparseVector& v) {
    SparseVector out;
    for (const auto& e : v.entries()) {
        if (e.index >= m.cols()) throw std::invalid_argument("vector longer than matrix width");
        out.axpy(e.value, m.column(e.index));
    }
    return out;
}

ExactMatrix compose(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("compose over different fields");
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("compose: inner dimensions " + std::to_string(a.cols()) + " and " +
                                    std::to_string(b.rows()) + " differ");
    }
    std::vector<SparseVector> cols;
    cols.reserve(b.cols());
    for (const auto& col : b.columns()) cols.push_back(apply(a, col));
    return ExactMatrix::from_columns(a.field(), a.rows(), std::move(cols));
}

ExactMatrix add_scaled(const ExactMatrix& a, const Scalar& factor, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add_scaled: shape mismatch");
    std::vector<SparseVector> cols = a.columns();
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c].axpy(factor, b.column(c));
    return ExactMatrix::from_columns(a.field(), a.rows(), std::move(cols));
}

const EchelonReducer::Stored* EchelonReducer::find_pivot(std::size_t index) const {
    if (index >= pivot_slot_.size() || pivot_slot_[index] < 0) return nullptr;
    return &basis_[static_cast<std::size_t>(pivot_slot_[index])];
}

EchelonReducer::Reduction EchelonReducer::reduce(SparseVector v) const {
    Reduction out;
    std::vector<Entry> kept;  // entries (descending index) with no pivot
    while (!v.empty()) {
        const Entry& low = v.back();
        if (const Stored* s = find_pivot(low.index)) {
            Scalar factor = low.value;
            out.track.axpy(factor, s->track);
            v.axpy(-factor, s->vector);
        } else {
            kept.push_back(v.pop_back());
        }
    }
    out.residual = SparseVector(std::move(kept));
    return out;
}

bool EchelonReducer::insert(SparseVector v, SparseVector track) {
    // Full reduction is unnecessary for independence: clear pivots from the
    // top until the leading index is free.
    while (!v.empty()) {
        const Entry& low = v.back();
        const Stored* s = find_pivot(low.index);
        if (s == nullptr) break;
        Scalar factor = low.value;
        track.axpy(-factor, s->track);
        v.axpy(-factor, s->vector);
    }
    if (v.empty()) return false;
    const Scalar inv = v.back().value.inverse();
    v.scale(inv);
    track.scale(inv);
    const std::size_t index = v.back().index;
    if (pivot_slot_.size() <= index) pivot_slot_.resize(index + 1, -1);
    pivot_slot_[index] = static_cast<std::ptrdiff_t>(basis_.size());
    basis_.push_back({std::move(v), std::move(track)});
    return true;
}

namespace {

// Markowitz-flavoured ordering: sparse columns are processed first, and rows
// are relabelled so that the sparsest row of a column is the pivot candidate.
struct PivotPlan {
    std::vector<std::size_t> column_order;
    std::vector<std::size_t> row_rank;  // original row -> relabelled index
};

PivotPlan plan_pivots(const ExactMatrix& m) {
    std::vector<std::size_t> row_count(m.rows(), 0);
    for (const auto& col : m.columns()) {
        for (const auto& e : col.entries()) ++row_count[e.index];
    }
    std::vector<std::size_t> rows(m.rows());
    std::iota(rows.begin(), rows.end(), 0);
    std::stable_sort(rows.begin(), rows.end(),
                     [&](std::size_t a, std::size_t b) { return row_count[a] > row_count[b]; });
    PivotPlan plan;
    plan.row_rank.resize(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) plan.row_rank[rows[i]] = i;

    plan.column_order.resize(m.cols());
    std::iota(plan.column_order.begin(), plan.column_order.end(), 0);
    std::stable_sort(plan.column_order.begin(), plan.column_order.end(), [&](std::size_t a, std::size_t b) {
        return m.column(a).nnz() < m.column(b).nnz();
    });
    return plan;
}

SparseVector relabel(const SparseVector& v, const std::vector<std::size_t>& rank) {
    std::vector<Entry> e;
    e.reserve(v.nnz());
    for (const auto& x : v.entries()) e.push_back({rank[x.index], x.value});
    return SparseVector(std::move(e));
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const PivotPlan plan = plan_pivots(m);
    EchelonReducer reducer(m.field());
    for (std::size_t c : plan.column_order) {
        if (m.column(c).empty()) continue;
        reducer.insert(relabel(m.column(c), plan.row_rank));
        if (reducer.size() == std::min(m.rows(), m.cols())) break;
    }
    return reducer.size();
}

std::vector<SparseVector> kernel_basis(const ExactMatrix& m, PivotOrder order) {
    const PivotPlan plan = plan_pivots(m);
    std::vector<std::size_t> columns = plan.column_order;
    if (order == PivotOrder::reversed) std::reverse(columns.begin(), columns.end());

    EchelonReducer reducer(m.field());
    std::vector<SparseVector> kernel;
    for (std::size_t c : columns) {
        SparseVector track = SparseVector::unit(m.field(), c);
        if (m.column(c).empty()) {
            kernel.push_back(std::move(track));
            continue;
        }
        auto red = reducer.reduce(relabel(m.column(c), plan.row_rank));
        if (red.residual.empty()) {
            // column == sum track_i * column_i, so e_c - track is in the kernel
            track.axpy(-Scalar::one(m.field()), red.track);
            kernel.push_back(std::move(track));
        } else {
            reducer.insert(relabel(m.column(c), plan.row_rank), std::move(track));
        }
    }
    for (const auto& k : kernel) {
        if (!apply(m, k).empty()) throw std::logic_error("kernel_basis produced a non-null vector");
    }
    return kernel;
}

}  // namespace dihomol
