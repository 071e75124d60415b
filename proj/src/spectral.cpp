#include "dihomol/spectral.hpp"

#include <stdexcept>

#include "dihomol/cyclic_bar.hpp"
#include "dihomol/equivariant.hpp"

namespace dihomol {

std::size_t PageReport::at(int q, int j) const {
    auto it = dims.find({q, j});
    return it == dims.end() ? 0 : it->second;
}

namespace {

std::string chain_label(const SparseVector& v, const std::vector<std::string>& basis) {
    if (v.nnz() == 1 && v.back().value.is_one()) return basis[v.back().index];
    std::string out;
    for (const auto& e : v.entries()) {
        if (!out.empty()) out += " + ";
        if (!e.value.is_one()) out += e.value.to_string() + "·";
        out += basis[e.index];
    }
    return "(" + out + ")";
}

SparseVector combine(const std::vector<SparseVector>& reps, const SparseVector& coords) {
    SparseVector out;
    for (const auto& e : coords.entries()) out.axpy(e.value, reps[e.index]);
    return out;
}

/// HH homology bases and the B-induced maps between them.
class Filtration {
public:
    Filtration(const InvolutiveDGA& a, Window window)
        : bar_(a), hh_window_{window.lo - 1, 2}, complex_(hochschild_window(bar_, hh_window_)) {
        if (window.width() < 3) throw std::invalid_argument("spectral pages need a window of at least three degrees");
        for (int j = hh_window_.lo; j <= hh_window_.hi; ++j) words_[j] = bar_.words(j);
        for (int j = window.lo; j <= 1; ++j) {
            forward_.emplace(j, HomologyBasis(complex_, j, PivotOrder::forward));
            reversed_.emplace(j, HomologyBasis(complex_, j, PivotOrder::reversed));
        }
        for (int j = window.lo; j <= 0; ++j) {
            d1_.emplace(j, induced_B(forward_.at(j), forward_.at(j + 1), j));
            d1_reversed_.emplace(j, induced_B(reversed_.at(j), reversed_.at(j + 1), j));
        }
    }

    const Field& field() const { return bar_.field(); }
    const HomologyBasis& basis(int j) const { return forward_.at(j); }
    const std::vector<std::string>& labels(int j) const { return complex_.basis(j); }
    const std::map<int, ExactMatrix>& d1() const { return d1_; }

    bool well_defined() const {
        for (const auto& [j, d] : d1_) {
            const ExactMatrix lhs = compose(d, change_of_basis(j));
            const ExactMatrix rhs = compose(change_of_basis(j + 1), d1_reversed_.at(j));
            if (!(lhs == rhs)) return false;
        }
        return true;
    }

    bool squares_to_zero() const {
        for (const auto& [j, d] : d1_) {
            auto next = d1_.find(j + 1);
            if (next != d1_.end() && !compose(next->second, d).is_zero()) return false;
        }
        return true;
    }

private:
    /// Forward coordinates of the reversed representatives in degree j.
    ExactMatrix change_of_basis(int j) const {
        std::vector<SparseVector> cols;
        for (const auto& z : reversed_.at(j).representatives()) cols.push_back(forward_.at(j).classify(z));
        return ExactMatrix::from_columns(field(), forward_.at(j).dimension(), std::move(cols));
    }

    ExactMatrix induced_B(const HomologyBasis& from, const HomologyBasis& to, int j) const {
        std::map<BarWord, std::size_t> row_of;
        for (std::size_t i = 0; i < words_.at(j + 1).size(); ++i) row_of.emplace(words_.at(j + 1)[i], i);
        std::vector<SparseVector> cols;
        for (const auto& z : from.representatives()) {
            ChainElement x(field());
            for (const auto& e : z.entries()) x.add(words_.at(j)[e.index], e.value);
            std::vector<Entry> image;
            const ChainElement bx = bar_.B(x);
            for (const auto& [w, c] : bx.terms()) image.push_back({row_of.at(w), c});
            cols.push_back(to.classify(SparseVector(std::move(image))));
        }
        return ExactMatrix::from_columns(field(), to.dimension(), std::move(cols));
    }

    CyclicBar bar_;
    Window hh_window_;
    ComplexWindow complex_;
    std::map<int, std::vector<BarWord>> words_;
    std::map<int, HomologyBasis> forward_;
    std::map<int, HomologyBasis> reversed_;
    std::map<int, ExactMatrix> d1_;
    std::map<int, ExactMatrix> d1_reversed_;
};

std::string u_prefix(int q) { return "u^" + std::to_string(q) + "·"; }

PageReport page(const InvolutiveDGA& a, Window window, int number) {
    const Filtration filt(a, window);
    const Field& f = a.field();
    PageReport r;
    r.page = number;
    r.field = f;
    r.window = window;
    r.d1 = filt.d1();
    r.d1_squares_to_zero = filt.squares_to_zero();
    r.d1_well_defined = filt.well_defined();

    for (int k = window.lo + 1; k <= window.hi - 1; ++k) {
        std::size_t total = 0;
        for (int q = 0; k + 2 * q <= 0; ++q) {
            const int j = k + 2 * q;
            const HomologyBasis& hb = filt.basis(j);
            std::vector<SparseVector> classes;  // coordinates in the HH_j basis
            if (number == 1) {
                for (std::size_t i = 0; i < hb.dimension(); ++i) classes.push_back(SparseVector::unit(f, i));
            } else {
                EchelonReducer reducer(f);
                if (q >= 1) {
                    for (const auto& col : filt.d1().at(j - 1).columns()) reducer.insert(col);
                }
                for (auto& z : kernel_basis(filt.d1().at(j))) {
                    if (reducer.insert(z)) classes.push_back(std::move(z));
                }
            }
            auto& gens = r.generators[{q, j}];
            for (const auto& c : classes) gens.push_back(u_prefix(q) + chain_label(combine(hb.representatives(), c), filt.labels(j)));
            r.dims[{q, j}] = classes.size();
            total += classes.size();
        }
        r.totals[k] = total;
    }
    r.limit = homology(fixed_cyclic_window(a, window)).betti;
    r.collapse = r.totals == r.limit;
    return r;
}

}  // namespace

PageReport e1_page(const InvolutiveDGA& a, Window window) { return page(a, window, 1); }

PageReport e2_page(const InvolutiveDGA& a, Window window) { return page(a, window, 2); }

}  // namespace dihomol
