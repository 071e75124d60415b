#include "dihomol/complex.hpp"

#include <stdexcept>

namespace dihomol {

std::string theory_label(Theory t) {
    switch (t) {
        case Theory::HH: return "HH";
        case Theory::HC: return "HC";
        case Theory::HCneg: return "HC-";
        case Theory::HD: return "HD";
        case Theory::HDneg: return "HD-";
        case Theory::HRneg: return "HR-";
        case Theory::Custom: return "custom";
    }
    return "custom";
}

ComplexWindow::ComplexWindow(Theory theory, const Field& field, Window window,
                             std::map<int, std::vector<std::string>> bases,
                             std::map<int, ExactMatrix> differentials)
    : theory_(theory), field_(field), window_(window), bases_(std::move(bases)),
      differentials_(std::move(differentials)) {
    if (window_.hi < window_.lo) throw std::invalid_argument("complex window with hi < lo");
    for (int k = window_.lo; k <= window_.hi; ++k) bases_[k];
    for (auto it = bases_.begin(); it != bases_.end();) {
        it = window_.contains(it->first) ? std::next(it) : bases_.erase(it);
    }
    for (int k = window_.lo + 1; k <= window_.hi; ++k) {
        auto it = differentials_.find(k);
        if (it == differentials_.end()) {
            differentials_.emplace(k, ExactMatrix(field_, bases_[k - 1].size(), bases_[k].size()));
            continue;
        }
        const ExactMatrix& d = it->second;
        if (!(d.field() == field_)) throw FieldMismatch("differential over " + d.field().name());
        if (d.rows() != bases_[k - 1].size() || d.cols() != bases_[k].size()) {
            throw std::invalid_argument("d_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) + "x" +
                                        std::to_string(d.cols()) + ", expected " +
                                        std::to_string(bases_[k - 1].size()) + "x" +
                                        std::to_string(bases_[k].size()));
        }
    }
    std::erase_if(differentials_, [&](const auto& kv) { return kv.first <= window_.lo || kv.first > window_.hi; });
}

std::size_t ComplexWindow::dimension(int k) const { return basis(k).size(); }

const std::vector<std::string>& ComplexWindow::basis(int k) const {
    auto it = bases_.find(k);
    if (it == bases_.end()) throw std::out_of_range("degree " + std::to_string(k) + " outside complex window");
    return it->second;
}

const ExactMatrix& ComplexWindow::differential(int k) const {
    auto it = differentials_.find(k);
    if (it == differentials_.end()) throw std::out_of_range("no differential d_" + std::to_string(k) + " in window");
    return it->second;
}

std::vector<int> ComplexWindow::d_squared_failures() const {
    std::vector<int> bad;
    for (int k = window_.lo + 1; k < window_.hi; ++k) {
        if (!compose(differential(k), differential(k + 1)).is_zero()) bad.push_back(k);
    }
    return bad;
}

std::size_t BettiTable::at(int k) const {
    auto it = betti.find(k);
    if (it == betti.end()) {
        throw std::out_of_range("degree " + std::to_string(k) + " is not a reliable degree of this table");
    }
    return it->second;
}

BettiTable homology(const ComplexWindow& c) {
    const Window w = c.window();
    if (w.width() < 3) throw std::invalid_argument("homology needs a window of at least three degrees");
    std::map<int, std::size_t> ranks;
    for (int k = w.lo + 1; k <= w.hi; ++k) ranks[k] = rank(c.differential(k));
    BettiTable t;
    t.theory = c.theory();
    t.field = c.field();
    t.window = w;
    for (int k = w.lo + 1; k < w.hi; ++k) {
        t.betti[k] = c.dimension(k) - ranks[k] - ranks[k + 1];
    }
    return t;
}

HomologyBasis::HomologyBasis(const ComplexWindow& c, int degree, PivotOrder order)
    : degree_(degree), field_(c.field()), reducer_(c.field()) {
    const Window w = c.window();
    if (degree <= w.lo || degree >= w.hi) {
        throw std::out_of_range("homology basis requested at unreliable degree " + std::to_string(degree));
    }
    outgoing_ = c.differential(degree);
    const ExactMatrix& incoming = c.differential(degree + 1);
    for (const auto& col : incoming.columns()) reducer_.insert(col);
    for (auto& z : kernel_basis(outgoing_, order)) {
        SparseVector track = SparseVector::unit(field_, representatives_.size());
        if (reducer_.insert(z, track)) representatives_.push_back(std::move(z));
    }
}

SparseVector HomologyBasis::classify(const SparseVector& cycle) const {
    if (!apply(outgoing_, cycle).empty()) {
        throw std::invalid_argument("classify: vector is not a cycle in degree " + std::to_string(degree_));
    }
    auto red = reducer_.reduce(cycle);
    if (!red.residual.empty()) throw std::logic_error("cycle outside span of boundaries and representatives");
    return red.track;
}

}  // namespace dihomol
