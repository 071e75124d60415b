#include "dihomol/equivariant.hpp"

#include <functional>
#include <stdexcept>

namespace dihomol {

const std::vector<BarWord>& HochschildCache::words(int degree) {
    auto it = words_.find(degree);
    if (it == words_.end()) it = words_.emplace(degree, bar_.words(degree)).first;
    return it->second;
}

namespace {

const ChainElement& memo(std::map<BarWord, ChainElement>& table, const BarWord& w,
                         const std::function<ChainElement(const ChainElement&)>& op, const Field& f) {
    auto it = table.find(w);
    if (it == table.end()) it = table.emplace(w, op(ChainElement(f, w))).first;
    return it->second;
}

}  // namespace

const ChainElement& HochschildCache::D(const BarWord& w) {
    return memo(d_, w, [this](const ChainElement& x) { return bar_.b(x); }, field());
}

const ChainElement& HochschildCache::B(const BarWord& w) {
    return memo(b_, w, [this](const ChainElement& x) { return bar_.B(x); }, field());
}

const ChainElement& HochschildCache::R(const BarWord& w) {
    return memo(r_, w, [this](const ChainElement& x) { return bar_.R(x); }, field());
}

int default_weight_cap(Window window) { return window.hi - window.lo + 2; }

namespace {

struct Shape {
    bool orbit = false;
    bool u = false;
    bool v = false;
};

Shape shape_of(Theory t) {
    switch (t) {
        case Theory::HC: return {true, true, false};
        case Theory::HD: return {true, true, true};
        case Theory::HCneg: return {false, true, false};
        case Theory::HRneg: return {false, false, true};
        case Theory::HDneg: return {false, true, true};
        default: throw std::invalid_argument("not an equivariant theory: " + theory_label(t));
    }
}

std::string cell_label(const CyclicBar& bar, const Shape& s, const EquivariantWord& c) {
    std::string out;
    const auto power = [&](char symbol, int k) {
        out += symbol;
        out += '^';
        out += std::to_string(s.orbit ? -k : k);
        out += "·";
    };
    if (s.u) power('u', c.q);
    if (s.v) power('v', c.p);
    return out + bar.label(c.word);
}

using Image = std::vector<std::pair<EquivariantWord, Scalar>>;

class Assembler {
public:
    Assembler(Theory theory, HochschildCache& cache, Window window, std::optional<int> cap)
        : theory_(theory), shape_(shape_of(theory)), cache_(cache), window_(window),
          cap_(cap.value_or(default_weight_cap(window))) {
        if (cache_.bar().max_bar_length()) {
            throw FinitenessError(theory_label(theory) +
                                  " needs the full bar complex; max_bar_length only applies to HH");
        }
        if (!cache_.bar().degreewise_finite()) {
            throw FinitenessError(theory_label(theory) +
                                  " is infinite in each degree: the algebra has a reduced generator of "
                                  "cohomological degree < 2");
        }
        if (shape_.orbit && cap_ < 0) throw std::invalid_argument("weight cap must be non-negative");
    }

    std::vector<EquivariantWord> cells(int k) {
        std::vector<EquivariantWord> out;
        const int p_max = shape_.v ? (shape_.orbit ? k + cap_ : -k) : 0;
        for (int p = 0; p <= p_max; ++p) {
            for (int q = 0; shape_.u || q == 0; ++q) {
                const int j = shape_.orbit ? k - p - 2 * q : k + p + 2 * q;
                if (shape_.orbit ? j < -cap_ : j > 0) break;
                for (const auto& w : cache_.words(j)) {
                    if (shape_.orbit && cache_.weight(w) > cap_) continue;
                    out.push_back({p, q, w});
                }
            }
        }
        return out;
    }

    Image image(const EquivariantWord& c, int k) {
        Image out;
        const Field& f = cache_.field();
        const auto add = [&](int p, int q, const ChainElement& x, const Scalar& s) {
            for (const auto& [w, coeff] : x.terms()) out.push_back({{p, q, w}, coeff * s});
        };
        const ChainElement self(f, c.word);
        if (!shape_.orbit) {
            add(c.p, c.q, cache_.D(c.word), Scalar::one(f));
            if (shape_.u) add(c.p, c.q + 1, cache_.B(c.word), Scalar::one(f));
            if (shape_.v) {
                const Scalar sign = Scalar(f, fixed_point_sign(k));
                add(c.p + 1, c.q, cache_.R(c.word), sign * sign_scalar(f, c.q));
                add(c.p + 1, c.q, self, -sign * sign_scalar(f, c.p));
            }
        } else {
            const Scalar sp = sign_scalar(f, c.p);
            add(c.p, c.q, cache_.D(c.word), sp);
            if (shape_.u && c.q >= 1) add(c.p, c.q - 1, cache_.B(c.word), sp);
            if (shape_.v && c.p >= 1) {
                add(c.p - 1, c.q, cache_.R(c.word), sign_scalar(f, c.q));
                add(c.p - 1, c.q, self, sign_scalar(f, c.p));
            }
        }
        return out;
    }

    ComplexWindow build(std::map<int, std::vector<EquivariantWord>>& cells_out) {
        std::map<int, std::vector<std::string>> bases;
        for (int k = window_.lo; k <= window_.hi; ++k) {
            cells_out[k] = cells(k);
            for (const auto& c : cells_out[k]) bases[k].push_back(cell_label(cache_.bar(), shape_, c));
        }
        std::map<int, ExactMatrix> differentials;
        for (int k = window_.lo + 1; k <= window_.hi; ++k) {
            std::map<EquivariantWord, std::size_t> row_of;
            for (std::size_t i = 0; i < cells_out[k - 1].size(); ++i) row_of.emplace(cells_out[k - 1][i], i);
            std::vector<SparseVector> columns;
            columns.reserve(cells_out[k].size());
            for (const auto& c : cells_out[k]) {
                std::vector<Entry> entries;
                for (auto& [target, coeff] : image(c, k)) {
                    auto it = row_of.find(target);
                    if (it != row_of.end()) {
                        entries.push_back({it->second, coeff});
                    } else if (!(shape_.orbit && cache_.weight(target.word) > cap_)) {
                        throw std::logic_error("equivariant differential left the basis of degree " +
                                               std::to_string(k - 1));
                    }
                }
                columns.emplace_back(std::move(entries));
            }
            differentials.emplace(k, ExactMatrix::from_columns(cache_.field(), cells_out[k - 1].size(),
                                                               std::move(columns)));
        }
        return ComplexWindow(theory_, cache_.field(), window_, std::move(bases), std::move(differentials));
    }

private:
    Theory theory_;
    Shape shape_;
    HochschildCache& cache_;
    Window window_;
    int cap_;
};

}  // namespace

ComplexWindow theory_window(Theory theory, HochschildCache& cache, Window window, std::optional<int> weight_cap) {
    if (theory == Theory::HH) return hochschild_window(cache.bar(), window);
    std::map<int, std::vector<EquivariantWord>> cells;
    return Assembler(theory, cache, window, weight_cap).build(cells);
}

ComplexWindow theory_window(Theory theory, const InvolutiveDGA& a, Window window, std::optional<int> weight_cap) {
    HochschildCache cache(a);
    return theory_window(theory, cache, window, weight_cap);
}

ComplexWindow orbit_cyclic_window(const InvolutiveDGA& a, Window window, std::optional<int> weight_cap) {
    return theory_window(Theory::HC, a, window, weight_cap);
}

ComplexWindow fixed_cyclic_window(const InvolutiveDGA& a, Window window) {
    return theory_window(Theory::HCneg, a, window);
}

ComplexWindow fixed_reflexive_window(const InvolutiveDGA& a, Window window) {
    return theory_window(Theory::HRneg, a, window);
}

ComplexWindow fixed_dihedral_window(const InvolutiveDGA& a, Window window) {
    return theory_window(Theory::HDneg, a, window);
}

ComplexWindow orbit_dihedral_window(const InvolutiveDGA& a, Window window, std::optional<int> weight_cap) {
    return theory_window(Theory::HD, a, window, weight_cap);
}

std::map<int, InducedInvolution> induced_involution_on_hc_minus(const InvolutiveDGA& a, Window window) {
    const Field& f = a.field();
    if (f.characteristic() == 2) {
        throw std::invalid_argument("the induced involution needs characteristic != 2");
    }
    HochschildCache cache(a);
    std::map<int, std::vector<EquivariantWord>> cells;
    const ComplexWindow c = Assembler(Theory::HCneg, cache, window, std::nullopt).build(cells);
    if (window.width() < 3) throw std::invalid_argument("involution on HC- needs a window of at least three degrees");

    std::map<int, InducedInvolution> out;
    for (int k = window.lo + 1; k < window.hi; ++k) {
        std::map<EquivariantWord, std::size_t> index;
        for (std::size_t i = 0; i < cells[k].size(); ++i) index.emplace(cells[k][i], i);
        const HomologyBasis hb(c, k);
        std::vector<SparseVector> columns;
        for (const auto& z : hb.representatives()) {
            std::vector<Entry> gz;
            for (const auto& e : z.entries()) {
                const EquivariantWord& cell = cells[k][e.index];
                for (const auto& [w, coeff] : cache.R(cell.word).terms()) {
                    gz.push_back({index.at({0, cell.q, w}), e.value * coeff * sign_scalar(f, cell.q)});
                }
            }
            columns.push_back(hb.classify(SparseVector(std::move(gz))));
        }
        InducedInvolution inv;
        inv.degree = k;
        inv.dimension = hb.dimension();
        inv.matrix = ExactMatrix::from_columns(f, hb.dimension(), std::move(columns));
        const ExactMatrix shifted = add_scaled(inv.matrix, -Scalar::one(f), ExactMatrix::identity(f, hb.dimension()));
        inv.invariant_dimension = hb.dimension() - rank(shifted);
        out.emplace(k, std::move(inv));
    }
    return out;
}

}  // namespace dihomol
