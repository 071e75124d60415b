#include "dihomol/cyclic_bar.hpp"

#include <algorithm>
#include <functional>

namespace dihomol {

Scalar ChainElement::coeff(const BarWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void ChainElement::add(BarWord w, const Scalar& c) {
    if (!(c.field() == field_)) throw FieldMismatch("chain element over " + field_.name());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void ChainElement::add(const ChainElement& x, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [w, v] : x.terms_) add(w, v * c);
}

ChainElement& ChainElement::operator+=(const ChainElement& x) {
    add(x, Scalar::one(field_));
    return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& x) {
    add(x, -Scalar::one(field_));
    return *this;
}

ChainElement ChainElement::operator-() const {
    ChainElement out(field_);
    out.add(*this, -Scalar::one(field_));
    return out;
}

namespace {

int odd_count(const InvolutiveDGA& a, const BarWord& w, std::size_t from, std::size_t to) {
    int k = 0;
    for (std::size_t i = from; i < to; ++i) k += a.is_odd(w[i]) ? 1 : 0;
    return k;
}

}  // namespace

CyclicBar::CyclicBar(InvolutiveDGA algebra, ReversalSign sign) : algebra_(std::move(algebra)), sign_(sign) {
    if (algebra_.dimension() > 0xFFFF) throw std::invalid_argument("algebra too large for bar words");
    for (std::size_t i = 0; i < algebra_.dimension(); ++i) {
        if (i == algebra_.unit()) continue;
        reduced_.push_back(static_cast<std::uint16_t>(i));
        if (algebra_.degree(i) > -2) finite_ = false;
    }
}

int CyclicBar::internal_degree(const BarWord& w) const {
    int d = 0;
    for (auto x : w) d += algebra_.degree(x);
    return d;
}

bool CyclicBar::is_degenerate(const BarWord& w) const {
    return std::any_of(w.begin() + (w.empty() ? 0 : 1), w.end(), [&](auto x) { return x == algebra_.unit(); });
}

std::string CyclicBar::label(const BarWord& w) const {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) s += '|';
        s += algebra_.name(w[i]);
    }
    return s + "]";
}

std::vector<BarWord> CyclicBar::words(int degree) const {
    const auto cap = algebra_.max_bar_length();
    if (!finite_ && !cap) {
        throw FinitenessError(
            "bar complex has infinitely many words in each degree (a reduced generator has cohomological degree "
            "< 2); supply max_bar_length to truncate");
    }
    std::vector<BarWord> out;
    BarWord w;
    std::function<void(int)> grow = [&](int current) {
        if (current == degree) out.push_back(w);
        if (cap && static_cast<int>(w.size()) - 1 >= *cap) return;
        for (auto e : reduced_) {
            const int step = 1 + algebra_.degree(e);
            if (current + step < degree) continue;
            w.push_back(e);
            grow(current + step);
            w.pop_back();
        }
    };
    for (std::size_t a0 = 0; a0 < algebra_.dimension(); ++a0) {
        if (algebra_.degree(a0) < degree) continue;
        w.assign(1, static_cast<std::uint16_t>(a0));
        grow(algebra_.degree(a0));
    }
    std::sort(out.begin(), out.end(), [](const BarWord& x, const BarWord& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

std::size_t CyclicBar::count_words_of_length(int n) const {
    std::size_t count = algebra_.dimension();
    for (int i = 0; i < n; ++i) count *= reduced_.size();
    return count;
}

BarWord CyclicBar::word_of_length(int n, std::size_t index) const {
    if (index >= count_words_of_length(n)) throw std::out_of_range("word index out of range");
    BarWord w(static_cast<std::size_t>(n) + 1);
    for (int i = n; i >= 1; --i) {
        w[i] = reduced_[index % reduced_.size()];
        index /= reduced_.size();
    }
    w[0] = static_cast<std::uint16_t>(index);
    return w;
}

ChainElement CyclicBar::expand(const std::vector<SparseVector>& factors, const Scalar& c) const {
    ChainElement out(field());
    BarWord w(factors.size());
    std::function<void(std::size_t, Scalar)> walk = [&](std::size_t pos, Scalar coeff) {
        if (pos == factors.size()) {
            out.add(w, coeff);
            return;
        }
        for (const auto& e : factors[pos].entries()) {
            w[pos] = static_cast<std::uint16_t>(e.index);
            walk(pos + 1, coeff * e.value);
        }
    };
    walk(0, c);
    return out;
}

ChainElement CyclicBar::face(std::size_t i, const BarWord& w) const {
    const std::size_t n = w.size() - 1;
    if (w.empty() || n == 0 || i > n) {
        throw std::out_of_range("face " + std::to_string(i) + " of a word in simplicial degree " + std::to_string(n));
    }
    std::vector<SparseVector> factors;
    factors.reserve(n);
    Scalar c = Scalar::one(field());
    if (i < n) {
        for (std::size_t j = 0; j < n + 1; ++j) {
            if (j == i) {
                factors.push_back(algebra_.product(w[i], w[i + 1]));
                ++j;
            } else {
                factors.push_back(SparseVector::unit(field(), w[j]));
            }
        }
    } else {
        c = sign_scalar(field(), algebra_.is_odd(w[n]) ? odd_count(algebra_, w, 0, n) : 0);
        factors.push_back(algebra_.product(w[n], w[0]));
        for (std::size_t j = 1; j < n; ++j) factors.push_back(SparseVector::unit(field(), w[j]));
    }
    return expand(factors, c);
}

ChainElement CyclicBar::degeneracy(std::size_t i, const BarWord& w) const {
    if (w.empty() || i > w.size() - 1) throw std::out_of_range("degeneracy index out of range");
    BarWord out = w;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1, static_cast<std::uint16_t>(algebra_.unit()));
    return ChainElement(field(), std::move(out));
}

CyclicBar::SignedWord CyclicBar::rotate_last(const BarWord& w) const {
    const std::size_t n = w.size() - 1;
    SignedWord out;
    out.word.reserve(w.size());
    out.word.push_back(w[n]);
    out.word.insert(out.word.end(), w.begin(), w.end() - 1);
    out.parity = algebra_.is_odd(w[n]) ? odd_count(algebra_, w, 0, n) : 0;
    return out;
}

CyclicBar::SignedWord CyclicBar::rotate_first(const BarWord& w) const {
    SignedWord out{BarWord(w.begin() + 1, w.end()), 0};
    out.word.push_back(w[0]);
    out.parity = algebra_.is_odd(w[0]) ? odd_count(algebra_, w, 1, w.size()) : 0;
    return out;
}

ChainElement CyclicBar::t(const BarWord& w) const {
    auto [v, parity] = rotate_last(w);
    ChainElement x(field());
    x.add(std::move(v), sign_scalar(field(), parity));
    return x;
}

ChainElement CyclicBar::t_inverse(const BarWord& w) const {
    auto [v, parity] = rotate_first(w);
    ChainElement x(field());
    x.add(std::move(v), sign_scalar(field(), parity));
    return x;
}

ChainElement CyclicBar::r(const BarWord& w) const {
    const std::size_t n = w.size() - 1;
    int s = 0;
    if (sign_ == ReversalSign::koszul) {
        const int odd = odd_count(algebra_, w, 1, n + 1);
        s = odd * (odd - 1) / 2;
    } else if (n >= 1 && algebra_.is_odd(w[n])) {
        s = odd_count(algebra_, w, 1, n);
    }
    std::vector<SparseVector> factors;
    factors.reserve(w.size());
    factors.push_back(algebra_.involution(w[0]));
    for (std::size_t j = n; j >= 1; --j) factors.push_back(algebra_.involution(w[j]));
    return expand(factors, sign_scalar(field(), s));
}

template <class F>
ChainElement CyclicBar::linear(const ChainElement& x, F&& on_word) const {
    ChainElement out(field());
    for (const auto& [w, c] : x.terms()) on_word(w, c, out);
    return out;
}

ChainElement CyclicBar::simplicial_b(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        const std::size_t n = w.size() - 1;
        if (n == 0) return;
        for (std::size_t i = 0; i <= n; ++i) out.add(face(i, w), sign_scalar(field(), static_cast<long>(i)) * c);
    });
}

ChainElement CyclicBar::internal_d(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        int before = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& e : algebra_.differential(w[i]).entries()) {
                BarWord v = w;
                v[i] = static_cast<std::uint16_t>(e.index);
                out.add(std::move(v), sign_scalar(field(), before) * e.value * c);
            }
            before += algebra_.degree(w[i]);
        }
    });
}

ChainElement CyclicBar::total_d(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        const ChainElement one(field(), w);
        out.add(internal_d(one), c);
        out.add(simplicial_b(one), sign_scalar(field(), internal_degree(w)) * c);
    });
}

ChainElement CyclicBar::T(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        auto [v, parity] = rotate_last(w);
        out.add(std::move(v), sign_scalar(field(), parity + static_cast<long>(w.size()) - 1) * c);
    });
}

ChainElement CyclicBar::T_inverse(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        auto [v, parity] = rotate_first(w);
        out.add(std::move(v), sign_scalar(field(), parity + static_cast<long>(w.size()) - 1) * c);
    });
}

ChainElement CyclicBar::R(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        const long n = static_cast<long>(w.size()) - 1;
        out.add(r(w), sign_scalar(field(), n * (n + 1) / 2) * c);
    });
}

ChainElement CyclicBar::N(const ChainElement& x) const {
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        const long n = static_cast<long>(w.size()) - 1;
        SignedWord power{w, 0};
        for (long i = 0; i <= n; ++i) {
            out.add(power.word, sign_scalar(field(), power.parity) * c);
            auto next = rotate_last(power.word);
            next.parity += power.parity + static_cast<int>(n);
            power = std::move(next);
        }
    });
}

ChainElement CyclicBar::normalize(const ChainElement& x) const {
    ChainElement out(field());
    for (const auto& [w, c] : x.terms()) {
        if (!is_degenerate(w)) out.add(w, c);
    }
    return out;
}

ChainElement CyclicBar::B(const ChainElement& x) const {
    // Word by word: (-1)^int (1 - T) t s_n applied to each term of N w,
    // dropping degenerate results as they appear.
    return linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        const long n = static_cast<long>(w.size()) - 1;
        const Scalar outer = sign_scalar(field(), internal_degree(w)) * c;
        const ChainElement norm = N(ChainElement(field(), w));
        for (const auto& [v, coeff] : norm.terms()) {
            BarWord lifted = v;
            lifted.push_back(static_cast<std::uint16_t>(algebra_.unit()));  // s_n
            auto [u, p1] = rotate_last(lifted);
            auto [u2, p2] = rotate_last(u);                                // T = (-1)^{n+1} t
            const Scalar base = outer * coeff * sign_scalar(field(), p1);
            if (!is_degenerate(u)) out.add(std::move(u), base);
            if (!is_degenerate(u2)) out.add(std::move(u2), -base * sign_scalar(field(), p2 + n + 1));
        }
    });
}

ChainElement CyclicBar::B_shuffle(const ChainElement& x) const {
    return normalize(linear(x, [&](const BarWord& w, const Scalar& c, ChainElement& out) {
        const std::size_t n = w.size() - 1;
        const long sign_int = internal_degree(w);
        for (std::size_t i = 0; i <= n; ++i) {
            BarWord v;
            v.reserve(w.size() + 1);
            v.push_back(static_cast<std::uint16_t>(algebra_.unit()));
            v.insert(v.end(), w.end() - static_cast<std::ptrdiff_t>(i), w.end());
            v.insert(v.end(), w.begin(), w.end() - static_cast<std::ptrdiff_t>(i));
            const long moved = odd_count(algebra_, w, n + 1 - i, n + 1);
            const long stayed = odd_count(algebra_, w, 0, n + 1 - i);
            const long s = sign_int + static_cast<long>(n * i) + moved * stayed;
            out.add(std::move(v), sign_scalar(field(), s) * c);
        }
    }));
}

ComplexWindow hochschild_window(const CyclicBar& bar, Window window) {
    std::map<int, std::vector<BarWord>> words;
    std::map<int, std::vector<std::string>> bases;
    for (int k = window.lo; k <= window.hi; ++k) {
        words[k] = bar.words(k);
        for (const auto& w : words[k]) bases[k].push_back(bar.label(w));
    }
    std::map<int, ExactMatrix> differentials;
    for (int k = window.lo + 1; k <= window.hi; ++k) {
        std::map<BarWord, std::size_t> row_of;
        for (std::size_t i = 0; i < words[k - 1].size(); ++i) row_of.emplace(words[k - 1][i], i);
        std::vector<SparseVector> columns;
        columns.reserve(words[k].size());
        for (const auto& w : words[k]) {
            std::vector<Entry> entries;
            const ChainElement image = bar.b(ChainElement(bar.field(), w));
            for (const auto& [v, c] : image.terms()) {
                auto it = row_of.find(v);
                if (it == row_of.end()) throw std::logic_error("differential left degree " + std::to_string(k - 1));
                entries.push_back({it->second, c});
            }
            columns.emplace_back(std::move(entries));
        }
        differentials.emplace(k, ExactMatrix::from_columns(bar.field(), words[k - 1].size(), std::move(columns)));
    }
    return ComplexWindow(Theory::HH, bar.field(), window, std::move(bases), std::move(differentials));
}

ComplexWindow hochschild_window(const InvolutiveDGA& a, Window window) {
    return hochschild_window(CyclicBar(a), window);
}

}  // namespace dihomol
