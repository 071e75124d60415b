#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dihomol/complex.hpp"
#include "dihomol/dga.hpp"
#include "dihomol/sign_conventions.hpp"

namespace dihomol {

/// a0|a1|...|an as algebra basis indices. Operators accept any word; the
/// normalized complex only contains words with no unit in a tail slot.
using BarWord = std::vector<std::uint16_t>;

/// Finite linear combination of bar words with no zero coefficients.
class ChainElement {
public:
    explicit ChainElement(const Field& field) : field_(field) {}
    ChainElement(const Field& field, BarWord w) : field_(field) { add(std::move(w), Scalar::one(field)); }

    const Field& field() const { return field_; }
    const std::map<BarWord, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const BarWord& w) const;

    void add(BarWord w, const Scalar& c);
    void add(const ChainElement& x, const Scalar& c);
    ChainElement& operator+=(const ChainElement& x);
    ChainElement& operator-=(const ChainElement& x);
    ChainElement operator-() const;

    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
    friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
    friend bool operator==(const ChainElement&, const ChainElement&) = default;

private:
    Field field_;
    std::map<BarWord, Scalar> terms_;
};

/// Raised when a degree of the bar complex would be infinite-dimensional.
class FinitenessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The cyclic bar construction of an involutive DGA with its dihedral
/// operators. Degrees are homological: |a0|...|an| has total degree
/// n + sum of the generator degrees.
class CyclicBar {
public:
    explicit CyclicBar(InvolutiveDGA algebra, ReversalSign sign = kReversalSign);

    const InvolutiveDGA& algebra() const { return algebra_; }
    const Field& field() const { return algebra_.field(); }
    ReversalSign reversal_sign() const { return sign_; }

    int internal_degree(const BarWord& w) const;
    int total_degree(const BarWord& w) const { return static_cast<int>(w.size()) - 1 + internal_degree(w); }
    bool is_degenerate(const BarWord& w) const;
    /// "[1|a|a]"
    std::string label(const BarWord& w) const;

    /// True when every degree is finite-dimensional without a bar-length cap.
    bool degreewise_finite() const { return finite_; }
    std::optional<int> max_bar_length() const { return algebra_.max_bar_length(); }

    /// Normalized words of one total degree, ordered by length then
    /// lexicographically. Throws FinitenessError if the degree is infinite.
    std::vector<BarWord> words(int degree) const;
    /// Number of normalized words of simplicial degree n, and the i-th one in
    /// lexicographic order.
    std::size_t count_words_of_length(int n) const;
    BarWord word_of_length(int n, std::size_t index) const;

    // Simplicial structure on single words (no normalization).
    ChainElement face(std::size_t i, const BarWord& w) const;
    ChainElement degeneracy(std::size_t i, const BarWord& w) const;
    ChainElement t(const BarWord& w) const;
    ChainElement t_inverse(const BarWord& w) const;
    ChainElement r(const BarWord& w) const;

    // Linear operators; none of these normalizes.
    ChainElement simplicial_b(const ChainElement& x) const;
    ChainElement internal_d(const ChainElement& x) const;
    /// d_int + (-1)^int b, word by word.
    ChainElement total_d(const ChainElement& x) const;
    ChainElement T(const ChainElement& x) const;
    ChainElement T_inverse(const ChainElement& x) const;
    ChainElement R(const ChainElement& x) const;
    ChainElement N(const ChainElement& x) const;

    /// Drops words with a unit in a tail slot.
    ChainElement normalize(const ChainElement& x) const;

    // Operators of the normalized complex.
    /// Total differential, normalized.
    ChainElement b(const ChainElement& x) const { return normalize(total_d(x)); }
    /// (-1)^int (1 - T) t s_n N, normalized.
    ChainElement B(const ChainElement& x) const;
    /// Closed form: (-1)^int sum_i (-1)^{ni} (Koszul sign) 1|rotation^i, normalized.
    ChainElement B_shuffle(const ChainElement& x) const;

private:
    struct SignedWord {
        BarWord word;
        int parity = 0;  // sign is (-1)^parity
    };
    SignedWord rotate_last(const BarWord& w) const;   // t
    SignedWord rotate_first(const BarWord& w) const;  // t^-1

    template <class F>
    ChainElement linear(const ChainElement& x, F&& on_word) const;
    ChainElement expand(const std::vector<SparseVector>& factors, const Scalar& c) const;

    InvolutiveDGA algebra_;
    ReversalSign sign_;
    std::vector<std::uint16_t> reduced_;  // non-unit basis indices
    bool finite_ = true;
};

/// The normalized Hochschild complex restricted to degrees [lo, hi].
ComplexWindow hochschild_window(const CyclicBar& bar, Window window);
ComplexWindow hochschild_window(const InvolutiveDGA& a, Window window);

/// One failed identity and the word exhibiting it.
struct IdentityFailure {
    std::string identity;
    std::string field;
    std::string witness;
};

struct IdentityReport {
    std::vector<std::string> identities;  // names of the identities checked
    std::map<std::string, std::size_t> checks;  // identity -> words checked
    std::vector<IdentityFailure> failures;
    std::size_t words = 0;
    bool exhaustive = true;

    bool ok() const { return failures.empty(); }
    std::string to_string() const;
};

/// Checks the dihedral and mixed-complex identities on every normalized word
/// with simplicial degree <= n_max, or on `trials` random words per length
/// when a length has more words than that.
///
/// Group relations (T^{n+1} = id, R^2 = id, RTR = T^-1) and commutation of
/// T, R with d_int are checked in the unnormalized object, since T does not
/// preserve degenerate words. b^2 = 0, B^2 = 0, bB + Bb = 0, BR = -RB,
/// Rb = bR, Bd_int = -d_int B and the agreement of both B formulas are
/// checked in the normalized complex.
IdentityReport identity_suite(const InvolutiveDGA& a, int n_max, std::size_t trials,
                              ReversalSign sign = kReversalSign, std::uint64_t seed = 1);

}  // namespace dihomol
