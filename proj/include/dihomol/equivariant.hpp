#pragma once

#include <map>
#include <memory>
#include <optional>

#include "dihomol/complex.hpp"
#include "dihomol/cyclic_bar.hpp"

namespace dihomol {

/// A basis element u^{+-q} v^{+-p} w of an equivariant complex. Fixed-point
/// complexes use u^q v^p (degrees -2, -1); orbit complexes use the formal
/// symbols u^-q v^-p (degrees +2, +1). Powers stored here are >= 0.
struct EquivariantWord {
    int p = 0;  // v power
    int q = 0;  // u power
    BarWord word;

    friend auto operator<=>(const EquivariantWord&, const EquivariantWord&) = default;
};

/// Memoized view of the normalized Hochschild complex: words per degree and
/// the images of each word under the total differential, B and R.
class HochschildCache {
public:
    explicit HochschildCache(const InvolutiveDGA& a) : bar_(a) {}

    const CyclicBar& bar() const { return bar_; }
    const Field& field() const { return bar_.field(); }

    /// Normalized words of one degree; empty for positive degrees.
    const std::vector<BarWord>& words(int degree);
    const ChainElement& D(const BarWord& w);
    const ChainElement& B(const BarWord& w);
    const ChainElement& R(const BarWord& w);

    /// -internal degree: non-negative, raised by d_int, preserved by b, B, R.
    int weight(const BarWord& w) const { return -bar_.internal_degree(w); }

private:
    CyclicBar bar_;
    std::map<int, std::vector<BarWord>> words_;
    std::map<BarWord, ChainElement> d_, b_, r_;
};

/// Orbit complexes are infinite-dimensional per degree once the algebra has
/// a non-unit generator. They are cut down to the words of weight <= cap; the
/// words above the cap form a subcomplex, so the window is a quotient
/// complex, and it is exact on the weight <= cap summand when d_int = 0.
/// The default cap is hi - lo + 2.
int default_weight_cap(Window window);

ComplexWindow orbit_cyclic_window(const InvolutiveDGA& a, Window window, std::optional<int> weight_cap = {});
ComplexWindow fixed_cyclic_window(const InvolutiveDGA& a, Window window);
ComplexWindow fixed_reflexive_window(const InvolutiveDGA& a, Window window);
ComplexWindow fixed_dihedral_window(const InvolutiveDGA& a, Window window);
ComplexWindow orbit_dihedral_window(const InvolutiveDGA& a, Window window, std::optional<int> weight_cap = {});

/// Variants sharing one cache, so several theories of one algebra reuse
/// the Hochschild images.
ComplexWindow theory_window(Theory theory, HochschildCache& cache, Window window,
                            std::optional<int> weight_cap = {});
ComplexWindow theory_window(Theory theory, const InvolutiveDGA& a, Window window,
                            std::optional<int> weight_cap = {});

/// The C2 action g(u^q m) = (-1)^q u^q R m on HC- in one degree.
struct InducedInvolution {
    int degree = 0;
    std::size_t dimension = 0;            // dim HC-_k
    ExactMatrix matrix;                   // g in the chosen homology basis
    std::size_t invariant_dimension = 0;  // dim ker(g - 1)
};

/// Per reliable degree of the HC- window. Throws std::invalid_argument in
/// characteristic 2, where invariants no longer compute the fixed points.
std::map<int, InducedInvolution> induced_involution_on_hc_minus(const InvolutiveDGA& a, Window window);

}  // namespace dihomol
