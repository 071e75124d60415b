#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dihomol/matrix.hpp"

namespace dihomol {

struct Generator {
    std::string name;
    int cohomological_degree = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Images of the basis elements under a linear endomorphism.
using LinearMap = std::vector<SparseVector>;

/// Finite-dimensional differential graded algebra with an involution.
///
/// Degrees are stored homologically: a generator of cohomological degree d
/// sits in degree -d. Products are dense structure constants indexed by
/// basis pairs. Construction does not check the axioms; use validate() or
/// make_validated().
class InvolutiveDGA {
public:
    InvolutiveDGA(const Field& field, std::vector<Generator> basis, std::size_t unit,
                  std::vector<SparseVector> products, LinearMap differential, LinearMap involution,
                  std::optional<int> max_bar_length = std::nullopt);

    const Field& field() const { return field_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Generator>& basis() const { return basis_; }
    const std::string& name(std::size_t i) const { return basis_.at(i).name; }
    int cohomological_degree(std::size_t i) const { return basis_.at(i).cohomological_degree; }
    int degree(std::size_t i) const { return -basis_[i].cohomological_degree; }
    bool is_odd(std::size_t i) const { return (basis_[i].cohomological_degree & 1) != 0; }
    std::size_t unit() const { return unit_; }

    /// e_i * e_j
    const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dimension() + j]; }
    const SparseVector& differential(std::size_t i) const { return differential_.at(i); }
    const SparseVector& involution(std::size_t i) const { return involution_.at(i); }
    const LinearMap& differential_map() const { return differential_; }
    const LinearMap& involution_map() const { return involution_; }

    std::optional<int> max_bar_length() const { return max_bar_length_; }
    bool has_zero_differential() const;
    bool involution_is_identity() const;

    /// Index of the basis element called `name`, if any.
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(const InvolutiveDGA&, const InvolutiveDGA&) = default;

private:
    Field field_;
    std::vector<Generator> basis_;
    std::size_t unit_;
    std::vector<SparseVector> products_;
    LinearMap differential_;
    LinearMap involution_;
    std::optional<int> max_bar_length_;
};

struct AxiomFailure {
    std::string axiom;
    std::string witness;

    friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

/// Result of checking every algebra axiom by exhaustive loops.
struct ValidationReport {
    std::vector<AxiomFailure> failures;
    std::size_t checks = 0;

    bool ok() const { return failures.empty(); }
    bool failed(std::string_view axiom) const;
    std::string to_string() const;
};

ValidationReport validate(const InvolutiveDGA& a);

/// True when ab = (-1)^{|a||b|} ba for all basis pairs.
bool is_graded_commutative(const InvolutiveDGA& a);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Throws ValidationError unless every axiom holds.
InvolutiveDGA make_validated(InvolutiveDGA a);

/// Basis of the augmentation quotient A / k.1 with the induced maps.
struct ReducedBasis {
    std::vector<std::size_t> indices;  // algebra basis indices, in basis order
    std::vector<std::string> names;
    LinearMap differential;            // restricted to, and projected onto, the quotient
    LinearMap involution;
    std::vector<SparseVector> products;  // indexed [i * size + j], quotient coordinates
};

ReducedBasis reduced_basis(const InvolutiveDGA& a);

namespace presets {

/// The ground field in degree 0.
InvolutiveDGA point(const Field& f);
/// k[a]/a^2 with |a| = n (n even, n >= 2), zero differential, identity involution.
InvolutiveDGA sphere_even(const Field& f, int n);
/// k[x]/x^t with |x| = degree; odd degrees only with t = 2.
InvolutiveDGA truncated_poly(const Field& f, int degree, int truncation);
/// Non-commutative test algebra: basis {1, x, y, xy, yx}, |x| = 3, |y| = 2,
/// all words of length >= 3 and x^2, y^2 vanish; involution x -> -x, y -> y.
InvolutiveDGA noncommutative_odd(const Field& f);

/// Parses tokens such as "point", "sphere2", "sphere_even(4)",
/// "truncated_poly(2,4)", "noncommutative_odd".
InvolutiveDGA from_token(std::string_view token, const Field& f);

}  // namespace presets

/// Error raised while reading an algebra document; `location` is either
/// "line L, column C" or a JSON pointer such as "/product/3/2".
class AlgebraParseError : public std::runtime_error {
public:
    AlgebraParseError(std::string location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// Reads a JSON algebra document and validates it. Throws AlgebraParseError
/// on malformed input and ValidationError when an axiom fails.
InvolutiveDGA parse_algebra(std::string_view json_text);
std::string serialize_algebra(const InvolutiveDGA& a);

}  // namespace dihomol
