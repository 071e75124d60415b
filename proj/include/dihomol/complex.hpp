#pragma once

#include <map>
#include <string>
#include <vector>

#include "dihomol/matrix.hpp"

namespace dihomol {

/// Closed interval [lo, hi] of homological degrees.
struct Window {
    int lo = 0;
    int hi = 0;

    int width() const { return hi - lo + 1; }
    bool contains(int k) const { return lo <= k && k <= hi; }
    /// The window grown by `pad` degrees on both sides.
    Window padded(int pad) const { return {lo - pad, hi + pad}; }
    friend bool operator==(const Window&, const Window&) = default;
};

enum class Theory { HH, HC, HCneg, HD, HDneg, HRneg, Custom };

/// "HH", "HC", "HC-", "HD", "HD-", "HR-", "custom".
std::string theory_label(Theory t);

/// Finite chain complex in degrees [lo, hi]; d_k : C_k -> C_{k-1} is stored
/// for lo < k <= hi.
class ComplexWindow {
public:
    ComplexWindow(Theory theory, const Field& field, Window window, std::map<int, std::vector<std::string>> bases,
                  std::map<int, ExactMatrix> differentials);

    Theory theory() const { return theory_; }
    const Field& field() const { return field_; }
    const Window& window() const { return window_; }

    std::size_t dimension(int k) const;
    const std::vector<std::string>& basis(int k) const;
    /// d_k : C_k -> C_{k-1}, defined for lo < k <= hi.
    const ExactMatrix& differential(int k) const;

    /// Degrees k (lo < k < hi) where d_k o d_{k+1} is not the zero matrix.
    std::vector<int> d_squared_failures() const;
    bool satisfies_d_squared() const { return d_squared_failures().empty(); }

private:
    Theory theory_;
    Field field_;
    Window window_;
    std::map<int, std::vector<std::string>> bases_;
    std::map<int, ExactMatrix> differentials_;
};

/// Degree -> dimension table of one homology theory.
struct BettiTable {
    Theory theory = Theory::Custom;
    Field field;
    Window window;  // the assembled window; reliable degrees exclude both edges
    std::map<int, std::size_t> betti;

    Window reliable() const { return {window.lo + 1, window.hi - 1}; }
    std::vector<int> excluded_edges() const { return {window.lo, window.hi}; }
    /// Throws std::out_of_range outside the reliable sub-window.
    std::size_t at(int k) const;
};

/// Betti_k = dim C_k - rank d_k - rank d_{k+1} for lo < k < hi. Windows
/// narrower than three degrees are rejected with std::invalid_argument.
BettiTable homology(const ComplexWindow& c);

/// Explicit homology basis in one degree: cycle representatives plus a map
/// from cycles to class coordinates.
class HomologyBasis {
public:
    HomologyBasis(const ComplexWindow& c, int degree, PivotOrder order = PivotOrder::forward);

    int degree() const { return degree_; }
    std::size_t dimension() const { return representatives_.size(); }
    const std::vector<SparseVector>& representatives() const { return representatives_; }

    /// Coordinates of the class of `cycle` in the representative basis.
    /// Throws std::invalid_argument if `cycle` is not a cycle.
    SparseVector classify(const SparseVector& cycle) const;

private:
    int degree_;
    Field field_;
    ExactMatrix outgoing_;
    EchelonReducer reducer_;
    std::vector<SparseVector> representatives_;
};

}  // namespace dihomol
