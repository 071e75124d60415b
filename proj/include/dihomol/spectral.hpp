#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dihomol/complex.hpp"
#include "dihomol/dga.hpp"

namespace dihomol {

/// One page of the u-power filtration spectral sequence of HC-.
///
/// A bidegree (q, j) is the class u^q x with x in HH_j; its total degree is
/// j - 2q. d1 = [B] maps (q, j) to (q + 1, j + 1) and is the same matrix
/// HH_j -> HH_{j+1} for every q.
struct PageReport {
    using Bidegree = std::pair<int, int>;  // (q, j)

    int page = 1;
    Field field;
    Window window;  // the HC- window; totals cover its reliable degrees
    std::map<Bidegree, std::size_t> dims;
    std::map<Bidegree, std::vector<std::string>> generators;  // class representatives
    std::map<int, ExactMatrix> d1;                           // j -> [B]: HH_j -> HH_{j+1}
    std::map<int, std::size_t> totals;                       // total degree -> sum of dims
    std::map<int, std::size_t> limit;                        // HC- Betti numbers
    bool collapse = false;                                   // totals == limit
    bool d1_squares_to_zero = false;
    /// d1 computed from reversed-order representatives agrees after change of basis.
    bool d1_well_defined = false;

    std::size_t at(int q, int j) const;
};

/// E1 = HH_*[u] with d1 induced by B. `window` is the HC- window; HH is
/// computed on [lo - 1, 2] so every bidegree feeding a reliable total degree
/// has an honest homology basis.
PageReport e1_page(const InvolutiveDGA& a, Window window);
/// Homology of (E1, d1), compared degree-wise against HC-.
PageReport e2_page(const InvolutiveDGA& a, Window window);

}  // namespace dihomol
