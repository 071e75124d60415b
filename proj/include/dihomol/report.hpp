#pragma once

#include <string>

#include "dihomol/complex.hpp"
#include "dihomol/spectral.hpp"

namespace dihomol {

inline constexpr const char* kSchema = "dihomol/1";

/// "-4 (H^4)": homological degree with its cohomological reading.
std::string degree_label(int k);

/// Aligned table, highest degree first.
std::string render_table(const BettiTable& t);
/// "degree,dimension" rows, highest degree first.
std::string render_csv(const BettiTable& t);
std::string render_json(const BettiTable& t);

/// Bases as label lists and differentials as sparse (row, col, value)
/// triplets with values as strings.
std::string dump_complex_json(const ComplexWindow& c);

/// Grid with one row per u-power q and one column per HH degree j.
std::string render_page_grid(const PageReport& p);
std::string render_page_json(const PageReport& p);

}  // namespace dihomol
