#pragma once

// Dense textbook elimination, independent of the sparse engine.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::size_t rank_rational(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = power_mod(m[rank][c], p - 2, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            const std::uint64_t f = m[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[rank][k] % p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
