#pragma once

#include <optional>
#include <vector>

#include "jackpoly/ratfun.hpp"

namespace jackpoly {

// Dense row-reduction over Q(theta). Returns a particular solution of
// A x = b (free variables set to zero), or nullopt if inconsistent.
inline std::optional<std::vector<RatFun>> solve_linear(
    std::vector<std::vector<RatFun>> a, std::vector<RatFun> b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        RatFun inv = a[r][c].inverse();
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            RatFun f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<RatFun> x(cols, RatFun(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace jackpoly
