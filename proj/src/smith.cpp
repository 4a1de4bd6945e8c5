#include "smith.hpp"

#include <cstdlib>

namespace skewmat {

IMat imat_identity(std::size_t n) {
    IMat m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    IMat m(r, std::vector<Int>(c, Int(0)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) {
                if (b[t][j] != 0) m[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return m;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? -x : x; }

}  // namespace

SmithResult smith_normal_form(IMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    IMat u = imat_identity(rows);
    IMat v = imat_identity(cols);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t r = 0; r < rows; ++r) a[r][dst] += c * a[r][src];
        for (std::size_t r = 0; r < cols; ++r) v[r][dst] += c * v[r][src];
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero entry of minimal absolute value in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pi == rows || int_abs(a[i][j]) < int_abs(a[pi][pj])) { pi = i; pj = j; }
            }
        }
        if (pi == rows) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_addmul(i, t, -q);
                if (a[i][t] != 0) {  // remainder became the new, smaller pivot
                    row_swap(i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_addmul(j, t, -q);
                if (a[t][j] != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
            if (clean) {
                // enforce divisibility of the remaining block by the pivot
                for (std::size_t i = t + 1; i < rows && clean; ++i) {
                    for (std::size_t j = t + 1; j < cols && clean; ++j) {
                        if (a[i][j] % a[t][t] != 0) {
                            row_addmul(t, i, Int(1));
                            clean = false;
                        }
                    }
                }
            }
        }
        if (a[t][t] < 0) row_negate(t);
        ++t;
    }
    return {std::move(u), std::move(a), std::move(v)};
}

}  // namespace skewmat
