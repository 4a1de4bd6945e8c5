#include "linalg.hpp"

#include <algorithm>

namespace skewmat {

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols) {
    data_.assign(rows_ * cols_, f_->zero());
}

Mat Mat::identity(FieldPtr f, std::size_t n) {
    Mat m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field()->one();
    return m;
}

Vec Mat::row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Mat::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) fail(errc::bad_shape, "row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
}

Mat Mat::mul(const Mat& o) const {
    if (cols_ != o.rows_) fail(errc::bad_shape, "matrix product shape mismatch");
    const Field& F = *f_;
    Mat r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FElem& a = at(i, k);
            if (F.is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const FElem& b = o.at(k, j);
                if (F.is_zero(b)) continue;
                r.at(i, j) = F.add(r.at(i, j), F.mul(a, b));
            }
        }
    }
    return r;
}

Mat Mat::transpose() const {
    Mat r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

Echelon rref(Mat m) {
    const Field& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && F.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
        }
        FElem inv = F.inv(m.at(lead, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) = F.mul(m.at(lead, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            const FElem& factor = m.at(r, col);
            if (F.is_zero(factor)) continue;
            FElem fcopy = factor;
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(r, j) = F.sub(m.at(r, j), F.mul(fcopy, m.at(lead, j)));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    Echelon e;
    e.rank = pivots.size();
    e.pivots = std::move(pivots);
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel(const Mat& m) {
    const Field& F = *m.field();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Mat basis(m.field(), free_cols.size(), m.cols());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        basis.at(fi, fc) = F.one();
        for (std::size_t r = 0; r < e.rank; ++r) {
            const FElem& coeff = e.reduced.at(r, fc);
            if (!F.is_zero(coeff)) basis.at(fi, e.pivots[r]) = F.neg(coeff);
        }
    }
    return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) fail(errc::bad_shape, "solve: rhs length mismatch");
    Mat aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    for (std::size_t r = 0; r < e.rank; ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;  // pivot in rhs column
    }
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t r = 0; r < e.rank; ++r) {
        x[e.pivots[r]] = e.reduced.at(r, m.cols());
    }
    return x;
}

FElem determinant(Mat m) {
    if (m.rows() != m.cols()) fail(errc::bad_shape, "determinant of a non-square matrix");
    const Field& F = *m.field();
    FElem det = F.one();
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && F.is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == n) return F.zero();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(col, col));
        FElem inv = F.inv(m.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (F.is_zero(m.at(r, col))) continue;
            FElem factor = F.mul(m.at(r, col), inv);
            for (std::size_t j = col; j < n; ++j) {
                m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(col, j)));
            }
        }
    }
    return det;
}

RowSpace::RowSpace(FieldPtr f, std::size_t ambient) : f_(std::move(f)), ambient_(ambient) {}

Vec RowSpace::reduce(Vec v) const {
    const Field& F = *f_;
    if (v.size() != ambient_) fail(errc::bad_shape, "row length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FElem& c = v[pivots_[r]];
        if (F.is_zero(c)) continue;
        FElem factor = c;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
            v[j] = F.sub(v[j], F.mul(factor, rows_[r][j]));
        }
    }
    return v;
}

bool RowSpace::insert(Vec v) {
    const Field& F = *f_;
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < ambient_ && F.is_zero(v[pivot])) ++pivot;
    if (pivot == ambient_) return false;
    FElem inv = F.inv(v[pivot]);
    for (std::size_t j = pivot; j < ambient_; ++j) v[j] = F.mul(v[j], inv);
    // clear this pivot from existing rows to keep full reduction
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FElem& c = rows_[r][pivot];
        if (F.is_zero(c)) continue;
        FElem factor = c;
        for (std::size_t j = pivot; j < ambient_; ++j) {
            rows_[r][j] = F.sub(rows_[r][j], F.mul(factor, v[j]));
        }
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool RowSpace::contains(const Vec& v) const {
    return is_zero_vec(*f_, reduce(v));
}

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
    const Field& F = *f_;
    Vec coeffs;
    coeffs.reserve(rows_.size());
    Vec residual = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        FElem c = residual[pivots_[r]];
        coeffs.push_back(c);
        if (F.is_zero(c)) continue;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
            residual[j] = F.sub(residual[j], F.mul(c, rows_[r][j]));
        }
    }
    if (!is_zero_vec(F, residual)) return std::nullopt;
    return coeffs;
}

Vec zero_vec(const FieldPtr& f, std::size_t n) {
    return Vec(n, f->zero());
}

bool is_zero_vec(const Field& f, const Vec& v) {
    for (const auto& x : v) {
        if (!f.is_zero(x)) return false;
    }
    return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(errc::bad_shape, "vector length mismatch");
    Vec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(errc::bad_shape, "vector length mismatch");
    Vec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

Vec scale_vec(const FElem& c, const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(c * x);
    return r;
}

}  // namespace skewmat
