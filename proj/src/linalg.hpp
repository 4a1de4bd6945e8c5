#pragma once

#include "field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace skewmat {

using Vec = std::vector<FElem>;

// Dense exact matrix, row major.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr f, std::size_t rows, std::size_t cols);
    static Mat identity(FieldPtr f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    FElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    void set_row(std::size_t r, const Vec& v);

    Mat mul(const Mat& o) const;
    Mat transpose() const;

private:
    FieldPtr f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FElem> data_;
};

struct Echelon {
    Mat reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    std::size_t rank = 0;
};

Echelon rref(Mat m);
std::size_t rank(const Mat& m);

// Basis of {x : m x = 0}, one vector per row of the result.
Mat kernel(const Mat& m);

// One solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Determinant (square matrices).
FElem determinant(Mat m);

// Incrementally maintained reduced row-echelon basis of a subspace of F^d.
class RowSpace {
public:
    RowSpace(FieldPtr f, std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const FieldPtr& field() const { return f_; }

    // Adds v to the span; true when v was independent of the current span.
    bool insert(Vec v);
    bool contains(const Vec& v) const;
    // v minus its projection onto the span (the elimination residual).
    Vec reduce(Vec v) const;
    // Coefficients of v in terms of basis(), or nullopt if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    FieldPtr f_;
    std::size_t ambient_;
    std::vector<Vec> rows_;             // RREF rows, sorted by pivot column
    std::vector<std::size_t> pivots_;
};

Vec zero_vec(const FieldPtr& f, std::size_t n);
bool is_zero_vec(const Field& f, const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const FElem& c, const Vec& v);

}  // namespace skewmat
