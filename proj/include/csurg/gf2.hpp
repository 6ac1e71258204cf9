#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csurg/errors.hpp"

namespace csurg {
namespace gf2 {

/// Dense matrix over the two-element field, rows packed into 64-bit words.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), wpr_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(static_cast<std::size_t>(rows) * wpr_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (w_[static_cast<std::size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        auto& word = w_[static_cast<std::size_t>(r) * wpr_ + c / 64];
        if (v)
            word |= mask;
        else
            word &= ~mask;
    }
    void flip(int r, int c) {
        w_[static_cast<std::size_t>(r) * wpr_ + c / 64] ^= std::uint64_t(1) << (c % 64);
    }

    void xor_row(int dst, int src) {
        std::uint64_t* d = &w_[static_cast<std::size_t>(dst) * wpr_];
        const std::uint64_t* s = &w_[static_cast<std::size_t>(src) * wpr_];
        for (int k = 0; k < wpr_; ++k)
            d[k] ^= s[k];
    }
    void swap_rows(int a, int b) {
        if (a == b)
            return;
        for (int k = 0; k < wpr_; ++k)
            std::swap(w_[static_cast<std::size_t>(a) * wpr_ + k], w_[static_cast<std::size_t>(b) * wpr_ + k]);
    }

    bool row_is_zero(int r) const {
        for (int k = 0; k < wpr_; ++k)
            if (w_[static_cast<std::size_t>(r) * wpr_ + k])
                return false;
        return true;
    }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_; }

    /// Matrix-vector product over F2 (vector as bool coordinates).
    std::vector<bool> apply(const std::vector<bool>& v) const;

private:
    int rows_, cols_, wpr_;
    std::vector<std::uint64_t> w_;
};

int rank(Matrix m);

/// Basis of the kernel {v : A v = 0}, as column vectors.
std::vector<std::vector<bool>> nullspace(const Matrix& a);

/// Solve for coefficients x with  sum_i x_i * span[i] = target; nullopt if target
/// is outside the span. When several solutions exist an arbitrary one is returned.
std::optional<std::vector<bool>> solve_in_span(const std::vector<std::vector<bool>>& span,
                                               const std::vector<bool>& target);

bool in_span(const std::vector<std::vector<bool>>& span, const std::vector<bool>& target);

int rank_of_vectors(const std::vector<std::vector<bool>>& vecs);

}  // namespace gf2
}  // namespace csurg
