#pragma once

#include <vector>

#include "quivinv/errors.hpp"

namespace quivinv {

/*
 * Arithmetic tables for F_q, q in {2, 3, 4, 5}. Elements are 0..q-1; for
 * q = 4 the element a encodes the bit pair a0 + a1 x with x^2 = x + 1.
 */
class FiniteField {
public:
    explicit FiniteField(int q);

    int size() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[static_cast<std::size_t>(b)])]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int inv(int a) const;

private:
    int q_, p_;
    std::vector<int> add_, mul_, neg_, inv_;
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
    }
};

struct GFMatrix {
    int rows = 0, cols = 0;
    std::vector<int> a;

    GFMatrix() = default;
    GFMatrix(int r, int c)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {
        if (r < 0 || c < 0) throw domain_error("matrix dimensions must be non-negative");
    }
    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    bool operator==(const GFMatrix&) const = default;
};

GFMatrix gf_identity(int n);
GFMatrix gf_mul(const FiniteField& F, const GFMatrix& A, const GFMatrix& B);
bool gf_is_zero(const GFMatrix& A);
int gf_rank(const FiniteField& F, GFMatrix A);
/* Basis of the right kernel, each vector of length A.cols. */
std::vector<std::vector<int>> gf_nullspace(const FiniteField& F, GFMatrix A);
bool gf_invertible(const FiniteField& F, const GFMatrix& A);
bool gf_nilpotent(const FiniteField& F, const GFMatrix& A);

}  // namespace quivinv
