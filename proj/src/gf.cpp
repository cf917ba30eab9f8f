#include "quivinv/gf.hpp"

namespace quivinv {

namespace {

int gf4_mul(int a, int b) {
    int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    int c0 = (a0 * b0 + a1 * b1) & 1;
    int c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
    return c0 | (c1 << 1);
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q), p_(q == 4 ? 2 : q) {
    if (q != 2 && q != 3 && q != 4 && q != 5) throw domain_error("finite field size must be 2, 3, 4, or 5");
    add_.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    mul_.resize(add_.size());
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            add_[idx(a, b)] = q == 4 ? (a ^ b) : (a + b) % q;
            mul_[idx(a, b)] = q == 4 ? gf4_mul(a, b) : (a * b) % q;
        }
    neg_.assign(static_cast<std::size_t>(q), -1);
    inv_.assign(static_cast<std::size_t>(q), -1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (add_[idx(a, b)] == 0) neg_[static_cast<std::size_t>(a)] = b;
            if (mul_[idx(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
        }
}

int FiniteField::inv(int a) const {
    if (a <= 0 || a >= q_) throw domain_error("inverse of a non-unit field element");
    return inv_[static_cast<std::size_t>(a)];
}

GFMatrix gf_identity(int n) {
    GFMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

GFMatrix gf_mul(const FiniteField& F, const GFMatrix& A, const GFMatrix& B) {
    if (A.cols != B.rows) throw domain_error("matrix product dimension mismatch");
    GFMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

bool gf_is_zero(const GFMatrix& A) {
    for (int x : A.a)
        if (x != 0) return false;
    return true;
}

namespace {

/* Row echelon form in place; returns pivot columns. */
std::vector<int> gf_echelon(const FiniteField& F, GFMatrix& A) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int pr = -1;
        for (int r = row; r < A.rows; ++r)
            if (A.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < A.cols; ++c) std::swap(A.at(pr, c), A.at(row, c));
        int piv_inv = F.inv(A.at(row, col));
        for (int c = 0; c < A.cols; ++c) A.at(row, c) = F.mul(piv_inv, A.at(row, c));
        for (int r = 0; r < A.rows; ++r) {
            if (r == row) continue;
            int f = A.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < A.cols; ++c)
                A.at(r, c) = F.sub(A.at(r, c), F.mul(f, A.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int gf_rank(const FiniteField& F, GFMatrix A) { return static_cast<int>(gf_echelon(F, A).size()); }

std::vector<std::vector<int>> gf_nullspace(const FiniteField& F, GFMatrix A) {
    std::vector<int> pivots = gf_echelon(F, A);
    std::vector<bool> is_pivot(static_cast<std::size_t>(A.cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<int> vec(static_cast<std::size_t>(A.cols), 0);
        vec[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            vec[static_cast<std::size_t>(pivots[r])] = F.neg(A.at(static_cast<int>(r), free));
        basis.push_back(std::move(vec));
    }
    return basis;
}

bool gf_invertible(const FiniteField& F, const GFMatrix& A) {
    if (A.rows != A.cols) throw domain_error("invertibility needs a square matrix");
    return gf_rank(F, A) == A.rows;
}

bool gf_nilpotent(const FiniteField& F, const GFMatrix& A) {
    if (A.rows != A.cols) throw domain_error("nilpotency needs a square matrix");
    GFMatrix P = A;
    for (int e = 1; e < A.rows; ++e) P = gf_mul(F, P, A);
    return gf_is_zero(P);
}

}  // namespace quivinv
