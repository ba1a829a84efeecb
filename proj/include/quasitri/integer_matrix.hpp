#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasitri {

using Int = boost::multiprecision::cpp_int;

// Dense exact integer matrix.  No floating point anywhere in this library.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[(size_t)i * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    bool operator==(const IntegerMatrix& o) const = default;

    Int det() const;    // Bareiss; square matrices only
    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// U·A·V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr > 0.
// Uinv/Vinv are tracked alongside so kernel/solve computations stay exact.
struct SNFDecomposition {
    IntegerMatrix D, U, V, Uinv, Vinv;

    std::vector<Int> diagonal() const;          // min(m,n) entries
    std::vector<Int> invariant_factors() const; // the nonzero ones
    int rank() const { return (int)invariant_factors().size(); }
};

// Gcd-reduction pivoting keeps coefficient growth tame at this scale.
SNFDecomposition smith_normal_form(const IntegerMatrix& A);

// Sparse matrix in triplet-ish form for the homology fast path: unit pivots
// are eliminated first, the leftover dense core goes through full SNF.
struct SparseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Int>> row;   // row -> {col -> value}

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), row((size_t)r) {}
    void add(int i, int j, Int v);
};

// Nonzero invariant factors of A in divisibility order.
std::vector<Int> invariant_factors(const SparseIntMatrix& A);
long long integer_rank(const SparseIntMatrix& A);

// Minimal solution helpers on top of SNF.
// Solves A x = b exactly; returns false when no integer solution exists.
bool solve_integer(const SNFDecomposition& snf, const std::vector<Int>& b,
                   std::vector<Int>& x);

Int det2(const Int& a, const Int& b, const Int& c, const Int& d);

} // namespace quasitri
