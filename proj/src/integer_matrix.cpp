#include "quasitri/integer_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quasitri {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix R(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) R.at(i, j) += aik * o.at(k, j);
        }
    return R;
}

Int IntegerMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    const int n = rows_;
    if (n == 0) return 1;
    IntegerMatrix M = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
        os << "\n";
    }
    return os.str();
}

std::vector<Int> SNFDecomposition::diagonal() const {
    std::vector<Int> d;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

std::vector<Int> SNFDecomposition::invariant_factors() const {
    std::vector<Int> out;
    for (const Int& d : diagonal())
        if (d != 0) out.push_back(d);
    return out;
}

namespace {

// quotient minimizing |a - q*b|; symmetric remainders keep the transform
// entries small
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) {
        if ((r > 0) == (b > 0)) q += 1; else q -= 1;
    }
    return q;
}

struct SNFWorker {
    IntegerMatrix A, U, Uinv, V, Vinv;

    explicit SNFWorker(const IntegerMatrix& a)
        : A(a),
          U(IntegerMatrix::identity(a.rows())), Uinv(U),
          V(IntegerMatrix::identity(a.cols())), Vinv(V) {}

    // row_i += q * row_k  (U likewise; Uinv absorbs the inverse column op)
    void row_add(int i, int k, const Int& q) {
        for (int j = 0; j < A.cols(); ++j) A.at(i, j) += q * A.at(k, j);
        for (int j = 0; j < U.cols(); ++j) U.at(i, j) += q * U.at(k, j);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, k) -= q * Uinv.at(r, i);
    }
    void col_add(int j, int k, const Int& q) {
        for (int i = 0; i < A.rows(); ++i) A.at(i, j) += q * A.at(i, k);
        for (int i = 0; i < V.rows(); ++i) V.at(i, j) += q * V.at(i, k);
        for (int c = 0; c < Vinv.cols(); ++c) Vinv.at(k, c) -= q * Vinv.at(j, c);
    }
    void row_swap(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < A.cols(); ++j) std::swap(A.at(i, j), A.at(k, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U.at(i, j), U.at(k, j));
        for (int r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, k));
    }
    void col_swap(int j, int k) {
        if (j == k) return;
        for (int i = 0; i < A.rows(); ++i) std::swap(A.at(i, j), A.at(i, k));
        for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, j), V.at(i, k));
        for (int c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(j, c), Vinv.at(k, c));
    }
    void row_negate(int i) {
        for (int j = 0; j < A.cols(); ++j) A.at(i, j) = -A.at(i, j);
        for (int j = 0; j < U.cols(); ++j) U.at(i, j) = -U.at(i, j);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }

    void run() {
        const int m = A.rows(), n = A.cols();
        const int steps = std::min(m, n);
        for (int t = 0; t < steps; ++t) {
            // smallest-magnitude pivot from the trailing block
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = A.at(i, j);
                    if (v == 0) continue;
                    if (pi < 0 || abs(v) < best) { pi = i; pj = j; best = abs(v); }
                }
            if (pi < 0) break;
            row_swap(t, pi);
            col_swap(t, pj);

            bool dirty = true;
            while (dirty) {
                dirty = false;
                // clear column t with minimal-remainder Euclidean steps
                for (int i = t + 1; i < m; ++i) {
                    while (A.at(i, t) != 0) {
                        Int q = nearest_quotient(A.at(i, t), A.at(t, t));
                        if (q != 0) row_add(i, t, -q);
                        if (A.at(i, t) != 0) { row_swap(i, t); dirty = true; }
                    }
                }
                // clear row t
                for (int j = t + 1; j < n; ++j) {
                    while (A.at(t, j) != 0) {
                        Int q = nearest_quotient(A.at(t, j), A.at(t, t));
                        if (q != 0) col_add(j, t, -q);
                        if (A.at(t, j) != 0) { col_swap(j, t); dirty = true; }
                    }
                }
            }
            // divisibility sweep: pivot must divide the trailing block
            bool redo = false;
            for (int i = t + 1; i < m && !redo; ++i)
                for (int j = t + 1; j < n && !redo; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        row_add(t, i, 1);
                        redo = true;
                    }
            if (redo) { --t; continue; }
            if (A.at(t, t) < 0) row_negate(t);
        }
    }
};

} // namespace

SNFDecomposition smith_normal_form(const IntegerMatrix& A) {
    SNFWorker w(A);
    w.run();
    return {w.A, w.U, w.V, w.Uinv, w.Vinv};
}

void SparseIntMatrix::add(int i, int j, Int v) {
    if (v == 0) return;
    auto& r = row[(size_t)i];
    auto it = r.find(j);
    if (it == r.end()) r.emplace(j, std::move(v));
    else {
        it->second += v;
        if (it->second == 0) r.erase(it);
    }
}

namespace {

// Eliminate ±1 pivots (unimodular ops, so the invariant factors of the whole
// equal 1-per-pivot plus those of the remaining core), then hand the core to
// the dense routine.
std::vector<Int> factors_after_unit_elimination(SparseIntMatrix M, long long& unit_pivots) {
    unit_pivots = 0;
    std::vector<std::set<int>> col_rows((size_t)M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (const auto& [j, v] : M.row[(size_t)i]) col_rows[(size_t)j].insert(i);

    std::vector<char> row_dead((size_t)M.rows, 0), col_dead((size_t)M.cols, 0);

    while (true) {
        // cheapest ±1 pivot by fill estimate
        int pi = -1, pj = -1;
        long long best = -1;
        for (int i = 0; i < M.rows; ++i) {
            if (row_dead[(size_t)i]) continue;
            for (const auto& [j, v] : M.row[(size_t)i]) {
                if (col_dead[(size_t)j]) continue;
                if (v != 1 && v != -1) continue;
                long long cost = (long long)(M.row[(size_t)i].size() - 1)
                               * (long long)(col_rows[(size_t)j].size() - 1);
                if (best < 0 || cost < best) { best = cost; pi = i; pj = j; }
                if (best == 0) break;
            }
            if (best == 0) break;
        }
        if (pi < 0) break;

        Int piv = M.row[(size_t)pi].at(pj);
        auto pivot_row = M.row[(size_t)pi];   // copy: it is edited below
        auto rows_hit = col_rows[(size_t)pj];
        for (int i : rows_hit) {
            if (i == pi || row_dead[(size_t)i]) continue;
            auto it = M.row[(size_t)i].find(pj);
            if (it == M.row[(size_t)i].end()) continue;
            Int factor = it->second / piv;     // piv = ±1
            for (const auto& [j, v] : pivot_row) {
                if (col_dead[(size_t)j]) continue;
                auto& r = M.row[(size_t)i];
                auto jt = r.find(j);
                if (jt == r.end()) {
                    Int nv = -factor * v;
                    if (nv != 0) { r.emplace(j, std::move(nv)); col_rows[(size_t)j].insert(i); }
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) { r.erase(jt); col_rows[(size_t)j].erase(i); }
                }
            }
        }
        row_dead[(size_t)pi] = 1;
        col_dead[(size_t)pj] = 1;
        for (const auto& [j, v] : pivot_row) col_rows[(size_t)j].erase(pi);
        ++unit_pivots;
    }

    // dense core
    std::vector<int> live_rows, live_cols;
    for (int i = 0; i < M.rows; ++i)
        if (!row_dead[(size_t)i] && !M.row[(size_t)i].empty()) {
            bool any = false;
            for (const auto& [j, v] : M.row[(size_t)i])
                if (!col_dead[(size_t)j]) { any = true; break; }
            if (any) live_rows.push_back(i);
        }
    std::set<int> cols_used;
    for (int i : live_rows)
        for (const auto& [j, v] : M.row[(size_t)i])
            if (!col_dead[(size_t)j]) cols_used.insert(j);
    live_cols.assign(cols_used.begin(), cols_used.end());

    std::vector<Int> core;
    if (!live_rows.empty()) {
        IntegerMatrix C((int)live_rows.size(), (int)live_cols.size());
        std::map<int, int> colpos;
        for (size_t k = 0; k < live_cols.size(); ++k) colpos[live_cols[k]] = (int)k;
        for (size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [j, v] : M.row[(size_t)live_rows[i]])
                if (colpos.count(j)) C.at((int)i, colpos[j]) = v;
        core = smith_normal_form(C).invariant_factors();
    }
    return core;
}

} // namespace

std::vector<Int> invariant_factors(const SparseIntMatrix& A) {
    long long units = 0;
    std::vector<Int> core = factors_after_unit_elimination(A, units);
    std::vector<Int> out((size_t)units, Int(1));
    out.insert(out.end(), core.begin(), core.end());
    return out;
}

long long integer_rank(const SparseIntMatrix& A) {
    return (long long)invariant_factors(A).size();
}

bool solve_integer(const SNFDecomposition& snf, const std::vector<Int>& b,
                   std::vector<Int>& x) {
    const int m = snf.D.rows(), n = snf.D.cols();
    if ((int)b.size() != m) throw std::invalid_argument("solve_integer: size mismatch");
    // A x = b  with A = Uinv D Vinv  =>  D (Vinv x) = U b
    std::vector<Int> c((size_t)m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (snf.U.at(i, j) != 0) c[(size_t)i] += snf.U.at(i, j) * b[(size_t)j];
    std::vector<Int> y((size_t)n, 0);
    for (int i = 0; i < std::min(m, n); ++i) {
        const Int& d = snf.D.at(i, i);
        if (d == 0) {
            if (c[(size_t)i] != 0) return false;
        } else {
            if (c[(size_t)i] % d != 0) return false;
            y[(size_t)i] = c[(size_t)i] / d;
        }
    }
    for (int i = n; i < m; ++i)
        if (c[(size_t)i] != 0) return false;
    x.assign((size_t)n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (snf.V.at(i, j) != 0) x[(size_t)i] += snf.V.at(i, j) * y[(size_t)j];
    return true;
}

Int det2(const Int& a, const Int& b, const Int& c, const Int& d) {
    return a * d - b * c;
}

} // namespace quasitri
