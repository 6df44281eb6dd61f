// Exact linear algebra over a prime field F_p.
//
// Everything downstream (exactness tests, homotopy searches, axiom checkers)
// reduces to rank / kernel / solve questions answered here. Elimination uses
// a fixed pivot order (leftmost nonzero column, topmost row) so that every
// derived basis and every solution is reproducible across runs.

#ifndef FPCAT_LINALG_HPP
#define FPCAT_LINALG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpcat {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

/// Arithmetic in F_p for a machine-word prime p.
class PrimeField {
  public:
    PrimeField() : p_(2) {}
    explicit PrimeField(uint32_t p) : p_(p) {
        require(p >= 2, "field characteristic must be >= 2");
        require(is_prime(p), "field characteristic must be prime: " + std::to_string(p));
    }

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t inv(uint32_t a) const {
        require(a % p_ != 0, "division by zero in F_p");
        // Fermat: a^(p-2)
        uint64_t base = a % p_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }
    uint32_t reduce(int64_t a) const {
        int64_t r = a % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  private:
    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t p_;
};

using FVector = std::vector<uint32_t>;

inline FVector vec_add(const PrimeField& F, const FVector& a, const FVector& b) {
    require(a.size() == b.size(), "vector size mismatch");
    FVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

inline FVector vec_sub(const PrimeField& F, const FVector& a, const FVector& b) {
    require(a.size() == b.size(), "vector size mismatch");
    FVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

inline FVector vec_scale(const PrimeField& F, uint32_t c, const FVector& a) {
    FVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

inline bool vec_is_zero(const FVector& a) {
    for (uint32_t x : a)
        if (x != 0) return false;
    return true;
}

/// Dense row-major matrix over F_p. Rows or cols may be zero; a 0xN or Nx0
/// matrix is a legitimate map to or from the zero space.
class FMatrix {
  public:
    FMatrix() : rows_(0), cols_(0) {}
    FMatrix(PrimeField field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    FMatrix(PrimeField field, size_t rows, size_t cols, FVector entries)
        : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        require(entries_.size() == rows_ * cols_, "entry count mismatch");
        for (uint32_t& e : entries_) e %= field_.p();
    }

    static FMatrix identity(PrimeField field, size_t n) {
        FMatrix m(field, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static FMatrix from_rows(PrimeField field, const std::vector<FVector>& rows) {
        size_t r = rows.size(), c = r ? rows[0].size() : 0;
        FMatrix m(field, r, c);
        for (size_t i = 0; i < r; ++i) {
            require(rows[i].size() == c, "ragged rows");
            for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j] % field.p();
        }
        return m;
    }

    static FMatrix from_columns(PrimeField field, size_t rows, const std::vector<FVector>& cols) {
        FMatrix m(field, rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, "column length mismatch");
            for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i] % field.p();
        }
        return m;
    }

    const PrimeField& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    uint32_t at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    const FVector& entries() const { return entries_; }

    bool is_zero() const { return vec_is_zero(entries_); }

    bool operator==(const FMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const FMatrix& o) const { return !(*this == o); }

    FMatrix transpose() const {
        FMatrix t(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    FMatrix mul(const FMatrix& rhs) const {
        require(cols_ == rhs.rows_, "matrix product shape mismatch");
        require(field_ == rhs.field_, "matrix product field mismatch");
        FMatrix r(field_, rows_, rhs.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                uint32_t a = at(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < rhs.cols_; ++j)
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, rhs.at(k, j)));
            }
        return r;
    }

    FVector apply(const FVector& v) const {
        require(v.size() == cols_, "matrix apply shape mismatch");
        FVector r(rows_, 0);
        for (size_t i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (size_t j = 0; j < cols_; ++j) acc += static_cast<uint64_t>(at(i, j)) * v[j];
            r[i] = static_cast<uint32_t>(acc % field_.p());
        }
        return r;
    }

    FMatrix add(const FMatrix& rhs) const {
        require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum shape mismatch");
        FMatrix r(field_, rows_, cols_);
        for (size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = field_.add(entries_[i], rhs.entries_[i]);
        return r;
    }

    FMatrix scale(uint32_t c) const {
        FMatrix r(field_, rows_, cols_);
        for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = field_.mul(c, entries_[i]);
        return r;
    }

    FMatrix negate() const { return scale(field_.p() - 1); }

    /// [this | rhs] side by side.
    FMatrix hstack(const FMatrix& rhs) const {
        require(rows_ == rhs.rows_, "hstack row mismatch");
        FMatrix r(field_, rows_, cols_ + rhs.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (size_t j = 0; j < rhs.cols_; ++j) r.at(i, cols_ + j) = rhs.at(i, j);
        }
        return r;
    }

    /// [this ; rhs] stacked.
    FMatrix vstack(const FMatrix& rhs) const {
        require(cols_ == rhs.cols_, "vstack col mismatch");
        FMatrix r(field_, rows_ + rhs.rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (size_t i = 0; i < rhs.rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = rhs.at(i, j);
        return r;
    }

  private:
    PrimeField field_;
    size_t rows_, cols_;
    FVector entries_;
};

struct RrefResult {
    FMatrix m;                  // reduced row echelon form
    std::vector<size_t> pivots; // pivot column per used row, increasing
};

/// Row reduction with the fixed pivot rule: scan columns left to right, take
/// the topmost unused row with a nonzero entry.
inline RrefResult rref(const FMatrix& a) {
    FMatrix m = a;
    const PrimeField& F = m.field();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
        uint32_t inv = F.inv(m.at(row, col));
        for (size_t j = 0; j < m.cols(); ++j) m.at(row, j) = F.mul(inv, m.at(row, j));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            uint32_t f = m.at(i, col);
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline size_t rank(const FMatrix& m) { return rref(m).pivots.size(); }

/// Basis of ker(m) as column vectors, one per free column, in increasing
/// free-column order: the free coordinate is 1, other free coordinates 0.
inline std::vector<FVector> kernel_basis(const FMatrix& m) {
    RrefResult r = rref(m);
    const PrimeField& F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    std::vector<FVector> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        FVector v(m.cols(), 0);
        v[free] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = F.neg(r.m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b, or nullopt. Free variables are set to zero, which is
/// the lexicographically least assignment.
inline std::optional<FVector> solve_linear(const FMatrix& m, const FVector& b) {
    require(b.size() == m.rows(), "solve: rhs length mismatch");
    FMatrix aug = m.hstack(FMatrix::from_columns(m.field(), m.rows(), {b}));
    RrefResult r = rref(aug);
    // Inconsistent iff some pivot lands in the rhs column.
    for (size_t c : r.pivots)
        if (c == m.cols()) return std::nullopt;
    FVector x(m.cols(), 0);
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m.at(i, m.cols());
    return x;
}

/// Particular solution plus kernel basis; the full solution set of m x = b.
struct AffineSolutions {
    bool solvable = false;
    FVector particular;
    std::vector<FVector> kernel;
};

inline AffineSolutions solve_affine(const FMatrix& m, const FVector& b) {
    AffineSolutions s;
    auto x = solve_linear(m, b);
    if (!x) return s;
    s.solvable = true;
    s.particular = *x;
    s.kernel = kernel_basis(m);
    return s;
}

/// Visit every solution of m x = b in a deterministic order (kernel
/// coefficients counted in base p, first basis vector fastest). The visitor
/// returns false to stop early; for_each_solution then returns true.
template <typename Visit>
inline bool for_each_solution(const PrimeField& F, const AffineSolutions& s, Visit&& visit) {
    if (!s.solvable) return false;
    size_t k = s.kernel.size();
    std::vector<uint32_t> digits(k, 0);
    FVector x = s.particular;
    while (true) {
        if (!visit(static_cast<const FVector&>(x))) return true;
        size_t i = 0;
        for (; i < k; ++i) {
            digits[i]++;
            for (size_t t = 0; t < x.size(); ++t) x[t] = F.add(x[t], s.kernel[i][t]);
            if (digits[i] < F.p()) break;
            digits[i] = 0; // adding the vector p times returned x to its old value
        }
        if (i == k) return false;
    }
}

/// A chain of F_p-spaces d_0 -> d_1 -> ... -> d_k with maps m_i : d_i -> d_{i+1}.
struct LinearSeq {
    std::vector<size_t> spaces;
    std::vector<FMatrix> maps;

    void validate() const {
        require(spaces.size() == maps.size() + 1, "linear sequence shape mismatch");
        for (size_t i = 0; i < maps.size(); ++i) {
            require(maps[i].cols() == spaces[i], "map domain mismatch at " + std::to_string(i));
            require(maps[i].rows() == spaces[i + 1], "map codomain mismatch at " + std::to_string(i));
        }
    }
};

/// Exactness at the interior space i (1 <= i <= k-1): image(m_{i-1}) = ker(m_i),
/// decided by m_i m_{i-1} = 0 together with rank(m_{i-1}) + rank(m_i) = dim d_i.
inline bool is_exact_at(const LinearSeq& s, size_t i) {
    require(i >= 1 && i + 1 < s.spaces.size(), "exactness position out of range");
    const FMatrix& in = s.maps[i - 1];
    const FMatrix& out = s.maps[i];
    if (!out.mul(in).is_zero()) return false;
    return rank(in) + rank(out) == s.spaces[i];
}

inline bool is_exact_everywhere(const LinearSeq& s) {
    for (size_t i = 1; i + 1 < s.spaces.size(); ++i)
        if (!is_exact_at(s, i)) return false;
    return true;
}

} // namespace fpcat

#endif
