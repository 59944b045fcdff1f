#include "intres/linalg.hpp"

#include <sstream>

namespace intres {

bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar inverse_mod(Scalar x, Scalar p) {
    // extended Euclid on (x, p); p prime, x != 0 mod p
    x %= p;
    if (x == 0) throw InternalError("inverse of zero in GF(p)");
    std::int64_t a = x, b = p, u = 1, v = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        u -= q * v;
        std::swap(u, v);
    }
    std::int64_t r = u % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
}

Matrix::Matrix(int rows, int cols, Scalar p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
    if (!is_prime(p) || p > (1u << 15))
        throw ValidationError("field characteristic must be a prime < 2^15, got " + std::to_string(p));
    a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(int n, Scalar p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Scalar p) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw SchemaError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& v, Scalar p) {
    Matrix m(static_cast<int>(v.size()), 1, p);
    for (int i = 0; i < m.rows(); ++i) m.set(i, 0, v[i]);
    return m;
}

static void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw InternalError("mixed field characteristics in matrix arithmetic");
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    check_field(*this, rhs);
    if (cols_ != rhs.rows()) throw InternalError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols(), p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols(); ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < cols_; ++k)
                acc += static_cast<std::uint64_t>(at(i, k)) * rhs.at(k, j);
            out.set(i, j, static_cast<Scalar>(acc % p_));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    check_field(*this, rhs);
    if (rows_ != rhs.rows() || cols_ != rhs.cols()) throw InternalError("matrix sum shape mismatch");
    Matrix out(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + rhs.at(i, j));
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    check_field(*this, rhs);
    if (rows_ != rhs.rows() || cols_ != rhs.cols()) throw InternalError("matrix diff shape mismatch");
    Matrix out(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + p_ - rhs.at(i, j));
    return out;
}

Matrix Matrix::scaled(Scalar c) const {
    Matrix out(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * (c % p_));
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    check_field(*this, rhs);
    if (rows_ != rhs.rows()) throw InternalError("hstack row mismatch");
    Matrix out(rows_, cols_ + rhs.cols(), p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
        for (int j = 0; j < rhs.cols(); ++j) out.set(i, cols_ + j, rhs.at(i, j));
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    check_field(*this, rhs);
    if (cols_ != rhs.cols()) throw InternalError("vstack column mismatch");
    Matrix out(rows_ + rhs.rows(), cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int i = 0; i < rhs.rows(); ++i)
        for (int j = 0; j < cols_; ++j) out.set(rows_ + i, j, rhs.at(i, j));
    return out;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix out(rows_, static_cast<int>(idx.size()), p_);
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < rows_; ++i) out.set(i, j, at(i, idx[j]));
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InternalError("matrix apply shape mismatch");
    std::vector<Scalar> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(at(i, j)) * v[j];
        out[i] = static_cast<Scalar>(acc % p_);
    }
    return out;
}

std::vector<Scalar> Matrix::row(int i) const {
    std::vector<Scalar> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<Scalar> Matrix::col(int j) const {
    std::vector<Scalar> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (Scalar v : a_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && p_ == rhs.p_ && a_ == rhs.a_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " (mod " << p_ << ")";
    for (int i = 0; i < rows_; ++i) {
        os << "\n[";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

Echelon reduced_row_echelon(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.rref;
    const Scalar p = a.field();
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) {
                Scalar t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        Scalar inv = inverse_mod(a.at(r, c), p);
        for (int j = 0; j < a.cols(); ++j) a.set(r, j, a.at(r, j) * inv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            Scalar f = a.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < a.cols(); ++j)
                a.set(i, j, a.at(i, j) + (p - f) * a.at(r, j));
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

int rank(const Matrix& m) { return static_cast<int>(reduced_row_echelon(m).pivots.size()); }

Matrix kernel_basis(const Matrix& m) {
    const Scalar p = m.field();
    Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(m.cols(), static_cast<int>(free_cols.size()), p);
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int f = free_cols[k];
        basis.set(f, k, 1);
        for (int r = 0; r < static_cast<int>(e.pivots.size()); ++r) {
            Scalar v = e.rref.at(r, f);
            if (v != 0) basis.set(e.pivots[r], k, p - v);
        }
    }
    return basis;
}

std::optional<Solution> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw InternalError("solve rhs size mismatch");
    Matrix aug = m.hstack(Matrix::column_vector(b, m.field()));
    Echelon e = reduced_row_echelon(aug);
    // inconsistent iff some pivot lands in the appended column
    for (int c : e.pivots)
        if (c == m.cols()) return std::nullopt;
    Solution s;
    s.particular.assign(m.cols(), 0);
    for (int r = 0; r < static_cast<int>(e.pivots.size()); ++r)
        s.particular[e.pivots[r]] = e.rref.at(r, m.cols());
    s.kernel = kernel_basis(m);
    return s;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InternalError("solve_matrix shape mismatch");
    Matrix x(a.cols(), b.cols(), a.field());
    for (int j = 0; j < b.cols(); ++j) {
        auto s = solve(a, b.col(j));
        if (!s) return std::nullopt;
        for (int i = 0; i < a.cols(); ++i) x.set(i, j, s->particular[i]);
    }
    return x;
}

Matrix column_space_basis(const Matrix& m) {
    Echelon e = reduced_row_echelon(m);
    return m.columns(e.pivots);
}

} // namespace intres
