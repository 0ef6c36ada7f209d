#include "toric/core.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto first = t.find_first_not_of(" \t");
        auto last = t.find_last_not_of(" \t");
        t = first == std::string::npos ? std::string() : t.substr(first, last - first + 1);
    };
    trim(s);
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    trim(num);
    trim(den);
    auto valid = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!valid(num, true) || !valid(den, false))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    return Rational(Integer(num), Integer(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

template <typename V>
std::ostream& print_vector(std::ostream& os, const V& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os << ')';
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return print_vector(os, v); }
std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return print_vector(os, v); }

RationalVector to_rational(const LatticeVector& v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
    return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

LatticeVector primitive_vector(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (g == 0) throw Error("not a direction");
    LatticeVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

bool is_primitive(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& c : v) g = gcd(g, c);
    return g == 1;
}

LatticeVector primitive_direction(const RationalVector& v) {
    Integer l = 1;
    for (const auto& c : v) l = lcm(l, c.denominator());
    LatticeVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = (v[i] * Rational(l)).numerator();
    return primitive_vector(r);
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(rows[r][c]);
    }
    return m;
}

RationalVector Matrix::row(std::size_t r) const {
    RationalVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

RationalVector Matrix::operator*(const RationalVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    RationalVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

namespace {

// Reduced row echelon form of [A | b] in place. Pivot choice: first nonzero
// entry in the column. Returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix augment(const Matrix& a, const RationalVector& b) {
    Matrix m(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        m(r, a.cols()) = b[r];
    }
    return m;
}

}  // namespace

std::optional<RationalVector> solve_exact(const Matrix& a, const RationalVector& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve_exact: dimension mismatch");
    Matrix m = augment(a, b);
    auto pivots = row_reduce(m, a.cols());
    if (pivots.size() < a.cols()) return std::nullopt;
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) x[r] = m(r, a.cols());
    return x;
}

std::optional<RationalVector> solve_consistent(const Matrix& a, const RationalVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_consistent: dimension mismatch");
    Matrix m = augment(a, b);
    auto pivots = row_reduce(m, a.cols());
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (!m(r, a.cols()).is_zero()) return std::nullopt;
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, a.cols());
    return x;
}

Rational determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = a;
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::size_t rank(const Matrix& a) {
    Matrix m = a;
    return row_reduce(m, m.cols()).size();
}

std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t dim) {
    return rank(Matrix::from_rows(rows, dim));
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t dim) {
    return rank(Matrix::from_rows(rows, dim));
}

RationalVector hyperplane_normal(const std::vector<RationalVector>& vectors, std::size_t dim) {
    if (vectors.size() + 1 != dim) throw std::invalid_argument("hyperplane_normal needs dim-1 vectors");
    RationalVector normal(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Matrix minor(dim - 1, dim - 1);
        for (std::size_t r = 0; r + 1 < dim; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                if (c == k) continue;
                minor(r, cc++) = vectors[r][c];
            }
        }
        Rational d = dim == 1 ? Rational(1) : determinant(minor);
        normal[k] = (k % 2 == 0) ? d : -d;
    }
    return normal;
}

LatticeVector hyperplane_normal(const std::vector<LatticeVector>& vectors, std::size_t dim) {
    std::vector<RationalVector> rv;
    rv.reserve(vectors.size());
    for (const auto& v : vectors) rv.push_back(to_rational(v));
    RationalVector n = hyperplane_normal(rv, dim);
    LatticeVector out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = n[i].numerator();  // integral by construction
    return out;
}

bool positively_spans(const std::vector<LatticeVector>& vectors, std::size_t dim) {
    if (rank(vectors, dim) < dim) return false;
    if (dim == 1) {
        bool pos = false, neg = false;
        for (const auto& v : vectors) {
            if (v[0] > 0) pos = true;
            if (v[0] < 0) neg = true;
        }
        return pos && neg;
    }
    // A proper full-dimensional cone has a facet spanned by dim-1 independent
    // generators; look for a hyperplane through such a subset that leaves
    // every generator weakly on one side.
    bool spans = true;
    for_each_subset(vectors.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
        if (!spans) return;
        std::vector<LatticeVector> sub;
        for (auto i : idx) sub.push_back(vectors[i]);
        LatticeVector n = hyperplane_normal(sub, dim);
        if (n.is_zero()) return;
        bool has_pos = false, has_neg = false;
        for (const auto& v : vectors) {
            int s = sgn(dot(n, v));
            if (s > 0) has_pos = true;
            if (s < 0) has_neg = true;
        }
        if (!has_pos || !has_neg) spans = false;
    });
    return spans;
}

Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

}  // namespace toric
