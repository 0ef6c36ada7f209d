// Exact rational arithmetic, lattice vectors and small dense linear algebra.
//
// Every quantity that feeds a stability verdict flows through the types in
// this header. There is no floating-point path.

#ifndef TORIC_CORE_HPP
#define TORIC_CORE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A reduced fraction p/q with q > 0.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) : value_(n) {}                           // NOLINT(google-explicit-constructor)
    Rational(int n) : value_(n) {}                            // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long long num, long long den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    /// Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    Integer floor() const;
    Integer ceil() const;
    Rational abs() const { return Rational(::abs(value_)); }

    /// "p/q", or "p" when q = 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

/// Fixed-length coordinate vector. Instantiated for lattice points (Integer)
/// and points of the real span (Rational).
template <typename Scalar>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : coords_(n) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
    Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

    std::size_t size() const { return coords_.size(); }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    Vector& operator+=(const Vector& o) {
        check_size(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        check_size(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Vector& operator*=(const Scalar& k) {
        for (auto& c : coords_) c *= k;
        return *this;
    }
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const Scalar& k) { return a *= k; }
    friend Vector operator-(Vector a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    friend bool operator==(const Vector& a, const Vector& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }
    /// Lexicographic.
    friend bool operator<(const Vector& a, const Vector& b) {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return a.size() < b.size();
    }

private:
    void check_size(const Vector& o) const {
        if (o.size() != size()) throw std::invalid_argument("vector dimension mismatch");
    }
    std::vector<Scalar> coords_;
};

using LatticeVector = Vector<Integer>;
using RationalVector = Vector<Rational>;

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

RationalVector to_rational(const LatticeVector& v);
Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Divides v by the gcd of its entries. Throws Error("not a direction") on 0.
LatticeVector primitive_vector(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);

/// Clears denominators and reduces to a primitive integer vector with the
/// same direction.
LatticeVector primitive_direction(const RationalVector& v);

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
    static Matrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    RationalVector row(std::size_t r) const;
    RationalVector operator*(const RationalVector& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Unique solution of the square system A x = b, or nullopt if A is singular.
/// Throws std::invalid_argument on a shape mismatch.
std::optional<RationalVector> solve_exact(const Matrix& a, const RationalVector& b);

/// Some solution of a (possibly over- or under-determined) system A x = b,
/// or nullopt if inconsistent. Free variables are set to zero.
std::optional<RationalVector> solve_consistent(const Matrix& a, const RationalVector& b);

Rational determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
std::size_t rank(const std::vector<LatticeVector>& rows, std::size_t dim);
std::size_t rank(const std::vector<RationalVector>& rows, std::size_t dim);

/// Normal of the hyperplane spanned by n-1 vectors in R^n (generalized cross
/// product). Zero iff the vectors are dependent.
LatticeVector hyperplane_normal(const std::vector<LatticeVector>& vectors, std::size_t dim);
RationalVector hyperplane_normal(const std::vector<RationalVector>& vectors, std::size_t dim);

/// True iff the cone generated by the vectors is all of R^dim, i.e. there
/// is no u != 0 with <u, v> >= 0 for every v.
bool positively_spans(const std::vector<LatticeVector>& vectors, std::size_t dim);

Integer factorial(std::size_t n);

/// Calls fn(indices) for every k-element subset of {0, ..., n-1} in
/// lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace toric

#endif  // TORIC_CORE_HPP
