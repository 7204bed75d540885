#pragma once

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sq/rng.hpp"

namespace sq {

// Exact scalar: arbitrary-precision rational, always stored reduced with
// positive denominator (canonical form maintained by the backend).
// Expression templates are disabled so Rat behaves as a plain value type in
// generic code.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// A computation runs entirely over one scalar type: Rat (exact mode) or
// double (float mode). The choice is a template parameter, so modes cannot
// be mixed within an expression.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_fraction(long num, long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double to_double(double v) { return v; }
    static double abs(double v) { return std::fabs(v); }
    static std::string show(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
};

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat from_int(long v) { return Rat(v); }
    static Rat from_fraction(long num, long den) { return Rat(num, den); }
    static double to_double(const Rat& v) { return v.convert_to<double>(); }
    static Rat abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }
    static std::string show(const Rat& v) { return v.str(); }
};

// Well-formedness tolerance for float-mode preconditions (unit vectors,
// orthogonal inputs, grade-1 extraction). Deliberately separate from the
// identity-check tolerance eps: loosening or tightening eps must not change
// which inputs are considered valid.
inline constexpr double kWellFormedEps = 1e-6;

template <class T>
inline double to_double(const T& v) { return scalar_traits<T>::to_double(v); }

template <class T>
inline T abs_val(const T& v) { return scalar_traits<T>::abs(v); }

template <class T>
inline std::string show_scalar(const T& v) { return scalar_traits<T>::show(v); }

// ---------------------------------------------------------------------------
// Complex numbers over either scalar mode (std::complex is only specified
// for the builtin floating types, so SU(2) entries get their own type).
// ---------------------------------------------------------------------------
template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(T r) : re(std::move(r)), im() {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex conj() const { return {re, -im}; }
    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
};

// ---------------------------------------------------------------------------
// Dense vectors and matrices. Sizes here are tiny ((n+1) <= 13), so the
// implementation favors exactness and clarity over BLAS-style performance.
// ---------------------------------------------------------------------------
template <class T>
class Vector {
public:
    explicit Vector(int dim) : coords_(check_dim(dim)) {}
    Vector(std::initializer_list<T> cs) : coords_(cs) {
        check_dim(static_cast<int>(coords_.size()));
    }
    explicit Vector(std::vector<T> cs) : coords_(std::move(cs)) {
        check_dim(static_cast<int>(coords_.size()));
    }

    int dim() const { return static_cast<int>(coords_.size()); }
    const T& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    T& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }

    Vector operator+(const Vector& o) const {
        require_same_dim(o);
        Vector r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] + o[i];
        return r;
    }
    Vector operator-(const Vector& o) const {
        require_same_dim(o);
        Vector r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] - o[i];
        return r;
    }
    Vector operator-() const {
        Vector r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = -(*this)[i];
        return r;
    }
    Vector scaled(const T& s) const {
        Vector r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] * s;
        return r;
    }
    bool operator==(const Vector& o) const { return coords_ == o.coords_; }

    static Vector basis(int dim, int i) {
        Vector r(dim);
        for (int j = 0; j < dim; ++j) r[j] = scalar_traits<T>::from_int(j == i ? 1 : 0);
        return r;
    }

    std::string show() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << show_scalar((*this)[i]);
        os << ")";
        return os.str();
    }

private:
    static int check_dim(int d) {
        if (d <= 0) throw std::invalid_argument("vector dimension must be positive");
        return d;
    }
    void require_same_dim(const Vector& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    }
    std::vector<T> coords_;
};

template <class T>
T inner_product(const Vector<T>& x, const Vector<T>& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    T acc = scalar_traits<T>::from_int(0);
    for (int i = 0; i < x.dim(); ++i) acc += x[i] * y[i];
    return acc;
}

template <class T>
double vec_distance(const Vector<T>& a, const Vector<T>& b) {
    if (a.dim() != b.dim()) return 1e9;
    double d = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        d = std::max(d, std::fabs(to_double<T>(a[i] - b[i])));
    return d;
}

template <class T>
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(check_dim(rows)), cols_(check_dim(cols)),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    Matrix(int rows, int cols, std::vector<T> entries)
        : rows_(check_dim(rows)), cols_(check_dim(cols)), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
            throw std::invalid_argument("matrix entry count mismatch");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const T& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    T& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("mat_mul: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) {
                T acc = scalar_traits_from_int(0);
                for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix subtraction: shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    static Matrix identity(int n) {
        Matrix r(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(i, j) = scalar_traits_from_int(i == j ? 1 : 0);
        return r;
    }

    static Matrix diagonal(const std::vector<long>& d) {
        Matrix r(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < r.rows(); ++i)
            for (int j = 0; j < r.cols(); ++j)
                r.at(i, j) = scalar_traits_from_int(i == j ? d[static_cast<std::size_t>(i)] : 0);
        return r;
    }

    std::string show() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << show_scalar(at(i, j));
        }
        os << "]";
        return os.str();
    }

private:
    static T scalar_traits_from_int(long v) { return scalar_traits<T>::from_int(v); }
    static int check_dim(int d) {
        if (d <= 0) throw std::invalid_argument("matrix dimensions must be positive");
        return d;
    }
    int rows_, cols_;
    std::vector<T> entries_;
};

template <class T>
double mat_distance(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e9;
    double d = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            d = std::max(d, std::fabs(to_double<T>(a.at(i, j) - b.at(i, j))));
    return d;
}

// Row-vector action x -> x*m (group elements act on sphere points from the
// right throughout).
template <class T>
Vector<T> row_apply(const Vector<T>& x, const Matrix<T>& m) {
    if (x.dim() != m.rows()) throw std::invalid_argument("row_apply: shape mismatch");
    Vector<T> r(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        T acc = scalar_traits<T>::from_int(0);
        for (int i = 0; i < m.rows(); ++i) acc += x[i] * m.at(i, j);
        r[j] = acc;
    }
    return r;
}

// Determinant. Exact mode uses fraction-free (Bareiss) elimination, whose
// divisions stay exact over rationals; float mode uses LU with partial
// pivoting.
template <class T>
T det(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const int n = m.rows();
    if constexpr (scalar_traits<T>::is_exact) {
        // Bareiss on rationals: division is exact at every step.
        Matrix<T> a = m;
        T sign = scalar_traits<T>::from_int(1);
        T prev = scalar_traits<T>::from_int(1);
        for (int k = 0; k < n - 1; ++k) {
            if (a.at(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a.at(i, k) != 0) { p = i; break; }
                if (p < 0) return scalar_traits<T>::from_int(0);
                for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            prev = a.at(k, k);
        }
        return sign * a.at(n - 1, n - 1);
    } else {
        Matrix<T> a = m;
        double sign = 1.0;
        T result = scalar_traits<T>::from_int(1);
        for (int k = 0; k < n; ++k) {
            int p = k;
            for (int i = k + 1; i < n; ++i)
                if (std::fabs(to_double<T>(a.at(i, k))) > std::fabs(to_double<T>(a.at(p, k)))) p = i;
            if (to_double<T>(a.at(p, k)) == 0.0) return scalar_traits<T>::from_int(0);
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
                sign = -sign;
            }
            result = result * a.at(k, k);
            for (int i = k + 1; i < n; ++i) {
                T f = a.at(i, k) / a.at(k, k);
                for (int j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
            }
        }
        return scalar_traits<T>::from_int(static_cast<long>(sign)) * result;
    }
}

template <class T>
bool is_orthogonal(const Matrix<T>& m, double eps) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_orthogonal: matrix not square");
    Matrix<T> p = m.transpose() * m;
    Matrix<T> id = Matrix<T>::identity(m.rows());
    if constexpr (scalar_traits<T>::is_exact) {
        (void)eps;
        return p == id;
    } else {
        return mat_distance(p, id) <= eps;
    }
}

// ---------------------------------------------------------------------------
// Sphere samplers.
//
// Exact mode maps an integer/rational tuple q onto the sphere by the inverse
// stereographic map
//     q |-> ( (1-|q|^2)/(1+|q|^2), 2q_1/(1+|q|^2), ..., 2q_n/(1+|q|^2) ),
// which has exactly unit norm for rational q and hits e_1 at q = 0.
// Float mode normalizes a standard Gaussian vector.
// ---------------------------------------------------------------------------
inline Vector<Rat> sphere_from_tuple(const std::vector<Rat>& q) {
    Rat norm2(0);
    for (const Rat& c : q) norm2 += c * c;
    Rat denom = 1 + norm2;
    Vector<Rat> x(static_cast<int>(q.size()) + 1);
    x[0] = (1 - norm2) / denom;
    for (std::size_t i = 0; i < q.size(); ++i)
        x[static_cast<int>(i) + 1] = 2 * q[i] / denom;
    return x;
}

template <class T>
Vector<T> sample_sphere(Rng& rng, int n);

template <>
inline Vector<double> sample_sphere<double>(Rng& rng, int n) {
    Vector<double> v(n + 1);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (int i = 0; i <= n; ++i) {
            v[i] = rng.gaussian();
            norm2 += v[i] * v[i];
        }
    } while (norm2 < 1e-12);
    double inv = 1.0 / std::sqrt(norm2);
    for (int i = 0; i <= n; ++i) v[i] *= inv;
    return v;
}

template <>
inline Vector<Rat> sample_sphere<Rat>(Rng& rng, int n) {
    std::vector<Rat> q(static_cast<std::size_t>(n));
    for (auto& c : q) c = Rat(rng.uniform_int(-9, 9), rng.uniform_int(1, 4));
    return sphere_from_tuple(q);
}

} // namespace sq
