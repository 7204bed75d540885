#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sq/numerics.hpp"
#include "sq/rng.hpp"

namespace sq {

template <class T>
struct scalar_traits<Complex<T>> {
    static constexpr bool is_exact = scalar_traits<T>::is_exact;
    static Complex<T> from_int(long v) {
        return Complex<T>(scalar_traits<T>::from_int(v), scalar_traits<T>::from_int(0));
    }
    static std::string show(const Complex<T>& v) {
        return scalar_traits<T>::show(v.re) + "+" + scalar_traits<T>::show(v.im) + "i";
    }
};

template <class T>
double mat_distance(const Matrix<Complex<T>>& a, const Matrix<Complex<T>>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e9;
    double d = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Complex<T> diff = a.at(i, j) - b.at(i, j);
            d = std::max(d, std::fabs(to_double<T>(diff.re)));
            d = std::max(d, std::fabs(to_double<T>(diff.im)));
        }
    return d;
}

// A group presented by its operations on a value type E. The same semidirect
// constructions are instantiated over SO(2), SU(2) and finite groups, so the
// interface is kept generic.
template <class E>
struct GroupOps {
    std::string name;
    std::function<E()> identity;
    std::function<E(const E&, const E&)> mul;
    std::function<E(const E&)> inv;
    std::function<bool(const E&, const E&)> equal;
    std::function<double(const E&, const E&)> distance;
    std::function<std::string(const E&)> show;
    std::function<E(Rng&)> sample;

    E conj(const E& g, const E& h) const { return mul(mul(inv(h), g), h); }
};

// First-class automorphism: the search ranges over these, and the semidirect
// products need psi^n for possibly negative n, hence the explicit inverse.
template <class E>
struct Automorphism {
    std::string name;
    bool involutive = false;
    std::function<E(const E&)> apply;
    std::function<E(const E&)> apply_inv;

    E pow(long n, const E& x) const {
        if (involutive) return (((n % 2) + 2) % 2 == 0) ? x : apply(x);
        E r = x;
        if (n >= 0)
            for (long i = 0; i < n; ++i) r = apply(r);
        else
            for (long i = 0; i < -n; ++i) r = apply_inv(r);
        return r;
    }
};

template <class E>
Automorphism<E> identity_automorphism() {
    return {"id", true, [](const E& x) { return x; }, [](const E& x) { return x; }};
}

// Inversion; an automorphism exactly when the group is abelian.
template <class E>
Automorphism<E> inversion_automorphism(const GroupOps<E>& g) {
    auto inv = g.inv;
    return {"Inv", true, [inv](const E& x) { return inv(x); },
            [inv](const E& x) { return inv(x); }};
}

// ---------------------------------------------------------------------------
// Matrix groups over the reals: O(2), SO(2), O(n).
// ---------------------------------------------------------------------------
template <class T>
Matrix<T> j_reflection() {
    return Matrix<T>::diagonal({1, -1});
}

// (cos t, sin t) on the circle -> rot(t) in SO(2). Exact for rational
// circle points.
template <class T>
Matrix<T> rot_from_circle_point(const Vector<T>& p) {
    if (p.dim() != 2) throw std::invalid_argument("rot_from_circle_point: need a 2-vector");
    Matrix<T> m(2, 2);
    m.at(0, 0) = p[0];
    m.at(0, 1) = -p[1];
    m.at(1, 0) = p[1];
    m.at(1, 1) = p[0];
    return m;
}

template <class T>
void require_orthogonal(const Matrix<T>& m, double eps, const char* who) {
    if (!is_orthogonal(m, eps))
        throw std::invalid_argument(std::string(who) + ": matrix is not orthogonal");
}

// Orthogonal group elements represented by their matrices; inversion is the
// transpose, which keeps exact mode exact.
template <class T>
GroupOps<Matrix<T>> orthogonal_group(int n) {
    GroupOps<Matrix<T>> g;
    g.name = "O(" + std::to_string(n) + ")";
    g.identity = [n] { return Matrix<T>::identity(n); };
    g.mul = [](const Matrix<T>& a, const Matrix<T>& b) { return a * b; };
    g.inv = [](const Matrix<T>& a) { return a.transpose(); };
    g.equal = [](const Matrix<T>& a, const Matrix<T>& b) { return a == b; };
    g.distance = [](const Matrix<T>& a, const Matrix<T>& b) { return mat_distance(a, b); };
    g.show = [](const Matrix<T>& a) { return a.show(); };
    // Product of point reflections 2 y^t y - I; covers both components.
    g.sample = [n](Rng& rng) {
        Matrix<T> m = Matrix<T>::identity(n);
        int k = static_cast<int>(rng.uniform_int(0, 3));
        for (int i = 0; i < k; ++i) {
            Vector<T> y = sample_sphere<T>(rng, n - 1);
            Matrix<T> refl(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    T v = y[r] * y[c] * scalar_traits<T>::from_int(2);
                    if (r == c) v -= scalar_traits<T>::from_int(1);
                    refl.at(r, c) = v;
                }
            m = m * refl;
        }
        return m;
    };
    return g;
}

template <class T>
GroupOps<Matrix<T>> o2_group() {
    GroupOps<Matrix<T>> g = orthogonal_group<T>(2);
    g.name = "O(2)";
    g.sample = [](Rng& rng) {
        Matrix<T> m = rot_from_circle_point(sample_sphere<T>(rng, 1));
        if (rng.coin()) m = m * j_reflection<T>();
        return m;
    };
    return g;
}

template <class T>
GroupOps<Matrix<T>> so2_group() {
    GroupOps<Matrix<T>> g = orthogonal_group<T>(2);
    g.name = "SO(2)";
    g.sample = [](Rng& rng) { return rot_from_circle_point(sample_sphere<T>(rng, 1)); };
    return g;
}

// ---------------------------------------------------------------------------
// SU(2), stored as the 2x2 complex matrix
//   ( x1+x2 i   x3+x4 i )
//   (-x3+x4 i   x1-x2 i )     with (x1,x2,x3,x4) on S^3.
// ---------------------------------------------------------------------------
template <class T>
using SU2 = Matrix<Complex<T>>;

template <class T>
SU2<T> su2_from_point(const Vector<T>& x, double eps = kWellFormedEps) {
    if (x.dim() != 4) throw std::invalid_argument("su2_from_point: need a 4-vector");
    T norm2 = inner_product(x, x);
    if constexpr (scalar_traits<T>::is_exact) {
        if (!(norm2 == scalar_traits<T>::from_int(1)))
            throw std::invalid_argument("su2_from_point: not a unit vector");
    } else {
        if (std::fabs(to_double<T>(norm2) - 1.0) > eps)
            throw std::invalid_argument("su2_from_point: not a unit vector");
    }
    SU2<T> m(2, 2);
    m.at(0, 0) = Complex<T>(x[0], x[1]);
    m.at(0, 1) = Complex<T>(x[2], x[3]);
    m.at(1, 0) = Complex<T>(-x[2], x[3]);
    m.at(1, 1) = Complex<T>(x[0], -x[1]);
    return m;
}

// Coordinates (x1,x2,x3,x4) of an SU(2) element in the stored form.
template <class T>
Vector<T> su2_coords(const SU2<T>& m) {
    return Vector<T>{m.at(0, 0).re, m.at(0, 0).im, m.at(0, 1).re, m.at(0, 1).im};
}

template <class T>
SU2<T> su2_inv(const SU2<T>& m) {
    // conjugate transpose
    SU2<T> r(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = m.at(j, i).conj();
    return r;
}

template <class T>
GroupOps<SU2<T>> su2_group() {
    GroupOps<SU2<T>> g;
    g.name = "SU(2)";
    g.identity = [] { return SU2<T>::identity(2); };
    g.mul = [](const SU2<T>& a, const SU2<T>& b) { return a * b; };
    g.inv = [](const SU2<T>& a) { return su2_inv(a); };
    g.equal = [](const SU2<T>& a, const SU2<T>& b) { return a == b; };
    g.distance = [](const SU2<T>& a, const SU2<T>& b) { return mat_distance(a, b); };
    g.show = [](const SU2<T>& a) { return su2_coords(a).show(); };
    g.sample = [](Rng& rng) { return su2_from_point(sample_sphere<T>(rng, 3)); };
    return g;
}

// ---------------------------------------------------------------------------
// Semidirect products.
// ---------------------------------------------------------------------------

// Element of (G x G) x|_Sw Z^x; Sw_{-1} swaps the pair.
template <class E>
struct SwElem {
    E g;
    E h;
    int sign = 1; // +1 or -1
};

// Element of G x|_psi Z.
template <class E>
struct ZElem {
    E g;
    long m = 0;
};

// Element of G x|_psi Z/2Z (psi involutive).
template <class E>
struct Z2Elem {
    E g;
    int m = 0; // 0 or 1
};

template <class E>
GroupOps<SwElem<E>> sw_semidirect(const GroupOps<E>& base) {
    GroupOps<SwElem<E>> g;
    g.name = "(" + base.name + "x" + base.name + ")x|Sw Zx";
    g.identity = [base] { return SwElem<E>{base.identity(), base.identity(), 1}; };
    // (g1,h1,a)*(g2,h2,b) = (Sw_b(g1,h1)*(g2,h2), ab)
    g.mul = [base](const SwElem<E>& a, const SwElem<E>& b) {
        const E& first = (b.sign == -1) ? a.h : a.g;
        const E& second = (b.sign == -1) ? a.g : a.h;
        return SwElem<E>{base.mul(first, b.g), base.mul(second, b.h), a.sign * b.sign};
    };
    g.inv = [base](const SwElem<E>& a) {
        if (a.sign == -1) return SwElem<E>{base.inv(a.h), base.inv(a.g), -1};
        return SwElem<E>{base.inv(a.g), base.inv(a.h), 1};
    };
    g.equal = [base](const SwElem<E>& a, const SwElem<E>& b) {
        return a.sign == b.sign && base.equal(a.g, b.g) && base.equal(a.h, b.h);
    };
    g.distance = [base](const SwElem<E>& a, const SwElem<E>& b) {
        double d = std::max(base.distance(a.g, b.g), base.distance(a.h, b.h));
        return std::max(d, a.sign == b.sign ? 0.0 : 2.0);
    };
    g.show = [base](const SwElem<E>& a) {
        std::ostringstream os;
        os << "(" << base.show(a.g) << ", " << base.show(a.h) << ", "
           << (a.sign > 0 ? "+1" : "-1") << ")";
        return os.str();
    };
    g.sample = [base](Rng& rng) {
        return SwElem<E>{base.sample(rng), base.sample(rng), rng.coin() ? 1 : -1};
    };
    return g;
}

template <class E>
GroupOps<ZElem<E>> z_semidirect(const GroupOps<E>& base, const Automorphism<E>& psi) {
    GroupOps<ZElem<E>> g;
    g.name = base.name + "x|" + psi.name + " Z";
    g.identity = [base] { return ZElem<E>{base.identity(), 0}; };
    // (g,m)*(h,n) = (psi^n(g) h, m+n)
    g.mul = [base, psi](const ZElem<E>& a, const ZElem<E>& b) {
        return ZElem<E>{base.mul(psi.pow(b.m, a.g), b.g), a.m + b.m};
    };
    g.inv = [base, psi](const ZElem<E>& a) {
        return ZElem<E>{psi.pow(-a.m, base.inv(a.g)), -a.m};
    };
    g.equal = [base](const ZElem<E>& a, const ZElem<E>& b) {
        return a.m == b.m && base.equal(a.g, b.g);
    };
    g.distance = [base](const ZElem<E>& a, const ZElem<E>& b) {
        return std::max(base.distance(a.g, b.g), static_cast<double>(std::labs(a.m - b.m)));
    };
    g.show = [base](const ZElem<E>& a) {
        std::ostringstream os;
        os << "(" << base.show(a.g) << ", " << a.m << ")";
        return os.str();
    };
    g.sample = [base](Rng& rng) {
        return ZElem<E>{base.sample(rng), rng.uniform_int(-3, 3)};
    };
    return g;
}

template <class E>
GroupOps<Z2Elem<E>> z2_semidirect(const GroupOps<E>& base, const Automorphism<E>& psi) {
    if (!psi.involutive)
        throw std::invalid_argument("z2_semidirect: psi must be involutive");
    GroupOps<Z2Elem<E>> g;
    g.name = base.name + "x|" + psi.name + " Z/2Z";
    g.identity = [base] { return Z2Elem<E>{base.identity(), 0}; };
    g.mul = [base, psi](const Z2Elem<E>& a, const Z2Elem<E>& b) {
        return Z2Elem<E>{base.mul(psi.pow(b.m, a.g), b.g), (a.m + b.m) % 2};
    };
    g.inv = [base, psi](const Z2Elem<E>& a) {
        return Z2Elem<E>{psi.pow(a.m, base.inv(a.g)), a.m};
    };
    g.equal = [base](const Z2Elem<E>& a, const Z2Elem<E>& b) {
        return a.m == b.m && base.equal(a.g, b.g);
    };
    g.distance = [base](const Z2Elem<E>& a, const Z2Elem<E>& b) {
        return std::max(base.distance(a.g, b.g), a.m == b.m ? 0.0 : 1.0);
    };
    g.show = [base](const Z2Elem<E>& a) {
        std::ostringstream os;
        os << "(" << base.show(a.g) << ", " << a.m << "+2Z)";
        return os.str();
    };
    g.sample = [base](Rng& rng) {
        return Z2Elem<E>{base.sample(rng), static_cast<int>(rng.uniform_int(0, 1))};
    };
    return g;
}

// xi(n) = (-1)^n, the sign character of Z.
inline int xi(long n) { return (((n % 2) + 2) % 2 == 0) ? 1 : -1; }

// iota_G(g, m+2Z) = (g, g^{-1}, xi(m)): the injection
// G x|_Inv Z/2Z -> (G x G) x|_Sw Z^x for abelian G.
template <class E>
SwElem<E> iota_G(const GroupOps<E>& base, const Z2Elem<E>& x) {
    return SwElem<E>{x.g, base.inv(x.g), xi(x.m)};
}

// gamma: O(2) -> SO(2) x|_Inv Z/2Z,
//   g |-> ( Inv^e( g J^e ), e+2Z )  with  e = (1 - det g)/2  and J = diag(1,-1).
// Inversion of an orthogonal matrix is its transpose, so this stays exact on
// rational inputs.
template <class T>
Z2Elem<Matrix<T>> gamma_o2(const Matrix<T>& g, double eps = kWellFormedEps) {
    require_orthogonal(g, eps, "gamma_o2");
    if (g.rows() != 2) throw std::invalid_argument("gamma_o2: need a 2x2 matrix");
    bool reflection = to_double<T>(det(g)) < 0.0;
    if (!reflection) return Z2Elem<Matrix<T>>{g, 0};
    return Z2Elem<Matrix<T>>{(g * j_reflection<T>()).transpose(), 1};
}

// delta: SO(2) x|_Inv Z/2Z -> O(2), (g, a+2Z) |-> J^a g. Inverse of gamma.
template <class T>
Matrix<T> delta_o2(const Z2Elem<Matrix<T>>& x) {
    if (x.m == 0) return x.g;
    return j_reflection<T>() * x.g;
}

} // namespace sq
