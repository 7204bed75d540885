#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "sq/clifford.hpp"
#include "sq/groups.hpp"
#include "sq/quandle.hpp"

namespace sq {

// A named quandle homomorphism candidate bundled with its domain and
// codomain quandles, ready for the generic hom/injectivity checkers.
template <class Dom, class Cod>
struct EmbeddingMap {
    std::string name;
    Quandle<Dom> domain;
    Quandle<Cod> codomain;
    std::function<Cod(const Dom&)> eval;
};

// ---------------------------------------------------------------------------
// iota_1: S^1 -> O(2), (cos t, sin t) |-> ( cos t  -sin t ; -sin t  -cos t ).
// ---------------------------------------------------------------------------
template <class T>
Matrix<T> iota_1(const Vector<T>& p, double eps = kWellFormedEps) {
    if (p.dim() != 2) throw std::invalid_argument("iota_1: need a 2-vector");
    require_unit(p, eps, "iota_1");
    Matrix<T> m(2, 2);
    m.at(0, 0) = p[0];
    m.at(0, 1) = -p[1];
    m.at(1, 0) = -p[1];
    m.at(1, 1) = -p[0];
    return m;
}

// ---------------------------------------------------------------------------
// inn: S^n -> O(n+1). The image of x is the point reflection 2 x^t x - I,
// the matrix of S_x; it equals g^{-1} h_n g for any g with e_1 g = x, and is
// insensitive to the sign of x (inn is two-to-one).
// ---------------------------------------------------------------------------
template <class T>
Matrix<T> inn_map(const Vector<T>& x, double eps = kWellFormedEps) {
    require_unit(x, eps, "inn_map");
    const int d = x.dim();
    Matrix<T> m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            T v = scalar_traits<T>::from_int(2) * x[i] * x[j];
            if (i == j) v -= scalar_traits<T>::from_int(1);
            m.at(i, j) = v;
        }
    return m;
}

// i_n: P^n -> Conj(h_n), the isomorphism induced by inn on projective classes.
template <class T>
Matrix<T> i_n(const ProjPoint<T>& c, double eps = kWellFormedEps) {
    return inn_map(c.rep, eps);
}

// ---------------------------------------------------------------------------
// iota_n: S^n -> Pin+(n+1), realized by the closed form
//     iota_n(x) = (-1)^n * omega * x^   in Cl(n+1),
// where omega is the volume element and x^ the vector embedding of x. The
// sign normalizes the base point: iota_n(e_1) = h~_n. Correctness of the
// closed form rests on the base-point anchor, the covering square, and the
// homomorphism identity, all exercised by the test suite.
// ---------------------------------------------------------------------------
template <class T>
Versor<T> iota_n(const Vector<T>& x, double eps = kWellFormedEps) {
    const int n = x.dim() - 1;
    if (n < 2) throw std::invalid_argument("iota_n: need n >= 2 (use iota_1 for n = 1)");
    require_unit(x, eps, "iota_n");
    Clifford<T> el = Clifford<T>::volume_element(n + 1) * Clifford<T>::from_vector(x);
    int factors = n + 2; // n+1 from omega, 1 from x
    if (n % 2 == 1) {
        el = -el; // -1 is a product of two unit vectors
        factors += 2;
    }
    return Versor<T>(std::move(el), factors % 2, factors);
}

// pi_h: Conj(h~_n) -> Conj(h_n), the restriction of the double cover.
template <class T>
Matrix<T> pi_h(const Versor<T>& u, double eps = kWellFormedEps) {
    return covering_matrix(u, eps);
}

// ---------------------------------------------------------------------------
// Bergman and Akita embeddings.
// ---------------------------------------------------------------------------
template <class E>
SwElem<E> f_B(const GroupOps<E>& base, const E& g) {
    return SwElem<E>{g, base.inv(g), -1};
}

template <class E>
ZElem<E> f_A(const E& g) {
    return ZElem<E>{g, 1};
}

// f_A composed with id x proj: lands in G x|_psi Z/2Z.
template <class E>
Z2Elem<E> f_A_reduced(const E& g) {
    return Z2Elem<E>{g, 1};
}

// ---------------------------------------------------------------------------
// Script maps: the circle onto Core(SO(2)) and the 3-sphere onto Core(SU(2)).
// ---------------------------------------------------------------------------
template <class T>
Matrix<T> script_I1(const Vector<T>& p, double eps = kWellFormedEps) {
    if (p.dim() != 2) throw std::invalid_argument("script_I1: need a 2-vector");
    require_unit(p, eps, "script_I1");
    return rot_from_circle_point(p);
}

template <class T>
SU2<T> script_I2(const Vector<T>& p, double eps = kWellFormedEps) {
    return su2_from_point(p, eps);
}

// ---------------------------------------------------------------------------
// p4: SU(2) x SU(2) -> SO(4), written out on the coordinates
// (x1,x2,x3,x4) of g and (y1,y2,y3,y4) of h.
// ---------------------------------------------------------------------------
template <class T>
Matrix<T> p4(const SU2<T>& g, const SU2<T>& h) {
    Vector<T> x = su2_coords(g);
    Vector<T> y = su2_coords(h);
    const T& x1 = x[0]; const T& x2 = x[1]; const T& x3 = x[2]; const T& x4 = x[3];
    const T& y1 = y[0]; const T& y2 = y[1]; const T& y3 = y[2]; const T& y4 = y[3];
    Matrix<T> m(4, 4);
    m.at(0, 0) =  x1 * y1 + x2 * y2 + x3 * y3 + x4 * y4;
    m.at(0, 1) =  x1 * y2 - x2 * y1 - x3 * y4 + x4 * y3;
    m.at(0, 2) =  x1 * y3 + x2 * y4 - x3 * y1 - x4 * y2;
    m.at(0, 3) =  x1 * y4 - x2 * y3 + x3 * y2 - x4 * y1;
    m.at(1, 0) = -x1 * y2 + x2 * y1 - x3 * y4 + x4 * y3;
    m.at(1, 1) =  x1 * y1 + x2 * y2 - x3 * y3 - x4 * y4;
    m.at(1, 2) = -x1 * y4 + x2 * y3 + x3 * y2 - x4 * y1;
    m.at(1, 3) =  x1 * y3 + x2 * y4 + x3 * y1 + x4 * y2;
    m.at(2, 0) = -x1 * y3 + x2 * y4 + x3 * y1 - x4 * y2;
    m.at(2, 1) =  x1 * y4 + x2 * y3 + x3 * y2 + x4 * y1;
    m.at(2, 2) =  x1 * y1 - x2 * y2 + x3 * y3 - x4 * y4;
    m.at(2, 3) = -x1 * y2 - x2 * y1 + x3 * y4 + x4 * y3;
    m.at(3, 0) = -x1 * y4 - x2 * y3 + x3 * y2 + x4 * y1;
    m.at(3, 1) = -x1 * y3 + x2 * y4 - x3 * y1 + x4 * y2;
    m.at(3, 2) =  x1 * y2 + x2 * y1 + x3 * y4 + x4 * y3;
    m.at(3, 3) =  x1 * y1 - x2 * y2 - x3 * y3 + x4 * y4;
    return m;
}

// e_1 * p4(g,h): the sphere point presented by the pair (g,h).
template <class T>
Vector<T> sphere_point_of_pair(const SU2<T>& g, const SU2<T>& h) {
    Matrix<T> m = p4(g, h);
    return Vector<T>{m.at(0, 0), m.at(0, 1), m.at(0, 2), m.at(0, 3)};
}

// The cover Pin+(4) = (SU(2) x SU(2)) x|_Sw Z^x -> O(4): the Sw sign +1
// corresponds to an even power of h_3 = diag(1,-1,-1,-1). Conjugation by h_3
// swaps the p4 arguments, so with Sw twisting the left factor of a product
// the odd component must carry h_3 on the left; that choice makes the cover
// a homomorphism and matches inn on the sphere.
template <class T>
Matrix<T> pin4_cover(const SwElem<SU2<T>>& u) {
    Matrix<T> m = p4(u.g, u.h);
    if (u.sign == -1) m = Matrix<T>::diagonal({1, -1, -1, -1}) * m;
    return m;
}

// H~3 = (I2, I2, -1), the fixed lift of h_3 in Pin+(4).
template <class T>
SwElem<SU2<T>> h3_lift() {
    return SwElem<SU2<T>>{SU2<T>::identity(2), SU2<T>::identity(2), -1};
}

// iota_3 on the pair presentation x = e_1 p4(g,h):
//   (g,h,+1)^{-1} H~3 (g,h,+1) = (h^{-1} g, g^{-1} h, -1).
template <class T>
SwElem<SU2<T>> iota_3(const SU2<T>& g, const SU2<T>& h) {
    return SwElem<SU2<T>>{su2_inv(h) * g, su2_inv(g) * h, -1};
}

// Every sphere point is presented by (I2, I2(x)): e_1 p4(I2, h) recovers the
// coordinates of h, so the helper below evaluates iota_3 on raw coordinates.
template <class T>
SwElem<SU2<T>> iota_3_point(const Vector<T>& x, double eps = kWellFormedEps) {
    return iota_3(SU2<T>::identity(2), script_I2(x, eps));
}

// ---------------------------------------------------------------------------
// Versors in Cl(n) as a group (Pin+(n)); conjugation target of iota_n.
// ---------------------------------------------------------------------------
template <class T>
GroupOps<Versor<T>> versor_group(int n) {
    GroupOps<Versor<T>> g;
    g.name = "Pin+(" + std::to_string(n) + ")";
    g.identity = [n] { return identity_versor<T>(n); };
    g.mul = [](const Versor<T>& a, const Versor<T>& b) { return a * b; };
    g.inv = [](const Versor<T>& a) { return a.inverse(); };
    g.equal = [](const Versor<T>& a, const Versor<T>& b) { return a.element == b.element; };
    g.distance = [](const Versor<T>& a, const Versor<T>& b) {
        return clifford_distance(a.element, b.element);
    };
    g.show = [](const Versor<T>& a) { return a.element.show(); };
    g.sample = [n](Rng& rng) {
        return sample_versor<T>(rng, n, static_cast<int>(rng.uniform_int(0, 4)));
    };
    return g;
}

// ---------------------------------------------------------------------------
// Fully wired embedding instances.
// ---------------------------------------------------------------------------
template <class T>
EmbeddingMap<Vector<T>, Matrix<T>> iota1_embedding() {
    return {"iota1", sphere_quandle<T>(1), conj_quandle(o2_group<T>()),
            [](const Vector<T>& p) { return iota_1(p); }};
}

template <class T>
EmbeddingMap<Vector<T>, Matrix<T>> inn_embedding(int n) {
    return {"inn(n=" + std::to_string(n) + ")", sphere_quandle<T>(n),
            conj_quandle(orthogonal_group<T>(n + 1)),
            [](const Vector<T>& x) { return inn_map(x); }};
}

template <class T>
EmbeddingMap<ProjPoint<T>, Matrix<T>> i_n_embedding(int n, double eps = 1e-9) {
    return {"i_n(n=" + std::to_string(n) + ")", projective_quandle<T>(n, eps),
            conj_quandle(orthogonal_group<T>(n + 1)),
            [](const ProjPoint<T>& c) { return i_n(c); }};
}

template <class T>
EmbeddingMap<Vector<T>, Versor<T>> iota_n_embedding(int n) {
    return {"iota_n(n=" + std::to_string(n) + ")", sphere_quandle<T>(n),
            conj_quandle(versor_group<T>(n + 1)),
            [](const Vector<T>& x) { return iota_n(x); }};
}

template <class E>
EmbeddingMap<E, SwElem<E>> fB_embedding(const GroupOps<E>& base) {
    return {"fB(" + base.name + ")", core_quandle(base),
            conj_quandle(sw_semidirect(base)),
            [base](const E& g) { return f_B(base, g); }};
}

template <class E>
EmbeddingMap<E, ZElem<E>> fA_embedding(const GroupOps<E>& base, const Automorphism<E>& psi) {
    return {"fA(" + base.name + "," + psi.name + ")", twisted_conj_quandle(base, psi),
            conj_quandle(z_semidirect(base, psi)),
            [](const E& g) { return f_A(g); }};
}

template <class E>
EmbeddingMap<E, Z2Elem<E>> fA_reduced_embedding(const GroupOps<E>& base,
                                                const Automorphism<E>& psi) {
    return {"fA2(" + base.name + "," + psi.name + ")", twisted_conj_quandle(base, psi),
            conj_quandle(z2_semidirect(base, psi)),
            [](const E& g) { return f_A_reduced(g); }};
}

template <class T>
EmbeddingMap<Vector<T>, Matrix<T>> I1_embedding() {
    return {"I1", sphere_quandle<T>(1), core_quandle(so2_group<T>()),
            [](const Vector<T>& p) { return script_I1(p); }};
}

template <class T>
EmbeddingMap<Vector<T>, SU2<T>> I2_embedding() {
    return {"I2", sphere_quandle<T>(3), core_quandle(su2_group<T>()),
            [](const Vector<T>& p) { return script_I2(p); }};
}

template <class T>
EmbeddingMap<Vector<T>, SwElem<SU2<T>>> iota3_embedding() {
    return {"iota3", sphere_quandle<T>(3), conj_quandle(sw_semidirect(su2_group<T>())),
            [](const Vector<T>& x) { return iota_3_point(x); }};
}

} // namespace sq
