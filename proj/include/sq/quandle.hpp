#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sq/groups.hpp"
#include "sq/numerics.hpp"
#include "sq/report.hpp"
#include "sq/rng.hpp"

namespace sq {

// ---------------------------------------------------------------------------
// Generic quandle interface over a carrier type E: the operation, its right
// inverse x |-> x <|^{-1} y, equality/distance, and a seeded sampler.
// ---------------------------------------------------------------------------
template <class E>
struct Quandle {
    std::string name;
    Mode mode = Mode::Float;
    std::function<E(const E&, const E&)> op;
    std::function<E(const E&, const E&)> op_inv;
    std::function<bool(const E&, const E&)> equal;
    std::function<double(const E&, const E&)> distance;
    std::function<std::string(const E&)> show;
    std::function<E(Rng&)> sample;
};

// ---------------------------------------------------------------------------
// Spherical quandle: x |> y = 2<x,y> y - x on S^n.
// ---------------------------------------------------------------------------
template <class T>
void require_unit(const Vector<T>& v, double eps, const char* who) {
    T norm2 = inner_product(v, v);
    if constexpr (scalar_traits<T>::is_exact) {
        if (!(norm2 == scalar_traits<T>::from_int(1)))
            throw std::invalid_argument(std::string(who) + ": not a unit vector");
    } else {
        if (std::fabs(to_double<T>(norm2) - 1.0) > eps)
            throw std::invalid_argument(std::string(who) + ": not a unit vector");
    }
}

template <class T>
Vector<T> sphere_op(const Vector<T>& x, const Vector<T>& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("sphere_op: dimension mismatch");
    T two_dot = inner_product(x, y) * scalar_traits<T>::from_int(2);
    return y.scaled(two_dot) - x;
}

template <class T>
Quandle<Vector<T>> sphere_quandle(int n) {
    if (n < 1) throw std::invalid_argument("sphere_quandle: n must be positive");
    Quandle<Vector<T>> q;
    q.name = "S^" + std::to_string(n);
    q.mode = scalar_traits<T>::is_exact ? Mode::Exact : Mode::Float;
    q.op = [](const Vector<T>& x, const Vector<T>& y) { return sphere_op(x, y); };
    // The spherical quandle is involutory: S_y is its own inverse.
    q.op_inv = q.op;
    q.equal = [](const Vector<T>& a, const Vector<T>& b) { return a == b; };
    q.distance = [](const Vector<T>& a, const Vector<T>& b) { return vec_distance(a, b); };
    q.show = [](const Vector<T>& v) { return v.show(); };
    q.sample = [n](Rng& rng) {
        Vector<T> v = sample_sphere<T>(rng, n);
        require_unit(v, kWellFormedEps, "sphere sample");
        return v;
    };
    return q;
}

// ---------------------------------------------------------------------------
// Projective quandle P^n = S^n / {x ~ -x}. Classes are held by a canonical
// representative whose first nonzero coordinate is positive; float mode
// treats |c| <= eps as zero when canonicalizing.
// ---------------------------------------------------------------------------
template <class T>
struct ProjPoint {
    Vector<T> rep;
};

template <class T>
ProjPoint<T> projectivize(const Vector<T>& v, double eps = 1e-9) {
    for (int i = 0; i < v.dim(); ++i) {
        double c = to_double<T>(v[i]);
        bool zero = scalar_traits<T>::is_exact ? (v[i] == scalar_traits<T>::from_int(0))
                                               : (std::fabs(c) <= eps);
        if (zero) continue;
        return {c > 0 ? v : -v};
    }
    throw std::invalid_argument("projectivize: zero vector");
}

template <class T>
ProjPoint<T> projective_op(const ProjPoint<T>& x, const ProjPoint<T>& y, double eps = 1e-9) {
    return projectivize(sphere_op(x.rep, y.rep), eps);
}

template <class T>
Quandle<ProjPoint<T>> projective_quandle(int n, double eps = 1e-9) {
    if (n < 1) throw std::invalid_argument("projective_quandle: n must be positive");
    Quandle<ProjPoint<T>> q;
    q.name = "P^" + std::to_string(n);
    q.mode = scalar_traits<T>::is_exact ? Mode::Exact : Mode::Float;
    q.op = [eps](const ProjPoint<T>& x, const ProjPoint<T>& y) {
        return projective_op(x, y, eps);
    };
    q.op_inv = q.op;
    q.equal = [](const ProjPoint<T>& a, const ProjPoint<T>& b) { return a.rep == b.rep; };
    q.distance = [](const ProjPoint<T>& a, const ProjPoint<T>& b) {
        return vec_distance(a.rep, b.rep);
    };
    q.show = [](const ProjPoint<T>& p) { return "[" + p.rep.show() + "]"; };
    q.sample = [n, eps](Rng& rng) { return projectivize(sample_sphere<T>(rng, n), eps); };
    return q;
}

// ---------------------------------------------------------------------------
// Quandles on groups: conjugation, core, twisted conjugation, generalized
// Alexander.
// ---------------------------------------------------------------------------
template <class E>
E conj_op(const GroupOps<E>& g, const E& x, const E& y) {
    return g.mul(g.mul(g.inv(y), x), y); // y^{-1} x y
}

template <class E>
E core_op(const GroupOps<E>& g, const E& x, const E& y) {
    return g.mul(g.mul(y, g.inv(x)), y); // y x^{-1} y
}

template <class E>
E twisted_conj_op(const GroupOps<E>& g, const Automorphism<E>& psi, const E& x, const E& y) {
    return g.mul(psi.apply(g.mul(g.inv(y), x)), y); // psi(y^{-1} x) y
}

template <class E>
E alexander_op(const GroupOps<E>& g, const Automorphism<E>& psi, const E& x, const E& y) {
    return g.mul(psi.apply(g.mul(x, g.inv(y))), y); // psi(x y^{-1}) y
}

template <class E>
Quandle<E> conj_quandle(const GroupOps<E>& g) {
    Quandle<E> q;
    q.name = "Conj(" + g.name + ")";
    q.op = [g](const E& x, const E& y) { return conj_op(g, x, y); };
    q.op_inv = [g](const E& x, const E& y) { return g.mul(g.mul(y, x), g.inv(y)); };
    q.equal = g.equal;
    q.distance = g.distance;
    q.show = g.show;
    q.sample = g.sample;
    return q;
}

template <class E>
Quandle<E> core_quandle(const GroupOps<E>& g) {
    Quandle<E> q;
    q.name = "Core(" + g.name + ")";
    q.op = [g](const E& x, const E& y) { return core_op(g, x, y); };
    q.op_inv = q.op; // core quandles are involutory
    q.equal = g.equal;
    q.distance = g.distance;
    q.show = g.show;
    q.sample = g.sample;
    return q;
}

template <class E>
Quandle<E> twisted_conj_quandle(const GroupOps<E>& g, const Automorphism<E>& psi) {
    Quandle<E> q;
    q.name = "Conj(" + g.name + "," + psi.name + ")";
    q.op = [g, psi](const E& x, const E& y) { return twisted_conj_op(g, psi, x, y); };
    // Solve psi(y^{-1} x') y = x for x': x' = y psi^{-1}(x y^{-1}).
    q.op_inv = [g, psi](const E& x, const E& y) {
        return g.mul(y, psi.apply_inv(g.mul(x, g.inv(y))));
    };
    q.equal = g.equal;
    q.distance = g.distance;
    q.show = g.show;
    q.sample = g.sample;
    return q;
}

template <class E>
Quandle<E> alexander_quandle(const GroupOps<E>& g, const Automorphism<E>& psi) {
    Quandle<E> q;
    q.name = "Alex(" + g.name + "," + psi.name + ")";
    q.op = [g, psi](const E& x, const E& y) { return alexander_op(g, psi, x, y); };
    // Solve psi(x' y^{-1}) y = x for x': x' = psi^{-1}(x y^{-1}) y.
    q.op_inv = [g, psi](const E& x, const E& y) {
        return g.mul(psi.apply_inv(g.mul(x, g.inv(y))), y);
    };
    q.equal = g.equal;
    q.distance = g.distance;
    q.show = g.show;
    q.sample = g.sample;
    return q;
}

// ---------------------------------------------------------------------------
// Finite quandles: carrier {0..k-1} with an explicit operation table,
// table[x][y] = x |> y.
// ---------------------------------------------------------------------------
struct FiniteQuandle {
    std::string name;
    int size = 0;
    std::vector<std::vector<int>> table;

    int op(int x, int y) const { return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
};

// The inner generator S_y as a permutation: S_y(x) = x |> y (column y).
std::vector<std::vector<int>> inner_group_generators(const FiniteQuandle& q);

// Closure of the generators under composition; capped defensively.
std::set<std::vector<int>> inner_group_closure(const FiniteQuandle& q,
                                               std::size_t cap = 200000);

bool is_algebraically_connected(const FiniteQuandle& q);
bool is_faithful(const FiniteQuandle& q);

// Exhaustive Q1/Q2/Q3 with located witnesses.
VerificationReport check_axioms_finite(const FiniteQuandle& q);

// Plain-text serialization: k, then the k x k table row-major.
void write_finite_quandle(std::ostream& os, const FiniteQuandle& q);
FiniteQuandle read_finite_quandle(std::istream& is, const std::string& name = "loaded");

// Adapter so finite quandles can flow through the generic machinery.
Quandle<int> finite_as_quandle(const FiniteQuandle& q);

// ---------------------------------------------------------------------------
// Sampled axiom check for infinite carriers. Each iteration draws (x, y, z)
// and tests idempotence, both op_inv round trips, and distributivity.
// ---------------------------------------------------------------------------
template <class E>
VerificationReport check_axioms(const Quandle<E>& q, const CheckConfig& cfg) {
    VerificationReport rep("axioms " + q.name, cfg);
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        E x = q.sample(rng);
        E y = q.sample(rng);
        E z = q.sample(rng);

        E q1 = q.op(x, x);
        rep.add(q.distance(q1, x), q.equal(q1, x),
                [&] { return "Q1 x=" + q.show(x); });

        E r1 = q.op_inv(q.op(x, y), y);
        rep.add(q.distance(r1, x), q.equal(r1, x),
                [&] { return "Q2a x=" + q.show(x) + " y=" + q.show(y); });
        E r2 = q.op(q.op_inv(x, y), y);
        rep.add(q.distance(r2, x), q.equal(r2, x),
                [&] { return "Q2b x=" + q.show(x) + " y=" + q.show(y); });

        E lhs = q.op(q.op(x, y), z);
        E rhs = q.op(q.op(x, z), q.op(y, z));
        rep.add(q.distance(lhs, rhs), q.equal(lhs, rhs), [&] {
            return "Q3 x=" + q.show(x) + " y=" + q.show(y) + " z=" + q.show(z);
        });
    }
    return rep;
}

} // namespace sq
