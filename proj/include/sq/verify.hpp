#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sq/embeddings.hpp"
#include "sq/report.hpp"

namespace sq {

// Equality/distance/printing for a codomain value, detached from any quandle
// structure; the diagram checkers compare group elements and matrices with
// uniform residual semantics (entrywise max-abs, sign/residue by equality).
template <class C>
struct ValueOps {
    std::function<bool(const C&, const C&)> equal;
    std::function<double(const C&, const C&)> distance;
    std::function<std::string(const C&)> show;
};

template <class C>
ValueOps<C> value_ops(const Quandle<C>& q) {
    return {q.equal, q.distance, q.show};
}

template <class C>
ValueOps<C> value_ops(const GroupOps<C>& g) {
    return {g.equal, g.distance, g.show};
}

// ---------------------------------------------------------------------------
// Generic two-path agreement: lhs(x) = rhs(x) over a sampled domain.
// Diagram checks are instances of this; negative controls corrupt one path.
// ---------------------------------------------------------------------------
template <class Dom, class Cod>
VerificationReport check_commute(const std::string& name,
                                 const std::function<Dom(Rng&)>& sampler,
                                 const std::function<std::string(const Dom&)>& show_dom,
                                 const std::function<Cod(const Dom&)>& lhs,
                                 const std::function<Cod(const Dom&)>& rhs,
                                 const ValueOps<Cod>& ops, const CheckConfig& cfg) {
    VerificationReport rep(name, cfg);
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        Dom x = sampler(rng);
        Cod a = lhs(x);
        Cod b = rhs(x);
        rep.add(ops.distance(a, b), ops.equal(a, b),
                [&] { return show_dom(x) + " -> " + ops.show(a) + " vs " + ops.show(b); });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quandle homomorphism check: f(x |> y) = f(x) |> f(y).
// ---------------------------------------------------------------------------
template <class Dom, class Cod>
VerificationReport check_hom(const EmbeddingMap<Dom, Cod>& f, const CheckConfig& cfg) {
    VerificationReport rep("hom " + f.name, cfg);
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        Dom x = f.domain.sample(rng);
        Dom y = f.domain.sample(rng);
        Cod lhs = f.eval(f.domain.op(x, y));
        Cod rhs = f.codomain.op(f.eval(x), f.eval(y));
        rep.add(f.codomain.distance(lhs, rhs), f.codomain.equal(lhs, rhs), [&] {
            return "x=" + f.domain.show(x) + " y=" + f.domain.show(y);
        });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Injectivity on a sample: distinct inputs must map to distinct outputs.
// Float mode requires inputs separated by more than 10*eps to land at
// outputs separated by more than eps. `extra` points are prepended (used to
// plant antipodal pairs).
// ---------------------------------------------------------------------------
template <class Dom, class Cod>
VerificationReport check_injective(const EmbeddingMap<Dom, Cod>& f, const CheckConfig& cfg,
                                   const std::vector<Dom>& extra = {}) {
    VerificationReport rep("injective " + f.name, cfg);
    Rng rng(cfg.seed);
    std::vector<Dom> xs = extra;
    xs.reserve(xs.size() + static_cast<std::size_t>(cfg.samples));
    for (int s = 0; s < cfg.samples; ++s) xs.push_back(f.domain.sample(rng));
    std::vector<Cod> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) ys.push_back(f.eval(x));

    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            bool collision;
            if (cfg.mode == Mode::Exact)
                collision = !f.domain.equal(xs[i], xs[j]) && f.codomain.equal(ys[i], ys[j]);
            else
                collision = f.domain.distance(xs[i], xs[j]) > 10.0 * cfg.eps &&
                            f.codomain.distance(ys[i], ys[j]) <= cfg.eps;
            if (collision)
                rep.fail("collision: x=" + f.domain.show(xs[i]) + " y=" +
                         f.domain.show(xs[j]));
        }
    return rep;
}

// inn is deliberately two-to-one: S_x = S_{-x}. This check passes when the
// antipodal collision is present for every sample.
template <class T>
VerificationReport check_inn_collision(int n, const CheckConfig& cfg) {
    VerificationReport rep("inn antipodal collision (n=" + std::to_string(n) + ")", cfg);
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        Vector<T> x = sample_sphere<T>(rng, n);
        Matrix<T> a = inn_map(x);
        Matrix<T> b = inn_map(-x);
        rep.add(mat_distance(a, b), a == b, [&] { return "x=" + x.show(); });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Diagram 6.3 (the SO(2) comparison): both squares relating iota_1, the
// circle isomorphism onto Core(SO(2)), and the Akita and Bergman embeddings.
//   square 1:  gamma(iota_1(p)) = fA2(I1(p))      in SO(2) x| Z/2Z
//   square 2:  iota_G(fA2(g))   = fB(g)           in (SO(2) x SO(2)) x| Zx
// ---------------------------------------------------------------------------
template <class T>
VerificationReport check_diagram_63(const CheckConfig& cfg) {
    VerificationReport rep("diagram 6.3", cfg);
    Rng rng(cfg.seed);
    auto so2 = so2_group<T>();
    auto inv = inversion_automorphism(so2);
    auto z2 = z2_semidirect(so2, inv);
    auto sw = sw_semidirect(so2);

    for (int s = 0; s < cfg.samples; ++s) {
        Vector<T> p = sample_sphere<T>(rng, 1);
        auto lhs1 = gamma_o2(iota_1(p));
        auto rhs1 = f_A_reduced(script_I1(p));
        rep.add(z2.distance(lhs1, rhs1), z2.equal(lhs1, rhs1),
                [&] { return "square1 p=" + p.show(); });

        Matrix<T> g = so2.sample(rng);
        auto lhs2 = iota_G(so2, f_A_reduced(g));
        auto rhs2 = f_B(so2, g);
        rep.add(sw.distance(lhs2, rhs2), sw.equal(lhs2, rhs2),
                [&] { return "square2 g=" + g.show(); });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Diagram 7.2 (the SU(2) comparison): f_B(Inv(I2(x))) = iota_3(x) on S^3,
// with x presented as e_1 p4(g,h). The base pair (I2, I2) is always included.
// ---------------------------------------------------------------------------
template <class T>
VerificationReport check_diagram_72(const CheckConfig& cfg) {
    VerificationReport rep("diagram 7.2", cfg);
    Rng rng(cfg.seed);
    auto su2 = su2_group<T>();
    auto sw = sw_semidirect(su2);

    auto run_pair = [&](const SU2<T>& g, const SU2<T>& h) {
        Vector<T> x = sphere_point_of_pair(g, h);
        auto lhs = iota_3(g, h);
        auto rhs = f_B(su2, su2_inv(script_I2(x)));
        rep.add(sw.distance(lhs, rhs), sw.equal(lhs, rhs),
                [&] { return "x=" + x.show(); });
    };

    run_pair(SU2<T>::identity(2), SU2<T>::identity(2)); // both sides H~3
    for (int s = 0; s < cfg.samples; ++s) run_pair(su2.sample(rng), su2.sample(rng));
    return rep;
}

// ---------------------------------------------------------------------------
// The covering square: pi_h(iota_n(x)) = i_n(pi(x)) on S^n, n in [2, 8].
// The base point e_1 (both sides h_n) is always included.
// ---------------------------------------------------------------------------
template <class T>
VerificationReport check_covering_square(int n, const CheckConfig& cfg) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("check_covering_square: n must be in [2, 8]");
    VerificationReport rep("covering square (n=" + std::to_string(n) + ")", cfg);
    Rng rng(cfg.seed);

    auto run_point = [&](const Vector<T>& x) {
        Matrix<T> lhs = pi_h(iota_n(x));
        Matrix<T> rhs = i_n(projectivize(x, cfg.eps));
        rep.add(mat_distance(lhs, rhs), lhs == rhs, [&] { return "x=" + x.show(); });
    };

    run_point(Vector<T>::basis(n + 1, 0));
    for (int s = 0; s < cfg.samples; ++s) {
        Vector<T> x = sample_sphere<T>(rng, n);
        run_point(x);
        // antipodes collapse on both sides
        Matrix<T> a = pi_h(iota_n(x));
        Matrix<T> b = pi_h(iota_n(-x));
        rep.add(mat_distance(a, b), a == b, [&] { return "antipode x=" + x.show(); });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The lifted right action x . u := x p(u) of versors on the sphere:
// compatibility with versor products, with the projection to P^n, and the
// anchored cases (identity versor, h~_n).
// ---------------------------------------------------------------------------
template <class T>
VerificationReport check_lifted_action(int n, const CheckConfig& cfg) {
    VerificationReport rep("lifted action (n=" + std::to_string(n) + ")", cfg);
    Rng rng(cfg.seed);

    std::vector<long> d(static_cast<std::size_t>(n) + 1, -1);
    d[0] = 1;
    Matrix<T> hn = Matrix<T>::diagonal(d);
    auto lift = h_tilde<T>(n);

    for (int s = 0; s < cfg.samples; ++s) {
        Vector<T> x = sample_sphere<T>(rng, n);
        auto u1 = sample_versor<T>(rng, n + 1, static_cast<int>(rng.uniform_int(0, 3)));
        auto u2 = sample_versor<T>(rng, n + 1, static_cast<int>(rng.uniform_int(0, 3)));

        Vector<T> idact = row_apply(x, covering_matrix(identity_versor<T>(n + 1)));
        rep.add(vec_distance(idact, x), idact == x,
                [&] { return "identity action x=" + x.show(); });

        Vector<T> stepwise =
            row_apply(row_apply(x, covering_matrix(u1)), covering_matrix(u2));
        Vector<T> combined = row_apply(x, covering_matrix(u1 * u2));
        rep.add(vec_distance(stepwise, combined), stepwise == combined,
                [&] { return "associativity x=" + x.show(); });

        // projection equivariance: pi(x . u) = pi(x) . p(u)
        Matrix<T> m = covering_matrix(u1);
        auto lhs = projectivize(row_apply(x, m), cfg.eps);
        auto rhs = projectivize(row_apply(projectivize(x, cfg.eps).rep, m), cfg.eps);
        rep.add(vec_distance(lhs.rep, rhs.rep), lhs.rep == rhs.rep,
                [&] { return "projection x=" + x.show(); });

        // the fixed lift acts as h_n
        Vector<T> via_lift = row_apply(x, covering_matrix(lift));
        Vector<T> via_hn = row_apply(x, hn);
        rep.add(vec_distance(via_lift, via_hn), via_lift == via_hn,
                [&] { return "h~_n action x=" + x.show(); });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Ker p4 = {(I2, I2), (-I2, -I2)}: both map to I4 and no sampled pair away
// from the kernel does. The p4 map is injectable for negative controls.
// ---------------------------------------------------------------------------
template <class T>
VerificationReport check_kernel_p4(
    const CheckConfig& cfg,
    std::function<Matrix<T>(const SU2<T>&, const SU2<T>&)> p4_fn = {}) {
    if (!p4_fn) p4_fn = [](const SU2<T>& g, const SU2<T>& h) { return p4(g, h); };
    VerificationReport rep("kernel p4", cfg);
    Rng rng(cfg.seed);
    auto su2 = su2_group<T>();
    auto id4 = Matrix<T>::identity(4);
    auto id2 = su2.identity();
    SU2<T> neg(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            neg.at(i, j) = Complex<T>(scalar_traits<T>::from_int(i == j ? -1 : 0),
                                      scalar_traits<T>::from_int(0));

    auto mk = p4_fn(id2, id2);
    rep.add(mat_distance(mk, id4), mk == id4, [] { return std::string("(I2, I2)"); });
    auto mn = p4_fn(neg, neg);
    rep.add(mat_distance(mn, id4), mn == id4, [] { return std::string("(-I2, -I2)"); });

    for (int s = 0; s < cfg.samples; ++s) {
        auto g = su2.sample(rng);
        auto h = su2.sample(rng);
        double d_kernel = std::min(std::max(su2.distance(g, id2), su2.distance(h, id2)),
                                   std::max(su2.distance(g, neg), su2.distance(h, neg)));
        if (d_kernel <= 10.0 * cfg.eps) continue; // too close to the kernel to judge
        if (mat_distance(p4_fn(g, h), id4) <= cfg.eps)
            rep.fail("non-kernel pair maps to I4: g=" + su2.show(g) + " h=" + su2.show(h));
    }
    return rep;
}

} // namespace sq
