// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here, not configurable.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sq/search.hpp"
#include "sq/verify.hpp"

using namespace sq;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, bool ok, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id,
                label.c_str(), seconds);
    if (!ok) ++g_failures;
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }
};

CheckConfig cfg_of(Mode mode, int samples, std::uint64_t seed) {
    CheckConfig c;
    c.mode = mode;
    c.eps = 1e-9;
    c.samples = samples;
    c.seed = seed;
    return c;
}

// ---------------------------------------------------------------------------
// 1. Quandle axioms: exhaustive on the finite families, sampled to 1e-9 on
//    S^n and P^n for n = 1..8. Must finish in 30 s.
// ---------------------------------------------------------------------------
void criterion_1() {
    Timer t;
    bool ok = true;

    for (int k = 1; k <= 12; ++k)
        ok = ok && check_axioms_finite(core_table(cyclic_group(k))).pass;
    ok = ok && check_axioms_finite(conj_table(quaternion_group())).pass;

    for (const auto& h : group_catalog(8))
        for (const auto& psi : automorphisms(h))
            ok = ok && check_axioms_finite(twisted_conj_table(h, psi)).pass;

    for (int n = 1; n <= 8; ++n) {
        auto rs = check_axioms(sphere_quandle<double>(n), cfg_of(Mode::Float, 10000, 100 + n));
        ok = ok && rs.pass && rs.max_residual < 1e-9;
        auto rp = check_axioms(projective_quandle<double>(n),
                               cfg_of(Mode::Float, 10000, 200 + n));
        ok = ok && rp.pass && rp.max_residual < 1e-9;
    }

    double secs = t.seconds();
    criterion(1, "quandle axioms (exhaustive finite + 1e4 samples on S^n, P^n, n<=8)",
              ok && secs < 30.0, secs);
}

// ---------------------------------------------------------------------------
// 2. iota_n is an injective quandle homomorphism for n = 1..6,
//    exact-rational residual 0 on >= 50 rational sphere points per n, with
//    versor parity even iff n is even. Must finish in 60 s.
// ---------------------------------------------------------------------------
void criterion_2() {
    Timer t;
    bool ok = true;

    {
        auto f = iota1_embedding<Rat>();
        auto hom = check_hom(f, cfg_of(Mode::Exact, 60, 301));
        auto inj = check_injective(f, cfg_of(Mode::Exact, 60, 302));
        ok = ok && hom.pass && hom.max_residual == 0.0 && inj.pass;
    }
    for (int n = 2; n <= 6; ++n) {
        auto f = iota_n_embedding<Rat>(n);
        auto hom = check_hom(f, cfg_of(Mode::Exact, 60, 300 + n));
        auto inj = check_injective(f, cfg_of(Mode::Exact, 60, 400 + n));
        ok = ok && hom.pass && hom.max_residual == 0.0 && inj.pass;

        Rng rng(500 + static_cast<std::uint64_t>(n));
        for (int s = 0; s < 50; ++s) {
            auto x = sample_sphere<Rat>(rng, n);
            ok = ok && iota_n(x).parity == n % 2;
        }
    }

    double secs = t.seconds();
    criterion(2, "iota_n hom+injective, exact, n=1..6, parity matches",
              ok && secs < 60.0, secs);
}

// ---------------------------------------------------------------------------
// 3. Covering structure: exact lift anchoring, degree-2 fiber, covering
//    homomorphism, covering square for n = 2..6, lifted action.
// ---------------------------------------------------------------------------
void criterion_3() {
    Timer t;
    bool ok = true;

    for (int n = 1; n <= 6; ++n) {
        std::vector<long> d(static_cast<std::size_t>(n) + 1, -1);
        d[0] = 1;
        auto hn = Matrix<Rat>::diagonal(d);
        ok = ok && covering_matrix(h_tilde<Rat>(n)) == hn;
        ok = ok && covering_matrix(h_tilde<Rat>(n).negated()) == hn;
    }

    // degree-2 fiber in Cl(4): u and -u collide, nothing else among 1e4 samples
    {
        Rng rng(601);
        const int n = 4;
        std::map<std::vector<long long>, std::size_t> seen;
        std::vector<Versor<double>> versors;
        for (int s = 0; s < 10000; ++s) {
            auto u = sample_versor<double>(rng, n, static_cast<int>(rng.uniform_int(1, 4)));
            auto m = covering_matrix(u);
            ok = ok && mat_distance(m, covering_matrix(u.negated())) < 1e-9;
            ok = ok && clifford_distance(u.element, u.negated().element) > 1e-9;

            std::vector<long long> key;
            key.reserve(16);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    key.push_back(std::llround(m.at(i, j) * 1e6));
            auto [it, inserted] = seen.emplace(std::move(key), versors.size());
            if (!inserted) {
                // a bucket collision must come from u' = +-u
                const auto& prev = versors[it->second];
                if (mat_distance(covering_matrix(prev), m) < 1e-9) {
                    bool same = clifford_distance(prev.element, u.element) < 1e-9 ||
                                clifford_distance(prev.element, u.negated().element) < 1e-9;
                    ok = ok && same;
                }
            }
            versors.push_back(std::move(u));
        }
    }

    // covering homomorphism on sampled pairs
    {
        Rng rng(602);
        for (int s = 0; s < 1000; ++s) {
            int n = 3 + static_cast<int>(rng.uniform_int(0, 2));
            auto u = sample_versor<double>(rng, n, static_cast<int>(rng.uniform_int(0, 3)));
            auto v = sample_versor<double>(rng, n, static_cast<int>(rng.uniform_int(0, 3)));
            ok = ok && mat_distance(covering_matrix(u * v),
                                    covering_matrix(u) * covering_matrix(v)) < 1e-9;
        }
    }

    for (int n = 2; n <= 6; ++n)
        ok = ok && check_covering_square<double>(n, cfg_of(Mode::Float, 1000, 603)).pass;

    ok = ok && check_lifted_action<double>(3, cfg_of(Mode::Float, 1000, 604)).pass;
    ok = ok && check_lifted_action<Rat>(2, cfg_of(Mode::Exact, 50, 605)).pass;

    criterion(3, "covering: lift anchored, degree-2 fiber, homomorphism, square, action",
              ok, t.seconds());
}

// ---------------------------------------------------------------------------
// 4. Core / twisted-conj(Inv) / Alexander(Inv) tables coincide entrywise for
//    every abelian catalog group; exact and exhaustive.
// ---------------------------------------------------------------------------
void criterion_4() {
    Timer t;
    bool ok = true;
    for (const auto& g : group_catalog(12)) {
        if (!is_abelian(g)) continue;
        const FiniteAutomorphism* inv = nullptr;
        auto auts = automorphisms(g);
        for (const auto& a : auts)
            if (a.is_inversion) inv = &a;
        if (!inv) {
            ok = false;
            continue;
        }
        auto core = core_table(g);
        ok = ok && twisted_conj_table(g, *inv).table == core.table;
        ok = ok && alexander_table(g, *inv).table == core.table;
    }
    criterion(4, "abelian coincidence of core, twisted-conj(Inv), Alexander(Inv)",
              ok, t.seconds());
}

// ---------------------------------------------------------------------------
// 5. Diagram 6.3: exact residual 0, float < 1e-9 on 1e3 samples;
//    gamma is a homomorphism in all four determinant cases and inverse to
//    delta both ways on 1e3 samples.
// ---------------------------------------------------------------------------
void criterion_5() {
    Timer t;
    bool ok = true;

    auto exact = check_diagram_63<Rat>(cfg_of(Mode::Exact, 200, 701));
    ok = ok && exact.pass && exact.max_residual == 0.0;
    auto fl = check_diagram_63<double>(cfg_of(Mode::Float, 1000, 702));
    ok = ok && fl.pass && fl.max_residual < 1e-9;

    {
        Rng rng(703);
        auto o2 = o2_group<double>();
        auto so2 = so2_group<double>();
        auto z2 = z2_semidirect(so2, inversion_automorphism(so2));
        int case_hits[4] = {0, 0, 0, 0};
        for (int s = 0; s < 1000; ++s) {
            auto g = o2.sample(rng);
            auto h = o2.sample(rng);
            int cg = to_double(det(g)) < 0 ? 1 : 0;
            int ch = to_double(det(h)) < 0 ? 1 : 0;
            ++case_hits[2 * cg + ch];
            ok = ok && z2.distance(gamma_o2(g * h), z2.mul(gamma_o2(g), gamma_o2(h))) < 1e-9;
            ok = ok && mat_distance(delta_o2(gamma_o2(g)), g) < 1e-9;
            auto x = z2.sample(rng);
            ok = ok && z2.distance(gamma_o2(delta_o2(x)), x) < 1e-9;
        }
        for (int c = 0; c < 4; ++c) ok = ok && case_hits[c] > 0;
        // bijectivity evidence: distinct inputs keep distinct images
        for (int s = 0; s < 200; ++s) {
            auto g = o2.sample(rng);
            auto h = o2.sample(rng);
            if (mat_distance(g, h) > 1e-8)
                ok = ok && z2.distance(gamma_o2(g), gamma_o2(h)) > 1e-9;
        }
    }

    criterion(5, "diagram 6.3 + gamma/delta isomorphism across all det cases",
              ok, t.seconds());
}

// ---------------------------------------------------------------------------
// 6. Diagram 7.2, kernel of p4, p4 homomorphism.
// ---------------------------------------------------------------------------
void criterion_6() {
    Timer t;
    bool ok = true;

    auto exact = check_diagram_72<Rat>(cfg_of(Mode::Exact, 100, 801));
    ok = ok && exact.pass && exact.max_residual == 0.0;
    auto fl = check_diagram_72<double>(cfg_of(Mode::Float, 1000, 802));
    ok = ok && fl.pass && fl.max_residual < 1e-9;

    // base point lands on H~3 on both sides, exactly
    {
        auto id2 = SU2<Rat>::identity(2);
        auto su2 = su2_group<Rat>();
        auto sw = sw_semidirect(su2);
        auto lhs = iota_3(id2, id2);
        auto rhs = f_B(su2, su2_inv(script_I2(Vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)})));
        ok = ok && sw.equal(lhs, h3_lift<Rat>()) && sw.equal(rhs, h3_lift<Rat>());
    }

    ok = ok && check_kernel_p4<double>(cfg_of(Mode::Float, 10000, 803)).pass;
    ok = ok && check_kernel_p4<Rat>(cfg_of(Mode::Exact, 200, 804)).pass;

    {
        Rng rng(805);
        auto su2 = su2_group<double>();
        for (int s = 0; s < 1000; ++s) {
            auto g1 = su2.sample(rng), g2 = su2.sample(rng);
            auto h1 = su2.sample(rng), h2 = su2.sample(rng);
            ok = ok && mat_distance(p4(g1 * g2, h1 * h2), p4(g1, h1) * p4(g2, h2)) < 1e-9;
        }
    }

    criterion(6, "diagram 7.2, Ker p4 = {(I,I),(-I,-I)}, p4 homomorphism",
              ok, t.seconds());
}

// ---------------------------------------------------------------------------
// 7. inn is not injective on S^n (antipodal witness); i_n is injective on
//    canonical projective classes, 1e3 samples, n <= 6.
// ---------------------------------------------------------------------------
void criterion_7() {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        Rng rng(900 + static_cast<std::uint64_t>(n));
        auto x = sample_sphere<double>(rng, n);
        auto rep = check_injective(inn_embedding<double>(n),
                                   cfg_of(Mode::Float, 200, 910 + n), {x, -x});
        bool witnessed = false;
        for (const auto& w : rep.witnesses)
            witnessed = witnessed || w.find("collision") != std::string::npos;
        ok = ok && !rep.pass && witnessed;

        auto inj = check_injective(i_n_embedding<double>(n),
                                   cfg_of(Mode::Float, 1000, 920 + n));
        ok = ok && inj.pass;
    }
    criterion(7, "inn non-injective with antipodal witness; i_n injective on P^n",
              ok, t.seconds());
}

// ---------------------------------------------------------------------------
// 8. Search: order <= 8 scan under 120 s, (G,G,Inv) match for every abelian
//    G, exhaustion-certified verdicts for Q8, D4, S3, and identical verdicts
//    with pruning disabled.
// ---------------------------------------------------------------------------
void criterion_8() {
    Timer t;
    bool ok = true;

    auto pruned = search_core_vs_twisted(8, true);
    for (const auto& s : pruned.summary)
        if (s.abelian) ok = ok && s.inv_self_match;

    std::map<std::string, int> verdict_count;
    for (const auto& r : pruned.records)
        if (r.group == "Q8" || r.group == "D4" || r.group == "S3")
            ++verdict_count[r.group];
    // every same-order (H, psi) pair must carry a verdict
    ok = ok && verdict_count["Q8"] == 212 && verdict_count["D4"] == 212 &&
         verdict_count["S3"] == 8;

    auto unpruned = search_core_vs_twisted(8, false);
    ok = ok && pruned.records.size() == unpruned.records.size();
    for (std::size_t i = 0; ok && i < pruned.records.size(); ++i) {
        const auto& a = pruned.records[i];
        const auto& b = unpruned.records[i];
        ok = a.group == b.group && a.other == b.other && a.psi == b.psi &&
             a.isomorphic == b.isomorphic;
    }

    double secs = t.seconds();
    criterion(8, "search order<=8: abelian Inv matches, certified exhaustions, "
                 "pruning-invariant verdicts",
              ok && secs < 120.0, secs);
}

// ---------------------------------------------------------------------------
// 9. Negative controls: every checker fails with a located witness on a
//    deliberately corrupted map or table.
// ---------------------------------------------------------------------------
void criterion_9() {
    Timer t;
    bool ok = true;
    auto failed_with_witness = [](const VerificationReport& r) {
        return !r.pass && !r.witnesses.empty();
    };

    // corrupted finite table
    {
        auto q = core_table(cyclic_group(5));
        std::swap(q.table[0][1], q.table[1][1]);
        ok = ok && failed_with_witness(check_axioms_finite(q));
    }
    // corrupted sampled quandle operation
    {
        auto q = sphere_quandle<double>(2);
        auto good = q.op;
        q.op = [good](const Vector<double>& x, const Vector<double>& y) {
            auto r = good(x, y);
            r[0] = -r[0];
            return r;
        };
        ok = ok && failed_with_witness(check_axioms(q, cfg_of(Mode::Float, 200, 1001)));
    }
    // corrupted homomorphism
    {
        auto f = iota1_embedding<double>();
        f.eval = [](const Vector<double>& p) {
            auto m = iota_1(p);
            m.at(1, 0) = -m.at(1, 0);
            return m;
        };
        ok = ok && failed_with_witness(check_hom(f, cfg_of(Mode::Float, 200, 1002)));
    }
    // constant map is not injective
    {
        auto f = I1_embedding<double>();
        f.eval = [](const Vector<double>&) { return Matrix<double>::identity(2); };
        ok = ok && failed_with_witness(check_injective(f, cfg_of(Mode::Float, 50, 1003)));
    }
    // corrupted 6.3-shaped square
    {
        auto so2 = so2_group<double>();
        auto z2 = z2_semidirect(so2, inversion_automorphism(so2));
        std::function<Vector<double>(Rng&)> sampler = [](Rng& rng) {
            return sample_sphere<double>(rng, 1);
        };
        std::function<std::string(const Vector<double>&)> show =
            [](const Vector<double>& p) { return p.show(); };
        std::function<Z2Elem<Matrix<double>>(const Vector<double>&)> lhs =
            [](const Vector<double>& p) { return gamma_o2(iota_1(p)); };
        std::function<Z2Elem<Matrix<double>>(const Vector<double>&)> rhs =
            [](const Vector<double>& p) {
                auto v = f_A_reduced(script_I1(p));
                v.m = 0; // corrupt the residue
                return v;
            };
        ok = ok && failed_with_witness(check_commute<Vector<double>, Z2Elem<Matrix<double>>>(
                       "6.3 corrupted", sampler, show, lhs, rhs, value_ops(z2),
                       cfg_of(Mode::Float, 100, 1004)));
    }
    // corrupted 7.2-shaped square
    {
        auto su2 = su2_group<double>();
        auto sw = sw_semidirect(su2);
        std::function<Vector<double>(Rng&)> sampler = [](Rng& rng) {
            return sample_sphere<double>(rng, 3);
        };
        std::function<std::string(const Vector<double>&)> show =
            [](const Vector<double>& x) { return x.show(); };
        std::function<SwElem<SU2<double>>(const Vector<double>&)> lhs =
            [](const Vector<double>& x) { return iota_3_point(x); };
        std::function<SwElem<SU2<double>>(const Vector<double>&)> rhs =
            [su2](const Vector<double>& x) {
                return f_B(su2, script_I2(x)); // missing the inversion
            };
        ok = ok && failed_with_witness(check_commute<Vector<double>, SwElem<SU2<double>>>(
                       "7.2 corrupted", sampler, show, lhs, rhs, value_ops(sw),
                       cfg_of(Mode::Float, 100, 1005)));
    }
    // corrupted covering square
    {
        auto o4 = orthogonal_group<double>(4);
        std::function<Vector<double>(Rng&)> sampler = [](Rng& rng) {
            return sample_sphere<double>(rng, 3);
        };
        std::function<std::string(const Vector<double>&)> show =
            [](const Vector<double>& x) { return x.show(); };
        std::function<Matrix<double>(const Vector<double>&)> lhs =
            [](const Vector<double>& x) { return pi_h(iota_n(x)); };
        std::function<Matrix<double>(const Vector<double>&)> rhs =
            [](const Vector<double>& x) {
                auto m = i_n(projectivize(x));
                m.at(0, 0) = -m.at(0, 0);
                return m;
            };
        ok = ok && failed_with_witness(check_commute<Vector<double>, Matrix<double>>(
                       "covering square corrupted", sampler, show, lhs, rhs,
                       value_ops(o4), cfg_of(Mode::Float, 100, 1006)));
    }
    // corrupted lifted action (transpose on one side)
    {
        auto o4 = orthogonal_group<double>(4);
        std::function<Vector<double>(Rng&)> sampler = [](Rng& rng) {
            return sample_sphere<double>(rng, 3);
        };
        std::function<std::string(const Vector<double>&)> show =
            [](const Vector<double>& x) { return x.show(); };
        Rng vr(1007);
        auto u = sample_versor<double>(vr, 4, 3);
        auto m = covering_matrix(u);
        std::function<Matrix<double>(const Vector<double>&)> lhs =
            [m](const Vector<double>&) { return m; };
        std::function<Matrix<double>(const Vector<double>&)> rhs =
            [m](const Vector<double>&) { return m.transpose(); };
        ok = ok && failed_with_witness(check_commute<Vector<double>, Matrix<double>>(
                       "lifted action corrupted", sampler, show, lhs, rhs,
                       value_ops(o4), cfg_of(Mode::Float, 20, 1008)));
    }
    // corrupted p4 in the kernel check
    {
        auto rep = check_kernel_p4<double>(
            cfg_of(Mode::Float, 100, 1009),
            [](const SU2<double>& g, const SU2<double>& h) {
                auto m = p4(g, h);
                m.at(3, 3) = -m.at(3, 3);
                return m;
            });
        ok = ok && failed_with_witness(rep);
    }

    criterion(9, "negative controls: corrupted inputs fail with located witnesses",
              ok, t.seconds());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
