#include <doctest.h>

#include <cmath>

#include "sq/numerics.hpp"
#include "sq/rng.hpp"

using namespace sq;

namespace {

// Independent determinant oracle: Laplace expansion along the first row.
template <class T>
T det_laplace(const Matrix<T>& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    T acc = scalar_traits<T>::from_int(0);
    for (int j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        T term = m.at(0, j) * det_laplace(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Matrix<Rat> random_rat_matrix(Rng& rng, int n) {
    Matrix<Rat> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Rat(rng.uniform_int(-6, 6), rng.uniform_int(1, 4));
    return m;
}

} // namespace

TEST_CASE("inner product basics") {
    Vector<Rat> e1{Rat(1), Rat(0)};
    Vector<Rat> e2{Rat(0), Rat(1)};
    Vector<Rat> p{Rat(3, 5), Rat(4, 5)};
    CHECK(inner_product(e1, e2) == 0);
    CHECK(inner_product(p, p) == 1);
    CHECK(inner_product(p, e1) == Rat(3, 5));
    CHECK_THROWS_AS(inner_product(e1, Vector<Rat>{Rat(1)}), std::invalid_argument);
}

TEST_CASE("degenerate shapes rejected") {
    CHECK_THROWS_AS(Vector<double>(0), std::invalid_argument);
    CHECK_THROWS_AS(Matrix<double>(0, 2), std::invalid_argument);
}

TEST_CASE("matrix product and involutions") {
    auto id = Matrix<Rat>::identity(3);
    CHECK(id * id == id);
    auto h1 = Matrix<Rat>::diagonal({1, -1});
    CHECK(h1 * h1 == Matrix<Rat>::identity(2));

    // rot(pi/3) * rot(-pi/3) = I in float mode
    double t = M_PI / 3.0;
    Matrix<double> r(2, 2, {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)});
    Matrix<double> rinv(2, 2, {std::cos(t), std::sin(t), -std::sin(t), std::cos(t)});
    CHECK(mat_distance(r * rinv, Matrix<double>::identity(2)) < 1e-12);
}

TEST_CASE("orthogonality predicate") {
    CHECK(is_orthogonal(Matrix<Rat>::diagonal({1, -1, -1}), 0.0));
    CHECK_FALSE(is_orthogonal(Matrix<Rat>::diagonal({2, 1}), 0.0));
}

TEST_CASE("determinants of the reflection matrices") {
    CHECK(det(Matrix<Rat>::diagonal({1, -1, -1, -1})) == -1); // h_3
    CHECK(det(Matrix<Rat>::diagonal({1, -1, -1})) == 1);      // h_2
}

TEST_CASE("determinant matches Laplace oracle, exact and float") {
    Rng rng(42);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            Matrix<Rat> m = random_rat_matrix(rng, n);
            CHECK(det(m) == det_laplace(m));

            Matrix<double> mf(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mf.at(i, j) = to_double(m.at(i, j));
            CHECK(std::fabs(det(mf) - to_double(det(m))) < 1e-9);
        }
    }
}

TEST_CASE("det is multiplicative") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        Matrix<Rat> a = random_rat_matrix(rng, 3);
        Matrix<Rat> b = random_rat_matrix(rng, 3);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("exact arithmetic is associative and distributive") {
    Rng rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        Rat a(rng.uniform_int(-20, 20), rng.uniform_int(1, 9));
        Rat b(rng.uniform_int(-20, 20), rng.uniform_int(1, 9));
        Rat c(rng.uniform_int(-20, 20), rng.uniform_int(1, 9));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("orthogonal implies |det| = 1") {
    Rng rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        for (int n : {2, 3, 4}) {
            Vector<double> y = sample_sphere<double>(rng, n - 1);
            Matrix<double> refl(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    refl.at(i, j) = 2.0 * y[i] * y[j] - (i == j ? 1.0 : 0.0);
            REQUIRE(is_orthogonal(refl, 1e-9));
            CHECK(std::fabs(std::fabs(det(refl)) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("inverse stereographic sampler lands exactly on the sphere") {
    CHECK(sphere_from_tuple({Rat(1, 2)}) == Vector<Rat>{Rat(3, 5), Rat(4, 5)});
    CHECK(sphere_from_tuple({Rat(0), Rat(0)}) == Vector<Rat>{Rat(1), Rat(0), Rat(0)});

    Rng rng(99);
    for (int n = 1; n <= 8; ++n)
        for (int rep = 0; rep < 30; ++rep) {
            Vector<Rat> x = sample_sphere<Rat>(rng, n);
            CHECK(inner_product(x, x) == 1);
        }
}

TEST_CASE("gaussian sphere sampler is unit within float tolerance") {
    Rng rng(5);
    for (int n = 1; n <= 8; ++n) {
        Vector<double> x = sample_sphere<double>(rng, n);
        CHECK(std::fabs(inner_product(x, x) - 1.0) < 1e-12);
    }
}

TEST_CASE("row action applies matrices on the right") {
    Vector<Rat> x{Rat(3, 5), Rat(4, 5)};
    auto h1 = Matrix<Rat>::diagonal({1, -1});
    CHECK(row_apply(x, h1) == Vector<Rat>{Rat(3, 5), Rat(-4, 5)});
}

TEST_CASE("sampling is deterministic given the seed") {
    Rng a(123), b(123);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(123);
    Rng d = c.sub(3);
    Rng e(123 ^ 3);
    CHECK(d.next_u64() == e.next_u64());
}
