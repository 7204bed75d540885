#include <doctest.h>

#include <vector>

#include "sq/clifford.hpp"

using namespace sq;

namespace {

// Naive sign oracle: concatenate the two ascending factor lists, bubble-sort
// counting transpositions, and let equal neighbors contract with +1.
int naive_sign(std::uint32_t a, std::uint32_t b) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
        if (a & (1u << i)) idx.push_back(i);
    for (int i = 0; i < 32; ++i)
        if (b & (1u << i)) idx.push_back(i);
    int swaps = 0;
    for (std::size_t pass = 0; pass + 1 < idx.size(); ++pass)
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] > idx[i + 1]) {
                std::swap(idx[i], idx[i + 1]);
                ++swaps;
            }
    return swaps % 2 == 0 ? 1 : -1;
}

Clifford<Rat> blade(int n, std::uint32_t mask, long coeff = 1) {
    Clifford<Rat> c(n);
    c.add_term(mask, Rat(coeff));
    return c;
}

} // namespace

TEST_CASE("blade sign matches the permutation-sort oracle") {
    Rng rng(2024);
    for (int rep = 0; rep < 2000; ++rep) {
        auto a = static_cast<std::uint32_t>(rng.next_u64() & 0xFFFu);
        auto b = static_cast<std::uint32_t>(rng.next_u64() & 0xFFFu);
        CHECK(Clifford<double>::mult_sign(a, b) == naive_sign(a, b));
    }
}

TEST_CASE("geometric product basics") {
    const int n = 3;
    auto e1 = Clifford<Rat>::basis_vector(n, 0);
    auto e2 = Clifford<Rat>::basis_vector(n, 1);
    CHECK(e1 * e1 == Clifford<Rat>::scalar(n, Rat(1)));
    CHECK(e1 * e2 == blade(n, 0b011));
    CHECK(e2 * e1 == blade(n, 0b011, -1));
    auto e12 = e1 * e2;
    CHECK(e12 * e12 == Clifford<Rat>::scalar(n, Rat(-1)));
    CHECK_THROWS_AS(e1 * Clifford<Rat>::basis_vector(2, 0), std::invalid_argument);
}

TEST_CASE("grade involution") {
    const int n = 3;
    CHECK(Clifford<Rat>::scalar(n, Rat(1)).grade_involution() ==
          Clifford<Rat>::scalar(n, Rat(1)));
    CHECK(Clifford<Rat>::basis_vector(n, 0).grade_involution() == blade(n, 0b001, -1));
    CHECK(blade(n, 0b111).grade_involution() == blade(n, 0b111, -1));
}

TEST_CASE("reversion") {
    const int n = 4;
    CHECK(blade(n, 0b0011).reverse() == blade(n, 0b0011, -1));
    CHECK(blade(n, 0b0001).reverse() == blade(n, 0b0001));
    auto h3 = h_tilde<Rat>(3); // e2 e3 e4 in Cl(4)
    CHECK(h3.element.reverse() * h3.element == Clifford<Rat>::scalar(4, Rat(1)));
}

TEST_CASE("versor construction") {
    auto id = versor_from_unit_vectors<Rat>({}, 3, 0.0);
    CHECK(id.parity == 0);
    CHECK(id.element == Clifford<Rat>::scalar(3, Rat(1)));

    auto v = versor_from_unit_vectors<Rat>({Vector<Rat>::basis(3, 1)}, 3, 0.0);
    CHECK(v.parity == 1);
    CHECK(v.element == blade(3, 0b010));

    CHECK(h_tilde<Rat>(2).element == blade(3, 0b110));
    CHECK(h_tilde<Rat>(3).element == blade(4, 0b1110));

    CHECK_THROWS_AS(versor_from_unit_vectors<Rat>({Vector<Rat>{Rat(2), Rat(0)}}, 2, 0.0),
                    std::invalid_argument);
}

TEST_CASE("twisted adjoint reflects across the hyperplane of the factor") {
    const int n = 3;
    auto e1v = versor_from_unit_vectors<Rat>({Vector<Rat>::basis(n, 0)}, n, 0.0);
    CHECK(twisted_adjoint(e1v, Vector<Rat>::basis(n, 0)) == -Vector<Rat>::basis(n, 0));
    CHECK(twisted_adjoint(e1v, Vector<Rat>::basis(n, 1)) == Vector<Rat>::basis(n, 1));

    auto h2 = h_tilde<Rat>(2); // e2 e3 in Cl(3)
    CHECK(twisted_adjoint(h2, Vector<Rat>::basis(3, 1)) == -Vector<Rat>::basis(3, 1));
}

TEST_CASE("twisted adjoint rejects non-versor input") {
    // 1 + e1 has mixed parity; its twisted adjoint leaves a grade-2 remainder.
    Clifford<Rat> bad = Clifford<Rat>::scalar(3, Rat(1)) + blade(3, 0b001);
    Versor<Rat> fake(3);
    fake.element = bad;
    CHECK_THROWS_AS(twisted_adjoint(fake, Vector<Rat>::basis(3, 1)), std::domain_error);
}

TEST_CASE("covering matrix anchors the lift h~n over h_n") {
    CHECK(covering_matrix(identity_versor<Rat>(4)) == Matrix<Rat>::identity(4));
    for (int n = 1; n <= 6; ++n) {
        auto lift = h_tilde<Rat>(n);
        std::vector<long> diag(static_cast<std::size_t>(n) + 1, -1);
        diag[0] = 1;
        auto hn = Matrix<Rat>::diagonal(diag);
        CHECK(covering_matrix(lift) == hn);
        CHECK(covering_matrix(lift.negated()) == hn); // two-point fiber
        CHECK_FALSE(lift == lift.negated());
    }
}

TEST_CASE("volume element") {
    CHECK(Clifford<Rat>::volume_element(1) == blade(1, 0b1));
    CHECK(Clifford<Rat>::volume_element(2) == blade(2, 0b11));
    auto w = Clifford<Rat>::volume_element(4);
    CHECK(w * w == Clifford<Rat>::scalar(4, Rat(1))); // (-1)^{n(n-1)/2} at n=4
}

TEST_CASE("cover is a degree-2 homomorphism onto orthogonal matrices") {
    Rng rng(31);
    SUBCASE("exact rational versors") {
        for (int rep = 0; rep < 25; ++rep) {
            int n = 3 + static_cast<int>(rng.uniform_int(0, 2));
            auto u = sample_versor<Rat>(rng, n, static_cast<int>(rng.uniform_int(0, 3)));
            auto v = sample_versor<Rat>(rng, n, static_cast<int>(rng.uniform_int(0, 3)));
            CHECK(covering_matrix(u * v) == covering_matrix(u) * covering_matrix(v));
            CHECK(covering_matrix(u) == covering_matrix(u.negated()));
            CHECK(is_orthogonal(covering_matrix(u), 0.0));
            // reverse(u) u = 1 stays true under versor products
            CHECK((u * v).inverse().element * (u * v).element ==
                  Clifford<Rat>::scalar(n, Rat(1)));
        }
    }
    SUBCASE("float versors") {
        for (int rep = 0; rep < 50; ++rep) {
            int n = 3 + static_cast<int>(rng.uniform_int(0, 3));
            auto u = sample_versor<double>(rng, n, static_cast<int>(rng.uniform_int(1, 4)));
            auto v = sample_versor<double>(rng, n, static_cast<int>(rng.uniform_int(1, 4)));
            CHECK(mat_distance(covering_matrix(u * v),
                               covering_matrix(u) * covering_matrix(v)) < 1e-9);
            CHECK(is_orthogonal(covering_matrix(u), 1e-9));
        }
    }
}

TEST_CASE("parity determines the determinant of the image") {
    Rng rng(77);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + static_cast<int>(rng.uniform_int(0, 3));
        int k = static_cast<int>(rng.uniform_int(0, 4));
        auto u = sample_versor<double>(rng, n, k);
        double d = to_double(det(covering_matrix(u)));
        CHECK(std::fabs(d - (u.parity == 0 ? 1.0 : -1.0)) < 1e-9);
    }
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(Clifford<double>(13), std::invalid_argument);
    CHECK_THROWS_AS(Clifford<double>(0), std::invalid_argument);
}

TEST_CASE("float prune removes only sub-eps coefficients on request") {
    Clifford<double> c(2);
    c.add_term(0b01, 1.0);
    c.add_term(0b10, 1e-15);
    CHECK(c.terms().size() == 2); // kept until explicit normalization
    c.prune(1e-12);
    CHECK(c.terms().size() == 1);
    CHECK(c.coefficient(0b01) == 1.0);
}
