#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sq/numerics.hpp"

namespace sq {

// Element of the Clifford algebra Cl(n) with positive-definite metric
// (e_i^2 = +1). Terms are a sparse map from blade bitmask to coefficient;
// bit i set means generator e_{i+1} is a factor of the blade. Exact mode
// never stores zero coefficients; float mode keeps small coefficients until
// prune() is called explicitly.
template <class T>
class Clifford {
public:
    static constexpr int kMaxDim = 12; // 4096 blades; plenty for desk-scale checks

    explicit Clifford(int n) : n_(check_dim(n)) {}

    static Clifford scalar(int n, const T& value) {
        Clifford c(n);
        c.add_term(0u, value);
        return c;
    }

    static Clifford basis_vector(int n, int i) {
        if (i < 0 || i >= n) throw std::invalid_argument("basis_vector: index out of range");
        Clifford c(n);
        c.add_term(1u << i, scalar_traits<T>::from_int(1));
        return c;
    }

    static Clifford from_vector(const Vector<T>& v) {
        Clifford c(v.dim());
        for (int i = 0; i < v.dim(); ++i) c.add_term(1u << i, v[i]);
        return c;
    }

    // omega = e_1 e_2 ... e_n, the volume element.
    static Clifford volume_element(int n) {
        Clifford c(n);
        c.add_term((1u << n) - 1u, scalar_traits<T>::from_int(1));
        return c;
    }

    int dim() const { return n_; }
    const std::map<std::uint32_t, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    T coefficient(std::uint32_t blade) const {
        auto it = terms_.find(blade);
        return it == terms_.end() ? scalar_traits<T>::from_int(0) : it->second;
    }

    void add_term(std::uint32_t blade, const T& coeff) {
        if (blade >= (1u << n_)) throw std::invalid_argument("blade out of range");
        auto it = terms_.find(blade);
        if (it == terms_.end()) {
            if (!(coeff == scalar_traits<T>::from_int(0))) terms_.emplace(blade, coeff);
        } else {
            it->second += coeff;
            if (it->second == scalar_traits<T>::from_int(0)) terms_.erase(it);
        }
    }

    Clifford operator+(const Clifford& o) const {
        require_same_dim(o);
        Clifford r = *this;
        for (const auto& [b, c] : o.terms_) r.add_term(b, c);
        return r;
    }

    Clifford operator-(const Clifford& o) const {
        require_same_dim(o);
        Clifford r = *this;
        for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
        return r;
    }

    Clifford operator-() const {
        Clifford r(n_);
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }

    Clifford scaled(const T& s) const {
        Clifford r(n_);
        if (s == scalar_traits<T>::from_int(0)) return r;
        for (const auto& [b, c] : terms_) r.add_term(b, c * s);
        return r;
    }

    // Geometric product. The sign of a blade pair is (-1)^{#transpositions}
    // needed to merge the factor lists; equal generators then contract to +1.
    Clifford operator*(const Clifford& o) const {
        require_same_dim(o);
        Clifford r(n_);
        for (const auto& [ba, ca] : terms_)
            for (const auto& [bb, cb] : o.terms_) {
                int s = mult_sign(ba, bb);
                T coeff = ca * cb;
                if (s < 0) coeff = -coeff;
                r.add_term(ba ^ bb, coeff);
            }
        return r;
    }

    // Grade involution alpha: grade-k terms scaled by (-1)^k.
    Clifford grade_involution() const {
        Clifford r(n_);
        for (const auto& [b, c] : terms_)
            r.terms_.emplace(b, (std::popcount(b) % 2 == 0) ? c : -c);
        return r;
    }

    // Reversion: grade-k terms scaled by (-1)^{k(k-1)/2}.
    Clifford reverse() const {
        Clifford r(n_);
        for (const auto& [b, c] : terms_) {
            int k = std::popcount(b);
            r.terms_.emplace(b, ((k * (k - 1) / 2) % 2 == 0) ? c : -c);
        }
        return r;
    }

    bool is_homogeneous_grade_parity(int parity) const {
        for (const auto& [b, c] : terms_) {
            (void)c;
            if (std::popcount(b) % 2 != parity) return false;
        }
        return true;
    }

    // Largest |coefficient| outside grade 1.
    double non_vector_magnitude() const {
        double m = 0.0;
        for (const auto& [b, c] : terms_)
            if (std::popcount(b) != 1) m = std::max(m, std::fabs(to_double<T>(c)));
        return m;
    }

    Vector<T> vector_part() const {
        Vector<T> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = coefficient(1u << i);
        return v;
    }

    // Drop float-mode coefficients with |c| <= eps. No-op in exact mode,
    // where zeros are never stored in the first place.
    void prune(double eps) {
        if constexpr (scalar_traits<T>::is_exact) {
            (void)eps;
        } else {
            for (auto it = terms_.begin(); it != terms_.end();) {
                if (std::fabs(to_double<T>(it->second)) <= eps)
                    it = terms_.erase(it);
                else
                    ++it;
            }
        }
    }

    bool operator==(const Clifford& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string show() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << show_scalar(c);
            for (int i = 0; i < n_; ++i)
                if (b & (1u << i)) os << "*e" << (i + 1);
        }
        return os.str();
    }

    // Sign from reordering the concatenation of two ascending blade factor
    // lists into ascending order: each generator of b must move left past the
    // generators of a that are strictly greater. Equal generators contract
    // with the +1 metric and contribute no sign.
    static int mult_sign(std::uint32_t a, std::uint32_t b) {
        int swaps = 0;
        std::uint32_t rest = b;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            swaps += std::popcount(a & ~((2u << j) - 1u));
        }
        return (swaps % 2 == 0) ? 1 : -1;
    }

private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDim)
            throw std::invalid_argument("Clifford dimension must be in [1, 12]");
        return n;
    }
    void require_same_dim(const Clifford& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Clifford dimension mismatch");
    }

    int n_;
    std::map<std::uint32_t, T> terms_;
};

template <class T>
double clifford_distance(const Clifford<T>& a, const Clifford<T>& b) {
    if (a.dim() != b.dim()) return 1e9;
    Clifford<T> d = a - b;
    double m = 0.0;
    for (const auto& [blade, c] : d.terms()) {
        (void)blade;
        m = std::max(m, std::fabs(to_double<T>(c)));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Versors: products of unit vectors. All versors form Pin+(n); the even ones
// form Spin(n). The inverse of a unit versor is its reversion.
// ---------------------------------------------------------------------------
template <class T>
struct Versor {
    Clifford<T> element;
    int parity = 0;       // factor_count mod 2; grades of element match this
    int factor_count = 0; // unit vectors multiplied to build it

    explicit Versor(int n)
        : element(Clifford<T>::scalar(n, scalar_traits<T>::from_int(1))) {}
    Versor(Clifford<T> el, int par, int count)
        : element(std::move(el)), parity(par), factor_count(count) {
        if (parity != factor_count % 2)
            throw std::invalid_argument("versor parity/factor_count mismatch");
        if (!element.is_homogeneous_grade_parity(parity))
            throw std::invalid_argument("versor element grades do not match parity");
    }

    int dim() const { return element.dim(); }

    Versor operator*(const Versor& o) const {
        return Versor(element * o.element, (parity + o.parity) % 2,
                      factor_count + o.factor_count);
    }

    // -u: the other point of the fiber over the same orthogonal matrix.
    // (-1) is itself a product of two unit vectors, hence the +2.
    Versor negated() const { return Versor(-element, parity, factor_count + 2); }

    Versor inverse() const {
        return Versor(element.reverse(), parity, factor_count);
    }

    bool operator==(const Versor& o) const { return element == o.element; }
};

template <class T>
Versor<T> identity_versor(int n) { return Versor<T>(n); }

template <class T>
Versor<T> versor_from_unit_vectors(const std::vector<Vector<T>>& vs, int n, double eps) {
    Clifford<T> acc = Clifford<T>::scalar(n, scalar_traits<T>::from_int(1));
    for (const auto& v : vs) {
        if (v.dim() != n) throw std::invalid_argument("versor factor dimension mismatch");
        T norm2 = inner_product(v, v);
        if constexpr (scalar_traits<T>::is_exact) {
            if (!(norm2 == scalar_traits<T>::from_int(1)))
                throw std::invalid_argument("versor factor is not a unit vector");
        } else {
            if (std::fabs(to_double<T>(norm2) - 1.0) > eps)
                throw std::invalid_argument("versor factor is not a unit vector");
        }
        acc = acc * Clifford<T>::from_vector(v);
    }
    int count = static_cast<int>(vs.size());
    return Versor<T>(std::move(acc), count % 2, count);
}

// The fixed lift of h_n = diag(1,-1,...,-1) in O(n+1): the blade
// e_2 e_3 ... e_{n+1} in Cl(n+1). covering_matrix certifies the choice.
template <class T>
Versor<T> h_tilde(int n) {
    std::vector<Vector<T>> factors;
    for (int i = 1; i <= n; ++i) factors.push_back(Vector<T>::basis(n + 1, i));
    return versor_from_unit_vectors(factors, n + 1, 0.0);
}

// The twisted adjoint x -> alpha(u) x u^{-1}, which realizes the double
// cover Pin+(n) -> O(n) pointwise: a unit vector u acts as the reflection
// across the hyperplane orthogonal to u.
template <class T>
Vector<T> twisted_adjoint(const Versor<T>& u, const Vector<T>& x, double eps = kWellFormedEps) {
    if (x.dim() != u.dim()) throw std::invalid_argument("twisted_adjoint: dimension mismatch");
    Clifford<T> result = u.element.grade_involution() * Clifford<T>::from_vector(x) *
                         u.element.reverse();
    if constexpr (scalar_traits<T>::is_exact) {
        if (result.non_vector_magnitude() != 0.0)
            throw std::domain_error("twisted_adjoint: result is not grade-1 (non-versor input)");
    } else {
        if (result.non_vector_magnitude() > eps)
            throw std::domain_error("twisted_adjoint: result is not grade-1 (non-versor input)");
    }
    return result.vector_part();
}

// Matrix of p(u) on the right-action convention: column j holds the image of
// e_{j+1}, so covering_matrix(u*v) = covering_matrix(u)*covering_matrix(v).
template <class T>
Matrix<T> covering_matrix(const Versor<T>& u, double eps = kWellFormedEps) {
    const int n = u.dim();
    Matrix<T> m(n, n);
    for (int j = 0; j < n; ++j) {
        Vector<T> img = twisted_adjoint(u, Vector<T>::basis(n, j), eps);
        for (int i = 0; i < n; ++i) m.at(i, j) = img[i];
    }
    return m;
}

template <class T>
Versor<T> sample_versor(Rng& rng, int n, int factor_count) {
    std::vector<Vector<T>> vs;
    vs.reserve(static_cast<std::size_t>(factor_count));
    for (int i = 0; i < factor_count; ++i) vs.push_back(sample_sphere<T>(rng, n - 1));
    return versor_from_unit_vectors(vs, n, kWellFormedEps);
}

} // namespace sq
