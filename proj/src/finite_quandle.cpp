#include "sq/quandle.hpp"

#include <deque>

namespace sq {

std::vector<std::vector<int>> inner_group_generators(const FiniteQuandle& q) {
    const int k = q.size;
    if (k <= 0 || q.table.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("inner_group_generators: invalid table");
    std::vector<std::vector<int>> gens;
    gens.reserve(static_cast<std::size_t>(k));
    for (int y = 0; y < k; ++y) {
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int x = 0; x < k; ++x) {
            int v = q.op(x, y);
            if (v < 0 || v >= k)
                throw std::invalid_argument("inner_group_generators: entry out of range");
            perm[static_cast<std::size_t>(x)] = v;
        }
        gens.push_back(std::move(perm));
    }
    return gens;
}

static std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f then g): x -> g(f(x))
    std::vector<int> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = g[static_cast<std::size_t>(f[i])];
    return r;
}

std::set<std::vector<int>> inner_group_closure(const FiniteQuandle& q, std::size_t cap) {
    auto gens = inner_group_generators(q);
    std::vector<int> id(static_cast<std::size_t>(q.size));
    for (int i = 0; i < q.size; ++i) id[static_cast<std::size_t>(i)] = i;

    std::set<std::vector<int>> closure{id};
    std::deque<std::vector<int>> work{id};
    while (!work.empty()) {
        std::vector<int> cur = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            std::vector<int> next = compose(cur, g);
            if (closure.insert(next).second) {
                if (closure.size() > cap)
                    throw std::runtime_error("inner_group_closure: cap exceeded");
                work.push_back(std::move(next));
            }
        }
    }
    return closure;
}

bool is_algebraically_connected(const FiniteQuandle& q) {
    // Orbit of 0 under the generated group; for permutations of a finite set
    // the semigroup closure of the generators already contains the inverses.
    auto gens = inner_group_generators(q);
    std::vector<bool> seen(static_cast<std::size_t>(q.size), false);
    std::deque<int> work{0};
    seen[0] = true;
    int count = 1;
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (const auto& g : gens) {
            int y = g[static_cast<std::size_t>(x)];
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++count;
                work.push_back(y);
            }
        }
    }
    return count == q.size;
}

bool is_faithful(const FiniteQuandle& q) {
    auto gens = inner_group_generators(q);
    std::set<std::vector<int>> distinct(gens.begin(), gens.end());
    return distinct.size() == gens.size();
}

VerificationReport check_axioms_finite(const FiniteQuandle& q) {
    CheckConfig cfg;
    cfg.mode = Mode::Exact;
    cfg.samples = q.size * q.size * q.size;
    cfg.seed = 0;
    VerificationReport rep("axioms " + q.name + " (exhaustive)", cfg);
    const int k = q.size;

    if (k <= 0 || q.table.size() != static_cast<std::size_t>(k)) {
        rep.fail("malformed table");
        return rep;
    }
    for (const auto& row : q.table)
        if (row.size() != static_cast<std::size_t>(k)) {
            rep.fail("malformed table row");
            return rep;
        }
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (q.op(x, y) < 0 || q.op(x, y) >= k) {
                rep.fail("entry out of range at (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
                return rep;
            }

    for (int x = 0; x < k; ++x)
        rep.add(q.op(x, x) == x ? 0.0 : 1.0, q.op(x, x) == x,
                [&] { return "Q1 x=" + std::to_string(x); });

    // Q2: every column is a permutation.
    for (int y = 0; y < k; ++y) {
        std::vector<int> hit(static_cast<std::size_t>(k), 0);
        for (int x = 0; x < k; ++x) hit[static_cast<std::size_t>(q.op(x, y))]++;
        bool perm = std::all_of(hit.begin(), hit.end(), [](int c) { return c == 1; });
        rep.add(perm ? 0.0 : 1.0, perm, [&] { return "Q2 y=" + std::to_string(y); });
    }

    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) {
                int lhs = q.op(q.op(x, y), z);
                int rhs = q.op(q.op(x, z), q.op(y, z));
                rep.add(lhs == rhs ? 0.0 : 1.0, lhs == rhs, [&] {
                    return "Q3 x=" + std::to_string(x) + " y=" + std::to_string(y) +
                           " z=" + std::to_string(z);
                });
            }
    return rep;
}

void write_finite_quandle(std::ostream& os, const FiniteQuandle& q) {
    os << q.size << "\n";
    for (int x = 0; x < q.size; ++x) {
        for (int y = 0; y < q.size; ++y) os << (y ? " " : "") << q.op(x, y);
        os << "\n";
    }
}

FiniteQuandle read_finite_quandle(std::istream& is, const std::string& name) {
    int k = 0;
    if (!(is >> k) || k <= 0) throw std::runtime_error("finite quandle: bad size");
    FiniteQuandle q;
    q.name = name;
    q.size = k;
    q.table.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            int v;
            if (!(is >> v) || v < 0 || v >= k)
                throw std::runtime_error("finite quandle: bad entry");
            q.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
        }
    return q;
}

Quandle<int> finite_as_quandle(const FiniteQuandle& q) {
    Quandle<int> r;
    r.name = q.name;
    r.mode = Mode::Exact;
    auto table = q.table;
    const int k = q.size;
    r.op = [table](int x, int y) {
        return table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    };
    // Column inverse by linear scan; tables here are tiny.
    r.op_inv = [table, k](int x, int y) {
        for (int c = 0; c < k; ++c)
            if (table[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)] == x) return c;
        throw std::domain_error("finite quandle: column is not a permutation");
    };
    r.equal = [](int a, int b) { return a == b; };
    r.distance = [](int a, int b) { return a == b ? 0.0 : 1.0; };
    r.show = [](int a) { return std::to_string(a); };
    r.sample = [k](Rng& rng) { return static_cast<int>(rng.uniform_int(0, k - 1)); };
    return r;
}

} // namespace sq
