#include "sq/search.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace sq {

// ---------------------------------------------------------------------------
// Construction and validation.
// ---------------------------------------------------------------------------
static FiniteGroup finish_group(std::string name, std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.name = std::move(name);
    g.order = static_cast<int>(table.size());
    g.table = std::move(table);

    // locate the identity
    g.identity = -1;
    for (int e = 0; e < g.order; ++e) {
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) {
            g.identity = e;
            break;
        }
    }
    if (g.identity < 0) throw std::logic_error(g.name + ": no identity");

    g.inverse.assign(static_cast<std::size_t>(g.order), -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inverse[static_cast<std::size_t>(a)] = b;
                break;
            }
    std::string why;
    if (!validate_group(g, &why)) throw std::logic_error(g.name + ": " + why);
    return g;
}

bool validate_group(const FiniteGroup& g, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int k = g.order;
    if (k <= 0 || g.table.size() != static_cast<std::size_t>(k))
        return fail("malformed table");
    for (const auto& row : g.table)
        if (row.size() != static_cast<std::size_t>(k)) return fail("malformed row");
    // Latin square
    for (int a = 0; a < k; ++a) {
        std::vector<int> seen_row(static_cast<std::size_t>(k), 0);
        std::vector<int> seen_col(static_cast<std::size_t>(k), 0);
        for (int b = 0; b < k; ++b) {
            int r = g.mul(a, b), c = g.mul(b, a);
            if (r < 0 || r >= k || c < 0 || c >= k) return fail("entry out of range");
            seen_row[static_cast<std::size_t>(r)]++;
            seen_col[static_cast<std::size_t>(c)]++;
        }
        for (int v = 0; v < k; ++v)
            if (seen_row[static_cast<std::size_t>(v)] != 1 ||
                seen_col[static_cast<std::size_t>(v)] != 1)
                return fail("not a Latin square");
    }
    for (int a = 0; a < k; ++a) {
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
            return fail("identity fails");
        int ia = g.inv(a);
        if (ia < 0 || ia >= k || g.mul(a, ia) != g.identity || g.mul(ia, a) != g.identity)
            return fail("inverse fails");
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    return fail("associativity fails");
    return true;
}

FiniteGroup cyclic_group(int k) {
    if (k < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
    return finish_group("Z/" + std::to_string(k), std::move(t));
}

FiniteGroup dihedral_group(int k) {
    if (k < 1) throw std::invalid_argument("dihedral_group: k must be positive");
    const int n = 2 * k;
    // element j*k + i represents r^i s^j with s r = r^{-1} s
    auto idx = [k](int i, int j) { return j * k + ((i % k) + k) % k; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int i1 = 0; i1 < k; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < k; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    t[static_cast<std::size_t>(idx(i1, j1))]
                     [static_cast<std::size_t>(idx(i2, j2))] = idx(i, (j1 + j2) % 2);
                }
    return finish_group("D" + std::to_string(k), std::move(t));
}

FiniteGroup quaternion_group() {
    // elements: +-1, +-i, +-j, +-k as integer quaternions
    const std::array<std::array<int, 4>, 8> units = {{{1, 0, 0, 0},
                                                      {-1, 0, 0, 0},
                                                      {0, 1, 0, 0},
                                                      {0, -1, 0, 0},
                                                      {0, 0, 1, 0},
                                                      {0, 0, -1, 0},
                                                      {0, 0, 0, 1},
                                                      {0, 0, 0, -1}}};
    auto qmul = [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
        return std::array<int, 4>{
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    };
    auto find = [&](const std::array<int, 4>& q) {
        for (std::size_t i = 0; i < units.size(); ++i)
            if (units[i] == q) return static_cast<int>(i);
        throw std::logic_error("quaternion product left the unit set");
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                find(qmul(units[static_cast<std::size_t>(a)],
                          units[static_cast<std::size_t>(b)]));
    return finish_group("Q8", std::move(t));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric_group: n in [1, 4]");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    auto find = [&](const std::vector<int>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw std::logic_error("permutation lookup failed");
    };
    const int k = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            std::vector<int> prod(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x)
                prod[static_cast<std::size_t>(x)] =
                    perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = find(prod);
        }
    return finish_group("S" + std::to_string(n), std::move(t));
}

FiniteGroup alternating_group_4() {
    FiniteGroup s4 = symmetric_group(4);
    // even permutations of S4, via parity of the permutation at each index
    std::vector<std::vector<int>> perms;
    std::vector<int> base{0, 1, 2, 3};
    std::vector<int> keep;
    int idx = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i + 1; j < base.size(); ++j)
                if (base[i] > base[j]) ++inversions;
        if (inversions % 2 == 0) keep.push_back(idx);
        ++idx;
    } while (std::next_permutation(base.begin(), base.end()));

    std::vector<int> pos(static_cast<std::size_t>(s4.order), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    const int k = static_cast<int>(keep.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int p = s4.mul(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
            if (pos[static_cast<std::size_t>(p)] < 0)
                throw std::logic_error("A4 is not closed");
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                pos[static_cast<std::size_t>(p)];
        }
    return finish_group("A4", std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int k = a.order * b.order;
    auto idx = [&](int x, int y) { return x * b.order + y; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k),
                                    std::vector<int>(static_cast<std::size_t>(k)));
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t[static_cast<std::size_t>(idx(x1, y1))]
                     [static_cast<std::size_t>(idx(x2, y2))] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return finish_group(a.name + "x" + b.name, std::move(t));
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

int element_order(const FiniteGroup& g, int a) {
    int x = a, n = 1;
    while (x != g.identity) {
        x = g.mul(x, a);
        ++n;
    }
    return n;
}

// ---------------------------------------------------------------------------
// Isomorphisms via generator images.
// ---------------------------------------------------------------------------
static std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<char> closure(static_cast<std::size_t>(g.order), 0);
    closure[static_cast<std::size_t>(g.identity)] = 1;
    int covered = 1;
    while (covered < g.order) {
        int pick = -1;
        for (int x = 0; x < g.order; ++x)
            if (!closure[static_cast<std::size_t>(x)]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        // rebuild closure of current generators
        std::fill(closure.begin(), closure.end(), 0);
        closure[static_cast<std::size_t>(g.identity)] = 1;
        std::deque<int> work{g.identity};
        covered = 1;
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (int gen : gens) {
                int y = g.mul(x, gen);
                if (!closure[static_cast<std::size_t>(y)]) {
                    closure[static_cast<std::size_t>(y)] = 1;
                    ++covered;
                    work.push_back(y);
                }
            }
        }
    }
    return gens;
}

// Extend generator images to a full map by closure; empty on inconsistency.
static std::vector<int> extend_map(const FiniteGroup& a, const FiniteGroup& b,
                                   const std::vector<int>& gens,
                                   const std::vector<int>& images) {
    std::vector<int> phi(static_cast<std::size_t>(a.order), -1);
    phi[static_cast<std::size_t>(a.identity)] = b.identity;
    std::deque<int> work{a.identity};
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int y = a.mul(x, gens[gi]);
            int img = b.mul(phi[static_cast<std::size_t>(x)], images[gi]);
            int& slot = phi[static_cast<std::size_t>(y)];
            if (slot < 0) {
                slot = img;
                work.push_back(y);
            } else if (slot != img) {
                return {};
            }
        }
    }
    // full homomorphism + bijectivity check
    std::vector<char> used(static_cast<std::size_t>(b.order), 0);
    for (int x = 0; x < a.order; ++x) {
        int v = phi[static_cast<std::size_t>(x)];
        if (v < 0 || used[static_cast<std::size_t>(v)]) return {};
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (phi[static_cast<std::size_t>(a.mul(x, y))] !=
                b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
                return {};
    return phi;
}

static void isomorphism_dfs(const FiniteGroup& a, const FiniteGroup& b,
                            const std::vector<int>& gens, std::vector<int>& images,
                            std::size_t depth, std::vector<std::vector<int>>& out,
                            bool first_only) {
    if (first_only && !out.empty()) return;
    if (depth == gens.size()) {
        auto phi = extend_map(a, b, gens, images);
        if (!phi.empty()) out.push_back(std::move(phi));
        return;
    }
    int want = element_order(a, gens[depth]);
    for (int cand = 0; cand < b.order; ++cand) {
        if (element_order(b, cand) != want) continue;
        images[depth] = cand;
        isomorphism_dfs(a, b, gens, images, depth + 1, out, first_only);
        if (first_only && !out.empty()) return;
    }
}

static std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& a,
                                                      const FiniteGroup& b,
                                                      bool first_only) {
    if (a.order != b.order) return {};
    // cheap invariant: multiset of element orders
    std::vector<int> oa, ob;
    for (int x = 0; x < a.order; ++x) oa.push_back(element_order(a, x));
    for (int x = 0; x < b.order; ++x) ob.push_back(element_order(b, x));
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return {};

    auto gens = greedy_generators(a);
    std::vector<int> images(gens.size(), -1);
    std::vector<std::vector<int>> out;
    isomorphism_dfs(a, b, gens, images, 0, out, first_only);
    return out;
}

std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b) {
    auto found = all_isomorphisms(a, b, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<FiniteGroup> group_catalog(int max_order) {
    if (max_order < 1 || max_order > 16)
        throw std::invalid_argument("group_catalog: max_order must be in [1, 16]");
    std::vector<FiniteGroup> cat;
    auto add = [&](FiniteGroup g) {
        if (g.order > max_order) return false;
        for (const auto& have : cat)
            if (have.order == g.order && group_isomorphic(have, g)) return false;
        cat.push_back(std::move(g));
        return true;
    };

    for (int k = 1; k <= max_order; ++k) add(cyclic_group(k));
    if (max_order >= 6) add(symmetric_group(3));
    if (max_order >= 24) add(symmetric_group(4)); // out of reach under the cap
    if (max_order >= 12) add(alternating_group_4());
    if (max_order >= 8) add(quaternion_group());
    for (int k = 3; 2 * k <= max_order; ++k) add(dihedral_group(k));

    // close under direct products of catalog members
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<FiniteGroup> batch;
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = 0; j < cat.size(); ++j) {
                if (cat[i].order < 2 || cat[j].order < 2) continue;
                if (cat[i].order * cat[j].order > max_order) continue;
                batch.push_back(direct_product(cat[i], cat[j]));
            }
        for (auto& g : batch)
            if (add(std::move(g))) grew = true;
    }

    std::stable_sort(cat.begin(), cat.end(),
                     [](const FiniteGroup& x, const FiniteGroup& y) {
                         return x.order < y.order;
                     });
    return cat;
}

std::vector<FiniteAutomorphism> automorphisms(const FiniteGroup& g) {
    auto raw = all_isomorphisms(g, g, false);
    std::sort(raw.begin(), raw.end());
    std::vector<FiniteAutomorphism> out;
    out.reserve(raw.size());
    int counter = 0;
    for (auto& perm : raw) {
        FiniteAutomorphism a;
        a.perm = std::move(perm);
        bool is_id = true, is_inv = true, invol = true;
        for (int x = 0; x < g.order; ++x) {
            if (a.perm[static_cast<std::size_t>(x)] != x) is_id = false;
            if (a.perm[static_cast<std::size_t>(x)] != g.inv(x)) is_inv = false;
            if (a.perm[static_cast<std::size_t>(a.perm[static_cast<std::size_t>(x)])] != x)
                invol = false;
        }
        a.involutive = invol;
        a.is_inversion = is_inv;
        if (is_id)
            a.name = "id";
        else if (is_inv)
            a.name = "Inv";
        else
            a.name = "psi" + std::to_string(counter);
        ++counter;
        out.push_back(std::move(a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quandle tables from groups.
// ---------------------------------------------------------------------------
static FiniteQuandle quandle_from(const std::string& name, const FiniteGroup& g,
                                  const std::function<int(int, int)>& op) {
    FiniteQuandle q;
    q.name = name;
    q.size = g.order;
    q.table.assign(static_cast<std::size_t>(g.order),
                   std::vector<int>(static_cast<std::size_t>(g.order)));
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            q.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = op(x, y);
    return q;
}

FiniteQuandle core_table(const FiniteGroup& g) {
    return quandle_from("Core(" + g.name + ")", g, [&g](int x, int y) {
        return g.mul(g.mul(y, g.inv(x)), y);
    });
}

FiniteQuandle conj_table(const FiniteGroup& g) {
    return quandle_from("Conj(" + g.name + ")", g, [&g](int x, int y) {
        return g.mul(g.mul(g.inv(y), x), y);
    });
}

FiniteQuandle twisted_conj_table(const FiniteGroup& g, const FiniteAutomorphism& psi) {
    return quandle_from("Conj(" + g.name + "," + psi.name + ")", g, [&](int x, int y) {
        return g.mul(psi.perm[static_cast<std::size_t>(g.mul(g.inv(y), x))], y);
    });
}

FiniteQuandle alexander_table(const FiniteGroup& g, const FiniteAutomorphism& psi) {
    return quandle_from("Alex(" + g.name + "," + psi.name + ")", g, [&](int x, int y) {
        return g.mul(psi.perm[static_cast<std::size_t>(g.mul(x, g.inv(y)))], y);
    });
}

GroupOps<int> group_ops(const FiniteGroup& g) {
    GroupOps<int> ops;
    ops.name = g.name;
    auto table = g.table;
    auto inverse = g.inverse;
    int identity = g.identity;
    int k = g.order;
    ops.identity = [identity] { return identity; };
    ops.mul = [table](int a, int b) {
        return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    ops.inv = [inverse](int a) { return inverse[static_cast<std::size_t>(a)]; };
    ops.equal = [](int a, int b) { return a == b; };
    ops.distance = [](int a, int b) { return a == b ? 0.0 : 1.0; };
    ops.show = [](int a) { return std::to_string(a); };
    ops.sample = [k](Rng& rng) { return static_cast<int>(rng.uniform_int(0, k - 1)); };
    return ops;
}

// ---------------------------------------------------------------------------
// Quandle isomorphism search.
// ---------------------------------------------------------------------------
namespace {

struct ElementSignature {
    std::vector<int> cycle_type; // of the column permutation S_y
    int orbit_size = 0;          // under the inner automorphism group
    int fixed_points = 0;        // |{x : x |> y = x}|
    bool operator==(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const FiniteQuandle& q) {
    const int k = q.size;
    auto gens = inner_group_generators(q);

    // orbits under the generated group = connected components under generators
    std::vector<int> orbit_id(static_cast<std::size_t>(k), -1);
    std::vector<int> orbit_size;
    for (int s = 0; s < k; ++s) {
        if (orbit_id[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(orbit_size.size());
        int count = 0;
        std::deque<int> work{s};
        orbit_id[static_cast<std::size_t>(s)] = id;
        ++count;
        while (!work.empty()) {
            int x = work.front();
            work.pop_front();
            for (const auto& gperm : gens) {
                int y = gperm[static_cast<std::size_t>(x)];
                if (orbit_id[static_cast<std::size_t>(y)] < 0) {
                    orbit_id[static_cast<std::size_t>(y)] = id;
                    ++count;
                    work.push_back(y);
                }
            }
        }
        orbit_size.push_back(count);
    }

    std::vector<ElementSignature> sig(static_cast<std::size_t>(k));
    for (int y = 0; y < k; ++y) {
        const auto& perm = gens[static_cast<std::size_t>(y)];
        std::vector<char> seen(static_cast<std::size_t>(k), 0);
        std::vector<int> cycles;
        int fixed = 0;
        for (int x = 0; x < k; ++x) {
            if (perm[static_cast<std::size_t>(x)] == x) ++fixed;
            if (seen[static_cast<std::size_t>(x)]) continue;
            int len = 0, cur = x;
            while (!seen[static_cast<std::size_t>(cur)]) {
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = perm[static_cast<std::size_t>(cur)];
                ++len;
            }
            cycles.push_back(len);
        }
        std::sort(cycles.begin(), cycles.end());
        sig[static_cast<std::size_t>(y)] = {std::move(cycles),
                                            orbit_size[static_cast<std::size_t>(
                                                orbit_id[static_cast<std::size_t>(y)])],
                                            fixed};
    }
    return sig;
}

struct IsoSearcher {
    const FiniteQuandle& a;
    const FiniteQuandle& b;
    std::vector<std::vector<char>> allowed;                 // allowed[x][v]
    std::vector<std::vector<std::pair<int, int>>> results;  // pairs (p,q) with p,q < t and a.op(p,q) = t
    std::vector<int> phi;
    std::vector<char> used;
    std::uint64_t nodes = 0;

    // Every constraint phi(p |> q) = phi(p) |> phi(q) is checked exactly when
    // the last of {p, q, p |> q} gets assigned (elements are assigned in
    // ascending order).
    bool consistent(int x) const {
        for (int u = 0; u <= x; ++u) {
            int t1 = a.op(x, u);
            int img1 = b.op(phi[static_cast<std::size_t>(x)],
                            phi[static_cast<std::size_t>(u)]);
            if (t1 <= x) {
                if (img1 != phi[static_cast<std::size_t>(t1)]) return false;
            } else if (used[static_cast<std::size_t>(img1)]) {
                return false; // forced image already taken elsewhere
            }
            int t2 = a.op(u, x);
            int img2 = b.op(phi[static_cast<std::size_t>(u)],
                            phi[static_cast<std::size_t>(x)]);
            if (t2 <= x) {
                if (img2 != phi[static_cast<std::size_t>(t2)]) return false;
            } else if (used[static_cast<std::size_t>(img2)]) {
                return false;
            }
        }
        for (const auto& [p, q] : results[static_cast<std::size_t>(x)])
            if (b.op(phi[static_cast<std::size_t>(p)], phi[static_cast<std::size_t>(q)]) !=
                phi[static_cast<std::size_t>(x)])
                return false;
        return true;
    }

    bool dfs(int x) {
        if (x == a.size) return true;
        for (int v = 0; v < b.size; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!allowed[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)]) continue;
            ++nodes;
            phi[static_cast<std::size_t>(x)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            if (consistent(x) && dfs(x + 1)) return true;
            phi[static_cast<std::size_t>(x)] = -1;
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }
};

} // namespace

IsoWitness quandle_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b,
                              bool use_pruning) {
    IsoWitness w;
    if (a.size != b.size) return w;
    const int k = a.size;

    IsoSearcher s{a, b, {}, {}, {}, {}, 0};
    s.allowed.assign(static_cast<std::size_t>(k),
                     std::vector<char>(static_cast<std::size_t>(k), 1));
    if (use_pruning) {
        auto sa = signatures(a);
        auto sb = signatures(b);
        for (int x = 0; x < k; ++x)
            for (int v = 0; v < k; ++v)
                s.allowed[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] =
                    sa[static_cast<std::size_t>(x)] == sb[static_cast<std::size_t>(v)];
    }
    s.results.assign(static_cast<std::size_t>(k), {});
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            int t = a.op(p, q);
            if (p < t && q < t)
                s.results[static_cast<std::size_t>(t)].emplace_back(p, q);
        }
    s.phi.assign(static_cast<std::size_t>(k), -1);
    s.used.assign(static_cast<std::size_t>(k), 0);

    bool found = s.dfs(0);
    w.nodes = s.nodes;
    if (!found) return w;

    // exhaustive re-validation of the witness
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (s.phi[static_cast<std::size_t>(a.op(x, y))] !=
                b.op(s.phi[static_cast<std::size_t>(x)], s.phi[static_cast<std::size_t>(y)]))
                throw std::logic_error("quandle_isomorphic: witness failed revalidation");
    w.isomorphic = true;
    w.mapping = std::move(s.phi);
    return w;
}

// ---------------------------------------------------------------------------
// The full scan.
// ---------------------------------------------------------------------------
SearchFindings search_core_vs_twisted(int max_order, bool use_pruning) {
    SearchFindings f;
    f.max_order = max_order;
    f.pruning = use_pruning;
    auto cat = group_catalog(max_order);

    // automorphisms and twisted tables per H, computed once
    std::vector<std::vector<FiniteAutomorphism>> auts;
    auts.reserve(cat.size());
    for (const auto& h : cat) auts.push_back(automorphisms(h));

    for (const auto& g : cat) {
        FiniteQuandle core = core_table(g);
        if (!check_axioms_finite(core).pass)
            throw std::logic_error(core.name + ": produced table fails the axioms");
        GroupSummary sum;
        sum.group = g.name;
        sum.abelian = is_abelian(g);

        for (std::size_t hi = 0; hi < cat.size(); ++hi) {
            const auto& h = cat[hi];
            if (h.order != g.order) continue;
            for (const auto& psi : auts[hi]) {
                FiniteQuandle twisted = twisted_conj_table(h, psi);
                if (!check_axioms_finite(twisted).pass)
                    throw std::logic_error(twisted.name + ": produced table fails the axioms");
                IsoWitness w = quandle_isomorphic(core, twisted, use_pruning);
                SearchRecord rec;
                rec.group = g.name;
                rec.other = h.name;
                rec.psi_name = psi.name;
                rec.psi = psi.perm;
                rec.isomorphic = w.isomorphic;
                rec.witness = w.mapping;
                rec.nodes = w.nodes;
                if (w.isomorphic) {
                    ++sum.matches;
                    if (h.name == g.name && psi.is_inversion) sum.inv_self_match = true;
                } else {
                    ++sum.exhausted;
                }
                f.records.push_back(std::move(rec));
            }
        }
        f.summary.push_back(std::move(sum));
    }
    return f;
}

std::string findings_to_json(const SearchFindings& f) {
    nlohmann::ordered_json j;
    j["max_order"] = f.max_order;
    j["pruning"] = f.pruning;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : f.records) {
        nlohmann::ordered_json rec;
        rec["G"] = r.group;
        rec["H"] = r.other;
        rec["psi_name"] = r.psi_name;
        rec["psi"] = r.psi;
        rec["result"] = r.isomorphic ? "isomorphic" : "exhausted";
        rec["witness"] = r.witness;
        rec["nodes"] = r.nodes;
        j["records"].push_back(std::move(rec));
    }
    j["summary"] = nlohmann::ordered_json::array();
    for (const auto& s : f.summary) {
        nlohmann::ordered_json sum;
        sum["G"] = s.group;
        sum["abelian"] = s.abelian;
        sum["matches"] = s.matches;
        sum["exhausted"] = s.exhausted;
        sum["inv_self_match"] = s.inv_self_match;
        j["summary"].push_back(std::move(sum));
    }
    return j.dump(2);
}

void write_findings(const std::string& path, const SearchFindings& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open findings file: " + path);
    out << findings_to_json(f) << "\n";
}

} // namespace sq
