#pragma once

#include <functional>
#include <string>

#include "sq/groups.hpp"
#include "sq/quandle.hpp"

namespace sq::test {

inline GroupOps<int> cyclic_group_ops(int k) {
    GroupOps<int> g;
    g.name = "Z/" + std::to_string(k);
    g.identity = [] { return 0; };
    g.mul = [k](int a, int b) { return (a + b) % k; };
    g.inv = [k](int a) { return (k - a) % k; };
    g.equal = [](int a, int b) { return a == b; };
    g.distance = [](int a, int b) { return a == b ? 0.0 : 1.0; };
    g.show = [](int a) { return std::to_string(a); };
    g.sample = [k](Rng& rng) { return static_cast<int>(rng.uniform_int(0, k - 1)); };
    return g;
}

inline FiniteQuandle table_from_op(const std::string& name, int k,
                                   const std::function<int(int, int)>& op) {
    FiniteQuandle q;
    q.name = name;
    q.size = k;
    q.table.assign(static_cast<std::size_t>(k),
                   std::vector<int>(static_cast<std::size_t>(k)));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            q.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = op(x, y);
    return q;
}

} // namespace sq::test
