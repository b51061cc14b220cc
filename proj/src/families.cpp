#include "cellres/families.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cellres {

namespace {

int max_var(const Monomial& m) {
    for (int v = m.vars(); v >= 1; --v)
        if (m.exponent(v) > 0) return v;
    return 0;
}

void check_cap(std::size_t count, int cap) {
    if (static_cast<int>(count) > cap)
        throw TooLargeError("generator cap " + std::to_string(cap) + " exceeded");
}

}  // namespace

MonomialIdeal gen_stable(const std::vector<Monomial>& seeds, int nvars,
                         bool squarefree, int cap) {
    if (seeds.empty()) throw std::invalid_argument("gen_stable: empty seeds");
    std::set<std::vector<std::int32_t>> seen;
    std::vector<Monomial> queue;
    for (const auto& s : seeds) {
        if (s.vars() != nvars)
            throw ContextMismatchError("gen_stable: seed context mismatch");
        if (s.is_unit()) throw std::invalid_argument("gen_stable: unit seed");
        if (squarefree)
            for (int v = 1; v <= nvars; ++v)
                if (s.exponent(v) > 1)
                    throw std::invalid_argument("gen_stable: seed is not squarefree");
        if (seen.insert(s.exponents()).second) queue.push_back(s);
    }
    std::vector<Monomial> all(queue);
    while (!queue.empty()) {
        Monomial m = queue.back();
        queue.pop_back();
        std::vector<int> positions;
        if (squarefree) {
            for (int v = 1; v <= nvars; ++v)
                if (m.exponent(v) > 0) positions.push_back(v);
        } else {
            positions.push_back(max_var(m));
        }
        for (int j : positions) {
            for (int i = 1; i < j; ++i) {
                if (squarefree && m.exponent(i) > 0) continue;
                Monomial swapped =
                    multiply_vars(divide_exact(m, Monomial::variable(nvars, j)), var_bit(i));
                if (squarefree && swapped.exponent(i) > 1) continue;
                if (seen.insert(swapped.exponents()).second) {
                    all.push_back(swapped);
                    queue.push_back(swapped);
                    check_cap(all.size(), cap);
                }
            }
        }
    }
    MonomialIdeal out(nvars, std::move(all));
    check_cap(out.gens().size(), cap);
    return out;
}

namespace {

// k-subsets of {0,...,n-1} as masks, ascending (Gosper's hack).
std::vector<std::uint64_t> k_subsets(int k, int n) {
    std::vector<std::uint64_t> out;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        out.push_back(mask);
        std::uint64_t c = mask & -mask;
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

}  // namespace

MonomialIdeal gen_uniform(int k, int n, int cap) {
    if (n < 1 || n > kMaxVars || k < 1 || k > n)
        throw std::invalid_argument("gen_uniform: need 1 <= k <= n <= " +
                                    std::to_string(kMaxVars));
    std::vector<Monomial> gens;
    for (std::uint64_t mask : k_subsets(k, n)) {
        gens.push_back(multiply_vars(Monomial(n), static_cast<VarSet>(mask)));
        check_cap(gens.size(), cap);
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal gen_graphic(const std::vector<std::pair<int, int>>& edges, int cap) {
    const int m = static_cast<int>(edges.size());
    if (m < 1 || m > kMaxVars)
        throw std::invalid_argument("gen_graphic: edge count must be in [1," +
                                    std::to_string(kMaxVars) + "]");
    std::map<int, int> vertex_id;
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("gen_graphic: loop edge");
        vertex_id.try_emplace(a, static_cast<int>(vertex_id.size()));
        vertex_id.try_emplace(b, static_cast<int>(vertex_id.size()));
    }
    const int nv = static_cast<int>(vertex_id.size());

    // Union-find per candidate edge set; a spanning tree uses nv-1 edges
    // and connects everything.
    auto spanning_tree = [&](VarSet mask) {
        std::vector<int> parent(nv);
        for (int i = 0; i < nv; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merged = 0;
        for (int e = 0; e < m; ++e) {
            if (!varset_contains(mask, e + 1)) continue;
            int ra = find(vertex_id[edges[e].first]);
            int rb = find(vertex_id[edges[e].second]);
            if (ra == rb) return false;  // cycle
            parent[ra] = rb;
            ++merged;
        }
        return merged == nv - 1;
    };

    if (nv < 2) throw std::invalid_argument("gen_graphic: need at least two vertices");
    if (nv - 1 > m) throw std::invalid_argument("gen_graphic: graph is disconnected");
    std::vector<Monomial> gens;
    for (std::uint64_t mask : k_subsets(nv - 1, m)) {
        if (!spanning_tree(static_cast<VarSet>(mask))) continue;
        gens.push_back(multiply_vars(Monomial(m), static_cast<VarSet>(mask)));
        check_cap(gens.size(), cap);
    }
    if (gens.empty())
        throw std::invalid_argument("gen_graphic: graph is disconnected");
    return MonomialIdeal(m, std::move(gens));
}

}  // namespace cellres
