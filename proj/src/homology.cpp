#include "cellres/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace cellres {

bool ChainComplex::boundary_squares_to_zero() const {
    for (std::size_t i = 1; i < maps.size(); ++i) {
        const SparseIntMatrix& hi = maps[i];
        const SparseIntMatrix& lo = maps[i - 1];
        std::vector<std::vector<std::pair<int, long long>>> lo_by_col(hi.rows);
        for (const auto& [r, c, v] : lo.entries) lo_by_col[c].emplace_back(r, v);
        std::map<std::pair<int, int>, long long> prod;
        for (const auto& [r, c, v] : hi.entries)
            for (const auto& [rr, vv] : lo_by_col[r]) prod[{rr, c}] += v * vv;
        for (const auto& [rc, v] : prod)
            if (v != 0) return false;
    }
    return true;
}

std::vector<long> ChainComplex::homology() const {
    std::vector<long> r(ranks.size() + 1, 0);
    for (std::size_t i = 0; i < maps.size(); ++i) r[i] = rank_exact(maps[i]);
    std::vector<long> h(ranks.size(), 0);
    for (std::size_t i = 0; i < ranks.size(); ++i) h[i] = ranks[i] - r[i] - r[i + 1];
    return h;
}

ChainComplex chain_complex(const SimplicialComplex& K, bool augmented) {
    ChainComplex cc;
    if (K.empty()) return cc;
    std::vector<std::uint64_t> faces = K.all_faces();
    const int top = K.dim();
    cc.ranks.assign(top + 1, 0);
    std::unordered_map<std::uint64_t, int> local;
    std::vector<std::vector<std::uint64_t>> by_dim(top + 1);
    for (std::uint64_t f : faces) {
        int d = __builtin_popcountll(f) - 1;
        local[f] = static_cast<int>(by_dim[d].size());
        by_dim[d].push_back(f);
        ++cc.ranks[d];
    }
    cc.maps.resize(top + 1);
    cc.maps[0].rows = augmented ? 1 : 0;
    cc.maps[0].cols = static_cast<int>(cc.ranks[0]);
    if (augmented)
        for (int v = 0; v < cc.ranks[0]; ++v) cc.maps[0].add_entry(0, v, 1);
    for (int d = 1; d <= top; ++d) {
        cc.maps[d].rows = static_cast<int>(cc.ranks[d - 1]);
        cc.maps[d].cols = static_cast<int>(cc.ranks[d]);
        for (std::uint64_t f : by_dim[d]) {
            int col = local[f];
            int pos = 0;
            for (int v = 0; v < 64; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                if (!(f & bit)) continue;
                cc.maps[d].add_entry(local[f & ~bit], col, pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
        }
    }
    return cc;
}

ChainComplex chain_complex(const CellComplex& X, bool augmented) {
    ChainComplex cc;
    if (X.cells.empty()) return cc;
    const int top = X.dim();
    cc.ranks.assign(top + 1, 0);
    std::vector<int> local(X.cells.size());
    for (std::size_t i = 0; i < X.cells.size(); ++i)
        local[i] = static_cast<int>(cc.ranks[X.cells[i].dim]++);
    cc.maps.resize(top + 1);
    cc.maps[0].rows = augmented ? 1 : 0;
    cc.maps[0].cols = static_cast<int>(cc.ranks[0]);
    for (int d = 1; d <= top; ++d) {
        cc.maps[d].rows = static_cast<int>(cc.ranks[d - 1]);
        cc.maps[d].cols = static_cast<int>(cc.ranks[d]);
    }
    for (std::size_t i = 0; i < X.cells.size(); ++i) {
        const Cell& cell = X.cells[i];
        if (cell.dim == 0) {
            if (augmented) cc.maps[0].add_entry(0, local[i], 1);
            continue;
        }
        for (const auto& [fid, sign] : cell.faces)
            cc.maps[cell.dim].add_entry(local[fid], local[i], sign);
    }
    if (!cc.boundary_squares_to_zero())
        throw BoundaryNotComplexError("cell complex incidences do not square to zero");
    return cc;
}

std::vector<long> reduced_homology_ranks(const SimplicialComplex& K) {
    return chain_complex(K, true).homology();
}

std::vector<long> reduced_homology_ranks(const CellComplex& X) {
    return chain_complex(X, true).homology();
}

namespace {
bool all_zero(const std::vector<long>& v) {
    for (long x : v)
        if (x != 0) return false;
    return true;
}
}  // namespace

bool is_acyclic(const SimplicialComplex& K) {
    return K.empty() || all_zero(reduced_homology_ranks(K));
}

bool is_acyclic(const CellComplex& X) {
    return X.cells.empty() || all_zero(reduced_homology_ranks(X));
}

namespace {

void check_taylor_bound(std::size_t m, int bound) {
    if (static_cast<int>(m) > bound)
        throw TooLargeError("taylor complex: " + std::to_string(m) +
                            " generators exceed bound " + std::to_string(bound));
}

// lcm per subset of generators, indexed by bitmask.
std::vector<Monomial> subset_lcms(const std::vector<Monomial>& gens) {
    const std::size_t m = gens.size();
    std::vector<Monomial> lcms(std::size_t{1} << m, Monomial(gens[0].vars()));
    for (std::size_t mask = 1; mask < lcms.size(); ++mask) {
        int low = __builtin_ctzll(mask);
        lcms[mask] = lcm(lcms[mask & (mask - 1)], gens[low]);
    }
    return lcms;
}

}  // namespace

BettiTable taylor_betti_gens(const std::vector<Monomial>& gens, int bound) {
    if (gens.empty()) throw std::invalid_argument("taylor_betti: no generators");
    check_taylor_bound(gens.size(), bound);
    const std::size_t m = gens.size();
    std::vector<Monomial> lcms = subset_lcms(gens);

    // Strand per exact label.
    std::map<std::vector<std::int32_t>, std::vector<std::uint64_t>> strands;
    for (std::uint64_t mask = 0; mask < lcms.size(); ++mask)
        strands[lcms[mask].exponents()].push_back(mask);

    BettiTable table;
    for (const auto& [label, cells] : strands) {
        const Monomial b{std::vector<std::int32_t>(label)};
        int lo = 64, hi = 0;
        std::unordered_map<std::uint64_t, int> local;
        std::map<int, int> count;
        for (std::uint64_t mask : cells) {
            int d = __builtin_popcountll(mask);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            local[mask] = count[d]++;
        }
        // Boundary within the strand: only faces with the same lcm survive
        // the residue field; the simplicial sign is by position.
        std::map<int, SparseIntMatrix> maps;
        for (int d = lo; d <= hi; ++d) {
            maps[d].rows = count.count(d - 1) ? count[d - 1] : 0;
            maps[d].cols = count[d];
        }
        for (std::uint64_t mask : cells) {
            int d = __builtin_popcountll(mask);
            if (d == 0) continue;
            int pos = 0;
            for (std::size_t g = 0; g < m; ++g) {
                std::uint64_t bit = std::uint64_t{1} << g;
                if (!(mask & bit)) continue;
                std::uint64_t face = mask & ~bit;
                if (lcms[face] == b) {
                    // face stays in this strand
                    maps[d].add_entry(local[face], local[mask], pos % 2 == 0 ? 1 : -1);
                }
                ++pos;
            }
        }
        std::map<int, long> rank_of;
        for (auto& [d, mat] : maps) rank_of[d] = rank_exact(mat);
        for (const auto& [d, c] : count) {
            long r_in = rank_of.count(d) ? rank_of[d] : 0;
            long r_out = rank_of.count(d + 1) ? rank_of[d + 1] : 0;
            long beta = c - r_in - r_out;
            if (beta != 0) table.add(d, b, beta);
        }
    }
    return table;
}

BettiTable taylor_betti(const MonomialIdeal& ideal, int bound) {
    if (ideal.is_zero()) throw std::invalid_argument("taylor_betti: zero ideal");
    return taylor_betti_gens(ideal.gens(), bound);
}

FreeComplex taylor_free_complex(const std::vector<Monomial>& gens, int bound) {
    if (gens.empty()) throw std::invalid_argument("taylor_free_complex: no generators");
    check_taylor_bound(gens.size(), bound);
    const std::size_t m = gens.size();
    std::vector<Monomial> lcms = subset_lcms(gens);

    FreeComplex fc;
    fc.multidegrees.resize(m + 1);
    std::vector<int> local(lcms.size());
    std::vector<std::vector<std::uint64_t>> by_deg(m + 1);
    for (std::uint64_t mask = 0; mask < lcms.size(); ++mask) {
        int d = __builtin_popcountll(mask);
        local[mask] = static_cast<int>(by_deg[d].size());
        by_deg[d].push_back(mask);
        fc.multidegrees[d].push_back(lcms[mask]);
    }
    fc.maps.resize(m);
    for (std::size_t d = 1; d <= m; ++d) {
        fc.maps[d - 1].degree = static_cast<int>(d);
        for (std::uint64_t mask : by_deg[d]) {
            int pos = 0;
            for (std::size_t g = 0; g < m; ++g) {
                std::uint64_t bit = std::uint64_t{1} << g;
                if (!(mask & bit)) continue;
                std::uint64_t face = mask & ~bit;
                fc.maps[d - 1].entries.push_back(
                    MapEntry{local[mask], local[face], pos % 2 == 0 ? 1 : -1,
                             divide_exact(lcms[mask], lcms[face])});
                ++pos;
            }
        }
    }
    return fc;
}

std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal) {
    std::set<std::vector<std::int32_t>> seen;
    std::vector<Monomial> out, queue;
    for (const auto& g : ideal.gens())
        if (seen.insert(g.exponents()).second) {
            out.push_back(g);
            queue.push_back(g);
        }
    while (!queue.empty()) {
        Monomial a = queue.back();
        queue.pop_back();
        for (const auto& g : ideal.gens()) {
            Monomial l = lcm(a, g);
            if (seen.insert(l.exponents()).second) {
                out.push_back(l);
                queue.push_back(l);
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

SupportCheck supports_resolution(const CellComplex& X, const MonomialIdeal& ideal) {
    SupportCheck check;
    std::set<std::vector<std::int32_t>> degrees;
    for (const Monomial& b : lcm_closure(ideal)) degrees.insert(b.exponents());
    for (const Cell& c : X.cells) degrees.insert(c.label.exponents());
    for (const auto& exps : degrees) {
        Monomial b{std::vector<std::int32_t>(exps)};
        ++check.checked;
        if (!is_acyclic(restrict_cells(X, b))) {
            check.ok = false;
            check.witness = b;
            return check;
        }
    }
    return check;
}

}  // namespace cellres
