#include "cellres/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "cellres/exact_linalg.hpp"
#include "cellres/resolution.hpp"

namespace cellres {

int CellComplex::dim() const {
    int d = -1;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
}

std::vector<int> CellComplex::f_vector() const {
    std::vector<int> f(dim() + 1, 0);
    for (const auto& c : cells) ++f[c.dim];
    return f;
}

long CellComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& c : cells) chi += c.dim % 2 == 0 ? 1 : -1;
    return chi;
}

std::vector<int> CellComplex::maximal_cells() const {
    std::vector<bool> is_face(cells.size(), false);
    for (const auto& c : cells)
        for (const auto& [id, sign] : c.faces) is_face[id] = true;
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        if (!is_face[i]) out.push_back(i);
    return out;
}

int CellComplex::find_cell(VarSet sigma, int gen) const {
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        if (cells[i].sigma == sigma && cells[i].gen == gen) return i;
    return -1;
}

CellComplex build_X(const AdmissibleOrder& order) {
    RegularityResult reg = is_regular(order);
    if (!reg.regular)
        throw NotRegularError("build_X: order is not regular", *reg.witness);

    CellComplex X;
    X.nvars = order.ideal().vars();
    for (int j = 0; j < order.size(); ++j) X.gen_labels.push_back(order.u(j));

    // Enumerate cells (sigma, u_j), sorted by (dim, j, sigma).
    std::vector<std::vector<std::pair<int, VarSet>>> by_dim;
    for (int j = 0; j < order.size(); ++j) {
        VarSet qj = order.q(j);
        VarSet sigma = 0;
        for (;;) {
            int d = varset_size(sigma);
            if (d >= static_cast<int>(by_dim.size())) by_dim.resize(d + 1);
            by_dim[d].emplace_back(j, sigma);
            if (sigma == qj) break;
            sigma = (sigma - qj) & qj;
        }
    }
    for (auto& level : by_dim) std::sort(level.begin(), level.end());

    std::unordered_map<std::uint64_t, int> id_of;
    auto key = [](int j, VarSet sigma) {
        return (static_cast<std::uint64_t>(j) << 32) | sigma;
    };
    for (const auto& level : by_dim)
        for (const auto& [j, sigma] : level) {
            int id = static_cast<int>(X.cells.size());
            id_of[key(j, sigma)] = id;
            Cell cell;
            cell.sigma = sigma;
            cell.gen = j;
            cell.dim = varset_size(sigma);
            cell.label = order.sigma_multidegree(j, sigma);
            std::set<int> verts;
            VarSet tau = 0;
            for (;;) {
                verts.insert(order.g_multi_index(j, tau));
                if (tau == sigma) break;
                tau = (tau - sigma) & sigma;
            }
            cell.vertex_gens.assign(verts.begin(), verts.end());
            X.cells.push_back(std::move(cell));
        }

    // Incidence signs mirror delta - mu.
    for (auto& cell : X.cells) {
        if (cell.dim == 0) continue;
        std::map<int, int> signs;  // face id -> accumulated sign
        for (int y : varset_to_vars(cell.sigma)) {
            int s = alpha(cell.sigma, y) % 2 == 0 ? 1 : -1;
            VarSet tau = cell.sigma & ~var_bit(y);
            signs[id_of.at(key(cell.gen, tau))] -= s;
            int k = order.decompose_index(multiply_vars(order.u(cell.gen), var_bit(y)));
            if ((tau & ~order.q(k)) == 0) signs[id_of.at(key(k, tau))] += s;
        }
        for (const auto& [id, s] : signs)
            if (s != 0) cell.faces.emplace_back(id, s);
    }
    return X;
}

namespace {

// Reduced homology ranks (degrees 0..top) of a face-closed set of cells,
// using the stored incidence signs and the augmentation on vertices.
std::vector<long> subcomplex_reduced_homology(const CellComplex& X,
                                              const std::vector<int>& ids) {
    if (ids.empty()) return {};
    std::unordered_map<int, int> local;  // cell id -> index within its dimension
    std::vector<long> count;
    int top = 0;
    for (int id : ids) top = std::max(top, X.cells[id].dim);
    count.assign(top + 1, 0);
    for (int id : ids) {
        int d = X.cells[id].dim;
        local[id] = static_cast<int>(count[d]++);
    }

    std::vector<SparseIntMatrix> d(top + 2);
    d[0].rows = 1;
    d[0].cols = static_cast<int>(count[0]);
    for (int i = 1; i <= top; ++i) {
        d[i].rows = static_cast<int>(count[i - 1]);
        d[i].cols = static_cast<int>(count[i]);
    }
    for (int id : ids) {
        const Cell& cell = X.cells[id];
        if (cell.dim == 0) {
            d[0].add_entry(0, local[id], 1);
            continue;
        }
        for (const auto& [fid, sign] : cell.faces) {
            auto it = local.find(fid);
            if (it == local.end())
                throw std::logic_error("subcomplex is not face-closed");
            d[cell.dim].add_entry(it->second, local[id], sign);
        }
    }

    std::vector<long> r(top + 2, 0);
    for (int i = 0; i <= top; ++i) r[i] = rank_exact(d[i]);
    std::vector<long> h(top + 1, 0);
    for (int i = 0; i <= top; ++i) h[i] = count[i] - r[i] - r[i + 1];
    return h;
}

std::vector<int> downset(const CellComplex& X, int cell_id, bool proper) {
    std::vector<bool> seen(X.cells.size(), false);
    std::vector<int> stack{cell_id}, out;
    seen[cell_id] = true;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        out.push_back(id);
        for (const auto& [fid, sign] : X.cells[id].faces)
            if (!seen[fid]) {
                seen[fid] = true;
                stack.push_back(fid);
            }
    }
    if (proper) out.erase(std::find(out.begin(), out.end(), cell_id));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CwCheck check_regular_cw(const CellComplex& X) {
    CwCheck check;
    auto fail = [&](int id, const std::string& what) {
        check.ok = false;
        check.cell_id = id;
        check.what = what;
        return check;
    };

    for (int id = 0; id < static_cast<int>(X.cells.size()); ++id) {
        const Cell& cell = X.cells[id];
        for (const auto& [fid, sign] : cell.faces) {
            if (X.cells[fid].dim != cell.dim - 1)
                return fail(id, "face list entry is not of codimension 1");
            if (sign != 1 && sign != -1)
                return fail(id, "incidence sign is not a unit");
        }
        if (cell.dim == 1) {
            // Augmented d*d = 0 and the bottom diamond: two distinct
            // endpoints with opposite signs.
            if (cell.faces.size() != 2)
                return fail(id, "edge does not have exactly two vertices");
            if (cell.faces[0].second + cell.faces[1].second != 0)
                return fail(id, "edge endpoint signs do not cancel");
        }
        if (cell.dim >= 2) {
            std::map<int, std::pair<int, int>> through;  // w -> (count, signed sum)
            for (const auto& [zid, s1] : cell.faces)
                for (const auto& [wid, s2] : X.cells[zid].faces) {
                    auto& acc = through[wid];
                    acc.first += 1;
                    acc.second += s1 * s2;
                }
            for (const auto& [wid, acc] : through) {
                if (acc.second != 0) return fail(id, "d o d != 0");
                if (acc.first != 2) return fail(id, "codimension-2 interval is not a diamond");
            }
        }
        if (cell.dim >= 1) {
            std::vector<int> boundary = downset(X, id, /*proper=*/true);
            std::vector<long> h = subcomplex_reduced_homology(X, boundary);
            for (int i = 0; i < static_cast<int>(h.size()); ++i) {
                long expect = i == cell.dim - 1 ? 1 : 0;
                if (h[i] != expect)
                    return fail(id, "cell boundary is not a homology sphere");
            }
            std::vector<int> verts;
            for (int fid : boundary)
                if (X.cells[fid].dim == 0) verts.push_back(X.cells[fid].gen);
            std::sort(verts.begin(), verts.end());
            if (verts != cell.vertex_gens)
                return fail(id, "stored vertex set disagrees with the face poset");
        } else if (cell.vertex_gens != std::vector<int>{cell.gen}) {
            return fail(id, "vertex cell with wrong vertex set");
        }
    }
    return check;
}

VarSet closure(const AdmissibleOrder& order, int j, VarSet sigma) {
    VarSet qj = order.q(j);
    if ((sigma & ~qj) != 0)
        throw std::invalid_argument("closure: sigma is not a subset of q(u)");
    int g0 = order.g_multi_index(j, sigma);
    VarSet out = 0;
    VarSet tau = 0;
    for (;;) {
        if (order.g_multi_index(j, tau) == g0) out |= tau;
        if (tau == qj) break;
        tau = (tau - qj) & qj;
    }
    return out;
}

namespace {

// Packs subsets of `ground` into dense indices 0..2^l-1.
struct SubsetCodec {
    std::vector<int> vars;  // ascending
    explicit SubsetCodec(VarSet ground) : vars(varset_to_vars(ground)) {}
    int size() const { return static_cast<int>(vars.size()); }
    VarSet unpack(unsigned packed) const {
        VarSet s = 0;
        for (int i = 0; i < size(); ++i)
            if (packed & (1u << i)) s |= var_bit(vars[i]);
        return s;
    }
    unsigned pack(VarSet s) const {
        unsigned p = 0;
        for (int i = 0; i < size(); ++i)
            if (varset_contains(s, vars[i])) p |= 1u << i;
        return p;
    }
};

}  // namespace

ClosureReport convex_geometry_report(const AdmissibleOrder& order, int j, int bound) {
    ClosureReport rep;
    rep.gen = j;
    rep.ground = order.q(j);
    const SubsetCodec codec(rep.ground);
    const int l = codec.size();
    if (l > bound)
        throw TooLargeError("convex_geometry_report: |q(u)| exceeds bound " +
                            std::to_string(bound));
    const unsigned total = 1u << l;

    std::vector<int> gval(total);
    for (unsigned s = 0; s < total; ++s)
        gval[s] = order.g_multi_index(j, codec.unpack(s));

    // c(sigma) = union of all tau with the same g-value.
    std::unordered_map<int, unsigned> group_union;
    for (unsigned s = 0; s < total; ++s) {
        auto [it, fresh] = group_union.try_emplace(gval[s], s);
        if (!fresh) it->second |= s;
    }
    rep.closure_map.resize(total);
    std::vector<unsigned> cmap(total);
    for (unsigned s = 0; s < total; ++s) {
        cmap[s] = group_union[gval[s]];
        rep.closure_map[s] = codec.unpack(cmap[s]);
    }

    auto fail = [&](const std::string& axiom, unsigned a, unsigned b, int x, int y) {
        rep.ok = false;
        rep.violated = axiom;
        rep.witness_a = codec.unpack(a);
        rep.witness_b = codec.unpack(b);
        rep.witness_x = x;
        rep.witness_y = y;
        return rep;
    };

    for (unsigned s = 0; s < total; ++s)
        if ((s & cmap[s]) != s) return fail("CO1", s, cmap[s], 0, 0);
    for (unsigned s = 0; s < total; ++s)
        for (int b = 0; b < l; ++b) {
            if (s & (1u << b)) continue;
            unsigned t = s | (1u << b);
            if ((cmap[s] & ~cmap[t]) != 0) return fail("CO2", s, t, 0, 0);
        }
    for (unsigned s = 0; s < total; ++s)
        if (cmap[cmap[s]] != cmap[s]) return fail("CO3", s, cmap[s], 0, 0);
    for (unsigned s = 0; s < total; ++s)
        for (int a = 0; a < l; ++a) {
            if (cmap[s] & (1u << a)) continue;
            for (int b = 0; b < l; ++b) {
                if (b == a || (cmap[s] & (1u << b))) continue;
                bool a_in = (cmap[s | (1u << b)] >> a) & 1;
                bool b_in = (cmap[s | (1u << a)] >> b) & 1;
                if (a_in && b_in)
                    return fail("AE", s, 0, codec.vars[a], codec.vars[b]);
            }
        }

    std::vector<unsigned> closed;
    for (unsigned s = 0; s < total; ++s)
        if (cmap[s] == s) closed.push_back(s);
    for (unsigned s : closed) rep.closed_sets.push_back(codec.unpack(s));

    // Lower covers: maximal closed proper subsets.
    std::vector<std::vector<unsigned>> covers_of(closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
        unsigned x = closed[i];
        std::vector<unsigned> cands;
        for (unsigned z : closed)
            if (z != x && (z & ~x) == 0) cands.push_back(z);
        std::sort(cands.begin(), cands.end(), [](unsigned a, unsigned b) {
            return __builtin_popcount(a) > __builtin_popcount(b);
        });
        for (unsigned z : cands) {
            bool below_accepted = false;
            for (unsigned w : covers_of[i])
                if ((z & ~w) == 0) {
                    below_accepted = true;
                    break;
                }
            if (!below_accepted) covers_of[i].push_back(z);
        }
        for (unsigned z : covers_of[i])
            rep.covers.emplace_back(codec.unpack(z), codec.unpack(x));
    }

    // Meet-distributivity: the interval from the meet of the lower covers of
    // x up to x must be Boolean.
    for (std::size_t i = 0; i < closed.size(); ++i) {
        unsigned x = closed[i];
        const auto& covs = covers_of[i];
        if (covs.empty()) continue;
        unsigned meet = x;
        for (unsigned z : covs) meet &= z;
        std::set<unsigned> meets;
        const int k = static_cast<int>(covs.size());
        for (unsigned pick = 0; pick < (1u << k); ++pick) {
            unsigned v = x;
            for (int t = 0; t < k; ++t)
                if (pick & (1u << t)) v &= covs[t];
            meets.insert(v);
        }
        std::size_t interval = 0;
        for (unsigned z : closed)
            if ((meet & ~z) == 0 && (z & ~x) == 0) ++interval;
        if (meets.size() != (1u << k) || interval != (1u << k))
            return fail("meet-distributive", x, meet, 0, 0);
    }
    return rep;
}

SimplicialComplex::SimplicialComplex(std::vector<Monomial> labels,
                                     std::vector<std::uint64_t> faces)
    : vertex_labels(std::move(labels)) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::uint64_t f : faces) {
        if (f == 0) continue;
        bool maximal = true;
        for (std::uint64_t g : faces)
            if (g != f && (f & ~g) == 0) {
                maximal = false;
                break;
            }
        if (maximal) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (std::uint64_t f : facets) d = std::max(d, __builtin_popcountll(f) - 1);
    return d;
}

bool SimplicialComplex::pure() const {
    for (std::uint64_t f : facets)
        if (__builtin_popcountll(f) - 1 != dim()) return false;
    return true;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    std::set<std::uint64_t> faces;
    for (std::uint64_t f : facets) {
        std::uint64_t s = f;
        for (;;) {
            if (s != 0) faces.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f(dim() + 1, 0);
    for (std::uint64_t face : all_faces()) ++f[__builtin_popcountll(face) - 1];
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::uint64_t face : all_faces())
        chi += (__builtin_popcountll(face) - 1) % 2 == 0 ? 1 : -1;
    return chi;
}

bool SimplicialComplex::has_face(std::uint64_t mask) const {
    for (std::uint64_t f : facets)
        if ((mask & ~f) == 0) return true;
    return false;
}

namespace {

// Faces of the stage-t complex (generators u_1..u_t added), as masks over
// order positions.
std::set<std::uint64_t> lambda_faces_up_to(const AdmissibleOrder& order, int t) {
    std::set<std::uint64_t> faces;
    for (int j = 0; j < t; ++j) {
        std::uint64_t vmask = 0;
        VarSet qj = order.q(j);
        VarSet sigma = 0;
        for (;;) {
            sigma = (sigma - qj) & qj;  // skips the empty set first
            if (sigma == 0) break;
            vmask |= std::uint64_t{1} << order.g_multi_index(j, sigma);
        }
        std::vector<std::uint64_t> cone;
        cone.push_back(std::uint64_t{1} << j);
        for (std::uint64_t f : faces)
            if ((f & ~vmask) == 0) cone.push_back(f | (std::uint64_t{1} << j));
        faces.insert(cone.begin(), cone.end());
    }
    return faces;
}

}  // namespace

SimplicialComplex build_lambda(const AdmissibleOrder& order) {
    RegularityResult reg = is_regular(order);
    if (!reg.regular)
        throw NotRegularError("build_lambda: order is not regular", *reg.witness);
    std::set<std::uint64_t> faces = lambda_faces_up_to(order, order.size());
    std::vector<Monomial> labels;
    for (int j = 0; j < order.size(); ++j) labels.push_back(order.u(j));
    return SimplicialComplex(std::move(labels),
                             std::vector<std::uint64_t>(faces.begin(), faces.end()));
}

namespace {

SimplicialComplex localize(const AdmissibleOrder& order,
                           const std::vector<std::uint64_t>& faces) {
    std::set<int> used;
    for (std::uint64_t f : faces)
        for (int v = 0; v < order.size(); ++v)
            if (f & (std::uint64_t{1} << v)) used.insert(v);
    std::vector<int> verts(used.begin(), used.end());
    std::unordered_map<int, int> local;
    std::vector<Monomial> labels;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        local[verts[i]] = static_cast<int>(i);
        labels.push_back(order.u(verts[i]));
    }
    std::vector<std::uint64_t> remapped;
    for (std::uint64_t f : faces) {
        std::uint64_t g = 0;
        for (int v : verts)
            if (f & (std::uint64_t{1} << v)) g |= std::uint64_t{1} << local[v];
        remapped.push_back(g);
    }
    return SimplicialComplex(std::move(labels), std::move(remapped));
}

}  // namespace

SimplicialComplex lambda_u(const AdmissibleOrder& order, int j) {
    RegularityResult reg = is_regular(order);
    if (!reg.regular)
        throw NotRegularError("lambda_u: order is not regular", *reg.witness);
    const SubsetCodec codec(order.q(j));
    const int l = codec.size();
    if (l == 0) return SimplicialComplex();

    std::vector<unsigned> closed;  // nonempty closed sets, packed
    for (unsigned s = 1; s < (1u << l); ++s) {
        VarSet sigma = codec.unpack(s);
        if (closure(order, j, sigma) == sigma) closed.push_back(s);
    }
    // The map sigma -> g(sigma; u) is a bijection from nonempty closed sets
    // onto the vertices of Lambda(u).
    std::unordered_map<unsigned, int> vertex;
    std::set<int> seen;
    for (unsigned s : closed) {
        int g = order.g_multi_index(j, codec.unpack(s));
        if (!seen.insert(g).second)
            throw std::logic_error("lambda_u: g is not injective on closed sets");
        vertex[s] = g;
    }

    // Faces are the chains; facets the maximal chains, found by walking
    // cover relations downward from the top q(u).
    auto is_subset = [](unsigned a, unsigned b) { return (a & ~b) == 0; };
    std::vector<std::vector<unsigned>> lower(closed.size());
    std::unordered_map<unsigned, int> index;
    for (std::size_t i = 0; i < closed.size(); ++i) index[closed[i]] = i;
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (unsigned z : closed) {
            if (z == closed[i] || !is_subset(z, closed[i])) continue;
            bool covered = false;
            for (unsigned w : closed)
                if (w != z && w != closed[i] && is_subset(z, w) && is_subset(w, closed[i])) {
                    covered = true;
                    break;
                }
            if (!covered) lower[i].push_back(z);
        }

    std::vector<std::uint64_t> facets;
    std::vector<unsigned> chain;
    unsigned top = codec.pack(closure(order, j, order.q(j)));
    auto emit = [&]() {
        std::uint64_t mask = 0;
        for (unsigned s : chain) mask |= std::uint64_t{1} << vertex[s];
        facets.push_back(mask);
    };
    std::function<void(unsigned)> walk = [&](unsigned s) {
        chain.push_back(s);
        const auto& lows = lower[index[s]];
        if (lows.empty())
            emit();
        else
            for (unsigned z : lows) walk(z);
        chain.pop_back();
    };
    walk(top);
    return localize(order, facets);
}

SimplicialComplex lambda_u_induced(const AdmissibleOrder& order, int j) {
    RegularityResult reg = is_regular(order);
    if (!reg.regular)
        throw NotRegularError("lambda_u_induced: order is not regular", *reg.witness);
    std::set<std::uint64_t> prev = lambda_faces_up_to(order, j);
    std::uint64_t vmask = 0;
    VarSet qj = order.q(j);
    VarSet sigma = 0;
    for (;;) {
        sigma = (sigma - qj) & qj;
        if (sigma == 0) break;
        vmask |= std::uint64_t{1} << order.g_multi_index(j, sigma);
    }
    std::vector<std::uint64_t> faces;
    for (std::uint64_t f : prev)
        if ((f & ~vmask) == 0) faces.push_back(f);
    return localize(order, faces);
}

std::optional<std::vector<int>> find_shelling(const SimplicialComplex& K, int bound) {
    const int t = static_cast<int>(K.facets.size());
    if (t == 0) return std::vector<int>{};
    if (!K.pure()) throw std::invalid_argument("find_shelling: complex is not pure");
    if (t > bound || t > 24)  // the subset DP table is 2^t entries
        throw TooLargeError("find_shelling: " + std::to_string(t) +
                            " facets exceed bound " + std::to_string(std::min(bound, 24)));

    // A facet F may follow the set S when the codimension-1 faces of F lying
    // in S exist (D nonzero) and every intersection F & F_i is inside one of
    // them.  Subset DP over which facets have been placed.
    auto can_follow = [&](int f, unsigned placed) {
        std::uint64_t F = K.facets[f];
        std::uint64_t D = 0;
        for (int v = 0; v < 64; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (!(F & bit)) continue;
            std::uint64_t face = F & ~bit;
            for (int i = 0; i < t; ++i)
                if ((placed & (1u << i)) && (face & ~K.facets[i]) == 0) {
                    D |= bit;
                    break;
                }
        }
        if (D == 0) return false;
        for (int i = 0; i < t; ++i)
            if ((placed & (1u << i)) && (D & ~K.facets[i]) == 0) return false;
        return true;
    };

    std::vector<signed char> reach(1u << t, 0);
    std::vector<signed char> via(1u << t, -1);
    reach[0] = 1;
    for (unsigned s = 1; s < (1u << t); ++s) {
        for (int f = 0; f < t; ++f) {
            if (!(s & (1u << f))) continue;
            unsigned prev = s & ~(1u << f);
            if (!reach[prev]) continue;
            if (prev == 0 || can_follow(f, prev)) {
                reach[s] = 1;
                via[s] = static_cast<signed char>(f);
                break;
            }
        }
    }
    unsigned full = (1u << t) - 1;
    if (!reach[full]) return std::nullopt;
    std::vector<int> out;
    for (unsigned s = full; s != 0;) {
        out.push_back(via[s]);
        s &= ~(1u << via[s]);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

CellComplex restrict_cells(const CellComplex& X, const Monomial& mu) {
    CellComplex out;
    out.nvars = X.nvars;
    out.gen_labels = X.gen_labels;
    std::vector<int> remap(X.cells.size(), -1);
    for (int id = 0; id < static_cast<int>(X.cells.size()); ++id) {
        if (!divides(X.cells[id].label, mu)) continue;
        remap[id] = static_cast<int>(out.cells.size());
        out.cells.push_back(X.cells[id]);
    }
    for (auto& cell : out.cells)
        for (auto& [fid, sign] : cell.faces) {
            if (remap[fid] < 0)
                throw std::logic_error("restrict_cells: restriction not face-closed");
            fid = remap[fid];
        }
    return out;
}

bool labeled_equal(const CellComplex& A, const CellComplex& B) {
    if (A.nvars != B.nvars || A.cells.size() != B.cells.size()) return false;
    using Key = std::pair<std::vector<std::int32_t>, VarSet>;
    auto key_of = [](const CellComplex& X, int id) {
        return Key{X.gen_labels[X.cells[id].gen].exponents(), X.cells[id].sigma};
    };
    std::map<Key, int> in_b;
    for (int id = 0; id < static_cast<int>(B.cells.size()); ++id)
        in_b[key_of(B, id)] = id;
    if (in_b.size() != B.cells.size()) return false;
    for (int id = 0; id < static_cast<int>(A.cells.size()); ++id) {
        auto it = in_b.find(key_of(A, id));
        if (it == in_b.end()) return false;
        const Cell& a = A.cells[id];
        const Cell& b = B.cells[it->second];
        if (a.label != b.label || a.dim != b.dim) return false;
        std::set<std::pair<Key, int>> fa, fb;
        for (const auto& [fid, s] : a.faces) fa.insert({key_of(A, fid), s});
        for (const auto& [fid, s] : b.faces) fb.insert({key_of(B, fid), s});
        if (fa != fb) return false;
        std::set<std::vector<std::int32_t>> va, vb;
        for (int g : a.vertex_gens) va.insert(A.gen_labels[g].exponents());
        for (int g : b.vertex_gens) vb.insert(B.gen_labels[g].exponents());
        if (va != vb) return false;
    }
    return true;
}

void flip_incidence_sign(CellComplex& X, int k) {
    int seen = 0;
    for (auto& cell : X.cells)
        for (auto& [fid, sign] : cell.faces)
            if (seen++ == k) {
                sign = -sign;
                return;
            }
    throw std::invalid_argument("flip_incidence_sign: index out of range (" +
                                std::to_string(seen) + " incidences)");
}

}  // namespace cellres
