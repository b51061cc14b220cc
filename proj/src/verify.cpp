#include "cellres/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cellres {

namespace {

CheckOutcome fail(std::string detail) { return CheckOutcome{false, std::move(detail)}; }

}  // namespace

CheckOutcome cellular_matches_resolution(const CellComplex& X, const Resolution& res) {
    const FreeComplex& fc = res.complex;
    // Cell ids per (gen, sigma).
    std::map<std::pair<int, VarSet>, int> cell_id;
    for (int id = 0; id < static_cast<int>(X.cells.size()); ++id)
        cell_id[{X.cells[id].gen, X.cells[id].sigma}] = id;
    if (cell_id.size() != X.cells.size()) return fail("duplicate cells");

    std::size_t basis_count = 0;
    for (std::size_t d = 1; d < res.basis.size(); ++d) basis_count += res.basis[d].size();
    if (basis_count != X.cells.size())
        return fail("cell count differs from non-unit basis count");

    for (std::size_t d = 1; d < res.basis.size(); ++d) {
        const auto& level = res.basis[d];
        for (int r = 0; r < static_cast<int>(level.size()); ++r) {
            auto it = cell_id.find({level[r].gen, level[r].sigma});
            if (it == cell_id.end()) return fail("basis element without a cell");
            const Cell& cell = X.cells[it->second];
            if (cell.dim != static_cast<int>(d) - 1)
                return fail("homological degree does not match dimension + 1");
            if (cell.label != fc.multidegrees[d][r])
                return fail("cell label differs from basis multidegree");

            // Collect the resolution row as (target cell, sign, mono).
            std::set<std::tuple<int, long long, std::vector<std::int32_t>>> from_res;
            for (const auto& e : fc.maps[d - 1].entries) {
                if (e.row != r) continue;
                if (d == 1) {
                    // Bottom map: u * [1]; matches the augmentation by
                    // convention, with sign +1 and coefficient the label.
                    if (e.coeff != 1 || e.mono != cell.label)
                        return fail("bottom map is not +1 times the label");
                    continue;
                }
                const ResBasis& target = res.basis[d - 1][e.col];
                auto jt = cell_id.find({target.gen, target.sigma});
                if (jt == cell_id.end()) return fail("entry target has no cell");
                from_res.insert({jt->second, e.coeff, e.mono.exponents()});
            }
            std::set<std::tuple<int, long long, std::vector<std::int32_t>>> from_cells;
            for (const auto& [fid, sign] : cell.faces)
                from_cells.insert(
                    {fid, sign,
                     divide_exact(cell.label, X.cells[fid].label).exponents()});
            if (from_res != from_cells)
                return fail("incidences differ at cell " + std::to_string(it->second));
        }
    }
    return {};
}

CheckOutcome commutation_law(const AdmissibleOrder& order) {
    for (int j = 0; j < order.size(); ++j) {
        std::vector<int> q = varset_to_vars(order.q(j));
        for (std::size_t a = 0; a < q.size(); ++a)
            for (std::size_t b = a + 1; b < q.size(); ++b) {
                Monomial gy = order.decompose(multiply_vars(order.u(j), var_bit(q[a])));
                Monomial gz = order.decompose(multiply_vars(order.u(j), var_bit(q[b])));
                Monomial lhs = order.decompose(multiply_vars(gz, var_bit(q[a])));
                Monomial rhs = order.decompose(multiply_vars(gy, var_bit(q[b])));
                if (lhs != rhs)
                    return fail("commutation fails at u_" + std::to_string(j + 1) +
                                " with y=x" + std::to_string(q[a]) + ", z=x" +
                                std::to_string(q[b]));
            }
    }
    return {};
}

CheckOutcome distinct_vertex_sets(const CellComplex& X) {
    std::set<std::vector<int>> seen;
    for (const Cell& c : X.cells)
        if (!seen.insert(c.vertex_gens).second)
            return fail("two cells share the vertex set of B(" +
                        varset_to_string(c.sigma) + ", " +
                        to_string(X.gen_labels[c.gen]) + ")");
    return {};
}

CheckOutcome subdivision_consistent(const CellComplex& X, const SimplicialComplex& lambda) {
    std::set<std::vector<std::int32_t>> xv, lv;
    for (const Cell& c : X.cells)
        if (c.dim == 0) xv.insert(c.label.exponents());
    for (const Monomial& v : lambda.vertex_labels) lv.insert(v.exponents());
    if (xv != lv) return fail("vertex sets differ");
    if (X.euler_characteristic() != lambda.euler_characteristic())
        return fail("Euler characteristics differ");
    if (reduced_homology_ranks(X) != reduced_homology_ranks(lambda))
        return fail("reduced homology differs");

    std::vector<int> maximal = X.maximal_cells();
    for (std::uint64_t facet : lambda.facets) {
        std::vector<int> verts;
        for (int v = 0; v < lambda.vertex_count(); ++v)
            if (facet & (std::uint64_t{1} << v)) verts.push_back(v);
        int carriers = 0;
        for (int id : maximal) {
            const auto& cv = X.cells[id].vertex_gens;
            bool inside = std::all_of(verts.begin(), verts.end(), [&](int v) {
                return std::binary_search(cv.begin(), cv.end(), v);
            });
            if (inside) ++carriers;
        }
        if (carriers != 1)
            return fail("a facet of the subdivision lies in " +
                        std::to_string(carriers) + " maximal cells");
    }
    return {};
}

CheckOutcome restriction_compatible(const AdmissibleOrder& order, const CellComplex& X) {
    int checked = 0;
    for (const Monomial& mu : lcm_closure(order.ideal())) {
        AdmissibleOrder ind = induced_order(order, mu);
        RegularityResult reg = is_regular(ind);
        if (!reg.regular)
            return fail("induced order at " + to_string(mu) + " is not regular");
        CellComplex restricted = restrict_cells(X, mu);
        if (!labeled_equal(restricted, build_X(ind)))
            return fail("restriction at " + to_string(mu) +
                        " differs from the restricted construction");
        if (!is_acyclic(restricted))
            return fail("restriction at " + to_string(mu) + " is not acyclic");
        ++checked;
    }
    return {true, std::to_string(checked) + " multidegrees"};
}

VerifyReport run_full_verify(const AdmissibleOrder& order, const VerifyOptions& opts) {
    VerifyReport report;
    auto guarded = [&](const std::string& name, const std::function<CheckOutcome()>& run) {
        CheckOutcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = fail(e.what());
        }
        report.add(name, std::move(outcome));
    };

    Resolution res = build_resolution(order);
    CellComplex X = build_X(order);
    if (opts.flip_sign >= 0) flip_incidence_sign(X, opts.flip_sign);

    guarded("resolution: d o d = 0 and homogeneous", [&] {
        ComplexCheck c = verify_complex(res.complex);
        return c.ok ? CheckOutcome{}
                    : fail(c.what + " at map " + std::to_string(c.map_degree) + " (" +
                           std::to_string(c.row) + "," + std::to_string(c.col) + ")");
    });
    guarded("resolution: minimal (no unit entries)", [&] {
        return verify_minimal(res.complex) ? CheckOutcome{} : fail("unit entry present");
    });
    guarded("betti table matches taylor oracle", [&]() -> CheckOutcome {
        if (order.size() > opts.taylor_bound)
            return {true, "skipped: m exceeds the oracle bound"};
        BettiTable ht = betti_table(res.complex);
        BettiTable oracle = taylor_betti(order.ideal(), opts.taylor_bound);
        return ht == oracle ? CheckOutcome{} : fail("tables differ");
    });
    guarded("cell complex: regular CW", [&] {
        CwCheck c = check_regular_cw(X);
        return c.ok ? CheckOutcome{}
                    : fail(c.what + " (cell " + std::to_string(c.cell_id) + ")");
    });
    guarded("cellular chain complex equals resolution",
            [&] { return cellular_matches_resolution(X, res); });
    guarded("supports resolution (all restrictions acyclic)", [&] {
        SupportCheck c = supports_resolution(X, order.ideal());
        return c.ok ? CheckOutcome{true, std::to_string(c.checked) + " multidegrees"}
                    : fail("not acyclic at " + to_string(*c.witness));
    });

    SimplicialComplex lambda = build_lambda(order);
    guarded("contractible: chi(X) = 1", [&] {
        return X.euler_characteristic() == 1 ? CheckOutcome{} : fail("chi differs");
    });
    guarded("contractible: reduced homology of Lambda vanishes", [&] {
        std::vector<long> h = reduced_homology_ranks(lambda);
        return std::all_of(h.begin(), h.end(), [](long x) { return x == 0; })
                   ? CheckOutcome{}
                   : fail("nonzero reduced homology");
    });
    guarded("subdivision consistent with X",
            [&] { return subdivision_consistent(X, lambda); });

    guarded("convex geometry at every generator", [&]() -> CheckOutcome {
        for (int j = 0; j < order.size(); ++j) {
            ClosureReport rep = convex_geometry_report(order, j, opts.convex_bound);
            if (!rep.ok)
                return fail(rep.violated + " fails at u_" + std::to_string(j + 1));
        }
        return {true, std::to_string(order.size()) + " generators"};
    });
    guarded("Lambda(u): shellable ball at every generator", [&]() -> CheckOutcome {
        for (int j = 0; j < order.size(); ++j) {
            SimplicialComplex lu = lambda_u(order, j);
            SimplicialComplex li = lambda_u_induced(order, j);
            if (!(lu.vertex_count() == li.vertex_count() && lu.facets == li.facets &&
                  lu.vertex_labels == li.vertex_labels))
                return fail("order-complex and induced constructions differ at u_" +
                            std::to_string(j + 1));
            int l = varset_size(order.q(j));
            if (lu.dim() != l - 1 || !lu.pure())
                return fail("Lambda(u_" + std::to_string(j + 1) +
                            ") is not pure of dimension |q|-1");
            if (!find_shelling(lu, opts.shelling_bound))
                return fail("no shelling for Lambda(u_" + std::to_string(j + 1) + ")");
            if (!is_acyclic(lu))
                return fail("Lambda(u_" + std::to_string(j + 1) + ") is not acyclic");
        }
        return {true, std::to_string(order.size()) + " generators"};
    });
    guarded("restrictions match restricted construction",
            [&] { return restriction_compatible(order, X); });
    guarded("decomposition commutation law", [&] { return commutation_law(order); });
    guarded("distinct vertex sets", [&] { return distinct_vertex_sets(X); });
    return report;
}

}  // namespace cellres
