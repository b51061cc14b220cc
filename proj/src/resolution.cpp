#include "cellres/resolution.hpp"

#include <algorithm>
#include <map>

namespace cellres {

int alpha(VarSet sigma, int y) {
    if (!varset_contains(sigma, y))
        throw std::invalid_argument("alpha: variable not in the set");
    return varset_size(sigma & (var_bit(y) - 1));
}

std::vector<int> FreeComplex::ranks() const {
    std::vector<int> out;
    out.reserve(multidegrees.size());
    for (const auto& level : multidegrees)
        out.push_back(static_cast<int>(level.size()));
    return out;
}

int Resolution::basis_index(int hdeg, VarSet sigma, int gen) const {
    if (hdeg < 0 || hdeg >= static_cast<int>(basis.size())) return -1;
    const auto& level = basis[hdeg];
    for (int i = 0; i < static_cast<int>(level.size()); ++i)
        if (level[i].sigma == sigma && level[i].gen == gen) return i;
    return -1;
}

namespace {

Resolution build_impl(const AdmissibleOrder& order) {
    const int m = order.size();
    int max_q = 0;
    for (int j = 0; j < m; ++j) max_q = std::max(max_q, varset_size(order.q(j)));
    const int length = m == 0 ? 0 : max_q + 1;

    Resolution res{order, {}, {}};
    auto& fc = res.complex;
    fc.multidegrees.resize(length + 1);
    res.basis.resize(length + 1);

    const int nvars = order.ideal().vars();
    fc.multidegrees[0].push_back(Monomial(nvars));  // the basis element 1
    res.basis[0].push_back(ResBasis{0, -1});
    if (m == 0) return res;

    // Dense lookup (gen, sigma) -> position within its homological degree.
    std::vector<std::unordered_map<VarSet, int>> position(m);
    for (int j = 0; j < m; ++j) {
        VarSet qj = order.q(j);
        // All subsets of q(u_j), ascending as integers.
        VarSet sigma = 0;
        for (;;) {
            int hdeg = varset_size(sigma) + 1;
            position[j][sigma] = static_cast<int>(res.basis[hdeg].size());
            res.basis[hdeg].push_back(ResBasis{sigma, j});
            fc.multidegrees[hdeg].push_back(order.sigma_multidegree(j, sigma));
            if (sigma == qj) break;
            sigma = (sigma - qj) & qj;  // next subset of qj
        }
    }

    fc.maps.resize(length);
    for (int d = 1; d <= length; ++d) fc.maps[d - 1].degree = d;

    // Bottom map: f(empty, u) -> u * [1].
    for (int r = 0; r < static_cast<int>(res.basis[1].size()); ++r) {
        int j = res.basis[1][r].gen;
        fc.maps[0].entries.push_back(MapEntry{r, 0, 1, order.u(j)});
    }

    // partial = delta - mu on f(sigma; u), per y in sigma:
    //   mu-term:    -(-1)^alpha * y            on f(sigma-y, u)
    //   delta-term: +(-1)^alpha * y*u/g(y*u)   on f(sigma-y, g(y*u)),
    // the latter only when sigma-y is a subset of q(g(y*u)).
    for (int d = 2; d <= length; ++d) {
        auto& dmap = fc.maps[d - 1];
        const auto& level = res.basis[d];
        for (int r = 0; r < static_cast<int>(level.size()); ++r) {
            VarSet sigma = level[r].sigma;
            int j = level[r].gen;
            std::map<int, long long> acc;  // target column -> integer coefficient
            for (int y : varset_to_vars(sigma)) {
                long long sign = alpha(sigma, y) % 2 == 0 ? 1 : -1;
                VarSet tau = sigma & ~var_bit(y);
                acc[position[j].at(tau)] -= sign;
                Monomial yu = multiply_vars(order.u(j), var_bit(y));
                int k = order.decompose_index(yu);
                if ((tau & ~order.q(k)) == 0)
                    acc[position[k].at(tau)] += sign;
            }
            for (const auto& [col, coeff] : acc) {
                if (coeff == 0) continue;
                const ResBasis& target = res.basis[d - 1][col];
                Monomial ratio = divide_exact(
                    fc.multidegrees[d][r],
                    order.sigma_multidegree(target.gen, target.sigma));
                dmap.entries.push_back(MapEntry{r, col, coeff, std::move(ratio)});
            }
        }
    }
    return res;
}

}  // namespace

Resolution build_resolution(const AdmissibleOrder& order) {
    RegularityResult reg = is_regular(order);
    if (!reg.regular)
        throw NotRegularError(
            "build_resolution: order is not regular at step " +
                std::to_string(reg.witness->step) + " (y=x" +
                std::to_string(reg.witness->var_y) + ", offending x" +
                std::to_string(reg.witness->var_z) + ")",
            *reg.witness);
    return build_impl(order);
}

Resolution build_resolution_unchecked(const AdmissibleOrder& order) {
    return build_impl(order);
}

ComplexCheck verify_complex(const FreeComplex& fc) {
    ComplexCheck check;
    // Multidegree homogeneity of every entry.
    for (const auto& dmap : fc.maps) {
        for (const auto& e : dmap.entries) {
            const Monomial& src = fc.multidegrees[dmap.degree][e.row];
            const Monomial& dst = fc.multidegrees[dmap.degree - 1][e.col];
            if (multiply(dst, e.mono) != src) {
                check.ok = false;
                check.what = "entry not multidegree-homogeneous";
                check.map_degree = dmap.degree;
                check.row = e.row;
                check.col = e.col;
                return check;
            }
        }
    }
    // d_{i-1} o d_i = 0 over the polynomial ring.  Entries are monomials
    // with integer coefficients, so compose termwise and cancel exactly.
    for (std::size_t i = 1; i < fc.maps.size(); ++i) {
        const auto& hi = fc.maps[i];       // degree i+1 -> i
        const auto& lo = fc.maps[i - 1];   // degree i   -> i-1
        std::vector<std::vector<const MapEntry*>> by_row(fc.multidegrees[i].size());
        for (const auto& e : lo.entries) by_row[e.row].push_back(&e);

        std::map<std::pair<int, int>, std::map<std::vector<std::int32_t>, long long>> prod;
        for (const auto& e : hi.entries)
            for (const MapEntry* f : by_row[e.col])
                prod[{e.row, f->col}][multiply(e.mono, f->mono).exponents()] +=
                    e.coeff * f->coeff;
        for (const auto& [rc, terms] : prod) {
            for (const auto& [mono, coeff] : terms) {
                if (coeff != 0) {
                    check.ok = false;
                    check.what = "d o d != 0";
                    check.map_degree = hi.degree;
                    check.row = rc.first;
                    check.col = rc.second;
                    return check;
                }
            }
        }
    }
    return check;
}

bool verify_minimal(const FreeComplex& fc) {
    for (const auto& dmap : fc.maps)
        for (const auto& e : dmap.entries)
            if (e.mono.degree() == 0) return false;
    return true;
}

BettiTable betti_table(const FreeComplex& fc) {
    BettiTable table;
    for (int i = 0; i < static_cast<int>(fc.multidegrees.size()); ++i)
        for (const auto& deg : fc.multidegrees[i]) table.add(i, deg, 1);
    return table;
}

}  // namespace cellres
