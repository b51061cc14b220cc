#include "cellres/linear_quotients.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cellres {

ColonResult colon_variable_set(const std::vector<Monomial>& prefix, const Monomial& u) {
    if (prefix.empty()) throw std::invalid_argument("colon_variable_set: empty prefix");
    std::vector<Monomial> quotients;
    quotients.reserve(prefix.size());
    for (const auto& p : prefix)
        quotients.push_back(divide_exact(lcm(p, u), u));
    std::vector<Monomial> mins = minimalize(quotients);
    ColonResult res;
    VarSet vars = 0;
    for (const auto& m : mins) {
        if (m.degree() != 1) {
            res.linear = false;
            res.offender = m;
            return res;
        }
        for (int v = 1; v <= m.vars(); ++v)
            if (m.exponent(v) == 1) vars |= var_bit(v);
    }
    res.linear = true;
    res.vars = vars;
    return res;
}

int AdmissibleOrder::decompose_index(const Monomial& v) const {
    for (int j = 0; j < size(); ++j)
        if (divides(u(j), v)) return j;
    throw NotInIdealError("decompose: " + to_string(v) + " is not in the ideal");
}

int AdmissibleOrder::g_multi_index(int j, VarSet sigma) const {
    if ((sigma & ~q(j)) != 0)
        throw std::invalid_argument("g_multi: sigma is not a subset of q(u)");
    if (sigma == 0) return j;
    return decompose_index(multiply_vars(u(j), sigma));
}

AdmissibleCheck is_admissible(const MonomialIdeal& ideal, const std::vector<int>& perm) {
    const int m = ideal.size();
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("is_admissible: order is not a permutation of G(I)");
    std::vector<bool> seen(m, false);
    for (int i : perm) {
        if (i < 0 || i >= m || seen[i])
            throw std::invalid_argument("is_admissible: order is not a permutation of G(I)");
        seen[i] = true;
    }

    AdmissibleCheck check;
    std::vector<VarSet> qsets(m, 0);
    std::vector<Monomial> prefix;
    for (int j = 0; j < m; ++j) {
        const Monomial& uj = ideal.gen(perm[j]);
        if (j > 0 && ideal.gen(perm[j - 1]).degree() > uj.degree()) {
            check.status = AdmissibleStatus::NotDegreeIncreasing;
            check.step = j + 1;
            return check;
        }
        if (j > 0) {
            ColonResult colon = colon_variable_set(prefix, uj);
            if (!colon.linear) {
                check.status = AdmissibleStatus::NotLinear;
                check.step = j + 1;
                check.witness = colon.offender;
                return check;
            }
            qsets[j] = colon.vars;
        }
        prefix.push_back(uj);
    }
    check.order = AdmissibleOrder(ideal, perm, std::move(qsets));
    return check;
}

RegularityResult is_regular(const AdmissibleOrder& order) {
    RegularityResult res;
    for (int j = 0; j < order.size(); ++j) {
        VarSet qj = order.q(j);
        for (int y : varset_to_vars(qj)) {
            int k = order.decompose_index(multiply_vars(order.u(j), var_bit(y)));
            VarSet extra = order.q(k) & ~qj;
            if (extra != 0) {
                res.regular = false;
                res.witness = RegularityWitness{j + 1, y, varset_to_vars(extra).front()};
                return res;
            }
        }
    }
    res.regular = true;
    return res;
}

namespace {

struct OrderSearch {
    const MonomialIdeal& ideal;
    bool require_regular;
    std::vector<int> candidates;  // gen indices in trial order
    std::vector<int> perm;
    std::vector<VarSet> qsets;
    std::vector<Monomial> prefix;
    std::vector<bool> used;

    // New step regularity: only constraints mentioning the freshly appended
    // u_j can fail, since q-sets and g-values of the prefix are final.
    bool step_regular(VarSet qj) const {
        const int j = static_cast<int>(perm.size());  // position of the new step
        const Monomial& uj = ideal.gen(perm.back());
        for (int y : varset_to_vars(qj)) {
            Monomial yu = multiply_vars(uj, var_bit(y));
            int k = -1;
            for (int i = 0; i < j; ++i) {
                if (divides(ideal.gen(perm[i]), yu)) { k = i; break; }
            }
            // y in q(u_j) guarantees some earlier generator divides y*u_j.
            if ((qsets[k] & ~qj) != 0) return false;
        }
        return true;
    }

    bool dfs() {
        if (perm.size() == ideal.gens().size()) return true;
        long last_deg = prefix.empty() ? 0 : prefix.back().degree();
        for (int c : candidates) {
            if (used[c]) continue;
            const Monomial& g = ideal.gen(c);
            if (g.degree() < last_deg) continue;
            VarSet qj = 0;
            if (!prefix.empty()) {
                ColonResult colon = colon_variable_set(prefix, g);
                if (!colon.linear) continue;
                qj = colon.vars;
            }
            perm.push_back(c);
            qsets.push_back(qj);
            if (!require_regular || step_regular(qj)) {
                prefix.push_back(g);
                used[c] = true;
                if (dfs()) return true;
                used[c] = false;
                prefix.pop_back();
            }
            perm.pop_back();
            qsets.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<AdmissibleOrder> find_admissible_order(const MonomialIdeal& ideal,
                                                     const OrderSearchOptions& opts) {
    if (ideal.is_zero())
        throw std::invalid_argument("find_admissible_order: zero ideal");
    OrderSearch search{ideal, opts.require_regular, {}, {}, {}, {},
                       std::vector<bool>(ideal.size(), false)};
    search.candidates.resize(ideal.size());
    std::iota(search.candidates.begin(), search.candidates.end(), 0);
    if (opts.shuffle_seed) {
        std::mt19937 rng(*opts.shuffle_seed);
        std::shuffle(search.candidates.begin(), search.candidates.end(), rng);
        // Keep the degree filter cheap: candidates stay degree-sorted, the
        // shuffle only permutes within degree blocks.
        std::stable_sort(search.candidates.begin(), search.candidates.end(),
                         [&](int a, int b) {
                             return ideal.gen(a).degree() < ideal.gen(b).degree();
                         });
    }
    if (!search.dfs()) return std::nullopt;
    return AdmissibleOrder(ideal, std::move(search.perm), std::move(search.qsets));
}

AdmissibleOrder induced_order(const AdmissibleOrder& order, const Monomial& mu) {
    MonomialIdeal restricted = restrict_below(order.ideal(), mu);
    if (restricted.is_zero())
        throw std::invalid_argument("induced_order: restriction is the zero ideal");
    std::vector<int> perm;
    for (int j = 0; j < order.size(); ++j) {
        if (!divides(order.u(j), mu)) continue;
        int idx = restricted.index_of(order.u(j));
        perm.push_back(idx);
    }
    AdmissibleCheck check = is_admissible(restricted, perm);
    if (!check.ok())
        throw std::logic_error("induced_order: restricted subsequence is not admissible");
    return *std::move(check.order);
}

}  // namespace cellres
