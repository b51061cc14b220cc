// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// The regression set is fixed: uniform(2,3), uniform(2,4), uniform(3,5),
// the spanning trees of a triangle, the stable closure of x2^2 in two
// variables, the squared maximal ideal in three variables, and the
// squarefree closure of x2x3x4 in four variables.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cellres/families.hpp"
#include "cellres/homology.hpp"
#include "cellres/verify.hpp"

using namespace cellres;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::printf("CRITERION %d %-4s %s%s%s\n", criterion, ok ? "PASS" : "FAIL",
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
    std::string name;
    MonomialIdeal ideal;
    AdmissibleOrder order;
    Resolution res;
    CellComplex X;
};

std::vector<Instance> regression_set() {
    std::vector<std::pair<std::string, MonomialIdeal>> ideals;
    ideals.emplace_back("uniform(2,3)", gen_uniform(2, 3));
    ideals.emplace_back("uniform(2,4)", gen_uniform(2, 4));
    ideals.emplace_back("uniform(3,5)", gen_uniform(3, 5));
    ideals.emplace_back("graphic(K3)", gen_graphic({{1, 2}, {1, 3}, {2, 3}}));
    ideals.emplace_back("stable(x2^2)", gen_stable({parse_monomial("x2^2", 2)}, 2));
    ideals.emplace_back("m3^2", parse_ideal("x1^2,x1*x2,x2^2,x1*x3,x2*x3,x3^2", 3));
    ideals.emplace_back("sqfree(x2x3x4)",
                        gen_stable({parse_monomial("x2*x3*x4", 4)}, 4, true));

    std::vector<Instance> out;
    for (auto& [name, ideal] : ideals) {
        auto order = find_admissible_order(ideal, {true, {}});
        if (!order) {
            report(0, name, false, "no regular admissible order found");
            continue;
        }
        Resolution res = build_resolution(*order);
        CellComplex X = build_X(*order);
        out.push_back(Instance{name, ideal, *order, std::move(res), std::move(X)});
    }
    return out;
}

std::string totals_text(const BettiTable& t) {
    std::ostringstream s;
    s << "(";
    auto v = t.totals();
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ")";
    return s.str();
}

void criterion_betti(const std::vector<Instance>& set) {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (const Instance& inst : set) {
        BettiTable ht = betti_table(inst.res.complex);
        BettiTable oracle = taylor_betti(inst.ideal);
        if (!(ht == oracle)) {
            ok = false;
            detail = inst.name + ": tables differ";
            break;
        }
        if (inst.name == "uniform(2,3)" &&
            ht.totals() != std::vector<long long>{1, 3, 2}) {
            ok = false;
            detail = "anchor (1,3,2) missed: " + totals_text(ht);
            break;
        }
        if (inst.name == "m3^2" && ht.totals() != std::vector<long long>{1, 6, 8, 3}) {
            ok = false;
            detail = "anchor (1,6,8,3) missed: " + totals_text(ht);
            break;
        }
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed >= 10.0) {
        ok = false;
        detail = "too slow: " + std::to_string(elapsed) + "s";
    }
    if (ok)
        detail = std::to_string(set.size()) + " ideals, " +
                 std::to_string(elapsed).substr(0, 5) + "s";
    report(1, "betti agreement with the Taylor oracle", ok, detail);
}

void criterion_cellular_equality(const std::vector<Instance>& set) {
    for (const Instance& inst : set) {
        CheckOutcome out = cellular_matches_resolution(inst.X, inst.res);
        if (!out.ok) {
            report(2, "cellular chain complex equals the resolution", false,
                   inst.name + ": " + out.detail);
            return;
        }
    }
    report(2, "cellular chain complex equals the resolution", true,
           std::to_string(set.size()) + " ideals");
}

void criterion_support(const std::vector<Instance>& set) {
    auto start = Clock::now();
    for (const Instance& inst : set) {
        SupportCheck sup = supports_resolution(inst.X, inst.ideal);
        if (!sup.ok) {
            report(3, "supports the resolution", false,
                   inst.name + ": restriction at " + to_string(*sup.witness));
            return;
        }
        if (!verify_minimal(inst.res.complex)) {
            report(3, "supports the resolution", false, inst.name + ": not minimal");
            return;
        }
    }
    double elapsed = seconds_since(start);
    bool ok = elapsed < 30.0;
    report(3, "supports the resolution (acyclic restrictions, minimal)", ok,
           ok ? std::to_string(elapsed).substr(0, 5) + "s"
              : "too slow: " + std::to_string(elapsed) + "s");
}

void criterion_regular_cw(const std::vector<Instance>& set) {
    for (const Instance& inst : set) {
        CwCheck cw = check_regular_cw(inst.X);
        if (!cw.ok) {
            report(4, "regular CW", false, inst.name + ": " + cw.what);
            return;
        }
        if (!inst.X.cells.empty() && inst.X.cells.back().dim > 0) {
            CellComplex broken = inst.X;
            flip_incidence_sign(broken, 0);
            if (check_regular_cw(broken).ok) {
                report(4, "regular CW", false,
                       inst.name + ": fault injection went undetected");
                return;
            }
        }
    }
    report(4, "regular CW (and fault injection detected)", true,
           std::to_string(set.size()) + " ideals");
}

void criterion_convex_geometry(const std::vector<Instance>& set) {
    int checked = 0;
    for (const Instance& inst : set)
        for (int j = 0; j < inst.order.size(); ++j) {
            ClosureReport rep = convex_geometry_report(inst.order, j, 12);
            if (!rep.ok) {
                report(5, "convex geometry", false,
                       inst.name + " u_" + std::to_string(j + 1) + ": " + rep.violated);
                return;
            }
            ++checked;
        }
    report(5, "convex geometry (CO1-CO3, AE, meet-distributive)", true,
           std::to_string(checked) + " generators");
}

void criterion_shellable(const std::vector<Instance>& set) {
    int checked = 0;
    for (const Instance& inst : set)
        for (int j = 0; j < inst.order.size(); ++j) {
            SimplicialComplex lu = lambda_u(inst.order, j);
            int l = varset_size(inst.order.q(j));
            std::string where = inst.name + " u_" + std::to_string(j + 1);
            if (lu.dim() != l - 1 || !lu.pure()) {
                report(6, "shellable balls", false, where + ": not pure of dim |q|-1");
                return;
            }
            if (!find_shelling(lu, 12)) {
                report(6, "shellable balls", false, where + ": no shelling found");
                return;
            }
            if (!is_acyclic(lu)) {
                report(6, "shellable balls", false, where + ": homology nonzero");
                return;
            }
            ++checked;
        }
    report(6, "shellable balls Lambda(u)", true, std::to_string(checked) + " generators");
}

void criterion_contractible_restrictions(const std::vector<Instance>& set) {
    for (const Instance& inst : set) {
        SimplicialComplex lambda = build_lambda(inst.order);
        if (!is_acyclic(lambda)) {
            report(7, "contractibility and restrictions", false,
                   inst.name + ": Lambda has homology");
            return;
        }
        if (inst.X.euler_characteristic() != 1) {
            report(7, "contractibility and restrictions", false,
                   inst.name + ": chi(X) != 1");
            return;
        }
        CheckOutcome out = restriction_compatible(inst.order, inst.X);
        if (!out.ok) {
            report(7, "contractibility and restrictions", false,
                   inst.name + ": " + out.detail);
            return;
        }
    }
    report(7, "contractibility and restrictions", true,
           std::to_string(set.size()) + " ideals");
}

void criterion_commutation(const std::vector<Instance>& set) {
    for (const Instance& inst : set) {
        CheckOutcome out = commutation_law(inst.order);
        if (!out.ok) {
            report(8, "commutation law", false, inst.name + ": " + out.detail);
            return;
        }
    }

    // Seeded fuzzing over generated stable / squarefree / matroidal ideals.
    std::mt19937 rng(20260808);
    int fuzzed = 0;
    while (fuzzed < 100) {
        MonomialIdeal ideal(2);
        try {
            switch (fuzzed % 4) {
                case 0: {
                    int n = 2 + static_cast<int>(rng() % 4);
                    std::vector<Monomial> seeds;
                    for (int s = 0; s < 1 + static_cast<int>(rng() % 2); ++s) {
                        std::vector<std::int32_t> e(n, 0);
                        for (int d = 0; d < 2 + static_cast<int>(rng() % 3); ++d)
                            ++e[rng() % n];
                        seeds.emplace_back(e);
                    }
                    ideal = gen_stable(seeds, n, false, 48);
                    break;
                }
                case 1: {
                    int n = 3 + static_cast<int>(rng() % 4);
                    std::vector<std::int32_t> e(n, 0);
                    int deg = 2 + static_cast<int>(rng() % (n - 1));
                    while (deg > 0) {
                        int v = static_cast<int>(rng() % n);
                        if (e[v] == 0) {
                            e[v] = 1;
                            --deg;
                        }
                    }
                    ideal = gen_stable({Monomial(e)}, n, true, 48);
                    break;
                }
                case 2: {
                    int n = 3 + static_cast<int>(rng() % 4);
                    int k = 1 + static_cast<int>(rng() % (n - 1));
                    ideal = gen_uniform(k, n, 48);
                    break;
                }
                default: {
                    int nv = 3 + static_cast<int>(rng() % 3);
                    std::vector<std::pair<int, int>> edges;
                    for (int a = 1; a <= nv; ++a)
                        for (int b = a + 1; b <= nv; ++b)
                            if (b == a + 1 || rng() % 2) edges.emplace_back(a, b);
                    if (edges.size() > 8) continue;
                    ideal = gen_graphic(edges, 48);
                    break;
                }
            }
        } catch (const TooLargeError&) {
            continue;
        }
        auto order = find_admissible_order(ideal, {true, {}});
        if (!order) {
            report(8, "commutation law", false,
                   "fuzz case " + std::to_string(fuzzed) + ": no regular order for a " +
                       "generated family ideal");
            return;
        }
        CheckOutcome out = commutation_law(*order);
        if (!out.ok) {
            report(8, "commutation law", false,
                   "fuzz case " + std::to_string(fuzzed) + ": " + out.detail);
            return;
        }
        ++fuzzed;
    }
    report(8, "commutation law g(y g(zu)) = g(z g(yu))", true,
           std::to_string(set.size()) + " ideals + 100 fuzzed");
}

void criterion_negative_control() {
    // CLI half: the pairwise-coprime ideal has no admissible order.
    bool cli_ok = true;
    std::string cli_detail;
    const char* bin = std::getenv("CELLRES_BIN");
    if (bin) {
        std::string cmd = std::string(bin) + " order 'x1*x2, x3*x4' -n 4 > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        if (code != 2) {
            cli_ok = false;
            cli_detail = "expected exit 2, got " + std::to_string(code);
        }
    } else {
        cli_detail = "CELLRES_BIN not set; library check only";
    }
    if (find_admissible_order(parse_ideal("x1*x2, x3*x4", 4))) {
        report(9, "negative control", false, "found an order for x1x2, x3x4");
        return;
    }

    // A deliberately non-admissible permutation of a stable ideal.
    MonomialIdeal stable = gen_stable({parse_monomial("x2^2", 2)}, 2);
    AdmissibleCheck check = is_admissible(stable, {2, 0, 1});
    bool witness_ok = check.status == AdmissibleStatus::NotLinear && check.step == 2 &&
                      check.witness && *check.witness == parse_monomial("x2^2", 2);
    report(9, "negative control", cli_ok && witness_ok,
           witness_ok ? cli_detail : "is_admissible witness missing");
}

}  // namespace

int main() {
    auto start = Clock::now();
    std::vector<Instance> set = regression_set();
    if (set.size() != 7) {
        std::printf("FATAL regression set incomplete (%zu of 7)\n", set.size());
        return 1;
    }
    criterion_betti(set);
    criterion_cellular_equality(set);
    criterion_support(set);
    criterion_regular_cw(set);
    criterion_convex_geometry(set);
    criterion_shellable(set);
    criterion_contractible_restrictions(set);
    criterion_commutation(set);
    criterion_negative_control();
    std::printf("%d criterion(s) failed; total %.2fs\n", failures, seconds_since(start));
    return failures == 0 ? 0 : 1;
}
