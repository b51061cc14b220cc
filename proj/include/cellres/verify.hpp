#ifndef CELLRES_VERIFY_HPP
#define CELLRES_VERIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "cellres/cell_complex.hpp"
#include "cellres/homology.hpp"
#include "cellres/linear_quotients.hpp"
#include "cellres/resolution.hpp"

namespace cellres {

struct CheckOutcome {
    bool ok = true;
    std::string detail;
};

// The signed cellular chain complex of X (with augmentation) equals the
// resolution matrices entry for entry under the (sigma, u) bijection, with
// each monomial coefficient the ratio of cell labels.
CheckOutcome cellular_matches_resolution(const CellComplex& X, const Resolution& res);

// g(y g(z u)) = g(z g(y u)) for every generator u and y, z in q(u).
CheckOutcome commutation_law(const AdmissibleOrder& order);

// Distinct cells carry distinct vertex sets.
CheckOutcome distinct_vertex_sets(const CellComplex& X);

// Vertex sets agree, Euler characteristics and reduced homology agree, and
// every facet of Lambda lies vertex-wise in exactly one maximal cell of X.
CheckOutcome subdivision_consistent(const CellComplex& X, const SimplicialComplex& lambda);

// For every mu in the lcm closure: the label restriction of X equals the
// complex built from the induced order of the restricted ideal (which must
// again be regular), and is acyclic.
CheckOutcome restriction_compatible(const AdmissibleOrder& order, const CellComplex& X);

struct VerifyOptions {
    int flip_sign = -1;       // fault injection: flip this incidence sign in X
    int shelling_bound = 12;
    int convex_bound = 12;
    int taylor_bound = 14;
};

struct VerifyReport {
    std::vector<std::pair<std::string, CheckOutcome>> checks;
    bool all_ok = true;

    void add(const std::string& name, CheckOutcome outcome) {
        all_ok = all_ok && outcome.ok;
        checks.emplace_back(name, std::move(outcome));
    }
};

// The whole battery for one regular order, each check caged so a failure
// (or an exception) is reported and the rest still run.
VerifyReport run_full_verify(const AdmissibleOrder& order, const VerifyOptions& opts = {});

}  // namespace cellres

#endif
