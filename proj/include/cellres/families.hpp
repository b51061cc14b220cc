#ifndef CELLRES_FAMILIES_HPP
#define CELLRES_FAMILIES_HPP

#include <utility>
#include <vector>

#include "cellres/monomial.hpp"

namespace cellres {

// Closure of the seeds under the stable exchange m -> x_i * m / x_max(m)
// for i < max(m), minimalized.  With squarefree set, the exchange runs at
// every divisor position (m -> x_i * m / x_j for x_j | m, i < j, x_i not
// dividing m) and only squarefree monomials are kept, so the closure covers
// the squarefree shifted families.
MonomialIdeal gen_stable(const std::vector<Monomial>& seeds, int nvars,
                         bool squarefree = false, int cap = 64);

// All squarefree degree-k monomials in n variables (bases of the uniform
// matroid).
MonomialIdeal gen_uniform(int k, int n, int cap = 64);

// One variable per edge; generators are the spanning trees of the graph.
// Vertices are the integers named by the edge list.
MonomialIdeal gen_graphic(const std::vector<std::pair<int, int>>& edges, int cap = 64);

}  // namespace cellres

#endif
