#ifndef CELLRES_HOMOLOGY_HPP
#define CELLRES_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include "cellres/betti_table.hpp"
#include "cellres/cell_complex.hpp"
#include "cellres/exact_linalg.hpp"
#include "cellres/monomial.hpp"
#include "cellres/resolution.hpp"

namespace cellres {

// Chain complex over the integers with homology taken over the rationals.
// maps[i] sends degree i to degree i-1; maps[0] is the augmentation (an
// all-ones row for reduced homology, an empty matrix otherwise).
struct ChainComplex {
    std::vector<long> ranks;
    std::vector<SparseIntMatrix> maps;

    // Verifies maps[i-1] * maps[i] = 0.
    bool boundary_squares_to_zero() const;
    std::vector<long> homology() const;  // ranks per degree over the rationals
};

ChainComplex chain_complex(const SimplicialComplex& K, bool augmented = true);
// Throws BoundaryNotComplexError when the stored incidences do not square
// to zero.
ChainComplex chain_complex(const CellComplex& X, bool augmented = true);

std::vector<long> reduced_homology_ranks(const SimplicialComplex& K);
std::vector<long> reduced_homology_ranks(const CellComplex& X);

// The empty complex counts as acyclic, so label restrictions below every
// generator are vacuous.
bool is_acyclic(const SimplicialComplex& K);
bool is_acyclic(const CellComplex& X);

// Multigraded Betti numbers of S/I from the Taylor complex: cells are
// generator subsets labelled by their lcm; after tensoring with the residue
// field only boundary entries with unit lcm ratio survive, and the complex
// splits into strands by exact label.  Independent of everything except
// monomial arithmetic; this is the oracle the resolution is checked against.
BettiTable taylor_betti(const MonomialIdeal& ideal, int bound = 14);
BettiTable taylor_betti_gens(const std::vector<Monomial>& gens, int bound = 14);

// The full Taylor complex of an arbitrary generating set, as a free
// complex (basis = subsets, differential scaled by lcm ratios).
FreeComplex taylor_free_complex(const std::vector<Monomial>& gens, int bound = 14);

// All lcms of nonempty subsets of G(I).
std::vector<Monomial> lcm_closure(const MonomialIdeal& ideal);

struct SupportCheck {
    bool ok = true;
    std::optional<Monomial> witness;  // first multidegree whose restriction fails
    int checked = 0;
};

// The labelled-complex criterion: X supports a resolution of S/I iff the
// subcomplex of cells with label dividing b is acyclic for every b in the
// lcm closure (plus every cell label).
SupportCheck supports_resolution(const CellComplex& X, const MonomialIdeal& ideal);

}  // namespace cellres

#endif
