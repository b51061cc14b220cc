#ifndef CELLRES_CELL_COMPLEX_HPP
#define CELLRES_CELL_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellres/linear_quotients.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

// The labelled cell complex supporting the resolution of an ideal with a
// regular linear quotient.  Cells are the pairs (sigma, u) with sigma a
// subset of q(u); the cell of dimension |sigma| carries the label
// u * prod(sigma) and has vertex set {g(tau; u) : tau subset of sigma}.
// Codimension-one faces of (sigma, u) are
//   (sigma - y, u)          for every y in sigma, and
//   (sigma - y, g(y*u))     for those y with sigma - y inside q(g(y*u)),
// with incidence signs -(-1)^alpha(sigma;y) and +(-1)^alpha(sigma;y), so
// that the signed cellular chain complex reproduces delta - mu exactly.

struct Cell {
    VarSet sigma = 0;
    int gen = -1;  // order position of u
    int dim = 0;
    Monomial label;
    std::vector<int> vertex_gens;            // order positions, ascending
    std::vector<std::pair<int, int>> faces;  // (cell id, incidence sign)
};

struct CellComplex {
    int nvars = 0;
    std::vector<Monomial> gen_labels;  // order position -> generator monomial
    std::vector<Cell> cells;           // sorted by (dim, gen, sigma); id = index

    int dim() const;
    std::vector<int> f_vector() const;  // counts per dimension
    long euler_characteristic() const;
    std::vector<int> maximal_cells() const;  // ids of cells that are no one's face
    int find_cell(VarSet sigma, int gen) const;
};

CellComplex build_X(const AdmissibleOrder& order);  // throws NotRegularError

struct CwCheck {
    bool ok = true;
    std::string what;
    int cell_id = -1;
};

// Regular-CW validation: boundary squares to zero (with the augmentation),
// every codimension-2 interval is a diamond, every cell boundary has the
// reduced homology of a sphere of the right dimension, and the stored
// vertex sets agree with the face poset.
CwCheck check_regular_cw(const CellComplex& X);

// Largest tau inside q(u_j) with g(tau; u_j) = g(sigma; u_j), computed by
// enumeration; well defined because g(d1;u) = g(d2;u) forces
// g(d1 u d2; u) to agree with both.
VarSet closure(const AdmissibleOrder& order, int j, VarSet sigma);

struct ClosureReport {
    int gen = -1;
    VarSet ground = 0;
    std::vector<VarSet> closure_map;   // indexed by subset of ground (packed)
    std::vector<VarSet> closed_sets;   // ascending as integers
    std::vector<std::pair<VarSet, VarSet>> covers;  // (lower, upper)
    bool ok = true;
    std::string violated;  // "CO1"/"CO2"/"CO3"/"AE"/"meet-distributive"
    VarSet witness_a = 0, witness_b = 0;
    int witness_x = 0, witness_y = 0;
};

// Exhaustively verifies that (q(u), closure) is a convex geometry (CO1-CO3
// and anti-exchange) and that the lattice of closed sets is
// meet-distributive.  Enumerates all 2^|q(u)| subsets; |q(u)| <= bound.
ClosureReport convex_geometry_report(const AdmissibleOrder& order, int j, int bound = 12);

// Abstract simplicial complex with monomial-labelled vertices, stored by
// its maximal faces as vertex bitmasks.
struct SimplicialComplex {
    std::vector<Monomial> vertex_labels;
    std::vector<std::uint64_t> facets;  // maximal faces, deduplicated, sorted

    SimplicialComplex() = default;
    SimplicialComplex(std::vector<Monomial> labels, std::vector<std::uint64_t> faces);

    bool empty() const { return facets.empty(); }
    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int dim() const;  // -1 when empty
    bool pure() const;
    std::vector<std::uint64_t> all_faces() const;  // nonempty faces
    std::vector<int> f_vector() const;
    long euler_characteristic() const;
    bool has_face(std::uint64_t mask) const;
};

// The inductive union of cones {u_j} * Lambda(u_j), where Lambda(u_j) is
// the subcomplex of the previous stage induced by the vertices
// g(sigma; u_j), sigma nonempty.  Vertices are indexed by order position.
SimplicialComplex build_lambda(const AdmissibleOrder& order);

// Lambda(u_j) via the order complex of the lattice of closed sets minus its
// bottom, with the chain {c_1 < ... < c_k} mapped to {g(c_i; u_j)}.
SimplicialComplex lambda_u(const AdmissibleOrder& order, int j);

// Lambda(u_j) as the induced subcomplex of the stage-(j-1) complex; the two
// constructions must agree.
SimplicialComplex lambda_u_induced(const AdmissibleOrder& order, int j);

// Shelling order of the facets, or nullopt.  Throws TooLargeError when the
// facet count exceeds the bound and std::invalid_argument when K is not
// pure.  The empty complex shells vacuously.
std::optional<std::vector<int>> find_shelling(const SimplicialComplex& K, int bound = 12);

// Subcomplex of cells whose label divides mu (face-closed since face labels
// divide cell labels).
CellComplex restrict_cells(const CellComplex& X, const Monomial& mu);

// Equality as labelled complexes: cells matched by (generator monomial,
// sigma), with equal labels and equal signed face relations.
bool labeled_equal(const CellComplex& A, const CellComplex& B);

// Flips the sign of the k-th incidence entry (counting over cells in id
// order); used for fault injection.
void flip_incidence_sign(CellComplex& X, int k);

}  // namespace cellres

#endif
