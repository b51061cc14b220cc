#ifndef CELLRES_RESOLUTION_HPP
#define CELLRES_RESOLUTION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellres/betti_table.hpp"
#include "cellres/linear_quotients.hpp"
#include "cellres/monomial.hpp"

namespace cellres {

// Number of variables of sigma strictly below y; y must lie in sigma.
int alpha(VarSet sigma, int y);

// One entry of a sparse differential: row indexes the source basis (degree
// i), col the target basis (degree i-1), and the value is coeff * mono with
// coeff a (signed) integer.
struct MapEntry {
    int row = 0;
    int col = 0;
    long long coeff = 0;
    Monomial mono;
};

struct DiffMap {
    int degree = 0;  // maps homological degree `degree` to `degree - 1`
    std::vector<MapEntry> entries;
};

// A complex of multigraded free modules.  multidegrees[i] lists the basis
// multidegrees in homological degree i; maps[k] is the differential out of
// degree k+1.  Every entry satisfies
//   multidegree(source) = multidegree(target) * mono.
struct FreeComplex {
    std::vector<std::vector<Monomial>> multidegrees;
    std::vector<DiffMap> maps;

    std::vector<int> ranks() const;
    int length() const { return static_cast<int>(multidegrees.size()) - 1; }
};

// Basis bookkeeping for the resolution of S/I built from an admissible
// order: the element of homological degree |sigma|+1 labelled (sigma, u).
// gen is the order position of u, or -1 for the degree-0 basis element 1.
struct ResBasis {
    VarSet sigma = 0;
    int gen = -1;
};

struct Resolution {
    AdmissibleOrder order;
    FreeComplex complex;
    std::vector<std::vector<ResBasis>> basis;  // parallel to complex.multidegrees

    // Position of (sigma, gen) inside basis[|sigma|+1], or -1.
    int basis_index(int hdeg, VarSet sigma, int gen) const;
};

// Builds the free complex with basis {1} u {f(sigma;u) : sigma subset of
// q(u)} and differential delta - mu; requires a regular order and throws
// NotRegularError otherwise.
Resolution build_resolution(const AdmissibleOrder& order);

// Same construction without the regularity gate.  For non-regular orders
// the result need not be a complex; verify_complex detects that.
Resolution build_resolution_unchecked(const AdmissibleOrder& order);

struct ComplexCheck {
    bool ok = true;
    std::string what;     // description of the first failure
    int map_degree = 0;   // differential out of this homological degree
    int row = 0;
    int col = 0;
};

// d o d = 0 over the polynomial ring plus multidegree homogeneity of
// every entry.
ComplexCheck verify_complex(const FreeComplex& fc);

// True when no differential entry carries a unit monomial.
bool verify_minimal(const FreeComplex& fc);

// Basis counts per (homological degree, multidegree).
BettiTable betti_table(const FreeComplex& fc);

}  // namespace cellres

#endif
