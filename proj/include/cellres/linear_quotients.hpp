#ifndef CELLRES_LINEAR_QUOTIENTS_HPP
#define CELLRES_LINEAR_QUOTIENTS_HPP

#include <optional>
#include <vector>

#include "cellres/monomial.hpp"

namespace cellres {

// An ordering u_1,...,u_m of G(I) is admissible when every colon ideal
// <u_1,...,u_{j-1}> : u_j is generated by a set of variables q(u_j).  All
// orders here are degree-non-decreasing; such an order always exists when
// the ideal has a linear quotient at all.
//
// The decomposition function g maps a monomial v of I to the generator
// u_j of smallest index dividing v.  An order is regular when
// q(g(y*u_j)) is contained in q(u_j) for every j and every y in q(u_j).

struct ColonResult {
    bool linear = false;
    VarSet vars = 0;                  // valid when linear
    std::optional<Monomial> offender; // a minimal colon generator of degree != 1
};

// Minimal generators of <prefix> : u, reported as a variable set when all
// of them are variables.
ColonResult colon_variable_set(const std::vector<Monomial>& prefix, const Monomial& u);

class AdmissibleOrder {
  public:
    AdmissibleOrder(MonomialIdeal ideal, std::vector<int> perm,
                    std::vector<VarSet> qsets)
        : ideal_(std::move(ideal)), perm_(std::move(perm)), qsets_(std::move(qsets)) {}

    const MonomialIdeal& ideal() const { return ideal_; }
    int size() const { return static_cast<int>(perm_.size()); }
    // u_{j+1} for 0-based j.
    const Monomial& u(int j) const { return ideal_.gen(perm_[j]); }
    VarSet q(int j) const { return qsets_[j]; }
    int gen_index(int j) const { return perm_[j]; }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<VarSet>& qsets() const { return qsets_; }

    // Order position of g(v); throws NotInIdealError when no generator
    // divides v.
    int decompose_index(const Monomial& v) const;
    Monomial decompose(const Monomial& v) const { return u(decompose_index(v)); }

    // g(sigma; u_j) = g(u_j * prod(sigma)); sigma must sit inside q(u_j).
    int g_multi_index(int j, VarSet sigma) const;
    Monomial g_multi(int j, VarSet sigma) const { return u(g_multi_index(j, sigma)); }

    // Multidegree u_j * prod(sigma).
    Monomial sigma_multidegree(int j, VarSet sigma) const {
        return multiply_vars(u(j), sigma);
    }

  private:
    MonomialIdeal ideal_;
    std::vector<int> perm_;
    std::vector<VarSet> qsets_;
};

// The decomposition function as a standalone value; fully determined by
// the admissible order it wraps.
struct DecompositionFunction {
    const AdmissibleOrder& order;
    Monomial operator()(const Monomial& v) const { return order.decompose(v); }
};

enum class AdmissibleStatus { Ok, NotLinear, NotDegreeIncreasing };

struct AdmissibleCheck {
    AdmissibleStatus status = AdmissibleStatus::Ok;
    int step = 0;                     // 1-based position where the check failed
    std::optional<Monomial> witness;  // offending colon generator for NotLinear
    std::optional<AdmissibleOrder> order;
    bool ok() const { return status == AdmissibleStatus::Ok; }
};

// Checks a permutation of G(I) (indices into ideal.gens()) step by step.
AdmissibleCheck is_admissible(const MonomialIdeal& ideal, const std::vector<int>& perm);

struct RegularityResult {
    bool regular = false;
    std::optional<RegularityWitness> witness;
};

RegularityResult is_regular(const AdmissibleOrder& order);

struct OrderSearchOptions {
    bool require_regular = false;
    // Shuffles the candidate ordering away from the canonical one; used by
    // fuzz tests to exercise other branches of the search tree.
    std::optional<unsigned> shuffle_seed;
};

// Depth-first backtracking over degree-non-decreasing prefixes with linear
// colons, canonical (degree, revlex) candidate order first.  With
// require_regular, prefixes whose partial decomposition function already
// violates regularity are pruned; such violations cannot be repaired by
// later generators.
std::optional<AdmissibleOrder> find_admissible_order(const MonomialIdeal& ideal,
                                                     const OrderSearchOptions& opts = {});

// Subsequence of generators dividing mu, recomputed as an order of the
// restricted ideal.  Throws std::logic_error if the subsequence fails to be
// admissible (it never does for admissible input orders).
AdmissibleOrder induced_order(const AdmissibleOrder& order, const Monomial& mu);

}  // namespace cellres

#endif
