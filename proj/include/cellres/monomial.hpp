#ifndef CELLRES_MONOMIAL_HPP
#define CELLRES_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cellres/errors.hpp"

namespace cellres {

// Variables are x_1 < x_2 < ... < x_n.  A set of variables is kept as a
// bitmask with bit (i-1) standing for x_i; n is capped at 32 so that every
// subset of a colon set fits in a machine word.
using VarSet = std::uint32_t;

inline constexpr int kMaxVars = 32;
inline constexpr long kMaxDegree = 1000000;

inline VarSet var_bit(int var) { return VarSet{1} << (var - 1); }
inline bool varset_contains(VarSet s, int var) { return (s & var_bit(var)) != 0; }
inline int varset_size(VarSet s) { return __builtin_popcount(s); }
std::vector<int> varset_to_vars(VarSet s);  // ascending 1-based indices
VarSet varset_from_vars(const std::vector<int>& vars);
std::string varset_to_string(VarSet s);  // "{x1,x3}"

// A monomial is an exponent vector over a fixed variable context; the
// context size is the vector length and the monomial 1 is all zeros.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps);

    static Monomial variable(int nvars, int var);

    int vars() const { return static_cast<int>(exp_.size()); }
    long degree() const;
    std::int32_t exponent(int var) const { return exp_[var - 1]; }
    bool is_unit() const;
    const std::vector<std::int32_t>& exponents() const { return exp_; }

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

  private:
    std::vector<std::int32_t> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);
Monomial multiply_vars(const Monomial& a, VarSet sigma);
// b must divide a; quotient a/b.
Monomial divide_exact(const Monomial& a, const Monomial& b);

// Canonical generator order: by degree, then reverse-lexicographically
// (the revlex-largest monomial of a degree block comes first), then a
// lexicographic tiebreak.  Returns <0, 0, >0.
int canonical_compare(const Monomial& a, const Monomial& b);
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    return canonical_compare(a, b) < 0;
}

std::string to_string(const Monomial& m);

// Divisibility-minimal elements of a non-empty list, deduplicated and
// canonically sorted.
std::vector<Monomial> minimalize(const std::vector<Monomial>& ms);

// A monomial ideal, held by its unique minimal generating set G(I) in
// canonical order.  The zero ideal has no generators.
class MonomialIdeal {
  public:
    explicit MonomialIdeal(int nvars) : nvars_(nvars) { check_nvars(); }
    MonomialIdeal(int nvars, std::vector<Monomial> generators);

    int vars() const { return nvars_; }
    bool is_zero() const { return gens_.empty(); }
    int size() const { return static_cast<int>(gens_.size()); }
    const std::vector<Monomial>& gens() const { return gens_; }
    const Monomial& gen(int i) const { return gens_[i]; }
    // Index of a generator equal to m, or -1.
    int index_of(const Monomial& m) const;
    bool contains(const Monomial& m) const;  // some generator divides m

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }

  private:
    void check_nvars() const;
    int nvars_;
    std::vector<Monomial> gens_;
};

// Ideal generated by the generators of I dividing mu (may be zero).
MonomialIdeal restrict_below(const MonomialIdeal& ideal, const Monomial& mu);

// Parses "x1^2*x2, x1*x3" style input (comma or newline separated,
// whitespace-insensitive) into a minimally generated ideal.
MonomialIdeal parse_ideal(const std::string& text, int nvars);
Monomial parse_monomial(const std::string& text, int nvars);

}  // namespace cellres

#endif
