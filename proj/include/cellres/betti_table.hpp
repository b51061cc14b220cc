#ifndef CELLRES_BETTI_TABLE_HPP
#define CELLRES_BETTI_TABLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cellres/monomial.hpp"

namespace cellres {

// Multigraded Betti numbers of S/I: (homological degree, multidegree) -> count.
// Zero entries are not stored.
class BettiTable {
  public:
    using Key = std::pair<int, std::vector<std::int32_t>>;

    void add(int i, const Monomial& deg, long long count);
    long long at(int i, const Monomial& deg) const;
    long long total(int i) const;  // beta_i summed over multidegrees
    int max_index() const;         // largest i with an entry, -1 if empty

    const std::map<Key, long long>& entries() const { return entries_; }
    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

    std::vector<long long> totals() const;  // (beta_0, ..., beta_pd)

  private:
    std::map<Key, long long> entries_;
};

// Aligned text rendering: rows are homological degrees, columns total degrees.
std::string render_betti_table(const BettiTable& table);

}  // namespace cellres

#endif
