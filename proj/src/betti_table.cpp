#include "cellres/betti_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cellres {

void BettiTable::add(int i, const Monomial& deg, long long count) {
    if (count == 0) return;
    Key key{i, deg.exponents()};
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), count);
    } else {
        it->second += count;
        if (it->second == 0) entries_.erase(it);
    }
}

long long BettiTable::at(int i, const Monomial& deg) const {
    auto it = entries_.find(Key{i, deg.exponents()});
    return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
    long long sum = 0;
    for (const auto& [key, v] : entries_)
        if (key.first == i) sum += v;
    return sum;
}

int BettiTable::max_index() const {
    int top = -1;
    for (const auto& [key, v] : entries_) top = std::max(top, key.first);
    return top;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> out(max_index() + 1, 0);
    for (const auto& [key, v] : entries_) out[key.first] += v;
    return out;
}

std::string render_betti_table(const BettiTable& table) {
    std::set<long> degrees;
    for (const auto& [key, v] : table.entries())
        degrees.insert(std::accumulate(key.second.begin(), key.second.end(), 0L));
    const int top = table.max_index();

    std::map<std::pair<int, long>, long long> cells;
    for (const auto& [key, v] : table.entries()) {
        long d = std::accumulate(key.second.begin(), key.second.end(), 0L);
        cells[{key.first, d}] += v;
    }

    std::ostringstream out;
    out << "  i\\deg";
    for (long d : degrees) out << '\t' << d;
    out << '\n';
    for (int i = 0; i <= top; ++i) {
        out << "  " << i;
        for (long d : degrees) {
            auto it = cells.find({i, d});
            out << '\t';
            if (it == cells.end())
                out << '.';
            else
                out << it->second;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cellres
