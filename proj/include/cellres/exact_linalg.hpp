#ifndef CELLRES_EXACT_LINALG_HPP
#define CELLRES_EXACT_LINALG_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace cellres {

// Sign-magnitude arbitrary-precision integer, base 2^32.  Only what
// fraction-free elimination needs: add, subtract, multiply, exact and
// truncated division, comparison.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return sign_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated quotient (rounds toward zero), |b| > 0.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    BigInt operator-() const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);

    // Remainder of |a| / |b| is zero.
    static bool divides_exactly(const BigInt& a, const BigInt& b);

    long long to_longlong() const;  // throws on overflow
    std::string to_string() const;

  private:
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& quo,
                           std::vector<std::uint32_t>& rem);
    void trim();

    int sign_ = 0;  // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros
};

struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, long long>> entries;

    void add_entry(int r, int c, long long v) {
        if (v != 0) entries.emplace_back(r, c, v);
    }
};

// Rank over the rationals by fraction-free (Bareiss) elimination.  Runs in
// checked 128-bit arithmetic and falls back to BigInt if a minor overflows.
long rank_exact(const SparseIntMatrix& m);

// The BigInt elimination on its own (the fallback path).
long rank_exact_bigint(const SparseIntMatrix& m);

}  // namespace cellres

#endif
