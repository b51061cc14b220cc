#include "cellres/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "cellres/errors.hpp"

namespace cellres {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ULL;
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Requires |a| >= |b|.
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.sign_ = a.sign_;
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = a.sign_;
            out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            out.sign_ = b.sign_;
            out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt out;
    out.sign_ = a.sign_ * b.sign_;
    out.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.mag_.size(); ++j) {
            std::uint64_t cur = out.mag_[i + j] +
                                static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
            out.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.mag_.size();
        while (carry) {
            std::uint64_t cur = out.mag_[k] + carry;
            out.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

// Binary long division on magnitudes; simple and exact.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& quo,
                        std::vector<std::uint32_t>& rem) {
    quo.assign(a.size(), 0);
    rem.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
        // rem = rem*2 + bit(a)
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < rem.size(); ++i) {
            std::uint32_t next = rem[i] >> 31;
            rem[i] = (rem[i] << 1) | carry;
            carry = next;
        }
        if (carry) rem.push_back(1);
        if ((a[bit / 32] >> (bit % 32)) & 1) {
            if (rem.empty())
                rem.push_back(1);
            else
                rem[0] |= 1;
        }
        if (cmp_mag(rem, b) >= 0) {
            rem = sub_mag(rem, b);
            quo[bit / 32] |= (std::uint32_t{1} << (bit % 32));
        }
    }
    while (!quo.empty() && quo.back() == 0) quo.pop_back();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) return BigInt();
    BigInt out;
    std::vector<std::uint32_t> quo, rem;
    BigInt::divmod_mag(a.mag_, b.mag_, quo, rem);
    out.mag_ = std::move(quo);
    out.sign_ = a.sign_ * b.sign_;
    out.trim();
    return out;
}

bool BigInt::divides_exactly(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) return false;
    if (a.sign_ == 0) return true;
    std::vector<std::uint32_t> quo, rem;
    divmod_mag(a.mag_, b.mag_, quo, rem);
    return rem.empty();
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

long long BigInt::to_longlong() const {
    unsigned long long u = 0;
    if (mag_.size() > 2) throw OverflowError("BigInt: does not fit in long long");
    for (std::size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) {
        if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            throw OverflowError("BigInt: does not fit in long long");
        return static_cast<long long>(u);
    }
    if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ULL)
        throw OverflowError("BigInt: does not fit in long long");
    return -static_cast<long long>(u - 1) - 1;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = mag_;
    std::string digits;
    const std::vector<std::uint32_t> ten{10};
    while (!mag.empty()) {
        std::vector<std::uint32_t> quo, rem;
        divmod_mag(mag, ten, quo, rem);
        digits += static_cast<char>('0' + (rem.empty() ? 0 : rem[0]));
        mag = std::move(quo);
    }
    if (sign_ < 0) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

namespace {

// Overflow-checked 128-bit integer for the fast elimination path.
struct Checked128 {
    __int128 v = 0;
    Checked128() = default;
    Checked128(long long x) : v(x) {}  // NOLINT

    bool is_zero() const { return v == 0; }

    friend Checked128 operator*(const Checked128& a, const Checked128& b) {
        Checked128 out;
        if (__builtin_mul_overflow(a.v, b.v, &out.v))
            throw OverflowError("elimination overflowed 128 bits");
        return out;
    }
    friend Checked128 operator-(const Checked128& a, const Checked128& b) {
        Checked128 out;
        if (__builtin_sub_overflow(a.v, b.v, &out.v))
            throw OverflowError("elimination overflowed 128 bits");
        return out;
    }
    friend Checked128 operator/(const Checked128& a, const Checked128& b) {
        Checked128 out;
        out.v = a.v / b.v;
        return out;
    }
    bool abs_less(const Checked128& o) const {
        __int128 x = v < 0 ? -v : v;
        __int128 y = o.v < 0 ? -o.v : o.v;
        return x < y;
    }
};

struct BigScalar {
    BigInt v;
    BigScalar() = default;
    BigScalar(long long x) : v(x) {}  // NOLINT

    bool is_zero() const { return v.is_zero(); }

    friend BigScalar operator*(const BigScalar& a, const BigScalar& b) {
        return BigScalar{a.v * b.v};
    }
    friend BigScalar operator-(const BigScalar& a, const BigScalar& b) {
        return BigScalar{a.v - b.v};
    }
    friend BigScalar operator/(const BigScalar& a, const BigScalar& b) {
        return BigScalar{a.v / b.v};
    }
    bool abs_less(const BigScalar& o) const {
        BigInt x = v.sign() < 0 ? -v : v;
        BigInt y = o.v.sign() < 0 ? -o.v : o.v;
        return x < y;
    }
    BigScalar(BigInt b) : v(std::move(b)) {}  // NOLINT
};

// Bareiss fraction-free elimination; every division is exact.  Pivots are
// chosen with smallest absolute value to keep minors small.
template <typename T>
long bareiss_rank(const SparseIntMatrix& m) {
    const int R = m.rows, C = m.cols;
    if (R == 0 || C == 0 || m.entries.empty()) return 0;
    std::vector<std::vector<T>> a(R, std::vector<T>(C, T(0)));
    for (const auto& [r, c, v] : m.entries) {
        if (r < 0 || r >= R || c < 0 || c >= C)
            throw std::out_of_range("rank_exact: entry outside the matrix");
        a[r][c] = a[r][c] - T(-v);
    }

    T prev(1);
    long rank = 0;
    const int steps = std::min(R, C);
    while (rank < steps) {
        int pr = -1, pc = -1;
        for (int i = rank; i < R; ++i)
            for (int j = rank; j < C; ++j) {
                if (a[i][j].is_zero()) continue;
                if (pr < 0 || a[i][j].abs_less(a[pr][pc])) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        std::swap(a[rank], a[pr]);
        for (int i = 0; i < R; ++i) std::swap(a[i][rank], a[i][pc]);

        for (int i = rank + 1; i < R; ++i) {
            for (int j = rank + 1; j < C; ++j)
                a[i][j] = (a[rank][rank] * a[i][j] - a[i][rank] * a[rank][j]) / prev;
            a[i][rank] = T(0);
        }
        prev = a[rank][rank];
        ++rank;
    }
    return rank;
}

}  // namespace

long rank_exact(const SparseIntMatrix& m) {
    try {
        return bareiss_rank<Checked128>(m);
    } catch (const OverflowError&) {
        return bareiss_rank<BigScalar>(m);
    }
}

long rank_exact_bigint(const SparseIntMatrix& m) { return bareiss_rank<BigScalar>(m); }

}  // namespace cellres
