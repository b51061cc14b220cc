#include "cellres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cellres {

std::vector<int> varset_to_vars(VarSet s) {
    std::vector<int> out;
    for (int v = 1; v <= kMaxVars; ++v)
        if (varset_contains(s, v)) out.push_back(v);
    return out;
}

VarSet varset_from_vars(const std::vector<int>& vars) {
    VarSet s = 0;
    for (int v : vars) s |= var_bit(v);
    return s;
}

std::string varset_to_string(VarSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : varset_to_vars(s)) {
        if (!first) out += ",";
        out += "x" + std::to_string(v);
        first = false;
    }
    return out + "}";
}

Monomial::Monomial(std::vector<std::int32_t> exps) : exp_(std::move(exps)) {
    if (static_cast<int>(exp_.size()) > kMaxVars)
        throw OverflowError("too many variables (max " + std::to_string(kMaxVars) + ")");
    long deg = 0;
    for (auto e : exp_) {
        if (e < 0) throw OverflowError("negative exponent");
        deg += e;
        if (deg > kMaxDegree) throw OverflowError("degree exceeds desk-scale cap");
    }
}

Monomial Monomial::variable(int nvars, int var) {
    Monomial m(nvars);
    m.exp_[var - 1] = 1;
    return m;
}

long Monomial::degree() const {
    long d = 0;
    for (auto e : exp_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    for (auto e : exp_)
        if (e != 0) return false;
    return true;
}

namespace {
void require_same_context(const Monomial& a, const Monomial& b, const char* op) {
    if (a.vars() != b.vars())
        throw ContextMismatchError(std::string(op) + ": operands have " +
                                   std::to_string(a.vars()) + " and " +
                                   std::to_string(b.vars()) + " variables");
}
}  // namespace

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_context(a, b, "lcm");
    std::vector<std::int32_t> e(a.vars());
    for (int i = 0; i < a.vars(); ++i)
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_context(a, b, "divides");
    for (int i = 0; i < a.vars(); ++i)
        if (a.exponents()[i] > b.exponents()[i]) return false;
    return true;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    require_same_context(a, b, "multiply");
    std::vector<std::int32_t> e(a.vars());
    long deg = 0;
    for (int i = 0; i < a.vars(); ++i) {
        e[i] = a.exponents()[i] + b.exponents()[i];
        deg += e[i];
        if (deg > kMaxDegree) throw OverflowError("degree exceeds desk-scale cap");
    }
    return Monomial(std::move(e));
}

Monomial multiply_vars(const Monomial& a, VarSet sigma) {
    std::vector<std::int32_t> e = a.exponents();
    for (int v = 1; v <= a.vars(); ++v)
        if (varset_contains(sigma, v)) ++e[v - 1];
    return Monomial(std::move(e));
}

Monomial divide_exact(const Monomial& a, const Monomial& b) {
    require_same_context(a, b, "divide_exact");
    std::vector<std::int32_t> e(a.vars());
    for (int i = 0; i < a.vars(); ++i) {
        e[i] = a.exponents()[i] - b.exponents()[i];
        if (e[i] < 0) throw std::logic_error("divide_exact: not divisible");
    }
    return Monomial(std::move(e));
}

int canonical_compare(const Monomial& a, const Monomial& b) {
    require_same_context(a, b, "canonical_compare");
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Revlex within a degree block: at the last differing position the
    // smaller exponent wins (comes first).
    for (int i = a.vars() - 1; i >= 0; --i) {
        auto ea = a.exponents()[i], eb = b.exponents()[i];
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    // Lex tiebreak; unreachable for distinct monomials of equal degree.
    for (int i = 0; i < a.vars(); ++i) {
        auto ea = a.exponents()[i], eb = b.exponents()[i];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (int v = 1; v <= m.vars(); ++v) {
        auto e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& ms) {
    if (ms.empty()) throw std::invalid_argument("minimalize: empty input");
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < ms.size() && minimal; ++j) {
            if (i == j) continue;
            if (ms[j] == ms[i]) {
                minimal = j > i;  // keep only the first copy of duplicates
            } else if (divides(ms[j], ms[i])) {
                minimal = false;
            }
        }
        if (minimal) out.push_back(ms[i]);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
    check_nvars();
    if (generators.empty()) return;  // zero ideal
    for (const auto& g : generators)
        if (g.vars() != nvars_)
            throw ContextMismatchError("generator context does not match ideal");
    gens_ = minimalize(generators);
}

void MonomialIdeal::check_nvars() const {
    if (nvars_ < 1 || nvars_ > kMaxVars)
        throw OverflowError("variable count must be in [1," +
                            std::to_string(kMaxVars) + "]");
}

int MonomialIdeal::index_of(const Monomial& m) const {
    for (int i = 0; i < size(); ++i)
        if (gens_[i] == m) return i;
    return -1;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal restrict_below(const MonomialIdeal& ideal, const Monomial& mu) {
    if (mu.vars() != ideal.vars())
        throw ContextMismatchError("restrict_below: context mismatch");
    std::vector<Monomial> kept;
    for (const auto& g : ideal.gens())
        if (divides(g, mu)) kept.push_back(g);
    MonomialIdeal out(ideal.vars());
    return kept.empty() ? out : MonomialIdeal(ideal.vars(), std::move(kept));
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    long read_int() {
        std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxDegree) throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a number", pos);
        return value;
    }
};

Monomial parse_one(Cursor& cur, int nvars) {
    std::vector<std::int32_t> exps(nvars, 0);
    long degree = 0;
    bool first = true;
    for (;;) {
        cur.skip_ws();
        if (cur.done()) {
            if (first) throw ParseError("expected a monomial", cur.pos);
            break;
        }
        char c = cur.peek();
        if (c == '1') {
            ++cur.pos;  // the unit factor contributes nothing
        } else if (c == 'x' || c == 'X') {
            std::size_t at = cur.pos;
            ++cur.pos;
            long var = cur.read_int();
            if (var < 1 || var > nvars)
                throw ParseError("variable index out of range [1," +
                                 std::to_string(nvars) + "]", at);
            long e = 1;
            cur.skip_ws();
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                cur.skip_ws();
                e = cur.read_int();
            }
            degree += e;
            if (degree > kMaxDegree) throw ParseError("degree exceeds cap", at);
            exps[var - 1] += static_cast<std::int32_t>(e);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", cur.pos);
        }
        first = false;
        cur.skip_ws();
        if (!cur.done() && cur.peek() == '*') {
            ++cur.pos;
            continue;
        }
        break;
    }
    return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(const std::string& text, int nvars) {
    Cursor cur{text};
    Monomial m = parse_one(cur, nvars);
    cur.skip_ws();
    if (!cur.done()) throw ParseError("trailing input", cur.pos);
    return m;
}

MonomialIdeal parse_ideal(const std::string& text, int nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw ParseError("variable count must be in [1," + std::to_string(kMaxVars) + "]", 0);
    // Newlines and semicolons separate like commas; positions are preserved.
    std::string flat = text;
    for (char& c : flat)
        if (c == '\n' || c == ';') c = ',';
    Cursor cur{flat};
    std::vector<Monomial> gens;
    for (;;) {
        cur.skip_ws();
        while (!cur.done() && cur.peek() == ',') {
            ++cur.pos;
            cur.skip_ws();
        }
        if (cur.done()) break;
        std::size_t at = cur.pos;
        Monomial m = parse_one(cur, nvars);
        if (m.is_unit())
            throw ParseError("unit generator not allowed", at);
        gens.push_back(m);
        cur.skip_ws();
        if (!cur.done() && cur.peek() != ',')
            throw ParseError("expected ',' between generators", cur.pos);
    }
    if (gens.empty()) throw ParseError("empty generator list", cur.pos);
    return MonomialIdeal(nvars, std::move(gens));
}

}  // namespace cellres
