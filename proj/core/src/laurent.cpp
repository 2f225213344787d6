#include "stmult/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stmult {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(long long exp, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

Int LaurentPoly::coeff(long long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

long long LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of the zero polynomial");
    return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of the zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::sum_coeffs() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(long long exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(checked_add(e1, e2), c1 * c2);
    terms_.swap(out.terms_);
    return *this;
}

LaurentPoly LaurentPoly::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    LaurentPoly r = one();
    for (long long i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t^" << e;
        }
    }
    return os.str();
}

// -------------------------------------------------------------- LaurentSeries

LaurentSeries::LaurentSeries(long long shift, long long trunc, std::vector<Int> coeffs)
    : shift_(shift), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (static_cast<long long>(coeffs_.size()) != trunc_ - shift_ + 1)
        throw std::invalid_argument("series storage does not span [shift, trunc]");
    canonicalize();
}

void LaurentSeries::canonicalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        shift_ += static_cast<long long>(lead);
    }
    if (coeffs_.empty()) shift_ = trunc_ + 1;
}

LaurentSeries LaurentSeries::zero(long long trunc) {
    LaurentSeries s;
    s.shift_ = trunc + 1;
    s.trunc_ = trunc;
    return s;
}

LaurentSeries LaurentSeries::from_poly(const LaurentPoly& p, long long trunc) {
    LaurentSeries s = zero(trunc);
    if (p.is_zero() || p.min_exp() > trunc) return s;
    s.shift_ = p.min_exp();
    s.coeffs_.assign(static_cast<std::size_t>(trunc - s.shift_ + 1), Int(0));
    for (const auto& [e, c] : p.terms())
        if (e <= trunc) s.coeffs_[static_cast<std::size_t>(e - s.shift_)] = c;
    s.canonicalize();
    return s;
}

Int LaurentSeries::coefficient_at(long long a) const {
    if (a > trunc_)
        throw std::out_of_range("coefficient of t^" + std::to_string(a) +
                                " is beyond the truncation " + std::to_string(trunc_));
    if (a < shift_) return 0;
    return coeffs_[static_cast<std::size_t>(a - shift_)];
}

namespace {

LaurentSeries add_sub(const LaurentSeries& a, const LaurentSeries& b, bool sub) {
    long long trunc = std::min(a.trunc(), b.trunc());
    long long shift = std::min(a.shift(), b.shift());
    if (shift > trunc) return LaurentSeries::zero(trunc);
    std::vector<Int> c(static_cast<std::size_t>(trunc - shift + 1), Int(0));
    for (long long e = shift; e <= trunc; ++e) {
        Int v = a.coefficient_at(e);
        Int w = b.coefficient_at(e);
        c[static_cast<std::size_t>(e - shift)] = sub ? Int(v - w) : Int(v + w);
    }
    return LaurentSeries(shift, trunc, std::move(c));
}

} // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add_sub(a, b, false); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add_sub(a, b, true); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // The product coefficient at e is fully determined only while every
    // contribution from beyond one factor's horizon meets a known zero of
    // the other, hence the min below.
    long long trunc = std::min(checked_add(a.trunc(), b.shift()), checked_add(b.trunc(), a.shift()));
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(trunc);
    long long shift = checked_add(a.shift(), b.shift());
    if (shift > trunc) return LaurentSeries::zero(trunc);
    std::vector<Int> c(static_cast<std::size_t>(trunc - shift + 1), Int(0));
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        long long ea = a.shift() + static_cast<long long>(i);
        for (std::size_t j = 0; j < cb.size(); ++j) {
            long long e = ea + b.shift() + static_cast<long long>(j);
            if (e > trunc) break;
            c[static_cast<std::size_t>(e - shift)] += ca[i] * cb[j];
        }
    }
    return LaurentSeries(shift, trunc, std::move(c));
}

std::string LaurentSeries::to_json() const {
    std::ostringstream os;
    os << "{\"shift\":" << shift_ << ",\"trunc\":" << trunc_ << ",\"coeffs\":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].str();
    }
    os << "]}";
    return os.str();
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long long e = shift_ + static_cast<long long>(i);
        if (!first) os << " + ";
        first = false;
        if (coeffs_[i] != 1 || e == 0) os << coeffs_[i].str();
        if (e != 0) {
            if (coeffs_[i] != 1) os << "*";
            os << "t^" << e;
        }
    }
    if (first) os << "0";
    os << " + O(t^" << trunc_ + 1 << ")";
    return os.str();
}

// ------------------------------------------------------------- JSON parsing

namespace {

struct JsonCursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        if (i >= s.size()) throw std::invalid_argument("unexpected end of JSON");
        return s[i];
    }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in JSON");
        ++i;
    }
    bool try_consume(char c) {
        if (i < s.size() && peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string parse_string() {
        expect('"');
        std::string out;
        while (i < s.size() && s[i] != '"') {
            if (s[i] == '\\' && i + 1 < s.size()) ++i;
            out += s[i++];
        }
        expect('"');
        return out;
    }
    Int parse_int() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("expected integer in JSON");
        return Int(s.substr(start, i - start));
    }
    void skip_value(); // any JSON value, for unknown keys
};

void JsonCursor::skip_value() {
    char c = peek();
    if (c == '"') {
        parse_string();
    } else if (c == '{') {
        expect('{');
        if (!try_consume('}')) {
            do {
                parse_string();
                expect(':');
                skip_value();
            } while (try_consume(','));
            expect('}');
        }
    } else if (c == '[') {
        expect('[');
        if (!try_consume(']')) {
            do {
                skip_value();
            } while (try_consume(','));
            expect(']');
        }
    } else if (c == 't' || c == 'f' || c == 'n') {
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    } else {
        parse_int();
    }
}

} // namespace

LaurentSeries laurent_from_json(const std::string& text) {
    JsonCursor cur{text};
    cur.expect('{');
    bool have_shift = false, have_trunc = false, have_coeffs = false;
    long long shift = 0, trunc = 0;
    std::vector<Int> coeffs;
    if (!cur.try_consume('}')) {
        do {
            std::string key = cur.parse_string();
            cur.expect(':');
            if (key == "shift") {
                shift = static_cast<long long>(cur.parse_int());
                have_shift = true;
            } else if (key == "trunc") {
                trunc = static_cast<long long>(cur.parse_int());
                have_trunc = true;
            } else if (key == "coeffs") {
                cur.expect('[');
                if (!cur.try_consume(']')) {
                    do {
                        coeffs.push_back(cur.parse_int());
                    } while (cur.try_consume(','));
                    cur.expect(']');
                }
                have_coeffs = true;
            } else {
                cur.skip_value();
            }
        } while (cur.try_consume(','));
        cur.expect('}');
    }
    if (!have_shift || !have_trunc || !have_coeffs)
        throw std::invalid_argument("series JSON must carry shift, trunc and coeffs");
    return LaurentSeries(shift, trunc, std::move(coeffs));
}

// --------------------------------------------------- expansion and division

LaurentSeries expand_rational(const LaurentPoly& numer, const std::vector<long long>& denom_exps,
                              long long trunc) {
    for (long long d : denom_exps)
        if (d <= 0)
            throw std::invalid_argument("expand_rational: denominator exponents must be positive");
    LaurentSeries base = LaurentSeries::from_poly(numer, trunc);
    if (base.is_zero() || denom_exps.empty()) return base;
    long long shift = base.shift();
    std::vector<Int> c(base.coeffs());
    // multiplying by 1/(1 - t^d) is the running sum with stride d
    for (long long d : denom_exps)
        for (std::size_t e = static_cast<std::size_t>(d); e < c.size(); ++e)
            c[e] += c[e - static_cast<std::size_t>(d)];
    return LaurentSeries(shift, trunc, std::move(c));
}

namespace {

// Divide df (dense over [lo, lo+size)) by (1 - t^d) in place; returns false
// and leaves the series-quotient prefix when the division is not exact.
bool divide_one_factor(std::vector<Int>& c, long long d) {
    for (std::size_t e = static_cast<std::size_t>(d); e < c.size(); ++e)
        c[e] += c[e - static_cast<std::size_t>(d)];
    // exact iff the would-be cofactor vanishes above deg(numer) - d
    std::size_t n = c.size();
    for (std::size_t e = (n >= static_cast<std::size_t>(d)) ? n - static_cast<std::size_t>(d) : 0;
         e < n; ++e)
        if (c[e] != 0) return false;
    return true;
}

} // namespace

std::pair<LaurentPoly, bool> exact_poly_quotient(const LaurentPoly& numer,
                                                 const std::vector<long long>& denom_exps) {
    for (long long d : denom_exps)
        if (d <= 0)
            throw std::invalid_argument("exact_poly_quotient: denominator exponents must be positive");
    if (numer.is_zero()) return {LaurentPoly(), true};
    long long lo = numer.min_exp(), hi = numer.max_exp();
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (const auto& [e, v] : numer.terms()) c[static_cast<std::size_t>(e - lo)] = v;
    bool exact = true;
    for (long long d : denom_exps) {
        if (!divide_one_factor(c, d)) {
            exact = false;
            break;
        }
    }
    LaurentPoly q;
    for (std::size_t i = 0; i < c.size(); ++i)
        q.add_term(lo + static_cast<long long>(i), c[i]);
    return {std::move(q), exact};
}

// ------------------------------------------------------------------ BiSeries

BiSeries::BiSeries(long long trunc_t, int max_s) : trunc_t_(trunc_t), max_s_(max_s) {
    if (max_s < 0) throw std::invalid_argument("BiSeries: max_s must be nonnegative");
}

void BiSeries::add(long long t_exp, int s_exp, const Int& c) {
    if (s_exp < 0 || s_exp > max_s_)
        throw std::invalid_argument("BiSeries: s-exponent out of [0, max_s]");
    if (t_exp > trunc_t_) throw std::invalid_argument("BiSeries: t-exponent beyond truncation");
    if (c == 0) return;
    auto key = std::make_pair(t_exp, s_exp);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Int BiSeries::coefficient_at(long long t_exp, int s_exp) const {
    if (t_exp > trunc_t_)
        throw std::out_of_range("BiSeries coefficient beyond the t-truncation");
    if (s_exp < 0 || s_exp > max_s_)
        throw std::out_of_range("BiSeries coefficient outside the s-range");
    auto it = coeffs_.find(std::make_pair(t_exp, s_exp));
    return it == coeffs_.end() ? Int(0) : it->second;
}

BiSeries bi_collect(const std::map<int, LaurentSeries>& slices, int max_s) {
    long long trunc = 0;
    bool first = true;
    for (const auto& [s_exp, f] : slices) {
        if (s_exp < 0 || s_exp > max_s)
            throw std::invalid_argument("bi_collect: slice s-exponent out of [0, max_s]");
        if (first) {
            trunc = f.trunc();
            first = false;
        } else if (f.trunc() != trunc) {
            throw std::invalid_argument("bi_collect: slices carry different truncations");
        }
    }
    BiSeries out(first ? 0 : trunc, max_s);
    for (const auto& [s_exp, f] : slices)
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            out.add(f.shift() + static_cast<long long>(i), s_exp, f.coeffs()[i]);
    return out;
}

LaurentSeries bi_slice(const BiSeries& f, int s_exp) {
    LaurentPoly p;
    for (const auto& [key, c] : f.coeffs())
        if (key.second == s_exp) p.add_term(key.first, c);
    return LaurentSeries::from_poly(p, f.trunc_t());
}

LaurentSeries bi_eval_s0(const BiSeries& f) { return bi_slice(f, 0); }

} // namespace stmult
