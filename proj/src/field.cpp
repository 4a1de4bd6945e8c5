#include "field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skewmat {

namespace {

// --- polynomial helpers over GF(p), coefficients low to high, trimmed ---

using PVec = std::vector<Int>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec psub(const PVec& a, const PVec& b, const Int& p) {
    PVec r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_norm(r[i] - b[i], p);
    for (auto& c : r) c = mod_norm(c, p);
    ptrim(r);
    return r;
}

// Remainder of a modulo monic f.
PVec pmod(PVec a, const PVec& f, const Int& p) {
    ptrim(a);
    size_t k = f.size() - 1;
    while (a.size() > k) {
        Int c = a.back();
        size_t d = a.size() - 1;
        if (c != 0) {
            for (size_t j = 0; j < k; ++j) {
                a[d - k + j] = mod_norm(a[d - k + j] - c * f[j], p);
            }
        }
        a.pop_back();
        ptrim(a);
    }
    return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, const Int& p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return pmod(std::move(r), f, p);
}

PVec ppowmod(PVec base, Int e, const PVec& f, const Int& p) {
    PVec r = {Int(1)};
    base = pmod(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// gcd of arbitrary polynomials over GF(p); result monic or empty.
PVec pgcd(PVec a, PVec b, const Int& p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // reduce a mod b (b need not be monic)
        Int lead_inv = mod_inverse(b.back(), p);
        PVec r = a;
        while (r.size() >= b.size()) {
            Int c = (r.back() * lead_inv) % p;
            size_t shift = r.size() - b.size();
            if (c != 0) {
                for (size_t j = 0; j < b.size(); ++j) {
                    r[shift + j] = mod_norm(r[shift + j] - c * b[j], p);
                }
            }
            r.pop_back();
            ptrim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Int inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

bool modulus_irreducible(const PVec& f, const Int& p, unsigned k) {
    if (k == 1) return true;
    PVec x = {Int(0), Int(1)};
    Int pk = int_pow(p, k);
    PVec xq = ppowmod(x, pk, f, p);
    if (psub(xq, x, p) != PVec{}) return false;
    for (const auto& [r, mult] : factorize(Int(k))) {
        (void)mult;
        unsigned sub = k / to_u64(r);
        PVec xs = ppowmod(x, int_pow(p, sub), f, p);
        PVec h = psub(xs, x, p);
        PVec g = pgcd(h, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool digits_only(const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

Int parse_int(const std::string& s) {
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (!digits_only(s, start)) {
        fail(errc::bad_input, "not an integer literal: \"" + s + "\"");
    }
    return Int(s);
}

}  // namespace

Json int_to_json(const Int& n) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (n > lo && n < hi) return Json(to_i64(n));
    return Json(n.str());
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    fail(errc::bad_input, "expected an integer (number or string)");
}

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::rational;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(const Int& p) {
    if (!is_prime(p)) fail(errc::not_prime, "field characteristic " + p.str() + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::prime;
    f->p_ = p;
    f->k_ = 1;
    f->order_ = p;
    return f;
}

FieldPtr Field::extension(const Int& p, unsigned k, std::vector<Int> modulus) {
    if (!is_prime(p)) fail(errc::not_prime, "field characteristic " + p.str() + " is not prime");
    if (k < 1) fail(errc::bad_input, "extension degree must be >= 1");
    if (modulus.size() != k + 1) {
        fail(errc::bad_shape, "modulus must have degree " + std::to_string(k) +
                                  " (" + std::to_string(k + 1) + " coefficients, low to high)");
    }
    for (auto& c : modulus) c = mod_norm(c, p);
    if (modulus.back() != 1) fail(errc::bad_input, "modulus must be monic");
    if (!modulus_irreducible(modulus, p, k)) {
        fail(errc::reducible_modulus, "modulus is reducible over GF(" + p.str() + ")");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::extension;
    f->p_ = p;
    f->k_ = k;
    f->modulus_ = std::move(modulus);
    f->order_ = int_pow(p, k);
    return f;
}

bool Field::same(const Field& o) const {
    if (this == &o) return true;
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
}

void Field::check(const FElem& a) const {
    if (!a.f || !(a.f.get() == this || a.f->same(*this))) {
        fail(errc::field_mismatch, "element does not belong to this field");
    }
}

FElem Field::zero() const { return from_int(0); }
FElem Field::one() const { return from_int(1); }

FElem Field::from_int(const Int& n) const {
    FElem e;
    e.f = shared_from_this();
    switch (kind_) {
        case FieldKind::rational:
            e.v = {n, Int(1)};
            break;
        case FieldKind::prime:
            e.v = {mod_norm(n, p_)};
            break;
        case FieldKind::extension:
            e.v.assign(k_, Int(0));
            e.v[0] = mod_norm(n, p_);
            break;
    }
    return e;
}

FElem Field::from_fraction(const Int& num, const Int& den) const {
    if (den == 0) fail(errc::division_by_zero, "fraction with zero denominator");
    if (kind_ == FieldKind::rational) {
        Int n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        Int g = int_gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        FElem e;
        e.f = shared_from_this();
        e.v = {n, d};
        return e;
    }
    return div(from_int(num), from_int(den));
}

FElem Field::from_coeffs(std::vector<Int> c) const {
    if (kind_ != FieldKind::extension) {
        if (c.size() == 1) return from_int(c[0]);
        fail(errc::bad_shape, "coefficient arrays only describe extension-field elements");
    }
    if (c.size() > k_) fail(errc::bad_shape, "too many coefficients for degree " + std::to_string(k_));
    c.resize(k_, Int(0));
    for (auto& x : c) x = mod_norm(x, p_);
    FElem e;
    e.f = shared_from_this();
    e.v = std::move(c);
    return e;
}

FElem Field::element_at(const Int& index) const {
    if (!finite()) fail(errc::unsupported, "enumeration requires a finite field");
    if (index < 0 || index >= order_) fail(errc::bad_input, "element index out of range");
    if (kind_ == FieldKind::prime) return from_int(index);
    std::vector<Int> c(k_);
    Int rest = index;
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = rest % p_;
        rest /= p_;
    }
    return from_coeffs(std::move(c));
}

Int Field::index_of(const FElem& a) const {
    check(a);
    if (!finite()) fail(errc::unsupported, "enumeration requires a finite field");
    if (kind_ == FieldKind::prime) return a.v[0];
    Int idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.v[i];
    return idx;
}

FElem Field::add(const FElem& a, const FElem& b) const {
    check(a);
    check(b);
    FElem r;
    r.f = a.f;
    switch (kind_) {
        case FieldKind::rational: {
            Int n = a.v[0] * b.v[1] + b.v[0] * a.v[1];
            Int d = a.v[1] * b.v[1];
            Int g = int_gcd(n, d);
            if (g > 1) { n /= g; d /= g; }
            r.v = {n, d};
            break;
        }
        case FieldKind::prime: {
            Int s = a.v[0] + b.v[0];
            if (s >= p_) s -= p_;
            r.v = {s};
            break;
        }
        case FieldKind::extension: {
            r.v.resize(k_);
            for (unsigned i = 0; i < k_; ++i) {
                Int s = a.v[i] + b.v[i];
                if (s >= p_) s -= p_;
                r.v[i] = s;
            }
            break;
        }
    }
    return r;
}

FElem Field::neg(const FElem& a) const {
    check(a);
    FElem r;
    r.f = a.f;
    switch (kind_) {
        case FieldKind::rational:
            r.v = {-a.v[0], a.v[1]};
            break;
        case FieldKind::prime:
            r.v = {a.v[0] == 0 ? Int(0) : p_ - a.v[0]};
            break;
        case FieldKind::extension:
            r.v.resize(k_);
            for (unsigned i = 0; i < k_; ++i) r.v[i] = a.v[i] == 0 ? Int(0) : p_ - a.v[i];
            break;
    }
    return r;
}

FElem Field::sub(const FElem& a, const FElem& b) const { return add(a, neg(b)); }

FElem Field::mul(const FElem& a, const FElem& b) const {
    check(a);
    check(b);
    FElem r;
    r.f = a.f;
    switch (kind_) {
        case FieldKind::rational: {
            Int n = a.v[0] * b.v[0];
            Int d = a.v[1] * b.v[1];
            Int g = int_gcd(n, d);
            if (g > 1) { n /= g; d /= g; }
            r.v = {n, d};
            break;
        }
        case FieldKind::prime:
            r.v = {(a.v[0] * b.v[0]) % p_};
            break;
        case FieldKind::extension: {
            std::vector<Int> tmp(2 * k_ - 1, Int(0));
            for (unsigned i = 0; i < k_; ++i) {
                if (a.v[i] == 0) continue;
                for (unsigned j = 0; j < k_; ++j) {
                    if (b.v[j] == 0) continue;
                    tmp[i + j] = (tmp[i + j] + a.v[i] * b.v[j]) % p_;
                }
            }
            for (unsigned d = 2 * k_ - 2; d >= k_ && d < tmp.size(); --d) {
                Int c = tmp[d];
                if (c != 0) {
                    for (unsigned j = 0; j < k_; ++j) {
                        tmp[d - k_ + j] = mod_norm(tmp[d - k_ + j] - c * modulus_[j], p_);
                    }
                }
                tmp[d] = 0;
            }
            tmp.resize(k_);
            r.v = std::move(tmp);
            break;
        }
    }
    return r;
}

FElem Field::inv(const FElem& a) const {
    check(a);
    if (is_zero(a)) fail(errc::division_by_zero, "inverse of zero");
    FElem r;
    r.f = a.f;
    switch (kind_) {
        case FieldKind::rational: {
            Int n = a.v[1], d = a.v[0];
            if (d < 0) { n = -n; d = -d; }
            r.v = {n, d};
            break;
        }
        case FieldKind::prime:
            r.v = {mod_inverse(a.v[0], p_)};
            break;
        case FieldKind::extension: {
            // extended Euclid in GF(p)[x] against the modulus
            PVec r0 = modulus_, r1 = a.v;
            ptrim(r1);
            PVec s0 = {}, s1 = {Int(1)};
            while (!r1.empty()) {
                // divide r0 by r1
                Int lead_inv = mod_inverse(r1.back(), p_);
                PVec rem = r0;
                PVec q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Int(0));
                while (rem.size() >= r1.size() && !rem.empty()) {
                    Int c = (rem.back() * lead_inv) % p_;
                    size_t shift = rem.size() - r1.size();
                    q[shift] = c;
                    if (c != 0) {
                        for (size_t j = 0; j < r1.size(); ++j) {
                            rem[shift + j] = mod_norm(rem[shift + j] - c * r1[j], p_);
                        }
                    }
                    rem.pop_back();
                    ptrim(rem);
                }
                // s_next = s0 - q * s1
                PVec qs1;
                if (!q.empty() && !s1.empty()) {
                    qs1.assign(q.size() + s1.size() - 1, Int(0));
                    for (size_t i = 0; i < q.size(); ++i) {
                        if (q[i] == 0) continue;
                        for (size_t j = 0; j < s1.size(); ++j) {
                            qs1[i + j] = (qs1[i + j] + q[i] * s1[j]) % p_;
                        }
                    }
                }
                PVec s_next = psub(s0, qs1, p_);
                r0 = std::move(r1);
                r1 = std::move(rem);
                s0 = std::move(s1);
                s1 = std::move(s_next);
            }
            // r0 is the gcd (a constant, since the modulus is irreducible)
            Int c_inv = mod_inverse(r0[0], p_);
            PVec res = s0;
            for (auto& c : res) c = (c * c_inv) % p_;
            res.resize(k_, Int(0));
            r.v = std::move(res);
            break;
        }
    }
    return r;
}

FElem Field::div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }

FElem Field::pow(const FElem& a, Int e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    FElem base = a;
    FElem r = one();
    while (e > 0) {
        if ((e & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool Field::is_zero(const FElem& a) const {
    check(a);
    switch (kind_) {
        case FieldKind::rational: return a.v[0] == 0;
        case FieldKind::prime: return a.v[0] == 0;
        case FieldKind::extension:
            return std::all_of(a.v.begin(), a.v.end(), [](const Int& c) { return c == 0; });
    }
    return false;
}

bool Field::is_one(const FElem& a) const { return eq(a, one()); }

bool Field::eq(const FElem& a, const FElem& b) const {
    check(a);
    check(b);
    return a.v == b.v;
}

FElem Field::frobenius(const FElem& a, unsigned t) const {
    check(a);
    if (!finite()) fail(errc::unsupported, "frobenius requires a finite field");
    if (kind_ == FieldKind::prime) return a;
    t %= k_;
    FElem r = a;
    for (unsigned i = 0; i < t; ++i) r = pow(r, p_);
    return r;
}

std::optional<FElem> Field::nth_root(const FElem& a, std::uint64_t e) const {
    check(a);
    if (e == 0) fail(errc::bad_input, "0-th roots are undefined");
    if (is_zero(a)) return zero();
    if (e == 1) return a;
    if (kind_ == FieldKind::rational) {
        Int num = a.v[0], den = a.v[1];
        bool negate = false;
        if (num < 0) {
            if (e % 2 == 0) return std::nullopt;
            num = -num;
            negate = true;
        }
        Int rn = iroot(num, e);
        if (int_pow(rn, e) != num) return std::nullopt;
        Int rd = iroot(den, e);
        if (int_pow(rd, e) != den) return std::nullopt;
        return from_fraction(negate ? -rn : rn, rd);
    }
    const Int& q = order_;
    if (q <= 10000) {
        for (Int idx = 0; idx < q; ++idx) {
            FElem x = element_at(idx);
            if (eq(pow(x, Int(e)), a)) return x;
        }
        return std::nullopt;
    }
    if (q > Int("10000000000")) {
        fail(errc::unsupported, "nth_root: field order exceeds the exact-search bound");
    }
    Int qm1 = q - 1;
    Int g = int_gcd(Int(e), qm1);
    if (!is_one(pow(a, qm1 / g))) return std::nullopt;
    // deterministic generator search
    auto factors = factorize(qm1);
    std::mt19937_64 rng(0x67656e00ull ^ to_u64(p_ % 1000000007) ^ (std::uint64_t(k_) << 32));
    FElem w = one();
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Int idx = 1 + Int(rng()) % qm1;
        FElem cand = element_at(idx);
        if (is_zero(cand)) continue;
        bool ok = true;
        for (const auto& [r, mult] : factors) {
            (void)mult;
            if (is_one(pow(cand, qm1 / r))) { ok = false; break; }
        }
        if (ok) { w = cand; break; }
        if (attempt == 4095) fail(errc::internal, "nth_root: generator search exhausted");
    }
    // baby-step giant-step discrete log of a in base w
    Int m = iroot(qm1, 2) + 1;
    std::map<std::vector<Int>, Int> table;
    FElem cur = one();
    for (Int i = 0; i < m; ++i) {
        table.emplace(cur.v, i);
        cur = mul(cur, w);
    }
    FElem giant = pow(inv(w), m);
    FElem gamma = a;
    Int log_a = -1;
    for (Int j = 0; j * m <= qm1; ++j) {
        auto it = table.find(gamma.v);
        if (it != table.end()) {
            log_a = j * m + it->second;
            break;
        }
        gamma = mul(gamma, giant);
    }
    if (log_a < 0) fail(errc::internal, "nth_root: discrete log not found");
    Int step = qm1 / g;
    Int t = mod_inverse((Int(e) / g) % step, step);
    Int y = ((log_a / g) % step * t) % step;
    return pow(w, y);
}

std::string Field::to_string(const FElem& a) const {
    check(a);
    switch (kind_) {
        case FieldKind::rational:
            if (a.v[1] == 1) return a.v[0].str();
            return a.v[0].str() + "/" + a.v[1].str();
        case FieldKind::prime:
            return a.v[0].str();
        case FieldKind::extension: {
            std::ostringstream os;
            os << "[";
            for (unsigned i = 0; i < k_; ++i) {
                if (i) os << ",";
                os << a.v[i].str();
            }
            os << "]";
            return os.str();
        }
    }
    return "";
}

Json Field::to_json() const {
    Json j;
    switch (kind_) {
        case FieldKind::rational:
            j["kind"] = "rational";
            break;
        case FieldKind::prime:
            j["kind"] = "gfp";
            j["p"] = int_to_json(p_);
            break;
        case FieldKind::extension: {
            j["kind"] = "gfq";
            j["p"] = int_to_json(p_);
            j["k"] = k_;
            Json mods = Json::array();
            for (const auto& c : modulus_) mods.push_back(int_to_json(c));
            j["modulus"] = mods;
            break;
        }
    }
    return j;
}

FieldPtr Field::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        fail(errc::bad_input, "field spec must be an object with a \"kind\" string");
    }
    std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return rationals();
    if (kind == "gfp") {
        if (!j.contains("p")) fail(errc::bad_input, "gfp field spec requires \"p\"");
        return prime(json_to_int(j["p"]));
    }
    if (kind == "gfq") {
        if (!j.contains("p") || !j.contains("k") || !j.contains("modulus")) {
            fail(errc::bad_input, "gfq field spec requires \"p\", \"k\", \"modulus\"");
        }
        Int p = json_to_int(j["p"]);
        Int k = json_to_int(j["k"]);
        if (k < 1 || k > 64) fail(errc::bad_input, "extension degree out of range");
        if (!j["modulus"].is_array()) fail(errc::bad_input, "modulus must be an array (low to high)");
        std::vector<Int> mods;
        for (const auto& c : j["modulus"]) mods.push_back(json_to_int(c));
        return extension(p, static_cast<unsigned>(to_u64(k)), std::move(mods));
    }
    fail(errc::bad_input, "unknown field kind \"" + kind + "\"");
}

FElem Field::elem_from_json(const Json& j) const {
    if (j.is_number_integer()) return from_int(Int(j.get<std::int64_t>()));
    if (j.is_string()) return elem_from_string(j.get<std::string>());
    if (j.is_array()) {
        std::vector<Int> c;
        for (const auto& x : j) c.push_back(json_to_int(x));
        return from_coeffs(std::move(c));
    }
    fail(errc::bad_input, "field element must be a string, integer or coefficient array");
}

Json Field::elem_to_json(const FElem& a) const {
    check(a);
    switch (kind_) {
        case FieldKind::rational:
        case FieldKind::prime:
            return Json(to_string(a));
        case FieldKind::extension: {
            Json arr = Json::array();
            for (const auto& c : a.v) arr.push_back(int_to_json(c));
            return arr;
        }
    }
    return Json();
}

FElem Field::elem_from_string(const std::string& s) const {
    if (s.empty()) fail(errc::bad_input, "empty field element literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        return from_fraction(num, den);
    }
    return from_int(parse_int(s));
}

namespace {
const Field& field_of(const FElem& a) {
    if (!a.f) fail(errc::bad_input, "uninitialized field element");
    return *a.f;
}
}  // namespace

FElem operator+(const FElem& a, const FElem& b) { return field_of(a).add(a, b); }
FElem operator-(const FElem& a, const FElem& b) { return field_of(a).sub(a, b); }
FElem operator*(const FElem& a, const FElem& b) { return field_of(a).mul(a, b); }
FElem operator/(const FElem& a, const FElem& b) { return field_of(a).div(a, b); }
FElem operator-(const FElem& a) { return field_of(a).neg(a); }
bool operator==(const FElem& a, const FElem& b) { return field_of(a).eq(a, b); }
bool operator!=(const FElem& a, const FElem& b) { return !field_of(a).eq(a, b); }

bool elem_less(const FElem& a, const FElem& b) {
    if (field_of(a).kind() == FieldKind::rational) {
        // compare as fractions: a.num * b.den < b.num * a.den (both dens positive)
        return a.v[0] * b.v[1] < b.v[0] * a.v[1];
    }
    return std::lexicographical_compare(a.v.rbegin(), a.v.rend(), b.v.rbegin(), b.v.rend());
}

}  // namespace skewmat
