#include "poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skewmat {

namespace {

void trim(Poly& a) {
    while (!a.c.empty() && a.f->is_zero(a.c.back())) a.c.pop_back();
}

}  // namespace

Poly poly_make(FieldPtr f, Vec coeffs) {
    Poly p{std::move(f), std::move(coeffs)};
    trim(p);
    return p;
}

Poly poly_zero(const FieldPtr& f) { return Poly{f, {}}; }
Poly poly_one(const FieldPtr& f) { return Poly{f, {f->one()}}; }
Poly poly_x(const FieldPtr& f) { return Poly{f, {f->zero(), f->one()}}; }

int poly_deg(const Poly& a) { return static_cast<int>(a.c.size()) - 1; }
bool poly_is_zero(const Poly& a) { return a.c.empty(); }

Poly poly_add(const Poly& a, const Poly& b) {
    const Field& F = *a.f;
    Poly r{a.f, Vec(std::max(a.c.size(), b.c.size()), F.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const Field& F = *a.f;
    Poly r{a.f, Vec(std::max(a.c.size(), b.c.size()), F.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return poly_zero(a.f);
    const Field& F = *a.f;
    Poly r{a.f, Vec(a.c.size() + b.c.size() - 1, F.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (F.is_zero(b.c[j])) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    trim(r);
    return r;
}

Poly poly_scale(const FElem& s, const Poly& a) {
    Poly r{a.f, Vec()};
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(s * x);
    trim(r);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (poly_is_zero(b)) fail(errc::division_by_zero, "polynomial division by zero");
    const Field& F = *a.f;
    FElem lead_inv = F.inv(b.c.back());
    Poly rem = a;
    Poly quot{a.f, {}};
    if (rem.c.size() >= b.c.size()) quot.c.assign(rem.c.size() - b.c.size() + 1, F.zero());
    while (rem.c.size() >= b.c.size() && !rem.c.empty()) {
        FElem coef = F.mul(rem.c.back(), lead_inv);
        std::size_t shift = rem.c.size() - b.c.size();
        quot.c[shift] = coef;
        if (!F.is_zero(coef)) {
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(coef, b.c[j]));
            }
        }
        rem.c.pop_back();
        trim(rem);
    }
    trim(quot);
    return {std::move(quot), std::move(rem)};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_monic(const Poly& a) {
    if (poly_is_zero(a)) return a;
    if (a.f->is_one(a.c.back())) return a;
    return poly_scale(a.f->inv(a.c.back()), a);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!poly_is_zero(y)) {
        Poly r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

PolyBezout poly_ext_gcd(const Poly& a, const Poly& b) {
    const FieldPtr& f = a.f;
    Poly r0 = a, r1 = b;
    Poly u0 = poly_one(f), u1 = poly_zero(f);
    Poly v0 = poly_zero(f), v1 = poly_one(f);
    while (!poly_is_zero(r1)) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        Poly v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (!poly_is_zero(r0) && !f->is_one(r0.c.back())) {
        FElem s = f->inv(r0.c.back());
        r0 = poly_scale(s, r0);
        u0 = poly_scale(s, u0);
        v0 = poly_scale(s, v0);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

Poly poly_derivative(const Poly& a) {
    const Field& F = *a.f;
    Poly r{a.f, {}};
    if (a.c.size() <= 1) return r;
    r.c.reserve(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        r.c.push_back(F.mul(F.from_int(Int(i)), a.c[i]));
    }
    trim(r);
    return r;
}

Poly poly_powmod(const Poly& base, const Int& e, const Poly& mod) {
    Poly r = poly_one(base.f);
    Poly b = poly_mod(base, mod);
    Int exp = e;
    while (exp > 0) {
        if ((exp & 1) != 0) r = poly_mod(poly_mul(r, b), mod);
        b = poly_mod(poly_mul(b, b), mod);
        exp >>= 1;
    }
    return r;
}

FElem poly_eval(const Poly& a, const FElem& x) {
    const Field& F = *x.f;
    FElem r = F.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        r = F.add(F.mul(r, x), a.c[i]);
    }
    return r;
}

bool poly_eq(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!(a.c[i] == b.c[i])) return false;
    }
    return true;
}

std::string poly_to_string(const Poly& a) {
    if (poly_is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.f->is_zero(a.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << a.f->to_string(a.c[i]);
        if (i == 1) os << "*x";
        else if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

bool poly_squarefree(const Poly& a) {
    if (poly_deg(a) <= 1) return poly_deg(a) >= 0;
    Poly d = poly_derivative(a);
    if (poly_is_zero(d)) return false;  // p-th power shape in characteristic p
    return poly_deg(poly_gcd(a, d)) == 0;
}

namespace {

// --- factorization over finite fields ---

// p-th root of a monic polynomial of the form g(x^p) over GF(p^k).
Poly pth_root(const Poly& a) {
    const Field& F = *a.f;
    Int p = F.characteristic();
    unsigned k = F.degree();
    std::size_t pu = static_cast<std::size_t>(to_u64(p));
    Poly r{a.f, {}};
    r.c.reserve(a.c.size() / pu + 1);
    for (std::size_t i = 0; i < a.c.size(); i += pu) {
        // coefficient p-th root: frobenius^(k-1)
        r.c.push_back(F.frobenius(a.c[i], k >= 1 ? k - 1 : 0));
    }
    trim(r);
    return r;
}

void squarefree_decompose(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    if (poly_deg(f) <= 0) return;
    Poly d = poly_derivative(f);
    if (poly_is_zero(d)) {
        Int p = f.f->characteristic();
        if (p == 0) fail(errc::internal, "zero derivative in characteristic 0");
        squarefree_decompose(pth_root(f), mult * static_cast<unsigned>(to_u64(p)), out);
        return;
    }
    Poly g = poly_gcd(f, d);
    Poly w = poly_divmod(f, g).first;
    unsigned i = 1;
    while (poly_deg(w) > 0) {
        Poly y = poly_gcd(w, g);
        Poly z = poly_divmod(w, y).first;
        if (poly_deg(z) > 0) out.emplace_back(poly_monic(z), mult * i);
        w = std::move(y);
        g = poly_divmod(g, w).first;
        ++i;
    }
    if (poly_deg(g) > 0) {
        Int p = f.f->characteristic();
        squarefree_decompose(pth_root(g), mult * static_cast<unsigned>(to_u64(p)), out);
    }
}

Poly random_poly_below(const FieldPtr& f, int deg_bound, std::mt19937_64& rng) {
    Vec c;
    const Int& q = f->order();
    for (int i = 0; i < deg_bound; ++i) {
        Int idx = Int(rng()) % q;
        c.push_back(f->element_at(idx));
    }
    return poly_make(f, std::move(c));
}

// Equal-degree splitting: f = product of distinct irreducibles of degree d.
void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    int n = poly_deg(f);
    if (n == d) {
        out.push_back(poly_monic(f));
        return;
    }
    const FieldPtr& fld = f.f;
    const Int& q = fld->order();
    Poly g = poly_one(fld);
    for (int attempt = 0; attempt < 512; ++attempt) {
        Poly r = random_poly_below(fld, n, rng);
        if (poly_deg(r) < 1) continue;
        Poly s;
        if (fld->characteristic() == 2) {
            // trace map sum r^(2^i), i < k*d
            unsigned bits = fld->degree() * static_cast<unsigned>(d);
            Poly acc = poly_mod(r, f);
            Poly term = acc;
            for (unsigned i = 1; i < bits; ++i) {
                term = poly_mod(poly_mul(term, term), f);
                acc = poly_add(acc, term);
            }
            s = acc;
        } else {
            Int e = (int_pow(q, static_cast<unsigned>(d)) - 1) / 2;
            Poly t = poly_powmod(r, e, f);
            s = poly_sub(t, poly_one(fld));
        }
        Poly h = poly_gcd(s, f);
        int dh = poly_deg(h);
        if (dh > 0 && dh < n) {
            edf(h, d, rng, out);
            edf(poly_divmod(f, h).first, d, rng, out);
            return;
        }
    }
    fail(errc::internal, "equal-degree splitting did not converge");
}

// Distinct-degree then equal-degree factorization of a squarefree monic poly.
std::vector<Poly> factor_squarefree_finite(Poly f, std::mt19937_64& rng) {
    std::vector<Poly> out;
    const FieldPtr& fld = f.f;
    const Int& q = fld->order();
    Poly h = poly_x(fld);
    int d = 0;
    while (poly_deg(f) > 0) {
        ++d;
        if (2 * d > poly_deg(f)) {
            out.push_back(poly_monic(f));
            break;
        }
        h = poly_powmod(h, q, f);
        Poly g = poly_gcd(poly_sub(h, poly_x(fld)), f);
        if (poly_deg(g) > 0) {
            edf(g, d, rng, out);
            f = poly_divmod(f, g).first;
            h = poly_mod(h, f);
        }
    }
    return out;
}

}  // namespace

std::vector<PolyFactor> poly_factor_finite(const Poly& a) {
    if (poly_deg(a) < 1) return {};
    std::mt19937_64 rng(0xfac70full ^ static_cast<std::uint64_t>(poly_deg(a)));
    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree_decompose(poly_monic(a), 1, parts);
    std::vector<PolyFactor> out;
    for (auto& [part, mult] : parts) {
        for (auto& irr : factor_squarefree_finite(part, rng)) {
            out.push_back({std::move(irr), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
        if (poly_deg(x.factor) != poly_deg(y.factor)) return poly_deg(x.factor) < poly_deg(y.factor);
        for (std::size_t i = x.factor.c.size(); i-- > 0;) {
            if (!(x.factor.c[i] == y.factor.c[i])) return elem_less(x.factor.c[i], y.factor.c[i]);
        }
        return false;
    });
    return out;
}

namespace {

// Rational roots of a polynomial with rational coefficients, via the
// integer root bound on a primitive integer form.
std::vector<FElem> rational_roots(const Poly& a) {
    const FieldPtr& f = a.f;
    std::vector<FElem> roots;
    if (poly_deg(a) < 1) return roots;
    // clear denominators
    Int denlcm = 1;
    for (const auto& c : a.c) denlcm = denlcm / int_gcd(denlcm, c.v[1]) * c.v[1];
    std::vector<Int> ic;
    ic.reserve(a.c.size());
    for (const auto& c : a.c) ic.push_back(c.v[0] * (denlcm / c.v[1]));
    // strip powers of x
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(f->zero());
    if (low + 1 >= ic.size()) return roots;
    Int a0 = ic[low], an = ic.back();
    auto divisors = [](Int n) {
        if (n < 0) n = -n;
        std::vector<Int> ds{1};
        for (const auto& [p, e] : factorize(n)) {
            std::size_t sz = ds.size();
            Int pe = 1;
            for (unsigned i = 0; i < e; ++i) {
                pe *= p;
                for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
            }
        }
        return ds;
    };
    for (const Int& num : divisors(a0)) {
        for (const Int& den : divisors(an)) {
            if (int_gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                FElem cand = f->from_fraction(sign * num, den);
                if (f->is_zero(poly_eval(a, cand))) {
                    bool seen = false;
                    for (const auto& r : roots) {
                        if (r == cand) { seen = true; break; }
                    }
                    if (!seen) roots.push_back(cand);
                }
            }
        }
    }
    return roots;
}

}  // namespace

std::vector<PolyFactor> poly_factor_rational(const Poly& a) {
    if (poly_deg(a) < 1) return {};
    const FieldPtr& f = a.f;
    Poly g = poly_monic(a);
    // peel off repeated factors so the base case only sees squarefree input
    Poly rep = poly_gcd(g, poly_derivative(g));
    if (poly_deg(rep) > 0) {
        auto out = poly_factor_rational(poly_divmod(g, rep).first);
        for (auto& pf : poly_factor_rational(rep)) {
            bool merged = false;
            for (auto& q : out) {
                if (poly_eq(q.factor, pf.factor)) {
                    q.multiplicity += pf.multiplicity;
                    merged = true;
                    break;
                }
            }
            if (!merged) out.push_back(std::move(pf));
        }
        return out;
    }
    std::vector<Poly> irreducibles;
    while (poly_deg(g) > 0) {
        if (poly_deg(g) == 1) {
            irreducibles.push_back(g);
            break;
        }
        std::vector<FElem> roots = rational_roots(g);
        if (!roots.empty()) {
            Poly lin = poly_make(f, {f->neg(roots[0]), f->one()});
            irreducibles.push_back(lin);
            g = poly_divmod(g, lin).first;
            continue;
        }
        if (poly_deg(g) == 2) {
            // x^2 + bx + c irreducible over Q iff b^2 - 4c is not a square
            FElem b = g.c[1], c = g.c[0];
            FElem disc = b * b - f->from_int(4) * c;
            if (f->nth_root(disc, 2).has_value()) {
                FElem s = *f->nth_root(disc, 2);
                FElem half = f->from_fraction(1, 2);
                FElem r1 = (f->neg(b) + s) * half;
                FElem r2 = (f->neg(b) - s) * half;
                irreducibles.push_back(poly_make(f, {f->neg(r1), f->one()}));
                irreducibles.push_back(poly_make(f, {f->neg(r2), f->one()}));
            } else {
                irreducibles.push_back(g);
            }
            break;
        }
        if (poly_deg(g) == 3) {
            // cubic without rational roots is irreducible
            irreducibles.push_back(g);
            break;
        }
        fail(errc::unsupported,
             "rational factorization beyond cubics without rational roots is not implemented");
    }
    // merge repeated factors
    std::vector<PolyFactor> out;
    for (auto& irr : irreducibles) {
        bool merged = false;
        for (auto& pf : out) {
            if (poly_eq(pf.factor, irr)) {
                ++pf.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({std::move(irr), 1});
    }
    return out;
}

std::vector<PolyFactor> poly_factor(const Poly& a) {
    if (a.f->finite()) return poly_factor_finite(a);
    return poly_factor_rational(a);
}

std::vector<FElem> poly_roots(const Poly& a) {
    const FieldPtr& f = a.f;
    std::vector<FElem> roots;
    if (poly_deg(a) < 1) return roots;
    if (!f->finite()) return rational_roots(a);
    if (f->order() <= 100000) {
        for (Int idx = 0; idx < f->order(); ++idx) {
            FElem x = f->element_at(idx);
            if (f->is_zero(poly_eval(a, x))) roots.push_back(x);
        }
        return roots;
    }
    for (const auto& pf : poly_factor_finite(a)) {
        if (poly_deg(pf.factor) == 1) {
            roots.push_back(f->neg(pf.factor.c[0]));
        }
    }
    return roots;
}

bool poly_irreducible(const Poly& a) {
    if (poly_deg(a) < 1) return false;
    if (poly_deg(a) == 1) return true;
    auto factors = poly_factor(a);
    return factors.size() == 1 && factors[0].multiplicity == 1;
}

}  // namespace skewmat
