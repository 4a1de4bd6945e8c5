#pragma once

#include "field.hpp"
#include "linalg.hpp"

#include <vector>

namespace skewmat {

// Polynomial over a field, coefficients low to high, trailing zeros trimmed.
struct Poly {
    FieldPtr f;
    Vec c;
};

Poly poly_make(FieldPtr f, Vec coeffs);
Poly poly_zero(const FieldPtr& f);
Poly poly_one(const FieldPtr& f);
Poly poly_x(const FieldPtr& f);
int poly_deg(const Poly& a);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& a);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const FElem& s, const Poly& a);
// Quotient and remainder; b's leading coefficient must be invertible.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly poly_monic(const Poly& a);
Poly poly_derivative(const Poly& a);
Poly poly_powmod(const Poly& base, const Int& e, const Poly& mod);
FElem poly_eval(const Poly& a, const FElem& x);
bool poly_eq(const Poly& a, const Poly& b);
std::string poly_to_string(const Poly& a);

// Over perfect ground fields (the rationals and finite fields):
// squarefree <=> gcd(a, a') is constant.
bool poly_squarefree(const Poly& a);

// Bezout: g = gcd(a,b) monic with u*a + v*b = g.
struct PolyBezout {
    Poly g, u, v;
};
PolyBezout poly_ext_gcd(const Poly& a, const Poly& b);

struct PolyFactor {
    Poly factor;       // monic irreducible
    unsigned multiplicity;
};

// Complete factorization over a finite field (distinct-degree plus
// equal-degree splitting; deterministic seeding).
std::vector<PolyFactor> poly_factor_finite(const Poly& a);

// Factorization over the rationals, limited to what root extraction and
// quadratic/cubic irreducibility tests can settle. Degree >= 4 remainders
// without rational roots raise errc::unsupported.
std::vector<PolyFactor> poly_factor_rational(const Poly& a);

std::vector<PolyFactor> poly_factor(const Poly& a);

// All roots of a in its coefficient field (with multiplicity collapsed).
std::vector<FElem> poly_roots(const Poly& a);

bool poly_irreducible(const Poly& a);

}  // namespace skewmat
