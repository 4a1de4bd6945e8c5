#pragma once

#include "error.hpp"
#include "ints.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewmat {

using Json = nlohmann::ordered_json;

enum class FieldKind { rational, prime, extension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact field element. Layout by kind:
//   rational:  v = {num, den}, den > 0, gcd(num, den) = 1
//   prime:     v = {r}, 0 <= r < p
//   extension: v = k residues (low degree first), each in [0, p)
struct FElem {
    FieldPtr f;
    std::vector<Int> v;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(const Int& p);
    // modulus: monic of degree k over GF(p), coefficients low to high (size k+1).
    static FieldPtr extension(const Int& p, unsigned k, std::vector<Int> modulus);

    FieldKind kind() const { return kind_; }
    const Int& characteristic() const { return p_; }  // 0 for rationals
    unsigned degree() const { return k_; }            // 1 unless extension
    const std::vector<Int>& modulus() const { return modulus_; }
    bool finite() const { return kind_ != FieldKind::rational; }
    const Int& order() const { return order_; }       // p^k; 0 when infinite

    bool same(const Field& o) const;

    FElem zero() const;
    FElem one() const;
    FElem from_int(const Int& n) const;
    FElem from_fraction(const Int& num, const Int& den) const;
    FElem from_coeffs(std::vector<Int> c) const;
    // Canonical enumeration of a finite field: index in [0, order).
    FElem element_at(const Int& index) const;
    Int index_of(const FElem& a) const;

    FElem add(const FElem& a, const FElem& b) const;
    FElem sub(const FElem& a, const FElem& b) const;
    FElem mul(const FElem& a, const FElem& b) const;
    FElem neg(const FElem& a) const;
    FElem inv(const FElem& a) const;
    FElem div(const FElem& a, const FElem& b) const;
    FElem pow(const FElem& a, Int e) const;
    bool is_zero(const FElem& a) const;
    bool is_one(const FElem& a) const;
    bool eq(const FElem& a, const FElem& b) const;

    // a ^ (p^t); finite fields only.
    FElem frobenius(const FElem& a, unsigned t) const;
    // Exact e-th root, or nullopt when none exists in this field.
    std::optional<FElem> nth_root(const FElem& a, std::uint64_t e) const;

    std::string to_string(const FElem& a) const;

    Json to_json() const;
    static FieldPtr from_json(const Json& j);
    FElem elem_from_json(const Json& j) const;
    Json elem_to_json(const FElem& a) const;
    FElem elem_from_string(const std::string& s) const;

    void check(const FElem& a) const;

private:
    Field() = default;

    FieldKind kind_ = FieldKind::rational;
    Int p_ = 0;
    unsigned k_ = 1;
    std::vector<Int> modulus_;
    Int order_ = 0;
};

FElem operator+(const FElem& a, const FElem& b);
FElem operator-(const FElem& a, const FElem& b);
FElem operator*(const FElem& a, const FElem& b);
FElem operator/(const FElem& a, const FElem& b);
FElem operator-(const FElem& a);
bool operator==(const FElem& a, const FElem& b);
bool operator!=(const FElem& a, const FElem& b);

// Strict total order on elements of one field (for canonical containers).
bool elem_less(const FElem& a, const FElem& b);

Json int_to_json(const Int& n);
Int json_to_int(const Json& j);

}  // namespace skewmat
