#pragma once

#include <stdexcept>
#include <string>

namespace skewmat {

// Stable numeric codes; the C API exposes these verbatim.
enum class errc : int {
    bad_input = 1,            // malformed JSON, bad arguments
    bad_shape = 2,            // dimension/shape mismatch
    field_mismatch = 3,       // elements of different fields combined
    division_by_zero = 4,
    not_prime = 5,            // field characteristic not prime
    reducible_modulus = 6,    // extension modulus not irreducible
    not_reduced = 7,          // skew set violates the unit constraints
    reducedness_conflict = 8, // ideal forcing would zero a forced-unit entry
    cap_exceeded = 9,         // enumeration refused (resource bound)
    not_associative = 10,
    char_too_small = 11,      // trace-form radical outside its validity range
    no_cyclic_generator = 12, // split: no v with A = KvK found
    split_failed = 13,        // split: verification of multiplication table failed
    conjugacy_violated = 14,  // descent datum fails the compatibility condition
    no_generator = 15,        // bounded search for a primitive element failed
    unsupported = 16,         // exact computation out of implemented range
    internal = 17,
    roots_not_distinct = 18,  // split input lists a repeated root
    d_is_square = 19,         // quaternion parameter d has a square root
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::bad_input: return "BadInput";
        case errc::bad_shape: return "BadShape";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::not_reduced: return "NotReduced";
        case errc::reducedness_conflict: return "ReducednessConflict";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::not_associative: return "NotAssociative";
        case errc::char_too_small: return "CharTooSmall";
        case errc::no_cyclic_generator: return "NoCyclicGenerator";
        case errc::split_failed: return "SplitVerificationFailed";
        case errc::conjugacy_violated: return "ConjugacyViolated";
        case errc::no_generator: return "NoGeneratorFound";
        case errc::unsupported: return "Unsupported";
        case errc::internal: return "Internal";
        case errc::roots_not_distinct: return "RootsNotDistinct";
        case errc::d_is_square: return "DIsSquare";
    }
    return "Unknown";
}

}  // namespace skewmat
