#pragma once

#include <cstdint>
#include <string>

namespace skewmat {

// FNV-1a 64 over the bytes of a string; stable across platforms and runs.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string digest_hex(const std::string& s) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int t = 15; t >= 0; --t) {
        out[t] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace skewmat
