#include "bfc/bits.hpp"

#include <algorithm>

namespace bfc {

static int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string PackedBits::to_hex() const {
    uint64_t ndigits = (nbits_ + 3) / 4;
    if (ndigits == 0) ndigits = 1;
    std::string out(ndigits, '0');
    static const char digits[] = "0123456789ABCDEF";
    for (uint64_t j = 0; j < ndigits; j++) {
        uint64_t lo = 4 * j;
        int v = 0;
        for (int b = 0; b < 4; b++) {
            uint64_t i = lo + b;
            if (i < nbits_ && get(i)) v |= 1 << b;
        }
        out[ndigits - 1 - j] = digits[v];
    }
    return out;
}

PackedBits PackedBits::from_hex(uint64_t nbits, const std::string& hex) {
    uint64_t ndigits = (nbits + 3) / 4;
    if (ndigits == 0) ndigits = 1;
    if (hex.size() != ndigits)
        throw domain_error("PackedBits::from_hex: expected " + std::to_string(ndigits) +
                           " hex digits, got " + std::to_string(hex.size()));
    PackedBits out(nbits);
    for (uint64_t j = 0; j < ndigits; j++) {
        int v = hex_digit(hex[ndigits - 1 - j]);
        if (v < 0) throw domain_error("PackedBits::from_hex: invalid hex digit");
        for (int b = 0; b < 4; b++) {
            uint64_t i = 4 * j + b;
            if (v & (1 << b)) {
                if (i >= nbits)
                    throw domain_error("PackedBits::from_hex: bit set beyond table size");
                out.set(i, true);
            }
        }
    }
    return out;
}

} // namespace bfc
