#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bfc/errors.hpp"

namespace bfc {

// An assignment to n Boolean variables.  Variable j (1-indexed, as in x_j)
// lives at bit position j-1.  Bits at positions >= n stay zero.  Most code
// works on inputs that fit one machine word; the multi-word storage exists
// for point functions over hundreds of variables.
class BitVector {
  public:
    BitVector() : n_(0) {}
    explicit BitVector(int n) : n_(check_arity(n)), w_((n + 63) / 64, 0) {}

    static BitVector from_word(int n, uint64_t w) {
        if (n > 64) throw domain_error("BitVector::from_word: n > 64");
        BitVector x(n);
        if (n < 64 && (w >> n) != 0)
            throw domain_error("BitVector::from_word: bits set beyond arity");
        if (n > 0) x.w_[0] = w;
        return x;
    }

    // "0110..." with the leftmost character giving x_1.
    static BitVector parse(int n, const std::string& s) {
        if ((int)s.size() != n)
            throw domain_error("BitVector::parse: expected " + std::to_string(n) +
                               " characters, got " + std::to_string(s.size()));
        BitVector x(n);
        for (int i = 0; i < n; i++) {
            if (s[i] == '1') x.set(i, true);
            else if (s[i] != '0') throw domain_error("BitVector::parse: invalid character");
        }
        return x;
    }

    int n() const { return n_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    uint64_t word() const {
        if (n_ > 64) throw domain_error("BitVector::word: arity exceeds one word");
        return w_.empty() ? 0 : w_[0];
    }

    void xor_with(const BitVector& o) {
        if (o.n_ != n_) throw domain_error("BitVector::xor_with: arity mismatch");
        for (size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
    }

    BitVector complemented() const {
        BitVector x(n_);
        for (size_t i = 0; i < w_.size(); i++) x.w_[i] = ~w_[i];
        x.trim();
        return x;
    }

    int popcount() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }

    // true when every set bit of this vector is also set in o
    bool subset_of(const BitVector& o) const {
        if (o.n_ != n_) throw domain_error("BitVector::subset_of: arity mismatch");
        for (size_t i = 0; i < w_.size(); i++)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const BitVector& o) const {
        if (o.n_ != n_) throw domain_error("BitVector::intersects: arity mismatch");
        for (size_t i = 0; i < w_.size(); i++)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; i++) if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

  private:
    static int check_arity(int n) {
        if (n < 0) throw domain_error("BitVector: negative arity");
        return n;
    }
    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
    }

    int n_;
    std::vector<uint64_t> w_;
};

// Flat bit array used for truth tables and cube subgraph membership.
// Serialized as hex with the most significant digit first: bit i of the
// array sits at bit position i of the encoded value.
class PackedBits {
  public:
    PackedBits() : nbits_(0) {}
    explicit PackedBits(uint64_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    uint64_t size() const { return nbits_; }

    bool get(uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(uint64_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    uint64_t popcount() const {
        uint64_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    std::string to_hex() const;
    static PackedBits from_hex(uint64_t nbits, const std::string& hex);

    friend bool operator==(const PackedBits& a, const PackedBits& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const PackedBits& a, const PackedBits& b) { return !(a == b); }

  private:
    uint64_t nbits_;
    std::vector<uint64_t> w_;
};

} // namespace bfc
