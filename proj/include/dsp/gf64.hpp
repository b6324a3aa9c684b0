#pragma once

#include <cstdint>
#include <random>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace dsp {

// Element of GF(2^64) with the fixed modulus x^64 + x^4 + x^3 + x + 1.
// Addition is xor; multiplication is a carry-less product followed by
// reduction. The modulus choice is arbitrary but must stay stable so that
// pinned test values remain reproducible.
class GF64 {
  public:
    // low bits of the modulus, i.e. x^4 + x^3 + x + 1
    static constexpr uint64_t kModulusLow = 0x1B;

    constexpr GF64() : bits_(0) {}
    constexpr explicit GF64(uint64_t bits) : bits_(bits) {}

    static constexpr GF64 zero() { return GF64(0); }
    static constexpr GF64 one() { return GF64(1); }

    constexpr uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr GF64 operator+(GF64 a, GF64 b) { return GF64(a.bits_ ^ b.bits_); }
    // characteristic two: subtraction coincides with addition
    friend constexpr GF64 operator-(GF64 a, GF64 b) { return a + b; }

    friend GF64 operator*(GF64 a, GF64 b) {
        uint64_t hi, lo;
        clmul(a.bits_, b.bits_, hi, lo);
        return GF64(reduce(hi, lo));
    }

    GF64& operator+=(GF64 o) {
        bits_ ^= o.bits_;
        return *this;
    }
    GF64& operator-=(GF64 o) { return *this += o; }
    GF64& operator*=(GF64 o) {
        *this = *this * o;
        return *this;
    }

    friend constexpr bool operator==(GF64 a, GF64 b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(GF64 a, GF64 b) { return a.bits_ != b.bits_; }

    // Uniform field element; deterministic given the stream state.
    static GF64 sample(std::mt19937_64& rng) { return GF64(rng()); }

  private:
    static void clmul(uint64_t a, uint64_t b, uint64_t& hi, uint64_t& lo) {
#if defined(__PCLMUL__)
        __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
        __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
        __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
        lo = static_cast<uint64_t>(_mm_cvtsi128_si64(p));
        hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(p, 8)));
#else
        hi = 0;
        lo = 0;
        for (int i = 0; i < 64; ++i) {
            if ((b >> i) & 1) {
                lo ^= a << i;
                if (i > 0) hi ^= a >> (64 - i);
            }
        }
#endif
    }

    // Fold the high word through x^64 = x^4 + x^3 + x + 1, twice.
    static constexpr uint64_t reduce(uint64_t hi, uint64_t lo) {
        uint64_t over = (hi >> 60) ^ (hi >> 61) ^ (hi >> 63);
        uint64_t folded = (hi << 4) ^ (hi << 3) ^ (hi << 1) ^ hi;
        uint64_t tail = (over << 4) ^ (over << 3) ^ (over << 1) ^ over;
        return lo ^ folded ^ tail;
    }

    uint64_t bits_;
};

}  // namespace dsp
