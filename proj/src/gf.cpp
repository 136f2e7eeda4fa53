#include "fqgeom/gf.hpp"

namespace fqgeom {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(uint64_t q) {
    if (q == 2) throw EvenCharacteristicError("q = 2: fields of characteristic 2 are not supported");
    if (!is_prime_u64(q)) throw NotPrimeError("q = " + std::to_string(q) + " is not prime");
    if (q > 0xFFFFFFFFULL) throw Error("q too large (must fit in 32 bits)");
    q_ = static_cast<uint32_t>(q);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint64_t r = 1, b = a % q_;
    while (e) {
        if (e & 1) r = (r * b) % q_;
        b = (b * b) % q_;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
}

int PrimeField::legendre(uint32_t a) const {
    if (a == 0) return 0;
    uint32_t e = pow(a, (q_ - 1) / 2);
    return e == 1 ? 1 : -1;
}

std::optional<uint32_t> PrimeField::sqrt(uint32_t a) const {
    if (a == 0) return 0u;
    if (legendre(a) != 1) return std::nullopt;
    // Exhaustive scan; the smaller of the two roots is hit first.
    for (uint32_t r = 1; r <= q_ / 2; ++r) {
        if (mul(r, r) == a) return r;
    }
    return std::nullopt;  // unreachable for residues
}

uint32_t PrimeField::nonsquare() const {
    for (uint32_t u = 2; u < q_; ++u) {
        if (legendre(u) == -1) return u;
    }
    throw Error("no non-residue found (q must be odd prime >= 3)");
}

}  // namespace fqgeom
