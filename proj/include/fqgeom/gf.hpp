#pragma once

#include <cstdint>
#include <optional>

#include "fqgeom/errors.hpp"

namespace fqgeom {

bool is_prime_u64(uint64_t n);

/// Arithmetic context for the prime field of odd order q. Residues are kept
/// canonical in [0, q-1] and passed around as plain uint32_t; the methods here
/// assume canonical inputs. Immutable and trivially copyable.
class PrimeField {
public:
    explicit PrimeField(uint64_t q);

    uint32_t q() const { return q_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(q_);
        if (r < 0) r += q_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t half() const { return (q_ + 1) / 2; }  // the residue 1/2

    /// Legendre symbol by Euler's criterion: 0 for a = 0, 1 for nonzero
    /// squares, -1 otherwise.
    int legendre(uint32_t a) const;

    /// Some square root of a, or nullopt when a is a non-residue. Of the two
    /// roots +-r the smaller canonical residue is returned.
    std::optional<uint32_t> sqrt(uint32_t a) const;

    /// Square root of -1; exists iff q = 1 mod 4.
    std::optional<uint32_t> sqrt_minus_one() const { return sqrt(q_ - 1); }

    /// Smallest quadratic non-residue.
    uint32_t nonsquare() const;

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }

private:
    uint32_t q_;
};

inline PrimeField make_field(uint64_t q) { return PrimeField(q); }

/// A canonical residue bound to its field. Convenience wrapper over the raw
/// residue API; equality is value equality within the same field.
class FieldElement {
public:
    FieldElement(PrimeField f, int64_t v) : f_(f), v_(f.reduce(v)) {}

    uint32_t value() const { return v_; }
    const PrimeField& field() const { return f_; }

    FieldElement operator+(const FieldElement& o) const { return wrap(f_.add(v_, check(o))); }
    FieldElement operator-(const FieldElement& o) const { return wrap(f_.sub(v_, check(o))); }
    FieldElement operator*(const FieldElement& o) const { return wrap(f_.mul(v_, check(o))); }
    FieldElement operator/(const FieldElement& o) const { return wrap(f_.div(v_, check(o))); }
    FieldElement operator-() const { return wrap(f_.neg(v_)); }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }

private:
    FieldElement wrap(uint32_t raw) const {
        FieldElement e(f_, 0);
        e.v_ = raw;
        return e;
    }
    uint32_t check(const FieldElement& o) const {
        if (!(f_ == o.f_)) throw Error("field mismatch");
        return o.v_;
    }

    PrimeField f_;
    uint32_t v_;
};

inline int legendre(const FieldElement& a) { return a.field().legendre(a.value()); }

inline std::optional<FieldElement> sqrt(const FieldElement& a) {
    auto r = a.field().sqrt(a.value());
    if (!r) return std::nullopt;
    return FieldElement(a.field(), *r);
}

}  // namespace fqgeom
