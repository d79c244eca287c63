// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_GF_HPP
#define GONAL_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "gonal/errors.hpp"

namespace gonal {

class FieldSpec;

/// Fields are created once per (p, n) and shared; element validity is tied to
/// the FieldSpec staying alive, which the registry guarantees for the process.
using Field = std::shared_ptr<const FieldSpec>;

/// An element of F_{p^n}: n residues mod p, constant coefficient first.
class FieldElement {
   public:
    FieldElement() = default;  // detached sentinel, only for container use

    const FieldSpec* spec() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// Serialization value: sum of coeffs[i] * p^i.
    uint64_t index() const;

   private:
    friend class FieldSpec;
    FieldElement(const FieldSpec* f, std::vector<uint32_t> c)
        : field_(f), coeffs_(std::move(c)) {}

    const FieldSpec* field_ = nullptr;
    std::vector<uint32_t> coeffs_;
};

/// F_{p^n} as F_p[x]/(modulus), the modulus being the lexicographically-first
/// monic irreducible of degree n (for n = 1 this is x and elements are plain
/// residues). Immutable after construction; all arithmetic is pure.
///
/// Intended scale: p^n up to ~2^20 for enumeration-heavy callers. Nothing is
/// enforced, but embeddings and exhaustive loops assume desk-size fields.
class FieldSpec {
   public:
    uint32_t p() const { return p_; }
    uint32_t degree() const { return n_; }
    uint64_t order() const { return order_; }

    /// Modulus coefficients over F_p, constant-first, length degree()+1, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement scalar(uint32_t residue) const;  // residue taken mod p
    FieldElement element(std::vector<uint32_t> coeffs) const;
    FieldElement from_index(uint64_t idx) const;

    /// All p^n elements in index order (0 first).
    std::vector<FieldElement> elements() const;

   private:
    friend Field create_field(uint32_t, uint32_t);
    FieldSpec(uint32_t p, uint32_t n, std::vector<uint32_t> modulus);

    uint32_t p_;
    uint32_t n_;
    uint64_t order_;
    std::vector<uint32_t> modulus_;
};

/// Returns the canonical F_{p^n}. Cached: equal (p, n) yields the same object,
/// so FieldMismatch checks are pointer comparisons.
Field create_field(uint32_t p, uint32_t n);

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, uint64_t e);

/// a^(p^i).
FieldElement frobenius(const FieldElement& a, uint32_t i);

/// Absolute trace down to F_p, returned as a residue.
uint32_t trace_to_prime(const FieldElement& a);

/// Image of `a` under the fixed embedding sub -> sup: the sub generator maps
/// to the first root of sub's modulus in sup's enumeration order. Cached per
/// field pair; identity on prime subfields and when sub == sup.
FieldElement embed(const Field& sub, const Field& sup, const FieldElement& a);

}  // namespace gonal

#endif  // GONAL_GF_HPP
