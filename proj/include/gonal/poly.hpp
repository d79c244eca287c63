// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_POLY_HPP
#define GONAL_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gonal/gf.hpp"

namespace gonal {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over a finite field, constant-first, no
/// trailing zeros. degree() is -1 for the zero polynomial.
class UniPoly {
   public:
    explicit UniPoly(Field f) : field_(std::move(f)) {}
    UniPoly(Field f, std::vector<FieldElement> coeffs);

    static UniPoly x(const Field& f);
    static UniPoly constant(const Field& f, const FieldElement& c);
    /// Coefficients given as element indices, constant-first.
    static UniPoly from_indices(const Field& f, const std::vector<uint64_t>& idx);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(int i) const;  // zero beyond the degree
    FieldElement leading() const;
    bool is_monic() const;
    UniPoly monic() const;

    FieldElement eval(const FieldElement& at) const;

    /// Total order: degree first, then coefficients from the top down by
    /// element index. Matches the lexicographic scan used by nth_irreducible.
    static int compare(const UniPoly& a, const UniPoly& b);

   private:
    void trim();
    Field field_;
    std::vector<FieldElement> coeffs_;
};

bool operator==(const UniPoly& a, const UniPoly& b);
inline bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
inline bool operator<(const UniPoly& a, const UniPoly& b) { return UniPoly::compare(a, b) < 0; }

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const FieldElement& s, const UniPoly& a);

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // quotient
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Formal derivative (characteristic-p semantics).
UniPoly derivative(const UniPoly& a);

/// a(b(t)).
UniPoly compose(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& a, uint64_t e);
UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& mod);

/// Coefficient-wise embedding into an extension field.
UniPoly embed_poly(const UniPoly& a, const Field& sup);

/// A closed point of P^1 over F_q: infinity, or a monic irreducible.
class ClosedPoint {
   public:
    static ClosedPoint infinity(const Field& f);
    static ClosedPoint at(UniPoly monic_irreducible);

    bool is_infinity() const { return infinity_; }
    int degree() const;
    const UniPoly& poly() const;
    const Field& field() const { return field_; }

   private:
    ClosedPoint(Field f, bool inf, UniPoly p)
        : field_(std::move(f)), infinity_(inf), poly_(std::move(p)) {}
    Field field_;
    bool infinity_;
    UniPoly poly_;
};

bool operator==(const ClosedPoint& a, const ClosedPoint& b);
inline bool operator!=(const ClosedPoint& a, const ClosedPoint& b) { return !(a == b); }
bool operator<(const ClosedPoint& a, const ClosedPoint& b);

using PointSet = std::set<ClosedPoint>;

/// Reduced fraction of polynomials: den monic, gcd(num, den) = 1.
class RatFn {
   public:
    RatFn(UniPoly num, UniPoly den);
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const Field& field() const { return num_.field(); }

   private:
    UniPoly num_;
    UniPoly den_;
};

bool operator==(const RatFn& a, const RatFn& b);

/// u(t) -> 1/u(t).
RatFn reciprocal(const RatFn& u);

/// outer(inner) as a reduced rational function.
RatFn compose(const UniPoly& outer, const RatFn& inner);

/// Evaluate at a point of P^1(ext); nullopt encodes infinity, both as the
/// argument (s0 = infinity) and as the value. Coefficients are embedded into
/// ext, which must be an extension of the function's base field.
std::optional<FieldElement> eval_p1(const RatFn& u, const std::optional<FieldElement>& s0,
                                    const Field& ext);

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct Factorization {
    FieldElement leading;
    std::vector<std::pair<UniPoly, int>> factors;  // monic irreducible, multiplicity
};

/// Seed for the Cantor-Zassenhaus splitting RNG; recorded in certificates.
inline constexpr uint64_t kDefaultSeed = 1729;
void set_factor_seed(uint64_t seed);
uint64_t factor_seed();

/// Full factorization into monic irreducibles, sorted by (degree, lex key).
/// Deterministic for a fixed seed (and in practice independent of it, since
/// the output is sorted).
Factorization factorize(const UniPoly& f);

/// Multiplies a factorization back out (for round-trip checks).
UniPoly expand(const Factorization& fac, const Field& f);

bool is_irreducible(const UniPoly& f);

/// Lexicographically-first monic irreducible of degree d over f not in avoid.
UniPoly nth_irreducible(const Field& f, int d, const PointSet& avoid);

/// Number of monic irreducibles of degree d over F_q: (1/d) sum mu(d/e) q^e.
BigInt count_irreducibles(uint64_t q, int d);

/// Roots of f (over F_q) in F_{q^k}, with multiplicities, sorted by index.
std::vector<std::pair<FieldElement, int>> roots_in_field(const UniPoly& f, uint32_t k);

// ---------------------------------------------------------------------------
// Bivariate layer (plane models for resultants)
// ---------------------------------------------------------------------------

/// Dense bivariate polynomial, grid[i][j] = coefficient of v0^i v1^j.
class BiPoly {
   public:
    BiPoly(Field f, int deg0, int deg1);
    const Field& field() const { return field_; }
    int degree_bound(int var) const;
    const FieldElement& at(int i, int j) const { return grid_[i][j]; }
    void set(int i, int j, const FieldElement& c);

    /// Actual degree in `var` (grid bounds minus trailing zeros); -1 if zero.
    int degree_in(int var) const;

    /// Coefficient list in `var`: entry k is the UniPoly (in the other
    /// variable) multiplying var^k. Trimmed to the actual degree.
    std::vector<UniPoly> as_poly_in(int var) const;

    BiPoly derivative(int var) const;

   private:
    Field field_;
    std::vector<std::vector<FieldElement>> grid_;
};

/// Res_var(F, dF/dvar) via the Sylvester determinant over the polynomial
/// ring (fraction-free elimination). The contract is the support: constant
/// factors are not normalized.
UniPoly resultant_disc(const BiPoly& F, int var);

/// General resultant of two coefficient lists in the eliminated variable.
UniPoly resultant(const std::vector<UniPoly>& A, const std::vector<UniPoly>& B, const Field& f);

}  // namespace gonal

#endif  // GONAL_POLY_HPP
