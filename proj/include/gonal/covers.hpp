// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_COVERS_HPP
#define GONAL_COVERS_HPP

#include <variant>

#include "gonal/poly.hpp"

namespace gonal {

/// Modulus e[P] used by the ray-class divisibility search.
struct Modulus {
    ClosedPoint P;
    int e;
};

/// y^gamma = pi, cyclic of order gamma; gamma | q-1 and gamma | deg pi.
struct KummerFactor {
    uint32_t gamma;
    UniPoly pi;
};

/// y^p - y = 1/pi, cyclic of order p (the characteristic).
struct ArtinSchreierFactor {
    UniPoly pi;
};

using CyclicFactor = std::variant<KummerFactor, ArtinSchreierFactor>;

uint64_t factor_degree(const CyclicFactor& f);
const UniPoly& factor_pi(const CyclicFactor& f);

/// An abelian cover of P^1 split completely at infinity: a single cyclic
/// factor, or a fiber product of factors with pairwise coprime degrees and
/// pairwise distinct branch points.
struct CoverSpec {
    std::vector<CyclicFactor> factors;

    const Field& field() const;
    uint64_t degree() const;
    PointSet branch_points() const;
    bool is_composite() const { return factors.size() > 1; }

    /// Checks every structural invariant; throws InvalidSpec on violation.
    void validate() const;
};

struct CoverData {
    CoverSpec spec;
    uint64_t degree;
    int64_t genus;
    PointSet branch_points;
    Modulus modulus_found;
};

/// Order of the ray class group of P^1 for the modulus e[P], deg P = d:
/// (q^d - 1)/(q - 1) * q^(d(e-1)).
BigInt ray_class_order(uint64_t q, int d, int e);

inline constexpr int kDefaultSearchCap = 64;  // bound on d + e

/// Minimal (d, e) in (d+e, then d) order with gamma dividing the ray class
/// order and a degree-d irreducible available outside avoid; P is the first
/// such irreducible. Throws SearchCapExceeded past the cap.
Modulus find_modulus(const Field& field, uint64_t gamma, const PointSet& avoid,
                     int cap = kDefaultSearchCap);

/// Explicit realization: Kummer factor per prime-power part of gamma prime to
/// p (each part must divide q-1), one Artin-Schreier factor when p | gamma
/// (p^2 | gamma unsupported). Branch points avoid `avoid` and each other;
/// every factor uses the smallest admissible deg pi >= min_pi_degree.
CoverData build_cover(const Field& field, uint64_t gamma, const PointSet& avoid,
                      int min_pi_degree = 1, int cap = kDefaultSearchCap);

/// Kummer: (gamma-1)(d-2)/2. Artin-Schreier: (p-1)(d-1). Composite combined
/// pairwise: d2 g1 + d1 g2 + (d1-1)(d2-1).
int64_t cover_genus(const CoverSpec& spec);

/// Complete splitting of infinity, checked by direct root counting.
bool verify_split_infty(const CoverSpec& spec);

/// Counts F_{q^k}-points of X above t0 in P^1(F_{q^k}); nullopt is infinity.
uint64_t fiber_count_X(const CoverSpec& spec, const std::optional<FieldElement>& t0,
                       const Field& ext);

/// Batch fiber counting with the factor data embedded into ext once.
class FiberCounter {
   public:
    FiberCounter(const CoverSpec& spec, Field ext);
    uint64_t count(const std::optional<FieldElement>& t0) const;

   private:
    struct Part {
        bool artin_schreier;
        uint64_t gamma;          // factor degree (p for Artin-Schreier)
        UniPoly pi_ext;          // embedded into ext
        uint64_t residue_power;  // (|ext| - 1) / gamma for Kummer
    };
    Field ext_;
    std::vector<Part> parts_;
};

enum class IrredCert { Certified, Inconclusive };

/// Power-multiplicity certificate: u is not an l-th power in the geometric
/// function field for any prime l | gamma (multiplicity coprime to gamma
/// itself demanded when 4 | gamma, which also rules out the -4w^4 case).
IrredCert abs_irreducible_kummer(uint32_t gamma, const RatFn& u);

/// Simple-pole certificate for y^p - y = u.
IrredCert abs_irreducible_artin_schreier(const RatFn& u);

IrredCert abs_irreducible_cyclic(const CyclicFactor& kind, const RatFn& u);

enum class ParitySet { EvenOnly, Both };

/// Genus parities reachable by degree-gamma abelian covers, gamma an odd
/// prime not dividing q: {(gamma-1)/2 (m-2) : m >= 2}.
ParitySet parity_obstruction(uint64_t gamma, uint64_t q);

}  // namespace gonal

#endif  // GONAL_COVERS_HPP
