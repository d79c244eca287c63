// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_CURVE_HPP
#define GONAL_CURVE_HPP

#include <map>

#include "gonal/collapse.hpp"
#include "gonal/covers.hpp"

namespace gonal {

/// Degree bookkeeping for the ramification divisors in the fiber square.
struct RamAccount {
    int64_t deg_R_f;  // cover X -> P^1
    int64_t deg_R_h;  // collapse map
    int64_t deg_R_W;  // composite C -> P^1
    int64_t d_f;      // gamma
    int64_t d_h;      // q + 1
};

/// One cyclic factor of C pulled back along h: y^gamma = u(s) (Kummer) or
/// y^p - y = u(s) (Artin-Schreier), u reduced.
struct UFactor {
    bool artin_schreier;
    uint64_t gamma;  // factor degree; p for Artin-Schreier
    RatFn u;
};

/// C = X x_{P^1,h} P^1 with its verification data. counts[k] = #C(F_{q^k}).
struct CurveData {
    CoverData cover;
    CollapseMap collapse;
    std::vector<UFactor> u_factors;
    int64_t genus;
    std::map<int, int64_t> counts;
    PointSet avoid_trace;  // the B_i this curve's cover had to avoid
};

/// True iff every branch point of the cover avoids branch(h) and infinity.
bool branch_disjoint(const PointSet& cover_branch, const CollapseMap& collapse);
bool branch_disjoint(const CoverData& cover, const CollapseMap& collapse);

/// (q+1) g_X + q (gamma - 1).
int64_t genus_closed_formula(uint64_t q, int64_t g_X, uint64_t gamma);

/// Genus from the Hurwitz system on the fiber square; must agree with the
/// closed formula (asserted). Throws NonIntegerGenus on parity failure.
std::pair<int64_t, RamAccount> genus_hurwitz(const CoverData& cover, const CollapseMap& collapse);

struct CountOptions {
    uint64_t budget = 10000;  // max q^k enumerated per count
    int jobs = 1;
};

/// Exhaustive #C(F_{q^k}): sum of cover fiber counts over h(s0), s0 in
/// P^1(F_{q^k}). Exact; parallelizes over jobs with order-independent merge.
int64_t count_points_C(const CoverData& cover, const CollapseMap& collapse, int k,
                       const CountOptions& opts = {});
int64_t count_points_C(const CurveData& curve, int k, const CountOptions& opts = {});

/// Exact-integer Weil window: (N_k - q^k - 1)^2 <= 4 g^2 q^k.
bool weil_consistency(int64_t n_k, int64_t g, uint64_t q, int k);

enum class Gonality { Certified, Inconclusive, Inconsistent };

/// N1 = gamma (q+1) pins the gonality at gamma; below is only an upper
/// bound; above contradicts the fiber bound.
Gonality gonality_certificate(int64_t n1, uint64_t gamma, uint64_t q);

/// Assembles the fiber product: checks branch disjointness, splitting and the
/// collapse property, certifies geometric irreducibility of every cyclic
/// factor, fills the genus by both routes, and counts rational points.
CurveData build_curve(const CoverData& cover, const CollapseMap& collapse,
                      const CountOptions& opts = {});

struct SequenceOptions {
    int max_k = 2;
    CountOptions count;
    int search_cap = kDefaultSearchCap;
};

/// The B_i iteration: each cover avoids everything branched so far and uses a
/// strictly larger minimal deg pi, so genera strictly increase.
std::vector<CurveData> construct_sequence(const Field& field, uint64_t gamma, int n,
                                          const SequenceOptions& opts = {});

}  // namespace gonal

#endif  // GONAL_CURVE_HPP
