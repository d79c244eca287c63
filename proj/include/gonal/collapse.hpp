// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef GONAL_COLLAPSE_HPP
#define GONAL_COLLAPSE_HPP

#include "gonal/poly.hpp"

namespace gonal {

/// The degree-(q+1) self-map of P^1 sending every rational point to infinity:
/// h = a / (t^q - t) with a the first monic irreducible of degree q+1.
struct CollapseMap {
    Field field;              // F_q
    RatFn h;                  // num = a, den = t^q - t
    PointSet branch;          // finite closed points where a fiber degenerates
    int64_t ram_divisor_degree;  // always 2q
};

/// Builds the canonical collapse map for F_q and verifies its invariants:
/// collapse property, branch locus away from infinity, ramification degree 2q.
CollapseMap build_h(const Field& field);

/// True iff h sends every rational point of P^1(F_q) to infinity.
bool verify_collapse(const RatFn& h, const Field& field);

struct BranchInfo {
    PointSet points;     // support of the fiber discriminant
    UniPoly resultant;   // Res_s(F_h, dF_h/ds); degree = ramification degree
};

/// Branch locus of h from the fiber polynomial F_h(s, t) = num(s) - t den(s);
/// also checks that the fiber over infinity is unramified.
BranchInfo branch_locus_info(const RatFn& h);
PointSet branch_locus_h(const RatFn& h);

}  // namespace gonal

#endif  // GONAL_COLLAPSE_HPP
