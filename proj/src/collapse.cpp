// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include "gonal/collapse.hpp"

namespace gonal {

namespace {

// t^q - t over F_q
UniPoly vanishing_poly(const Field& f) {
    const uint64_t q = f->order();
    std::vector<FieldElement> c(static_cast<size_t>(q) + 1, f->zero());
    c[1] = -f->one();
    c[static_cast<size_t>(q)] = f->one();
    return UniPoly(f, std::move(c));
}

}  // namespace

bool verify_collapse(const RatFn& h, const Field& field) {
    if (h.num().degree() <= h.den().degree()) return false;  // h(inf) != inf
    for (const auto& c : field->elements()) {
        if (!h.den().eval(c).is_zero()) return false;
        if (h.num().eval(c).is_zero()) return false;
    }
    return true;
}

BranchInfo branch_locus_info(const RatFn& h) {
    const Field& f = h.field();
    const int dn = h.num().degree();
    const int dd = h.den().degree();

    // F_h(s, t) = num(s) - t * den(s), degree dn in s with constant lc
    BiPoly F(f, dn, 1);
    for (int i = 0; i <= dn; ++i) F.set(i, 0, h.num().coeff(i));
    for (int i = 0; i <= dd; ++i) F.set(i, 1, -h.den().coeff(i));

    if (F.derivative(0).degree_in(0) < 0) fail(Err::InseparableMap, "fiber derivative vanishes");

    const UniPoly res = resultant_disc(F, 0);
    require(!res.is_zero(), Err::InseparableMap, "identically vanishing discriminant");

    BranchInfo info{{}, res};
    for (const auto& [g, m] : factorize(res).factors) {
        (void)m;
        info.points.insert(ClosedPoint::at(g));
    }

    // fiber over infinity must be unramified: den squarefree and s = infinity
    // entering with multiplicity deg(num) - deg(den) = 1
    int64_t geometric = 0;
    for (const auto& [g, m] : factorize(h.den()).factors) {
        require(m == 1, Err::InternalCheck, "denominator not squarefree");
        geometric += g.degree();
    }
    require(geometric + 1 == dn, Err::InternalCheck, "fiber over infinity is ramified");
    return info;
}

PointSet branch_locus_h(const RatFn& h) { return branch_locus_info(h).points; }

CollapseMap build_h(const Field& field) {
    const uint64_t q = field->order();
    const UniPoly a = nth_irreducible(field, static_cast<int>(q) + 1, {});
    RatFn h(a, vanishing_poly(field));

    require(h.num() == a && h.num().degree() == static_cast<int>(q) + 1, Err::InternalCheck,
            "collapse numerator not reduced");
    require(verify_collapse(h, field), Err::InternalCheck, "collapse property failed");

    BranchInfo info = branch_locus_info(h);
    require(info.resultant.degree() == static_cast<int>(2 * q), Err::InternalCheck,
            "ramification degree is not 2q");
    for (const auto& pt : info.points)
        require(!pt.is_infinity(), Err::InternalCheck, "infinity in the branch locus");

    return CollapseMap{field, h, std::move(info.points), static_cast<int64_t>(2 * q)};
}

}  // namespace gonal
