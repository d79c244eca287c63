// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include "gonal/covers.hpp"

#include <algorithm>
#include <numeric>

namespace gonal {

uint64_t factor_degree(const CyclicFactor& f) {
    if (const auto* k = std::get_if<KummerFactor>(&f)) return k->gamma;
    return std::get<ArtinSchreierFactor>(f).pi.field()->p();
}

const UniPoly& factor_pi(const CyclicFactor& f) {
    if (const auto* k = std::get_if<KummerFactor>(&f)) return k->pi;
    return std::get<ArtinSchreierFactor>(f).pi;
}

const Field& CoverSpec::field() const {
    require(!factors.empty(), Err::InvalidSpec, "cover with no factors");
    return factor_pi(factors.front()).field();
}

uint64_t CoverSpec::degree() const {
    uint64_t d = 1;
    for (const auto& f : factors) d *= factor_degree(f);
    return d;
}

PointSet CoverSpec::branch_points() const {
    PointSet pts;
    for (const auto& f : factors) pts.insert(ClosedPoint::at(factor_pi(f)));
    return pts;
}

void CoverSpec::validate() const {
    if (factors.empty()) fail(Err::InvalidSpec, "cover with no factors");
    const Field& f = field();
    const uint64_t q = f->order();
    for (const auto& fac : factors) {
        const UniPoly& pi = factor_pi(fac);
        if (pi.field().get() != f.get()) fail(Err::InvalidSpec, "factors over different fields");
        if (pi.degree() < 1 || !pi.is_monic() || !is_irreducible(pi))
            fail(Err::InvalidSpec, "branch polynomial must be monic irreducible");
        if (const auto* kum = std::get_if<KummerFactor>(&fac)) {
            if (kum->gamma < 2) fail(Err::InvalidSpec, "Kummer degree must be >= 2");
            if ((q - 1) % kum->gamma != 0)
                fail(Err::InvalidSpec, "Kummer degree does not divide q-1");
            if (pi.degree() % static_cast<int>(kum->gamma) != 0)
                fail(Err::InvalidSpec, "deg pi must be divisible by the Kummer degree");
        }
    }
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (std::gcd(factor_degree(factors[i]), factor_degree(factors[j])) != 1)
                fail(Err::InvalidSpec, "composite factor degrees must be coprime");
            if (factor_pi(factors[i]) == factor_pi(factors[j]))
                fail(Err::InvalidSpec, "composite branch points must be distinct");
        }
}

// ---------------------------------------------------------------------------
// Ray class search
// ---------------------------------------------------------------------------

BigInt ray_class_order(uint64_t q, int d, int e) {
    if (d < 1 || e < 1) fail(Err::BadInput, "modulus needs d >= 1 and e >= 1");
    const BigInt qq(q);
    const BigInt qd = boost::multiprecision::pow(qq, static_cast<unsigned>(d));
    return (qd - 1) / (qq - 1) *
           boost::multiprecision::pow(qq, static_cast<unsigned>(d * (e - 1)));
}

namespace {

// number of avoid entries that are finite degree-d points
int64_t avoided_of_degree(const PointSet& avoid, int d) {
    int64_t n = 0;
    for (const auto& pt : avoid)
        if (!pt.is_infinity() && pt.degree() == d) ++n;
    return n;
}

bool irreducible_available(uint64_t q, int d, const PointSet& avoid) {
    return count_irreducibles(q, d) > avoided_of_degree(avoid, d);
}

}  // namespace

Modulus find_modulus(const Field& field, uint64_t gamma, const PointSet& avoid, int cap) {
    if (gamma < 2) fail(Err::BadInput, "gamma must be >= 2");
    const uint64_t q = field->order();
    for (int sum = 2; sum <= cap; ++sum) {
        for (int d = 1; d < sum; ++d) {
            const int e = sum - d;
            if (ray_class_order(q, d, e) % gamma != 0) continue;
            if (!irreducible_available(q, d, avoid)) continue;
            return Modulus{ClosedPoint::at(nth_irreducible(field, d, avoid)), e};
        }
    }
    fail(Err::SearchCapExceeded,
         "no admissible modulus with d+e <= " + std::to_string(cap) + " for gamma=" +
             std::to_string(gamma));
}

// ---------------------------------------------------------------------------
// Explicit realization
// ---------------------------------------------------------------------------

namespace {

struct GammaShape {
    bool wild = false;                                 // p | gamma
    std::vector<std::pair<uint64_t, uint64_t>> tame;   // (prime l, part l^a), ascending l
};

GammaShape decompose_gamma(uint64_t gamma, uint64_t p, uint64_t q) {
    if (gamma < 2) fail(Err::BadInput, "gamma must be >= 2");
    GammaShape shape;
    uint64_t m = gamma;
    if (m % p == 0) {
        m /= p;
        if (m % p == 0)
            fail(Err::UnsupportedGamma, "p^2 | gamma needs Artin-Schreier-Witt towers");
        shape.wild = true;
    }
    for (uint64_t l = 2; l * l <= m; ++l) {
        if (m % l != 0) continue;
        uint64_t part = 1;
        while (m % l == 0) {
            part *= l;
            m /= l;
        }
        shape.tame.emplace_back(l, part);
    }
    if (m > 1) shape.tame.emplace_back(m, m);
    for (const auto& [l, part] : shape.tame) {
        (void)l;
        if ((q - 1) % part != 0)
            fail(Err::UnsupportedGamma, "prime-power part " + std::to_string(part) +
                                            " of gamma does not divide q-1 = " +
                                            std::to_string(q - 1));
    }
    return shape;
}

// smallest admissible degree >= lower with a fresh irreducible outside avoid;
// Kummer factors need multiple-of-gamma degrees
int pick_degree(uint64_t q, int lower, uint64_t multiple_of, const PointSet& avoid) {
    int d = std::max(lower, 1);
    if (multiple_of > 1) {
        const int g = static_cast<int>(multiple_of);
        d = ((d + g - 1) / g) * g;
    }
    while (true) {
        if (irreducible_available(q, d, avoid)) return d;
        d += multiple_of > 1 ? static_cast<int>(multiple_of) : 1;
        require(d < 1 << 20, Err::InternalCheck, "runaway degree search");
    }
}

int64_t cyclic_genus(const CyclicFactor& f) {
    const int64_t d = factor_pi(f).degree();
    if (const auto* k = std::get_if<KummerFactor>(&f)) {
        const int64_t g = k->gamma;
        require((g - 1) * (d - 2) % 2 == 0, Err::InternalCheck, "non-integer Kummer genus");
        return (g - 1) * (d - 2) / 2;
    }
    const int64_t p = factor_pi(f).field()->p();
    return (p - 1) * (d - 1);
}

}  // namespace

int64_t cover_genus(const CoverSpec& spec) {
    spec.validate();
    int64_t g = 0;
    uint64_t deg = 1;
    for (const auto& f : spec.factors) {
        const int64_t gf = cyclic_genus(f);
        const int64_t df = static_cast<int64_t>(factor_degree(f));
        g = df * g + static_cast<int64_t>(deg) * gf +
            (static_cast<int64_t>(deg) - 1) * (df - 1);
        deg *= static_cast<uint64_t>(df);
    }
    return g;
}

bool verify_split_infty(const CoverSpec& spec) {
    const Field& f = spec.field();
    for (const auto& fac : spec.factors) {
        if (const auto* kum = std::get_if<KummerFactor>(&fac)) {
            if (kum->pi.degree() % static_cast<int>(kum->gamma) != 0) return false;
            // gamma-th roots of unity in F_q, counted literally
            uint64_t roots = 0;
            for (const auto& c : f->elements())
                if (!c.is_zero() && pow(c, kum->gamma) == f->one()) ++roots;
            if (roots != kum->gamma) return false;
        } else {
            const auto& as = std::get<ArtinSchreierFactor>(fac);
            if (as.pi.degree() < 1) return false;  // 1/pi must vanish at infinity
            uint64_t roots = 0;
            for (const auto& c : f->elements())
                if (pow(c, f->p()) == c) ++roots;
            if (roots != f->p()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Fiber counting
// ---------------------------------------------------------------------------

FiberCounter::FiberCounter(const CoverSpec& spec, Field ext) : ext_(std::move(ext)) {
    const uint64_t Q = ext_->order();
    for (const auto& f : spec.factors) {
        const bool as = std::holds_alternative<ArtinSchreierFactor>(f);
        const uint64_t gamma = factor_degree(f);
        parts_.push_back(Part{as, gamma, embed_poly(factor_pi(f), ext_),
                              as ? 0 : (Q - 1) / gamma});
    }
}

uint64_t FiberCounter::count(const std::optional<FieldElement>& t0) const {
    uint64_t total = 1;
    for (const auto& part : parts_) {
        uint64_t n;
        if (!t0.has_value()) {
            n = part.gamma;  // infinity splits completely in every factor
        } else {
            const FieldElement value = part.pi_ext.eval(*t0);
            if (value.is_zero()) {
                n = 1;  // the unique totally ramified point above the branch point
            } else if (part.artin_schreier) {
                n = trace_to_prime(inverse(value)) == 0 ? part.gamma : 0;
            } else {
                n = pow(value, part.residue_power) == ext_->one() ? part.gamma : 0;
            }
        }
        if (n == 0) return 0;
        total *= n;
    }
    return total;
}

uint64_t fiber_count_X(const CoverSpec& spec, const std::optional<FieldElement>& t0,
                       const Field& ext) {
    return FiberCounter(spec, ext).count(t0);
}

// ---------------------------------------------------------------------------
// build_cover
// ---------------------------------------------------------------------------

CoverData build_cover(const Field& field, uint64_t gamma, const PointSet& avoid,
                      int min_pi_degree, int cap) {
    const uint64_t q = field->order();
    const GammaShape shape = decompose_gamma(gamma, field->p(), q);

    // numeric witness of the divisibility search, independent of realization
    Modulus modulus = find_modulus(field, gamma, avoid, cap);

    PointSet used = avoid;
    std::vector<CyclicFactor> factors;
    if (shape.wild) {
        const int d = pick_degree(q, min_pi_degree, 1, used);
        UniPoly pi = nth_irreducible(field, d, used);
        used.insert(ClosedPoint::at(pi));
        factors.push_back(ArtinSchreierFactor{std::move(pi)});
    }
    for (const auto& [l, part] : shape.tame) {
        (void)l;
        const int d = pick_degree(q, min_pi_degree, part, used);
        UniPoly pi = nth_irreducible(field, d, used);
        used.insert(ClosedPoint::at(pi));
        factors.push_back(KummerFactor{static_cast<uint32_t>(part), std::move(pi)});
    }

    CoverSpec spec{std::move(factors)};
    spec.validate();
    require(spec.degree() == gamma, Err::InternalCheck, "factor degrees do not multiply to gamma");
    require(verify_split_infty(spec), Err::InternalCheck, "infinity does not split completely");

    CoverData data{spec, gamma, cover_genus(spec), spec.branch_points(), std::move(modulus)};
    return data;
}

// ---------------------------------------------------------------------------
// Absolute irreducibility certificates
// ---------------------------------------------------------------------------

namespace {

// place multiplicities of u: finite factors of num (positive) and den
// (negative), plus the valuation at infinity
std::vector<int64_t> place_multiplicities(const RatFn& u) {
    std::vector<int64_t> mults;
    if (!u.num().is_zero() && u.num().degree() > 0)
        for (const auto& [g, m] : factorize(u.num()).factors) {
            (void)g;
            mults.push_back(m);
        }
    if (u.den().degree() > 0)
        for (const auto& [g, m] : factorize(u.den()).factors) {
            (void)g;
            mults.push_back(-static_cast<int64_t>(m));
        }
    const int64_t v_inf = static_cast<int64_t>(u.den().degree()) - u.num().degree();
    if (v_inf != 0) mults.push_back(v_inf);
    return mults;
}

}  // namespace

IrredCert abs_irreducible_kummer(uint32_t gamma, const RatFn& u) {
    if (u.num().is_zero() || (u.num().degree() == 0 && u.den().degree() == 0))
        return IrredCert::Inconclusive;
    const auto mults = place_multiplicities(u);
    std::vector<uint64_t> primes;
    uint64_t m = gamma;
    for (uint64_t l = 2; l * l <= m; ++l)
        if (m % l == 0) {
            primes.push_back(l);
            while (m % l == 0) m /= l;
        }
    if (m > 1) primes.push_back(m);
    for (uint64_t l : primes) {
        const bool ok = std::any_of(mults.begin(), mults.end(), [&](int64_t v) {
            return v % static_cast<int64_t>(l) != 0;
        });
        if (!ok) return IrredCert::Inconclusive;
    }
    if (gamma % 4 == 0) {
        // exclude u in -4 K^4: demand a multiplicity coprime to gamma itself
        const bool ok = std::any_of(mults.begin(), mults.end(), [&](int64_t v) {
            const int64_t a = v < 0 ? -v : v;
            return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(gamma)) == 1;
        });
        if (!ok) return IrredCert::Inconclusive;
    }
    return IrredCert::Certified;
}

IrredCert abs_irreducible_artin_schreier(const RatFn& u) {
    if (u.num().is_zero()) return IrredCert::Inconclusive;
    if (u.den().degree() > 0)
        for (const auto& [g, m] : factorize(u.den()).factors) {
            (void)g;
            if (m == 1) return IrredCert::Certified;
        }
    if (static_cast<int64_t>(u.num().degree()) - u.den().degree() == 1)
        return IrredCert::Certified;  // simple pole at infinity
    return IrredCert::Inconclusive;
}

IrredCert abs_irreducible_cyclic(const CyclicFactor& kind, const RatFn& u) {
    if (const auto* k = std::get_if<KummerFactor>(&kind)) return abs_irreducible_kummer(k->gamma, u);
    return abs_irreducible_artin_schreier(u);
}

// ---------------------------------------------------------------------------
// Parity obstruction
// ---------------------------------------------------------------------------

ParitySet parity_obstruction(uint64_t gamma, uint64_t q) {
    bool prime = gamma >= 2;
    for (uint64_t d = 2; d * d <= gamma; ++d)
        if (gamma % d == 0) prime = false;
    if (!prime || gamma == 2) fail(Err::NotPrime, "gamma must be an odd prime");
    if (q % gamma == 0) fail(Err::GammaDividesQ, "gamma must not divide q");
    // genus (gamma-1)/2 (m-2): even for every m iff (gamma-1)/2 is even
    return ((gamma - 1) / 2) % 2 == 0 ? ParitySet::EvenOnly : ParitySet::Both;
}

}  // namespace gonal
