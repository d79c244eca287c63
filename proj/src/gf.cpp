// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include "gonal/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace gonal {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomial helpers over F_p on raw residue vectors (constant-first).
// Only what the field substrate needs: reduction, gcd-based inverses and a
// Rabin irreducibility test for the modulus search.
// ---------------------------------------------------------------------------

using Vec = std::vector<uint32_t>;

void vtrim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int vdeg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

Vec vsub(const Vec& a, const Vec& b, uint32_t p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = (i < a.size() ? a[i] : 0u) + p - (i < b.size() ? b[i] : 0u);
        r[i] = static_cast<uint32_t>(s % p);
    }
    vtrim(r);
    return r;
}

Vec vmul(const Vec& a, const Vec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
        }
    }
    vtrim(r);
    return r;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

// a mod b, b nonzero; also exposes the quotient when needed
std::pair<Vec, Vec> vdivmod(const Vec& a, const Vec& b, uint32_t p) {
    Vec rem = a, quo;
    vtrim(rem);
    const int db = vdeg(b);
    if (db < 0) fail(Err::DivisionByZero, "polynomial division by zero over F_p");
    quo.assign(rem.size() > b.size() - 1 ? rem.size() - b.size() + 1 : 0, 0);
    const uint32_t lb_inv = inv_mod_p(b.back(), p);
    while (vdeg(rem) >= db) {
        const int shift = vdeg(rem) - db;
        const uint32_t c = static_cast<uint32_t>(uint64_t(rem.back()) * lb_inv % p);
        quo[shift] = c;
        for (int i = 0; i <= db; ++i) {
            uint64_t s = rem[shift + i] + uint64_t(p) * p - uint64_t(c) * b[i] % p;
            rem[shift + i] = static_cast<uint32_t>(s % p);
        }
        vtrim(rem);
    }
    vtrim(quo);
    return {quo, rem};
}

Vec vmod(const Vec& a, const Vec& b, uint32_t p) { return vdivmod(a, b, p).second; }

Vec vmonic(Vec a, uint32_t p) {
    vtrim(a);
    if (a.empty()) return a;
    const uint32_t inv = inv_mod_p(a.back(), p);
    for (auto& c : a) c = static_cast<uint32_t>(uint64_t(c) * inv % p);
    return a;
}

Vec vgcd(Vec a, Vec b, uint32_t p) {
    vtrim(a);
    vtrim(b);
    while (!b.empty()) {
        Vec r = vmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return vmonic(std::move(a), p);
}

// x^e mod f, e as plain integer (the substrate never needs e > p^n here)
Vec vpowmod_x(uint64_t e, const Vec& f, uint32_t p) {
    Vec result{1};
    Vec base{0, 1};
    base = vmod(base, f, p);
    while (e > 0) {
        if (e & 1) result = vmod(vmul(result, base, p), f, p);
        base = vmod(vmul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// inverse of a modulo f (gcd(a, f) = 1 expected)
Vec vinv_mod(const Vec& a, const Vec& f, uint32_t p) {
    // extended Euclid over F_p[x]
    Vec r0 = f, r1 = vmod(a, f, p);
    Vec t0, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = vdivmod(r0, r1, p);
        Vec t2 = vsub(t0, vmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (vdeg(r0) != 0) fail(Err::DivisionByZero, "element not invertible");
    const uint32_t s = inv_mod_p(r0[0], p);
    for (auto& c : t0) c = static_cast<uint32_t>(uint64_t(c) * s % p);
    vtrim(t0);
    return t0;
}

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

uint64_t ipow_u64(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Rabin: f (monic, degree n) irreducible over F_p iff x^(p^n) = x mod f and
// gcd(x^(p^(n/l)) - x, f) = 1 for every prime l | n.
bool rabin_irreducible(const Vec& f, uint32_t p) {
    const int n = vdeg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    std::vector<int> prime_divs;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divs.push_back(m);
    const Vec x{0, 1};
    for (int l : prime_divs) {
        Vec h = vpowmod_x(ipow_u64(p, static_cast<uint32_t>(n / l)), f, p);
        if (vdeg(vgcd(vsub(h, x, p), f, p)) != 0) return false;
    }
    Vec h = vpowmod_x(ipow_u64(p, static_cast<uint32_t>(n)), f, p);
    return vsub(h, x, p).empty();
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.spec() == nullptr || a.spec() != b.spec())
        fail(Err::FieldMismatch, "operands belong to different fields");
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

FieldSpec::FieldSpec(uint32_t p, uint32_t n, std::vector<uint32_t> modulus)
    : p_(p), n_(n), order_(ipow_u64(p, n)), modulus_(std::move(modulus)) {}

FieldElement FieldSpec::zero() const { return FieldElement(this, Vec(n_, 0)); }

FieldElement FieldSpec::one() const { return scalar(1); }

FieldElement FieldSpec::scalar(uint32_t residue) const {
    Vec c(n_, 0);
    c[0] = residue % p_;
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::element(std::vector<uint32_t> coeffs) const {
    if (coeffs.size() != n_) fail(Err::BadInput, "coefficient vector has wrong length");
    for (auto& c : coeffs) c %= p_;
    return FieldElement(this, std::move(coeffs));
}

FieldElement FieldSpec::from_index(uint64_t idx) const {
    Vec c(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        c[i] = static_cast<uint32_t>(idx % p_);
        idx /= p_;
    }
    if (idx != 0) fail(Err::BadInput, "element index out of range");
    return FieldElement(this, std::move(c));
}

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order_);
    for (uint64_t i = 0; i < order_; ++i) out.push_back(from_index(i));
    return out;
}

Field create_field(uint32_t p, uint32_t n) {
    if (n < 1) fail(Err::DegreeZero, "extension degree must be at least 1");
    if (!is_prime_u32(p)) fail(Err::NotPrime, "characteristic " + std::to_string(p) + " is not prime");

    static std::mutex reg_mutex;
    static std::map<std::pair<uint32_t, uint32_t>, Field> registry;
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = registry.find({p, n});
    if (it != registry.end()) return it->second;

    Vec modulus;
    if (n == 1) {
        modulus = {0, 1};  // x
    } else {
        // lexicographic scan: non-leading coefficients as base-p digits of k
        const uint64_t total = ipow_u64(p, n);
        for (uint64_t k = 0; k < total; ++k) {
            Vec cand(n + 1, 0);
            uint64_t v = k;
            for (uint32_t i = 0; i < n; ++i) {
                cand[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            cand[n] = 1;
            if (rabin_irreducible(cand, p)) {
                modulus = std::move(cand);
                break;
            }
        }
        require(!modulus.empty(), Err::InternalCheck, "no irreducible modulus found");
    }
    Field f(new FieldSpec(p, n, std::move(modulus)));
    registry.emplace(std::make_pair(p, n), f);
    return f;
}

// ---------------------------------------------------------------------------
// FieldElement arithmetic
// ---------------------------------------------------------------------------

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

uint64_t FieldElement::index() const {
    uint64_t idx = 0;
    const uint64_t p = field_->p();
    for (size_t i = coeffs_.size(); i-- > 0;) idx = idx * p + coeffs_[i];
    return idx;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const uint32_t p = a.spec()->p();
    Vec c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.coeffs()[i]) % p;
    return a.spec()->element(std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const uint32_t p = a.spec()->p();
    Vec c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + p - b.coeffs()[i]) % p;
    return a.spec()->element(std::move(c));
}

FieldElement operator-(const FieldElement& a) {
    const uint32_t p = a.spec()->p();
    Vec c = a.coeffs();
    for (auto& x : c) x = (p - x) % p;
    return a.spec()->element(std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const FieldSpec* f = a.spec();
    const uint32_t p = f->p();
    if (f->degree() == 1) {
        return f->element({static_cast<uint32_t>(uint64_t(a.coeffs()[0]) * b.coeffs()[0] % p)});
    }
    Vec prod = vmul(a.coeffs(), b.coeffs(), p);
    Vec red = vmod(prod, f->modulus(), p);
    red.resize(f->degree(), 0);
    return f->element(std::move(red));
}

FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    const FieldSpec* f = a.spec();
    const uint32_t p = f->p();
    if (f->degree() == 1) return f->element({inv_mod_p(a.coeffs()[0], p)});
    Vec inv = vinv_mod(a.coeffs(), f->modulus(), p);
    inv.resize(f->degree(), 0);
    return f->element(std::move(inv));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return a * inverse(b);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec() == b.spec() && a.coeffs() == b.coeffs();
}

FieldElement pow(const FieldElement& a, uint64_t e) {
    FieldElement result = a.spec()->one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElement frobenius(const FieldElement& a, uint32_t i) {
    FieldElement r = a;
    const uint64_t p = a.spec()->p();
    for (uint32_t k = 0; k < i; ++k) r = pow(r, p);
    return r;
}

uint32_t trace_to_prime(const FieldElement& a) {
    const uint32_t n = a.spec()->degree();
    FieldElement acc = a;
    FieldElement b = a;
    for (uint32_t i = 1; i < n; ++i) {
        b = pow(b, a.spec()->p());
        acc = acc + b;
    }
    for (size_t i = 1; i < acc.coeffs().size(); ++i)
        require(acc.coeffs()[i] == 0, Err::InternalCheck, "trace not in the prime field");
    return acc.coeffs()[0];
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

namespace {

// image of the sub generator in sup, cached per (sub, sup)
const FieldElement& generator_image(const Field& sub, const Field& sup) {
    static std::mutex emb_mutex;
    static std::map<std::pair<const FieldSpec*, const FieldSpec*>, FieldElement> cache;
    std::lock_guard<std::mutex> lock(emb_mutex);
    auto key = std::make_pair(sub.get(), sup.get());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // first root of sub's modulus in enumeration order
    const auto& mod = sub->modulus();
    for (uint64_t idx = 0; idx < sup->order(); ++idx) {
        FieldElement r = sup->from_index(idx);
        FieldElement acc = sup->zero();
        for (size_t i = mod.size(); i-- > 0;) acc = acc * r + sup->scalar(mod[i]);
        if (acc.is_zero()) return cache.emplace(key, std::move(r)).first->second;
    }
    fail(Err::InternalCheck, "sub modulus has no root in the super field");
}

}  // namespace

FieldElement embed(const Field& sub, const Field& sup, const FieldElement& a) {
    if (a.spec() != sub.get()) fail(Err::FieldMismatch, "element does not belong to the sub field");
    if (sub->p() != sup->p() || sup->degree() % sub->degree() != 0)
        fail(Err::NoEmbedding, "no embedding F_" + std::to_string(sub->order()) + " -> F_" +
                                   std::to_string(sup->order()));
    if (sub.get() == sup.get()) return a;
    if (sub->degree() == 1) return sup->scalar(a.coeffs()[0]);
    const FieldElement& g = generator_image(sub, sup);
    FieldElement acc = sup->zero();
    for (size_t i = a.coeffs().size(); i-- > 0;) acc = acc * g + sup->scalar(a.coeffs()[i]);
    return acc;
}

const char* err_name(Err e) {
    switch (e) {
        case Err::NotPrime: return "NotPrime";
        case Err::DegreeZero: return "DegreeZero";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::NoEmbedding: return "NoEmbedding";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::ConstantPolynomial: return "ConstantPolynomial";
        case Err::Exhausted: return "Exhausted";
        case Err::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
        case Err::InseparableMap: return "InseparableMap";
        case Err::SearchCapExceeded: return "SearchCapExceeded";
        case Err::UnsupportedGamma: return "UnsupportedGamma";
        case Err::GammaDividesQ: return "GammaDividesQ";
        case Err::InvalidSpec: return "InvalidSpec";
        case Err::BranchCollision: return "BranchCollision";
        case Err::IrreducibilityInconclusive: return "IrreducibilityInconclusive";
        case Err::CountMismatch: return "CountMismatch";
        case Err::NonIntegerGenus: return "NonIntegerGenus";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::MalformedCertificate: return "MalformedCertificate";
        case Err::BadInput: return "BadInput";
        case Err::InternalCheck: return "InternalCheck";
    }
    return "UnknownError";
}

}  // namespace gonal
