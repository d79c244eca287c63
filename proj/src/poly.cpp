// Copyright (c) 2026 The gonal authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE
// or https://www.apache.org/licenses/LICENSE-2.0).

#include "gonal/poly.hpp"

#include <algorithm>
#include <atomic>
#include <random>

namespace gonal {

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly::UniPoly(Field f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.spec() != field_.get()) fail(Err::FieldMismatch, "coefficient from a different field");
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::x(const Field& f) { return UniPoly(f, {f->zero(), f->one()}); }

UniPoly UniPoly::constant(const Field& f, const FieldElement& c) { return UniPoly(f, {c}); }

UniPoly UniPoly::from_indices(const Field& f, const std::vector<uint64_t>& idx) {
    std::vector<FieldElement> c;
    c.reserve(idx.size());
    for (uint64_t i : idx) c.push_back(f->from_index(i));
    return UniPoly(f, std::move(c));
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

FieldElement UniPoly::leading() const {
    if (is_zero()) fail(Err::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool UniPoly::is_monic() const { return !is_zero() && coeffs_.back() == field_->one(); }

UniPoly UniPoly::monic() const {
    if (is_zero()) fail(Err::ZeroPolynomial, "cannot normalize zero polynomial");
    if (is_monic()) return *this;
    return inverse(leading()) * *this;
}

FieldElement UniPoly::eval(const FieldElement& at) const {
    FieldElement acc = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
}

int UniPoly::compare(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const uint64_t ia = a.coeffs_[static_cast<size_t>(i)].index();
        const uint64_t ib = b.coeffs_[static_cast<size_t>(i)].index();
        if (ia != ib) return ia < ib ? -1 : 1;
    }
    return 0;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field().get() == b.field().get() && UniPoly::compare(a, b) == 0;
}

namespace {
void check_field(const UniPoly& a, const UniPoly& b) {
    if (a.field().get() != b.field().get())
        fail(Err::FieldMismatch, "polynomials over different fields");
}
}  // namespace

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    std::vector<FieldElement> c;
    const int n = std::max(a.degree(), b.degree());
    c.reserve(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return UniPoly(a.field(), std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    std::vector<FieldElement> c;
    const int n = std::max(a.degree(), b.degree());
    c.reserve(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return UniPoly(a.field(), std::move(c));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(-e);
    return UniPoly(a.field(), std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field());
    std::vector<FieldElement> c(static_cast<size_t>(a.degree() + b.degree() + 1),
                                a.field()->zero());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<size_t>(i + j)] = c[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
    }
    return UniPoly(a.field(), std::move(c));
}

UniPoly operator*(const FieldElement& s, const UniPoly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(s * e);
    return UniPoly(a.field(), std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    std::vector<FieldElement> rem(a.coeffs());
    const int db = b.degree();
    const FieldElement lb_inv = inverse(b.leading());
    std::vector<FieldElement> quo(
        a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0, f->zero());
    int dr = a.degree();
    auto retrim = [&]() {
        while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) --dr;
    };
    retrim();
    while (dr >= db) {
        const FieldElement c = rem[static_cast<size_t>(dr)] * lb_inv;
        const int shift = dr - db;
        quo[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(shift + i)] =
                rem[static_cast<size_t>(shift + i)] - c * b.coeff(i);
        retrim();
    }
    rem.resize(static_cast<size_t>(dr + 1), f->zero());
    return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

UniPoly derivative(const UniPoly& a) {
    if (a.degree() < 1) return UniPoly(a.field());
    std::vector<FieldElement> c;
    c.reserve(static_cast<size_t>(a.degree()));
    for (int i = 1; i <= a.degree(); ++i)
        c.push_back(a.field()->scalar(static_cast<uint32_t>(i % a.field()->p())) * a.coeff(i));
    return UniPoly(a.field(), std::move(c));
}

UniPoly compose(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    UniPoly acc(a.field());
    for (int i = a.degree(); i >= 0; --i)
        acc = acc * b + UniPoly::constant(a.field(), a.coeff(i));
    return acc;
}

UniPoly pow(const UniPoly& a, uint64_t e) {
    UniPoly result = UniPoly::constant(a.field(), a.field()->one());
    UniPoly base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

UniPoly powmod(const UniPoly& base, const BigInt& e, const UniPoly& mod) {
    UniPoly result = UniPoly::constant(base.field(), base.field()->one()) % mod;
    UniPoly b = base % mod;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) result = (result * b) % mod;
        b = (b * b) % mod;
        k >>= 1;
    }
    return result;
}

UniPoly embed_poly(const UniPoly& a, const Field& sup) {
    if (a.field().get() == sup.get()) return a;
    std::vector<FieldElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(embed(a.field(), sup, e));
    return UniPoly(sup, std::move(c));
}

// ---------------------------------------------------------------------------
// ClosedPoint
// ---------------------------------------------------------------------------

ClosedPoint ClosedPoint::infinity(const Field& f) { return ClosedPoint(f, true, UniPoly(f)); }

ClosedPoint ClosedPoint::at(UniPoly p) {
    if (p.degree() < 1) fail(Err::ConstantPolynomial, "closed point needs positive degree");
    if (!p.is_monic()) fail(Err::InvalidSpec, "closed point polynomial must be monic");
    Field f = p.field();
    return ClosedPoint(std::move(f), false, std::move(p));
}

int ClosedPoint::degree() const { return infinity_ ? 1 : poly_.degree(); }

const UniPoly& ClosedPoint::poly() const {
    if (infinity_) fail(Err::BadInput, "infinity has no polynomial");
    return poly_;
}

bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return false;
    if (a.is_infinity()) return a.field().get() == b.field().get();
    return a.poly() == b.poly();
}

bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity() != b.is_infinity()) return a.is_infinity();
    if (a.is_infinity()) return a.field().get() < b.field().get();
    if (a.field().get() != b.field().get()) return a.field().get() < b.field().get();
    return UniPoly::compare(a.poly(), b.poly()) < 0;
}

// ---------------------------------------------------------------------------
// RatFn
// ---------------------------------------------------------------------------

RatFn::RatFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check_field(num_, den_);
    if (den_.is_zero()) fail(Err::DivisionByZero, "rational function with zero denominator");
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const FieldElement lc = den_.leading();
    if (!(lc == den_.field()->one())) {
        const FieldElement inv_lc = inverse(lc);
        num_ = inv_lc * num_;
        den_ = inv_lc * den_;
    }
}

bool operator==(const RatFn& a, const RatFn& b) { return a.num() == b.num() && a.den() == b.den(); }

RatFn reciprocal(const RatFn& u) {
    if (u.num().is_zero()) fail(Err::DivisionByZero, "reciprocal of zero");
    return RatFn(u.den(), u.num());
}

RatFn compose(const UniPoly& outer, const RatFn& inner) {
    const Field& f = outer.field();
    if (f.get() != inner.field().get()) fail(Err::FieldMismatch, "compose over different fields");
    const int d = outer.degree();
    if (d <= 0) return RatFn(outer, UniPoly::constant(f, f->one()));
    // sum_i outer_i num^i den^(d-i) over den^d
    UniPoly num_acc(f);
    UniPoly num_pow = UniPoly::constant(f, f->one());
    std::vector<UniPoly> den_pows;
    den_pows.reserve(static_cast<size_t>(d + 1));
    UniPoly den_pow = UniPoly::constant(f, f->one());
    for (int i = 0; i <= d; ++i) {
        den_pows.push_back(den_pow);
        den_pow = den_pow * inner.den();
    }
    for (int i = 0; i <= d; ++i) {
        if (!outer.coeff(i).is_zero())
            num_acc = num_acc + outer.coeff(i) * (num_pow * den_pows[static_cast<size_t>(d - i)]);
        if (i < d) num_pow = num_pow * inner.num();
    }
    return RatFn(num_acc, den_pows.back());
}

std::optional<FieldElement> eval_p1(const RatFn& u, const std::optional<FieldElement>& s0,
                                    const Field& ext) {
    const int dn = u.num().degree(), dd = u.den().degree();
    if (!s0.has_value()) {
        if (dn > dd) return std::nullopt;
        if (dn < dd) return ext->zero();
        return embed(u.field(), ext, u.num().leading() / u.den().leading());
    }
    const UniPoly num = embed_poly(u.num(), ext);
    const UniPoly den = embed_poly(u.den(), ext);
    const FieldElement n = num.eval(*s0);
    const FieldElement d = den.eval(*s0);
    if (d.is_zero()) {
        require(!n.is_zero(), Err::InternalCheck, "reduced fraction with common root");
        return std::nullopt;
    }
    return n / d;
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

namespace {

std::atomic<uint64_t> g_seed{kDefaultSeed};
std::atomic<uint64_t> g_call_counter{0};

// p-th root of a polynomial all of whose exponents are divisible by p;
// coefficient roots via c^(q/p).
UniPoly pth_root(const UniPoly& f) {
    const Field& k = f.field();
    const uint32_t p = k->p();
    const uint64_t q = k->order();
    std::vector<FieldElement> c;
    c.reserve(static_cast<size_t>(f.degree() / static_cast<int>(p)) + 1);
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) {
        require(i % static_cast<int>(p) == 0, Err::InternalCheck, "pth_root alignment");
        c.push_back(pow(f.coeff(i), q / p));
    }
    for (int i = 0; i <= f.degree(); ++i)
        require(i % static_cast<int>(p) == 0 || f.coeff(i).is_zero(), Err::InternalCheck,
                "pth_root applied to a non-p-power");
    return UniPoly(k, std::move(c));
}

// Squarefree decomposition in characteristic p: returns (g, m) with the g
// monic, pairwise coprime, squarefree, and f = prod g^m.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(UniPoly f) {
    const uint32_t p = f.field()->p();
    std::vector<std::pair<UniPoly, int>> out;
    int e = 1;
    while (f.degree() > 0) {
        UniPoly d = derivative(f);
        if (d.is_zero()) {
            f = pth_root(f);
            e *= static_cast<int>(p);
            continue;
        }
        UniPoly u = gcd(f, d);     // multiplicity > 1 part (and all p-divisible part)
        UniPoly v = f / u;         // product of factors with multiplicity not divisible by p
        int k = 0;
        while (v.degree() > 0) {
            ++k;
            UniPoly w = gcd(u, v);
            UniPoly h = v / w;
            if (h.degree() > 0) out.emplace_back(h.monic(), e * k);
            v = std::move(w);
            u = u / v;
        }
        f = std::move(u);  // remaining multiplicities all divisible by p
    }
    return out;
}

// Distinct-degree: f monic squarefree; returns (product of degree-d factors, d).
std::vector<std::pair<UniPoly, int>> distinct_degree(UniPoly f) {
    const Field& k = f.field();
    const BigInt q = k->order();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly h = UniPoly::x(k) % f;
    const UniPoly x = UniPoly::x(k);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, q, f);
        UniPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); f = product of r >= 1 monic
// irreducibles of degree d.
void equal_degree(const UniPoly& f, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& k = f.field();
    const uint64_t q = k->order();
    const uint32_t p = k->p();
    UniPoly splitter(k);
    while (true) {
        // random nonzero u of degree < deg f
        std::vector<FieldElement> c;
        c.reserve(static_cast<size_t>(f.degree()));
        for (int i = 0; i < f.degree(); ++i) c.push_back(k->from_index(rng() % q));
        UniPoly u(k, std::move(c));
        if (u.is_zero()) continue;

        UniPoly g = gcd(u, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = std::move(g);
            break;
        }
        UniPoly w(k);
        if (p == 2) {
            // absolute-trace map: sum u^(2^i), i < n*d, lands in F_2 per factor
            const uint32_t bits = k->degree() * static_cast<uint32_t>(d);
            UniPoly t = u % f;
            UniPoly acc = t;
            for (uint32_t i = 1; i < bits; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            w = std::move(acc);
        } else {
            const BigInt exponent = (boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d)) - 1) / 2;
            w = powmod(u, exponent, f) - UniPoly::constant(k, k->one());
        }
        g = gcd(w, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = std::move(g);
            break;
        }
    }
    equal_degree(splitter, d, rng, out);
    equal_degree(f / splitter, d, rng, out);
}

}  // namespace

void set_factor_seed(uint64_t seed) { g_seed.store(seed); }
uint64_t factor_seed() { return g_seed.load(); }

Factorization factorize(const UniPoly& f) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "factorize(0)");
    Factorization fac{f.leading(), {}};
    if (f.degree() == 0) return fac;
    std::mt19937_64 rng(g_seed.load() + g_call_counter.fetch_add(1));
    for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<UniPoly> irred;
            equal_degree(prod, d, rng, irred);
            for (auto& g : irred) fac.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& a, const auto& b) { return UniPoly::compare(a.first, b.first) < 0; });
    return fac;
}

UniPoly expand(const Factorization& fac, const Field& f) {
    UniPoly acc = UniPoly::constant(f, fac.leading);
    for (const auto& [g, m] : fac.factors) acc = acc * pow(g, static_cast<uint64_t>(m));
    return acc;
}

bool is_irreducible(const UniPoly& f) {
    if (f.degree() < 1) fail(Err::ConstantPolynomial, "irreducibility needs degree >= 1");
    if (f.degree() == 1) return true;
    const Field& k = f.field();
    const BigInt q = k->order();
    const int m = f.degree();
    const UniPoly x = UniPoly::x(k);

    std::vector<int> prime_divs;
    int t = m;
    for (int d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            prime_divs.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) prime_divs.push_back(t);

    for (int l : prime_divs) {
        const BigInt e = boost::multiprecision::pow(q, static_cast<unsigned>(m / l));
        UniPoly h = powmod(x, e, f);
        if (gcd(h - x, f).degree() != 0) return false;
    }
    const BigInt e = boost::multiprecision::pow(q, static_cast<unsigned>(m));
    return (powmod(x, e, f) - x % f).is_zero();
}

UniPoly nth_irreducible(const Field& f, int d, const PointSet& avoid) {
    if (d < 1) fail(Err::BadInput, "irreducible degree must be >= 1");
    const uint64_t q = f->order();
    uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> c;
        c.reserve(static_cast<size_t>(d) + 1);
        uint64_t v = idx;
        for (int i = 0; i < d; ++i) {
            c.push_back(f->from_index(v % q));
            v /= q;
        }
        c.push_back(f->one());
        UniPoly cand(f, std::move(c));
        bool excluded = false;
        for (const auto& pt : avoid) {
            if (!pt.is_infinity() && pt.poly() == cand) {
                excluded = true;
                break;
            }
        }
        if (excluded) continue;
        if (is_irreducible(cand)) return cand;
    }
    fail(Err::Exhausted,
         "no unused irreducible of degree " + std::to_string(d) + " over F_" + std::to_string(q));
}

namespace {
int moebius(int m) {
    int result = 1;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            result = -result;
        }
    }
    if (m > 1) result = -result;
    return result;
}
}  // namespace

BigInt count_irreducibles(uint64_t q, int d) {
    if (d < 1) fail(Err::BadInput, "degree must be >= 1");
    BigInt sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = moebius(d / e);
        if (mu == 0) continue;
        sum += mu * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e));
    }
    require(sum % d == 0, Err::InternalCheck, "necklace count not divisible by degree");
    return sum / d;
}

std::vector<std::pair<FieldElement, int>> roots_in_field(const UniPoly& f, uint32_t k) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "roots of zero polynomial");
    const Field base = f.field();
    const Field ext = create_field(base->p(), base->degree() * k);
    const UniPoly fe = embed_poly(f, ext);
    std::vector<std::pair<FieldElement, int>> out;
    if (fe.degree() < 1) return out;
    for (const auto& [g, m] : factorize(fe).factors) {
        if (g.degree() != 1) continue;
        out.emplace_back(-g.coeff(0), m);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.index() < b.first.index(); });
    return out;
}

// ---------------------------------------------------------------------------
// BiPoly and resultants
// ---------------------------------------------------------------------------

BiPoly::BiPoly(Field f, int deg0, int deg1) : field_(std::move(f)) {
    grid_.assign(static_cast<size_t>(deg0 + 1),
                 std::vector<FieldElement>(static_cast<size_t>(deg1 + 1), field_->zero()));
}

int BiPoly::degree_bound(int var) const {
    return var == 0 ? static_cast<int>(grid_.size()) - 1 : static_cast<int>(grid_[0].size()) - 1;
}

void BiPoly::set(int i, int j, const FieldElement& c) {
    grid_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)) = c;
}

int BiPoly::degree_in(int var) const {
    for (int d = degree_bound(var); d >= 0; --d) {
        const int other = degree_bound(1 - var);
        for (int o = 0; o <= other; ++o) {
            const FieldElement& c = var == 0 ? grid_[static_cast<size_t>(d)][static_cast<size_t>(o)]
                                             : grid_[static_cast<size_t>(o)][static_cast<size_t>(d)];
            if (!c.is_zero()) return d;
        }
    }
    return -1;
}

std::vector<UniPoly> BiPoly::as_poly_in(int var) const {
    const int d = degree_in(var);
    std::vector<UniPoly> out;
    out.reserve(static_cast<size_t>(d + 1));
    const int other = degree_bound(1 - var);
    for (int k = 0; k <= d; ++k) {
        std::vector<FieldElement> c;
        c.reserve(static_cast<size_t>(other + 1));
        for (int o = 0; o <= other; ++o)
            c.push_back(var == 0 ? grid_[static_cast<size_t>(k)][static_cast<size_t>(o)]
                                 : grid_[static_cast<size_t>(o)][static_cast<size_t>(k)]);
        out.emplace_back(field_, std::move(c));
    }
    return out;
}

BiPoly BiPoly::derivative(int var) const {
    const int d0 = degree_bound(0), d1 = degree_bound(1);
    BiPoly out(field_, d0, d1);
    const uint32_t p = field_->p();
    for (int i = 0; i <= d0; ++i)
        for (int j = 0; j <= d1; ++j) {
            const int e = var == 0 ? i : j;
            if (e == 0) continue;
            const FieldElement c =
                field_->scalar(static_cast<uint32_t>(e % static_cast<int>(p))) * at(i, j);
            if (var == 0)
                out.set(i - 1, j, out.at(i - 1, j) + c);
            else
                out.set(i, j - 1, out.at(i, j - 1) + c);
        }
    return out;
}

namespace {

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    require(r.is_zero(), Err::InternalCheck, "Bareiss division not exact");
    return q;
}

// fraction-free determinant over F_q[t]
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m, const Field& f) {
    const size_t n = m.size();
    if (n == 0) return UniPoly::constant(f, f->one());
    bool negate = false;
    UniPoly prev = UniPoly::constant(f, f->one());
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return UniPoly(f);  // singular
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = UniPoly(f);
        }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

}  // namespace

UniPoly resultant(const std::vector<UniPoly>& A, const std::vector<UniPoly>& B, const Field& f) {
    const int n = static_cast<int>(A.size()) - 1;
    const int m = static_cast<int>(B.size()) - 1;
    if (n < 0 || m < 0) return UniPoly(f);
    if (n == 0) return pow(A[0], static_cast<uint64_t>(m));
    if (m == 0) return pow(B[0], static_cast<uint64_t>(n));
    const size_t size = static_cast<size_t>(n + m);
    std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size, UniPoly(f)));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = A[static_cast<size_t>(n - j)];
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            syl[static_cast<size_t>(m + r)][static_cast<size_t>(r + j)] = B[static_cast<size_t>(m - j)];
    return bareiss_det(std::move(syl), f);
}

UniPoly resultant_disc(const BiPoly& F, int var) {
    if (F.degree_in(var) < 1) fail(Err::BadInput, "resultant needs positive degree in the variable");
    if (F.degree_in(var) != F.degree_bound(var))
        fail(Err::DegenerateLeadingCoefficient, "declared leading coefficient vanishes");
    const auto A = F.as_poly_in(var);
    const auto B = F.derivative(var).as_poly_in(var);
    return resultant(A, B, F.field());
}

}  // namespace gonal
