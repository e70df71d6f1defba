#include "finegeo/gf.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fgeo {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- polynomial helpers over GF(p), coefficients as ints mod p ---

using PolyP = std::vector<int>; // little-endian, no trailing-zero guarantee

int poly_deg(const PolyP& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

PolyP poly_mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, int p) {
    PolyP r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    int dm = poly_deg(m);
    for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
        int c = r[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        // m is monic: subtract c * x^(i-dm) * m
        for (int j = 0; j <= dm; ++j) {
            auto& t = r[static_cast<std::size_t>(i - dm + j)];
            t = ((t - c * m[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    r.resize(static_cast<std::size_t>(dm));
    return r;
}

// Irreducibility over GF(p) by exhaustive trial division (desk scale).
bool irreducible_p(const PolyP& f, int p) {
    int d = poly_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    // enumerate all monic divisors of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            PolyP g(static_cast<std::size_t>(e) + 1, 0);
            long t = idx;
            for (int i = 0; i < e; ++i) { g[static_cast<std::size_t>(i)] = static_cast<int>(t % p); t /= p; }
            g[static_cast<std::size_t>(e)] = 1;
            // long-divide f by g, monic divisor
            PolyP r = f;
            for (int i = poly_deg(r); i >= e; --i) {
                int c = r[static_cast<std::size_t>(i)];
                if (c == 0) continue;
                for (int j = 0; j <= e; ++j) {
                    auto& x = r[static_cast<std::size_t>(i - e + j)];
                    x = ((x - c * g[static_cast<std::size_t>(j)]) % p + p) % p;
                }
            }
            if (poly_deg(r) < 0) return false;
        }
    }
    return true;
}

void skip_ws(const char*& it, const char* end) {
    while (it != end && std::isspace(static_cast<unsigned char>(*it))) ++it;
}

} // namespace

BaseField::BaseField(int p, int k, std::vector<int> modulus) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("BaseField: p must be prime");
    if (k < 1) throw std::invalid_argument("BaseField: k must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > (1 << 20)) throw std::domain_error("BaseField: parameters too large");
    }
    q_ = static_cast<int>(q);

    if (modulus.empty()) {
        if (k == 1) {
            modulus = {0}; // modulus x
        } else {
            // lexicographically smallest monic irreducible, low-degree
            // coefficients compared first
            long count = q;
            for (long idx = 0; idx < count && modulus.empty(); ++idx) {
                PolyP f(static_cast<std::size_t>(k) + 1, 0);
                long t = idx;
                for (int i = k - 1; i >= 0; --i) { f[static_cast<std::size_t>(i)] = static_cast<int>(t % p); t /= p; }
                f[static_cast<std::size_t>(k)] = 1;
                if (irreducible_p(f, p)) modulus.assign(f.begin(), f.end() - 1);
            }
        }
    } else {
        if (static_cast<int>(modulus.size()) != k)
            throw std::invalid_argument("BaseField: modulus must have k coefficients");
        for (auto& c : modulus) c = ((c % p) + p) % p;
        if (k > 1) {
            PolyP f(modulus.begin(), modulus.end());
            f.push_back(1);
            if (!irreducible_p(f, p))
                throw std::invalid_argument("BaseField: modulus is reducible over GF(p)");
        }
    }
    modulus_ = modulus;

    // tables
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(static_cast<std::size_t>(q_), 0);
    inv_.assign(static_cast<std::size_t>(q_), 0);
    PolyP m(modulus_.begin(), modulus_.end());
    m.push_back(1);
    auto unpack = [&](int x) {
        PolyP c(static_cast<std::size_t>(k_), 0);
        for (int i = 0; i < k_; ++i) { c[static_cast<std::size_t>(i)] = x % p_; x /= p_; }
        return c;
    };
    auto pack = [&](const PolyP& c) {
        int x = 0;
        for (int i = k_ - 1; i >= 0; --i) x = x * p_ + (i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0);
        return x;
    };
    for (int x = 0; x < q_; ++x) {
        PolyP cx = unpack(x);
        PolyP nx = cx;
        for (auto& c : nx) c = (p_ - c) % p_;
        neg_[static_cast<std::size_t>(x)] = static_cast<Fel>(pack(nx));
        for (int y = 0; y < q_; ++y) {
            PolyP cy = unpack(y);
            PolyP s = cx;
            for (int i = 0; i < k_; ++i) s[static_cast<std::size_t>(i)] = (s[static_cast<std::size_t>(i)] + cy[static_cast<std::size_t>(i)]) % p_;
            add_[idx(static_cast<Fel>(x), static_cast<Fel>(y))] = static_cast<Fel>(pack(s));
            PolyP pr = poly_mul_mod(cx, cy, m, p_);
            mul_[idx(static_cast<Fel>(x), static_cast<Fel>(y))] = static_cast<Fel>(pack(pr));
        }
    }
    for (int x = 1; x < q_; ++x)
        for (int y = 1; y < q_; ++y)
            if (mul_[idx(static_cast<Fel>(x), static_cast<Fel>(y))] == 1) { inv_[static_cast<std::size_t>(x)] = static_cast<Fel>(y); break; }
}

Fel BaseField::inv(Fel x) const {
    if (x == 0) throw std::domain_error("BaseField: inverse of zero");
    return inv_[x];
}

std::vector<int> BaseField::coeffs(Fel x) const {
    std::vector<int> c(static_cast<std::size_t>(k_), 0);
    int v = x;
    for (int i = 0; i < k_; ++i) { c[static_cast<std::size_t>(i)] = v % p_; v /= p_; }
    return c;
}

Fel BaseField::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != k_)
        throw std::invalid_argument("BaseField: coefficient vector has wrong length");
    int x = 0;
    for (int i = k_ - 1; i >= 0; --i) {
        int ci = ((c[static_cast<std::size_t>(i)] % p_) + p_) % p_;
        x = x * p_ + ci;
    }
    return static_cast<Fel>(x);
}

std::string BaseField::to_string(Fel x) const {
    if (k_ == 1) return std::to_string(static_cast<int>(x));
    auto c = coeffs(x);
    std::string s = "[";
    for (int i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(c[static_cast<std::size_t>(i)]);
    }
    s += "]";
    return s;
}

Fel BaseField::parse(const char*& it, const char* end) const {
    skip_ws(it, end);
    if (it == end) throw std::invalid_argument("field element: unexpected end of input");
    if (*it == '[') {
        ++it;
        std::vector<int> c;
        for (int i = 0; i < k_; ++i) {
            skip_ws(it, end);
            bool negv = false;
            if (it != end && *it == '-') { negv = true; ++it; }
            if (it == end || !std::isdigit(static_cast<unsigned char>(*it)))
                throw std::invalid_argument("field element: digit expected");
            int v = 0;
            while (it != end && std::isdigit(static_cast<unsigned char>(*it))) v = v * 10 + (*it++ - '0');
            c.push_back(negv ? -v : v);
            skip_ws(it, end);
            if (i + 1 < k_) {
                if (it == end || *it != ',') throw std::invalid_argument("field element: ',' expected");
                ++it;
            }
        }
        skip_ws(it, end);
        if (it == end || *it != ']') throw std::invalid_argument("field element: ']' expected");
        ++it;
        return from_coeffs(c);
    }
    if (k_ != 1)
        throw std::invalid_argument("field element: '[' expected for extension-field element");
    bool negv = false;
    if (*it == '-') { negv = true; ++it; }
    if (it == end || !std::isdigit(static_cast<unsigned char>(*it)))
        throw std::invalid_argument("field element: digit expected");
    int v = 0;
    while (it != end && std::isdigit(static_cast<unsigned char>(*it))) v = v * 10 + (*it++ - '0');
    if (negv) v = -v;
    return from_coeffs({v});
}

Fel BaseField::parse(const std::string& s) const {
    const char* it = s.data();
    const char* end = s.data() + s.size();
    Fel x = parse(it, end);
    skip_ws(it, end);
    if (it != end) throw std::invalid_argument("field element: trailing characters");
    return x;
}

std::string BaseField::modulus_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
    }
    s += ",1]";
    return s;
}

// ---------------------------------------------------------------------------

namespace {

// polynomial helpers over a BaseField, coeffs as Fel, little-endian
using PolyB = std::vector<Fel>;

int pdeg(const PolyB& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

PolyB pmul(const BaseField& F, const PolyB& a, const PolyB& b) {
    PolyB r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

// r -= c * x^s * g
void psubmul(const BaseField& F, PolyB& r, Fel c, int s, const PolyB& g) {
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] != 0) {
            auto& t = r[static_cast<std::size_t>(s) + j];
            t = F.sub(t, F.mul(c, g[j]));
        }
}

// remainder of a by monic g (in place)
void pmod(const BaseField& F, PolyB& a, const PolyB& g) {
    int dg = pdeg(g);
    for (int i = pdeg(a); i >= dg; i = pdeg(a)) {
        Fel c = a[static_cast<std::size_t>(i)];
        psubmul(F, a, c, i - dg, g);
    }
}

bool irreducible_b(const BaseField& F, const PolyB& f) {
    int d = pdeg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    long q = F.q();
    for (int e = 1; 2 * e <= d; ++e) {
        long count = 1;
        for (int i = 0; i < e; ++i) count *= q;
        for (long idx = 0; idx < count; ++idx) {
            PolyB g(static_cast<std::size_t>(e) + 1, 0);
            long t = idx;
            for (int i = 0; i < e; ++i) { g[static_cast<std::size_t>(i)] = static_cast<Fel>(t % q); t /= q; }
            g[static_cast<std::size_t>(e)] = 1;
            PolyB r = f;
            pmod(F, r, g);
            if (pdeg(r) < 0) return false;
        }
    }
    return true;
}

} // namespace

FieldTower::FieldTower(int p, int k, int n, std::vector<int> base_modulus,
                       std::vector<Fel> top_modulus)
    : base_(p, k, std::move(base_modulus)), n_(n) {
    if (n < 1) throw std::invalid_argument("FieldTower: n must be >= 1");
    long size = 1;
    for (int i = 0; i < k * n; ++i) {
        size *= p;
        if (size > (1 << 20)) throw std::domain_error("FieldTower: parameters too large");
    }
    if (top_modulus.empty()) {
        if (n == 1) {
            top_modulus = {0};
        } else {
            long count = 1;
            for (int i = 0; i < n; ++i) count *= base_.q();
            for (long idx = 0; idx < count && top_modulus.empty(); ++idx) {
                PolyB f(static_cast<std::size_t>(n) + 1, 0);
                long t = idx;
                for (int i = n - 1; i >= 0; --i) { f[static_cast<std::size_t>(i)] = static_cast<Fel>(t % base_.q()); t /= base_.q(); }
                f[static_cast<std::size_t>(n)] = 1;
                if (irreducible_b(base_, f)) top_modulus.assign(f.begin(), f.end() - 1);
            }
        }
    } else {
        if (static_cast<int>(top_modulus.size()) != n)
            throw std::invalid_argument("FieldTower: top modulus must have n coefficients");
        if (n > 1) {
            PolyB f(top_modulus.begin(), top_modulus.end());
            f.push_back(1);
            if (!irreducible_b(base_, f))
                throw std::invalid_argument("FieldTower: top modulus is reducible over GF(q)");
        }
    }
    top_modulus_ = std::move(top_modulus);
}

long FieldTower::top_order() const {
    long s = 1;
    for (int i = 0; i < n_; ++i) s *= q();
    return s;
}

FElem FieldTower::from_base(Fel c) const {
    FElem x(n_);
    x[0] = c;
    return x;
}

bool FieldTower::in_base(const FElem& x) const {
    for (int i = 1; i < n_; ++i)
        if (x[i] != 0) return false;
    return true;
}

FElem FieldTower::add(const FElem& x, const FElem& y) const {
    FElem r(n_);
    for (int i = 0; i < n_; ++i) r[i] = base_.add(x[i], y[i]);
    return r;
}

FElem FieldTower::sub(const FElem& x, const FElem& y) const {
    FElem r(n_);
    for (int i = 0; i < n_; ++i) r[i] = base_.sub(x[i], y[i]);
    return r;
}

FElem FieldTower::neg(const FElem& x) const {
    FElem r(n_);
    for (int i = 0; i < n_; ++i) r[i] = base_.neg(x[i]);
    return r;
}

FElem FieldTower::mul_base(Fel c, const FElem& x) const {
    FElem r(n_);
    for (int i = 0; i < n_; ++i) r[i] = base_.mul(c, x[i]);
    return r;
}

FElem FieldTower::mul(const FElem& x, const FElem& y) const {
    if (x.size() != n_ || y.size() != n_)
        throw std::invalid_argument("FieldTower: element from a different tower");
    PolyB a(x.a.begin(), x.a.begin() + n_), b(y.a.begin(), y.a.begin() + n_);
    PolyB r = pmul(base_, a, b);
    PolyB m(top_modulus_.begin(), top_modulus_.end());
    m.push_back(1);
    pmod(base_, r, m);
    FElem out(n_);
    for (int i = 0; i < n_ && i < static_cast<int>(r.size()); ++i) out[i] = r[static_cast<std::size_t>(i)];
    return out;
}

FElem FieldTower::inv(const FElem& x) const {
    if (x.is_zero()) throw std::domain_error("FieldTower: inverse of zero");
    if (n_ == 1) return from_base(base_.inv(x[0]));
    // extended Euclid: s*x + t*m = gcd = unit
    PolyB r0(top_modulus_.begin(), top_modulus_.end());
    r0.push_back(1);
    PolyB r1(x.a.begin(), x.a.begin() + n_);
    PolyB s0{0}, s1{1}; // coefficients of x
    while (pdeg(r1) > 0) {
        // divide r0 by r1
        PolyB quo(static_cast<std::size_t>(std::max(0, pdeg(r0) - pdeg(r1)) + 1), 0);
        PolyB rem = r0;
        int d1 = pdeg(r1);
        Fel lead_inv = base_.inv(r1[static_cast<std::size_t>(d1)]);
        for (int i = pdeg(rem); i >= d1; i = pdeg(rem)) {
            Fel c = base_.mul(rem[static_cast<std::size_t>(i)], lead_inv);
            quo[static_cast<std::size_t>(i - d1)] = c;
            psubmul(base_, rem, c, i - d1, r1);
        }
        PolyB s2 = pmul(base_, quo, s1);
        s2.resize(std::max(s0.size(), s2.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = base_.sub(s0[i], s2[i]);
        for (std::size_t i = s0.size(); i < s2.size(); ++i) s2[i] = base_.neg(s2[i]);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (pdeg(r1) != 0) throw std::domain_error("FieldTower: modulus not irreducible");
    Fel c = base_.inv(r1[0]);
    FElem out(n_);
    for (int i = 0; i < n_ && i < static_cast<int>(s1.size()); ++i) out[i] = base_.mul(c, s1[static_cast<std::size_t>(i)]);
    // reduce mod modulus in case s1 overflowed degree n-1 (it cannot, but keep exact)
    return out;
}

FElem FieldTower::pow(const FElem& x, long e) const {
    if (e < 0) return pow(inv(x), -e);
    FElem r = one();
    FElem b = x;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int FieldTower::degree_over_base(const FElem& x) const {
    if (x.size() != n_) throw std::invalid_argument("FieldTower: element from a different tower");
    // rank of {1, x, x^2, ...} over GF(q), grown one power at a time
    std::vector<FElem> basis; // row-reduced powers
    FElem p = one();
    for (int m = 1; m <= n_; ++m) {
        p = (m == 1) ? p : p; // powers: after loop body below, p holds x^(m-1)
        FElem v = p;
        // reduce v against current basis rows (each has a leading coordinate)
        for (const auto& b : basis) {
            int lead = b.first_nonzero();
            if (v[lead] != 0) {
                Fel c = base_.div(v[lead], b[lead]);
                for (int i = 0; i < n_; ++i) v[i] = base_.sub(v[i], base_.mul(c, b[i]));
            }
        }
        if (v.is_zero()) return m - 1; // x^(m-1) dependent on lower powers
        basis.push_back(v);
        p = mul(p, x); // hold x^m for the next round; x^m dependent <=> degree m
        FElem w = p;
        for (const auto& b : basis) {
            int lead = b.first_nonzero();
            if (w[lead] != 0) {
                Fel c = base_.div(w[lead], b[lead]);
                for (int i = 0; i < n_; ++i) w[i] = base_.sub(w[i], base_.mul(c, b[i]));
            }
        }
        if (w.is_zero()) return m;
        basis.push_back(w);
        p = mul(p, x);
        // now p = x^(m+1); continue with m+2 handled next iteration
        m += 1;
    }
    return n_;
}

long FieldTower::index_of(const FElem& x) const {
    long idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * q() + x[i];
    return idx;
}

FElem FieldTower::from_index(long i) const {
    FElem x(n_);
    for (int j = 0; j < n_; ++j) { x[j] = static_cast<Fel>(i % q()); i /= q(); }
    return x;
}

FElem FieldTower::subfield_generator(int h) const {
    if (h < 1 || n_ % h != 0)
        throw std::invalid_argument("FieldTower: h must divide n");
    for (long i = 0; i < top_order(); ++i) {
        FElem x = from_index(i);
        if (degree_over_base(x) == h) return x;
    }
    throw std::logic_error("FieldTower: no generator found");
}

FElem FieldTower::conjugacy_representative(const FElem& x) const {
    FElem best = x;
    FElem c = x;
    for (int i = 1; i < n_; ++i) {
        c = frobenius(c);
        if (index_of(c) < index_of(best)) best = c;
    }
    return best;
}

std::string FieldTower::to_string(const FElem& x) const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += base_.to_string(x[i]);
    }
    s += "]";
    return s;
}

FElem FieldTower::parse(const std::string& s) const {
    const char* it = s.data();
    const char* end = s.data() + s.size();
    skip_ws(it, end);
    if (it == end || *it != '[') throw std::invalid_argument("tower element: '[' expected");
    ++it;
    FElem x(n_);
    for (int i = 0; i < n_; ++i) {
        x[i] = base_.parse(it, end);
        skip_ws(it, end);
        if (i + 1 < n_) {
            if (it == end || *it != ',') throw std::invalid_argument("tower element: ',' expected");
            ++it;
        }
    }
    skip_ws(it, end);
    if (it == end || *it != ']') throw std::invalid_argument("tower element: ']' expected");
    ++it;
    skip_ws(it, end);
    if (it != end) throw std::invalid_argument("tower element: trailing characters");
    return x;
}

std::string FieldTower::top_modulus_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += base_.to_string(top_modulus_[static_cast<std::size_t>(i)]);
    }
    s += ",";
    s += base_.to_string(1);
    s += "]";
    return s;
}

} // namespace fgeo
