#pragma once

#include "finegeo/smallvec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fgeo {

using Fel = std::uint8_t; // element of a base field GF(p^k), as its canonical index

/// GF(p^k) with full arithmetic tables. Elements are indices 0..q-1; the index
/// is the p-adic packing of the coefficient vector over GF(p), little-endian
/// by degree (so 0 and 1 are the field's zero and one for every p,k).
class BaseField {
  public:
    /// Builds GF(p^k). If `modulus` is empty, the lexicographically smallest
    /// monic irreducible polynomial of degree k over GF(p) is selected
    /// (coefficients compared low degree first). `modulus` is given as its
    /// k low-degree coefficients over GF(p); the leading 1 is implicit.
    BaseField(int p, int k, std::vector<int> modulus = {});

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fel add(Fel x, Fel y) const { return add_[idx(x, y)]; }
    Fel sub(Fel x, Fel y) const { return add_[idx(x, neg_[y])]; }
    Fel mul(Fel x, Fel y) const { return mul_[idx(x, y)]; }
    Fel neg(Fel x) const { return neg_[x]; }
    Fel inv(Fel x) const;
    Fel div(Fel x, Fel y) const { return mul(x, inv(y)); }

    /// Coefficients over GF(p) of the element with the given index.
    std::vector<int> coeffs(Fel x) const;
    Fel from_coeffs(const std::vector<int>& c) const;

    /// Text form: a bare integer for prime fields, "[c0,...,ck-1]" otherwise.
    std::string to_string(Fel x) const;
    Fel parse(const std::string& s) const;
    Fel parse(const char*& it, const char* end) const; // advances the cursor

    std::string modulus_string() const;

    bool operator==(const BaseField& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

  private:
    std::size_t idx(Fel x, Fel y) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(q_) + y;
    }
    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_; // k coefficients, low degree first, leading 1 implicit
    std::vector<Fel> add_, mul_, neg_, inv_;
};

/// An element of the top field GF(q^n) of a FieldTower: n coefficients over
/// the base field, little-endian by degree.
using FElem = SmallVec;

/// GF(p) ⊂ GF(q) ⊂ GF(q^n) with q = p^k. The top field is built directly as
/// a degree-n extension of GF(q), so coefficient vectors over GF(q) are the
/// native representation of top elements.
class FieldTower {
  public:
    /// Moduli are deterministic (lex-smallest irreducible) unless supplied.
    /// Throws std::invalid_argument for non-prime p and std::domain_error
    /// when p^(k*n) exceeds the desk-scale limit 2^20.
    FieldTower(int p, int k, int n, std::vector<int> base_modulus = {},
               std::vector<Fel> top_modulus = {});

    const BaseField& base() const { return base_; }
    int n() const { return n_; }
    int q() const { return base_.q(); }
    long top_order() const; // q^n
    const std::vector<Fel>& top_modulus() const { return top_modulus_; } // n coeffs, low first

    FElem zero() const { return FElem(n_); }
    FElem one() const { return from_base(1); }
    FElem from_base(Fel c) const;
    bool is_zero(const FElem& x) const { return x.is_zero(); }
    bool in_base(const FElem& x) const;

    FElem add(const FElem& x, const FElem& y) const;
    FElem sub(const FElem& x, const FElem& y) const;
    FElem neg(const FElem& x) const;
    FElem mul(const FElem& x, const FElem& y) const;
    FElem mul_base(Fel c, const FElem& x) const;
    FElem inv(const FElem& x) const; // extended Euclid on polynomials
    FElem div(const FElem& x, const FElem& y) const { return mul(x, inv(y)); }
    FElem pow(const FElem& x, long e) const;
    FElem frobenius(const FElem& x) const { return pow(x, q()); } // x -> x^q

    /// Coordinates of x in the basis {1, t, ..., t^(n-1)}; the identity map
    /// in this representation.
    const FElem& as_base_vector(const FElem& x) const { return x; }

    /// Least m >= 1 with {1, x, ..., x^m} linearly dependent over GF(q).
    /// Divides n.
    int degree_over_base(const FElem& x) const;

    /// Canonical index: sum of coeff_i * q^i. Elements are enumerated in
    /// increasing index order wherever a deterministic order is needed.
    long index_of(const FElem& x) const;
    FElem from_index(long i) const;

    /// Smallest-index element whose degree over the base is exactly h.
    FElem subfield_generator(int h) const;

    /// Smallest Frobenius conjugate, for deduplication up to conjugacy.
    FElem conjugacy_representative(const FElem& x) const;

    std::string to_string(const FElem& x) const; // "[b0,...,b_{n-1}]" with base forms
    FElem parse(const std::string& s) const;
    std::string top_modulus_string() const;

  private:
    BaseField base_;
    int n_ = 0;
    std::vector<Fel> top_modulus_;
};

} // namespace fgeo
