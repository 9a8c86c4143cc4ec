#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace parthom {

namespace field_detail {

/// (p, d) with p^d == q, or (0, 0) when q is not a prime power.
inline std::pair<unsigned, unsigned> prime_power(unsigned q)
{
  if (q < 2)
    return {0, 0};
  unsigned p = 2;
  while (q % p)
    ++p;
  unsigned d = 0;
  while (q % p == 0) {
    q /= p;
    ++d;
  }
  return q == 1 ? std::pair{p, d} : std::pair{0u, 0u};
}

/// Remainder of a by b over GF(p); coefficient vectors, constant term first.
inline std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned> &b, unsigned p)
{
  auto trim = [](std::vector<unsigned> &v) {
    while (!v.empty() && v.back() == 0)
      v.pop_back();
  };
  trim(a);
  unsigned lead_inv = 1;
  while ((lead_inv * b.back()) % p != 1)
    ++lead_inv;
  while (a.size() >= b.size()) {
    unsigned f = (a.back() * lead_inv) % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - (f * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

/// Exhaustive factor search: no monic divisor of degree 1..d/2.
inline bool is_irreducible(const std::vector<unsigned> &poly, unsigned p)
{
  std::size_t d = poly.size() - 1;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i)
      count *= p;
    for (std::size_t enc = 0; enc < count; ++enc) {
      std::vector<unsigned> f(k + 1, 1);
      std::size_t e = enc;
      for (std::size_t i = 0; i < k; ++i) {
        f[i] = static_cast<unsigned>(e % p);
        e /= p;
      }
      if (poly_mod(poly, f, p).empty())
        return false;
    }
  }
  return true;
}

/// The monic irreducible of degree d whose lower coefficients, read as a
/// base-p number (constant term least significant), are smallest.
inline std::vector<unsigned> minimal_irreducible(unsigned p, unsigned d)
{
  std::size_t count = 1;
  for (unsigned i = 0; i < d; ++i)
    count *= p;
  for (std::size_t enc = 0; enc < count; ++enc) {
    std::vector<unsigned> poly(d + 1, 1);
    std::size_t e = enc;
    for (unsigned i = 0; i < d; ++i) {
      poly[i] = static_cast<unsigned>(e % p);
      e /= p;
    }
    if (is_irreducible(poly, p))
      return poly;
  }
  throw Error(ErrorKind::internal, "no irreducible polynomial found");
}

struct ModulusEntry
{
  unsigned q;
  std::vector<unsigned> coefficients; // constant term first, monic
};

/// Committed moduli, one per supported q. tests/test_finite_field.cpp re-runs
/// minimal_irreducible() and checks this table against it.
inline const std::vector<ModulusEntry> &committed_moduli()
{
  static const std::vector<ModulusEntry> table = {
    {2, {0, 1}},          {3, {0, 1}},          {4, {1, 1, 1}},          {5, {0, 1}},
    {7, {0, 1}},          {8, {1, 1, 0, 1}},    {9, {1, 0, 1}},          {11, {0, 1}},
    {13, {0, 1}},         {16, {1, 1, 0, 0, 1}}, {17, {0, 1}},           {19, {0, 1}},
    {23, {0, 1}},         {25, {2, 0, 1}},      {27, {1, 2, 0, 1}},      {29, {0, 1}},
    {31, {0, 1}},         {32, {1, 0, 1, 0, 0, 1}},
  };
  return table;
}

} // namespace field_detail

inline constexpr unsigned max_field_order = 32;

/// GF(q) for prime powers q <= 32, as full addition and multiplication
/// tables. An element is encoded as the integer sum c_i p^i of its
/// polynomial coefficients.
class FiniteField
{
public:
  explicit FiniteField(unsigned q) : _q(q)
  {
    auto [p, d] = field_detail::prime_power(q);
    if (p == 0 || q > max_field_order)
      throw Error(ErrorKind::invalid_argument,
                  "field order must be a prime power <= 32, got " + std::to_string(q));
    _p = p;
    _d = d;
    for (const auto &entry : field_detail::committed_moduli())
      if (entry.q == q)
        _modulus = entry.coefficients;
    if (_modulus.size() != d + 1 || _modulus.back() != 1 || !field_detail::is_irreducible(_modulus, p))
      throw Error(ErrorKind::validation, "modulus for GF(" + std::to_string(q) + ") is not irreducible");
    build_tables();
  }

  unsigned order() const noexcept { return _q; }
  unsigned characteristic() const noexcept { return _p; }
  unsigned extension_degree() const noexcept { return _d; }
  const std::vector<unsigned> &modulus() const noexcept { return _modulus; }

  unsigned add(unsigned a, unsigned b) const { return _add[a * _q + b]; }
  unsigned mul(unsigned a, unsigned b) const { return _mul[a * _q + b]; }
  unsigned neg(unsigned a) const { return _neg[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

  unsigned inv(unsigned a) const
  {
    if (a == 0)
      throw Error(ErrorKind::invalid_argument, "zero has no inverse");
    return _inv[a];
  }

  unsigned pow(unsigned a, unsigned e) const
  {
    unsigned r = 1;
    for (unsigned i = 0; i < e; ++i)
      r = mul(r, a);
    return r;
  }

  unsigned frobenius(unsigned a) const { return pow(a, _p); }

  unsigned primitive_element() const noexcept { return _alpha; }

  /// Field elements in the fixed point order 0, 1, alpha, alpha^2, ...
  const std::vector<unsigned> &enumeration() const noexcept { return _enumeration; }

  /// Position of an element in enumeration().
  unsigned index_of(unsigned element) const { return _index[element]; }

private:
  void build_tables()
  {
    const unsigned q = _q, p = _p, d = _d;
    auto digits = [&](unsigned a) {
      std::vector<unsigned> c(d);
      for (unsigned i = 0; i < d; ++i) {
        c[i] = a % p;
        a /= p;
      }
      return c;
    };
    auto encode = [&](const std::vector<unsigned> &c) {
      unsigned a = 0;
      for (unsigned i = d; i-- > 0;)
        a = a * p + c[i];
      return a;
    };

    _add.assign(q * q, 0);
    _mul.assign(q * q, 0);
    for (unsigned a = 0; a < q; ++a) {
      auto ca = digits(a);
      for (unsigned b = 0; b < q; ++b) {
        auto cb = digits(b);
        std::vector<unsigned> sum(d);
        for (unsigned i = 0; i < d; ++i)
          sum[i] = (ca[i] + cb[i]) % p;
        _add[a * q + b] = encode(sum);

        std::vector<unsigned> prod(2 * d, 0);
        for (unsigned i = 0; i < d; ++i)
          for (unsigned j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        auto rem = field_detail::poly_mod(prod, _modulus, p);
        rem.resize(d, 0);
        _mul[a * q + b] = encode(rem);
      }
    }

    _neg.assign(q, 0);
    _inv.assign(q, 0);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        if (add(a, b) == 0)
          _neg[a] = b;
        if (mul(a, b) == 1)
          _inv[a] = b;
      }

    _alpha = 0;
    for (unsigned a = 1; a < q && !_alpha; ++a) {
      unsigned x = a, ord = 1;
      while (x != 1) {
        x = mul(x, a);
        ++ord;
      }
      if (ord == q - 1)
        _alpha = a;
    }
    if (q == 2)
      _alpha = 1;

    _enumeration = {0};
    unsigned x = 1;
    for (unsigned i = 0; i + 1 < q; ++i) {
      _enumeration.push_back(x);
      x = mul(x, _alpha);
    }
    _index.assign(q, 0);
    for (unsigned i = 0; i < q; ++i)
      _index[_enumeration[i]] = i;
  }

  unsigned _q, _p = 0, _d = 0;
  std::vector<unsigned> _modulus;
  std::vector<unsigned> _add, _mul, _neg, _inv;
  unsigned _alpha = 0;
  std::vector<unsigned> _enumeration, _index;
};

} // namespace parthom
