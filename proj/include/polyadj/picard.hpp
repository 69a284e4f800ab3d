#pragma once

// Intersection arithmetic on the Picard lattice Z^{1,r} of the plane blown
// up in r points: basis (L, E_1, ..., E_r), pairing diag(1, -1, ..., -1),
// canonical class K = -3L + E_1 + ... + E_r.
//
// Nefness, bigness and effectivity are not decidable from coordinates; the
// caller is responsible for them.

#include <span>
#include <string>
#include <vector>

#include "polyadj/integer.hpp"

namespace polyadj::picard {

/// Coefficients (d0; m_1, ..., m_r) of d0 L + sum m_i E_i.
struct DivisorClass {
  std::vector<Integer> coeffs;

  std::size_t rank() const { return coeffs.size(); }

  /// "d0;m1,...,mr" (the part after ';' may be empty or absent).
  static DivisorClass parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

class PicardLattice {
 public:
  /// rank >= 1; throws std::invalid_argument otherwise.
  explicit PicardLattice(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::size_t exceptional_count() const { return rank_ - 1; }

  DivisorClass canonical() const;
  DivisorClass line() const;
  /// E_i for 1 <= i <= r.
  DivisorClass exceptional(std::size_t i) const;

  friend bool operator==(const PicardLattice&, const PicardLattice&) = default;

 private:
  std::size_t rank_;
};

/// Throws std::invalid_argument if the ranks differ.
Integer pair(const DivisorClass& a, const DivisorClass& b);

struct Numerics {
  Integer d;  // H^2
  Integer b;  // -H.K
  Integer s;  // H(H+K)/2 + 1
};

/// Throws std::domain_error if H(H+K) is odd.
Numerics numerics(const DivisorClass& h);

PicardLattice blow_up(const PicardLattice& lattice);
/// Pullback along the blow-up: the new E coefficient is 0.
DivisorClass pullback(const DivisorClass& c);

struct ContractionReport {
  PicardLattice lattice;  // after contraction
  DivisorClass h1;        // f_* H + K^(1)
  Integer b, b1, s, s1;
  int rho1 = 0;
  bool lemma_identity = false;  // b == b1 + 10 - rho1
  bool genus_identity = false;  // s == b1 + s1
};

/// Contracts the exceptional classes E_i, i in `exceptionals` (1-based,
/// distinct), which must all be orthogonal to H.
ContractionReport contract(const PicardLattice& lattice, const DivisorClass& h,
                           std::span<const std::size_t> exceptionals);

/// r^2 = -2 and r.K = 0.
bool is_root(const DivisorClass& r);

/// a + (a.r) r; throws std::invalid_argument unless r is a root.
DivisorClass reflect(const DivisorClass& a, const DivisorClass& root);

}  // namespace polyadj::picard
