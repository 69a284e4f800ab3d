#include "polyadj/picard.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyadj::picard {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("divisor classes live in lattices of different rank");
}

}  // namespace

DivisorClass DivisorClass::parse(const std::string& text) {
  DivisorClass c;
  const auto semi = text.find(';');
  c.coeffs.push_back(parse_integer(trim(text.substr(0, semi))));
  if (semi == std::string::npos) return c;
  std::string rest = text.substr(semi + 1);
  if (trim(rest).empty()) return c;
  std::size_t start = 0;
  for (;;) {
    const auto comma = rest.find(',', start);
    c.coeffs.push_back(parse_integer(trim(rest.substr(start, comma - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return c;
}

std::string DivisorClass::str() const {
  std::string out = coeffs.empty() ? "" : coeffs[0].str();
  out += ';';
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (i > 1) out += ',';
    out += coeffs[i].str();
  }
  return out;
}

PicardLattice::PicardLattice(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw std::invalid_argument("PicardLattice: rank must be positive");
}

DivisorClass PicardLattice::canonical() const {
  DivisorClass k{std::vector<Integer>(rank_, Integer(1))};
  k.coeffs[0] = -3;
  return k;
}

DivisorClass PicardLattice::line() const {
  DivisorClass l{std::vector<Integer>(rank_, Integer(0))};
  l.coeffs[0] = 1;
  return l;
}

DivisorClass PicardLattice::exceptional(std::size_t i) const {
  if (i == 0 || i >= rank_) throw std::out_of_range("PicardLattice::exceptional: index out of range");
  DivisorClass e{std::vector<Integer>(rank_, Integer(0))};
  e.coeffs[i] = 1;
  return e;
}

Integer pair(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  if (a.rank() == 0) return 0;
  Integer sum = a.coeffs[0] * b.coeffs[0];
  for (std::size_t i = 1; i < a.rank(); ++i) sum -= a.coeffs[i] * b.coeffs[i];
  return sum;
}

Numerics numerics(const DivisorClass& h) {
  const DivisorClass k = PicardLattice(h.rank()).canonical();
  const Integer hh = pair(h, h);
  const Integer hk = pair(h, k);
  const Integer genus_twice = hh + hk;
  if (genus_twice % 2 != 0) throw std::domain_error("numerics: H(H+K) is odd");
  return {hh, -hk, genus_twice / 2 + 1};
}

PicardLattice blow_up(const PicardLattice& lattice) { return PicardLattice(lattice.rank() + 1); }

DivisorClass pullback(const DivisorClass& c) {
  DivisorClass out = c;
  out.coeffs.emplace_back(0);
  return out;
}

ContractionReport contract(const PicardLattice& lattice, const DivisorClass& h,
                           std::span<const std::size_t> exceptionals) {
  if (h.rank() != lattice.rank()) throw std::invalid_argument("contract: class does not belong to the lattice");
  std::vector<bool> drop(lattice.rank(), false);
  for (const std::size_t i : exceptionals) {
    if (i == 0 || i >= lattice.rank()) throw std::invalid_argument("contract: exceptional index out of range");
    if (drop[i]) throw std::invalid_argument("contract: repeated exceptional index");
    if (pair(lattice.exceptional(i), h) != 0) {
      throw std::invalid_argument("contract: E_" + std::to_string(i) + " is not orthogonal to H");
    }
    drop[i] = true;
  }

  DivisorClass pushed;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (!drop[i]) pushed.coeffs.push_back(h.coeffs[i]);
  }
  const PicardLattice target(pushed.rank());
  const DivisorClass k1 = target.canonical();
  DivisorClass h1 = pushed;
  for (std::size_t i = 0; i < h1.rank(); ++i) h1.coeffs[i] += k1.coeffs[i];

  const Numerics before = numerics(h);
  const Numerics after = numerics(h1);
  ContractionReport report{target, h1, before.b, after.b, before.s, after.s, static_cast<int>(target.rank())};
  report.lemma_identity = report.b == report.b1 + 10 - report.rho1;
  report.genus_identity = report.s == report.b1 + report.s1;
  return report;
}

bool is_root(const DivisorClass& r) {
  if (r.rank() == 0) return false;
  return pair(r, r) == -2 && pair(r, PicardLattice(r.rank()).canonical()) == 0;
}

DivisorClass reflect(const DivisorClass& a, const DivisorClass& root) {
  require_same_rank(a, root);
  if (!is_root(root)) throw std::invalid_argument("reflect: " + root.str() + " is not a root");
  const Integer c = pair(a, root);
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.rank(); ++i) out.coeffs[i] += c * root.coeffs[i];
  return out;
}

}  // namespace polyadj::picard
