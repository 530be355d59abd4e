#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srchroma/fp.hpp"
#include "srchroma/sr_algebra.hpp"

namespace srchroma {

/// Polynomial over F_p in unknowns v0, v1, ... that range over F_p, so
/// v^p = v is applied on multiplication. Monomials are sorted index lists with
/// repetition; the empty list is the constant term.
class UnknownPoly {
 public:
  using VarMono = std::vector<std::uint32_t>;
  using Terms = std::map<VarMono, Residue>;

  UnknownPoly() = default;
  static UnknownPoly constant(Residue c, Residue p);
  static UnknownPoly variable(std::uint32_t v, Residue p);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Residue constant_term() const;
  unsigned degree() const noexcept;

  UnknownPoly plus(const UnknownPoly& o, Residue p) const;
  UnknownPoly times(const UnknownPoly& o, Residue p) const;
  UnknownPoly scaled(Residue c, Residue p) const;
  /// Substitutes every assigned unknown (entries >= 0).
  UnknownPoly substitute(const std::vector<int>& values, Residue p) const;
  /// Value when all unknowns occurring are assigned.
  std::optional<Residue> evaluate(const std::vector<int>& values, Residue p) const;

  void add_term(VarMono m, Residue c, Residue p);
  std::string to_string() const;

  friend bool operator==(const UnknownPoly& a, const UnknownPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <>
struct CoeffTraits<UnknownPoly> {
  static UnknownPoly zero(Residue) { return {}; }
  static UnknownPoly from_int(std::int64_t v, Residue p) { return UnknownPoly::constant(reduce_mod(v, p), p); }
  static bool is_zero(const UnknownPoly& c) { return c.is_zero(); }
  static UnknownPoly add(const UnknownPoly& a, const UnknownPoly& b, Residue p) { return a.plus(b, p); }
  static UnknownPoly mul(const UnknownPoly& a, const UnknownPoly& b, Residue p) { return a.times(b, p); }
  static UnknownPoly neg(const UnknownPoly& a, Residue p) { return a.scaled(p - 1, p); }
};

using SymbolicElement = BasicElement<UnknownPoly>;

/// Outcome of PolySystemSolver::solve.
struct PolySolution {
  bool found = false;
  std::vector<Residue> values;
  std::uint64_t nodes = 0;
};

/// Thrown when the solver visits more nodes than allowed.
class NodeCapExceeded : public std::runtime_error {
 public:
  NodeCapExceeded(std::uint64_t cap, double estimate);
  std::uint64_t cap() const noexcept { return cap_; }
  double estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t cap_;
  double estimate_;
};

/// Decides whether a system of polynomial equations (each = 0) over F_p has a
/// solution. Depth-first: linear equations are row-reduced and forced values
/// propagated; once every remaining equation is linear the solution is read off
/// the reduced system with free unknowns set to 0. Otherwise it branches on the
/// unknown occurring in the most nonlinear terms, values 0..p-1 in order.
class PolySystemSolver {
 public:
  PolySystemSolver(std::vector<UnknownPoly> equations, std::size_t unknowns, Residue p, std::uint64_t node_cap);

  /// p^h where h is a greedy count of unknowns whose values make every
  /// equation linear; an upper bound on leaves without propagation.
  double branch_estimate() const;

  /// Throws NodeCapExceeded.
  PolySolution solve();

 private:
  bool dfs(std::vector<UnknownPoly> eqs, std::vector<int> values);

  std::vector<UnknownPoly> equations_;
  std::size_t unknowns_;
  Residue p_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<int> solution_;
};

}  // namespace srchroma
