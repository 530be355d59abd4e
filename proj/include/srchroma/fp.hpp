#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace srchroma {

using Residue = std::uint32_t;

bool is_prime(std::uint32_t n);

inline Residue add_mod(Residue a, Residue b, Residue p) { return (a + b) % p; }
inline Residue sub_mod(Residue a, Residue b, Residue p) { return (a + p - b) % p; }
inline Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}
inline Residue neg_mod(Residue a, Residue p) { return (p - a) % p; }
Residue pow_mod(Residue a, std::uint64_t e, Residue p);
/// Inverse of a nonzero residue.
Residue inv_mod(Residue a, Residue p);
/// Reduce a signed integer into {0..p-1}.
Residue reduce_mod(std::int64_t v, Residue p);
/// Binomial coefficient C(n, k) mod p via Lucas; zero for k < 0 or k > n.
Residue binomial_mod(std::int64_t n, std::int64_t k, Residue p);

/// Fixed-length vector over F_p.
class FpVector {
 public:
  FpVector() = default;
  FpVector(Residue p, std::size_t dim);
  FpVector(Residue p, std::vector<Residue> coords);

  static FpVector unit(Residue p, std::size_t dim, std::size_t i);

  Residue prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  Residue operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Residue>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  FpVector scaled(Residue c) const;
  FpVector operator+(const FpVector& o) const;
  /// Rescaled so that the first nonzero coordinate is 1 (zero stays zero).
  FpVector normalized() const;

  std::string to_string() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend auto operator<=>(const FpVector&, const FpVector&) = default;

 private:
  Residue p_ = 2;
  std::vector<Residue> coords_;
};

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
/// Rows are stored with pivot coefficient 1 and zeros at earlier pivots.
class EchelonBasis {
 public:
  EchelonBasis(Residue p, std::size_t dim) : p_(p), dim_(dim) {}

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool full() const noexcept { return rows_.size() == dim_; }

  /// Adds v to the spanning set; returns true when the rank grew.
  bool insert(std::span<const Residue> v);
  bool contains(std::span<const Residue> v) const;
  /// v minus its projection along the pivots; zero iff v is in the span.
  std::vector<Residue> reduce(std::span<const Residue> v) const;

 private:
  Residue p_;
  std::size_t dim_;
  std::vector<std::vector<Residue>> rows_;
  std::vector<std::size_t> pivots_;
};

/// True iff target lies in the F_p-span of vectors; the empty span is {0}.
bool span_membership(std::span<const FpVector> vectors, const FpVector& target);

/// Projective representatives of F_p^dim (first nonzero coordinate 1), ordered by
/// leading position, then lexicographically; e_1 comes first.
std::vector<FpVector> projective_points(Residue p, std::size_t dim);

}  // namespace srchroma
