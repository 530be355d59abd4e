#include "srchroma/fp.hpp"

#include <algorithm>

#include "srchroma/errors.hpp"

namespace srchroma {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue result = 1 % p;
  Residue base = a % p;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, Residue p) {
  if (a % p == 0) throw ContractError("inverse of zero mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

Residue reduce_mod(std::int64_t v, Residue p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

namespace {

Residue small_binomial(std::int64_t n, std::int64_t k, Residue p) {
  if (k < 0 || k > n) return 0;
  Residue num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num = mul_mod(num, reduce_mod(n - i, p), p);
    den = mul_mod(den, reduce_mod(i + 1, p), p);
  }
  return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

Residue binomial_mod(std::int64_t n, std::int64_t k, Residue p) {
  if (k < 0 || n < 0 || k > n) return 0;
  Residue result = 1;
  while (n > 0 || k > 0) {
    result = mul_mod(result, small_binomial(n % p, k % p, p), p);
    if (result == 0) return 0;
    n /= p;
    k /= p;
  }
  return result;
}

FpVector::FpVector(Residue p, std::size_t dim) : p_(p), coords_(dim, 0) {}

FpVector::FpVector(Residue p, std::vector<Residue> coords) : p_(p), coords_(std::move(coords)) {
  for (auto& c : coords_)
    if (c >= p_) throw ContractError("coordinate " + std::to_string(c) + " not reduced mod " + std::to_string(p_));
}

FpVector FpVector::unit(Residue p, std::size_t dim, std::size_t i) {
  FpVector v(p, dim);
  v.coords_.at(i) = 1;
  return v;
}

bool FpVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
}

FpVector FpVector::scaled(Residue c) const {
  FpVector r = *this;
  for (auto& x : r.coords_) x = mul_mod(x, c, p_);
  return r;
}

FpVector FpVector::operator+(const FpVector& o) const {
  if (o.p_ != p_ || o.dim() != dim()) throw ContractError("vector prime/dimension mismatch");
  FpVector r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = add_mod(r.coords_[i], o.coords_[i], p_);
  return r;
}

FpVector FpVector::normalized() const {
  for (Residue c : coords_)
    if (c != 0) return scaled(inv_mod(c, p_));
  return *this;
}

std::string FpVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

std::vector<Residue> EchelonBasis::reduce(std::span<const Residue> v) const {
  std::vector<Residue> r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = r[pivots_[i]];
    if (c == 0) continue;
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j]) r[j] = sub_mod(r[j], mul_mod(c, row[j], p_), p_);
  }
  return r;
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  if (v.size() != dim_) throw ContractError("echelon insert: dimension mismatch");
  auto r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Residue c) { return c != 0; });
  if (it == r.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(it - r.begin());
  Residue inv = inv_mod(*it, p_);
  for (auto& c : r) c = mul_mod(c, inv, p_);
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue c) { return c == 0; });
}

bool span_membership(std::span<const FpVector> vectors, const FpVector& target) {
  EchelonBasis basis(target.prime(), target.dim());
  for (const auto& v : vectors) {
    if (v.prime() != target.prime() || v.dim() != target.dim())
      throw ContractError("span_membership: prime/dimension mismatch");
    basis.insert(v.coords());
  }
  return basis.contains(target.coords());
}

std::vector<FpVector> projective_points(Residue p, std::size_t dim) {
  std::vector<FpVector> points;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::size_t tail = dim - lead - 1;
    std::vector<Residue> digits(tail, 0);
    while (true) {
      std::vector<Residue> coords(dim, 0);
      coords[lead] = 1;
      std::copy(digits.begin(), digits.end(), coords.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      points.emplace_back(p, std::move(coords));
      // odometer, last digit fastest -> lexicographic order
      std::size_t i = tail;
      while (i > 0) {
        if (++digits[i - 1] < p) break;
        digits[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return points;
}

}  // namespace srchroma
