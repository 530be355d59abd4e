#include "doctest.h"
#include "srchroma/errors.hpp"
#include "srchroma/fp.hpp"
#include "support/oracles.hpp"

using namespace srchroma;

TEST_CASE("modular arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(pow_mod(2, 10, 7) == 1024 % 7);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(inv_mod(0, 7), ContractError);
  CHECK(reduce_mod(-1, 5) == 4);
  // Lucas against the integer value
  for (int n = 0; n < 12; ++n)
    for (int k = 0; k <= n; ++k) {
      long long c = 1;
      for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
      for (Residue p : {2u, 3u, 5u}) CHECK(binomial_mod(n, k, p) == c % p);
    }
  CHECK(binomial_mod(3, 5, 3) == 0);
  CHECK(binomial_mod(-1, 2, 3) == 0);
}

TEST_CASE("vectors and normalisation") {
  FpVector v(3, {0, 2, 1});
  CHECK(v.normalized() == FpVector(3, {0, 1, 2}));
  CHECK(v.to_string() == "0,2,1");
  CHECK_THROWS_AS(FpVector(3, {0, 3}), ContractError);
  CHECK_THROWS_AS(v + FpVector(3, 2), ContractError);
  CHECK((v + v.scaled(2)).is_zero());
}

TEST_CASE("span membership examples") {
  std::vector<FpVector> none;
  CHECK(span_membership(none, FpVector(3, 2)));
  std::vector<FpVector> e1{FpVector::unit(3, 2, 0)};
  CHECK_FALSE(span_membership(e1, FpVector::unit(3, 2, 1)));
  std::vector<FpVector> two{FpVector(3, {1, 1}), FpVector(3, {0, 1})};
  CHECK(span_membership(two, FpVector::unit(3, 2, 0)));
  std::vector<FpVector> bad{FpVector(5, 2)};
  CHECK_THROWS_AS(span_membership(bad, FpVector(3, 2)), ContractError);
  CHECK_THROWS_AS(span_membership(e1, FpVector(3, 3)), ContractError);
}

TEST_CASE("span membership agrees with rank oracle") {
  std::mt19937_64 rng(7);
  for (Residue p : {2u, 3u, 5u})
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t dim = 1 + rng() % 4, count = rng() % 5;
      std::vector<FpVector> vs;
      std::vector<oracle::Vec> raw;
      auto draw = [&] {
        std::vector<Residue> c(dim);
        for (auto& x : c) x = static_cast<Residue>(rng() % p);
        return c;
      };
      for (std::size_t i = 0; i < count; ++i) {
        auto c = draw();
        raw.push_back(c);
        vs.emplace_back(p, c);
      }
      auto t = draw();
      CHECK(span_membership(vs, FpVector(p, t)) == oracle::in_span(raw, t, p));
    }
}

TEST_CASE("echelon basis rank") {
  EchelonBasis b(3, 3);
  std::vector<Residue> a{1, 1, 0}, c{2, 2, 0}, d{0, 1, 1};
  CHECK(b.insert(a));
  CHECK_FALSE(b.insert(c));
  CHECK(b.insert(d));
  CHECK(b.rank() == 2);
  CHECK(b.contains(std::vector<Residue>{1, 2, 1}));
  CHECK_FALSE(b.full());
}

TEST_CASE("projective points") {
  for (Residue p : {2u, 3u, 5u})
    for (std::size_t dim = 1; dim <= 3; ++dim) {
      auto pts = projective_points(p, dim);
      std::size_t expect = 0, pw = 1;
      for (std::size_t i = 0; i < dim; ++i) expect += pw, pw *= p;
      CHECK(pts.size() == expect);
      CHECK(pts.front() == FpVector::unit(p, dim, 0));
      for (const auto& v : pts) CHECK(v.normalized() == v);
    }
}
