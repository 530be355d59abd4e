#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srchroma/errors.hpp"
#include "srchroma/fp.hpp"
#include "srchroma/graph.hpp"

namespace srchroma {

// ---------------------------------------------------------------------------
// Families and join complexes
// ---------------------------------------------------------------------------

/// A(s,G): block k in degree 2k+2, graph in degree 2n+4 (n = |s|).
/// A_p(s,G): |s| = p-1, same degrees. B_p(r,G): |r| = (p-1)/2, block k in
/// degree 4k, graph in degree 2p+2. B(n,G) = B_3((n),G). Free: a polynomial
/// ring on explicitly named generators.
enum class Family { A, Ap, Bp, B, Free };

struct FamilySpec {
  Family family = Family::A;
  Residue p = 0;                  // A_p, B_p; 3 for B; 0 otherwise
  std::vector<unsigned> vector;   // s, r, or (n)

  std::string name() const;       // "A", "Ap", "Bp", "B", "free"
  std::string describe() const;   // e.g. "A_5((1,1,1,1),G)"
};

struct Generator {
  std::string name;
  unsigned degree = 0;
  std::size_t block = 0;     // kGraphBlock for graph generators
  std::size_t position = 0;  // index inside the block, or graph vertex
};

/// K = Delta^{s_1-1} * ... * Delta^{s_n-1} * G with an even grading.
/// Generators are numbered block by block, then the graph vertices; a set of
/// generators is a face iff its graph part is empty, a vertex, or an edge.
class JoinComplex {
 public:
  struct Block {
    unsigned degree = 0;
    std::vector<std::string> labels;
  };
  static constexpr std::size_t kGraphBlock = static_cast<std::size_t>(-1);

  JoinComplex(std::vector<Block> blocks, Graph graph, unsigned graph_degree, FamilySpec spec);

  const FamilySpec& spec() const noexcept { return spec_; }
  const Graph& graph() const noexcept { return graph_; }
  unsigned graph_degree() const noexcept { return graph_degree_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const Block& block(std::size_t k) const { return blocks_.at(k); }
  std::size_t block_offset(std::size_t k) const { return offsets_.at(k); }

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t graph_offset() const noexcept { return offsets_.back(); }
  bool is_graph_generator(std::size_t i) const noexcept { return i >= graph_offset(); }
  std::size_t graph_generator(Vertex v) const { return graph_offset() + v; }
  std::optional<std::size_t> find_generator(std::string_view name) const;
  /// Throws LookupError.
  std::size_t generator_index(std::string_view name) const;

  /// `support` lists generator indices (duplicates allowed).
  bool is_face(const std::vector<std::size_t>& support) const;
  /// All block generators together with one edge of G, one isolated vertex,
  /// or nothing when G has no vertices. Sorted generator indices.
  std::vector<std::vector<std::size_t>> maximal_faces() const;

  /// Header (family, p, vector, generators) followed by the graph edge list.
  std::string serialize() const;

 private:
  std::vector<Block> blocks_;
  Graph graph_;
  unsigned graph_degree_;
  FamilySpec spec_;
  std::vector<std::size_t> offsets_;  // block starts, then the graph start
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

/// Throws ContractError when the vector length does not match the family or
/// the prime is not an odd prime.
JoinComplex build_complex(const FamilySpec& spec, const Graph& g);
std::shared_ptr<const JoinComplex> make_complex(const FamilySpec& spec, const Graph& g);
/// Polynomial ring on named generators of positive even degree.
std::shared_ptr<const JoinComplex> free_polynomial(const std::vector<std::pair<std::string, unsigned>>& gens);

/// Inverse of JoinComplex::serialize for the four graph families and free rings.
std::shared_ptr<const JoinComplex> parse_complex(std::string_view text);

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<std::uint16_t> exps, unsigned degree) : exps_(std::move(exps)), degree_(degree) {}

  static Monomial one(const JoinComplex& cx);
  static Monomial generator(const JoinComplex& cx, std::size_t i, unsigned e = 1);
  static Monomial from_exponents(const JoinComplex& cx, std::vector<std::uint16_t> exps);

  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exps_.size(); }
  const std::vector<std::uint16_t>& exponents() const noexcept { return exps_; }
  unsigned exponent(std::size_t i) const { return exps_.at(i); }
  bool is_one() const noexcept;
  std::vector<std::size_t> support() const;
  unsigned total_exponent() const noexcept;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

/// Canonical order: higher degree first, then lexicographically larger
/// exponent vectors first (block generators precede graph generators).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// The monomial itself if its support is a face of K, otherwise nothing (zero).
std::optional<Monomial> reduce_monomial(const JoinComplex& cx, const Monomial& m);
bool is_face_monomial(const JoinComplex& cx, const Monomial& m);

/// Face-supported monomials of the given degree, in canonical order.
std::vector<Monomial> monomial_basis(const JoinComplex& cx, unsigned degree);

std::string format_monomial(const JoinComplex& cx, const Monomial& m);

// ---------------------------------------------------------------------------
// Elements of SR(K) (x) F_p with pluggable coefficients
// ---------------------------------------------------------------------------

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Residue> {
  static Residue zero(Residue) { return 0; }
  static Residue from_int(std::int64_t v, Residue p) { return reduce_mod(v, p); }
  static bool is_zero(Residue c) { return c == 0; }
  static Residue add(Residue a, Residue b, Residue p) { return add_mod(a, b, p); }
  static Residue mul(Residue a, Residue b, Residue p) { return mul_mod(a, b, p); }
  static Residue neg(Residue a, Residue p) { return neg_mod(a, p); }
};

/// Sparse F_p-linear combination of face-supported monomials. Monomials whose
/// support is not a face vanish on insertion.
template <class C>
class BasicElement {
 public:
  using Traits = CoeffTraits<C>;
  using Terms = std::map<Monomial, C, MonomialOrder>;

  BasicElement() = default;
  BasicElement(std::shared_ptr<const JoinComplex> cx, Residue p) : cx_(std::move(cx)), p_(p) {}

  static BasicElement zero(std::shared_ptr<const JoinComplex> cx, Residue p) { return {std::move(cx), p}; }
  static BasicElement one(std::shared_ptr<const JoinComplex> cx, Residue p) {
    BasicElement e(cx, p);
    e.add_term(Monomial::one(*cx), Traits::from_int(1, p));
    return e;
  }
  static BasicElement monomial(std::shared_ptr<const JoinComplex> cx, Residue p, const Monomial& m, const C& c) {
    BasicElement e(std::move(cx), p);
    e.add_term(m, c);
    return e;
  }
  static BasicElement generator(std::shared_ptr<const JoinComplex> cx, Residue p, std::size_t i) {
    Monomial m = Monomial::generator(*cx, i);
    return monomial(std::move(cx), p, m, Traits::from_int(1, p));
  }

  const JoinComplex& complex() const { return *cx_; }
  const std::shared_ptr<const JoinComplex>& complex_ptr() const noexcept { return cx_; }
  Residue prime() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Degree of a nonzero homogeneous element.
  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Traits::zero(p_) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (Traits::is_zero(c) || !is_face_monomial(*cx_, m)) return;
    add_face_term(m, c);
  }

  BasicElement& operator+=(const BasicElement& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_face_term(m, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_face_term(m, Traits::neg(c, p_));
    return *this;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }

  friend BasicElement operator*(const BasicElement& a, const BasicElement& b) {
    a.check_compatible(b);
    BasicElement r(a.cx_, a.p_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, Traits::mul(ca, cb, a.p_));
    return r;
  }

  BasicElement scaled(const C& k) const {
    BasicElement r(cx_, p_);
    for (const auto& [m, c] : terms_) r.add_face_term(m, Traits::mul(c, k, p_));
    return r;
  }
  BasicElement times_monomial(const Monomial& mono) const {
    BasicElement r(cx_, p_);
    for (const auto& [m, c] : terms_) r.add_term(m * mono, c);
    return r;
  }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  void check_compatible(const BasicElement& o) const {
    if (cx_ != o.cx_ && !(cx_ && o.cx_ && cx_->serialize() == o.cx_->serialize()))
      throw ContractError("elements of different complexes");
    if (p_ != o.p_) throw ContractError("elements over different primes");
  }

 private:
  void add_face_term(const Monomial& m, const C& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = Traits::add(it->second, c, p_);
      if (Traits::is_zero(it->second)) terms_.erase(it);
    } else if (Traits::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  std::shared_ptr<const JoinComplex> cx_;
  Residue p_ = 2;
  Terms terms_;
};

using AlgebraElement = BasicElement<Residue>;

/// True iff every term is divisible by one of the monomial generators.
bool ideal_membership(const AlgebraElement& a, const std::vector<Monomial>& gens);

/// `c * g1^e1 * g2 + ...` in canonical order; "0" for zero.
std::string format_element(const AlgebraElement& a);
/// Accepts the format_element syntax; a term without leading coefficient has
/// coefficient 1. Throws ContractError on unknown generators.
AlgebraElement parse_element(std::shared_ptr<const JoinComplex> cx, Residue p, std::string_view text);

}  // namespace srchroma
