#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "srchroma/errors.hpp"
#include "srchroma/span_coloring.hpp"
#include "srchroma/sr_algebra.hpp"
#include "srchroma/unknown_poly.hpp"

namespace srchroma {

/// A required P^k(g) is not in the table.
class IncompleteTableError : public std::runtime_error {
 public:
  IncompleteTableError(std::string generator, unsigned k);
  const std::string& generator() const noexcept { return generator_; }
  unsigned k() const noexcept { return k_; }

 private:
  std::string generator_;
  unsigned k_;
};

/// Values of P^k on generators. P^0 is the identity, P^k(g) = g^p when
/// 2k = deg g and 0 above; only 1 <= k < deg(g)/2 is stored.
class SteenrodTable {
 public:
  /// Empty table: every stored entry missing. Throws for p not an odd prime.
  SteenrodTable(std::shared_ptr<const JoinComplex> cx, Residue p);
  /// Every stored entry 0.
  static SteenrodTable zero(std::shared_ptr<const JoinComplex> cx, Residue p);

  Residue prime() const noexcept { return p_; }
  const JoinComplex& complex() const noexcept { return *cx_; }
  const std::shared_ptr<const JoinComplex>& complex_ptr() const noexcept { return cx_; }

  unsigned top(std::size_t g) const { return cx_->generator(g).degree / 2; }
  unsigned target_degree(std::size_t g, unsigned k) const {
    return cx_->generator(g).degree + 2 * k * (p_ - 1);
  }

  /// Throws ContractError for k outside 1..top-1 (unless the value agrees with
  /// the forced one), a wrong degree, or a foreign complex.
  void set(std::size_t g, unsigned k, AlgebraElement value);
  bool has(std::size_t g, unsigned k) const;
  /// Throws IncompleteTableError for a missing stored entry.
  AlgebraElement get(std::size_t g, unsigned k) const;

  /// `P^<k>(<gen>) = <element>` for every generator and 1 <= k <= top.
  std::string serialize() const;
  /// Throws ParseError with line numbers.
  static SteenrodTable parse(std::shared_ptr<const JoinComplex> cx, Residue p, std::string_view text);

  friend bool operator==(const SteenrodTable& a, const SteenrodTable& b) {
    return a.p_ == b.p_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const JoinComplex> cx_;
  Residue p_;
  std::map<std::pair<std::size_t, unsigned>, AlgebraElement> entries_;
};

// ---------------------------------------------------------------------------
// Cartan formula
// ---------------------------------------------------------------------------

/// Evaluates P^k on elements from generator values via linearity and the
/// Cartan formula. `source(g, k)` is asked only for 1 <= k < deg(g)/2.
/// Results are memoised per monomial; not thread-safe.
template <class C>
class CartanEvaluator {
 public:
  using Element = BasicElement<C>;
  using Source = std::function<Element(std::size_t, unsigned)>;

  CartanEvaluator(std::shared_ptr<const JoinComplex> cx, Residue p, unsigned max_k, Source source)
      : cx_(std::move(cx)), p_(p), max_k_(max_k), source_(std::move(source)) {}

  /// P^k of a monomial (which need not be a face; the product is formed in
  /// the quotient ring).
  Element on_monomial(const Monomial& m, unsigned k) {
    if (k > max_k_) return series_of(m, k)[k];
    return series_of(m, max_k_)[k];
  }

  Element apply(const Element& a, unsigned k) {
    Element out(cx_, p_);
    for (const auto& [m, c] : a.terms()) out += on_monomial(m, k).scaled(c);
    return out;
  }

 private:
  using Series = std::vector<Element>;

  Element generator_op(std::size_t g, unsigned k) {
    const unsigned top = cx_->generator(g).degree / 2;
    if (k == 0) return Element::generator(cx_, p_, g);
    if (k == top) return Element::monomial(cx_, p_, Monomial::generator(*cx_, g, p_), CoeffTraits<C>::from_int(1, p_));
    if (k > top) return Element(cx_, p_);
    return source_(g, k);
  }

  static Series truncated_product(const Series& a, const Series& b, unsigned n) {
    Series out;
    for (unsigned i = 0; i <= n; ++i) {
      Element s(a[0].complex_ptr(), a[0].prime());
      for (unsigned j = 0; j <= i; ++j)
        if (!a[j].is_zero() && !b[i - j].is_zero()) s += a[j] * b[i - j];
      out.push_back(std::move(s));
    }
    return out;
  }

  const Series& generator_power(std::size_t g, unsigned e, unsigned n) {
    auto key = std::make_pair(g, e);
    auto it = powers_.find(key);
    if (it != powers_.end() && it->second.size() > n) return it->second;
    Series base;
    for (unsigned k = 0; k <= n; ++k) base.push_back(generator_op(g, k));
    Series acc = base;
    for (unsigned i = 1; i < e; ++i) acc = truncated_product(acc, base, n);
    return powers_[key] = std::move(acc);
  }

  const Series& series_of(const Monomial& m, unsigned n) {
    auto it = cache_.find(m);
    if (it != cache_.end() && it->second.size() > n) return it->second;
    Series acc;
    acc.push_back(Element::one(cx_, p_));
    for (unsigned k = 1; k <= n; ++k) acc.emplace_back(cx_, p_);
    // A non-face monomial must still be expanded factor by factor.
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (!m.exponent(g)) continue;
      acc = truncated_product(acc, generator_power(g, m.exponent(g), n), n);
    }
    return cache_[m] = std::move(acc);
  }

  std::shared_ptr<const JoinComplex> cx_;
  Residue p_;
  unsigned max_k_;
  Source source_;
  std::map<std::pair<std::size_t, unsigned>, Series> powers_;
  std::map<Monomial, Series, MonomialOrder> cache_;
};

/// P^k(a) from the table. Throws IncompleteTableError naming the first
/// missing (g, k) that is needed.
AlgebraElement cartan_extend(const SteenrodTable& t, const AlgebraElement& a, unsigned k);
/// sum_k P^k(a) truncated at total degree `degree_bound`.
AlgebraElement total_operation(const SteenrodTable& t, const AlgebraElement& a, unsigned degree_bound);

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

/// p1pp: P^1 P^p = P^{p+1}. adem: every Adem relation P^a P^b with a < pb.
/// wd: P^k of each minimal non-face vanishes (the table is well defined on
/// the quotient ring).
struct RelationSet {
  bool p1pp = true;
  bool adem = false;
  bool wd = true;

  std::string to_string() const;
  /// Comma separated names, e.g. "p1pp,wd". Throws ContractError.
  static RelationSet parse(std::string_view text);
};

/// Default degree bound 2p^2 + 2p.
unsigned default_degree_bound(Residue p);

/// One term c * P^outer P^inner of a relation side; inner = 0 means a single
/// operation.
struct OpTerm {
  Residue coeff = 1;
  unsigned outer = 0;
  unsigned inner = 0;
};

/// lhs(source) = rhs(source), both sides sums of composites.
struct RelationInstance {
  std::string name;
  Monomial source;
  std::vector<OpTerm> lhs;
  std::vector<OpTerm> rhs;
  unsigned target_degree = 0;
};

/// Instances whose target degree is at most degree_bound, always including
/// every generator. Sources are basis monomials (and minimal non-faces for wd).
std::vector<RelationInstance> relation_instances(const JoinComplex& cx, Residue p, const RelationSet& rs,
                                                 unsigned degree_bound);

struct Violation {
  std::string instance;
  AlgebraElement lhs;
  AlgebraElement rhs;
};

struct RelationReport {
  RelationSet relations;
  unsigned degree_bound = 0;
  std::size_t instances = 0;
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::string to_text() const;
};

RelationReport check_relations(const SteenrodTable& t, const RelationSet& rs, unsigned degree_bound);
/// Same report; instances are split across OpenMP threads.
RelationReport check_relations_parallel(const SteenrodTable& t, const RelationSet& rs, unsigned degree_bound);

struct IdealFailure {
  std::string generator;
  unsigned k = 0;
  AlgebraElement value;
};

struct IdealReport {
  std::vector<IdealFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
  std::string to_text() const;
};

/// Monomial generators of (y_i) + (y_j y_k : j < k).
std::vector<Monomial> graph_ideal(const JoinComplex& cx, Vertex i);
/// Every stored P^a(y_i) lies in (y_i) + (y_j y_k : j < k).
IdealReport check_ideal_preservation(const SteenrodTable& t);

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct SearchOptions {
  RelationSet relations;
  unsigned degree_bound = 0;  // 0: default_degree_bound(p)
  std::uint64_t node_cap = 100'000'000;
};

struct SearchResult {
  bool found = false;
  std::optional<SteenrodTable> table;
  RelationSet relations;
  unsigned degree_bound = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::uint64_t nodes = 0;
  /// "relative to relation set ..., degree bound ..." wording for reports.
  std::string scope() const;
  std::string to_text() const;
};

/// Exhaustive search over the coefficients of P^k(g), 1 <= k < deg(g)/2, in
/// the span of degree-matching face monomials (restricted to the ideal
/// (y_i) + (y_j y_k) for graph generators). Found tables pass every checker;
/// a negative answer is certified relative to the relation set and bound.
/// Throws NodeCapExceeded. p must be an odd prime.
SearchResult search_action(std::shared_ptr<const JoinComplex> cx, Residue p, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// From P^p(y_i) to a span coloring
// ---------------------------------------------------------------------------

/// Degree-4 block generators, the coordinates of g-values.
std::vector<std::size_t> degree_four_generators(const JoinComplex& cx);

/// P^p(y_i) = y_i^{p-1} g + h + sum mu_{j,k} y_j y_k.
struct PpDecomposition {
  FpVector leading;
  AlgebraElement middle;
  std::map<std::pair<Vertex, Vertex>, AlgebraElement> mixed;

  AlgebraElement recombine(const JoinComplex& cx, Vertex i) const;
};

/// Throws ContractError when P^p(y_i) is outside (y_i) + (y_j y_k).
PpDecomposition decompose_pp(const SteenrodTable& t, Vertex i);

struct GFunction {
  std::vector<FpVector> assignment;  // by graph vertex
};

struct CokernelReport {
  GFunction g;
  std::vector<Vertex> zero_cokernel;  // vertices whose g-value lies in the span of its neighbours'
  bool all_nonzero() const noexcept { return zero_cokernel.empty(); }
  /// The g-function read as a span coloring; only meaningful when all_nonzero().
  SpanColoring as_span_coloring(Residue p) const;
  std::string to_text(const Graph& g) const;
};

/// Throws ContractError when the graph has a vertex of degree < 2.
CokernelReport coloring_from_action(const SteenrodTable& t);

// ---------------------------------------------------------------------------
// Necessary condition
// ---------------------------------------------------------------------------

enum class NecessaryStatus { Pass, Fail, NotApplicable };

struct NecessaryResult {
  NecessaryStatus status = NecessaryStatus::NotApplicable;
  Residue p = 0;
  std::size_t bound = 0;
  std::size_t span_chromatic = 0;
  std::optional<SpanColoring> witness;
  std::string to_text(const Graph& g) const;
};

/// Prime and bound of the span-chromatic test for a family: B(n) -> (3, n),
/// B_p(r) -> (p, r_1), A_p(s) -> (p, s_1), A(s) with |s| + 1 an odd prime
/// -> (|s| + 1, s_1). Nothing for other families.
std::optional<std::pair<Residue, std::size_t>> necessary_parameters(const FamilySpec& spec);

/// Fail certifies s_p chi(G) > bound; Pass is inconclusive. `jobs` > 1 uses
/// the parallel span solver.
NecessaryResult necessary_condition(const FamilySpec& spec, const Graph& g, int jobs = 1);

}  // namespace srchroma
