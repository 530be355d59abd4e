#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "srchroma/graph.hpp"
#include "srchroma/sr_algebra.hpp"
#include "srchroma/steenrod.hpp"

namespace srchroma {

/// Blocks of generator indices.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;
};

std::string format_partition(const JoinComplex& cx, const Partition& part);

/// Sorted degrees.
using DegreeMultiset = std::vector<unsigned>;
std::string format_multiset(const DegreeMultiset& m);

/// Allowed multisets: the closure under disjoint union of a list of base sets.
/// The default base is {2}, {4,6,...,2n} for n >= 2 and {4,8,...,4m} for m >= 1.
class DegreeMultisetFamily {
 public:
  static DegreeMultisetFamily anderson_grodal();
  /// One base per line: a comma separated multiset such as "4,6,8", or one of
  /// the keywords cp ({2}), su-chains, sp-chains. `#` starts a comment.
  /// Throws ParseError.
  static DegreeMultisetFamily parse(std::string_view text);

  bool is_base(const DegreeMultiset& m) const;
  std::string describe() const;

 private:
  bool cp_ = false;
  bool su_ = false;
  bool sp_ = false;
  std::set<DegreeMultiset> explicit_;
};

/// A decomposition into base sets, or nothing. Exact search with memoisation;
/// the first decomposition in a fixed order is returned. Throws ContractError
/// for odd or zero entries.
std::optional<std::vector<DegreeMultiset>> multiset_decomposable(const DegreeMultiset& m,
                                                                 const DegreeMultisetFamily& fam);

/// Degree multiset of a set of generators.
DegreeMultiset face_multiset(const JoinComplex& cx, const std::vector<std::size_t>& gens);

// ---------------------------------------------------------------------------
// Partition criteria
// ---------------------------------------------------------------------------

enum class Scheme { A, B };

/// scheme A: {4,6,...,2p,2p+2}, {4,6,...,2p}; scheme B: {4,8,...,2p-2,2p+2},
/// {4,8,...,2p-2}. The empty multiset is always allowed.
std::vector<DegreeMultiset> scheme_targets(Scheme s, Residue p);

/// Every maximal face meets every block in an allowed multiset (or not at
/// all). Throws ContractError if the blocks do not partition the generators.
bool verify_partition(const JoinComplex& cx, const Partition& part, Scheme s, Residue p);
bool verify_partition(const JoinComplex& cx, const Partition& part, const DegreeMultisetFamily& fam);
/// The same checks with (face, block) pairs spread over OpenMP threads.
bool verify_partition_parallel(const JoinComplex& cx, const Partition& part, Scheme s, Residue p);

/// V_i = {x_i^(1), ..., x_i^(last)} together with the colour class i, i = 1..n,
/// where every block has size n. Throws ContractError otherwise, or when the
/// coloring is invalid or uses more than n colours.
Partition partition_from_coloring(const JoinComplex& cx, const Coloring& c);

// ---------------------------------------------------------------------------
// Decompositions s = s' + s''
// ---------------------------------------------------------------------------

struct Decomposition {
  std::vector<unsigned> prime;         // s'
  std::vector<unsigned> double_prime;  // s''
};

/// s' weakly decreasing; s'' zero in even slots and weakly decreasing on odd
/// slots; for even length 2k s''_{2k-1} + s'_{2k} >= c, for odd length
/// s'_n >= c.
bool is_valid_decomposition(const std::vector<unsigned>& s, const Decomposition& d, std::size_t c);

/// Odd-slot values of s'' are tried in downward lexicographic order; the first
/// valid decomposition is returned. Throws ContractError for an empty vector.
std::optional<Decomposition> decompose_s(const std::vector<unsigned>& s, std::size_t c);

/// Sizes per slot j = 1..n, where slot j holds degree 2j+2 and
/// n = (graph degree - 4) / 2; slots without a block have size 0.
std::vector<unsigned> slot_vector(const JoinComplex& cx);

/// Rows i = 1..s'_1 take x_i from every slot j with s'_j >= i; then odd rows
/// r = 1..s''_1 take x_{s'_j + r} from every odd slot j with s''_j >= r.
/// Colour classes go to the rows containing every slot, continuing on the
/// first odd rows for even n. Throws ContractError for an invalid
/// decomposition or coloring.
Partition partition_from_decomposition(const JoinComplex& cx, const Decomposition& d, const Coloring& c);

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

struct ChromaticBounds {
  std::size_t lower = 0;  // s_p chi
  std::size_t upper = 0;  // chi
};

ChromaticBounds chromatic_bounds(const Graph& g, Residue p);

enum class Verdict { CertifiedRealizable, CertifiedNotRealizable, Inconclusive };
std::string verdict_name(Verdict v);

struct RealizabilityVerdict {
  Verdict status = Verdict::Inconclusive;
  FamilySpec spec;
  std::size_t chromatic = 0;
  // realizable
  std::optional<Partition> partition;
  std::string construction;  // "coloring" or "decomposition"
  std::optional<Decomposition> decomposition;
  // not realizable
  std::optional<NecessaryResult> necessary;
  std::optional<std::vector<std::size_t>> face;
  std::optional<DegreeMultiset> face_multiset;
  std::vector<std::string> notes;

  std::string to_text(const JoinComplex& cx) const;
};

struct RealizabilityOptions {
  DegreeMultisetFamily family = DegreeMultisetFamily::anderson_grodal();
  int jobs = 1;
};

/// (1) every maximal face's degree multiset must decompose; (2) the
/// span-chromatic necessary condition; (3) a partition from a coloring
/// (uniform vectors) or from decompose_s, verified; (4) otherwise
/// Inconclusive. Throws ContractError for free rings.
RealizabilityVerdict check_realizable(const FamilySpec& spec, const Graph& g, const RealizabilityOptions& opt = {});

}  // namespace srchroma
