#include "srchroma/realizability.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <map>
#include <sstream>

#include <omp.h>

namespace srchroma {

std::string format_partition(const JoinComplex& cx, const Partition& part) {
  std::string out;
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    out += "V_" + std::to_string(b + 1) + " = {";
    for (std::size_t i = 0; i < part.blocks[b].size(); ++i)
      out += (i ? ", " : "") + cx.generator(part.blocks[b][i]).name;
    out += "}\n";
  }
  return out;
}

std::string format_multiset(const DegreeMultiset& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "}";
}

// ---------------------------------------------------------------------------

DegreeMultisetFamily DegreeMultisetFamily::anderson_grodal() {
  DegreeMultisetFamily f;
  f.cp_ = f.su_ = f.sp_ = true;
  return f;
}

DegreeMultisetFamily DegreeMultisetFamily::parse(std::string_view text) {
  DegreeMultisetFamily f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream words(line);
    std::string w, extra;
    if (!(words >> w)) continue;
    if (words >> extra) throw ParseError(lineno, "expected one base set per line");
    if (w == "cp") {
      f.cp_ = true;
    } else if (w == "su-chains") {
      f.su_ = true;
    } else if (w == "sp-chains") {
      f.sp_ = true;
    } else {
      DegreeMultiset m;
      std::istringstream parts(w);
      for (std::string piece; std::getline(parts, piece, ',');) {
        unsigned d = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), d);
        if (ec != std::errc{} || ptr != piece.data() + piece.size() || d == 0 || d % 2)
          throw ParseError(lineno, "bad degree '" + piece + "' (positive even integers expected)");
        m.push_back(d);
      }
      std::sort(m.begin(), m.end());
      f.explicit_.insert(std::move(m));
    }
  }
  return f;
}

bool DegreeMultisetFamily::is_base(const DegreeMultiset& m) const {
  if (m.empty()) return false;
  if (explicit_.count(m)) return true;
  if (cp_ && m == DegreeMultiset{2}) return true;
  auto chain = [&](unsigned step) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 4 + step * i) return false;
    return true;
  };
  if (su_ && m.size() >= 1 && chain(2)) return true;  // {4} is BSU(2)
  if (sp_ && chain(4)) return true;
  return false;
}

std::string DegreeMultisetFamily::describe() const {
  std::vector<std::string> parts;
  if (cp_) parts.push_back("{2}");
  if (su_) parts.push_back("{4,6,...,2n}");
  if (sp_) parts.push_back("{4,8,...,4m}");
  for (const auto& m : explicit_) parts.push_back(format_multiset(m));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
  return out;
}

namespace {

using Decomp = std::optional<std::vector<DegreeMultiset>>;

// Every base set containing the smallest remaining degree is tried, in order
// of increasing multiplicity vectors over the distinct degrees.
Decomp decompose_rec(const DegreeMultiset& m, const DegreeMultisetFamily& fam, std::map<DegreeMultiset, Decomp>& memo) {
  if (m.empty()) return std::vector<DegreeMultiset>{};
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<unsigned> values;
  std::vector<unsigned> counts;
  for (auto d : m) {
    if (values.empty() || values.back() != d) values.push_back(d), counts.push_back(0);
    ++counts.back();
  }
  std::vector<unsigned> take(values.size(), 0);
  take[0] = 1;
  Decomp result;
  while (true) {
    DegreeMultiset part, rest;
    for (std::size_t i = 0; i < values.size(); ++i) {
      part.insert(part.end(), take[i], values[i]);
      rest.insert(rest.end(), counts[i] - take[i], values[i]);
    }
    if (fam.is_base(part)) {
      if (auto sub = decompose_rec(rest, fam, memo)) {
        sub->insert(sub->begin(), part);
        result = std::move(sub);
        break;
      }
    }
    std::size_t i = values.size();
    while (i > 0) {
      --i;
      const unsigned lo = i == 0 ? 1 : 0;
      if (take[i] < counts[i]) {
        ++take[i];
        break;
      }
      take[i] = lo;
      if (i == 0) {
        i = values.size() + 1;
        break;
      }
    }
    if (i == values.size() + 1) break;
  }
  memo.emplace(m, result);
  return result;
}

}  // namespace

std::optional<std::vector<DegreeMultiset>> multiset_decomposable(const DegreeMultiset& m,
                                                                 const DegreeMultisetFamily& fam) {
  for (auto d : m)
    if (d == 0 || d % 2) throw ContractError("degrees must be positive and even, got " + std::to_string(d));
  DegreeMultiset sorted = m;
  std::sort(sorted.begin(), sorted.end());
  std::map<DegreeMultiset, Decomp> memo;
  return decompose_rec(sorted, fam, memo);
}

DegreeMultiset face_multiset(const JoinComplex& cx, const std::vector<std::size_t>& gens) {
  DegreeMultiset m;
  for (auto g : gens) m.push_back(cx.generator(g).degree);
  std::sort(m.begin(), m.end());
  return m;
}

// ---------------------------------------------------------------------------

std::vector<DegreeMultiset> scheme_targets(Scheme s, Residue p) {
  DegreeMultiset part;
  if (s == Scheme::A)
    for (unsigned d = 4; d <= 2 * p; d += 2) part.push_back(d);
  else
    for (unsigned d = 4; d + 2 <= 2 * p; d += 4) part.push_back(d);
  DegreeMultiset full = part;
  full.push_back(2 * p + 2);
  return {full, part};
}

namespace {

void check_partition(const JoinComplex& cx, const Partition& part) {
  std::vector<int> owner(cx.generator_count(), -1);
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    for (auto g : part.blocks[b]) {
      if (g >= cx.generator_count()) throw ContractError("partition names an unknown generator");
      if (owner[g] >= 0) throw ContractError("generator " + cx.generator(g).name + " lies in two blocks");
      owner[g] = static_cast<int>(b);
    }
  for (std::size_t g = 0; g < owner.size(); ++g)
    if (owner[g] < 0) throw ContractError("partition does not cover generator " + cx.generator(g).name);
}

template <class Allowed>
bool verify_serial(const JoinComplex& cx, const Partition& part, Allowed allowed) {
  check_partition(cx, part);
  for (const auto& face : cx.maximal_faces())
    for (const auto& block : part.blocks) {
      std::vector<std::size_t> meet;
      for (auto g : block)
        if (std::binary_search(face.begin(), face.end(), g)) meet.push_back(g);
      if (!meet.empty() && !allowed(face_multiset(cx, meet))) return false;
    }
  return true;
}

auto scheme_predicate(Scheme s, Residue p) {
  return [targets = scheme_targets(s, p)](const DegreeMultiset& m) {
    return std::find(targets.begin(), targets.end(), m) != targets.end();
  };
}

}  // namespace

bool verify_partition(const JoinComplex& cx, const Partition& part, Scheme s, Residue p) {
  return verify_serial(cx, part, scheme_predicate(s, p));
}

bool verify_partition(const JoinComplex& cx, const Partition& part, const DegreeMultisetFamily& fam) {
  return verify_serial(cx, part, [&](const DegreeMultiset& m) { return fam.is_base(m); });
}

bool verify_partition_parallel(const JoinComplex& cx, const Partition& part, Scheme s, Residue p) {
  check_partition(cx, part);
  const auto faces = cx.maximal_faces();
  const auto allowed = scheme_predicate(s, p);
  const std::size_t nb = part.blocks.size();
  const auto total = static_cast<std::int64_t>(faces.size() * nb);
  int bad = 0;
#pragma omp parallel for reduction(| : bad) schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto& face = faces[static_cast<std::size_t>(idx) / nb];
    const auto& block = part.blocks[static_cast<std::size_t>(idx) % nb];
    std::vector<std::size_t> meet;
    for (auto g : block)
      if (std::binary_search(face.begin(), face.end(), g)) meet.push_back(g);
    if (!meet.empty() && !allowed(face_multiset(cx, meet))) bad |= 1;
  }
  return bad == 0;
}

Partition partition_from_coloring(const JoinComplex& cx, const Coloring& c) {
  if (cx.block_count() == 0) throw ContractError("complex has no simplex blocks");
  const std::size_t n = cx.block(0).labels.size();
  for (std::size_t k = 0; k < cx.block_count(); ++k)
    if (cx.block(k).labels.size() != n) throw ContractError("block sizes are not all equal");
  const Graph& g = cx.graph();
  if (!is_valid_coloring(g, c)) throw ContractError("invalid coloring");
  if (c.num_colors > n)
    throw ContractError("coloring uses " + std::to_string(c.num_colors) + " colours but blocks have size " +
                        std::to_string(n));
  Partition part;
  part.blocks.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < cx.block_count(); ++k) part.blocks[i].push_back(cx.block_offset(k) + i);
  for (Vertex v = 0; v < g.size(); ++v) part.blocks[c.color[v] - 1].push_back(cx.graph_generator(v));
  return part;
}

// ---------------------------------------------------------------------------

bool is_valid_decomposition(const std::vector<unsigned>& s, const Decomposition& d, std::size_t c) {
  const std::size_t n = s.size();
  if (n == 0 || d.prime.size() != n || d.double_prime.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (d.prime[j] + d.double_prime[j] != s[j]) return false;
    if (j > 0 && d.prime[j] > d.prime[j - 1]) return false;
    const bool odd_slot = j % 2 == 0;  // slot j+1 is odd
    if (!odd_slot && d.double_prime[j] != 0) return false;
    if (odd_slot && j >= 2 && d.double_prime[j] > d.double_prime[j - 2]) return false;
  }
  if (n % 2 == 0) return d.double_prime[n - 2] + d.prime[n - 1] >= c;
  return d.prime[n - 1] >= c;
}

std::optional<Decomposition> decompose_s(const std::vector<unsigned>& s, std::size_t c) {
  if (s.empty()) throw ContractError("decompose_s needs a nonempty vector");
  std::vector<std::size_t> odd;
  for (std::size_t j = 0; j < s.size(); j += 2) odd.push_back(j);
  Decomposition d{s, std::vector<unsigned>(s.size(), 0)};
  for (auto j : odd) d.double_prime[j] = s[j];
  while (true) {
    for (std::size_t j = 0; j < s.size(); ++j) d.prime[j] = s[j] - d.double_prime[j];
    if (is_valid_decomposition(s, d, c)) return d;
    // Decrement like a counter whose last odd slot moves fastest.
    std::size_t i = odd.size();
    while (i > 0 && d.double_prime[odd[i - 1]] == 0) {
      d.double_prime[odd[i - 1]] = s[odd[i - 1]];
      --i;
    }
    if (i == 0) return std::nullopt;
    --d.double_prime[odd[i - 1]];
  }
}

std::vector<unsigned> slot_vector(const JoinComplex& cx) {
  if (cx.spec().family == Family::Free) throw ContractError("free rings have no slot structure");
  const unsigned gd = cx.graph_degree();
  if (gd < 6) throw ContractError("graph degree too small for a slot structure");
  const std::size_t n = (gd - 4) / 2;
  std::vector<unsigned> s(n, 0);
  for (std::size_t k = 0; k < cx.block_count(); ++k) {
    const unsigned d = cx.block(k).degree;
    if (d < 4 || (d - 2) / 2 > n) throw ContractError("block degree outside the slot range");
    s[(d - 2) / 2 - 1] += static_cast<unsigned>(cx.block(k).labels.size());
  }
  return s;
}

Partition partition_from_decomposition(const JoinComplex& cx, const Decomposition& d, const Coloring& c) {
  const auto s = slot_vector(cx);
  const Graph& g = cx.graph();
  if (!is_valid_coloring(g, c)) throw ContractError("invalid coloring");
  if (!is_valid_decomposition(s, d, c.num_colors)) throw ContractError("invalid decomposition for this complex");
  const std::size_t n = s.size();
  // Generators of slot j (0-based), in block order.
  std::vector<std::vector<std::size_t>> slot_gens(n);
  for (std::size_t k = 0; k < cx.block_count(); ++k) {
    const std::size_t j = (cx.block(k).degree - 2) / 2 - 1;
    for (std::size_t i = 0; i < cx.block(k).labels.size(); ++i) slot_gens[j].push_back(cx.block_offset(k) + i);
  }
  Partition part;
  for (unsigned i = 0; i < d.prime[0]; ++i) {
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < n && d.prime[j] > i; ++j) row.push_back(slot_gens[j][i]);
    part.blocks.push_back(std::move(row));
  }
  const std::size_t staircase = part.blocks.size();
  for (unsigned r = 0; r < d.double_prime[0]; ++r) {
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < n && d.double_prime[j] > r; j += 2) row.push_back(slot_gens[j][d.prime[j] + r]);
    part.blocks.push_back(std::move(row));
  }
  // Colour i goes to full staircase row i while they last, then to odd row
  // i - s'_n (even n only; validity guarantees enough full odd rows).
  for (Vertex v = 0; v < g.size(); ++v) {
    const std::size_t col = c.color[v] - 1;
    const std::size_t target = col < d.prime[n - 1] ? col : staircase + (col - d.prime[n - 1]);
    part.blocks.at(target).push_back(cx.graph_generator(v));
  }
  return part;
}

// ---------------------------------------------------------------------------

ChromaticBounds chromatic_bounds(const Graph& g, Residue p) {
  ChromaticBounds b{span_chromatic_number(g, p).span_chromatic_number, chromatic_number(g).chromatic_number};
  if (b.lower > b.upper) throw std::logic_error("span chromatic number exceeds chromatic number");
  return b;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedRealizable: return "CertifiedRealizable";
    case Verdict::CertifiedNotRealizable: return "CertifiedNotRealizable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string RealizabilityVerdict::to_text(const JoinComplex& cx) const {
  std::ostringstream out;
  out << "status: " << verdict_name(status) << "\n";
  out << "family: " << spec.describe() << "\n";
  out << "chi = " << chromatic << "\n";
  if (partition) {
    out << "construction: " << construction << "\n";
    if (decomposition) {
      auto vec = [](const std::vector<unsigned>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
      };
      out << "s' = " << vec(decomposition->prime) << "\n";
      out << "s'' = " << vec(decomposition->double_prime) << "\n";
    }
    out << format_partition(cx, *partition);
  }
  if (face) {
    out << "face: {";
    for (std::size_t i = 0; i < face->size(); ++i) out << (i ? ", " : "") << cx.generator((*face)[i]).name;
    out << "}\n";
    out << "multiset: " << format_multiset(*face_multiset) << "\n";
  }
  if (necessary && status == Verdict::CertifiedNotRealizable && !face) out << necessary->to_text(cx.graph());
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

RealizabilityVerdict check_realizable(const FamilySpec& spec, const Graph& g, const RealizabilityOptions& opt) {
  if (spec.family == Family::Free) throw ContractError("realizability is defined for graph families only");
  const auto cx = build_complex(spec, g);
  RealizabilityVerdict v;
  v.spec = cx.spec();
  const auto chi = chromatic_number(g);
  v.chromatic = chi.chromatic_number;

  for (const auto& face : cx.maximal_faces()) {
    auto m = face_multiset(cx, face);
    if (!multiset_decomposable(m, opt.family)) {
      v.status = Verdict::CertifiedNotRealizable;
      v.face = face;
      v.face_multiset = std::move(m);
      v.notes.push_back("face degrees do not decompose into base sets " + opt.family.describe());
      return v;
    }
  }

  auto nec = necessary_condition(spec, g, opt.jobs);
  if (nec.status == NecessaryStatus::Fail) {
    v.status = Verdict::CertifiedNotRealizable;
    v.necessary = std::move(nec);
    return v;
  }
  if (nec.status == NecessaryStatus::NotApplicable) v.notes.push_back("span-chromatic condition not applicable");
  v.necessary = std::move(nec);

  bool uniform = cx.block_count() > 0;
  for (std::size_t k = 0; k < cx.block_count(); ++k)
    uniform = uniform && cx.block(k).labels.size() == cx.block(0).labels.size();
  const bool has_scheme = spec.family == Family::Ap || spec.family == Family::Bp || spec.family == Family::B;
  if (uniform && has_scheme && chi.chromatic_number <= cx.block(0).labels.size()) {
    auto part = partition_from_coloring(cx, chi.witness);
    const Scheme scheme = spec.family == Family::Ap ? Scheme::A : Scheme::B;
    const Residue p = spec.family == Family::B ? 3 : spec.p;
    if (!verify_partition(cx, part, scheme, p)) throw std::logic_error("coloring partition failed verification");
    v.status = Verdict::CertifiedRealizable;
    v.construction = "coloring";
    v.partition = std::move(part);
    return v;
  }

  const auto s = slot_vector(cx);
  if (auto d = decompose_s(s, chi.chromatic_number)) {
    auto part = partition_from_decomposition(cx, *d, chi.witness);
    if (!verify_partition(cx, part, opt.family))
      throw std::logic_error("decomposition partition failed verification");
    v.status = Verdict::CertifiedRealizable;
    v.construction = "decomposition";
    v.decomposition = std::move(d);
    v.partition = std::move(part);
    return v;
  }
  v.notes.push_back("no decomposition s = s' + s'' exists; sufficiency not established");
  return v;
}

}  // namespace srchroma
