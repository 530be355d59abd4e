#include "srchroma/steenrod.hpp"

#include <algorithm>
#include <exception>
#include <regex>
#include <set>
#include <sstream>

#include <omp.h>

namespace srchroma {

namespace {

bool same_complex(const JoinComplex& a, const JoinComplex& b) { return &a == &b || a.serialize() == b.serialize(); }

void check_odd_prime(Residue p) {
  if (p < 3 || !is_prime(p)) throw ContractError("Steenrod operations need an odd prime, got " + std::to_string(p));
}

std::string op_name(unsigned outer, unsigned inner) {
  std::string s = "P^" + std::to_string(outer);
  if (inner) s += "P^" + std::to_string(inner);
  return s;
}

}  // namespace

IncompleteTableError::IncompleteTableError(std::string generator, unsigned k)
    : std::runtime_error("table has no entry for P^" + std::to_string(k) + "(" + generator + ")"),
      generator_(std::move(generator)),
      k_(k) {}

SteenrodTable::SteenrodTable(std::shared_ptr<const JoinComplex> cx, Residue p) : cx_(std::move(cx)), p_(p) {
  check_odd_prime(p);
}

SteenrodTable SteenrodTable::zero(std::shared_ptr<const JoinComplex> cx, Residue p) {
  SteenrodTable t(cx, p);
  for (std::size_t g = 0; g < cx->generator_count(); ++g)
    for (unsigned k = 1; k < t.top(g); ++k) t.entries_.emplace(std::make_pair(g, k), AlgebraElement(cx, p));
  return t;
}

void SteenrodTable::set(std::size_t g, unsigned k, AlgebraElement value) {
  if (g >= cx_->generator_count()) throw ContractError("generator index out of range");
  if (!same_complex(value.complex(), *cx_) || value.prime() != p_)
    throw ContractError("table value over a different algebra");
  if (k == 0 || k >= top(g)) {
    if (!(value == get(g, k)))
      throw ContractError("P^" + std::to_string(k) + "(" + cx_->generator(g).name + ") is fixed by unstability");
    return;
  }
  if (!value.is_zero() && value.degree() != target_degree(g, k))
    throw ContractError("P^" + std::to_string(k) + "(" + cx_->generator(g).name + ") must be homogeneous of degree " +
                        std::to_string(target_degree(g, k)));
  AlgebraElement stored(cx_, p_);
  stored += value;
  entries_.insert_or_assign(std::make_pair(g, k), std::move(stored));
}

bool SteenrodTable::has(std::size_t g, unsigned k) const {
  return k == 0 || k >= top(g) || entries_.count({g, k});
}

AlgebraElement SteenrodTable::get(std::size_t g, unsigned k) const {
  if (k == 0) return AlgebraElement::generator(cx_, p_, g);
  if (k == top(g)) return AlgebraElement::monomial(cx_, p_, Monomial::generator(*cx_, g, p_), 1);
  if (k > top(g)) return AlgebraElement(cx_, p_);
  auto it = entries_.find({g, k});
  if (it == entries_.end()) throw IncompleteTableError(cx_->generator(g).name, k);
  return it->second;
}

std::string SteenrodTable::serialize() const {
  std::string out;
  for (std::size_t g = 0; g < cx_->generator_count(); ++g)
    for (unsigned k = 1; k <= top(g); ++k) {
      if (!has(g, k)) continue;
      out += "P^" + std::to_string(k) + "(" + cx_->generator(g).name + ") = " + format_element(get(g, k)) + "\n";
    }
  return out;
}

SteenrodTable SteenrodTable::parse(std::shared_ptr<const JoinComplex> cx, Residue p, std::string_view text) {
  SteenrodTable t(cx, p);
  static const std::regex line_re(R"(^\s*P\^(\d+)\((\S+)\)\s*=\s*(.+?)\s*$)");
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) throw ParseError(lineno, "expected 'P^<k>(<generator>) = <element>'");
    try {
      const unsigned k = static_cast<unsigned>(std::stoul(m[1].str()));
      const std::size_t g = cx->generator_index(m[2].str());
      t.set(g, k, parse_element(cx, p, m[3].str()));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

CartanEvaluator<Residue> numeric_evaluator(const SteenrodTable& t, unsigned max_k) {
  return CartanEvaluator<Residue>(t.complex_ptr(), t.prime(), max_k,
                                  [&t](std::size_t g, unsigned k) { return t.get(g, k); });
}

}  // namespace

AlgebraElement cartan_extend(const SteenrodTable& t, const AlgebraElement& a, unsigned k) {
  if (!same_complex(a.complex(), t.complex()) || a.prime() != t.prime())
    throw ContractError("element and table over different algebras");
  auto ev = numeric_evaluator(t, k);
  return ev.apply(a, k);
}

AlgebraElement total_operation(const SteenrodTable& t, const AlgebraElement& a, unsigned degree_bound) {
  AlgebraElement out(t.complex_ptr(), t.prime());
  if (a.is_zero()) return out;
  unsigned low = a.terms().rbegin()->first.degree();
  const unsigned step = 2 * (t.prime() - 1);
  unsigned max_k = 0;
  while (low + (max_k + 1) * step <= degree_bound) ++max_k;
  auto ev = numeric_evaluator(t, max_k);
  for (unsigned k = 0; k <= max_k; ++k) {
    const auto pk = ev.apply(a, k);
    for (const auto& [m, c] : pk.terms())
      if (m.degree() <= degree_bound) out.add_term(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string RelationSet::to_string() const {
  std::vector<std::string> parts;
  if (p1pp) parts.push_back("p1pp");
  if (adem) parts.push_back("adem");
  if (wd) parts.push_back("wd");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out.empty() ? "none" : out;
}

RelationSet RelationSet::parse(std::string_view text) {
  RelationSet rs{false, false, false};
  std::istringstream in{std::string(text)};
  for (std::string part; std::getline(in, part, ',');) {
    if (part == "p1pp")
      rs.p1pp = true;
    else if (part == "adem")
      rs.adem = true;
    else if (part == "wd")
      rs.wd = true;
    else if (part != "none" && !part.empty())
      throw ContractError("unknown relation '" + part + "' (expected p1pp, adem, wd, none)");
  }
  return rs;
}

unsigned default_degree_bound(Residue p) { return 2 * p * p + 2 * p; }

std::vector<RelationInstance> relation_instances(const JoinComplex& cx, Residue p, const RelationSet& rs,
                                                 unsigned degree_bound) {
  check_odd_prime(p);
  std::vector<RelationInstance> out;
  const unsigned step = 2 * (p - 1);

  // Sources: generators first, then products by ascending degree.
  std::vector<Monomial> sources;
  unsigned max_gen_degree = 0;
  for (std::size_t g = 0; g < cx.generator_count(); ++g) {
    sources.push_back(Monomial::generator(cx, g));
    max_gen_degree = std::max(max_gen_degree, cx.generator(g).degree);
  }
  for (unsigned d = 2; d <= degree_bound; d += 2)
    for (auto& m : monomial_basis(cx, d))
      if (m.total_exponent() >= 2) sources.push_back(std::move(m));

  auto add = [&](std::string name, const Monomial& src, std::vector<OpTerm> lhs, std::vector<OpTerm> rhs,
                 unsigned shift) {
    out.push_back({std::move(name) + "(" + format_monomial(cx, src) + ")", src, std::move(lhs), std::move(rhs),
                   src.degree() + shift});
  };

  for (const auto& m : sources) {
    const bool is_gen = m.total_exponent() == 1;
    if (rs.p1pp) {
      const unsigned shift = (p + 1) * step;
      if (is_gen || m.degree() + shift <= degree_bound) add(op_name(1, p), m, {{1, 1, p}}, {{1, p + 1, 0}}, shift);
    }
    if (rs.adem) {
      // In range: target degree within the bound. On a generator also every
      // instance that is not zero for degree reasons.
      for (unsigned b = 1;; ++b) {
        bool any = false;
        for (unsigned a = 1; a < p * b; ++a) {
          const unsigned shift = (a + b) * step;
          const bool in_range = m.degree() + shift <= degree_bound;
          const bool gen_case = is_gen && 2 * b <= m.degree() && 2 * a <= m.degree() + b * step;
          if (!in_range && !gen_case) continue;
          any = true;
          std::vector<OpTerm> rhs;
          for (unsigned j = 0; p * j <= a; ++j) {
            const std::int64_t top = static_cast<std::int64_t>((p - 1) * (b - j)) - 1;
            Residue c = binomial_mod(top, a - p * j, p);
            if ((a + j) % 2) c = neg_mod(c, p);
            if (c) rhs.push_back({c, a + b - j, j});
          }
          add(op_name(a, b), m, {{1, a, b}}, std::move(rhs), shift);
        }
        if (!any) break;
      }
    }
  }

  if (rs.wd) {
    const Graph& g = cx.graph();
    std::vector<Monomial> nonfaces;
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = u + 1; v < g.size(); ++v) {
        auto yu = Monomial::generator(cx, cx.graph_generator(u)), yv = Monomial::generator(cx, cx.graph_generator(v));
        if (!g.adjacent(u, v)) {
          nonfaces.push_back(yu * yv);
          continue;
        }
        for (Vertex w = v + 1; w < g.size(); ++w)
          if (g.adjacent(u, w) && g.adjacent(v, w))
            nonfaces.push_back(yu * yv * Monomial::generator(cx, cx.graph_generator(w)));
      }
    for (const auto& n : nonfaces)
      for (unsigned k = 1; n.degree() + k * step <= degree_bound; ++k) add(op_name(k, 0), n, {{1, k, 0}}, {}, k * step);
  }
  return out;
}

namespace {

template <class C>
BasicElement<C> evaluate_side(CartanEvaluator<C>& ev, const std::shared_ptr<const JoinComplex>& cx, Residue p,
                              const Monomial& src, const std::vector<OpTerm>& side) {
  BasicElement<C> out(cx, p);
  for (const auto& t : side) {
    auto inner = ev.on_monomial(src, t.inner);
    out += ev.apply(inner, t.outer).scaled(CoeffTraits<C>::from_int(t.coeff, p));
  }
  return out;
}

unsigned max_op(const std::vector<RelationInstance>& inst) {
  unsigned k = 1;
  for (const auto& r : inst)
    for (const auto* side : {&r.lhs, &r.rhs})
      for (const auto& t : *side) k = std::max({k, t.outer, t.inner});
  return k;
}

}  // namespace

std::string RelationReport::to_text() const {
  std::ostringstream out;
  out << "relations: " << relations.to_string() << "\n";
  out << "degree bound: " << degree_bound << "\n";
  out << "instances checked: " << instances << "\n";
  out << "violations: " << violations.size() << "\n";
  for (const auto& v : violations)
    out << "violation " << v.instance << ": lhs = " << format_element(v.lhs) << " ; rhs = " << format_element(v.rhs)
        << "\n";
  return out.str();
}

RelationReport check_relations(const SteenrodTable& t, const RelationSet& rs, unsigned degree_bound) {
  RelationReport report{rs, degree_bound, 0, {}};
  auto inst = relation_instances(t.complex(), t.prime(), rs, degree_bound);
  auto ev = numeric_evaluator(t, max_op(inst));
  for (const auto& r : inst) {
    auto lhs = evaluate_side(ev, t.complex_ptr(), t.prime(), r.source, r.lhs);
    auto rhs = evaluate_side(ev, t.complex_ptr(), t.prime(), r.source, r.rhs);
    if (!(lhs == rhs)) report.violations.push_back({r.name, std::move(lhs), std::move(rhs)});
  }
  report.instances = inst.size();
  return report;
}

RelationReport check_relations_parallel(const SteenrodTable& t, const RelationSet& rs, unsigned degree_bound) {
  RelationReport report{rs, degree_bound, 0, {}};
  const auto inst = relation_instances(t.complex(), t.prime(), rs, degree_bound);
  const unsigned kmax = max_op(inst);
  std::vector<std::optional<Violation>> found(inst.size());
  std::exception_ptr error;
#pragma omp parallel
  {
    auto ev = numeric_evaluator(t, kmax);
#pragma omp for schedule(dynamic)
    for (std::size_t i = 0; i < inst.size(); ++i) {
      try {
        auto lhs = evaluate_side(ev, t.complex_ptr(), t.prime(), inst[i].source, inst[i].lhs);
        auto rhs = evaluate_side(ev, t.complex_ptr(), t.prime(), inst[i].source, inst[i].rhs);
        if (!(lhs == rhs)) found[i] = Violation{inst[i].name, std::move(lhs), std::move(rhs)};
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  for (auto& v : found)
    if (v) report.violations.push_back(std::move(*v));
  report.instances = inst.size();
  return report;
}

// ---------------------------------------------------------------------------

std::vector<Monomial> graph_ideal(const JoinComplex& cx, Vertex i) {
  std::vector<Monomial> gens{Monomial::generator(cx, cx.graph_generator(i))};
  const std::size_t m = cx.graph().size();
  for (Vertex j = 0; j < m; ++j)
    for (Vertex k = j + 1; k < m; ++k)
      gens.push_back(Monomial::generator(cx, cx.graph_generator(j)) * Monomial::generator(cx, cx.graph_generator(k)));
  return gens;
}

std::string IdealReport::to_text() const {
  std::ostringstream out;
  out << "ideal preservation: " << (ok() ? "pass" : "fail") << "\n";
  for (const auto& f : failures)
    out << "outside ideal P^" << f.k << "(" << f.generator << ") = " << format_element(f.value) << "\n";
  return out.str();
}

IdealReport check_ideal_preservation(const SteenrodTable& t) {
  IdealReport report;
  const auto& cx = t.complex();
  for (Vertex v = 0; v < cx.graph().size(); ++v) {
    const std::size_t g = cx.graph_generator(v);
    const auto ideal = graph_ideal(cx, v);
    for (unsigned k = 1; k < t.top(g); ++k) {
      if (!t.has(g, k)) continue;
      auto value = t.get(g, k);
      if (!ideal_membership(value, ideal)) report.failures.push_back({cx.generator(g).name, k, std::move(value)});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

std::string SearchResult::scope() const {
  return "relative to relation set {" + relations.to_string() + "} with unstability and Cartan, degree bound " +
         std::to_string(degree_bound);
}

std::string SearchResult::to_text() const {
  std::ostringstream out;
  if (found) {
    out << "found (" << scope() << ")\n";
    out << table->serialize();
  } else {
    out << "exhausted (" << scope() << ")\n";
  }
  out << "unknowns: " << unknowns << "\n";
  out << "equations: " << equations << "\n";
  out << "nodes: " << nodes << "\n";
  return out.str();
}

SearchResult search_action(std::shared_ptr<const JoinComplex> cx, Residue p, const SearchOptions& options) {
  check_odd_prime(p);
  SearchResult result;
  result.relations = options.relations;
  result.degree_bound = options.degree_bound ? options.degree_bound : default_degree_bound(p);

  struct Slot {
    std::size_t g;
    unsigned k;
    std::uint32_t first;
    std::vector<Monomial> basis;
  };
  // Unknowns ordered by k, then generator, then basis monomial.
  std::map<std::pair<std::size_t, unsigned>, Slot> slots;
  std::uint32_t count = 0;
  unsigned max_top = 0;
  for (std::size_t g = 0; g < cx->generator_count(); ++g) max_top = std::max(max_top, cx->generator(g).degree / 2);
  for (unsigned k = 1; k < max_top; ++k)
    for (std::size_t g = 0; g < cx->generator_count(); ++g) {
      if (k >= cx->generator(g).degree / 2) continue;
      auto basis = monomial_basis(*cx, cx->generator(g).degree + 2 * k * (p - 1));
      if (cx->is_graph_generator(g)) {
        const auto ideal = graph_ideal(*cx, g - cx->graph_offset());
        std::erase_if(basis, [&](const Monomial& m) {
          return std::none_of(ideal.begin(), ideal.end(), [&](const Monomial& i) { return i.divides(m); });
        });
      }
      Slot s{g, k, count, std::move(basis)};
      count += static_cast<std::uint32_t>(s.basis.size());
      slots.emplace(std::make_pair(g, k), std::move(s));
    }
  result.unknowns = count;

  CartanEvaluator<UnknownPoly> ev(cx, p, 1, [&](std::size_t g, unsigned k) {
    const Slot& s = slots.at({g, k});
    SymbolicElement e(cx, p);
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      e.add_term(s.basis[i], UnknownPoly::variable(s.first + static_cast<std::uint32_t>(i), p));
    return e;
  });
  const auto inst = relation_instances(*cx, p, options.relations, result.degree_bound);
  CartanEvaluator<UnknownPoly> symbolic(cx, p, max_op(inst), [&](std::size_t g, unsigned k) {
    return ev.on_monomial(Monomial::generator(*cx, g), k);
  });

  std::set<UnknownPoly::Terms> seen;
  std::vector<UnknownPoly> equations;
  for (const auto& r : inst) {
    auto diff = evaluate_side(symbolic, cx, p, r.source, r.lhs) - evaluate_side(symbolic, cx, p, r.source, r.rhs);
    for (const auto& [m, c] : diff.terms()) {
      // Scale so the leading coefficient is 1; identical equations collapse.
      const Residue inv = inv_mod(c.terms().rbegin()->second, p);
      UnknownPoly eq = c.scaled(inv, p);
      if (seen.insert(eq.terms()).second) equations.push_back(std::move(eq));
    }
  }
  result.equations = equations.size();

  PolySystemSolver solver(std::move(equations), count, p, options.node_cap);
  auto sol = solver.solve();
  result.nodes = sol.nodes;
  result.found = sol.found;
  if (!sol.found) return result;

  SteenrodTable t(cx, p);
  for (const auto& [key, s] : slots) {
    AlgebraElement value(cx, p);
    for (std::size_t i = 0; i < s.basis.size(); ++i) value.add_term(s.basis[i], sol.values[s.first + i]);
    t.set(s.g, s.k, std::move(value));
  }
  if (!check_relations(t, options.relations, result.degree_bound).ok() || !check_ideal_preservation(t).ok())
    throw std::logic_error("search produced a table that fails its own checks");
  result.table = std::move(t);
  return result;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> degree_four_generators(const JoinComplex& cx) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < cx.graph_offset(); ++g)
    if (cx.generator(g).degree == 4) out.push_back(g);
  return out;
}

AlgebraElement PpDecomposition::recombine(const JoinComplex& cx, Vertex i) const {
  AlgebraElement out = middle;
  const auto cxp = middle.complex_ptr();
  const Residue p = middle.prime();
  const auto fours = degree_four_generators(cx);
  const auto yi = Monomial::generator(cx, cx.graph_generator(i), p - 1);
  for (std::size_t j = 0; j < fours.size(); ++j)
    out.add_term(yi * Monomial::generator(cx, fours[j]), leading[j]);
  for (const auto& [jk, mu] : mixed)
    out += mu.times_monomial(Monomial::generator(cx, cx.graph_generator(jk.first)) *
                             Monomial::generator(cx, cx.graph_generator(jk.second)));
  return out;
}

PpDecomposition decompose_pp(const SteenrodTable& t, Vertex i) {
  const auto& cx = t.complex();
  const Residue p = t.prime();
  if (i >= cx.graph().size()) throw ContractError("no graph vertex with index " + std::to_string(i));
  const std::size_t yi = cx.graph_generator(i);
  const auto fours = degree_four_generators(cx);
  PpDecomposition d{FpVector(p, fours.size()), AlgebraElement(t.complex_ptr(), p), {}};
  std::vector<Residue> lead(fours.size(), 0);
  const auto value = t.get(yi, p);
  for (const auto& [m, c] : value.terms()) {
    if (m.exponent(yi) > 0) {
      if (m.exponent(yi) == p - 1 && m.total_exponent() == p) {
        auto it = std::find_if(fours.begin(), fours.end(), [&](std::size_t g) { return m.exponent(g) == 1; });
        if (it != fours.end()) {
          lead[it - fours.begin()] = c;
          continue;
        }
      }
      d.middle.add_term(m, c);
      continue;
    }
    std::vector<Vertex> ys;
    for (std::size_t g = cx.graph_offset(); g < m.size(); ++g)
      if (m.exponent(g)) ys.push_back(g - cx.graph_offset());
    if (ys.size() != 2)
      throw ContractError("P^" + std::to_string(p) + "(" + cx.generator(yi).name +
                          ") has a term outside (y_i) + (y_j y_k): " + format_monomial(cx, m));
    auto q = (Monomial::generator(cx, cx.graph_generator(ys[0])) * Monomial::generator(cx, cx.graph_generator(ys[1])))
                 .quotient_of(m);
    auto [it, inserted] = d.mixed.try_emplace({ys[0], ys[1]}, t.complex_ptr(), p);
    it->second.add_term(q, c);
  }
  d.leading = FpVector(p, lead);
  return d;
}

SpanColoring CokernelReport::as_span_coloring(Residue p) const {
  return SpanColoring{p, g.assignment.empty() ? 0 : g.assignment[0].dim(), g.assignment};
}

std::string CokernelReport::to_text(const Graph& graph) const {
  std::ostringstream out;
  out << "cokernels: " << (all_nonzero() ? "all nonzero" : "zero at " + std::to_string(zero_cokernel.size()) + " vertices")
      << "\n";
  for (Vertex v = 0; v < graph.size(); ++v) {
    out << "g(y_" << graph.label(v) << ") = " << g.assignment[v].to_string();
    if (std::find(zero_cokernel.begin(), zero_cokernel.end(), v) != zero_cokernel.end()) out << "  zero cokernel";
    out << "\n";
  }
  return out.str();
}

CokernelReport coloring_from_action(const SteenrodTable& t) {
  const Graph& g = t.complex().graph();
  if (!g.empty() && g.min_degree() < 2)
    throw ContractError("every graph vertex needs degree at least 2 (apply two_core first)");
  CokernelReport report;
  for (Vertex v = 0; v < g.size(); ++v) report.g.assignment.push_back(decompose_pp(t, v).leading);
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<FpVector> nb;
    for (Vertex u : g.neighbors(v)) nb.push_back(report.g.assignment[u]);
    if (span_membership(nb, report.g.assignment[v])) report.zero_cokernel.push_back(v);
  }
  return report;
}

// ---------------------------------------------------------------------------

std::optional<std::pair<Residue, std::size_t>> necessary_parameters(const FamilySpec& spec) {
  if (spec.vector.empty()) return std::nullopt;
  switch (spec.family) {
    case Family::B: return std::make_pair(Residue{3}, std::size_t{spec.vector[0]});
    case Family::Bp:
    case Family::Ap: return std::make_pair(spec.p, std::size_t{spec.vector[0]});
    case Family::A: {
      const auto q = static_cast<Residue>(spec.vector.size() + 1);
      if (q >= 3 && is_prime(q)) return std::make_pair(q, std::size_t{spec.vector[0]});
      return std::nullopt;
    }
    case Family::Free: return std::nullopt;
  }
  return std::nullopt;
}

std::string NecessaryResult::to_text(const Graph& g) const {
  std::ostringstream out;
  const std::string s = "s_" + std::to_string(p) + "chi";
  switch (status) {
    case NecessaryStatus::NotApplicable:
      out << "necessary condition: not applicable\n";
      return out.str();
    case NecessaryStatus::Pass:
      out << "necessary condition: pass (inconclusive)\n" << s << "=" << span_chromatic << " <= bound=" << bound << "\n";
      break;
    case NecessaryStatus::Fail:
      out << "necessary condition: fail\n" << s << "=" << span_chromatic << " > bound=" << bound << "\n";
      break;
  }
  if (witness) out << format_span_coloring(g, *witness);
  return out.str();
}

NecessaryResult necessary_condition(const FamilySpec& spec, const Graph& g, int jobs) {
  NecessaryResult r;
  auto params = necessary_parameters(spec);
  if (!params) return r;
  r.p = params->first;
  r.bound = params->second;
  auto span = jobs > 1 ? span_chromatic_number_parallel(g, r.p) : span_chromatic_number(g, r.p);
  r.span_chromatic = span.span_chromatic_number;
  if (!g.empty()) r.witness = span.witness;
  r.status = r.span_chromatic <= r.bound ? NecessaryStatus::Pass : NecessaryStatus::Fail;
  return r;
}

}  // namespace srchroma
