#include "srchroma/sr_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace srchroma {

namespace {

std::string join_vector(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string w; in >> w;) tok.push_back(w);
  return tok;
}

bool parse_unsigned(std::string_view s, unsigned& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string FamilySpec::name() const {
  switch (family) {
    case Family::A: return "A";
    case Family::Ap: return "Ap";
    case Family::Bp: return "Bp";
    case Family::B: return "B";
    case Family::Free: return "free";
  }
  return "?";
}

std::string FamilySpec::describe() const {
  const std::string v = "(" + join_vector(vector) + ")";
  switch (family) {
    case Family::A: return "A(" + v + ",G)";
    case Family::Ap: return "A_" + std::to_string(p) + "(" + v + ",G)";
    case Family::Bp: return "B_" + std::to_string(p) + "(" + v + ",G)";
    case Family::B: return "B(" + (vector.empty() ? std::string("?") : std::to_string(vector[0])) + ",G)";
    case Family::Free: return "free";
  }
  return "?";
}

JoinComplex::JoinComplex(std::vector<Block> blocks, Graph graph, unsigned graph_degree, FamilySpec spec)
    : blocks_(std::move(blocks)), graph_(std::move(graph)), graph_degree_(graph_degree), spec_(std::move(spec)) {
  auto add = [&](std::string name, unsigned degree, std::size_t block, std::size_t pos) {
    if (degree == 0 || degree % 2) throw ContractError("generator degrees must be positive and even");
    if (!by_name_.emplace(name, generators_.size()).second)
      throw ContractError("duplicate generator '" + name + "'");
    generators_.push_back({std::move(name), degree, block, pos});
  };
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    offsets_.push_back(generators_.size());
    for (std::size_t i = 0; i < blocks_[k].labels.size(); ++i) add(blocks_[k].labels[i], blocks_[k].degree, k, i);
  }
  offsets_.push_back(generators_.size());
  if (!graph_.empty() && (graph_degree_ == 0 || graph_degree_ % 2))
    throw ContractError("graph degree must be positive and even");
  for (Vertex v = 0; v < graph_.size(); ++v) add("y_" + graph_.label(v), graph_degree_, kGraphBlock, v);
}

std::optional<std::size_t> JoinComplex::find_generator(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t JoinComplex::generator_index(std::string_view name) const {
  if (auto i = find_generator(name)) return *i;
  throw LookupError("unknown generator '" + std::string(name) + "'");
}

bool JoinComplex::is_face(const std::vector<std::size_t>& support) const {
  std::vector<Vertex> ys;
  for (std::size_t i : support) {
    if (i >= generators_.size()) throw ContractError("generator index out of range");
    if (!is_graph_generator(i)) continue;
    Vertex v = i - graph_offset();
    if (std::find(ys.begin(), ys.end(), v) == ys.end()) ys.push_back(v);
  }
  if (ys.size() > 2) return false;
  return ys.size() < 2 || graph_.adjacent(ys[0], ys[1]);
}

std::vector<std::vector<std::size_t>> JoinComplex::maximal_faces() const {
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < graph_offset(); ++i) xs.push_back(i);
  std::vector<std::vector<std::size_t>> out;
  if (graph_.empty()) {
    out.push_back(xs);
    return out;
  }
  for (auto [u, v] : graph_.edges()) {
    auto f = xs;
    f.push_back(graph_generator(u));
    f.push_back(graph_generator(v));
    out.push_back(std::move(f));
  }
  for (Vertex v = 0; v < graph_.size(); ++v) {
    if (graph_.degree(v) != 0) continue;
    auto f = xs;
    f.push_back(graph_generator(v));
    out.push_back(std::move(f));
  }
  return out;
}

std::string JoinComplex::serialize() const {
  std::ostringstream out;
  out << "family " << spec_.name() << "\n";
  out << "p " << spec_.p << "\n";
  out << "vector " << (spec_.vector.empty() ? "-" : join_vector(spec_.vector)) << "\n";
  if (spec_.family == Family::Free) {
    for (const auto& g : generators_) out << "gen " << g.name << " " << g.degree << "\n";
    return out.str();
  }
  out << graph_.to_edge_list();
  return out.str();
}

JoinComplex build_complex(const FamilySpec& spec, const Graph& g) {
  std::vector<JoinComplex::Block> blocks;
  auto add_block = [&](unsigned size, unsigned degree) {
    JoinComplex::Block b;
    b.degree = degree;
    const std::size_t k = blocks.size() + 1;
    for (unsigned i = 1; i <= size; ++i) b.labels.push_back("x" + std::to_string(i) + "^(" + std::to_string(k) + ")");
    blocks.push_back(std::move(b));
  };
  auto need_odd_prime = [&] {
    if (spec.p < 3 || !is_prime(spec.p)) throw ContractError("family needs an odd prime, got " + std::to_string(spec.p));
  };
  const auto n = static_cast<unsigned>(spec.vector.size());
  switch (spec.family) {
    case Family::A:
      if (n == 0) throw ContractError("A(s,G) needs a nonempty vector");
      for (unsigned k = 1; k <= n; ++k) add_block(spec.vector[k - 1], 2 * k + 2);
      return JoinComplex(std::move(blocks), g, 2 * n + 4, spec);
    case Family::Ap:
      need_odd_prime();
      if (n != spec.p - 1)
        throw ContractError("A_p needs a vector of length p-1 = " + std::to_string(spec.p - 1) + ", got " + std::to_string(n));
      for (unsigned k = 1; k <= n; ++k) add_block(spec.vector[k - 1], 2 * k + 2);
      return JoinComplex(std::move(blocks), g, 2 * spec.p + 2, spec);
    case Family::Bp:
      need_odd_prime();
      if (n != (spec.p - 1) / 2)
        throw ContractError("B_p needs a vector of length (p-1)/2 = " + std::to_string((spec.p - 1) / 2) + ", got " +
                            std::to_string(n));
      for (unsigned k = 1; k <= n; ++k) add_block(spec.vector[k - 1], 4 * k);
      return JoinComplex(std::move(blocks), g, 2 * spec.p + 2, spec);
    case Family::B: {
      if (n != 1) throw ContractError("B(n,G) needs a single entry n, got length " + std::to_string(n));
      FamilySpec s = spec;
      s.p = 3;
      add_block(spec.vector[0], 4);
      return JoinComplex(std::move(blocks), g, 8, s);
    }
    case Family::Free:
      throw ContractError("free rings are built with free_polynomial");
  }
  throw ContractError("unknown family");
}

std::shared_ptr<const JoinComplex> make_complex(const FamilySpec& spec, const Graph& g) {
  return std::make_shared<const JoinComplex>(build_complex(spec, g));
}

std::shared_ptr<const JoinComplex> free_polynomial(const std::vector<std::pair<std::string, unsigned>>& gens) {
  std::vector<JoinComplex::Block> blocks;
  for (const auto& [name, degree] : gens) {
    if (name.empty() || name.find_first_of(" \t*+^") != std::string::npos)
      throw ContractError("invalid generator name '" + name + "'");
    blocks.push_back({degree, {name}});
  }
  FamilySpec spec;
  spec.family = Family::Free;
  return std::make_shared<const JoinComplex>(std::move(blocks), Graph{}, 0, spec);
}

std::shared_ptr<const JoinComplex> parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, graph_text;
  std::size_t lineno = 0;
  FamilySpec spec;
  bool have_family = false;
  std::vector<std::pair<std::string, unsigned>> free_gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    auto tok = split_ws(body);
    if (!tok.empty() && (tok[0] == "family" || tok[0] == "p" || tok[0] == "vector" || tok[0] == "gen")) {
      if (tok[0] == "family" && tok.size() == 2) {
        static const std::map<std::string, Family> names{
            {"A", Family::A}, {"Ap", Family::Ap}, {"Bp", Family::Bp}, {"B", Family::B}, {"free", Family::Free}};
        auto it = names.find(tok[1]);
        if (it == names.end()) throw ParseError(lineno, "unknown family '" + tok[1] + "'");
        spec.family = it->second;
        have_family = true;
      } else if (tok[0] == "p" && tok.size() == 2) {
        if (!parse_unsigned(tok[1], spec.p)) throw ParseError(lineno, "bad prime '" + tok[1] + "'");
      } else if (tok[0] == "vector" && tok.size() == 2) {
        spec.vector.clear();
        if (tok[1] != "-") {
          std::istringstream parts(tok[1]);
          for (std::string piece; std::getline(parts, piece, ',');) {
            unsigned x = 0;
            if (!parse_unsigned(piece, x)) throw ParseError(lineno, "bad vector entry '" + piece + "'");
            spec.vector.push_back(x);
          }
        }
      } else if (tok[0] == "gen" && tok.size() == 3) {
        unsigned d = 0;
        if (!parse_unsigned(tok[2], d)) throw ParseError(lineno, "bad degree '" + tok[2] + "'");
        free_gens.emplace_back(tok[1], d);
      } else {
        throw ParseError(lineno, "malformed header record");
      }
      graph_text += "\n";
    } else {
      graph_text += line + "\n";
    }
  }
  if (!have_family) throw ParseError(lineno, "missing 'family' header");
  if (spec.family == Family::Free) return free_polynomial(free_gens);
  if (!free_gens.empty()) throw ParseError(lineno, "'gen' records are only valid for free rings");
  return make_complex(spec, parse_graph(graph_text));
}

// ---------------------------------------------------------------------------

Monomial Monomial::one(const JoinComplex& cx) { return Monomial(std::vector<std::uint16_t>(cx.generator_count(), 0), 0); }

Monomial Monomial::generator(const JoinComplex& cx, std::size_t i, unsigned e) {
  if (i >= cx.generator_count()) throw ContractError("generator index out of range");
  std::vector<std::uint16_t> exps(cx.generator_count(), 0);
  exps[i] = static_cast<std::uint16_t>(e);
  return Monomial(std::move(exps), e * cx.generator(i).degree);
}

Monomial Monomial::from_exponents(const JoinComplex& cx, std::vector<std::uint16_t> exps) {
  if (exps.size() != cx.generator_count()) throw ContractError("monomial is not over this complex's generators");
  unsigned d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * cx.generator(i).degree;
  return Monomial(std::move(exps), d);
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) s.push_back(i);
  return s;
}

unsigned Monomial::total_exponent() const noexcept {
  unsigned t = 0;
  for (auto e : exps_) t += e;
  return t;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw ContractError("monomials over different generator sets");
  std::vector<std::uint16_t> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + o.exps_[i]);
  return Monomial(std::move(e), degree_ + o.degree_);
}

bool Monomial::divides(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw ContractError("monomials over different generator sets");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  if (!divides(o)) throw ContractError("monomial does not divide");
  std::vector<std::uint16_t> e(o.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] - exps_[i]);
  return Monomial(std::move(e), o.degree_ - degree_);
}

bool is_face_monomial(const JoinComplex& cx, const Monomial& m) {
  if (m.size() != cx.generator_count()) throw ContractError("monomial is not over this complex's generators");
  Vertex ys[2];
  std::size_t count = 0;
  const auto& e = m.exponents();
  for (std::size_t i = cx.graph_offset(); i < e.size(); ++i) {
    if (!e[i]) continue;
    if (count == 2) return false;
    ys[count++] = i - cx.graph_offset();
  }
  return count < 2 || cx.graph().adjacent(ys[0], ys[1]);
}

std::optional<Monomial> reduce_monomial(const JoinComplex& cx, const Monomial& m) {
  if (!is_face_monomial(cx, m)) return std::nullopt;
  return m;
}

std::vector<Monomial> monomial_basis(const JoinComplex& cx, unsigned degree) {
  std::vector<Monomial> out;
  const std::size_t n = cx.generator_count();
  std::vector<std::uint16_t> exps(n, 0);
  std::vector<Vertex> ys;
  // Exponents are chosen generator by generator; graph generators may be used
  // only while the chosen ones still form a face.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (left == 0) {
      out.emplace_back(exps, degree);
      return;
    }
    if (i == n) return;
    const unsigned d = cx.generator(i).degree;
    self(self, i + 1, left);
    if (cx.is_graph_generator(i)) {
      const Vertex v = i - cx.graph_offset();
      if (ys.size() == 2) return;
      if (ys.size() == 1 && !cx.graph().adjacent(ys[0], v)) return;
      ys.push_back(v);
    }
    for (unsigned e = 1; e * d <= left; ++e) {
      exps[i] = static_cast<std::uint16_t>(e);
      self(self, i + 1, left - e * d);
    }
    exps[i] = 0;
    if (cx.is_graph_generator(i)) ys.pop_back();
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

std::string format_monomial(const JoinComplex& cx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const unsigned e = m.exponent(i);
    if (!e) continue;
    if (!out.empty()) out += " * ";
    out += cx.generator(i).name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool ideal_membership(const AlgebraElement& a, const std::vector<Monomial>& gens) {
  for (const auto& [m, c] : a.terms()) {
    bool hit = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!hit) return false;
  }
  return true;
}

std::string format_element(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    if (!m.is_one()) out += " * " + format_monomial(a.complex(), m);
  }
  return out;
}

AlgebraElement parse_element(std::shared_ptr<const JoinComplex> cx, Residue p, std::string_view text) {
  AlgebraElement result(cx, p);
  const auto tok = split_ws(text);
  if (tok.size() == 1 && tok[0] == "0") return result;
  if (tok.empty()) throw ContractError("empty element");
  auto factor = [&](const std::string& t) -> Monomial {
    if (auto i = cx->find_generator(t)) return Monomial::generator(*cx, *i);
    auto caret = t.rfind('^');
    unsigned e = 0;
    if (caret != std::string::npos && parse_unsigned(std::string_view(t).substr(caret + 1), e)) {
      if (auto i = cx->find_generator(t.substr(0, caret))) return Monomial::generator(*cx, *i, e);
    }
    throw ContractError("unknown generator '" + t + "'");
  };
  std::size_t pos = 0;
  while (true) {
    std::int64_t coeff = 1;
    Monomial m = Monomial::one(*cx);
    bool expect_factor = true;
    if (pos < tok.size()) {
      const auto& t = tok[pos];
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec == std::errc{} && ptr == t.data() + t.size()) {
        coeff = v;
        ++pos;
        expect_factor = pos < tok.size() && tok[pos] == "*";
        if (expect_factor) ++pos;
      }
    }
    if (expect_factor) {
      while (true) {
        if (pos >= tok.size() || tok[pos] == "*" || tok[pos] == "+") throw ContractError("malformed element '" + std::string(text) + "'");
        m = m * factor(tok[pos++]);
        if (pos < tok.size() && tok[pos] == "*") {
          ++pos;
          continue;
        }
        break;
      }
    }
    result.add_term(m, reduce_mod(coeff, p));
    if (pos == tok.size()) break;
    if (tok[pos] != "+") throw ContractError("malformed element '" + std::string(text) + "'");
    ++pos;
  }
  return result;
}

}  // namespace srchroma
