#include "srchroma/unknown_poly.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace srchroma {

namespace {

// Sorts and applies v^p = v.
void normalize(UnknownPoly::VarMono& m, Residue p) {
  std::sort(m.begin(), m.end());
  UnknownPoly::VarMono out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    std::size_t e = j - i;
    if (e >= p) e = (e - 1) % (p - 1) + 1;
    out.insert(out.end(), e, m[i]);
    i = j;
  }
  m = std::move(out);
}

}  // namespace

UnknownPoly UnknownPoly::constant(Residue c, Residue p) {
  UnknownPoly r;
  r.add_term({}, c % p, p);
  return r;
}

UnknownPoly UnknownPoly::variable(std::uint32_t v, Residue p) {
  UnknownPoly r;
  r.add_term({v}, 1, p);
  return r;
}

bool UnknownPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Residue UnknownPoly::constant_term() const {
  auto it = terms_.find(VarMono{});
  return it == terms_.end() ? 0 : it->second;
}

unsigned UnknownPoly::degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, static_cast<unsigned>(m.size()));
  return d;
}

void UnknownPoly::add_term(VarMono m, Residue c, Residue p) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second = add_mod(it->second, c, p);
    if (it->second == 0) terms_.erase(it);
  }
}

UnknownPoly UnknownPoly::plus(const UnknownPoly& o, Residue p) const {
  UnknownPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c, p);
  return r;
}

UnknownPoly UnknownPoly::times(const UnknownPoly& o, Residue p) const {
  UnknownPoly r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      VarMono m = a;
      m.insert(m.end(), b.begin(), b.end());
      if (!a.empty() && !b.empty()) normalize(m, p);
      r.add_term(std::move(m), mul_mod(ca, cb, p), p);
    }
  return r;
}

UnknownPoly UnknownPoly::scaled(Residue c, Residue p) const {
  UnknownPoly r;
  if (c % p == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, mul_mod(x, c, p));
  return r;
}

UnknownPoly UnknownPoly::substitute(const std::vector<int>& values, Residue p) const {
  UnknownPoly r;
  for (const auto& [m, c] : terms_) {
    Residue coeff = c;
    VarMono rest;
    for (auto v : m) {
      if (v < values.size() && values[v] >= 0)
        coeff = mul_mod(coeff, static_cast<Residue>(values[v]), p);
      else
        rest.push_back(v);
    }
    r.add_term(std::move(rest), coeff, p);
  }
  return r;
}

std::optional<Residue> UnknownPoly::evaluate(const std::vector<int>& values, Residue p) const {
  UnknownPoly s = substitute(values, p);
  if (!s.is_constant()) return std::nullopt;
  return s.constant_term();
}

std::string UnknownPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(it->second);
    for (auto v : it->first) out += "*v" + std::to_string(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

NodeCapExceeded::NodeCapExceeded(std::uint64_t cap, double estimate)
    : std::runtime_error("search exceeded the node cap of " + std::to_string(cap) +
                         " (branching estimate " + [&] {
                           std::ostringstream s;
                           s.precision(3);
                           s << estimate;
                           return s.str();
                         }() + " assignments)"),
      cap_(cap),
      estimate_(estimate) {}

PolySystemSolver::PolySystemSolver(std::vector<UnknownPoly> equations, std::size_t unknowns, Residue p,
                                   std::uint64_t node_cap)
    : equations_(std::move(equations)), unknowns_(unknowns), p_(p), cap_(node_cap) {}

double PolySystemSolver::branch_estimate() const {
  std::vector<std::vector<std::uint32_t>> nonlinear;
  for (const auto& eq : equations_)
    for (const auto& [m, c] : eq.terms())
      if (m.size() >= 2) nonlinear.push_back(m);
  std::set<std::uint32_t> chosen;
  while (true) {
    std::map<std::uint32_t, std::size_t> count;
    for (const auto& m : nonlinear) {
      std::size_t open = 0;
      for (auto v : m) open += !chosen.count(v);
      if (open < 2) continue;
      for (auto v : m)
        if (!chosen.count(v)) ++count[v];
    }
    if (count.empty()) break;
    auto best = std::max_element(count.begin(), count.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    chosen.insert(best->first);
  }
  return std::pow(static_cast<double>(p_), static_cast<double>(chosen.size()));
}

PolySolution PolySystemSolver::solve() {
  nodes_ = 0;
  solution_.clear();
  PolySolution out;
  out.found = dfs(equations_, std::vector<int>(unknowns_, -1));
  out.nodes = nodes_;
  if (out.found)
    for (int v : solution_) out.values.push_back(static_cast<Residue>(v));
  return out;
}

bool PolySystemSolver::dfs(std::vector<UnknownPoly> eqs, std::vector<int> values) {
  if (++nodes_ > cap_) throw NodeCapExceeded(cap_, branch_estimate());
  std::vector<std::vector<Residue>> rows;
  std::vector<std::uint32_t> cols;  // local column -> unknown, descending
  while (true) {
    std::vector<UnknownPoly> next;
    for (const auto& eq : eqs) {
      UnknownPoly s = eq.substitute(values, p_);
      if (s.is_zero()) continue;
      if (s.is_constant()) return false;
      next.push_back(std::move(s));
    }
    eqs = std::move(next);

    // Row-reduce the linear equations, pivoting on high-index unknowns first
    // so that early unknowns stay free (and become 0).
    std::set<std::uint32_t, std::greater<>> vars;
    for (const auto& eq : eqs)
      if (eq.degree() == 1)
        for (const auto& [m, c] : eq.terms())
          if (!m.empty()) vars.insert(m[0]);
    cols.assign(vars.begin(), vars.end());
    std::map<std::uint32_t, std::size_t> local;
    for (std::size_t i = 0; i < cols.size(); ++i) local[cols[i]] = i;
    const std::size_t width = cols.size() + 1;
    rows.clear();
    for (const auto& eq : eqs) {
      if (eq.degree() != 1) continue;
      std::vector<Residue> row(width, 0);
      for (const auto& [m, c] : eq.terms()) {
        if (m.empty())
          row.back() = neg_mod(c, p_);
        else
          row[local[m[0]]] = c;
      }
      rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c + 1 < width && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const Residue inv = inv_mod(rows[rank][c], p_);
      for (auto& x : rows[rank]) x = mul_mod(x, inv, p_);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][c] == 0) continue;
        const Residue f = rows[r][c];
        for (std::size_t j = c; j < width; ++j) rows[r][j] = sub_mod(rows[r][j], mul_mod(f, rows[rank][j], p_), p_);
      }
      ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r].back() != 0) return false;
    rows.resize(rank);

    bool forced = false;
    for (const auto& row : rows) {
      std::size_t nz = 0, at = 0;
      for (std::size_t c = 0; c + 1 < width; ++c)
        if (row[c]) ++nz, at = c;
      if (nz == 1) {
        values[cols[at]] = static_cast<int>(row.back());
        forced = true;
      }
    }
    if (!forced) break;
  }

  std::map<std::uint32_t, std::size_t> weight;
  for (const auto& eq : eqs)
    for (const auto& [m, c] : eq.terms())
      if (m.size() >= 2)
        for (auto v : m) ++weight[v];

  if (weight.empty()) {
    // Every remaining equation is linear and the reduced rows are consistent.
    for (const auto& row : rows) {
      std::size_t lead = 0;
      while (row[lead] == 0) ++lead;
      values[cols[lead]] = static_cast<int>(row.back());
    }
    for (auto& v : values)
      if (v < 0) v = 0;
    solution_ = std::move(values);
    return true;
  }

  std::uint32_t pick = weight.begin()->first;
  std::size_t best = 0;
  for (const auto& [v, w] : weight)
    if (w > best) best = w, pick = v;
  for (Residue val = 0; val < p_; ++val) {
    auto vals = values;
    vals[pick] = static_cast<int>(val);
    if (dfs(eqs, std::move(vals))) return true;
  }
  return false;
}

}  // namespace srchroma
