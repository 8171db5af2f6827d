#include "flagflow/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagflow {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

bool RatPoly::GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
  unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

RatPoly::RatPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

RatPoly::RatPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  prune();
}

RatPoly RatPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  RatPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

RatPoly var(const std::string& name) { return RatPoly::variable(name); }

void RatPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  TermMap remapped;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(kept.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    remapped.emplace(std::move(ne), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(remapped);
}

long RatPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& lead = terms_.begin()->first;  // grlex: max degree first
  return std::accumulate(lead.begin(), lead.end(), 0l);
}

std::vector<RatPoly::Term> RatPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e, c});
  return out;
}

namespace {

// Positions of each merged variable in the merged list, for both operands.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> m;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
  std::vector<std::size_t> idx(from.size());
  for (std::size_t i = 0; i < from.size(); ++i)
    idx[i] = std::lower_bound(to.begin(), to.end(), from[i]) - to.begin();
  return idx;
}

RatPoly::Exponents remap(const RatPoly::Exponents& e, const std::vector<std::size_t>& idx,
                         std::size_t width) {
  RatPoly::Exponents ne(width, 0);
  for (std::size_t i = 0; i < e.size(); ++i) ne[idx[i]] = e[i];
  return ne;
}

}  // namespace

RatPoly RatPoly::operator-() const {
  RatPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  std::vector<std::string> mv = merge_vars(vars_, rhs.vars_);
  auto li = index_map(vars_, mv);
  auto ri = index_map(rhs.vars_, mv);
  TermMap out;
  for (const auto& [e, c] : terms_) out[remap(e, li, mv.size())] += c;
  for (const auto& [e, c] : rhs.terms_) out[remap(e, ri, mv.size())] += c;
  return RatPoly(std::move(mv), std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const { return *this + (-rhs); }

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  std::vector<std::string> mv = merge_vars(vars_, rhs.vars_);
  auto li = index_map(vars_, mv);
  auto ri = index_map(rhs.vars_, mv);
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    Exponents la = remap(ea, li, mv.size());
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e = remap(eb, ri, mv.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += la[i];
      out[std::move(e)] += ca * cb;
    }
  }
  return RatPoly(std::move(mv), std::move(out));
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly acc = RatPoly(Rational(1));
  RatPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

RatPoly RatPoly::substitute(const std::map<std::string, RatPoly>& bindings) const {
  RatPoly acc;
  for (const auto& [e, c] : terms_) {
    RatPoly term = RatPoly(c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(vars_[i]);
      RatPoly factor = (it != bindings.end()) ? it->second : variable(vars_[i]);
      term *= factor.pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

RatPoly RatPoly::partial_derivative(const std::string& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return RatPoly();
  std::size_t pos = it - vars_.begin();
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[pos] == 0) continue;
    Exponents ne = e;
    ne[pos] -= 1;
    out[std::move(ne)] += c * e[pos];
  }
  return RatPoly(vars_, std::move(out));
}

Rational RatPoly::evaluate(const std::map<std::string, Rational>& bindings) const {
  std::vector<Rational> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it == bindings.end())
      throw std::invalid_argument("unbound variable: " + vars_[i]);
    vals[i] = it->second;
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
    acc += t;
  }
  return acc;
}

double RatPoly::evaluate_double(const std::map<std::string, double>& bindings) const {
  std::vector<double> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it == bindings.end())
      throw std::invalid_argument("unbound variable: " + vars_[i]);
    vals[i] = it->second;
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
    acc += t;
  }
  return acc;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    bool coeff_shown = (a != 1) || !any_var;
    if (coeff_shown) os << a;
    bool lead = !coeff_shown;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!lead) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      lead = false;
    }
  }
  return os.str();
}

std::pair<Rational, Rational> bisect_sign_change(const RatPoly& p, const std::string& v,
                                                 Rational lo, Rational hi,
                                                 const Rational& width) {
  auto at = [&](const Rational& t) { return p.evaluate({{v, t}}); };
  Rational flo = at(lo), fhi = at(hi);
  if (flo == 0 || fhi == 0 || (flo < 0) == (fhi < 0))
    throw std::invalid_argument("bisect_sign_change: endpoints must differ in sign");
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    Rational fm = at(mid);
    if (fm == 0) {
      // exact root: shrink a symmetric bracket around it
      Rational h = width / 2;
      return {mid - h, mid + h};
    }
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace flagflow
