#include "chiralkit/jet/diffpoly.hpp"

#include <algorithm>
#include <set>

#include "chiralkit/errors.hpp"

namespace chiralkit::jet {

namespace {

void normalize_symbols(std::vector<CoeffSymbol>& syms) {
  int mode = 0;
  bool any_trig = false;
  std::erase_if(syms, [&](const CoeffSymbol& s) {
    if (s.family != CoeffFamily::Trig) return false;
    mode += s.mode;
    any_trig = true;
    return true;
  });
  if (any_trig && mode != 0) syms.push_back(trig(mode));
  std::sort(syms.begin(), syms.end());
}

Monomial with_jet_power(Monomial m, const JetVar& v, int delta) {
  auto it = std::lower_bound(m.jets.begin(), m.jets.end(), v,
                             [](const auto& e, const JetVar& key) { return e.first < key; });
  if (it != m.jets.end() && it->first == v) {
    it->second += delta;
    if (it->second == 0) m.jets.erase(it);
  } else if (delta > 0) {
    m.jets.insert(it, {v, delta});
  }
  return m;
}

JetVar bumped(JetVar v, Direction dir) {
  if (dir == Direction::Tau) {
    if (v.kind == JetKind::Momentum) throw MathError("D_tau is not defined on momentum jets");
    ++v.tau;
  } else {
    ++v.sigma;
  }
  return v;
}

}  // namespace

Monomial Monomial::of(JetVar v, int power) {
  Monomial m;
  if (power > 0) m.jets.push_back({v, power});
  return m;
}

Monomial Monomial::of(CoeffSymbol s) {
  Monomial m;
  m.symbols.push_back(s);
  normalize_symbols(m.symbols);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : jets) d += e;
  return d;
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& [v, e] : jets) w += v.order() * e;
  for (const auto& s : symbols) w += s.order;
  return w;
}

int Monomial::max_jet_order() const {
  int o = 0;
  for (const auto& [v, e] : jets) o = std::max(o, v.order());
  return o;
}

int Monomial::power_of(const JetVar& v) const {
  for (const auto& [w, e] : jets)
    if (w == v) return e;
  return 0;
}

int Monomial::trig_mode() const {
  for (const auto& s : symbols)
    if (s.family == CoeffFamily::Trig) return s.mode;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  if (!b.symbols.empty()) {
    m.symbols.insert(m.symbols.end(), b.symbols.begin(), b.symbols.end());
    normalize_symbols(m.symbols);
  }
  for (const auto& [v, e] : b.jets) m = with_jet_power(std::move(m), v, e);
  return m;
}

DiffPoly::DiffPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

DiffPoly::DiffPoly(const Monomial& m, const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar DiffPoly::constant_term() const { return coefficient(Monomial{}); }

Scalar DiffPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) { return *this = *this * o; }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

DiffPoly operator*(const Scalar& s, const DiffPoly& p) {
  DiffPoly out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
  return out;
}

DiffPoly DiffPoly::pow(unsigned e) const {
  DiffPoly result(1);
  DiffPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

int DiffPoly::max_jet_order() const {
  int o = 0;
  for (const auto& [m, c] : terms_) o = std::max(o, m.max_jet_order());
  return o;
}

std::vector<JetVar> DiffPoly::variables() const {
  std::set<JetVar> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.jets) vars.insert(v);
  return {vars.begin(), vars.end()};
}

int DiffPoly::field_count() const {
  int n = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.jets) n = std::max(n, v.field + 1);
  return n;
}

DiffPoly total_derivative(Direction dir, const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 0; k < m.symbols.size(); ++k) {
      const CoeffSymbol& s = m.symbols[k];
      if (s.family == CoeffFamily::Trig) {
        if (dir == Direction::Sigma) out.add_term(m, c * Scalar(0, s.mode));
        continue;
      }
      Monomial d = m;
      d.symbols[k].order += 1;
      std::sort(d.symbols.begin(), d.symbols.end());
      Scalar factor(1);
      if (dir == Direction::Sigma) factor = s.family == CoeffFamily::Hol ? Scalar(0, 1) : Scalar(0, -1);
      out.add_term(d, c * factor);
    }
    for (const auto& [v, e] : m.jets) {
      Monomial d = with_jet_power(m, v, -1);
      d = with_jet_power(std::move(d), bumped(v, dir), 1);
      out.add_term(d, c * Scalar(e));
    }
  }
  return out;
}

DiffPoly total_derivative(Direction dir, const DiffPoly& p, int times) {
  DiffPoly out = p;
  for (int k = 0; k < times; ++k) out = total_derivative(dir, out);
  return out;
}

DiffPoly total_derivative(const DiffPoly& p, int tau, int sigma) {
  return total_derivative(Direction::Sigma, total_derivative(Direction::Tau, p, tau), sigma);
}

DiffPoly partial(const DiffPoly& p, const JetVar& v) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.power_of(v);
    if (e == 0) continue;
    out.add_term(with_jet_power(m, v, -1), c * Scalar(e));
  }
  return out;
}

DiffPoly substitute(const DiffPoly& p, const std::function<std::optional<DiffPoly>(const JetVar&)>& rule) {
  std::map<JetVar, std::optional<DiffPoly>> cache;
  auto lookup = [&](const JetVar& v) -> const std::optional<DiffPoly>& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, rule(v)).first;
    return it->second;
  };
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    kept.symbols = m.symbols;
    DiffPoly factor(1);
    for (const auto& [v, e] : m.jets) {
      const auto& r = lookup(v);
      if (r)
        factor *= r->pow(static_cast<unsigned>(e));
      else
        kept = kept * Monomial::of(v, e);
    }
    out += DiffPoly(kept, c) * factor;
  }
  return out;
}

DiffPoly dz(int field) {
  return Scalar(Rational(1, 2)) * DiffPoly(xvar(field, 1, 0)) - Scalar(0, Rational(1, 2)) * DiffPoly(xvar(field, 0, 1));
}

DiffPoly dzbar(int field) {
  return Scalar(Rational(1, 2)) * DiffPoly(xvar(field, 1, 0)) + Scalar(0, Rational(1, 2)) * DiffPoly(xvar(field, 0, 1));
}

std::string jet_name(const JetVar& v) {
  std::string s;
  for (int k = 0; k < v.tau; ++k) s += "dt.";
  for (int k = 0; k < v.sigma; ++k) s += "ds.";
  s += v.kind == JetKind::Field ? "x" : "p";
  s += std::to_string(v.field + 1);
  return s;
}

std::string symbol_name(const CoeffSymbol& s) {
  switch (s.family) {
    case CoeffFamily::Hol:
      return "f" + std::string(static_cast<std::size_t>(s.order), 'p');
    case CoeffFamily::Antihol:
      return "g" + std::string(static_cast<std::size_t>(s.order), 'p');
    case CoeffFamily::Trig:
      return "e(" + std::to_string(s.mode) + ")";
  }
  return "?";
}

std::string scalar_text(const Scalar& s) {
  if (s.is_real()) return s.re().get_str();
  if (sgn(s.re()) == 0) {
    if (s.im() == 1) return "i";
    if (s.im() == -1) return "-i";
    return s.im().get_str() + "*i";
  }
  Rational mag = abs(s.im());
  std::string im = mag == 1 ? "i" : mag.get_str() + "*i";
  return "(" + s.re().get_str() + (sgn(s.im()) < 0 ? "-" : "+") + im + ")";
}

}  // namespace chiralkit::jet
