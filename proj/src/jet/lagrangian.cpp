#include "chiralkit/jet/lagrangian.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::jet {

namespace {

DiffPoly free_wave_jet(const JetVar& v) {
  // ∂_τ^a ∂_σ^b x with a ≥ 2 equals (−1)^{⌊a/2⌋} ∂_τ^{a mod 2} ∂_σ^{b + 2⌊a/2⌋} x.
  const int half = v.tau / 2;
  return DiffPoly(Scalar(half % 2 == 0 ? 1 : -1)) * DiffPoly(xvar(v.field, v.tau % 2, v.sigma + 2 * half));
}

}  // namespace

Lagrangian::Lagrangian(DiffPoly density, std::size_t fields) : density_(std::move(density)), fields_(fields) {
  for (const JetVar& v : density_.variables()) {
    if (v.kind != JetKind::Field) throw NotFirstOrder("Lagrangian may only contain field jets");
    if (v.order() > 1) throw NotFirstOrder("Lagrangian is not first order (found " + jet_name(v) + ")");
    if (v.field >= static_cast<int>(fields_)) throw DimensionMismatch("Lagrangian uses more fields than declared");
  }
}

Lagrangian free_boson_lagrangian() {
  DiffPoly p(xvar(0, 1, 0));
  DiffPoly q(xvar(0, 0, 1));
  return Lagrangian(Scalar(0, Rational(1, 2)) * (p * p + q * q), 1);
}

Lagrangian sigma_model_lagrangian(const Matrix& g, const Matrix& b) {
  const std::size_t n = g.rows();
  if (!g.is_square() || !b.is_square() || b.rows() != n) throw DimensionMismatch("metric and B-field shapes differ");
  DiffPoly l;
  const Scalar half_i(0, Rational(1, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int a = static_cast<int>(i), c = static_cast<int>(j);
      DiffPoly pp = DiffPoly(xvar(a, 1, 0)) * DiffPoly(xvar(c, 1, 0));
      DiffPoly qq = DiffPoly(xvar(a, 0, 1)) * DiffPoly(xvar(c, 0, 1));
      DiffPoly pq = DiffPoly(xvar(a, 1, 0)) * DiffPoly(xvar(c, 0, 1));
      l += (half_i * g(i, j)) * (pp + qq);
      l += b(i, j) * pq;
    }
  return Lagrangian(std::move(l), n);
}

std::vector<DiffPoly> euler_lagrange(const Lagrangian& l) {
  std::vector<DiffPoly> out;
  const DiffPoly& d = l.density();
  for (int i = 0; i < static_cast<int>(l.fields()); ++i) {
    DiffPoly e = partial(d, xvar(i));
    e -= total_derivative(Direction::Tau, partial(d, xvar(i, 1, 0)));
    e -= total_derivative(Direction::Sigma, partial(d, xvar(i, 0, 1)));
    out.push_back(std::move(e));
  }
  return out;
}

VariationalForm variational_one_form(const Lagrangian& l) {
  VariationalForm g;
  const DiffPoly& d = l.density();
  for (int i = 0; i < static_cast<int>(l.fields()); ++i) {
    g.add({xvar(i)}, Horizontal::Sigma, partial(d, xvar(i, 1, 0)));
    g.add({xvar(i)}, Horizontal::Tau, -partial(d, xvar(i, 0, 1)));
  }
  return g;
}

OnShellRules::OnShellRules(const Lagrangian& l) {
  const auto el = euler_lagrange(l);
  const std::size_t n = l.fields();
  Matrix k(n, n);
  std::vector<DiffPoly> rest(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [m, c] : el[i].terms()) {
      bool leading = false;
      for (const auto& [v, e] : m.jets) {
        if (v.tau < 2) continue;
        if (v.tau != 2 || v.sigma != 0 || e != 1 || m.jets.size() != 1 || !m.symbols.empty())
          throw NonLinearEL("Euler-Lagrange equations are not linear in the second time derivatives");
        k(i, static_cast<std::size_t>(v.field)) += c;
        leading = true;
      }
      if (!leading) rest[i].add_term(m, c);
    }
  }
  Matrix kinv;
  try {
    kinv = k.inverse();
  } catch (const SingularMatrix&) {
    throw NonLinearEL("Euler-Lagrange equations cannot be solved for the second time derivatives");
  }
  rho_.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!kinv(j, i).is_zero()) rho_[j] -= kinv(j, i) * rest[i];
}

bool OnShellRules::is_free_wave() const {
  for (std::size_t j = 0; j < rho_.size(); ++j)
    if (!(rho_[j] == -DiffPoly(xvar(static_cast<int>(j), 0, 2)))) return false;
  return true;
}

const DiffPoly& OnShellRules::reduced_jet(const JetVar& v) const {
  auto it = memo_.find(v);
  if (it != memo_.end()) return it->second;
  if (v.field >= static_cast<int>(rho_.size())) throw DimensionMismatch("jet refers to an unknown field");
  DiffPoly r = reduce(total_derivative(rho_[static_cast<std::size_t>(v.field)], v.tau - 2, v.sigma));
  return memo_.emplace(v, std::move(r)).first->second;
}

DiffPoly OnShellRules::reduce(const DiffPoly& p) const {
  bool needed = false;
  for (const JetVar& v : p.variables())
    if (v.kind == JetKind::Field && v.tau >= 2) needed = true;
  if (!needed) return p;
  return substitute(p, [this](const JetVar& v) -> std::optional<DiffPoly> {
    if (v.kind != JetKind::Field || v.tau < 2) return std::nullopt;
    return reduced_jet(v);
  });
}

DiffPoly reduce_free_wave(const DiffPoly& p) {
  return substitute(p, [](const JetVar& v) -> std::optional<DiffPoly> {
    if (v.kind != JetKind::Field || v.tau < 2) return std::nullopt;
    return free_wave_jet(v);
  });
}

DiffPoly restrict_to_sol0(const DiffPoly& p, const Lagrangian& l) {
  if (!OnShellRules(l).is_free_wave()) throw NonLinearEL("equations of motion are not the free wave equation");
  return reduce_free_wave(p);
}

VariationalForm restrict_to_sol0(const VariationalForm& w, const Lagrangian& l) {
  if (!OnShellRules(l).is_free_wave()) throw NonLinearEL("equations of motion are not the free wave equation");
  VariationalForm out;
  for (const auto& [key, coeff] : w.components()) {
    if (key.horizontal == Horizontal::Tau || key.horizontal == Horizontal::TauSigma) continue;
    out.add(key.vertical, key.horizontal, reduce_free_wave(coeff));
  }
  return out;
}

}  // namespace chiralkit::jet
