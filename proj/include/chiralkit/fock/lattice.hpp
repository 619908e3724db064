#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chiralkit/exactlin/json_io.hpp"
#include "chiralkit/exactlin/matrix.hpp"

namespace chiralkit::fock {

using exactlin::Json;
using exactlin::Matrix;
using exactlin::Rational;
using exactlin::Scalar;
using Vec = std::vector<Scalar>;
using Coords = std::vector<long>;

/// Torus ℝⁿ/L with metric g and constant B-field.
/// Columns of lattice_basis generate L; columns of dual_basis generate L*.
struct LatticeModel {
  Matrix g;
  Matrix b;
  Matrix lattice_basis;
  Matrix dual_basis;
  Matrix g_inverse;
  /// Set when the model came from the 1-d shorthand: 2πR = radius_unit, g = 1, B = 0.
  std::optional<Rational> radius_unit;

  std::size_t dim() const { return g.rows(); }
  bool has_b_field() const { return !b.is_zero(); }
};

/// Throws NotPositiveDefinite, NotAntisymmetric, SingularLattice, DimensionMismatch.
LatticeModel build_model(const Matrix& g, const Matrix& b, const Matrix& lattice_basis);
/// L = uℤ and L* = u⁻¹ℤ for u = 2πR.
LatticeModel one_dim_model(const Rational& radius_unit);

/// {"n","g","B","L"} or {"radius_unit":"p/q"}.
LatticeModel model_from_json(const Json& j);
Json to_json(const LatticeModel& m);

/// B(l) as a covector: B(l)_j = Σ_i b_ij l^i.
Vec b_of(const LatticeModel& m, const Vec& l);
Vec g_of(const LatticeModel& m, const Vec& l);

struct Sector {
  Coords l_coords;
  Coords dual_coords;
  Vec l;
  Vec dual;
  Vec a_plus;
  Vec a_minus;
  Rational h;
  Rational hbar;
};

Sector make_sector(const LatticeModel& m, const Coords& l_coords, const Coords& dual_coords);

/// Pair of covectors (½(g⁻¹(l*−B(l))−l), ½(g⁻¹(l*−B(l))+l)), read off in the
/// coordinate basis. Throws NotInLattice.
std::pair<Vec, Vec> spectrum_point(const LatticeModel& m, const Vec& l, const Vec& dual);

/// Integer coordinates of v in the columns of basis; throws NotInLattice.
Coords lattice_coords(const Matrix& basis, const Vec& v);

/// Sectors with |l_coords|₁ + |dual_coords|₁ ≤ cutoff, ordered by that norm
/// and then lexicographically.
std::vector<Sector> enumerate_sectors(const LatticeModel& m, int cutoff);

/// (−½g⁻¹(a₁⁺,a₂⁺), −½g⁻¹(a₁⁻,a₂⁻)); throws ModelMismatch when a sector
/// does not belong to the model.
std::pair<Rational, Rational> vertex_exponents(const LatticeModel& m, const Sector& s1, const Sector& s2);

struct LocalityEntry {
  std::size_t left;
  std::size_t right;
  Rational hol;
  Rational antihol;
  bool integral;
};

struct LocalityReport {
  std::vector<Sector> sectors;
  std::vector<LocalityEntry> entries;
  std::size_t violations = 0;
};

LocalityReport ko_locality(const LatticeModel& m, int cutoff);

/// Same metric, lattice g⁻¹(L*). Throws BFieldUnsupported.
LatticeModel t_dual(const LatticeModel& m);

/// Whether the column spans coincide as lattices.
bool same_lattice(const Matrix& a, const Matrix& b);
bool is_self_dual(const LatticeModel& m);

/// Sectors with a⁻ = 0, i.e. l* = B(l) − g(l), with |l_coords|₁ ≤ cutoff.
std::vector<Sector> chiral_sectors(const LatticeModel& m, int cutoff);

/// 1-d labels (½a⁺, ½a⁻) of V⁺ ⊗ (V⁻)*.
std::pair<Rational, Rational> one_dim_labels(const Sector& s);

Json to_json(const Sector& s);

}  // namespace chiralkit::fock
