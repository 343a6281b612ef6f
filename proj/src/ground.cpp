#include "ppwass/ground.hpp"

#include <cmath>
#include <stdexcept>

namespace ppwass {

namespace {

bool is_atom_index(const Point& x, std::size_t n_atoms) {
  if (x.size() != 1) return false;
  double v = x[0];
  if (!(v >= 0.0) || v != std::floor(v)) return false;
  return static_cast<std::size_t>(v) < n_atoms;
}

}  // namespace

double euclidean_distance(const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

GroundSpace GroundSpace::unit_cube(int dim) {
  if (dim < 1) throw std::invalid_argument("unit_cube: dimension must be >= 1");
  return GroundSpace(Kind::UnitCube, dim);
}

GroundSpace GroundSpace::torus(int dim) {
  if (dim < 1) throw std::invalid_argument("torus: dimension must be >= 1");
  return GroundSpace(Kind::Torus, dim);
}

GroundSpace GroundSpace::discrete_atoms(
    std::vector<Point> atoms, std::vector<std::vector<double>> distance) {
  std::size_t n = atoms.size();
  if (n == 0) throw std::invalid_argument("discrete_atoms: need at least one atom");
  std::size_t d = atoms[0].size();
  for (const Point& a : atoms) {
    if (a.size() != d)
      throw std::invalid_argument("discrete_atoms: atoms of mixed dimension");
  }
  if (distance.size() != n)
    throw std::invalid_argument("discrete_atoms: distance table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (distance[i].size() != n)
      throw std::invalid_argument("discrete_atoms: distance table not square");
    for (std::size_t j = 0; j < n; ++j) {
      double v = distance[i][j];
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument("discrete_atoms: table entries must lie in [0,1]");
      if (v != distance[j][i])
        throw std::invalid_argument("discrete_atoms: distance table not symmetric");
      if (i == j && v != 0.0)
        throw std::invalid_argument("discrete_atoms: nonzero diagonal entry");
    }
  }
  GroundSpace s(Kind::DiscreteAtoms, static_cast<int>(d));
  s.atoms_ = std::move(atoms);
  s.table_ = std::move(distance);
  return s;
}

GroundSpace GroundSpace::discrete_atoms(std::vector<Point> atoms) {
  std::size_t n = atoms.size();
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (atoms[i].size() != atoms[0].size())
      throw std::invalid_argument("discrete_atoms: atoms of mixed dimension");
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = std::min(euclidean_distance(atoms[i], atoms[j]), 1.0);
      table[i][j] = table[j][i] = d;
    }
  }
  return discrete_atoms(std::move(atoms), std::move(table));
}

double GroundSpace::d0(const Point& x, const Point& y) const {
  validate_point(x);
  validate_point(y);
  switch (kind_) {
    case Kind::DiscreteAtoms:
      return table_[atom_index(x)][atom_index(y)];
    case Kind::UnitCube:
      return std::min(euclidean_distance(x, y), 1.0);
    case Kind::Torus: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        double w = std::fabs(x[i] - y[i]);
        w = std::min(w, 1.0 - w);
        s += w * w;
      }
      return std::min(std::sqrt(s), 1.0);
    }
  }
  return 0.0;  // unreachable
}

double GroundSpace::diameter_bound() const {
  switch (kind_) {
    case Kind::UnitCube:
      return std::sqrt(static_cast<double>(dim_));
    case Kind::Torus:
      return 0.5 * std::sqrt(static_cast<double>(dim_));
    case Kind::DiscreteAtoms: {
      double m = 0.0;
      for (const auto& row : table_)
        for (double v : row) m = std::max(m, v);
      return m;
    }
  }
  return 0.0;  // unreachable
}

bool GroundSpace::contains(const Point& x) const noexcept {
  switch (kind_) {
    case Kind::DiscreteAtoms:
      return is_atom_index(x, atoms_.size());
    case Kind::UnitCube: {
      if (x.size() != static_cast<std::size_t>(dim_)) return false;
      for (double v : x)
        if (!(v >= 0.0 && v <= 1.0)) return false;
      return true;
    }
    case Kind::Torus: {
      if (x.size() != static_cast<std::size_t>(dim_)) return false;
      for (double v : x)
        if (!(v >= 0.0 && v < 1.0)) return false;
      return true;
    }
  }
  return false;
}

void GroundSpace::validate_point(const Point& x) const {
  if (!contains(x))
    throw std::invalid_argument("location not valid for " + describe());
}

void GroundSpace::validate_pattern(const PointPattern& xi) const {
  for (const Point& p : xi.points) validate_point(p);
}

std::size_t GroundSpace::atom_index(const Point& x) const {
  return static_cast<std::size_t>(x[0]);
}

bool GroundSpace::operator==(const GroundSpace& other) const {
  if (kind_ != other.kind_ || dim_ != other.dim_) return false;
  return atoms_ == other.atoms_ && table_ == other.table_;
}

std::string GroundSpace::describe() const {
  switch (kind_) {
    case Kind::DiscreteAtoms:
      return "discrete space with " + std::to_string(atoms_.size()) + " atoms";
    case Kind::UnitCube:
      return "unit cube, dim " + std::to_string(dim_);
    case Kind::Torus:
      return "torus, dim " + std::to_string(dim_);
  }
  return "";
}

}  // namespace ppwass
