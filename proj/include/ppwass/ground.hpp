#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ppwass {

// A location in the ground space. Cube/torus spaces use a D-dimensional
// coordinate vector; discrete-atom spaces use a single entry holding the
// (integral) atom index.
using Point = std::vector<double>;

// Finite point measure: a multiset of locations. Order carries no meaning.
struct PointPattern {
  std::vector<Point> points;

  PointPattern() = default;
  explicit PointPattern(std::vector<Point> pts) : points(std::move(pts)) {}

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Carrier space with a metric d0 bounded by 1. Three variants: an explicit
// list of atoms with a distance table, the unit cube with capped Euclidean
// metric, and the unit torus with capped wraparound metric.
class GroundSpace {
 public:
  enum class Kind { DiscreteAtoms, UnitCube, Torus };

  static GroundSpace unit_cube(int dim);
  static GroundSpace torus(int dim);
  // Atoms with an explicit symmetric distance table (entries in [0,1],
  // zero exactly on the diagonal).
  static GroundSpace discrete_atoms(std::vector<Point> atoms,
                                    std::vector<std::vector<double>> distance);
  // Atoms with the capped Euclidean table d[i][j] = min(|a_i - a_j|, 1).
  static GroundSpace discrete_atoms(std::vector<Point> atoms);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<Point>& atoms() const { return atoms_; }
  const std::vector<std::vector<double>>& distance_table() const {
    return table_;
  }

  // Metric value in [0,1]; both locations must be valid for the space.
  double d0(const Point& x, const Point& y) const;

  // Upper bound on the Euclidean diameter of the carrier (cube: sqrt(D),
  // torus: sqrt(D)/2, discrete: max table entry).
  double diameter_bound() const;

  bool contains(const Point& x) const noexcept;
  void validate_point(const Point& x) const;   // throws std::invalid_argument
  void validate_pattern(const PointPattern& xi) const;

  // Atom index of a discrete-space location.
  std::size_t atom_index(const Point& x) const;

  bool operator==(const GroundSpace& other) const;

  std::string describe() const;

 private:
  GroundSpace(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  std::vector<Point> atoms_;                 // discrete only
  std::vector<std::vector<double>> table_;   // discrete only
};

// Plain Euclidean distance between equal-length coordinate vectors.
double euclidean_distance(const Point& x, const Point& y);

}  // namespace ppwass
