#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfcas/groebner.hpp"
#include "surfcas/linalg.hpp"

namespace surfcas {

/// Direct sum of R(-t_i).
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

  std::size_t rank() const { return twists_.size(); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(std::size_t i) const { return twists_[i]; }
  /// Dimension of the degree-n piece.
  std::size_t dim(int n) const;
  /// Offset of summand i inside the degree-n coordinates.
  std::size_t offset(std::size_t i, int n) const;
  GradedFreeModule dual() const;
  bool operator==(const GradedFreeModule&) const = default;

 private:
  std::vector<int> twists_;
};

/// Vector of polynomials, one per summand of a free module.
using ModuleElement = std::vector<Polynomial>;

/// Homogeneous map source -> target; entry (i, j) has degree source twist j - target twist i.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(std::uint32_t prime, GradedFreeModule source, GradedFreeModule target,
            std::vector<std::vector<Polynomial>> entries);
  static ModuleMap zero(std::uint32_t prime, GradedFreeModule source, GradedFreeModule target);
  /// Columns given as module elements; source twists are read off the columns' degrees.
  static ModuleMap from_columns(std::uint32_t prime, const GradedFreeModule& target,
                                const std::vector<ModuleElement>& columns, const std::vector<int>& source_twists);

  std::uint32_t prime() const { return prime_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  ModuleElement column(std::size_t j) const;
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }

  /// Matrix of the degree-n component (target_n rows by source_n columns).
  Matrix in_degree(int n) const;
  ModuleMap transpose() const;
  /// this o other.
  ModuleMap compose(const ModuleMap& other) const;
  bool is_zero() const;
  ModuleMap drop(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::uint32_t prime_ = PrimeField::kDefaultPrime;
  GradedFreeModule source_, target_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// Dense coordinates of a homogeneous element of degree n.
Vec element_to_vec(const GradedFreeModule& F, const ModuleElement& e, int n);
ModuleElement vec_to_element(std::uint32_t prime, const GradedFreeModule& F, const Vec& v, int n);
/// Matrix of multiplication by x_var from F_n to F_{n+1}, applied to a vector.
Vec multiply_by_variable(const GradedFreeModule& F, const Vec& v, int n, int var);

/// Kernel generators of phi in degrees <= max_degree, minimal, as a map into phi.source().
ModuleMap syzygy_map(const ModuleMap& phi, int max_degree);

struct FreeResolution {
  /// maps[0] presents the module; maps[k] : F_{k+1} -> F_k.
  std::vector<ModuleMap> maps;
  std::size_t length() const { return maps.size(); }
};

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, int> e) : entries_(std::move(e)) {}

  int at(int step, int twist) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  std::map<int, int> step(int i) const;
  int steps() const;
  int total(int step) const;
  /// Numerator of the Hilbert series of R/I implied by the table (step 0 = generators).
  std::vector<std::int64_t> hilbert_numerator() const;
  std::string to_string() const;
  bool operator==(const BettiTable&) const = default;

 private:
  std::map<std::pair<int, int>, int> entries_;
};

/// Row of minimal generators of I, grouped by degree.
std::vector<Polynomial> minimal_generators(const Ideal& I);
FreeResolution free_resolution(const Ideal& I, int max_length = 5);
FreeResolution free_resolution(const ModuleMap& presentation, int degree_bound, int max_length = 5);
FreeResolution minimalize(const FreeResolution& res);
BettiTable betti(const FreeResolution& res);

bool composes_to_zero(const FreeResolution& res);
/// Interior exactness by ranks in degrees <= degree_bound.
bool check_exactness(const FreeResolution& res, int degree_bound);
/// Rank of maps[last] at a random point is its column count.
bool last_map_injective(const FreeResolution& res, std::uint64_t seed = 17);

/// Ext^i(M, R) as the homology of the dual complex, with per-degree linear algebra.
class ExtModule {
 public:
  ExtModule(const FreeResolution& res, int i);

  int index() const { return i_; }
  bool trivially_zero() const { return middle_.rank() == 0; }
  std::size_t dim(int e) const;
  /// Lowest degree in which the ambient dual module is nonzero.
  int lowest_degree() const;
  /// Top generator degree when Ext is a cokernel (last step of the resolution); otherwise empty.
  std::optional<int> top_generator_degree() const;
  /// Matrix of multiplication by x_var : Ext_e -> Ext_{e+1} in quotient coordinates.
  Matrix multiplication(int e, int var) const;

 private:
  struct Piece {
    std::vector<Vec> reps;       // representatives of a basis of Ext_e
    std::vector<Vec> rows;       // semi-echelon rows: boundaries first, then reps
    std::vector<std::size_t> pivots;
    std::vector<Vec> tags;       // rep-coordinates carried by each row
  };
  /// Coordinates of a cycle of degree e in the rep basis.
  Vec coordinates(int e, Vec v) const;
  struct Cache;
  const Piece& piece(int e) const;
  int i_;
  std::uint32_t prime_;
  GradedFreeModule middle_;
  std::optional<ModuleMap> in_, out_;
  std::shared_ptr<Cache> cache_;
};

ExtModule ext_module(const FreeResolution& res, int i);

}  // namespace surfcas
