#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detsat/groebner.hpp"
#include "detsat/ideal.hpp"
#include "json.hpp"

namespace detsat {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  /// Zero matrix.
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);
  static PolyMatrix from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix from_columns(Ring ring, std::size_t rows, const std::vector<ModuleVector>& columns);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Polynomial>& entries() const { return entries_; }

  ModuleVector column(std::size_t j) const;
  std::vector<ModuleVector> columns() const;
  std::vector<Polynomial> row(std::size_t i) const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PolyMatrix without_column(std::size_t j) const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  nlohmann::json to_json() const;
  static PolyMatrix from_json(Ring ring, const nlohmann::json& j);
  /// One line per row, entries as quoted canonical strings.
  std::string to_csv() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Cofactor expansion up to 4x4, Bareiss elimination above.
Polynomial determinant(const PolyMatrix& m);
/// Laplace expansion along the first row, any size.
Polynomial determinant_cofactor(const PolyMatrix& m);
/// Fraction-free Bareiss elimination, pivoting on a lowest-degree nonzero entry.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// All k x k minors, rows and columns in lexicographic order of index sets.
std::vector<Polynomial> minors(const PolyMatrix& m, int k);
/// I_k(M); the unit ideal for k <= 0 and the zero ideal for k > min(rows, cols).
Ideal minors_ideal(const PolyMatrix& m, int k);
/// (-1)^(j-1) det M_j for an r x (r+1) matrix, M_j dropping column j.
std::vector<Polynomial> signed_max_minors(const PolyMatrix& m);

struct RankOptions {
  unsigned trials = 3;
  std::uint64_t seed = 0x5eed;
  bool symbolic = false;
};

struct RankResult {
  std::size_t rank = 0;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  /// Modulus of the evaluation field.
  std::uint64_t modulus = 0;
  /// Schwartz–Zippel bound on the probability that the reported rank is too small.
  double failure_bound = 0.0;
  bool symbolic_checked = false;
  std::size_t symbolic_rank = 0;

  nlohmann::json to_json() const;
};

/// Rank over the fraction field by evaluation at random points, maximized over
/// the trials. Rational matrices are evaluated modulo 2^31 - 1, prime-field
/// matrices in their own field.
RankResult rank(const PolyMatrix& m, const RankOptions& options = {});
/// Exact rank by fraction-free elimination.
std::size_t symbolic_rank(const PolyMatrix& m);

}  // namespace detsat
