#include "detsat/poly_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "detsat/errors.hpp"

namespace detsat {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw ShapeMismatch("entry count does not match the matrix shape");
  for (const auto& e : entries_) require_same_ring(ring_, e.ring(), "matrix entries");
}

PolyMatrix PolyMatrix::from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  std::vector<Polynomial> entries;
  for (const auto& r : rows) {
    if (r.size() != c) throw ShapeMismatch("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return PolyMatrix(std::move(ring), rows.size(), c, std::move(entries));
}

PolyMatrix PolyMatrix::from_columns(Ring ring, std::size_t rows, const std::vector<ModuleVector>& columns) {
  PolyMatrix out(std::move(ring), rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw ShapeMismatch("column rank does not match the row count");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

ModuleVector PolyMatrix::column(std::size_t j) const {
  ModuleVector v(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<ModuleVector> PolyMatrix::columns() const {
  std::vector<ModuleVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows.at(i), cols.at(j));
  return out;
}

PolyMatrix PolyMatrix::without_column(std::size_t j) const {
  std::vector<std::size_t> r(rows_), c;
  for (std::size_t i = 0; i < rows_; ++i) r[i] = i;
  for (std::size_t k = 0; k < cols_; ++k)
    if (k != j) c.push_back(k);
  return submatrix(r, c);
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_, "matrix product");
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product of incompatible shapes");
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) r.push_back((*this)(i, j).to_string());
    out.push_back(std::move(r));
  }
  return out;
}

PolyMatrix PolyMatrix::from_json(Ring ring, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("a matrix must be a JSON array of rows");
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("a matrix row must be a JSON array");
    auto& row = rows.emplace_back();
    for (const auto& e : r) {
      if (!e.is_string()) throw InputError("matrix entries must be polynomial strings");
      row.push_back(Polynomial::parse(ring, e.get<std::string>()));
    }
  }
  return from_rows(std::move(ring), rows);
}

std::string PolyMatrix::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ',';
      out += '"' + (*this)(i, j).to_string() + '"';
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix");
}

Polynomial cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const Ring& R = m.ring();
  if (cols.empty()) return Polynomial::constant(R, 1);
  if (cols.size() == 1) return m(row, cols[0]);
  Polynomial det(R);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& e = m(row, cols[k]);
    if (e.is_zero()) continue;
    const std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Polynomial term = e * cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0);
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  const Ring& R = m.ring();
  if (n == 0) return Polynomial::constant(R, 1);
  std::vector<std::vector<Polynomial>> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(m.row(i));
  Polynomial prev = Polynomial::constant(R, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot: nonzero entry of least total degree, then fewest terms.
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pi == n || a[i][j].total_degree() < a[pi][pj].total_degree() ||
            (a[i][j].total_degree() == a[pi][pj].total_degree() && a[i][j].size() < a[pi][pj].size())) {
          pi = i;
          pj = j;
        }
      }
    if (pi == n) return Polynomial(R);
    if (pi != k) {
      std::swap(a[pi], a[k]);
      negate = !negate;
    }
    if (pj != k) {
      for (auto& row : a) std::swap(row[pj], row[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.divide_or_throw(prev);
      }
      a[i][k] = Polynomial(R);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
  require_square(m);
  return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, int k) {
  if (k < 0) throw std::invalid_argument("minor size must be non-negative");
  const auto uk = static_cast<std::size_t>(k);
  std::vector<Polynomial> out;
  if (uk > std::min(m.rows(), m.cols())) return out;
  const auto rs = combinations(m.rows(), uk);
  const auto cs = combinations(m.cols(), uk);
  for (const auto& r : rs)
    for (const auto& c : cs) out.push_back(determinant(m.submatrix(r, c)));
  return out;
}

Ideal minors_ideal(const PolyMatrix& m, int k) {
  if (k <= 0) return Ideal::unit(m.ring());
  if (static_cast<std::size_t>(k) > std::min(m.rows(), m.cols())) return Ideal(m.ring());
  return sum(Ideal(m.ring()), Ideal(m.ring(), minors(m, k)));
}

std::vector<Polynomial> signed_max_minors(const PolyMatrix& m) {
  if (m.cols() != m.rows() + 1)
    throw ShapeMismatch("signed maximal minors need exactly one more column than rows");
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Polynomial d = determinant(m.without_column(j));
    out.push_back(j % 2 ? -d : d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank

namespace {

constexpr std::uint64_t kMersenne31 = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Coefficient image in Z/p; nullopt when a denominator vanishes mod p.
std::optional<std::uint64_t> coeff_mod(const FieldElement& c, std::uint64_t p) {
  if (!c.is_rational()) return c.residue() % p;
  const mpz_class num = c.rational().get_num() % static_cast<unsigned long>(p);
  const mpz_class den = c.rational().get_den() % static_cast<unsigned long>(p);
  if (den == 0) return std::nullopt;
  const mpz_class shifted = num + static_cast<unsigned long>(p);
  const std::uint64_t n = shifted.get_ui() % p;
  return n * pow_mod(den.get_ui(), p - 2, p) % p;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

nlohmann::json RankResult::to_json() const {
  nlohmann::json j{{"rank", rank},
                   {"trials", trials},
                   {"seed", seed},
                   {"modulus", modulus},
                   {"failure_bound", failure_bound},
                   {"symbolic_checked", symbolic_checked}};
  if (symbolic_checked) j["symbolic_rank"] = symbolic_rank;
  return j;
}

RankResult rank(const PolyMatrix& m, const RankOptions& options) {
  const Ring& R = m.ring();
  const std::uint64_t p = R->field().is_prime() ? R->field().modulus() : kMersenne31;
  RankResult out;
  out.trials = std::max(1u, options.trials);
  out.seed = options.seed;
  out.modulus = p;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  const std::size_t n = R->nvars();
  int max_deg = 0;
  for (const auto& e : m.entries()) max_deg = std::max(max_deg, e.total_degree());
  for (unsigned t = 0; t < out.trials; ++t) {
    std::vector<std::uint64_t> point(n);
    for (auto& x : point) x = dist(rng);
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i)
      for (std::size_t j = 0; j < m.cols() && ok; ++j) {
        std::uint64_t v = 0;
        for (const auto& term : m(i, j).terms()) {
          const auto c = coeff_mod(term.coeff, p);
          if (!c) {
            ok = false;
            break;
          }
          std::uint64_t x = *c;
          for (std::size_t k = 0; k < n; ++k)
            if (term.mono[k]) x = x * pow_mod(point[k], term.mono[k], p) % p;
          v = (v + x) % p;
        }
        a[i][j] = v;
      }
    if (ok) out.rank = std::max(out.rank, rank_mod(std::move(a), p));
  }
  // A fixed r x r minor of degree <= r * max_deg vanishes at a random point
  // with probability at most that degree over p.
  const double per_trial =
      std::min(1.0, static_cast<double>(out.rank + 1) * std::max(1, max_deg) / static_cast<double>(p));
  out.failure_bound = std::pow(per_trial, out.trials);
  if (options.symbolic) {
    out.symbolic_checked = true;
    out.symbolic_rank = symbolic_rank(m);
  }
  return out;
}

std::size_t symbolic_rank(const PolyMatrix& m) {
  const Ring& R = m.ring();
  std::vector<std::vector<Polynomial>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  const std::size_t rows = m.rows(), cols = m.cols();
  Polynomial prev = Polynomial::constant(R, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero() && (piv == rows || a[i][c].total_degree() < a[piv][c].total_degree())) piv = i;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]).divide_or_throw(prev);
      a[i][c] = Polynomial(R);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace detsat
