#include "detsat/koszul_strand.hpp"

#include <algorithm>

#include "detsat/errors.hpp"

namespace detsat {

std::string StrandLabel::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += "T" + std::to_string(j + 1);
    if (t[j] > 1) out += "^" + std::to_string(t[j]);
  }
  if (out.empty()) out = "1";
  if (!wedge.empty()) {
    out += " e";
    for (std::size_t p = 0; p < wedge.size(); ++p) out += (p ? "^" : "") + std::to_string(wedge[p]);
  }
  return out;
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur.push_back(e);
    compositions(parts, total - e, cur, out);
    cur.pop_back();
  }
}

void subsets(int m, int r, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i <= m; ++i) {
    cur.push_back(i);
    subsets(m, r, i + 1, cur, out);
    cur.pop_back();
  }
}

ModuleVector zero_vector(const Ring& R, std::size_t rank) { return ModuleVector(R, rank); }

}  // namespace

std::size_t strand_rank_formula(int m, int n, int r) {
  if (r < 0 || r > m || r > n) return 0;
  return binomial(m, r) * binomial(n - r + m, m);
}

std::vector<StrandLabel> strand_labels(int m, int n, int r) {
  std::vector<StrandLabel> out;
  if (r < 0 || r > m || r > n) return out;
  std::vector<std::vector<int>> ts, ws;
  std::vector<int> cur;
  compositions(m + 1, n - r, cur, ts);
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  const auto nv = static_cast<std::size_t>(m + 1);
  std::sort(ts.begin(), ts.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    return grevlex.compare(Monomial(nv, a), Monomial(nv, b)) > 0;
  });
  cur.clear();
  subsets(m, r, 1, cur, ws);
  for (const auto& w : ws)
    for (const auto& t : ts) out.push_back(StrandLabel{t, w});
  return out;
}

int StrandComplex::top() const {
  int t = 0;
  for (int r = 0; r <= m; ++r)
    if (rank(r) > 0) t = r;
  return t;
}

std::optional<std::size_t> StrandComplex::index_of(int r, const StrandLabel& label) const {
  const auto& ls = labels.at(static_cast<std::size_t>(r));
  const auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

StrandComplex strand(const CyclicFamily& family, int n) {
  if (n < 1) throw std::invalid_argument("strand degree must be at least 1");
  const int m = family.spec.m;
  StrandComplex c;
  c.m = m;
  c.n = n;
  c.ring = family.ring;
  for (int r = 0; r <= m; ++r) {
    c.labels.push_back(strand_labels(m, n, r));
    if (c.labels.back().size() != strand_rank_formula(m, n, r))
      throw ConstructionError("strand rank differs from the binomial formula");
  }
  for (int r = 1; r <= m; ++r) {
    const auto& src = c.labels[static_cast<std::size_t>(r)];
    PolyMatrix d(c.ring, c.rank(r - 1), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const StrandLabel& L = src[col];
      for (std::size_t p = 0; p < L.wedge.size(); ++p) {
        const int i = L.wedge[p];
        StrandLabel target{L.t, L.wedge};
        target.wedge.erase(target.wedge.begin() + static_cast<std::ptrdiff_t>(p));
        for (int j = 1; j <= m + 1; ++j) {
          target.t = L.t;
          ++target.t[static_cast<std::size_t>(j - 1)];
          const auto row = c.index_of(r - 1, target);
          if (!row) throw ConstructionError("boundary target label missing: " + target.to_string());
          const Polynomial& x = family.M(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
          if (p % 2) d(*row, col) -= x;
          else d(*row, col) += x;
        }
      }
    }
    c.boundary.push_back(std::move(d));
  }
  for (const auto& L : c.labels[0]) {
    Polynomial prod = Polynomial::constant(c.ring, 1);
    for (std::size_t j = 0; j < L.t.size(); ++j)
      if (L.t[j]) prod = prod * family.a[j].pow(L.t[j]);
    c.augmentation.push_back(std::move(prod));
  }
  if (const auto bad = composition_defect(c)) throw ConstructionError("d_" + std::to_string(*bad) + " d_" +
                                                                      std::to_string(*bad + 1) + " != 0");
  return c;
}

std::optional<int> composition_defect(const StrandComplex& c) {
  for (int r = 1; r < c.m; ++r) {
    const PolyMatrix& lo = c.d(r);
    const PolyMatrix& hi = c.d(r + 1);
    if (lo.cols() == 0 || hi.cols() == 0 || lo.rows() == 0) continue;
    if (!(lo * hi).is_zero()) return r;
  }
  return std::nullopt;
}

bool is_minimal(const StrandComplex& c) {
  for (const auto& d : c.boundary)
    for (const auto& e : d.entries())
      if (!e.constant_term().is_zero()) return false;
  return true;
}

nlohmann::json DegreeCertificate::to_json() const {
  nlohmann::json j{{"r", r}, {"syzygy_generators", syzygy_generators}, {"image_basis_size", image_basis_size},
                   {"ok", ok}};
  if (counterexample) j["counterexample"] = counterexample->to_string();
  return j;
}

nlohmann::json ExactnessCertificate::to_json() const {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& c : degrees) d.push_back(c.to_json());
  return {{"exact", exact}, {"degrees", d}};
}

ExactnessCertificate is_exact(const StrandComplex& c) {
  ExactnessCertificate out;
  out.exact = true;
  const int top = c.top();
  for (int r = 1; r <= top; ++r) {
    DegreeCertificate cert;
    cert.r = r;
    const auto cols = c.d(r).columns();
    const SyzygyBasis syz = syzygies(std::span<const ModuleVector>(cols));
    cert.syzygy_generators = syz.generators.size();
    if (r == top) {
      cert.ok = syz.generators.empty();
      if (!cert.ok) cert.counterexample = syz.generators.front();
    } else {
      const auto image = c.d(r + 1).columns();
      const auto gb = module_groebner(image, c.ring, c.rank(r));
      cert.image_basis_size = gb.basis().size();
      cert.ok = true;
      for (const auto& s : syz.generators)
        if (!gb.contains(s)) {
          cert.ok = false;
          cert.counterexample = s;
          break;
        }
    }
    out.exact = out.exact && cert.ok;
    out.degrees.push_back(std::move(cert));
  }
  return out;
}

nlohmann::json AugmentationCertificate::to_json() const {
  nlohmann::json j{{"ok", ok},
                   {"composite_zero", composite_zero},
                   {"products", products},
                   {"syzygy_generators", syzygy_generators}};
  if (counterexample) j["counterexample"] = counterexample->to_string();
  return j;
}

AugmentationCertificate augmentation_check(const StrandComplex& c) {
  AugmentationCertificate out;
  out.products = c.augmentation.size();
  const PolyMatrix& d1 = c.d(1);
  out.composite_zero = true;
  for (std::size_t col = 0; col < d1.cols(); ++col)
    if (!d1.column(col).dot(c.augmentation).is_zero()) out.composite_zero = false;
  const SyzygyBasis syz = syzygies(std::span<const Polynomial>(c.augmentation));
  out.syzygy_generators = syz.generators.size();
  const auto gb = module_groebner(d1.columns(), c.ring, c.rank(0));
  out.ok = out.composite_zero;
  for (const auto& s : syz.generators)
    if (!gb.contains(s)) {
      out.ok = false;
      out.counterexample = s;
      break;
    }
  return out;
}

PdDepth pd_depth(const StrandComplex& c, const ExactnessCertificate& certificate) {
  if (!certificate.exact) throw CertificateMissing("exactness of the strand was not certified");
  if (certificate.degrees.size() != static_cast<std::size_t>(c.top()))
    throw CertificateMissing("the certificate does not cover every homological degree");
  if (!is_minimal(c)) throw CertificateMissing("the strand is not minimal");
  PdDepth out;
  out.pd = 1 + c.top();
  out.depth = (c.m + 1) - out.pd;
  return out;
}

nlohmann::json Claim2Result::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& x : v) vs.push_back(x.to_string());
  nlohmann::json j{{"decomposition_holds", decomposition_holds},
                   {"claim1_injective", claim1_injective},
                   {"v", vs},
                   {"exchanged_positions", exchanged_positions}};
  if (claim3_determinant) j["claim3_determinant"] = *claim3_determinant;
  return j;
}

Claim2Result claim2_decomposition(const CyclicFamily& family) {
  const int m = family.spec.m;
  if (m < 2) throw std::invalid_argument("the decomposition needs m >= 2");
  const StrandComplex c = strand(family, m);
  const Ring& R = c.ring;
  const std::size_t rank_lo = c.rank(m - 1);
  Claim2Result out;

  out.claim1_injective = true;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> seen;
    for (int k = 1; k <= m + 1; ++k) seen.push_back(cyclic_column(m, i, k));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) out.claim1_injective = false;
  }

  std::vector<int> full;
  for (int i = 1; i <= m; ++i) full.push_back(i);
  // Position of T_j ě_i in [K_{m-1}]_m.
  auto position = [&](int i, int j) {
    std::vector<int> w = full;
    w.erase(w.begin() + (i - 1));
    std::vector<int> t(static_cast<std::size_t>(m + 1), 0);
    t[static_cast<std::size_t>(j - 1)] = 1;
    const auto p = c.index_of(m - 1, StrandLabel{t, w});
    if (!p) throw ConstructionError("label T_j ě_i missing");
    return *p;
  };

  for (int k = 1; k <= m + 1; ++k) {
    ModuleVector v = zero_vector(R, rank_lo);
    for (int i = 1; i <= m; ++i) {
      const Polynomial& xp = family.beta.xprime[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
      const std::size_t pos = position(i, cyclic_column(m, i, k));
      if (i % 2) v[pos] += xp;
      else v[pos] -= xp;
    }
    out.v.push_back(std::move(v));
  }

  ModuleVector sum = zero_vector(R, rank_lo);
  for (int k = 1; k <= m + 1; ++k) sum += family.y[static_cast<std::size_t>(k - 1)] * out.v[static_cast<std::size_t>(k - 1)];
  out.decomposition_holds = sum == c.d(m).column(0);

  for (int k = 1; k <= m; ++k) {
    const int ik = family.beta.selector[static_cast<std::size_t>(k - 1)];
    out.exchanged_positions.push_back(position(ik, cyclic_column(m, ik, k)));
  }
  std::vector<std::size_t> sorted = out.exchanged_positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
    PolyMatrix minor(R, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t row = 0; row < out.exchanged_positions.size(); ++row)
      for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) minor(row, k) = out.v[k][out.exchanged_positions[row]];
    const Polynomial det = determinant(minor);
    if (det == Polynomial::constant(R, 1)) out.claim3_determinant = 1;
    else if (det == Polynomial::constant(R, -1)) out.claim3_determinant = -1;
  }
  return out;
}

}  // namespace detsat
