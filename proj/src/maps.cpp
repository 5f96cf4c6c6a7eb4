#include "superalg/maps.hpp"

#include "superalg/constructors.hpp"

namespace superalg {

GradedMap identity_map(const SuperAlgebra& a) {
  return GradedMap{Matrix::identity(a.field(), a.dim()), 0, false};
}

Vec apply(const GradedMap& phi, const Vec& x) { return phi.matrix * (phi.semilinear ? conj(x) : x); }

Element apply(const GradedMap& phi, const Element& x) { return x.parent().element(apply(phi, x.coords())); }

Vec apply_to_product(const SuperAlgebra& a, const GradedMap& phi, std::size_t i, std::size_t j) {
  const std::size_t n = phi.matrix.rows();
  Vec r = zero_vec(a.field(), n);
  for (const auto& t : a.product(i, j)) {
    Scalar c = phi.semilinear ? conj(t.coeff) : t.coeff;
    for (std::size_t k = 0; k < n; ++k)
      if (!phi.matrix(k, t.index).is_zero()) r[k] += c * phi.matrix(k, t.index);
  }
  return r;
}

GradedMap compose(const GradedMap& phi, const GradedMap& psi) {
  if (phi.matrix.cols() != psi.matrix.rows()) throw Error(ErrorCode::DimMismatch, "composing maps of different sizes");
  Matrix inner = phi.semilinear ? conj(psi.matrix) : psi.matrix;
  return GradedMap{phi.matrix * inner, phi.parity ^ psi.parity, phi.semilinear != psi.semilinear};
}

GradedMap square(const GradedMap& phi) { return compose(phi, phi); }

std::optional<GradedMap> inverse(const GradedMap& phi) {
  auto inv = inverse(phi.matrix);
  if (!inv) return std::nullopt;
  // phi^{-1}(y) = conj^s(M^{-1} y) = conj^s(M^{-1}) conj^s(y).
  return GradedMap{phi.semilinear ? conj(*inv) : *inv, phi.parity, phi.semilinear};
}

GradedMap tensor_map(const GradedMap& phi, const GradedMap& psi) {
  if (phi.semilinear != psi.semilinear) throw Error(ErrorCode::DimMismatch, "mixing linear and semilinear factors");
  const Matrix& a = phi.matrix;
  const Matrix& b = psi.matrix;
  const std::size_t na = a.rows(), nb = b.rows();
  Matrix m(a.field(), na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t l = 0; l < nb; ++l) m(i * nb + j, k * nb + l) = a(i, k) * b(j, l);
    }
  return GradedMap{m, phi.parity ^ psi.parity, phi.semilinear};
}

GradedMap restrict_map(const GradedMap& phi, const std::vector<std::size_t>& idx) {
  Matrix m(phi.matrix.field(), idx.size(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Vec col = phi.matrix.column(idx[c]);
    Vec rest = col;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      m(r, c) = col[idx[r]];
      rest[idx[r]] = Scalar::zero(col[idx[r]].field());
    }
    if (!is_zero(rest)) throw Error(ErrorCode::DimMismatch, "map does not preserve the subspace");
  }
  return GradedMap{m, phi.parity, phi.semilinear};
}

namespace {

void check_shape(const SuperAlgebra& a, const GradedMap& phi) {
  if (phi.matrix.rows() != a.dim() || phi.matrix.cols() != a.dim())
    throw Error(ErrorCode::DimMismatch, "map size differs from the algebra dimension");
  if (phi.semilinear && !a.field().is_quadratic())
    throw Error(ErrorCode::NotOverQuadraticExtension, "semilinear map over " + a.field().to_string());
  if (!inverse(phi.matrix)) throw Error(ErrorCode::NotBijective, "map is singular");
}

AxiomReport fail(std::size_t i, std::size_t j, std::string why) {
  AxiomReport r;
  r.ok = false;
  r.violation = std::make_pair(i, j);
  r.detail = std::move(why);
  return r;
}

AxiomReport check_parity_and_unit(const SuperAlgebra& a, const GradedMap& phi) {
  AxiomReport r;
  if (phi.parity != 0) {
    r.ok = false;
    r.detail = "map is odd";
    return r;
  }
  for (std::size_t j = 0; j < a.dim(); ++j) {
    auto p = a.parity_of(phi.matrix.column(j));
    if (!p || *p != a.parity(j)) return fail(j, j, "image of e" + std::to_string(j) + " has the wrong parity");
  }
  if (superalg::apply(phi, a.unit()) != a.unit()) {
    r.ok = false;
    r.detail = "phi(1) != 1";
  }
  return r;
}

}  // namespace

AxiomReport check_superantiautomorphism(const SuperAlgebra& a, const GradedMap& phi) {
  check_shape(a, phi);
  AxiomReport r = check_parity_and_unit(a, phi);
  if (!r.ok) return r;
  const std::size_t n = a.dim();
  std::vector<Vec> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = phi.matrix.column(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = apply_to_product(a, phi, i, j);
      Vec rhs = a.mul(img[j], img[i]);
      if (a.parity(i) && a.parity(j)) rhs = -rhs;
      if (lhs != rhs)
        return fail(i, j, "phi(e" + std::to_string(i) + " e" + std::to_string(j) + ") != sign * phi(e" +
                              std::to_string(j) + ") phi(e" + std::to_string(i) + ")");
    }
  return r;
}

AxiomReport check_superinvolution(const SuperAlgebra& a, const GradedMap& phi) {
  AxiomReport r = check_superantiautomorphism(a, phi);
  if (!r.ok) return r;
  GradedMap sq = square(phi);
  if (!sq.matrix.is_identity()) {
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (sq.matrix.column(j) != unit_vec(a.field(), a.dim(), j))
        return fail(j, j, "phi^2(e" + std::to_string(j) + ") != e" + std::to_string(j));
  }
  return r;
}

AxiomReport check_graded_automorphism(const SuperAlgebra& a, const GradedMap& phi) {
  check_shape(a, phi);
  AxiomReport r = check_parity_and_unit(a, phi);
  if (!r.ok) return r;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = apply_to_product(a, phi, i, j);
      if (lhs != a.mul(phi.matrix.column(i), phi.matrix.column(j)))
        return fail(i, j, "phi is not multiplicative on this pair");
    }
  return r;
}

bool is_superantiautomorphism(const SuperAlgebra& a, const GradedMap& phi) {
  return check_superantiautomorphism(a, phi).ok;
}

bool is_superinvolution(const SuperAlgebra& a, const GradedMap& phi) { return check_superinvolution(a, phi).ok; }

GradedMap grading_automorphism(const SuperAlgebra& a) {
  Matrix m = Matrix::identity(a.field(), a.dim());
  for (auto i : a.indices_of_parity(1)) m(i, i) = -Scalar::one(a.field());
  return GradedMap{m, 0, false};
}

GradedMap inner_automorphism(const SuperAlgebra& a, const Element& x) {
  int px = x.parity();
  auto inv = invert(x);
  if (!inv) throw Error(ErrorCode::NotInvertible, "conjugating element is singular");
  const std::size_t n = a.dim();
  Matrix m(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = a.mul(a.mul(x.coords(), unit_vec(a.field(), n, j)), inv->coords());
    if (px && a.parity(j)) v = -v;
    m.set_column(j, v);
  }
  return GradedMap{m, 0, false};
}

Element solve_inner(const SuperAlgebra& a, const GradedMap& phi) {
  if (phi.semilinear) throw Error(ErrorCode::NotInner, "semilinear maps are not inner");
  if (!check_graded_automorphism(a, phi).ok) throw Error(ErrorCode::NotInner, "map is not a graded automorphism");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  for (int p = 0; p < 2; ++p) {
    auto cand = a.indices_of_parity(p);
    if (cand.empty()) continue;
    // phi(e_i) a - (-1)^{p |e_i|} a e_i = 0
    Matrix sys(f, n * n, cand.size());
    for (std::size_t i = 0; i < n; ++i) {
      Matrix l = a.left_mult(phi.matrix.column(i));
      Matrix r = a.right_mult(unit_vec(f, n, i));
      bool neg = p && a.parity(i);
      for (std::size_t c = 0; c < cand.size(); ++c)
        for (std::size_t row = 0; row < n; ++row)
          sys(i * n + row, c) = neg ? l(row, cand[c]) + r(row, cand[c]) : l(row, cand[c]) - r(row, cand[c]);
    }
    auto ns = nullspace(sys);
    std::vector<Vec> tries;
    for (const auto& v : ns) tries.push_back(v);
    if (ns.size() > 1) {
      Vec sum = zero_vec(f, cand.size());
      for (const auto& v : ns) sum = sum + v;
      tries.push_back(sum);
    }
    for (const auto& v : tries) {
      Vec x = zero_vec(f, n);
      for (std::size_t c = 0; c < cand.size(); ++c) x[cand[c]] = v[c];
      x = normalize_leading(x);
      Element e = a.element(x);
      if (!invert(e)) continue;
      if (inner_automorphism(a, e) == phi) return e;
    }
  }
  throw Error(ErrorCode::NotInner, "no invertible homogeneous solution");
}

GradedMap splitsuper_phi(int n, int m, const SuperAlgebra& a) {
  const std::size_t big = static_cast<std::size_t>(n + m);
  if (a.dim() != big * big) throw Error(ErrorCode::DimMismatch, "algebra is not M_{n+m}");
  Matrix mat(a.field(), a.dim(), a.dim());
  const auto nn = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < big; ++i)
    for (std::size_t j = 0; j < big; ++j)
      mat(j * big + i, i * big + j) = (i >= nn && j < nn) ? -Scalar::one(a.field()) : Scalar::one(a.field());
  return GradedMap{mat, 0, false};
}

// ---- hermitian superforms --------------------------------------------------

namespace {

// Splits d into its even and odd components.
std::pair<Vec, Vec> homogeneous_parts(const SuperAlgebra& delta, const Vec& d) {
  Vec e = zero_vec(delta.field(), delta.dim()), o = e;
  for (std::size_t i = 0; i < d.size(); ++i) (delta.parity(i) ? o : e)[i] = d[i];
  return {e, o};
}

}  // namespace

Vec HermitianSuperform::h(const std::vector<Vec>& x, const std::vector<Vec>& y) const {
  const std::size_t n = size();
  Vec out = zero_vec(delta.field(), delta.dim());
  for (std::size_t l = 0; l < n; ++l) {
    auto [ye, yo] = homogeneous_parts(delta, y[l]);
    for (int p = 0; p < 2; ++p) {
      const Vec& d = p ? yo : ye;
      if (is_zero(d)) continue;
      Vec db = superalg::apply(bar, d);
      bool neg = p && ((vparity(l) + ell) % 2);
      for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        Vec term = delta.mul(x[i], delta.mul(gram[i][l], db));
        out = neg ? out - term : out + term;
      }
    }
  }
  return out;
}

void HermitianSuperform::validate() const {
  const std::size_t n = size();
  if (gram.size() != n) throw Error(ErrorCode::DimMismatch, "gram matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw Error(ErrorCode::DimMismatch, "gram matrix size");
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& g = gram[i][j];
      auto p = delta.parity_of(g);
      if (!is_zero(g) && (!p || *p != (vparity(i) + vparity(j) + ell) % 2))
        throw Error(ErrorCode::InvalidAlgebra, "gram entry has the wrong parity");
      Vec expect = superalg::apply(bar, g);
      if (epsilon < 0) expect = -expect;
      if (vparity(i) && vparity(j)) expect = -expect;
      if (gram[j][i] != expect) throw Error(ErrorCode::InvalidAlgebra, "form is not epsilon-hermitian");
    }
  }
  const std::size_t dd = delta.dim();
  Matrix big(delta.field(), n * dd, n * dd);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < dd; ++t)
      for (std::size_t l = 0; l < n; ++l) {
        Vec v = delta.mul(unit_vec(delta.field(), dd, t), gram[i][l]);
        for (std::size_t r = 0; r < dd; ++r) big(l * dd + r, i * dd + t) = v[r];
      }
  if (rank(big) != n * dd) throw Error(ErrorCode::Degenerate, "form is degenerate");
}

SuperAlgebra endomorphism_algebra(const HermitianSuperform& h) { return matrix_superalgebra(h.d0, h.d1, h.delta); }

GradedMap adjoint_superinvolution(const HermitianSuperform& h, const SuperAlgebra& end) {
  h.validate();
  const Field& f = h.delta.field();
  const std::size_t n = h.size(), dd = h.delta.dim();
  if (end.dim() != n * n * dd) throw Error(ErrorCode::DimMismatch, "endomorphism algebra size");
  // w -> (sum_l (-1)^{|delta_s|(|e_l| + ell)} G_al w_l)_a on Delta-coordinates.
  Matrix sys(f, n * dd, n * dd);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t s = 0; s < dd; ++s) {
      bool neg = h.delta.parity(s) && ((h.vparity(l) + h.ell) % 2);
      for (std::size_t a = 0; a < n; ++a) {
        Vec v = h.delta.mul(h.gram[a][l], unit_vec(f, dd, s));
        for (std::size_t r = 0; r < dd; ++r) sys(a * dd + r, l * dd + s) = neg ? -v[r] : v[r];
      }
    }
  auto inv = inverse(sys);
  if (!inv) throw Error(ErrorCode::Degenerate, "form is degenerate");
  Matrix out(f, end.dim(), end.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < dd; ++t) {
        const std::size_t col = (i * n + j) * dd + t;
        const int pf = end.parity(col);
        Vec delta_t = unit_vec(f, dd, t);
        for (std::size_t k = 0; k < n; ++k) {
          // h(e_a f, e_k) = f_ai G_jk, nonzero only for a = i.
          Vec rhs = zero_vec(f, n * dd);
          Vec v = h.delta.mul(delta_t, h.gram[j][k]);
          if (pf && h.vparity(k)) v = -v;
          for (std::size_t r = 0; r < dd; ++r) rhs[i * dd + r] = v[r];
          Vec w = *inv * rhs;
          for (std::size_t l = 0; l < n; ++l) {
            Vec wl(w.begin() + static_cast<std::ptrdiff_t>(l * dd), w.begin() + static_cast<std::ptrdiff_t>((l + 1) * dd));
            Vec g = superalg::apply(h.bar, wl);
            for (std::size_t s = 0; s < dd; ++s) out((k * n + l) * dd + s, col) = g[s];
          }
        }
      }
  return GradedMap{out, 0, h.bar.semilinear};
}

Element rank_one_map(const HermitianSuperform& h, const SuperAlgebra& end, const std::vector<Vec>& v,
                     const std::vector<Vec>& w) {
  const Field& f = h.delta.field();
  const std::size_t n = h.size(), dd = h.delta.dim();
  Vec coords = zero_vec(f, end.dim());
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Vec> ea(n, zero_vec(f, dd));
    ea[a] = h.delta.unit();
    Vec hav = h.h(ea, v);
    for (std::size_t b = 0; b < n; ++b) {
      Vec fab = h.delta.mul(hav, w[b]);
      for (std::size_t s = 0; s < dd; ++s) coords[(a * n + b) * dd + s] = fab[s];
    }
  }
  return end.element(coords);
}

}  // namespace superalg
