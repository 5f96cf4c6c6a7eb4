#include "superalg/secondkind.hpp"

#include "superalg/constructors.hpp"

namespace superalg {

namespace {

void require_quadratic(const Field& f) {
  if (!f.is_quadratic()) throw Error(ErrorCode::NotOverQuadraticExtension, "algebra is over " + f.to_string());
}

Scalar theta(const Field& k) { return Scalar::generator(k); }
Scalar tparam(const Field& k) { return Scalar(Field::rationals(), static_cast<long>(k.d())); }

Certificate finish(Certificate c, Verdict v, std::string tag) {
  c.verdict = v;
  c.reason_tag = std::move(tag);
  return c;
}

Certificate with_witness(Certificate c, const SuperAlgebra& a, GradedMap w, std::string tag) {
  c.witness = std::move(w);
  AxiomReport r = verify_witness(a, c);
  if (!r.ok) throw Error(ErrorCode::InvalidAlgebra, "constructed witness fails: " + r.detail);
  c.trace.push_back("witness verified as semilinear " + to_string(c.property));
  return finish(std::move(c), Verdict::Exists, std::move(tag));
}

bool rational_constants(const SuperAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& term : a.product(i, j))
        if (!term.coeff.is_rational()) return false;
  for (const auto& u : a.unit())
    if (!u.is_rational()) return false;
  return true;
}

}  // namespace

SuperAlgebra conjugate_superalgebra(const SuperAlgebra& a) {
  require_quadratic(a.field());
  const std::size_t n = a.dim();
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) table[i * n + j].push_back({t.index, conj(t.coeff)});
  auto r = std::make_shared<Recipe>();
  r->kind = RecipeKind::Conjugate;
  if (a.recipe()) {
    r->children.push_back(a.recipe());
  } else {
    auto leaf = std::make_shared<Recipe>();
    leaf->raw = std::make_shared<const SuperAlgebra>(a);
    r->children.push_back(leaf);
  }
  return SuperAlgebra(a.field(), a.parities(), std::move(table), conj(a.unit()), r);
}

// ---- corestriction -------------------------------------------------------------

Corestriction build_corestriction(const SuperAlgebra& a) {
  require_quadratic(a.field());
  const Field& k = a.field();
  const Field q = Field::rationals();
  const std::size_t n = a.dim(), nt = n * n;
  Corestriction out;
  out.t = graded_tensor(a, conjugate_superalgebra(a));
  Matrix p(k, nt, nt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p(j * n + i, i * n + j) = (a.parity(i) && a.parity(j)) ? -Scalar::one(k) : Scalar::one(k);
  out.pi = GradedMap{p, 0, true};
  out.pi_multiplicative = true;
  for (std::size_t x = 0; x < nt && out.pi_multiplicative; ++x)
    for (std::size_t y = 0; y < nt; ++y) {
      Vec lhs = superalg::apply(out.pi, out.t.mul(unit_vec(k, nt, x), unit_vec(k, nt, y)));
      if (lhs != out.t.mul(p.column(x), p.column(y))) {
        out.pi_multiplicative = false;
        break;
      }
    }

  // Fixed space of pi over Q, one parity at a time.
  Matrix real = realify(p, true);
  std::vector<int> parity;
  std::vector<Vec> rational_basis;
  for (int par = 0; par < 2; ++par) {
    std::vector<std::size_t> idx;
    for (std::size_t x = 0; x < nt; ++x)
      if (out.t.parity(x) == par) {
        idx.push_back(2 * x);
        idx.push_back(2 * x + 1);
      }
    Matrix sys(q, idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        sys(r, c) = real(idx[r], idx[c]) - (r == c ? Scalar::one(q) : Scalar::zero(q));
    for (const auto& v : nullspace(sys)) {
      Vec full = zero_vec(q, 2 * nt);
      for (std::size_t r = 0; r < idx.size(); ++r) full[idx[r]] = v[r];
      rational_basis.push_back(full);
      parity.push_back(par);
    }
  }
  const std::size_t m = rational_basis.size();
  if (m != nt) throw Error(ErrorCode::InvalidAlgebra, "fixed space of pi has the wrong dimension");
  for (const auto& v : rational_basis) out.basis.push_back(complexify(k, v));

  // Coordinates in the fixed basis through an invertible square block.
  Matrix bm = Matrix::from_columns(q, 2 * nt, rational_basis);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < 2 * nt; ++r) rows.push_back(bm.row(r));
  auto sel = independent_subset(q, rows);
  Matrix sq(q, m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) sq(r, c) = bm(sel[r], c);
  Matrix sqi = *inverse(sq);
  auto coords = [&](const Vec& kv) {
    Vec rv = realify(kv);
    Vec sub(m);
    for (std::size_t r = 0; r < m; ++r) sub[r] = rv[sel[r]];
    Vec c = sqi * sub;
    if (bm * c != rv) throw Error(ErrorCode::InvalidAlgebra, "fixed space of pi is not closed under products");
    return c;
  };
  std::vector<Scalar> dense(m * m * m, Scalar::zero(q));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      Vec c = coords(out.t.mul(out.basis[r], out.basis[s]));
      for (std::size_t u = 0; u < m; ++u) dense[(r * m + s) * m + u] = c[u];
    }
  out.cor = SuperAlgebra::from_dense(q, parity, dense, coords(out.t.unit()));
  return out;
}

Vec corestriction_module_action(const SuperAlgebra& a, const GradedMap& xi, const Vec& x, const Vec& s) {
  const std::size_t n = a.dim();
  const Field& k = a.field();
  if (s.size() != n * n) throw Error(ErrorCode::DimMismatch, "tensor element has the wrong size");
  Vec out = zero_vec(k, n);
  Vec parts[2] = {zero_vec(k, n), zero_vec(k, n)};
  for (std::size_t i = 0; i < n; ++i) parts[a.parity(i)][i] = x[i];
  for (int px = 0; px < 2; ++px) {
    if (is_zero(parts[px])) continue;
    for (std::size_t i = 0; i < n; ++i) {
      Vec left = a.mul(xi.matrix.column(i), parts[px]);
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& lam = s[i * n + j];
        if (lam.is_zero()) continue;
        Vec term = conj(lam) * a.mul(left, unit_vec(k, n, j));
        out = (px && a.parity(i)) ? out - term : out + term;
      }
    }
  }
  return out;
}

Matrix action_matrix(const SuperAlgebra& a, const GradedMap& xi, const Vec& s) {
  const Field& k = a.field();
  const std::size_t n = a.dim();
  Matrix m(Field::rationals(), 2 * n, 2 * n);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    Vec x = zero_vec(k, n);
    x[c / 2] = c % 2 ? theta(k) : Scalar::one(k);
    m.set_column(c, realify(corestriction_module_action(a, xi, x, s)));
  }
  return m;
}

Matrix theta_matrix(const SuperAlgebra& a) {
  const Field& k = a.field();
  Matrix m(k, a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = theta(k);
  return realify(m, false);
}

std::vector<Matrix> cor_centralizer(const SuperAlgebra& a, const GradedMap& xi, const Corestriction& c) {
  const Field q = Field::rationals();
  const std::size_t d = 2 * a.dim();
  std::vector<Matrix> acts;
  for (const auto& s : c.basis) acts.push_back(action_matrix(a, xi, s));
  // f M_s - M_s f = 0, unknown f(r, c) at r * d + c.
  Matrix sys(q, acts.size() * d * d, d * d);
  for (std::size_t s = 0; s < acts.size(); ++s) {
    const Matrix& m = acts[s];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t col = 0; col < d; ++col) {
        const std::size_t row = (s * d + r) * d + col;
        for (std::size_t k = 0; k < d; ++k) {
          sys(row, r * d + k) += m(k, col);
          sys(row, k * d + col) -= m(r, k);
        }
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(sys)) {
    Matrix f(q, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t col = 0; col < d; ++col) f(r, col) = v[r * d + col];
    out.push_back(f);
  }
  return out;
}

bool in_span(const std::vector<Matrix>& basis, const Matrix& m) {
  if (basis.empty()) return false;
  const std::size_t r = m.rows(), c = m.cols();
  Matrix sys(m.field(), r * c, basis.size());
  Vec rhs(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      rhs[i * c + j] = m(i, j);
      for (std::size_t b = 0; b < basis.size(); ++b) sys(i * c + j, b) = basis[b](i, j);
    }
  return solve(sys, rhs).has_value();
}

std::vector<Vec> quadratic_cor_spanning_set(const SuperAlgebra& a) {
  const Field& k = a.field();
  require_quadratic(k);
  if (a.dim() != 2 || a.parity(1) != 1) throw Error(ErrorCode::UnsupportedShape, "expected K<sqrt mu>");
  const Scalar th = theta(k);
  auto e = [&](std::size_t i, std::size_t j) { return unit_vec(k, 4, i * 2 + j); };
  return {e(0, 0), th * e(1, 1), e(1, 0) + e(0, 1), th * (e(1, 0) - e(0, 1))};
}

// ---- obstruction ----------------------------------------------------------------

CorClass xi_square_class(const SuperAlgebra& a, const GradedMap& xi) {
  require_quadratic(a.field());
  if (!xi.semilinear || !check_superantiautomorphism(a, xi).ok)
    throw Error(ErrorCode::NotSemilinearAntiauto, "xi is not a semilinear superantiautomorphism");
  Element b = solve_inner(a, square(xi));
  auto c = as_scalar(superalg::apply(xi, b) * b);
  if (!c || c->is_zero() || !c->is_rational())
    throw Error(ErrorCode::InvalidAlgebra, "xi(b) b does not lie in the base field");
  CorClass out;
  out.b = b.coords();
  out.b_parity = b.parity();
  out.c = Scalar(Field::rationals(), c->re());
  out.t = tparam(a.field());
  out.split = out.b_parity == 0 && quaternion_is_split(out.t.re(), out.c.re());
  return out;
}

std::optional<GradedMap> second_kind_starter(const SuperAlgebra& a) {
  const Field& k = a.field();
  require_quadratic(k);
  const RecipePtr& r = a.recipe();
  if (!r) return std::nullopt;
  // x + y u -> conj(x) + conj(y) lambda u needs lambda^2 = -conj(mu) / mu.
  auto generator_scales = [&](const std::vector<Scalar>& mus) -> std::optional<std::vector<Scalar>> {
    std::vector<Scalar> out;
    for (const auto& mu : mus) {
      auto s = is_square(-conj(mu) / mu);
      if (!s.is_square) return std::nullopt;
      out.push_back(*s.witness);
    }
    return out;
  };
  std::optional<GradedMap> xi;
  switch (r->kind) {
    case RecipeKind::Quadratic:
    case RecipeKind::GradedQuaternion:
    case RecipeKind::Clifford: {
      auto lam = generator_scales(r->params);
      if (!lam) return std::nullopt;
      const std::size_t n = std::size_t{1} << lam->size();
      Matrix m(k, n, n);
      for (std::size_t s = 0; s < n; ++s) {
        Scalar d = Scalar::one(k);
        for (std::size_t g = 0; g < lam->size(); ++g)
          if (s >> g & 1) d *= (*lam)[g];
        m(s, s) = d;
      }
      xi = GradedMap{m, 0, true};
      break;
    }
    case RecipeKind::Matrix: {
      if (!r->children.empty()) return std::nullopt;
      HermitianSuperform h;
      h.delta = base_algebra(k);
      h.bar = GradedMap{Matrix::identity(k, 1), 0, true};
      h.d0 = r->n;
      h.d1 = r->m;
      h.gram.assign(h.size(), std::vector<Vec>(h.size(), zero_vec(k, 1)));
      for (std::size_t i = 0; i < h.size(); ++i) h.gram[i][i] = Vec{h.vparity(i) ? theta(k) : Scalar::one(k)};
      xi = adjoint_superinvolution(h, a);
      break;
    }
    case RecipeKind::Tensor: {
      SuperAlgebra l = build_from_recipe(r->children[0], k), rr = build_from_recipe(r->children[1], k);
      auto xl = second_kind_starter(l), xr = second_kind_starter(rr);
      if (!xl || !xr) return std::nullopt;
      xi = tensor_map(*xl, *xr);
      break;
    }
    default: {
      if (!a.is_trivially_graded() || !rational_constants(a)) return std::nullopt;
      auto s = recipe_involution(a);
      if (!s) return std::nullopt;
      xi = GradedMap{s->matrix, 0, true};
      break;
    }
  }
  if (!check_superantiautomorphism(a, *xi).ok) return std::nullopt;
  return xi;
}

// ---- decisions -------------------------------------------------------------------

Certificate decide_superinvolution_second_kind(const SuperAlgebra& a) {
  const Field& k = a.field();
  require_quadratic(k);
  Certificate c;
  c.property = WitnessProperty::Superinvolution;
  ClassificationReport rep = classify_css(a);
  c.trace.push_back("classified " + to_string(rep.type) + " over " + k.to_string());
  const RecipePtr& r = a.recipe();
  auto xi = second_kind_starter(a);
  if (!xi) {
    if (r && r->kind == RecipeKind::Quadratic) {
      c.trace.push_back("-conj(mu)/mu is not a square: no semilinear superantiautomorphism");
      return finish(c, Verdict::NotExists, "oddsecond");
    }
    c.trace.push_back("no starting semilinear superantiautomorphism for this recipe");
    return finish(c, Verdict::Unsupported, "unsupported");
  }
  c.trace.push_back("starter xi verified as a semilinear superantiautomorphism");
  CorClass cls = xi_square_class(a, *xi);
  c.invariant_data = cls.c;
  c.trace.push_back("xi^2 = iota_b with |b| = " + std::to_string(cls.b_parity) + ", xi(b) b = " + cls.c.to_string());
  if (cls.b_parity == 1) return finish(c, Verdict::NotExists, "le:xisquare");
  c.trace.push_back("quaternion (" + cls.t.to_string() + ", " + cls.c.to_string() + ") is " +
                    (cls.split ? "split" : "division"));
  if (!cls.split) return finish(c, Verdict::NotExists, "th:gradedalbert");
  auto ne = norm_equation(k.d(), cls.c.re());
  if (!ne.witness) {
    c.trace.push_back("norm equation solvable but no witness within the search bound");
    return finish(c, Verdict::Unsupported, "unsupported");
  }
  Scalar lam(k, ne.witness->re(), ne.witness->im());
  c.trace.push_back("lambda = " + lam.to_string() + " with N(lambda) = " + cls.c.to_string());
  Vec b = lam.inverse() * cls.b;
  // eta = iota_g xi with g = (kappa + b)^{-1}, N(kappa) = 1.
  std::vector<Scalar> kappas{Scalar::one(k), -Scalar::one(k)};
  for (long s = 1; s <= 20; ++s) {
    Scalar w = Scalar::one(k) + Scalar(k, s) * theta(k);
    kappas.push_back(w / conj(w));
  }
  for (const auto& kap : kappas) {
    auto g = invert(a.element(kap * a.unit() + b));
    if (!g) continue;
    GradedMap eta = compose(inner_automorphism(a, *g), *xi);
    if (!square(eta).matrix.is_identity()) continue;
    c.trace.push_back("eta = iota_g xi with g = (kappa + b)^{-1}, kappa = " + kap.to_string());
    return with_witness(c, a, eta, "th:gradedalbert");
  }
  c.trace.push_back("no invertible kappa + b found");
  return finish(c, Verdict::Unsupported, "unsupported");
}

Certificate quadratic_second_kind(const Scalar& mu) {
  const Field& k = mu.field();
  require_quadratic(k);
  if (mu.is_zero()) throw Error(ErrorCode::ZeroParameter, "mu = 0");
  SuperAlgebra a = quadratic_graded(mu);
  Certificate c;
  c.property = WitnessProperty::Superinvolution;
  const Scalar th = theta(k);
  Scalar n = norm(th * mu);
  c.invariant_data = Scalar(Field::rationals(), n.re());
  auto g = is_square(Scalar(Field::rationals(), n.re()));
  c.trace.push_back("N(theta mu) = " + n.re().get_str() + (g.is_square ? " is" : " is not") + " a square");
  if (!g.is_square) return finish(c, Verdict::NotExists, "oddsecond");
  Scalar alpha = Scalar::one(k);
  if (!(mu / th).is_rational()) {
    // w = theta mu / gamma has norm 1; w = delta / conj(delta) and alpha = conj(delta).
    Scalar w = th * mu / Scalar(k, g.witness->re());
    Scalar delta = w == -Scalar::one(k) ? th : Scalar::one(k) + w;
    alpha = conj(delta);
  }
  c.trace.push_back("alpha = " + alpha.to_string() + ", alpha^2 mu = " + (alpha * alpha * mu).to_string());
  Matrix m(k, 2, 2);
  m(0, 0) = Scalar::one(k);
  m(1, 1) = alpha / conj(alpha);
  return with_witness(c, a, GradedMap{m, 0, true}, "oddsecond");
}

Certificate odd_type_second_kind(const SuperAlgebra& a) {
  const Field& k = a.field();
  require_quadratic(k);
  ClassificationReport rep = classify_css(a);
  if (rep.type != CssType::Odd) throw Error(ErrorCode::NotOddType, "algebra is " + to_string(rep.type));
  const RecipePtr& r = a.recipe();
  if (r && r->kind == RecipeKind::Quadratic) return quadratic_second_kind(r->params[0]);
  if (!r || r->kind != RecipeKind::Tensor || r->children[1]->kind != RecipeKind::Quadratic)
    throw Error(ErrorCode::UnsupportedA0, "expected A_0 (x) K<sqrt mu>");
  SuperAlgebra a0 = build_from_recipe(r->children[0], k);
  if (!a0.is_trivially_graded() || !rational_constants(a0))
    throw Error(ErrorCode::UnsupportedA0, "A_0 must be trivially graded with rational constants");
  auto s = recipe_involution(a0);
  if (!s) throw Error(ErrorCode::UnsupportedA0, "no involution of A_0 available");
  GradedMap tau1{s->matrix, 0, true};
  Certificate q = quadratic_second_kind(r->children[1]->params[0]);
  Certificate c;
  c.property = WitnessProperty::Superinvolution;
  c.trace = q.trace;
  c.invariant_data = q.invariant_data;
  if (q.verdict != Verdict::Exists) return finish(c, q.verdict, q.reason_tag);
  c.trace.push_back("A_0 involution: recipe involution composed with conjugation");
  return with_witness(c, a, tensor_map(tau1, *q.witness), "oddtypesecond");
}

Certificate nu_square_second_kind_obstruction(const SuperAlgebra& a) {
  const Field& k = a.field();
  require_quadratic(k);
  Certificate c;
  c.property = WitnessProperty::SquareIsNu;
  const RecipePtr& r = a.recipe();
  const Scalar t = tparam(k);
  if (r && r->kind == RecipeKind::Quadratic) {
    const Scalar& mu = r->params[0];
    auto ne = norm_equation(k.d(), Rational(-1));
    c.trace.push_back(std::string("lambda conj(lambda) = -1 is ") + (ne.solvable ? "solvable" : "not solvable"));
    if (!ne.solvable) return finish(c, Verdict::NotExists, "nusquare");
    // phi(u) = lambda u with lambda^2 = -conj(mu)/mu and N(lambda) = -1.
    auto s = is_square(-conj(mu) / mu);
    if (!s.is_square || !(norm(*s.witness) == -Scalar::one(k))) {
      c.trace.push_back("no lambda with lambda^2 = -conj(mu)/mu and N(lambda) = -1");
      return finish(c, Verdict::NotExists, "nusquare");
    }
    Matrix m(k, 2, 2);
    m(0, 0) = Scalar::one(k);
    m(1, 1) = *s.witness;
    return with_witness(c, a, GradedMap{m, 0, true}, "nusquare");
  }
  ClassificationReport rep = classify_css(a);
  if (rep.type != CssType::Even) throw Error(ErrorCode::UnsupportedShape, "expected K<sqrt mu> or an even CSS");
  const Scalar& zsq = *rep.a;
  c.trace.push_back("z = " + rep.z->to_string() + ", z^2 = " + zsq.to_string());
  if (!zsq.is_rational()) throw Error(ErrorCode::UnsupportedShape, "z^2 is not in the base field");
  Rational z2 = zsq.re();
  bool plus = quaternion_is_split(t.re(), z2), minus = quaternion_is_split(t.re(), -z2);
  c.invariant_data = Scalar(Field::rationals(), z2);
  c.trace.push_back("(t, z^2) " + std::string(plus ? "split" : "division") + ", (t, -z^2) " +
                    (minus ? "split" : "division"));
  if (!plus && !minus) return finish(c, Verdict::NotExists, "nusquare");
  if (r && r->kind == RecipeKind::Matrix && r->children.empty()) {
    GradedMap phi = splitsuper_phi(r->n, r->m, a);
    phi.semilinear = true;
    return with_witness(c, a, phi, "nusquare");
  }
  c.trace.push_back("no witness construction for this recipe");
  return finish(c, Verdict::Unsupported, "unsupported");
}

}  // namespace superalg
