#include "superalg/firstkind.hpp"

#include <bit>
#include <functional>
#include <random>

#include "superalg/constructors.hpp"

namespace superalg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::NotExists: return "NotExists";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

std::string to_string(WitnessProperty p) {
  switch (p) {
    case WitnessProperty::Superinvolution: return "superinvolution";
    case WitnessProperty::Superantiautomorphism: return "superantiautomorphism";
    case WitnessProperty::SquareIsNu: return "square_is_nu";
  }
  return "?";
}

AxiomReport verify_witness(const SuperAlgebra& a, const Certificate& c) {
  if (!c.witness) return AxiomReport{false, std::nullopt, "certificate has no witness"};
  switch (c.property) {
    case WitnessProperty::Superinvolution: return check_superinvolution(a, *c.witness);
    case WitnessProperty::Superantiautomorphism: return check_superantiautomorphism(a, *c.witness);
    case WitnessProperty::SquareIsNu: {
      AxiomReport r = check_superantiautomorphism(a, *c.witness);
      if (!r.ok) return r;
      GradedMap sq = square(*c.witness);
      Matrix nu = grading_automorphism(a).matrix;
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (sq.matrix.column(j) != nu.column(j))
          return AxiomReport{false, std::make_pair(j, j), "phi^2(e" + std::to_string(j) + ") != nu(e" +
                                                              std::to_string(j) + ")"};
      return r;
    }
  }
  return AxiomReport{false, std::nullopt, "unknown property"};
}

// ---- ordinary involutions from recipes -------------------------------------

namespace {

struct SigmaPart {
  Matrix m;
  std::vector<int> parity;
};

Matrix diagonal(const Field& f, const std::vector<Scalar>& d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// x -> (2 / dim) Tr(L_x) - x, an involution for fields, quadratic algebras
// and quaternion algebras.
std::optional<GradedMap> trace_involution(const SuperAlgebra& b) {
  const std::size_t n = b.dim();
  if (n != 1 && n != 2 && n != 4) return std::nullopt;
  const Field& f = b.field();
  Scalar c = Scalar(f, 2L) / Scalar(f, static_cast<long>(n));
  Matrix m(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = unit_vec(f, n, j);
    m.set_column(j, (c * b.trace_left(e)) * b.unit() - e);
  }
  GradedMap s{m, 0, false};
  if (!is_ordinary_involution(b, s)) return std::nullopt;
  return s;
}

std::optional<SigmaPart> sigma_of(const RecipePtr& r, const Field& f) {
  const Scalar one = Scalar::one(f);
  auto clifford_part = [&](std::size_t gens) {
    const std::size_t n = std::size_t{1} << gens;
    std::vector<Scalar> d(n);
    std::vector<int> par(n);
    for (std::size_t s = 0; s < n; ++s) {
      int k = std::popcount(s);
      d[s] = (k * (k - 1) / 2) % 2 ? -one : one;
      par[s] = k % 2;
    }
    return SigmaPart{diagonal(f, d), par};
  };
  switch (r->kind) {
    case RecipeKind::Raw: {
      auto s = trace_involution(*r->raw);
      if (!s) return std::nullopt;
      return SigmaPart{s->matrix, r->raw->parities()};
    }
    case RecipeKind::Quaternion: return SigmaPart{diagonal(f, {one, -one, -one, -one}), {0, 0, 0, 0}};
    case RecipeKind::Quadratic: return SigmaPart{Matrix::identity(f, 2), {0, 1}};
    case RecipeKind::GradedQuaternion: return clifford_part(2);
    case RecipeKind::Clifford: return clifford_part(r->params.size());
    case RecipeKind::TriviallyGraded: {
      auto c = sigma_of(r->children.at(0), f);
      if (!c) return std::nullopt;
      c->parity.assign(c->parity.size(), 0);
      return c;
    }
    case RecipeKind::SuperOpposite: return sigma_of(r->children.at(0), f);
    case RecipeKind::Conjugate: {
      auto c = sigma_of(r->children.at(0), f);
      if (!c) return std::nullopt;
      c->m = conj(c->m);
      return c;
    }
    case RecipeKind::Matrix: {
      SigmaPart d{Matrix::identity(f, 1), {0}};
      if (!r->children.empty()) {
        auto c = sigma_of(r->children[0], f);
        if (!c) return std::nullopt;
        d = *c;
      }
      const std::size_t big = static_cast<std::size_t>(r->n + r->m), dd = d.parity.size();
      const std::size_t dim = big * big * dd;
      auto block = [&](std::size_t i) { return i >= static_cast<std::size_t>(r->n) ? 1 : 0; };
      SigmaPart out{Matrix(f, dim, dim), std::vector<int>(dim)};
      for (std::size_t i = 0; i < big; ++i)
        for (std::size_t j = 0; j < big; ++j)
          for (std::size_t t = 0; t < dd; ++t) {
            out.parity[(i * big + j) * dd + t] = block(i) ^ block(j) ^ d.parity[t];
            for (std::size_t u = 0; u < dd; ++u) out.m((j * big + i) * dd + u, (i * big + j) * dd + t) = d.m(u, t);
          }
      return out;
    }
    case RecipeKind::Tensor: {
      auto l = sigma_of(r->children.at(0), f);
      auto rr = sigma_of(r->children.at(1), f);
      if (!l || !rr) return std::nullopt;
      GradedMap t = tensor_map(GradedMap{l->m, 0, false}, GradedMap{rr->m, 0, false});
      const std::size_t nb = rr->parity.size();
      SigmaPart out{t.matrix, std::vector<int>(l->parity.size() * nb)};
      for (std::size_t i = 0; i < l->parity.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j) {
          const std::size_t col = i * nb + j;
          out.parity[col] = l->parity[i] ^ rr->parity[j];
          if (l->parity[i] && rr->parity[j])
            for (std::size_t row = 0; row < out.m.rows(); ++row) out.m(row, col) = -out.m(row, col);
        }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_ordinary_involution(const SuperAlgebra& a, const GradedMap& s) {
  const std::size_t n = a.dim();
  if (s.semilinear || s.parity || s.matrix.rows() != n || s.matrix.cols() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    auto p = a.parity_of(s.matrix.column(j));
    if (!p || *p != a.parity(j)) return false;
  }
  if (superalg::apply(s, a.unit()) != a.unit()) return false;
  if (!square(s).matrix.is_identity()) return false;
  std::vector<Vec> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = s.matrix.column(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (apply_to_product(a, s, i, j) != a.mul(cols[j], cols[i]))
        return false;
  return true;
}

std::optional<GradedMap> recipe_involution(const SuperAlgebra& a) {
  std::optional<GradedMap> s;
  if (!a.recipe()) {
    s = trace_involution(a);
  } else {
    auto part = sigma_of(a.recipe(), a.field());
    if (part && part->m.rows() == a.dim()) s = GradedMap{part->m, 0, false};
  }
  if (s && !is_ordinary_involution(a, *s)) return std::nullopt;
  return s;
}

// ---- witnesses ---------------------------------------------------------------

GradedMap splitsuper_superinvolution(int n, int m, const Field& f) {
  if (!(n == m || (n * m) % 2 == 0)) throw Error(ErrorCode::UnsupportedShape, "needs n = m or nm even");
  HermitianSuperform h;
  h.delta = base_algebra(f);
  h.bar = identity_map(h.delta);
  h.d0 = n;
  h.d1 = m;
  const std::size_t big = static_cast<std::size_t>(n + m);
  const auto nn = static_cast<std::size_t>(n);
  h.gram.assign(big, std::vector<Vec>(big, zero_vec(f, 1)));
  auto put = [&](std::size_t i, std::size_t j, long v) { h.gram[i][j] = Vec{Scalar(f, v)}; };
  if (n == m) {
    h.epsilon = -1;
    h.ell = 1;
    for (std::size_t i = 0; i < nn; ++i) {
      put(i, nn + i, 1);
      put(nn + i, i, -1);
    }
  } else if (m % 2 == 0) {
    h.epsilon = 1;
    for (std::size_t i = 0; i < nn; ++i) put(i, i, 1);
    for (std::size_t k = nn; k + 1 < big; k += 2) {
      put(k, k + 1, 1);
      put(k + 1, k, -1);
    }
  } else {
    h.epsilon = -1;
    for (std::size_t k = 0; k + 1 < nn; k += 2) {
      put(k, k + 1, 1);
      put(k + 1, k, -1);
    }
    for (std::size_t i = nn; i < big; ++i) put(i, i, 1);
  }
  return adjoint_superinvolution(h, endomorphism_algebra(h));
}

namespace {

Certificate finish(Certificate c, Verdict v, std::string tag) {
  c.verdict = v;
  c.reason_tag = std::move(tag);
  return c;
}

Certificate with_witness(Certificate c, const SuperAlgebra& a, GradedMap w, std::string tag) {
  c.witness = std::move(w);
  AxiomReport r = verify_witness(a, c);
  if (!r.ok) throw Error(ErrorCode::InvalidAlgebra, "constructed witness fails: " + r.detail);
  c.trace.push_back("witness verified as " + to_string(c.property));
  return finish(std::move(c), Verdict::Exists, std::move(tag));
}

std::string describe(const ClassificationReport& r) {
  std::string s = "classified " + to_string(r.type);
  if (r.a) s += ", z^2 = " + r.a->to_string();
  if (r.type == CssType::Even) s += r.split ? ", split" : ", Z(A_0) is a field";
  return s;
}

// tau(x) = s(x) z'^{|x|} with z'^2 = 1. It squares to the identity when
// s(z') = -z' and to nu when s(z') = z'; s is twisted by an odd element to
// reach the requested case.
std::optional<GradedMap> sigma_trick(const SuperAlgebra& a, const ClassificationReport& rep, bool involution,
                                     std::vector<std::string>& trace) {
  auto s = recipe_involution(a);
  if (!s || !rep.a || !rep.z) return std::nullopt;
  auto root = is_square(*rep.a);
  if (!root.is_square) return std::nullopt;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Vec zp = root.witness->inverse() * rep.z->coords();
  Vec want = involution ? -zp : zp;
  if (superalg::apply(*s, zp) != want) {
    std::optional<GradedMap> flipped;
    for (auto h : a.indices_of_parity(1)) {
      Vec hv = unit_vec(f, n, h);
      Vec sh = superalg::apply(*s, hv);
      for (const Vec& g : {hv + sh, hv - sh}) {
        if (is_zero(g)) continue;
        auto gi = invert(a.element(g));
        if (!gi) continue;
        Matrix m(f, n, n);
        for (std::size_t j = 0; j < n; ++j) m.set_column(j, a.mul(a.mul(g, s->matrix.column(j)), gi->coords()));
        GradedMap cand{m, 0, false};
        if (superalg::apply(cand, zp) == want && is_ordinary_involution(a, cand)) {
          flipped = cand;
          break;
        }
      }
      if (flipped) break;
    }
    if (!flipped) return std::nullopt;
    s = flipped;
    trace.push_back("recipe involution conjugated by an odd element to flip s(z)");
  }
  Matrix t(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = s->matrix.column(j);
    if (a.parity(j)) col = a.mul(col, zp);
    t.set_column(j, col);
  }
  trace.push_back(std::string("tau(x) = s(x) z'^{|x|}, s(z') = ") + (involution ? "-z'" : "z'"));
  return GradedMap{t, 0, false};
}

// Even x -> s0(x), odd x -> sq * s0(x z^{-1}) z, for an antiautomorphism s0
// of the even part and sq^2 = -1.
GradedMap odd_type_map(const SuperAlgebra& a, const std::function<Vec(const Vec&)>& s0, const Vec& z,
                       const Scalar& sq) {
  const std::size_t n = a.dim();
  auto zi = invert(a.element(z));
  if (!zi) throw Error(ErrorCode::NotInvertible, "central odd element is singular");
  Matrix m(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = unit_vec(a.field(), n, j);
    if (a.parity(j) == 0)
      m.set_column(j, s0(e));
    else
      m.set_column(j, sq * a.mul(s0(a.mul(e, zi->coords())), z));
  }
  return GradedMap{m, 0, false};
}

enum class ConicStatus { Solved, NoSolution, Unknown };

// alpha^2 + r beta^2 = -1.
ConicStatus solve_conic(const Scalar& r, Scalar& alpha, Scalar& beta, std::vector<std::string>& trace) {
  const Field& f = r.field();
  if (f.is_prime()) {
    for (long x = 0; x < f.p(); ++x)
      for (long y = 0; y < f.p(); ++y) {
        Scalar sx(f, x), sy(f, y);
        if (sx * sx + r * sy * sy == -Scalar::one(f)) {
          alpha = sx;
          beta = sy;
          return ConicStatus::Solved;
        }
      }
    return ConicStatus::NoSolution;
  }
  if (!f.is_rationals()) return ConicStatus::Unknown;
  Scalar d = -r;
  if (auto sq = is_square(d); sq.is_square) {
    alpha = Scalar::zero(f);
    beta = sq.witness->inverse();
    return ConicStatus::Solved;
  }
  auto rep = square_class_representative(d);
  if (!rep) return ConicStatus::Unknown;
  auto s = is_square(d / *rep);
  long dd = rep->re().get_num().get_si();
  trace.push_back("conic reduced to N(x + y sqrt(" + std::to_string(dd) + ")) = -1");
  auto ne = norm_equation(dd, Rational(-1));
  if (!ne.solvable) return ConicStatus::NoSolution;
  if (!ne.witness) return ConicStatus::Unknown;
  alpha = Scalar(f, ne.witness->re());
  beta = Scalar(f, ne.witness->im()) / *s.witness;
  return ConicStatus::Solved;
}

// phi(u) = alpha u + beta v, phi(v) = -(beta b / a) u + alpha v on <a, b>.
GradedMap quaternion_conic_map(const SuperAlgebra& q, const Scalar& a, const Scalar& b, const Scalar& alpha,
                               const Scalar& beta) {
  const Field& f = q.field();
  Vec pu{Scalar::zero(f), alpha, beta, Scalar::zero(f)};
  Vec pv{Scalar::zero(f), -(beta * b / a), alpha, Scalar::zero(f)};
  Matrix m(f, 4, 4);
  m.set_column(0, q.unit());
  m.set_column(1, pu);
  m.set_column(2, pv);
  m.set_column(3, -q.mul(pv, pu));
  return GradedMap{m, 0, false};
}

std::optional<std::size_t> first_invertible(const SuperAlgebra& a, int parity) {
  for (auto i : a.indices_of_parity(parity))
    if (invert(a.basis(i))) return i;
  return std::nullopt;
}

}  // namespace

// ---- decisions --------------------------------------------------------------

Certificate decide_superinvolution_first_kind(const SuperAlgebra& a) {
  Certificate c;
  c.property = WitnessProperty::Superinvolution;
  ClassificationReport rep = classify_css(a);
  c.trace.push_back(describe(rep));
  const RecipePtr& r = a.recipe();
  if (rep.type == CssType::Odd) {
    c.invariant_data = rep.a;
    c.trace.push_back("odd central element z found");
    return finish(c, Verdict::NotExists, r && r->kind == RecipeKind::Quadratic ? "quadrsinv" : "th:oddfirstkind");
  }
  if (rep.type == CssType::TriviallyGraded) {
    if (auto s = recipe_involution(a)) return with_witness(c, a, *s, "trivialgrading");
    c.trace.push_back("no involution available for this recipe");
    return finish(c, Verdict::Unsupported, "unsupported");
  }
  c.invariant_data = rep.a;
  if (!rep.split) {
    std::string tag = "th:evenfirstkind";
    try {
      bool div = is_division_superalgebra(a);
      c.trace.push_back(std::string("division test: ") + (div ? "yes" : "no"));
      if (div) tag = a.dim() == 4 ? "lemmaquatinv" : "evendivision";
    } catch (const Error& e) {
      c.trace.push_back(std::string("division test skipped: ") + e.what());
    }
    return finish(c, Verdict::NotExists, tag);
  }
  if (!r) {
    c.trace.push_back("split even input without a recipe");
    return finish(c, Verdict::Unsupported, "unsupported");
  }
  if (r->kind == RecipeKind::Matrix && r->children.empty()) {
    c.trace.push_back("shape n = " + std::to_string(r->n) + ", m = " + std::to_string(r->m));
    if (r->n == r->m || (r->n * r->m) % 2 == 0)
      return with_witness(c, a, splitsuper_superinvolution(r->n, r->m, a.field()), "splitsuper");
    c.trace.push_back("n != m and nm odd");
    return finish(c, Verdict::NotExists, "splitsuper");
  }
  if (r->kind == RecipeKind::Matrix && r->children[0]->kind == RecipeKind::Quaternion) {
    SuperAlgebra d = build_from_recipe(r->children[0], a.field());
    HermitianSuperform h;
    h.delta = d;
    const Scalar one = Scalar::one(a.field());
    h.bar = GradedMap{diagonal(a.field(), {one, -one, -one, -one}), 0, false};
    h.d0 = r->n;
    h.d1 = r->m;
    const std::size_t big = h.size();
    h.gram.assign(big, std::vector<Vec>(big, zero_vec(a.field(), 4)));
    for (std::size_t i = 0; i < big; ++i) h.gram[i][i] = unit_vec(a.field(), 4, h.vparity(i) ? 1 : 0);
    c.trace.push_back("hermitian form diag(1, ..., 1, i, ..., i) over the quaternion algebra");
    return with_witness(c, a, adjoint_superinvolution(h, a), "evensplit");
  }
  if (auto tau = sigma_trick(a, rep, true, c.trace)) return with_witness(c, a, *tau, "evensplit");
  c.trace.push_back("no recipe involution reaches s(z') = -z'");
  return finish(c, Verdict::Unsupported, "unsupported");
}

Certificate decide_superantiautomorphism(const SuperAlgebra& a) {
  Certificate c;
  c.property = WitnessProperty::Superantiautomorphism;
  const Field& f = a.field();
  const RecipePtr& r = a.recipe();
  ClassificationReport rep = classify_css(a);
  c.trace.push_back(describe(rep));
  auto minus_one = is_square(-Scalar::one(f));
  if (r && r->kind == RecipeKind::Quadratic) {
    c.trace.push_back(std::string("-1 is ") + (minus_one.is_square ? "" : "not ") + "a square");
    if (!minus_one.is_square) return finish(c, Verdict::NotExists, "quadrsanti");
    Matrix m = diagonal(f, {Scalar::one(f), *minus_one.witness});
    return with_witness(c, a, GradedMap{m, 0, false}, "quadrsanti");
  }
  if (rep.type == CssType::TriviallyGraded) {
    if (auto s = recipe_involution(a)) return with_witness(c, a, *s, "trivialgrading");
    return finish(c, Verdict::Unsupported, "unsupported");
  }
  if (rep.type == CssType::Odd) {
    c.invariant_data = rep.a;
    c.trace.push_back(std::string("-1 is ") + (minus_one.is_square ? "" : "not ") + "a square");
    if (!minus_one.is_square) return finish(c, Verdict::NotExists, "oddsuperanti");
    auto s = recipe_involution(a);
    if (!s) {
      c.trace.push_back("no antiautomorphism of A_0 available");
      return finish(c, Verdict::Unsupported, "unsupported");
    }
    c.trace.push_back("A_0 antiautomorphism from the recipe involution");
    auto s0 = [&](const Vec& x) { return superalg::apply(*s, x); };
    return with_witness(c, a, odd_type_map(a, s0, rep.z->coords(), *minus_one.witness), "oddsuperanti");
  }
  c.invariant_data = rep.a;
  if (rep.split) {
    if (r && r->kind == RecipeKind::Matrix && r->children.empty())
      return with_witness(c, a, splitsuper_phi(r->n, r->m, a), "splitsuper");
    if (auto tau = sigma_trick(a, rep, false, c.trace)) return with_witness(c, a, *tau, "evensplit");
    return finish(c, Verdict::Unsupported, "unsupported");
  }
  if (r && ((r->kind == RecipeKind::GradedQuaternion) || (r->kind == RecipeKind::Clifford && r->params.size() == 2))) {
    const Scalar &qa = r->params[0], &qb = r->params[1];
    Scalar alpha(f), beta(f);
    c.trace.push_back("solving alpha^2 + (b/a) beta^2 = -1");
    switch (solve_conic(qb / qa, alpha, beta, c.trace)) {
      case ConicStatus::Solved:
        c.trace.push_back("alpha = " + alpha.to_string() + ", beta = " + beta.to_string());
        return with_witness(c, a, quaternion_conic_map(a, qa, qb, alpha, beta), "conic");
      case ConicStatus::NoSolution:
        c.trace.push_back("conic has no point");
        return finish(c, Verdict::NotExists, "conic");
      case ConicStatus::Unknown:
        c.trace.push_back("conic not decided over " + f.to_string());
        return finish(c, Verdict::Unsupported, "unsupported");
    }
  }
  if (r && r->kind == RecipeKind::SuperOpposite) {
    // same underlying space; a superantiautomorphism of B is one of B^sop
    Certificate cb = decide_superantiautomorphism(build_from_recipe(r->children[0], f));
    c.trace.push_back("decided on the superopposite");
    c.trace.insert(c.trace.end(), cb.trace.begin(), cb.trace.end());
    if (cb.witness) return with_witness(c, a, *cb.witness, cb.reason_tag);
    return finish(c, cb.verdict, cb.reason_tag);
  }
  if (r && r->kind == RecipeKind::Tensor) {
    SuperAlgebra l = build_from_recipe(r->children[0], f), rr = build_from_recipe(r->children[1], f);
    Certificate cl = decide_superantiautomorphism(l), cr = decide_superantiautomorphism(rr);
    if (cl.witness && cr.witness) {
      c.trace.push_back("tensor of the factor superantiautomorphisms");
      return with_witness(c, a, tensor_map(*cl.witness, *cr.witness), "tensor");
    }
    c.trace.push_back("a factor has no superantiautomorphism; the product is not decided");
  }
  return finish(c, Verdict::Unsupported, "unsupported");
}

// ---- invariant and normalization ---------------------------------------------

SquareInvariant superanti_square_invariant(const SuperAlgebra& a, const GradedMap& eta) {
  if (!check_superantiautomorphism(a, eta).ok)
    throw Error(ErrorCode::NotAntiautomorphism, "eta is not a superantiautomorphism");
  ClassificationReport rep = classify_css(a);
  if (rep.type != CssType::Even) throw Error(ErrorCode::NotEvenCSS, "algebra is " + to_string(rep.type));
  Element av = solve_inner(a, square(eta));
  Element ea = superalg::apply(eta, av);
  auto k = as_scalar(av * ea);
  auto k2 = as_scalar(ea * av);
  if (!k || !k2 || !(*k == *k2) || k->is_zero())
    throw Error(ErrorCode::InvalidAlgebra, "a eta(a) is not a nonzero scalar");
  return SquareInvariant{av, *k, square_class_representative(*k)};
}

bool check_z_square_corollary(const SuperAlgebra& a, const GradedMap& eta) {
  SquareInvariant inv = superanti_square_invariant(a, eta);
  ClassificationReport rep = classify_css(a);
  return square_class_equal(inv.value, *rep.a);
}

namespace {

// For eta with eta^2 = iota_a (a even) and a central even lambda with
// lambda^2 = a eta(a) fixed by eta, finds even g with a^{-1} eta(g) =
// lambda^{-1} g; then (iota_g eta)^2 = iota_lambda.
std::optional<GradedMap> albert_step(const SuperAlgebra& b, const GradedMap& eta, const Vec& av, const Vec& lambda,
                                     const GradedMap& target, std::mt19937& rng) {
  const Field& f = b.field();
  const std::size_t n = b.dim();
  auto ai = invert(b.element(av));
  auto li = invert(b.element(lambda));
  if (!ai || !li) return std::nullopt;
  std::vector<Vec> cands;
  for (const Vec& w : {b.unit() + b.mul(li->coords(), av), b.unit() - b.mul(li->coords(), av)})
    if (auto wi = invert(b.element(w))) cands.push_back(wi->coords());
  auto evens = b.indices_of_parity(0);
  for (const Vec& l : {li->coords(), -li->coords()}) {
    Matrix sys(f, n, evens.size());
    for (std::size_t c = 0; c < evens.size(); ++c) {
      Vec e = unit_vec(f, n, evens[c]);
      sys.set_column(c, b.mul(ai->coords(), eta.matrix.column(evens[c])) - b.mul(l, e));
    }
    auto ns = nullspace(sys);
    auto lift = [&](const Vec& coeffs) {
      Vec g = zero_vec(f, n);
      for (std::size_t c = 0; c < evens.size(); ++c) g[evens[c]] = coeffs[c];
      return g;
    };
    for (const auto& v : ns) cands.push_back(lift(v));
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int t = 0; t < 6 && !ns.empty(); ++t) {
      Vec comb = zero_vec(f, evens.size());
      for (const auto& v : ns) comb = comb + Scalar(f, coef(rng)) * v;
      cands.push_back(lift(comb));
    }
  }
  for (const auto& g : cands) {
    if (is_zero(g) || !invert(b.element(g))) continue;
    GradedMap psi = compose(inner_automorphism(b, b.element(g)), eta);
    if (square(psi) == target) return psi;
  }
  return std::nullopt;
}

Element random_even_invertible(const SuperAlgebra& b, std::mt19937& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  auto evens = b.indices_of_parity(0);
  for (;;) {
    Vec x = zero_vec(b.field(), b.dim());
    for (auto i : evens) x[i] = Scalar(b.field(), coef(rng));
    Element e = b.element(x);
    if (!e.is_zero() && invert(e)) return e;
  }
}

// The graded (z given) or ungraded (z absent) normalization: the result
// squares to nu, resp. to the identity.
std::optional<GradedMap> albert_core(const SuperAlgebra& b, GradedMap eta, const std::optional<Vec>& z,
                                     std::vector<std::string>& trace) {
  const Field& f = b.field();
  GradedMap target = z ? grading_automorphism(b) : identity_map(b);
  if (z && superalg::apply(eta, *z) == -*z) {
    auto u = first_invertible(b, 1);
    if (!u) return std::nullopt;
    eta = compose(inner_automorphism(b, b.basis(*u)), eta);
    trace.push_back("eta(z) = -z; replaced eta by iota_u eta with u = e" + std::to_string(*u));
  }
  std::mt19937 rng(20231);
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (attempt > 0) eta = compose(inner_automorphism(b, random_even_invertible(b, rng)), eta);
    Element av = solve_inner(b, square(eta));
    if (av.parity() != 0) throw Error(ErrorCode::InvalidAlgebra, "eta^2 is inner by an odd element");
    auto kappa = as_scalar(av * superalg::apply(eta, av));
    if (!kappa || kappa->is_zero()) throw Error(ErrorCode::InvalidAlgebra, "a eta(a) is not a nonzero scalar");
    Vec lambda;
    if (z) {
      Scalar zsq = *as_scalar(b.element(b.mul(*z, *z)));
      auto y = is_square(*kappa / zsq);
      if (!y.is_square)
        throw Error(ErrorCode::NonSquareInvariant, "a eta(a) / z^2 = " + (*kappa / zsq).to_string() + " is not a square");
      lambda = *y.witness * *z;
    } else {
      auto y = is_square(*kappa);
      if (!y.is_square) throw Error(ErrorCode::NonSquareInvariant, "a eta(a) = " + kappa->to_string() + " is not a square");
      lambda = *y.witness * b.unit();
    }
    if (attempt == 0) trace.push_back("a eta(a) = " + kappa->to_string());
    if (auto psi = albert_step(b, eta, av.coords(), lambda, target, rng)) {
      if (attempt > 0) trace.push_back("retried after " + std::to_string(attempt) + " even twists");
      return psi;
    }
  }
  (void)f;
  return std::nullopt;
}

}  // namespace

Certificate normalize_to_grading(const SuperAlgebra& a, const GradedMap& eta) {
  if (!check_superantiautomorphism(a, eta).ok)
    throw Error(ErrorCode::NoSuperantiautomorphism, "input map is not a superantiautomorphism");
  Certificate c;
  c.property = WitnessProperty::SquareIsNu;
  GradedMap nu = grading_automorphism(a);
  if (square(eta) == nu) {
    c.trace.push_back("input already squares to nu");
    return with_witness(c, a, eta, "albertgraded");
  }
  ClassificationReport rep = classify_css(a);
  c.trace.push_back(describe(rep));
  const RecipePtr& r = a.recipe();
  switch (rep.type) {
    case CssType::TriviallyGraded: {
      if (auto phi = albert_core(a, eta, std::nullopt, c.trace)) return with_witness(c, a, *phi, "albert");
      break;
    }
    case CssType::Odd: {
      auto evens = a.indices_of_parity(0);
      SuperAlgebra a0 = even_subalgebra(a);
      auto s0 = albert_core(a0, restrict_map(eta, evens), std::nullopt, c.trace);
      auto sq = is_square(-Scalar::one(a.field()));
      if (!s0 || !sq.is_square) break;
      c.trace.push_back("phi = s0 (x) s on A_0 (x) Z(A)");
      auto lifted = [&](const Vec& x) {
        Vec small(evens.size());
        for (std::size_t i = 0; i < evens.size(); ++i) small[i] = x[evens[i]];
        Vec img = superalg::apply(*s0, small);
        Vec out = zero_vec(a.field(), a.dim());
        for (std::size_t i = 0; i < evens.size(); ++i) out[evens[i]] = img[i];
        return out;
      };
      return with_witness(c, a, odd_type_map(a, lifted, rep.z->coords(), *sq.witness), "albertgraded");
    }
    case CssType::Even: {
      if (r && r->kind == RecipeKind::Matrix && r->children.empty())
        return with_witness(c, a, splitsuper_phi(r->n, r->m, a), "splitsuper");
      if (auto phi = albert_core(a, eta, rep.z->coords(), c.trace)) return with_witness(c, a, *phi, "albertgradeddiv");
      if (rep.split)
        if (auto tau = sigma_trick(a, rep, false, c.trace)) return with_witness(c, a, *tau, "albertgraded");
      break;
    }
  }
  c.trace.push_back("no invertible normalizing element found");
  return finish(c, Verdict::Unsupported, "unsupported");
}

Certificate clifford_first_kind(const Field& f, const std::vector<Scalar>& q) {
  SuperAlgebra a = clifford(f, q);
  Certificate c;
  c.property = WitnessProperty::Superinvolution;
  c.trace.push_back("dim q = " + std::to_string(q.size()));
  if (q.empty()) return with_witness(c, a, identity_map(a), "cliffordsplit");
  if (q.size() % 2 == 1) {
    c.trace.push_back("odd dimension");
    return finish(c, Verdict::NotExists, "cliffordodd");
  }
  ClassificationReport rep = classify_css(a);
  c.trace.push_back(describe(rep));
  c.invariant_data = rep.a;
  if (!rep.split) return finish(c, Verdict::NotExists, "cliffordfield");
  Certificate d = decide_superinvolution_first_kind(a);
  c.trace.insert(c.trace.end(), d.trace.begin(), d.trace.end());
  if (d.verdict != Verdict::Exists) return finish(c, d.verdict, d.reason_tag);
  c.witness = d.witness;
  return finish(c, Verdict::Exists, "cliffordsplit");
}

}  // namespace superalg
