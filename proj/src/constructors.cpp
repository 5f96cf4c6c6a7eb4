#include "superalg/constructors.hpp"

#include <bit>

#include "superalg/secondkind.hpp"

namespace superalg {

namespace {

RecipePtr make_recipe(RecipeKind kind, std::vector<Scalar> params = {}, std::vector<RecipePtr> children = {},
                      int n = 0, int m = 0) {
  auto r = std::make_shared<Recipe>();
  r->kind = kind;
  r->params = std::move(params);
  r->children = std::move(children);
  r->n = n;
  r->m = m;
  return r;
}

// The recipe of b, or a raw leaf holding b when it has none.
RecipePtr recipe_or_raw(const SuperAlgebra& b) {
  if (b.recipe()) return b.recipe();
  auto r = std::make_shared<Recipe>();
  r->raw = std::make_shared<const SuperAlgebra>(b);
  return r;
}

std::vector<std::vector<Term>> copy_table(const SuperAlgebra& a) {
  std::vector<std::vector<Term>> t(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t[i * a.dim() + j] = a.product(i, j);
  return t;
}

void require_nonzero(const Scalar& s, ErrorCode code, const char* what) {
  if (s.is_zero()) throw Error(code, what);
}

}  // namespace

SuperAlgebra base_algebra(const Field& f) {
  std::vector<std::vector<Term>> table{{{0, Scalar::one(f)}}};
  return SuperAlgebra(f, {0}, std::move(table), {Scalar::one(f)}, make_recipe(RecipeKind::Matrix, {}, {}, 1, 0));
}

SuperAlgebra clifford(const Field& f, const std::vector<Scalar>& q) {
  if (q.size() > 6) throw Error(ErrorCode::TooLarge, "at most 6 generators");
  for (const auto& c : q) {
    require_nonzero(c, ErrorCode::ZeroCoefficient, "Clifford coefficient is zero");
    if (!(c.field() == f)) throw Error(ErrorCode::FieldMismatch, "Clifford coefficient field");
  }
  const std::size_t r = q.size();
  const std::size_t n = std::size_t{1} << r;
  std::vector<int> parity(n);
  for (std::size_t s = 0; s < n; ++s) parity[s] = std::popcount(s) % 2;
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      // Move each generator of t left past the larger generators of s.
      int swaps = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (t >> k & 1) swaps += std::popcount(s >> (k + 1));
      Scalar c = swaps % 2 ? -Scalar::one(f) : Scalar::one(f);
      for (std::size_t k = 0; k < r; ++k)
        if ((s & t) >> k & 1) c *= q[k];
      table[s * n + t].push_back({s ^ t, c});
    }
  return SuperAlgebra(f, std::move(parity), std::move(table), unit_vec(f, n, 0),
                      make_recipe(RecipeKind::Clifford, q));
}

SuperAlgebra ungraded_quaternion(const Scalar& a, const Scalar& b) {
  require_nonzero(a, ErrorCode::ZeroParameter, "quaternion parameter a is zero");
  require_nonzero(b, ErrorCode::ZeroParameter, "quaternion parameter b is zero");
  SuperAlgebra c = clifford(a.field(), {a, b});
  return SuperAlgebra(a.field(), {0, 0, 0, 0}, copy_table(c), c.unit(), make_recipe(RecipeKind::Quaternion, {a, b}));
}

SuperAlgebra trivially_graded(const SuperAlgebra& b) {
  return SuperAlgebra(b.field(), std::vector<int>(b.dim(), 0), copy_table(b), b.unit(),
                      make_recipe(RecipeKind::TriviallyGraded, {}, {recipe_or_raw(b)}));
}

SuperAlgebra quadratic_graded(const Scalar& a) {
  require_nonzero(a, ErrorCode::ZeroParameter, "quadratic parameter is zero");
  return clifford(a.field(), {a}).with_recipe(make_recipe(RecipeKind::Quadratic, {a}));
}

SuperAlgebra graded_quaternion(const Scalar& a, const Scalar& b) {
  require_nonzero(a, ErrorCode::ZeroParameter, "graded quaternion parameter a is zero");
  require_nonzero(b, ErrorCode::ZeroParameter, "graded quaternion parameter b is zero");
  return clifford(a.field(), {a, b}).with_recipe(make_recipe(RecipeKind::GradedQuaternion, {a, b}));
}

SuperAlgebra graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "tensor factors over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<int> parity(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) parity[i * nb + j] = a.parity(i) ^ b.parity(j);
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          bool neg = b.parity(j) && a.parity(k);
          auto& out = table[(i * nb + j) * n + (k * nb + l)];
          for (const auto& s : a.product(i, k))
            for (const auto& t : b.product(j, l)) {
              Scalar c = s.coeff * t.coeff;
              out.push_back({s.index * nb + t.index, neg ? -c : c});
            }
        }
  Vec unit = zero_vec(a.field(), n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  return SuperAlgebra(a.field(), std::move(parity), std::move(table), std::move(unit),
                      make_recipe(RecipeKind::Tensor, {}, {recipe_or_raw(a), recipe_or_raw(b)}));
}

SuperAlgebra matrix_superalgebra(int n, int m, const Field& f) {
  return matrix_superalgebra(n, m, base_algebra(f));
}

SuperAlgebra matrix_superalgebra(int n, int m, const SuperAlgebra& d) {
  if (n < 0 || m < 0 || n + m < 1) throw Error(ErrorCode::EmptyShape, "matrix shape needs n + m >= 1");
  const std::size_t big = static_cast<std::size_t>(n + m);
  const std::size_t dd = d.dim();
  const std::size_t dim = big * big * dd;
  auto block = [n](std::size_t i) { return i >= static_cast<std::size_t>(n) ? 1 : 0; };
  auto index = [&](std::size_t i, std::size_t j, std::size_t t) { return (i * big + j) * dd + t; };
  std::vector<int> parity(dim);
  for (std::size_t i = 0; i < big; ++i)
    for (std::size_t j = 0; j < big; ++j)
      for (std::size_t t = 0; t < dd; ++t) parity[index(i, j, t)] = block(i) ^ block(j) ^ d.parity(t);
  std::vector<std::vector<Term>> table(dim * dim);
  for (std::size_t i = 0; i < big; ++i)
    for (std::size_t j = 0; j < big; ++j)
      for (std::size_t l = 0; l < big; ++l)
        for (std::size_t t = 0; t < dd; ++t)
          for (std::size_t s = 0; s < dd; ++s) {
            auto& out = table[index(i, j, t) * dim + index(j, l, s)];
            for (const auto& term : d.product(t, s)) out.push_back({index(i, l, term.index), term.coeff});
          }
  Vec unit = zero_vec(d.field(), dim);
  for (std::size_t i = 0; i < big; ++i)
    for (std::size_t t = 0; t < dd; ++t) unit[index(i, i, t)] = d.unit()[t];
  bool base = dd == 1 && d.recipe() && d.recipe()->kind == RecipeKind::Matrix && d.recipe()->n == 1 &&
              d.recipe()->m == 0;
  std::vector<RecipePtr> children;
  if (!base) children.push_back(recipe_or_raw(d));
  return SuperAlgebra(d.field(), std::move(parity), std::move(table), std::move(unit),
                      make_recipe(RecipeKind::Matrix, {}, std::move(children), n, m));
}

SuperAlgebra superopposite(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool neg = a.parity(i) && a.parity(j);
      for (const auto& t : a.product(j, i)) table[i * n + j].push_back({t.index, neg ? -t.coeff : t.coeff});
    }
  return SuperAlgebra(a.field(), a.parities(), std::move(table), a.unit(),
                      make_recipe(RecipeKind::SuperOpposite, {}, {recipe_or_raw(a)}));
}

SuperAlgebra build_from_recipe(const RecipePtr& r, const Field& f) {
  if (!r) throw Error(ErrorCode::InvalidAlgebra, "missing recipe");
  auto param = [&](std::size_t i) {
    if (i >= r->params.size()) throw Error(ErrorCode::InvalidAlgebra, "recipe is missing parameters");
    return r->params[i];
  };
  auto child = [&](std::size_t i) {
    if (i >= r->children.size()) throw Error(ErrorCode::InvalidAlgebra, "recipe is missing a component");
    return build_from_recipe(r->children[i], f);
  };
  switch (r->kind) {
    case RecipeKind::Raw:
      if (!r->raw) throw Error(ErrorCode::InvalidAlgebra, "raw recipe without constants");
      return *r->raw;
    case RecipeKind::Quaternion: return ungraded_quaternion(param(0), param(1));
    case RecipeKind::TriviallyGraded: return trivially_graded(child(0));
    case RecipeKind::Quadratic: return quadratic_graded(param(0));
    case RecipeKind::GradedQuaternion: return graded_quaternion(param(0), param(1));
    case RecipeKind::Matrix:
      if (r->children.empty()) {
        if (r->n == 1 && r->m == 0) return base_algebra(f);
        return matrix_superalgebra(r->n, r->m, f);
      }
      return matrix_superalgebra(r->n, r->m, child(0));
    case RecipeKind::Tensor: return graded_tensor(child(0), child(1));
    case RecipeKind::Clifford: return clifford(f, r->params);
    case RecipeKind::SuperOpposite: return superopposite(child(0));
    case RecipeKind::Conjugate: return conjugate_superalgebra(child(0));
  }
  throw Error(ErrorCode::InvalidAlgebra, "unknown recipe");
}

}  // namespace superalg
