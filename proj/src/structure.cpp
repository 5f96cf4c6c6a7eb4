#include "superalg/constructors.hpp"
#include "superalg/superalg.hpp"

namespace superalg {

namespace {

// Solutions x supported on `cand` with x e_i = sign(x, e_i) e_i x for every i in `tests`.
std::vector<Vec> commutant(const SuperAlgebra& a, const std::vector<std::size_t>& cand,
                           const std::vector<std::size_t>& tests, bool super_sign, int cand_parity) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (cand.empty()) return {};
  // rows of x e - (+-) e x, read off the sparse table; zero rows dropped
  std::vector<Vec> rows;
  for (auto t : tests) {
    bool neg = super_sign && cand_parity && a.parity(t);
    std::vector<Vec> block(n, zero_vec(f, cand.size()));
    for (std::size_t c = 0; c < cand.size(); ++c) {
      for (const auto& term : a.product(cand[c], t)) block[term.index][c] += term.coeff;
      for (const auto& term : a.product(t, cand[c])) {
        if (neg) block[term.index][c] += term.coeff;
        else block[term.index][c] -= term.coeff;
      }
    }
    for (auto& r : block)
      if (!is_zero(r)) rows.push_back(std::move(r));
  }
  if (rows.empty()) rows.push_back(zero_vec(f, cand.size()));
  Matrix sys = Matrix::from_rows(f, cand.size(), rows);
  std::vector<Vec> out;
  for (const auto& v : nullspace(sys)) {
    Vec x = zero_vec(f, n);
    for (std::size_t c = 0; c < cand.size(); ++c) x[cand[c]] = v[c];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::size_t> all_indices(const SuperAlgebra& a) {
  std::vector<std::size_t> v(a.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<Element> to_elements(const SuperAlgebra& a, const std::vector<Vec>& vs) {
  std::vector<Element> out;
  for (const auto& v : vs) out.push_back(a.element(v));
  return out;
}

// Puts the unit first and keeps an independent spanning family.
std::vector<Vec> with_unit_first(const SuperAlgebra& a, const std::vector<Vec>& basis) {
  std::vector<Vec> all{a.unit()};
  all.insert(all.end(), basis.begin(), basis.end());
  std::vector<Vec> out;
  for (auto i : independent_subset(a.field(), all)) out.push_back(all[i]);
  return out;
}

Vec power(const SuperAlgebra& a, const Vec& x, Integer e) {
  Vec result = a.unit(), base = x;
  while (e > 0) {
    if (e % 2 == 1) result = a.mul(result, base);
    e /= 2;
    if (e > 0) base = a.mul(base, base);
  }
  return result;
}

}  // namespace

std::vector<Element> graded_center(const SuperAlgebra& a) {
  auto tests = all_indices(a);
  auto even = commutant(a, a.indices_of_parity(0), tests, true, 0);
  auto odd = commutant(a, a.indices_of_parity(1), tests, true, 1);
  even.insert(even.end(), odd.begin(), odd.end());
  return to_elements(a, even);
}

std::vector<Element> center(const SuperAlgebra& a) {
  auto tests = all_indices(a);
  auto even = commutant(a, a.indices_of_parity(0), tests, false, 0);
  auto odd = commutant(a, a.indices_of_parity(1), tests, false, 1);
  even.insert(even.end(), odd.begin(), odd.end());
  return to_elements(a, even);
}

std::vector<Element> center_even(const SuperAlgebra& a) {
  auto even = a.indices_of_parity(0);
  return to_elements(a, commutant(a, even, even, false, 0));
}

bool is_central(const SuperAlgebra& a) { return graded_center(a).size() == 1; }

bool is_semisimple(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  Vec tr(n);
  for (std::size_t k = 0; k < n; ++k) tr[k] = a.trace_left(unit_vec(a.field(), n, k));
  Matrix form(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) form(i, j) += t.coeff * tr[t.index];
  return rank(form) == n;
}

// Whether the commutative semisimple subalgebra spanned by `basis` (unit
// first) is a field.
bool commutative_is_field(const SuperAlgebra& a, const std::vector<Vec>& basis) {
  const Field& f = a.field();
  const std::size_t k = basis.size();
  if (k == 1) return true;
  Matrix coords = Matrix::from_columns(f, a.dim(), basis);
  if (k == 2) {
    auto c = solve(coords, a.mul(basis[1], basis[1]));
    if (!c) throw Error(ErrorCode::InvalidAlgebra, "center is not closed under multiplication");
    // w^2 = beta + alpha w
    Scalar beta = (*c)[0], alpha = (*c)[1];
    Scalar disc = alpha * alpha + Scalar(f, 4L) * beta;
    if (disc.is_zero()) return false;
    return !is_square(disc).is_square;
  }
  if (f.is_prime()) {
    // Frobenius is F_p-linear here; its fixed space counts the simple factors.
    Matrix frob(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = solve(coords, power(a, basis[i], Integer(static_cast<long>(f.p()))));
      if (!c) throw Error(ErrorCode::InvalidAlgebra, "center is not closed under multiplication");
      frob.set_column(i, *c);
    }
    return nullspace(frob - Matrix::identity(f, k)).size() == 1;
  }
  throw Error(ErrorCode::UnsupportedCenterFactorization,
              "center of dimension " + std::to_string(k) + " over " + f.to_string());
}

bool is_graded_simple(const SuperAlgebra& a) {
  if (!is_semisimple(a)) return false;
  std::vector<Vec> z0;
  for (const auto& z : center(a))
    if (a.parity_of(z.coords()) == 0) z0.push_back(z.coords());
  return commutative_is_field(a, with_unit_first(a, z0));
}

SuperAlgebra even_subalgebra(const SuperAlgebra& a) {
  auto idx = a.indices_of_parity(0);
  std::vector<std::size_t> pos(a.dim(), 0);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
  const std::size_t n = idx.size();
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(idx[i], idx[j])) table[i * n + j].push_back({pos[t.index], t.coeff});
  Vec unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = a.unit()[idx[i]];
  return SuperAlgebra(a.field(), std::vector<int>(n, 0), std::move(table), std::move(unit));
}

namespace {

// A pure quaternion basis (i, j) with i^2 = qa, j^2 = qb, ij = -ji, inside
// a 4-dimensional central simple algebra; nullopt if some pure element
// squares to zero (then the algebra is split).
struct QuatData {
  Scalar a, b;
  bool zero_square = false;
};

QuatData quaternion_symbols(const SuperAlgebra& q) {
  const Field& f = q.field();
  const std::size_t n = q.dim();
  Matrix tr(f, 1, n);
  for (std::size_t k = 0; k < n; ++k) tr(0, k) = q.trace_left(unit_vec(f, n, k));
  auto pure = nullspace(tr);
  QuatData out;
  auto square_scalar = [&](const Vec& x) { return as_scalar(q.element(q.mul(x, x))); };
  const Vec* ip = nullptr;
  for (const auto& x : pure) {
    auto s = square_scalar(x);
    if (s && !s->is_zero()) {
      out.a = *s;
      ip = &x;
      break;
    }
  }
  if (!ip) {
    out.zero_square = true;
    return out;
  }
  const Vec& i = *ip;
  // Pure elements anticommuting with i.
  Matrix sys(f, n, pure.size());
  for (std::size_t c = 0; c < pure.size(); ++c) sys.set_column(c, q.mul(i, pure[c]) + q.mul(pure[c], i));
  for (const auto& coeffs : nullspace(sys)) {
    Vec j = zero_vec(f, n);
    for (std::size_t c = 0; c < pure.size(); ++c) j = j + coeffs[c] * pure[c];
    auto s = square_scalar(j);
    if (!s) continue;
    if (s->is_zero()) {
      out.zero_square = true;
      return out;
    }
    out.b = *s;
    return out;
  }
  out.zero_square = true;
  return out;
}

}  // namespace

bool is_division_superalgebra(const SuperAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!invert(a.basis(i))) return false;
  SuperAlgebra a0 = even_subalgebra(a);
  if (!is_semisimple(a0)) return false;
  auto z = with_unit_first(a0, [&] {
    std::vector<Vec> v;
    for (const auto& e : center(a0)) v.push_back(e.coords());
    return v;
  }());
  if (!commutative_is_field(a0, z)) return false;
  // A_0 is simple with center C; odd basis vectors are invertible, so A is
  // division exactly when A_0 is.
  const std::size_t deg2 = a0.dim() / z.size();
  if (deg2 == 1) return true;
  if (a.field().is_prime()) return false;  // finite division rings are commutative
  if (deg2 == 4 && z.size() == 1) {
    QuatData qd = quaternion_symbols(a0);
    if (qd.zero_square) return false;
    if (a.field().is_rationals()) return !quaternion_is_split(qd.a.re(), qd.b.re());
    if (is_square(qd.a).is_square || is_square(qd.b).is_square) return false;
    throw Error(ErrorCode::UnsupportedDimension, "quaternion splitting over " + a.field().to_string());
  }
  throw Error(ErrorCode::UnsupportedDimension,
              "even part has degree^2 = " + std::to_string(deg2) + " over its center");
}

Element find_idempotent_for_minimal_ideal(const SuperAlgebra& a, const Element& x) {
  x.parity();
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back(a.mul(x.coords(), unit_vec(f, n, j)));
  std::vector<Vec> ideal;
  for (auto i : independent_subset(f, gens)) ideal.push_back(gens[i]);
  if (ideal.empty()) throw Error(ErrorCode::NotMinimal, "xA = 0");
  auto annihilates = [&](const Vec& y) {
    for (const auto& v : ideal)
      if (!is_zero(a.mul(y, v))) return false;
    return true;
  };
  Vec xp = x.coords();
  if (annihilates(xp)) {
    bool found = false;
    for (const auto& v : ideal)
      if (!annihilates(v)) {
        xp = v;
        found = true;
        break;
      }
    if (!found) throw Error(ErrorCode::NotMinimal, "xA squares to zero");
  }
  // e in I_0 with x' e = x'.
  std::vector<Vec> even_part;
  for (const auto& v : ideal)
    if (a.parity_of(v) == 0) even_part.push_back(v);
  if (even_part.empty()) throw Error(ErrorCode::NotMinimal, "ideal has no even part");
  Matrix sys(f, n, even_part.size());
  for (std::size_t c = 0; c < even_part.size(); ++c) sys.set_column(c, a.mul(xp, even_part[c]));
  auto coeffs = solve(sys, xp);
  if (!coeffs) throw Error(ErrorCode::NotMinimal, "x'e = x' has no solution in I_0");
  Vec e = zero_vec(f, n);
  for (std::size_t c = 0; c < even_part.size(); ++c) e = e + (*coeffs)[c] * even_part[c];
  if (a.mul(e, e) != e) throw Error(ErrorCode::NotMinimal, "solution is not idempotent");
  std::vector<Vec> eg;
  for (std::size_t j = 0; j < n; ++j) eg.push_back(a.mul(e, unit_vec(f, n, j)));
  std::vector<Vec> both = ideal;
  both.insert(both.end(), eg.begin(), eg.end());
  if (independent_subset(f, eg).size() != ideal.size() || independent_subset(f, both).size() != ideal.size())
    throw Error(ErrorCode::NotMinimal, "eA differs from xA");
  return a.element(e);
}

std::string to_string(CssType t) {
  switch (t) {
    case CssType::TriviallyGraded: return "TriviallyGraded";
    case CssType::Odd: return "Odd";
    case CssType::Even: return "Even";
  }
  return "?";
}

namespace {

std::size_t corner_dim(const SuperAlgebra& a, const Vec& e) {
  std::vector<Vec> vs;
  for (auto i : a.indices_of_parity(0)) vs.push_back(a.mul(a.mul(e, unit_vec(a.field(), a.dim(), i)), e));
  return independent_subset(a.field(), vs).size();
}

}  // namespace

ClassificationReport classify_css(const SuperAlgebra& a) {
  ClassificationReport r;
  r.is_central = is_central(a);
  r.is_graded_simple = is_graded_simple(a);
  if (!r.is_central || !r.is_graded_simple)
    throw Error(ErrorCode::NotCSS, r.is_central ? "not graded-simple" : "graded center is larger than F");
  const Field& f = a.field();
  const auto odd = a.indices_of_parity(1);
  const std::size_t dim0 = a.dim() - odd.size();
  if (odd.empty()) {
    r.type = CssType::TriviallyGraded;
    r.a0_summary = {dim0};
    return r;
  }
  auto tests = all_indices(a);
  auto z1 = commutant(a, odd, tests, false, 1);
  if (!z1.empty()) {
    Vec z = normalize_leading(z1[0]);
    auto sq = as_scalar(a.element(a.mul(z, z)));
    if (!sq || sq->is_zero()) throw Error(ErrorCode::NotCSS, "odd central element does not square into F^x");
    r.type = CssType::Odd;
    r.z = a.element(z);
    r.a = *sq;
    r.a0_summary = {dim0};
    return r;
  }
  auto zb = center_even(a);
  std::vector<Vec> zv;
  for (const auto& e : zb) zv.push_back(e.coords());
  zv = with_unit_first(a, zv);
  if (zv.size() != 2)
    throw Error(ErrorCode::NotCSS, "Z(A_0) has dimension " + std::to_string(zv.size()) + ", expected 2");
  const Vec& w = zv[1];
  auto c = solve(Matrix::from_columns(f, a.dim(), zv), a.mul(w, w));
  Scalar alpha = (*c)[1];
  Vec z = normalize_leading(w - (alpha / Scalar(f, 2L)) * a.unit());
  auto sq = as_scalar(a.element(a.mul(z, z)));
  if (!sq || sq->is_zero()) throw Error(ErrorCode::NotCSS, "z^2 is not a nonzero scalar");
  for (auto i : odd) {
    Vec e = unit_vec(f, a.dim(), i);
    if (!is_zero(a.mul(z, e) + a.mul(e, z))) throw Error(ErrorCode::NotCSS, "z does not anticommute with A_1");
  }
  r.type = CssType::Even;
  r.z = a.element(z);
  r.a = *sq;
  auto root = is_square(*sq);
  r.split = root.is_square;
  if (r.split) {
    Vec zp = root.witness->inverse() * z;
    Scalar half = Scalar(f, 1L) / Scalar(f, 2L);
    r.a0_summary = {corner_dim(a, half * (a.unit() + zp)), corner_dim(a, half * (a.unit() - zp))};
  } else {
    r.a0_summary = {dim0};
  }
  return r;
}

OddDecomposition odd_decompose(const SuperAlgebra& a) {
  ClassificationReport r = classify_css(a);
  if (r.type != CssType::Odd) throw Error(ErrorCode::NotOddType, "algebra is " + to_string(r.type));
  const Field& f = a.field();
  SuperAlgebra t = graded_tensor(trivially_graded(even_subalgebra(a)), quadratic_graded(*r.a));
  auto even = a.indices_of_parity(0);
  Matrix iso(f, a.dim(), t.dim());
  for (std::size_t i = 0; i < even.size(); ++i) {
    Vec b = unit_vec(f, a.dim(), even[i]);
    iso.set_column(2 * i, b);
    iso.set_column(2 * i + 1, a.mul(b, r.z->coords()));
  }
  if (!inverse(iso)) throw Error(ErrorCode::NotOddType, "decomposition map is not bijective");
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (t.parity(i) != a.parity_of(iso.column(i))) throw Error(ErrorCode::NotOddType, "map is not graded");
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Vec lhs = iso * t.mul(unit_vec(f, t.dim(), i), unit_vec(f, t.dim(), j));
      if (lhs != a.mul(iso.column(i), iso.column(j)))
        throw Error(ErrorCode::NotOddType, "map is not multiplicative");
    }
  }
  return OddDecomposition{t, iso};
}

EvenSplit even_split_idempotents(const SuperAlgebra& a) {
  ClassificationReport r = classify_css(a);
  if (r.type != CssType::Even || !r.split) throw Error(ErrorCode::NotSplitEven, "need an even CSS with z^2 a square");
  const Field& f = a.field();
  Scalar s = *is_square(*r.a).witness;
  Vec zp = s.inverse() * r.z->coords();
  Scalar half = Scalar(f, 1L) / Scalar(f, 2L);
  Vec ep = half * (a.unit() + zp), em = half * (a.unit() - zp);
  // nu fixes even elements, so e+ and e- are each nu-stable; the odd part
  // interchanges them: u e+ = e- u.
  for (auto i : a.indices_of_parity(1)) {
    Vec u = unit_vec(f, a.dim(), i);
    if (a.mul(u, ep) != a.mul(em, u)) throw Error(ErrorCode::NotSplitEven, "odd part does not swap e+ and e-");
  }
  return EvenSplit{a.element(ep), a.element(em), corner_dim(a, ep), corner_dim(a, em)};
}

}  // namespace superalg
