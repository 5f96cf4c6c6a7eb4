#include "superalg/superalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace superalg {

std::string Recipe::to_string() const {
  std::ostringstream os;
  auto join_params = [&] {
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i].to_string();
  };
  switch (kind) {
    case RecipeKind::Raw: os << "raw"; break;
    case RecipeKind::Quaternion: os << "quaternion("; join_params(); os << ")"; break;
    case RecipeKind::TriviallyGraded: os << "trivially_graded(" << children[0]->to_string() << ")"; break;
    case RecipeKind::Quadratic: os << "quadratic("; join_params(); os << ")"; break;
    case RecipeKind::GradedQuaternion: os << "gquat("; join_params(); os << ")"; break;
    case RecipeKind::Matrix:
      os << "matrix(" << n << "," << m;
      if (!children.empty()) os << "," << children[0]->to_string();
      os << ")";
      break;
    case RecipeKind::Tensor:
      os << "tensor(" << children[0]->to_string() << "," << children[1]->to_string() << ")";
      break;
    case RecipeKind::Clifford: os << "clifford("; join_params(); os << ")"; break;
    case RecipeKind::SuperOpposite: os << "sop(" << children[0]->to_string() << ")"; break;
    case RecipeKind::Conjugate: os << "conj(" << children[0]->to_string() << ")"; break;
  }
  return os.str();
}

// ---- SuperAlgebra ------------------------------------------------------------

namespace {

void add_term(std::vector<Term>& acc, std::size_t index, const Scalar& c) {
  for (auto it = acc.begin(); it != acc.end(); ++it) {
    if (it->index == index) {
      it->coeff += c;
      if (it->coeff.is_zero()) acc.erase(it);
      return;
    }
  }
  if (!c.is_zero()) acc.push_back({index, c});
}

bool same_terms(std::vector<Term> a, std::vector<Term> b) {
  if (a.size() != b.size()) return false;
  auto by_index = [](const Term& x, const Term& y) { return x.index < y.index; };
  std::sort(a.begin(), a.end(), by_index);
  std::sort(b.begin(), b.end(), by_index);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || !(a[i].coeff == b[i].coeff)) return false;
  return true;
}

}  // namespace

SuperAlgebra::SuperAlgebra(const Field& f, std::vector<int> parity, std::vector<std::vector<Term>> table,
                           Vec unit, RecipePtr recipe) {
  const std::size_t n = parity.size();
  if (n == 0) throw Error(ErrorCode::InvalidAlgebra, "dimension must be positive");
  if (table.size() != n * n) throw Error(ErrorCode::InvalidAlgebra, "structure table has wrong size");
  if (unit.size() != n) throw Error(ErrorCode::InvalidAlgebra, "unit has wrong length");
  for (int p : parity)
    if (p != 0 && p != 1) throw Error(ErrorCode::InvalidAlgebra, "parity entries must be 0 or 1");
  if (f.is_prime() && static_cast<std::size_t>(f.p()) <= n)
    throw Error(ErrorCode::InvalidField, "GF(p) requires p > dim = " + std::to_string(n));
  for (auto& terms : table) {
    std::vector<Term> clean;
    for (auto& t : terms) {
      if (t.index >= n) throw Error(ErrorCode::InvalidAlgebra, "structure constant index out of range");
      if (!(t.coeff.field() == f)) throw Error(ErrorCode::FieldMismatch, "structure constant field");
      add_term(clean, t.index, t.coeff);
    }
    terms = std::move(clean);
  }
  for (const auto& s : unit)
    if (!(s.field() == f)) throw Error(ErrorCode::FieldMismatch, "unit field");

  auto impl = std::make_shared<Impl>();
  impl->field = f;
  impl->parity = std::move(parity);
  impl->table = std::move(table);
  impl->unit = std::move(unit);
  impl->recipe = std::move(recipe);
  const auto& par = impl->parity;
  const auto& tab = impl->table;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : tab[i * n + j])
        if (par[t.index] != (par[i] ^ par[j]))
          throw Error(ErrorCode::InvalidAlgebra, "grading violated by e" + std::to_string(i) + "*e" +
                                                     std::to_string(j));
  for (std::size_t i = 0; i < n; ++i)
    if (!impl->unit[i].is_zero() && par[i] != 0) throw Error(ErrorCode::InvalidAlgebra, "unit is not even");

  // e_i e_j e_k both ways.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& ij = tab[i * n + j];
        const auto& jk = tab[j * n + k];
        if (ij.size() <= 1 && jk.size() <= 1) {
          // monomial tables: compare single terms without building vectors
          const std::vector<Term>* l = ij.empty() ? nullptr : &tab[ij[0].index * n + k];
          const std::vector<Term>* r = jk.empty() ? nullptr : &tab[i * n + jk[0].index];
          std::size_t ls = l ? l->size() : 0, rs = r ? r->size() : 0;
          if (ls <= 1 && rs <= 1) {
            bool ok = ls == rs &&
                      (ls == 0 || ((*l)[0].index == (*r)[0].index &&
                                   ij[0].coeff * (*l)[0].coeff == jk[0].coeff * (*r)[0].coeff));
            if (!ok)
              throw Error(ErrorCode::InvalidAlgebra, "associativity fails on (e" + std::to_string(i) + ",e" +
                                                         std::to_string(j) + ",e" + std::to_string(k) + ")");
            continue;
          }
        }
        std::vector<Term> left, right;
        for (const auto& t : tab[i * n + j])
          for (const auto& u : tab[t.index * n + k]) add_term(left, u.index, t.coeff * u.coeff);
        for (const auto& t : tab[j * n + k])
          for (const auto& u : tab[i * n + t.index]) add_term(right, u.index, t.coeff * u.coeff);
        if (!same_terms(left, right))
          throw Error(ErrorCode::InvalidAlgebra, "associativity fails on (e" + std::to_string(i) + ",e" +
                                                     std::to_string(j) + ",e" + std::to_string(k) + ")");
      }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> left, right;
    for (std::size_t j = 0; j < n; ++j) {
      if (impl->unit[j].is_zero()) continue;
      for (const auto& u : tab[j * n + i]) add_term(left, u.index, impl->unit[j] * u.coeff);
      for (const auto& u : tab[i * n + j]) add_term(right, u.index, impl->unit[j] * u.coeff);
    }
    std::vector<Term> expected{{i, Scalar::one(f)}};
    if (!same_terms(left, expected) || !same_terms(right, expected))
      throw Error(ErrorCode::InvalidAlgebra, "unit law fails on e" + std::to_string(i));
  }

  std::ostringstream os;
  os << f.to_string() << "|";
  for (int p : par) os << p;
  for (std::size_t c = 0; c < tab.size(); ++c) {
    auto terms = tab[c];
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    os << ";";
    for (const auto& t : terms) os << t.index << ":" << t.coeff.to_string() << ",";
  }
  impl->fingerprint = std::hash<std::string>{}(os.str());
  impl_ = std::move(impl);
}

SuperAlgebra SuperAlgebra::from_dense(const Field& f, std::vector<int> parity, const std::vector<Scalar>& c,
                                      Vec unit, RecipePtr recipe) {
  const std::size_t n = parity.size();
  if (c.size() != n * n * n) throw Error(ErrorCode::InvalidAlgebra, "dense constants must have dim^3 entries");
  std::vector<std::vector<Term>> table(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t k = 0; k < n; ++k)
      if (!c[ij * n + k].is_zero()) table[ij].push_back({k, c[ij * n + k]});
  return SuperAlgebra(f, std::move(parity), std::move(table), std::move(unit), std::move(recipe));
}

Scalar SuperAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return Scalar::zero(field());
}

std::vector<std::size_t> SuperAlgebra::indices_of_parity(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (parity(i) == p) out.push_back(i);
  return out;
}

SuperAlgebra SuperAlgebra::with_recipe(RecipePtr recipe) const {
  SuperAlgebra copy;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->recipe = std::move(recipe);
  copy.impl_ = std::move(impl);
  return copy;
}

Vec SuperAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimMismatch, "coordinate length");
  Vec r = zero_vec(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = product(i, j);
      if (terms.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& t : terms) r[t.index] += xy * t.coeff;
    }
  }
  return r;
}

Matrix SuperAlgebra::left_mult(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : product(i, j)) m(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

Matrix SuperAlgebra::right_mult(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : product(i, j)) m(t.index, i) += x[j] * t.coeff;
  }
  return m;
}

std::optional<int> SuperAlgebra::parity_of(const Vec& x) const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    (parity(i) ? odd : even) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

Scalar SuperAlgebra::trace_left(const Vec& x) const {
  Scalar tr = Scalar::zero(field());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : product(i, j))
        if (t.index == j) tr += x[i] * t.coeff;
  }
  return tr;
}

Element SuperAlgebra::element(Vec coords) const { return Element(*this, std::move(coords)); }
Element SuperAlgebra::basis(std::size_t i) const { return Element(*this, unit_vec(field(), dim(), i)); }
Element SuperAlgebra::one() const { return Element(*this, unit()); }
Element SuperAlgebra::zero() const { return Element(*this, zero_vec(field(), dim())); }
Element SuperAlgebra::scalar(const Scalar& s) const { return Element(*this, s * unit()); }

// ---- Element -------------------------------------------------------------------

Element::Element(SuperAlgebra parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.dim()) throw Error(ErrorCode::DimMismatch, "element has wrong length");
}

int Element::parity() const {
  auto p = parent_.parity_of(coords_);
  if (!p) throw Error(ErrorCode::NotHomogeneous, "element " + to_string() + " is not homogeneous");
  return *p;
}

void Element::check_parent(const Element& o) const {
  if (!parent_.same_as(o.parent_)) throw Error(ErrorCode::ParentMismatch, "elements of different algebras");
}

Element Element::operator+(const Element& o) const {
  check_parent(o);
  return Element(parent_, coords_ + o.coords_);
}

Element Element::operator-(const Element& o) const {
  check_parent(o);
  return Element(parent_, coords_ - o.coords_);
}

Element Element::operator-() const { return Element(parent_, -coords_); }

Element Element::operator*(const Element& o) const {
  check_parent(o);
  return Element(parent_, parent_.mul(coords_, o.coords_));
}

bool Element::operator==(const Element& o) const { return parent_.same_as(o.parent_) && coords_ == o.coords_; }

std::string Element::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + "]";
}

Element multiply(const Element& x, const Element& y) { return x * y; }

std::optional<Element> invert(const Element& x) {
  const SuperAlgebra& a = x.parent();
  auto y = solve(a.left_mult(x.coords()), a.unit());
  if (!y) return std::nullopt;
  if (a.mul(*y, x.coords()) != a.unit()) return std::nullopt;
  return Element(a, *y);
}

std::optional<Element> invert_homogeneous(const Element& x) {
  x.parity();
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  return invert(x);
}

std::optional<Scalar> as_scalar(const Element& x) {
  const Vec& u = x.parent().unit();
  std::size_t k = leading_index(u);
  Scalar s = x[k] / u[k];
  if (s * u == x.coords()) return s;
  return std::nullopt;
}

}  // namespace superalg
