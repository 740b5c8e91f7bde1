#include "pforge/lie.hpp"

#include "pforge/error.hpp"

namespace pforge {

LieAlgebraSC::LieAlgebraSC(std::size_t d, std::string label)
    : name(std::move(label)), dim(d), c(d, std::vector<Vector>(d, Vector(d))) {}

void LieAlgebraSC::set(std::size_t i, std::size_t j, const Vector& v) {
  c[i][j] = v;
  Vector neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
  c[j][i] = neg;
}

Vector LieAlgebraSC::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) out[k] += f * c[i][j][k];
    }
  }
  return out;
}

Matrix LieAlgebraSC::ad(const Vector& x) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim; ++j) cols.push_back(bracket(x, basis(j)));
  return Matrix::from_columns(dim, cols);
}

Vector LieAlgebraSC::basis(std::size_t i) const {
  Vector v(dim);
  v[i] = 1;
  return v;
}

void LieAlgebraSC::validate() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (c[i][j][k] != -c[j][i][k])
          fail("invariant-violation", "structure constants are not antisymmetric",
               ErrorClass::input,
               std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vector a = bracket(bracket(basis(i), basis(j)), basis(k));
        Vector b = bracket(bracket(basis(j), basis(k)), basis(i));
        Vector d = bracket(bracket(basis(k), basis(i)), basis(j));
        for (std::size_t t = 0; t < dim; ++t)
          if (a[t] + b[t] + d[t] != 0)
            fail("invariant-violation", "Jacobi identity fails", ErrorClass::input,
                 std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
      }
}

namespace {

Vector vec(std::size_t d, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Vector v(d);
  for (auto [i, x] : entries) v[i] = x;
  return v;
}

}  // namespace

std::vector<LieAlgebraSC> lie_catalog() {
  std::vector<LieAlgebraSC> out;
  for (std::size_t d = 1; d <= 4; ++d) out.emplace_back(d, "abelian" + std::to_string(d));
  {
    LieAlgebraSC g(2, "aff1");
    g.set(0, 1, vec(2, {{1, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "heisenberg");
    g.set(0, 1, vec(3, {{2, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "so3");
    g.set(0, 1, vec(3, {{2, 1}}));
    g.set(1, 2, vec(3, {{0, 1}}));
    g.set(2, 0, vec(3, {{1, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "sl2");
    g.set(0, 1, vec(3, {{1, 2}}));
    g.set(0, 2, vec(3, {{2, -2}}));
    g.set(1, 2, vec(3, {{0, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "aff1+r");
    g.set(0, 1, vec(3, {{1, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "bianchi4");
    g.set(0, 1, vec(3, {{1, 1}}));
    g.set(0, 2, vec(3, {{1, 1}, {2, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "bianchi5");
    g.set(0, 1, vec(3, {{1, 1}}));
    g.set(0, 2, vec(3, {{2, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "bianchi6_0");
    g.set(0, 1, vec(3, {{1, 1}}));
    g.set(0, 2, vec(3, {{2, -1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(3, "bianchi7_0");
    g.set(0, 1, vec(3, {{2, 1}}));
    g.set(0, 2, vec(3, {{1, -1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(4, "heisenberg+r");
    g.set(0, 1, vec(4, {{2, 1}}));
    out.push_back(g);
  }
  {
    // E11, E12, E21, E22
    LieAlgebraSC g(4, "gl2");
    g.set(0, 1, vec(4, {{1, 1}}));
    g.set(0, 2, vec(4, {{2, -1}}));
    g.set(1, 2, vec(4, {{0, 1}, {3, -1}}));
    g.set(1, 3, vec(4, {{1, 1}}));
    g.set(2, 3, vec(4, {{2, -1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(4, "so3+r");
    g.set(0, 1, vec(4, {{2, 1}}));
    g.set(1, 2, vec(4, {{0, 1}}));
    g.set(2, 0, vec(4, {{1, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(4, "sl2+r");
    g.set(0, 1, vec(4, {{1, 2}}));
    g.set(0, 2, vec(4, {{2, -2}}));
    g.set(1, 2, vec(4, {{0, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(4, "oscillator");
    g.set(0, 1, vec(4, {{2, 1}}));
    g.set(3, 0, vec(4, {{1, 1}}));
    g.set(3, 1, vec(4, {{0, -1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(4, "aff1+aff1");
    g.set(0, 1, vec(4, {{1, 1}}));
    g.set(2, 3, vec(4, {{3, 1}}));
    out.push_back(g);
  }
  {
    LieAlgebraSC g(4, "filiform4");
    g.set(0, 1, vec(4, {{2, 1}}));
    g.set(0, 2, vec(4, {{3, 1}}));
    out.push_back(g);
  }
  return out;
}

std::vector<std::vector<Vector>> coordinate_subalgebras(const LieAlgebraSC& g) {
  std::vector<std::vector<Vector>> out;
  const std::size_t d = g.dim;
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < d && closed; ++i)
      for (std::size_t j = 0; j < d && closed; ++j) {
        if (!(mask >> i & 1) || !(mask >> j & 1)) continue;
        for (std::size_t k = 0; k < d; ++k)
          if (!(mask >> k & 1) && sgn(g.c[i][j][k]) != 0) closed = false;
      }
    if (!closed) continue;
    std::vector<Vector> b;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) b.push_back(g.basis(i));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace pforge
