#include "pforge/multivector.hpp"

#include <algorithm>

namespace pforge {

int sort_with_sign(IndexTuple& idx) {
  int sign = 1;
  // Insertion sort; tuples are short.
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

std::pair<int, IndexTuple> merge_tuples(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the remaining a's.
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return {0, {}};
    }
  }
  return {inversions % 2 ? -1 : 1, std::move(out)};
}

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IndexTuple erase_at(const IndexTuple& a, std::size_t pos) {
  IndexTuple out;
  out.reserve(a.size() - 1);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != pos) out.push_back(a[k]);
  return out;
}

Multivector mv_wedge(const Multivector& u, const Multivector& v) { return wedge(u, v); }

Poly apply_vector_field(const Multivector& x, const Poly& f) {
  if (x.grade() != 1) fail("grade-mismatch", "expected a vector field");
  if (x.nvars() != f.nvars()) fail("dimension-mismatch", "vector field and function rings differ");
  Poly out(f.nvars());
  for (const auto& [idx, c] : x.terms()) out += c * f.diff(idx[0]);
  return out;
}

Multivector vf_bracket(const Multivector& x, const Multivector& y) {
  if (x.grade() != 1 || y.grade() != 1) fail("grade-mismatch", "vf_bracket needs two vector fields");
  if (x.nvars() != y.nvars()) fail("dimension-mismatch", "vector fields over different rings");
  const std::size_t n = x.nvars();
  Multivector out(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Poly c = apply_vector_field(x, y.coeff({i})) - apply_vector_field(y, x.coeff({i}));
    out.add_term({i}, c);
  }
  return out;
}

namespace {

/// One factor c * d_i of a decomposable term.
struct Factor {
  const Poly* coeff;  // nullptr means the constant 1
  std::size_t index;
};

/// [a d_i, b d_j] = a d_i(b) d_j - b d_j(a) d_i, as (index, coefficient) pairs.
std::vector<std::pair<std::size_t, Poly>> factor_bracket(const Factor& a, const Factor& b,
                                                         std::size_t n) {
  std::vector<std::pair<std::size_t, Poly>> out;
  if (b.coeff) {
    Poly t = b.coeff->diff(a.index);
    if (a.coeff) t = *a.coeff * t;
    if (!t.is_zero()) out.emplace_back(b.index, std::move(t));
  }
  if (a.coeff) {
    Poly t = a.coeff->diff(b.index);
    if (b.coeff) t = *b.coeff * t;
    if (!t.is_zero()) out.emplace_back(a.index, -t);
  }
  (void)n;
  return out;
}

/// [u, g] for grade(u) >= 1: sum_a (-1)^{a-1} u_a(g) u_1 ^ .. ^u_a .. ^ u_m.
void bracket_with_function(const Multivector& u, const Poly& g, Multivector& out) {
  for (const auto& [idx, f] : u.terms()) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      Poly c = g.diff(idx[a]);
      if (c.is_zero()) continue;
      c = f * c;  // f rides on the first factor, so it survives either way
      if (a % 2) c = -c;
      out.add_term(erase_at(idx, a), c);
    }
  }
}

}  // namespace

Multivector schouten(const Multivector& u, const Multivector& v) {
  if (u.nvars() != v.nvars()) fail("dimension-mismatch", "schouten over different rings");
  const std::size_t n = u.nvars();
  const std::size_t m = u.grade(), k = v.grade();
  if (m == 0 && k == 0) return Multivector(n, 0);
  Multivector out(n, m + k - 1);
  if (k == 0) {
    bracket_with_function(u, v.as_poly(), out);
    return out;
  }
  if (m == 0) {
    // [f, v] = (-1)^{0} [v, f]
    bracket_with_function(v, u.as_poly(), out);
    return out;
  }
  for (const auto& [iu, f] : u.terms()) {
    for (const auto& [iv, g] : v.terms()) {
      for (std::size_t a = 0; a < m; ++a) {
        Factor fa{a == 0 ? &f : nullptr, iu[a]};
        for (std::size_t b = 0; b < k; ++b) {
          Factor fb{b == 0 ? &g : nullptr, iv[b]};
          auto br = factor_bracket(fa, fb, n);
          if (br.empty()) continue;
          // (-1)^{m+i+j-1} with 1-based i = a+1, j = b+1.
          const bool negative = (m + a + b + 1) % 2 == 1;
          Poly rest(n, Rational(1));
          if (a != 0) rest = f;
          if (b != 0) rest = rest * g;
          IndexTuple ru = erase_at(iu, a), rv = erase_at(iv, b);
          for (auto& [w, c] : br) {
            IndexTuple idx;
            idx.reserve(m + k - 1);
            idx.push_back(w);
            idx.insert(idx.end(), ru.begin(), ru.end());
            idx.insert(idx.end(), rv.begin(), rv.end());
            Poly coeff = c * rest;
            out.add_unsorted(std::move(idx), negative ? -coeff : coeff);
          }
        }
      }
    }
  }
  return out;
}

Multivector lichnerowicz_dP(const Multivector& p, const Multivector& u) {
  if (p.grade() != 2) fail("grade-mismatch", "the Poisson tensor must be a bivector");
  return schouten(p, u);
}

Multivector jacobiator(const Multivector& p) {
  if (p.grade() != 2) fail("grade-mismatch", "jacobiator needs a bivector");
  return schouten(p, p);
}

Multivector bivector_from_matrix(const std::vector<std::vector<Poly>>& table) {
  const std::size_t n = table.size();
  if (n == 0) fail("dimension-mismatch", "empty structure matrix");
  Multivector p(table[0][0].nvars(), 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (table[i][j] != -table[j][i])
        fail("invariant-violation", "structure matrix is not antisymmetric");
      p.add_term({i, j}, table[i][j]);
    }
  return p;
}

}  // namespace pforge
