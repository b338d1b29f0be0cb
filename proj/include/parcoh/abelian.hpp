#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "parcoh/errors.hpp"
#include "parcoh/matrix.hpp"

namespace parcoh {

// Finite abelian group presented as Z/d1 x ... x Z/dr with d1 | d2 | ... and
// every di >= 2.  The trivial group has rank 0.
struct AbelianPresentation {
  std::vector<i64> orders;

  int rank() const { return static_cast<int>(orders.size()); }

  // Saturates at cap to avoid overflow on large products.
  i64 size_capped(i64 cap = 1000000000000000000LL) const {
    i64 s = 1;
    for (i64 d : orders) {
      if (s > cap / d) return cap;
      s *= d;
    }
    return s;
  }

  std::vector<i64> reduce(std::vector<i64> v) const {
    assert(static_cast<int>(v.size()) == rank());
    for (int i = 0; i < rank(); ++i) {
      v[i] %= orders[i];
      if (v[i] < 0) v[i] += orders[i];
    }
    return v;
  }

  bool operator==(const AbelianPresentation& o) const { return orders == o.orders; }
};

inline AbelianPresentation concat(const AbelianPresentation& x, const AbelianPresentation& y) {
  AbelianPresentation r = x;
  r.orders.insert(r.orders.end(), y.orders.begin(), y.orders.end());
  return r;
}

// Invariant-factor decomposition of a finite abelian group given by a Cayley
// table, with exact coordinate maps in both directions.
struct AbelianDecomp {
  AbelianPresentation pres;
  int identity = 0;
  std::vector<std::vector<i64>> coords;  // element -> coordinates
  std::vector<int> elem_of_code;         // mixed-radix code -> element
  std::vector<int> inverse;              // element -> inverse element

  i64 code_of(const std::vector<i64>& c) const {
    i64 code = 0;
    for (int i = pres.rank() - 1; i >= 0; --i) code = code * pres.orders[i] + c[i];
    return code;
  }

  int from_coords(const std::vector<i64>& c) const {
    return elem_of_code[static_cast<size_t>(code_of(pres.reduce(c)))];
  }
};

namespace detail {

inline int table_entry(const std::vector<std::vector<int>>& t, int i, int j) { return t[i][j]; }

}  // namespace detail

// table must be the Cayley table of a finite abelian group on {0..n-1}.
// Errors: NotAGroup (no identity / missing inverses), NotAbelian.
inline AbelianDecomp decompose(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("NotAGroup", "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw validation_error("NotAGroup", "table not square");
    for (int v : row)
      if (v < 0 || v >= n) throw validation_error("NotAGroup", "table entry out of range");
  }
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (table[e][x] != x || table[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) id = e;
  }
  if (id < 0) throw validation_error("NotAGroup", "no identity element");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i]) throw validation_error("NotAbelian", "table not commutative");

  AbelianDecomp d;
  d.identity = id;
  d.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (table[x][y] == id) {
        d.inverse[x] = y;
        break;
      }
    if (d.inverse[x] < 0) throw validation_error("NotAGroup", "missing inverse");
  }
  if (n <= 256) {  // cheap safety net; callers hand in genuine groups
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]])
            throw validation_error("NotAGroup", "table not associative");
  }

  // Greedy generating set in element order.
  std::vector<int> gens;
  std::vector<char> in_sub(n, 0);
  in_sub[id] = 1;
  int covered = 1;
  for (int x = 0; x < n && covered < n; ++x) {
    if (in_sub[x]) continue;
    gens.push_back(x);
    std::vector<int> work;
    for (int y = 0; y < n; ++y)
      if (in_sub[y]) work.push_back(y);
    while (!work.empty()) {
      int y = work.back();
      work.pop_back();
      for (int g : gens) {
        int z = table[y][g];
        if (!in_sub[z]) {
          in_sub[z] = 1;
          ++covered;
          work.push_back(z);
        }
      }
    }
  }
  int k = static_cast<int>(gens.size());

  // Section s: element -> exponent vector via breadth-first search.
  std::vector<std::vector<i64>> sec(n);
  std::vector<char> seen(n, 0);
  sec[id].assign(k, 0);
  seen[id] = 1;
  std::vector<int> queue = {id};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int y = queue[qi];
    for (int gi = 0; gi < k; ++gi) {
      int z = table[y][gens[gi]];
      if (!seen[z]) {
        seen[z] = 1;
        sec[z] = sec[y];
        ++sec[z][gi];
        queue.push_back(z);
      }
    }
  }
  assert(static_cast<int>(queue.size()) == n);

  // Relations: cycles of the Cayley graph generate the kernel lattice.
  Mat rel(n * k, k);
  for (int y = 0; y < n; ++y)
    for (int gi = 0; gi < k; ++gi) {
      int z = table[y][gens[gi]];
      for (int j = 0; j < k; ++j) rel(y * k + gi, j) = sec[y][j] - sec[z][j];
      rel(y * k + gi, gi) += 1;
    }

  Snf s = smith_normal_form(rel);
  assert(s.rank == k);
  std::vector<i64> full_diag(k);
  i64 prod = 1;
  for (int i = 0; i < k; ++i) {
    full_diag[i] = s.d(i, i);
    prod *= full_diag[i];
  }
  assert(prod == n);

  std::vector<int> keep;
  for (int i = 0; i < k; ++i)
    if (full_diag[i] > 1) keep.push_back(i);
  for (int i : keep) d.pres.orders.push_back(full_diag[i]);

  d.coords.assign(n, {});
  for (int x = 0; x < n; ++x) {
    std::vector<i64> c;
    for (int i : keep) {
      i64 v = 0;
      for (int j = 0; j < k; ++j) v += sec[x][j] * s.q(j, i);
      v %= full_diag[i];
      if (v < 0) v += full_diag[i];
      c.push_back(v);
    }
    d.coords[x] = c;
  }

  d.elem_of_code.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    i64 code = d.code_of(d.coords[x]);
    if (d.elem_of_code[static_cast<size_t>(code)] != -1)
      throw validation_error("NotAGroup", "coordinate map not injective");
    d.elem_of_code[static_cast<size_t>(code)] = x;
  }
  return d;
}

// Homomorphism between presented finite abelian groups; matrix is
// dst.rank x src.rank and must map source relations into target relations.
struct IntHom {
  AbelianPresentation src, dst;
  Mat m;
};

inline IntHom make_inthom(const AbelianPresentation& src, const AbelianPresentation& dst, Mat m) {
  assert(m.rows == dst.rank() && m.cols == src.rank());
  for (int i = 0; i < dst.rank(); ++i)
    for (int j = 0; j < src.rank(); ++j)
      if ((m(i, j) * src.orders[j]) % dst.orders[i] != 0)
        throw validation_error("HomRelationViolation",
                               "matrix does not map source relations into target relations");
  return IntHom{src, dst, std::move(m)};
}

inline std::vector<i64> apply_hom(const IntHom& h, const std::vector<i64>& x) {
  assert(static_cast<int>(x.size()) == h.src.rank());
  std::vector<i64> y(h.dst.rank(), 0);
  for (int i = 0; i < h.dst.rank(); ++i) {
    for (int j = 0; j < h.src.rank(); ++j) y[i] += h.m(i, j) * x[j];
  }
  return h.dst.reduce(y);
}

inline IntHom compose_hom(const IntHom& f, const IntHom& g) {
  assert(g.dst == f.src);
  Mat m = mat_mul(f.m, g.m);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      m(i, j) %= f.dst.orders[i];
      if (m(i, j) < 0) m(i, j) += f.dst.orders[i];
    }
  return make_inthom(g.src, f.dst, std::move(m));
}

// ker(z) / im(b) inside the common ambient group z.src == b.dst, as an
// abelian group with explicit representatives and a class-coordinate map.
struct Subquotient {
  AbelianPresentation ambient;
  AbelianPresentation group;
  std::vector<std::vector<i64>> reps;  // ambient coordinates, one per generator
  Mat ker_basis;                       // rows: basis of the kernel lattice in Z^r
  Mat rel_q, rel_qinv;                 // column transform of the relation SNF
  std::vector<i64> rel_diag;           // full diagonal of that SNF (with 1s)

  // Coordinates of the class of an ambient kernel element.
  std::vector<i64> class_coords(const std::vector<i64>& x) const {
    std::vector<i64> y;
    if (!hnf_solve(ker_basis, x, y))
      throw validation_error("NotInKernel", "element is not in the kernel");
    std::vector<i64> c;
    for (int i = 0; i < static_cast<int>(rel_diag.size()); ++i) {
      if (rel_diag[i] <= 1) continue;
      i64 v = 0;
      for (int j = 0; j < rel_q.rows; ++j) v += y[j] * rel_q(j, i);
      v %= rel_diag[i];
      if (v < 0) v += rel_diag[i];
      c.push_back(v);
    }
    return c;
  }

  bool in_kernel(const std::vector<i64>& x) const {
    std::vector<i64> y;
    return hnf_solve(ker_basis, x, y);
  }
};

inline Subquotient subquotient(const IntHom& z, const IntHom& b) {
  if (!(z.src == b.dst))
    throw validation_error("AmbientMismatch", "kernel and image maps disagree on the ambient group");
  const AbelianPresentation& amb = z.src;
  int r = amb.rank();
  int t = z.dst.rank();
  int sr = b.src.rank();

  // Image-in-kernel check: z(b(y)) = 0 for all y.
  {
    Mat zb = mat_mul(z.m, b.m);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < sr; ++j)
        if (zb(i, j) % z.dst.orders[i] != 0)
          throw validation_error("ImageNotInKernel", "image generators do not satisfy the kernel equations");
  }

  Subquotient out;
  out.ambient = amb;

  // Kernel lattice {x : z x = 0 mod target orders} via the stacked matrix
  // [z | diag(target orders)].
  Mat stacked(t, r + t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < r; ++j) stacked(i, j) = z.m(i, j);
    stacked(i, r + i) = z.dst.orders[i];
  }
  Mat kb = kernel_basis(stacked);
  Mat kgens(kb.rows + r, r);
  for (int i = 0; i < kb.rows; ++i)
    for (int j = 0; j < r; ++j) kgens(i, j) = kb(i, j);
  for (int i = 0; i < r; ++i) kgens(kb.rows + i, i) = amb.orders[i];
  out.ker_basis = row_hnf(kgens);
  assert(out.ker_basis.rows == r);

  // Image lattice: columns of b plus the ambient relations.
  Mat igens(sr + r, r);
  for (int i = 0; i < sr; ++i)
    for (int j = 0; j < r; ++j) igens(i, j) = b.m(j, i);
  for (int i = 0; i < r; ++i) igens(sr + i, i) = amb.orders[i];
  Mat ib = row_hnf(igens);
  assert(ib.rows == r);

  // Express image basis rows in kernel-basis coordinates.
  Mat c(r, r);
  for (int i = 0; i < r; ++i) {
    std::vector<i64> v(r), y;
    for (int j = 0; j < r; ++j) v[j] = ib(i, j);
    bool ok = hnf_solve(out.ker_basis, v, y);
    if (!ok) throw validation_error("ImageNotInKernel", "image lattice is not inside the kernel lattice");
    for (int j = 0; j < r; ++j) c(i, j) = y[j];
  }

  Snf s = smith_normal_form(c);
  assert(s.rank == r);
  out.rel_q = s.q;
  out.rel_qinv = s.qinv;
  out.rel_diag.assign(r, 0);
  for (int i = 0; i < r; ++i) out.rel_diag[i] = s.d(i, i);
  for (int i = 0; i < r; ++i)
    if (out.rel_diag[i] > 1) out.group.orders.push_back(out.rel_diag[i]);

  for (int i = 0; i < r; ++i) {
    if (out.rel_diag[i] <= 1) continue;
    // Generator i of the quotient: row i of qinv in kernel-basis coordinates.
    std::vector<i64> x(r, 0);
    for (int j = 0; j < r; ++j)
      for (int l = 0; l < r; ++l) x[l] += s.qinv(i, j) * out.ker_basis(j, l);
    out.reps.push_back(amb.reduce(x));
  }
  return out;
}

// Kernel-only variant (degree 0): subgroup {x : z x = 0} of the ambient.
inline Subquotient kernel_group(const IntHom& z) {
  IntHom zero{AbelianPresentation{}, z.src, Mat(z.src.rank(), 0)};
  return subquotient(z, zero);
}

}  // namespace parcoh
