#include "qcover/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qcover {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowGuard("integer overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowGuard("integer overflow in multiplication");
  return r;
}

struct Reducer {
  IntMat d;
  IntMat v;
  int m, n;
  bool track_v;

  Reducer(const IntMat& M, bool with_v) : d(M), track_v(with_v) {
    m = static_cast<int>(M.size());
    n = m ? static_cast<int>(M[0].size()) : 0;
    for (const auto& row : M)
      if (static_cast<int>(row.size()) != n) throw ShapeError("ragged matrix");
    if (track_v) {
      v.assign(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i) v[i][i] = 1;
    }
  }

  void row_add(int dst, int src, long long c) {
    for (int j = 0; j < n; ++j) d[dst][j] = checked_add(d[dst][j], checked_mul(c, d[src][j]));
  }
  void col_add(int dst, int src, long long c) {
    for (int i = 0; i < m; ++i) d[i][dst] = checked_add(d[i][dst], checked_mul(c, d[i][src]));
    if (track_v)
      for (int i = 0; i < n; ++i) v[i][dst] = checked_add(v[i][dst], checked_mul(c, v[i][src]));
  }
  void row_swap(int a, int b) { std::swap(d[a], d[b]); }
  void col_swap(int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(d[i][a], d[i][b]);
    if (track_v)
      for (int i = 0; i < n; ++i) std::swap(v[i][a], v[i][b]);
  }
  void row_negate(int r) {
    for (int j = 0; j < n; ++j) d[r][j] = -d[r][j];
  }

  void run() {
    const int steps = std::min(m, n);
    int t = 0;
    while (t < steps) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          long long a = std::llabs(d[i][j]);
          if (a != 0 && (pi < 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < m; ++i) {
          if (d[i][t] == 0) continue;
          long long q = d[i][t] / d[t][t];
          if (q != 0) row_add(i, t, -q);
          if (d[i][t] != 0) {
            // Remainder is strictly smaller than the pivot; promote it.
            row_swap(t, i);
            clean = false;
          }
        }
        for (int j = t + 1; j < n; ++j) {
          if (d[t][j] == 0) continue;
          long long q = d[t][j] / d[t][t];
          if (q != 0) col_add(j, t, -q);
          if (d[t][j] != 0) {
            col_swap(t, j);
            clean = false;
          }
        }
      }

      // Divisibility: fold a bad row in and redo this pivot.
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;
      if (d[t][t] < 0) row_negate(t);
      ++t;
    }
  }

  std::vector<long long> padded_diagonal() const {
    std::vector<long long> diag(n, 0);
    for (int i = 0; i < std::min(m, n); ++i) diag[i] = d[i][i];
    return diag;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& M) {
  Reducer r(M, false);
  r.run();
  SmithResult out;
  out.diagonal = r.padded_diagonal();
  for (long long x : out.diagonal) {
    if (x == 0) continue;
    if (x > 1) out.torsion.push_back(x);
  }
  int nonzero = 0;
  for (long long x : out.diagonal)
    if (x != 0) ++nonzero;
  out.rank_free = r.n - nonzero;
  return out;
}

SmithLattice smith_lattice(const IntMat& M) {
  Reducer r(M, true);
  r.run();
  SmithLattice out;
  out.rows = r.m;
  out.cols = r.n;
  out.diagonal = r.padded_diagonal();
  out.V = r.v;
  return out;
}

bool in_row_lattice(const SmithLattice& L, const std::vector<long long>& d) {
  if (static_cast<int>(d.size()) != L.cols) throw ShapeError("vector length mismatch");
  for (int j = 0; j < L.cols; ++j) {
    long long s = 0;
    for (int i = 0; i < L.cols; ++i) s = checked_add(s, checked_mul(d[i], L.V[i][j]));
    long long diag = L.diagonal[j];
    if (diag == 0) {
      if (s != 0) return false;
    } else if (s % diag != 0) {
      return false;
    }
  }
  return true;
}

std::string smith_group_str(const SmithResult& s) {
  std::string out;
  if (s.rank_free > 0) out = "Z^" + std::to_string(s.rank_free);
  for (long long t : s.torsion) {
    if (!out.empty()) out += " (+) ";
    out += "Z/" + std::to_string(t);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace qcover
