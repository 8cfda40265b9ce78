#include "arrcomb/lp.hpp"

#include <utility>

#include "arrcomb/error.hpp"

namespace arrcomb::lp {

namespace {

// Tableau layout: rows [0, m) are constraints, row m is the objective, row
// m+1 is the phase-one objective. Column n holds the artificial variable and
// column n+1 the right-hand side. Labels: originals 0..n-1, slacks n..n+m-1,
// artificial -1.
class Tableau {
 public:
  Tableau(const std::vector<Vector>& rows, const Vector& rhs, const Vector& objective)
      : m_(static_cast<int>(rows.size())),
        n_(static_cast<int>(objective.size())),
        basic_(m_),
        nonbasic_(n_ + 1),
        d_(m_ + 2, Vector(n_ + 2)) {
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(rows[i].size()) != n_) throw DimensionMismatch("lp row width");
      for (int j = 0; j < n_; ++j) d_[i][j] = rows[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1;
      d_[i][n_ + 1] = rhs[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -objective[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  Result solve() {
    Result result;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < 0) {
      pivot(r, n_);
      if (!run(2) || d_[m_ + 1][n_ + 1] < 0) {
        result.status = Status::infeasible;
        return result;
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        for (int s = 0; s <= n_; ++s) {
          if (d_[i][s] != 0) {
            pivot(i, s);
            break;
          }
        }
      }
    }
    bool bounded = run(1);
    result.x.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) result.x[basic_[i]] = d_[i][n_ + 1];
    }
    result.status = bounded ? Status::optimal : Status::unbounded;
    if (bounded) result.value = d_[m_][n_ + 1];
    return result;
  }

 private:
  void pivot(int r, int s) {
    Rational inv = 1 / d_[r][s];
    Vector& pivot_row = d_[r];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == 0) continue;
      Rational factor = d_[i][s] * inv;
      Vector& row = d_[i];
      for (int j = 0; j < n_ + 2; ++j) {
        if (pivot_row[j] != 0) row[j] -= pivot_row[j] * factor;
      }
      row[s] = pivot_row[s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) pivot_row[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    pivot_row[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Returns false when the objective is unbounded.
  bool run(int phase) {
    const int obj = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (d_[obj][j] < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= 0) continue;
        Rational ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<Vector> d_;
};

}  // namespace

Result maximize(const std::vector<Vector>& rows, const Vector& rhs, const Vector& objective) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("lp rhs length");
  return Tableau(rows, rhs, objective).solve();
}

}  // namespace arrcomb::lp
