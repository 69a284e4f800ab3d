#include "polyadj/lp.hpp"

#include <optional>

namespace polyadj::lp {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b, std::size_t cols)
      : rows_(a.size()), cols_(cols), total_(cols + a.size()), t_(a.size(), std::vector<Rational>(total_ + 1)),
        basis_(a.size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (b[i] < Rational(0)) throw std::invalid_argument("lp::minimize: negative right-hand side");
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j] = a[i][j];
      t_[i][cols_ + i] = 1;  // artificial
      t_[i][total_] = b[i];
      basis_[i] = cols_ + i;
    }
  }

  // Runs the simplex on `cost` (length total_). Columns >= `enterable` never
  // enter the basis.
  void optimize(const std::vector<Rational>& cost, std::size_t enterable) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < enterable && !entering; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          if (t_[i][j].sign() != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (reduced.sign() < 0) entering = j;
      }
      if (!entering) return;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][*entering].sign() <= 0) continue;
        Rational ratio = t_[i][total_] / t_[i][*entering];
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) throw UnboundedError("lp::minimize: objective unbounded below");
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (auto& v : t_[row]) {
      if (v.sign() != 0) v /= p;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || t_[i][col].sign() == 0) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= total_; ++j) {
        if (t_[row][j].sign() != 0) t_[i][j] -= f * t_[row][j];
      }
    }
    basis_[row] = col;
  }

  // Pivots basic artificials (at level zero) onto original columns where
  // possible; rows where that is impossible are redundant and keep them.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_basic(j) && t_[i][j].sign() != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * t_[i][total_];
    return v;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) x[basis_[i]] = t_[i][total_];
    }
    return x;
  }

  std::size_t total() const { return total_; }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t total_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution minimize(const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lp::minimize: row count mismatch");
  const std::size_t n = c.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("lp::minimize: column count mismatch");
  }

  Tableau tableau(a, b, n);

  std::vector<Rational> phase1(tableau.total(), Rational(0));
  for (std::size_t j = n; j < tableau.total(); ++j) phase1[j] = 1;
  tableau.optimize(phase1, tableau.total());
  if (tableau.objective(phase1).sign() != 0) throw InfeasibleError("lp::minimize: infeasible");
  tableau.drive_out_artificials();

  std::vector<Rational> phase2(tableau.total(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tableau.optimize(phase2, n);
  return {tableau.objective(phase2), tableau.primal()};
}

}  // namespace polyadj::lp
