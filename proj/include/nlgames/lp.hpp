#pragma once
// Exact two-phase dense simplex over an ordered field (Rational or QuadExt).
// Bland's rule for both the entering and the leaving tie-break guarantees
// termination under the degeneracy that probability polytopes are full of.
// Every returned point satisfies the constraints with zero residual; solve()
// re-checks that before returning.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nlgames {

template <typename S>
struct LinearConstraint {
  std::vector<S> coeffs;
  S rhs{};
};

// Maximization program. Variables are free unless bounded via lower/upper
// (either both empty or num_vars-sized). le means coeffs.v <= rhs.
template <typename S>
struct LinearProgram {
  int num_vars = 0;
  std::vector<S> objective;  // empty = zero objective
  std::vector<LinearConstraint<S>> eq;
  std::vector<LinearConstraint<S>> le;
  std::vector<std::optional<S>> lower;
  std::vector<std::optional<S>> upper;
};

enum class LpStatus { optimal, infeasible, unbounded };

template <typename S>
struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  S value{};
  std::vector<S> point;    // original variable space (when optimal)
  std::vector<int> basis;  // basic standard-form columns (when optimal)
  S infeasibility{};       // phase-one optimum, > 0 when infeasible
};

namespace lp_detail {

template <typename S>
class Simplex {
 public:
  explicit Simplex(const LinearProgram<S>& lp) : lp_(lp) { validate(); }

  LpOutcome<S> run() {
    LpOutcome<S> out;
    if (!build_standard_form(out)) return out;  // contradictory bounds
    phase_ = 1;
    iterate();
    S art_sum{};
    for (size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] >= art_start_) art_sum += rhs_[r];
    if (art_sum > S(0)) {
      out.status = LpStatus::infeasible;
      out.infeasibility = art_sum;
      return out;
    }
    drop_artificials();
    phase_ = 2;
    if (!iterate()) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    out.point = extract_point();
    out.basis = basis_;
    const auto& obj = lp_.objective;
    for (size_t j = 0; j < obj.size(); ++j) out.value += obj[j] * out.point[j];
    check_feasible(out.point);
    return out;
  }

 private:
  // original variable j maps to shift +/- structural column(s)
  struct VarMap {
    int col1 = -1, col2 = -1;  // col2 >= 0 only for free variables (s+ - s-)
    S shift{};
    bool neg = false;  // x = shift - s (upper bound only)
  };

  void validate() const {
    if (lp_.num_vars < 0) throw std::invalid_argument("lp: negative variable count");
    auto check_len = [&](const std::vector<LinearConstraint<S>>& cs) {
      for (const auto& c : cs)
        if (static_cast<int>(c.coeffs.size()) != lp_.num_vars)
          throw std::invalid_argument("lp: constraint length does not match num_vars");
    };
    check_len(lp_.eq);
    check_len(lp_.le);
    if (!lp_.objective.empty() && static_cast<int>(lp_.objective.size()) != lp_.num_vars)
      throw std::invalid_argument("lp: objective length does not match num_vars");
    auto check_bounds = [&](const std::vector<std::optional<S>>& b) {
      if (!b.empty() && static_cast<int>(b.size()) != lp_.num_vars)
        throw std::invalid_argument("lp: bounds length does not match num_vars");
    };
    check_bounds(lp_.lower);
    check_bounds(lp_.upper);
  }

  bool build_standard_form(LpOutcome<S>& out) {
    int n = lp_.num_vars;
    vars_.assign(n, {});
    int m = 0;
    std::vector<std::pair<int, S>> range_rows;  // structural col <= value
    for (int j = 0; j < n; ++j) {
      std::optional<S> lo = lp_.lower.empty() ? std::nullopt : lp_.lower[j];
      std::optional<S> hi = lp_.upper.empty() ? std::nullopt : lp_.upper[j];
      VarMap& v = vars_[j];
      if (lo && hi) {
        if (*hi < *lo) {
          out.status = LpStatus::infeasible;
          out.infeasibility = *lo - *hi;
          return false;
        }
        v.shift = *lo;
        v.col1 = m++;
        range_rows.emplace_back(v.col1, *hi - *lo);
      } else if (lo) {
        v.shift = *lo;
        v.col1 = m++;
      } else if (hi) {
        v.shift = *hi;
        v.neg = true;
        v.col1 = m++;
      } else {
        v.col1 = m++;
        v.col2 = m++;
      }
    }

    size_t n_le = lp_.le.size() + range_rows.size();
    ncols_ = m + static_cast<int>(n_le);  // structural + slack
    rows_.clear();
    rhs_.clear();
    basis_.clear();

    auto add_row = [&](const std::vector<S>* coeffs, const std::pair<int, S>* range, const S& rhs,
                       int slack) {
      std::vector<S> row(ncols_, S(0));
      S r = rhs;
      if (coeffs) {
        for (int j = 0; j < n; ++j) {
          const S& c = (*coeffs)[j];
          if (c == S(0)) continue;
          const VarMap& v = vars_[j];
          row[v.col1] = row[v.col1] + (v.neg ? -c : c);
          if (v.col2 >= 0) row[v.col2] = row[v.col2] - c;
          r = r - c * v.shift;
        }
      } else {
        row[range->first] = S(1);
      }
      if (slack >= 0) row[m + slack] = S(1);
      if (r < S(0)) {
        for (auto& e : row) e = -e;
        r = -r;
      }
      rows_.push_back(std::move(row));
      rhs_.push_back(std::move(r));
    };

    for (const auto& c : lp_.eq) add_row(&c.coeffs, nullptr, c.rhs, -1);
    int slack = 0;
    for (const auto& c : lp_.le) add_row(&c.coeffs, nullptr, c.rhs, slack++);
    for (const auto& rr : range_rows) add_row(nullptr, &rr, rr.second, slack++);

    // initial basis: the slack where it survived normalization with +1,
    // otherwise an artificial column
    art_start_ = ncols_;
    for (size_t r = 0; r < rows_.size(); ++r) {
      int b = -1;
      size_t le_index = r - lp_.eq.size();
      if (r >= lp_.eq.size() && rows_[r][m + le_index] == S(1)) b = m + static_cast<int>(le_index);
      if (b < 0) {
        for (auto& row : rows_) row.push_back(S(0));
        rows_[r][ncols_] = S(1);
        b = ncols_++;
      }
      basis_.push_back(b);
    }

    costs_.assign(ncols_, S(0));
    return true;
  }

  void set_phase_costs() {
    costs_.assign(ncols_, S(0));
    if (phase_ == 1) {
      for (int j = art_start_; j < ncols_; ++j) costs_[j] = S(-1);
      return;
    }
    const auto& obj = lp_.objective;
    for (size_t j = 0; j < obj.size(); ++j) {
      if (obj[j] == S(0)) continue;
      const VarMap& v = vars_[j];
      costs_[v.col1] = costs_[v.col1] + (v.neg ? -obj[j] : obj[j]);
      if (v.col2 >= 0) costs_[v.col2] = costs_[v.col2] - obj[j];
    }
  }

  // Bland pivoting until no reduced cost is positive. Returns false on an
  // unbounded ray (possible only in phase 2).
  bool iterate() {
    set_phase_costs();
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (phase_ == 2 && j >= art_start_) break;
        S rc = costs_[j];
        for (size_t r = 0; r < rows_.size(); ++r) {
          const S& cb = costs_[basis_[r]];
          if (!(cb == S(0))) rc = rc - cb * rows_[r][j];
        }
        if (rc > S(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      S best{};
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (!(rows_[r][enter] > S(0))) continue;
        S ratio = rhs_[r] / rows_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    S inv = S(1) / rows_[r][c];
    for (auto& e : rows_[r]) e = e * inv;
    rhs_[r] = rhs_[r] * inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      S f = rows_[i][c];
      if (f == S(0)) continue;
      for (int j = 0; j < ncols_; ++j) rows_[i][j] = rows_[i][j] - f * rows_[r][j];
      rhs_[i] = rhs_[i] - f * rhs_[r];
    }
    basis_[r] = c;
  }

  // After a feasible phase 1, basic artificials sit at zero. Pivot each out
  // through any nonzero entry (degenerate pivots keep feasibility), or drop
  // its row as redundant.
  void drop_artificials() {
    for (size_t r = 0; r < rows_.size();) {
      if (basis_[r] < art_start_) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < art_start_; ++j)
        if (!(rows_[r][j] == S(0))) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(static_cast<int>(r), col);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(r));
        rhs_.erase(rhs_.begin() + static_cast<long>(r));
        basis_.erase(basis_.begin() + static_cast<long>(r));
      }
    }
  }

  std::vector<S> extract_point() const {
    std::vector<S> s(ncols_, S(0));
    for (size_t r = 0; r < rows_.size(); ++r) s[basis_[r]] = rhs_[r];
    std::vector<S> x(lp_.num_vars, S(0));
    for (int j = 0; j < lp_.num_vars; ++j) {
      const VarMap& v = vars_[j];
      x[j] = v.shift + (v.neg ? -s[v.col1] : s[v.col1]);
      if (v.col2 >= 0) x[j] = x[j] - s[v.col2];
    }
    return x;
  }

  void check_feasible(const std::vector<S>& x) const {
    auto dot = [&](const std::vector<S>& c) {
      S acc{};
      for (int j = 0; j < lp_.num_vars; ++j) acc += c[j] * x[j];
      return acc;
    };
    for (const auto& c : lp_.eq)
      if (!(dot(c.coeffs) == c.rhs)) throw std::logic_error("lp: equality residual at optimum");
    for (const auto& c : lp_.le)
      if (dot(c.coeffs) > c.rhs) throw std::logic_error("lp: inequality violated at optimum");
    for (int j = 0; j < lp_.num_vars; ++j) {
      if (!lp_.lower.empty() && lp_.lower[j] && x[j] < *lp_.lower[j])
        throw std::logic_error("lp: lower bound violated at optimum");
      if (!lp_.upper.empty() && lp_.upper[j] && x[j] > *lp_.upper[j])
        throw std::logic_error("lp: upper bound violated at optimum");
    }
  }

  const LinearProgram<S>& lp_;
  std::vector<VarMap> vars_;
  std::vector<std::vector<S>> rows_;
  std::vector<S> rhs_;
  std::vector<int> basis_;
  std::vector<S> costs_;
  int ncols_ = 0;
  int art_start_ = 0;
  int phase_ = 1;
};

}  // namespace lp_detail

template <typename S>
LpOutcome<S> solve(const LinearProgram<S>& lp) {
  return lp_detail::Simplex<S>(lp).run();
}

// Feasibility only: ignores the objective (phase one decides).
template <typename S>
LpOutcome<S> feasible_point(const LinearProgram<S>& lp) {
  LinearProgram<S> copy = lp;
  copy.objective.clear();
  return lp_detail::Simplex<S>(copy).run();
}

}  // namespace nlgames
