#include "cohkit/lp.hpp"

#include <stdexcept>

namespace cohkit {

std::size_t LinearProgram::add_variable(VarKind kind, Rational cost) {
  vars.push_back(kind);
  objective.push_back(std::move(cost));
  for (auto& r : rows) r.coeffs.emplace_back(0);
  return vars.size() - 1;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != vars.size()) throw std::invalid_argument("row width differs from variable count");
  rows.push_back({std::move(coeffs), rel, std::move(rhs)});
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

enum class ColKind { Structural, Slack, Artificial };

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t m = lp.rows.size();
    for (std::size_t v = 0; v < lp.vars.size(); ++v) {
      var_col_.push_back(ncols_);
      add_col(ColKind::Structural);
      if (lp.vars[v] == VarKind::Free) add_col(ColKind::Structural);
    }
    sign_.assign(m, 1);
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      rel[i] = lp.rows[i].rel;
      if (sgn(lp.rows[i].rhs) < 0) {
        sign_[i] = -1;
        if (rel[i] == Relation::LessEq) rel[i] = Relation::GreaterEq;
        else if (rel[i] == Relation::GreaterEq) rel[i] = Relation::LessEq;
      }
    }
    // aux columns: slack/surplus then artificial, row by row
    std::vector<std::size_t> slack(m, npos), art(m, npos);
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] != Relation::Equal) slack[i] = add_col(ColKind::Slack);
      if (rel[i] != Relation::LessEq) art[i] = add_col(ColKind::Artificial);
    }
    t_.assign(m, std::vector<Rational>(ncols_ + 1));
    basis_.assign(m, 0);
    init_basic_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = lp.rows[i];
      for (std::size_t v = 0; v < lp.vars.size(); ++v) {
        if (sgn(row.coeffs[v]) == 0) continue;
        Rational a = sign_[i] < 0 ? Rational(-row.coeffs[v]) : row.coeffs[v];
        t_[i][var_col_[v]] = a;
        if (lp.vars[v] == VarKind::Free) t_[i][var_col_[v] + 1] = -a;
      }
      t_[i][ncols_] = sign_[i] < 0 ? Rational(-row.rhs) : row.rhs;
      if (slack[i] != npos) t_[i][slack[i]] = rel[i] == Relation::LessEq ? 1 : -1;
      if (art[i] != npos) t_[i][art[i]] = 1;
      basis_[i] = init_basic_[i] = rel[i] == Relation::LessEq ? slack[i] : art[i];
    }
  }

  LpResult run() {
    LpResult res;
    // phase 1
    cost_.assign(ncols_, Rational(0));
    for (std::size_t j = 0; j < ncols_; ++j)
      if (kind_[j] == ColKind::Artificial) cost_[j] = 1;
    price();
    if (!iterate(false)) throw std::logic_error("phase 1 cannot be unbounded");
    if (sgn(objective_value()) > 0) {
      res.status = LpStatus::Infeasible;
      res.certificate.resize(t_.size());
      for (std::size_t i = 0; i < t_.size(); ++i) {
        std::size_t j = init_basic_[i];
        Rational y = cost_[j] - d_[j];
        res.certificate[i] = sign_[i] < 0 ? Rational(-y) : y;
      }
      return res;
    }
    drive_out_artificials();

    if (lp_.sense == Sense::Feasibility) {
      res.status = LpStatus::Optimal;
      res.value = 0;
      res.x = solution();
      return res;
    }
    cost_.assign(ncols_, Rational(0));
    for (std::size_t v = 0; v < lp_.vars.size(); ++v) {
      Rational c = lp_.sense == Sense::Maximize ? Rational(-lp_.objective[v]) : lp_.objective[v];
      cost_[var_col_[v]] = c;
      if (lp_.vars[v] == VarKind::Free) cost_[var_col_[v] + 1] = -c;
    }
    price();
    if (!iterate(true)) {
      res.status = LpStatus::Unbounded;
      std::vector<Rational> dir(ncols_);
      dir[entering_] = 1;
      for (std::size_t i = 0; i < t_.size(); ++i) dir[basis_[i]] = -t_[i][entering_];
      res.ray = to_vars(dir);
      res.x = solution();
      return res;
    }
    res.status = LpStatus::Optimal;
    res.value = objective_value();
    if (lp_.sense == Sense::Maximize) res.value = -res.value;
    res.x = solution();
    return res;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t add_col(ColKind k) {
    kind_.push_back(k);
    return ncols_++;
  }

  void price() {
    d_ = cost_;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (sgn(t_[i][j]) != 0) d_[j] -= cb * t_[i][j];
    }
  }

  Rational objective_value() const {
    Rational z = 0;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (sgn(cost_[basis_[i]]) != 0) z += cost_[basis_[i]] * t_[i][ncols_];
    return z;
  }

  // false when unbounded
  bool iterate(bool block_artificials) {
    for (;;) {
      entering_ = npos;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (block_artificials && kind_[j] == ColKind::Artificial) continue;
        if (sgn(d_[j]) < 0) {
          entering_ = j;
          break;
        }
      }
      if (entering_ == npos) return true;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        const Rational& a = t_[i][entering_];
        if (sgn(a) <= 0) continue;
        Rational ratio = t_[i][ncols_] / a;
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return false;
      pivot(leave, entering_);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = t_[r];
    Rational inv = 1 / pr[c];
    for (auto& v : pr)
      if (sgn(v) != 0) v *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      Rational f = t_[i][c];
      auto& row = t_[i];
      for (std::size_t j = 0; j <= ncols_; ++j)
        if (sgn(pr[j]) != 0) row[j] -= f * pr[j];
    }
    if (sgn(d_[c]) != 0) {
      Rational f = d_[c];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (sgn(pr[j]) != 0) d_[j] -= f * pr[j];
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (kind_[basis_[i]] != ColKind::Artificial) continue;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (kind_[j] != ColKind::Artificial && sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
      // otherwise the row is redundant and its artificial stays basic at 0
    }
  }

  std::vector<Rational> to_vars(const std::vector<Rational>& cols) const {
    std::vector<Rational> x(lp_.vars.size());
    for (std::size_t v = 0; v < lp_.vars.size(); ++v) {
      x[v] = cols[var_col_[v]];
      if (lp_.vars[v] == VarKind::Free) x[v] -= cols[var_col_[v] + 1];
    }
    return x;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> cols(ncols_);
    for (std::size_t i = 0; i < t_.size(); ++i) cols[basis_[i]] = t_[i][ncols_];
    return to_vars(cols);
  }

  const LinearProgram& lp_;
  std::size_t ncols_ = 0;
  std::vector<ColKind> kind_;
  std::vector<std::size_t> var_col_;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_, init_basic_;
  std::vector<Rational> cost_, d_;
  std::size_t entering_ = npos;
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.vars.size()) throw std::invalid_argument("objective width differs from variable count");
  for (const auto& r : lp.rows)
    if (r.coeffs.size() != lp.vars.size()) throw std::invalid_argument("row width differs from variable count");
  return Tableau(lp).run();
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.vars.size()) return false;
  for (std::size_t v = 0; v < x.size(); ++v)
    if (lp.vars[v] == VarKind::NonNegative && sgn(x[v]) < 0) return false;
  for (const auto& r : lp.rows) {
    Rational s = 0;
    for (std::size_t v = 0; v < x.size(); ++v) s += r.coeffs[v] * x[v];
    if (r.rel == Relation::LessEq && s > r.rhs) return false;
    if (r.rel == Relation::GreaterEq && s < r.rhs) return false;
    if (r.rel == Relation::Equal && s != r.rhs) return false;
  }
  return true;
}

bool is_farkas_certificate(const LinearProgram& lp, const std::vector<Rational>& y) {
  if (y.size() != lp.rows.size()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (lp.rows[i].rel == Relation::LessEq && sgn(y[i]) > 0) return false;
    if (lp.rows[i].rel == Relation::GreaterEq && sgn(y[i]) < 0) return false;
    yb += y[i] * lp.rows[i].rhs;
  }
  if (sgn(yb) <= 0) return false;
  for (std::size_t v = 0; v < lp.vars.size(); ++v) {
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * lp.rows[i].coeffs[v];
    if (lp.vars[v] == VarKind::Free ? sgn(s) != 0 : sgn(s) > 0) return false;
  }
  return true;
}

HullResult hull_membership(const std::vector<std::vector<Rational>>& points,
                           const std::vector<Rational>& p) {
  if (points.empty()) throw std::invalid_argument("hull_membership: no points");
  const std::size_t n = p.size(), m = points.size();
  for (const auto& q : points)
    if (q.size() != n) throw std::invalid_argument("hull_membership: dimension mismatch");

  LinearProgram lp;
  for (std::size_t h = 0; h < m; ++h) lp.add_variable();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(m);
    for (std::size_t h = 0; h < m; ++h) row[h] = points[h][i];
    lp.add_row(std::move(row), Relation::Equal, p[i]);
  }
  lp.add_row(std::vector<Rational>(m, Rational(1)), Relation::Equal, 1);
  LpResult r = solve(lp);
  HullResult out;
  if (r.status == LpStatus::Optimal) {
    out.inside = true;
    out.weights = std::move(r.x);
    return out;
  }

  // max eps  s.t.  s.(Q_h - p) >= eps,  -1 <= s_i <= 1,  eps <= 1
  LinearProgram sep;
  sep.sense = Sense::Maximize;
  for (std::size_t i = 0; i < n; ++i) sep.add_variable(VarKind::Free);
  std::size_t eps = sep.add_variable(VarKind::Free, 1);
  for (std::size_t h = 0; h < m; ++h) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = points[h][i] - p[i];
    row[eps] = -1;
    sep.add_row(std::move(row), Relation::GreaterEq, 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n + 1);
    row[i] = 1;
    sep.add_row(row, Relation::LessEq, 1);
    sep.add_row(std::move(row), Relation::GreaterEq, -1);
  }
  std::vector<Rational> cap(n + 1);
  cap[eps] = 1;
  sep.add_row(std::move(cap), Relation::LessEq, 1);
  LpResult s = solve(sep);
  if (s.status != LpStatus::Optimal || sgn(s.value) <= 0)
    throw std::logic_error("hull_membership: no separating vector for an outside point");

  Rational top = 0;
  for (std::size_t i = 0; i < n; ++i) top = std::max<Rational>(top, abs(s.x[i]));
  out.stakes.assign(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(n));
  for (auto& v : out.stakes) v /= top;
  for (std::size_t h = 0; h < m; ++h) {
    Rational g = 0;
    for (std::size_t i = 0; i < n; ++i) g += out.stakes[i] * (points[h][i] - p[i]);
    if (h == 0 || g < out.margin) out.margin = g;
  }
  return out;
}

}  // namespace cohkit
