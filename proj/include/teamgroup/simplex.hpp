#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tg {

struct SimplexConfig {
    double feasibility_tol = 1e-6;  // also the optimality (reduced-cost) tolerance
    double pivot_tol = 1e-9;        // entries below this never pivot
    int bland_factor = 5;           // switch to Bland after factor*(rows+vars) degenerate pivots
};

enum class LpStatus { Optimal, Unbounded, PivotLimit };

struct SimplexResult {
    LpStatus status = LpStatus::Optimal;
    double objective = 0.0;
    std::vector<double> x;              // structural variable values
    std::vector<double> row_duals;      // one per constraint row, >= 0 up to tolerance
    std::vector<double> reduced_costs;  // c_j - y·A_j per structural variable
    std::vector<int> basis;             // basic variable per row (slacks are n..n+rows-1)
    int pivots = 0;
};

/// Dense-tableau primal simplex for: maximize c·x subject to A x <= b, x >= 0,
/// with b >= 0 (the slack basis is the starting vertex). Dantzig pricing,
/// falling back to Bland's rule once degenerate pivots pile up.
class DenseSimplex {
public:
    DenseSimplex(std::vector<std::vector<double>> rows, std::vector<double> rhs,
                 std::vector<double> objective, SimplexConfig config = {})
        : config_(config),
          nrows_(static_cast<int>(rows.size())),
          nvars_(static_cast<int>(objective.size())),
          cost_(std::move(objective)) {
        if (rhs.size() != rows.size()) {
            throw std::invalid_argument("simplex: rhs / row count mismatch");
        }
        tableau_.assign(nrows_, std::vector<double>(nvars_ + nrows_ + 1, 0.0));
        for (int i = 0; i < nrows_; ++i) {
            if (static_cast<int>(rows[i].size()) != nvars_) {
                throw std::invalid_argument("simplex: row width mismatch");
            }
            if (rhs[i] < 0.0) {
                throw std::invalid_argument("simplex: negative rhs");
            }
            std::copy(rows[i].begin(), rows[i].end(), tableau_[i].begin());
            tableau_[i][nvars_ + i] = 1.0;
            tableau_[i].back() = rhs[i];
        }
        objrow_.assign(nvars_ + nrows_ + 1, 0.0);
        for (int j = 0; j < nvars_; ++j) {
            objrow_[j] = -cost_[j];
        }
        basis_.resize(nrows_);
        for (int i = 0; i < nrows_; ++i) {
            basis_[i] = nvars_ + i;
        }
    }

    SimplexResult solve() {
        SimplexResult res;
        const int total = nvars_ + nrows_;
        const int bland_threshold = config_.bland_factor * (nrows_ + total);
        const int pivot_limit = 10000 + 200 * (nrows_ + total);
        int degenerate = 0;
        bool bland = false;

        for (;;) {
            const int enter = pick_entering(bland);
            if (enter < 0) {
                res.status = LpStatus::Optimal;
                break;
            }
            const int leave = pick_leaving(enter);
            if (leave < 0) {
                res.status = LpStatus::Unbounded;
                break;
            }
            if (tableau_[leave].back() / tableau_[leave][enter] < 1e-12) {
                if (++degenerate > bland_threshold) {
                    bland = true;
                }
            }
            pivot(leave, enter);
            if (++res.pivots > pivot_limit) {
                res.status = LpStatus::PivotLimit;
                break;
            }
        }

        res.x.assign(nvars_, 0.0);
        for (int i = 0; i < nrows_; ++i) {
            if (basis_[i] < nvars_) {
                res.x[basis_[i]] = tableau_[i].back();
            }
        }
        for (auto& v : res.x) {
            if (std::abs(v) < 1e-12) v = 0.0;
        }
        res.row_duals.assign(nrows_, 0.0);
        for (int i = 0; i < nrows_; ++i) {
            res.row_duals[i] = objrow_[nvars_ + i];
        }
        res.reduced_costs.assign(nvars_, 0.0);
        for (int j = 0; j < nvars_; ++j) {
            res.reduced_costs[j] = -objrow_[j];
        }
        res.objective = 0.0;
        for (int j = 0; j < nvars_; ++j) {
            res.objective += cost_[j] * res.x[j];
        }
        res.basis = basis_;
        return res;
    }

private:
    int pick_entering(bool bland) const {
        const int total = nvars_ + nrows_;
        if (bland) {
            for (int j = 0; j < total; ++j) {
                if (objrow_[j] < -config_.feasibility_tol) {
                    return j;
                }
            }
            return -1;
        }
        int best = -1;
        double best_value = -config_.feasibility_tol;
        for (int j = 0; j < total; ++j) {
            if (objrow_[j] < best_value) {
                best_value = objrow_[j];
                best = j;
            }
        }
        return best;
    }

    // Min-ratio row; ties go to the smallest basic variable index.
    int pick_leaving(int enter) const {
        int leave = -1;
        double best_ratio = 0.0;
        for (int i = 0; i < nrows_; ++i) {
            const double a = tableau_[i][enter];
            if (a <= config_.pivot_tol) {
                continue;
            }
            const double ratio = tableau_[i].back() / a;
            if (leave < 0 || ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        return leave;
    }

    void pivot(int row, int col) {
        auto& prow = tableau_[row];
        const double inv = 1.0 / prow[col];
        for (auto& v : prow) {
            v *= inv;
        }
        prow[col] = 1.0;
        for (int i = 0; i < nrows_; ++i) {
            if (i == row) {
                continue;
            }
            const double factor = tableau_[i][col];
            if (factor == 0.0) {
                continue;
            }
            auto& target = tableau_[i];
            for (std::size_t j = 0; j < target.size(); ++j) {
                target[j] -= factor * prow[j];
            }
            target[col] = 0.0;
            if (target.back() > -1e-12 && target.back() < 0.0) {
                target.back() = 0.0;
            }
        }
        const double zfactor = objrow_[col];
        if (zfactor != 0.0) {
            for (std::size_t j = 0; j < objrow_.size(); ++j) {
                objrow_[j] -= zfactor * prow[j];
            }
            objrow_[col] = 0.0;
        }
        basis_[row] = col;
    }

    SimplexConfig config_;
    int nrows_;
    int nvars_;
    std::vector<double> cost_;
    std::vector<std::vector<double>> tableau_;
    std::vector<double> objrow_;
    std::vector<int> basis_;
};

inline SimplexResult simplex_maximize(std::vector<std::vector<double>> rows,
                                      std::vector<double> rhs, std::vector<double> objective,
                                      SimplexConfig config = {}) {
    return DenseSimplex(std::move(rows), std::move(rhs), std::move(objective), config).solve();
}

}  // namespace tg
