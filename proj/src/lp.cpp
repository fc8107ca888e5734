#include "tammes/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tammes {

int LinearProgram::add_variable(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("LinearProgram: empty variable range");
    lower_.push_back(lo);
    upper_.push_back(hi);
    return static_cast<int>(lower_.size()) - 1;
}

void LinearProgram::add_constraint(std::vector<std::pair<int, double>> terms, Relation rel, double rhs) {
    for (auto& [j, a] : terms)
        if (j < 0 || j >= variable_count()) throw std::out_of_range("LinearProgram: unknown variable");
    rows_.push_back({std::move(terms), rel, rhs});
}

bool LinearProgram::feasible(double tol) const {
    // Shift x = lo + y with y >= 0; finite upper bounds become rows.
    struct StdRow {
        std::vector<double> a;
        Relation rel;
        double b;
    };
    const int nv = variable_count();
    std::vector<StdRow> rows;
    for (const auto& r : rows_) {
        StdRow s{std::vector<double>(nv, 0.0), r.rel, r.rhs};
        for (auto [j, a] : r.terms) {
            s.a[j] += a;
            s.b -= a * lower_[j];
        }
        rows.push_back(std::move(s));
    }
    for (int j = 0; j < nv; ++j)
        if (std::isfinite(upper_[j])) {
            StdRow s{std::vector<double>(nv, 0.0), Relation::LessEq, upper_[j] - lower_[j]};
            s.a[j] = 1.0;
            rows.push_back(std::move(s));
        }
    for (auto& r : rows)
        if (r.b < 0.0) {
            for (double& a : r.a) a = -a;
            r.b = -r.b;
            if (r.rel == Relation::LessEq) r.rel = Relation::GreaterEq;
            else if (r.rel == Relation::GreaterEq) r.rel = Relation::LessEq;
        }

    const int m = static_cast<int>(rows.size());
    if (m == 0) return true;
    int slack_count = 0, art_count = 0;
    for (const auto& r : rows) {
        if (r.rel != Relation::Equal) ++slack_count;
        if (r.rel != Relation::LessEq) ++art_count;
    }
    const int cols = nv + slack_count + art_count;
    // Tableau: m constraint rows plus the phase-one objective row; last column is the rhs.
    std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols + 1, 0.0));
    std::vector<int> basis(m);
    std::vector<char> artificial(cols, 0);
    int next_slack = nv, next_art = nv + slack_count;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j) t[i][j] = rows[i].a[j];
        t[i][cols] = rows[i].b;
        if (rows[i].rel == Relation::LessEq) {
            t[i][next_slack] = 1.0;
            basis[i] = next_slack++;
        } else {
            if (rows[i].rel == Relation::GreaterEq) t[i][next_slack++] = -1.0;
            t[i][next_art] = 1.0;
            artificial[next_art] = 1;
            basis[i] = next_art++;
        }
    }
    // Objective: minimize the sum of artificials, written as reduced costs.
    auto& obj = t[m];
    for (int i = 0; i < m; ++i)
        if (artificial[basis[i]])
            for (int j = 0; j <= cols; ++j) obj[j] -= t[i][j];
    for (int j = 0; j < cols; ++j)
        if (artificial[j]) obj[j] += 1.0;

    const int max_pivots = 50 * (m + cols);
    for (int iter = 0; iter < max_pivots; ++iter) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (obj[j] < -tol) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] > tol) {
                const double ratio = t[i][cols] / t[i][enter];
                if (leave < 0 || ratio < best - 1e-12 || (std::abs(ratio - best) <= 1e-12 && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) break;  // unbounded direction; cannot happen in phase one
        const double piv = t[leave][enter];
        for (double& x : t[leave]) x /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = t[i][enter];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return -obj[cols] <= 1e-7;
}

}  // namespace tammes
