// Dense phase-one simplex for small feasibility problems.
#pragma once

#include <utility>
#include <vector>

namespace tammes {

enum class Relation { LessEq, Equal, GreaterEq };

class LinearProgram {
public:
    /// Adds a variable with bounds lo <= x <= hi (hi may be +infinity). Returns its index.
    int add_variable(double lo, double hi);
    void add_constraint(std::vector<std::pair<int, double>> terms, Relation rel, double rhs);

    int variable_count() const { return static_cast<int>(lower_.size()); }

    /// True iff the constraint system has a solution (Bland's rule, tolerance tol).
    bool feasible(double tol = 1e-9) const;

private:
    struct Row {
        std::vector<std::pair<int, double>> terms;
        Relation rel;
        double rhs;
    };
    std::vector<double> lower_, upper_;
    std::vector<Row> rows_;
};

}  // namespace tammes
