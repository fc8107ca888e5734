// Extremal quantities derived from enumerations and explicit constructions.
#pragma once

#include "tammes/records.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tammes {

/// arccos((cot^2 w - 1) / 2) with w = pi n / (6n - 12). Throws std::domain_error for n <= 2.
double fejes_toth_bound(int n);

struct TammesValue {
    double d_n = 0.0;
    /// Indices of the maximal records.
    std::vector<int> maximal;
};

/// d_n = max d_max over feasible records; maximal records are those within
/// 2e-3 of it whose d_max is attained non-degenerately.
/// Throws std::invalid_argument when there is no feasible record.
TammesValue tammes_from_records(const std::vector<GraphRecord>& records);

int count_irreducible(const std::vector<GraphRecord>& records);

/// 3n - 6; equality is attained exactly for n in {3, 4, 6, 12}. Throws for n <= 2.
int contact_upper_bound(int n);

/// Largest / smallest edge count over feasible records. Throw on an empty set.
int k_star(const std::vector<GraphRecord>& records);
int kappa(const std::vector<GraphRecord>& records);

/// Smallest d_min over feasible records.
double delta_n(const std::vector<GraphRecord>& records);

std::vector<UnitVector> icosahedron_points();

/// Regular icosahedron with 12 - n mutually adjacent vertices removed (n in 9..12).
SphericalConfig icosa_config(int n);

/// North pole plus an equatorial square: five points with eight contacts.
SphericalConfig k5_config();

struct AntipodalOptimum {
    SphericalConfig config;
    double a_m = 0.0;
};

/// Optimal antipodal configuration of m pairs, m in 2..6.
AntipodalOptimum antipodal_optimum(int m);

/// Best contact count known from constructions on n points (n >= 2); 0 when none is built in.
int construction_contacts(int n);

struct DanzerAnswer {
    int n = 0;
    double delta = 0.0;
    CanonicalKey witness;
};

/// Least n in [n_from, n_to] with delta_n < arccos(1/sqrt 5). Throws
/// std::invalid_argument naming any n in the range that has no records.
std::optional<DanzerAnswer> danzer_question_scan(const std::map<int, std::vector<GraphRecord>>& by_n, int n_from,
                                                 int n_to);

struct ExtremalReport {
    int n = 0;
    int i_n = 0;
    int undecided = 0;
    double d_n = 0.0;
    double delta_n = 0.0;
    int k_star = 0;
    int kappa = 0;
    double ft_bound = 0.0;
    int k_lower = 0;
    std::vector<std::string> maximal_keys;
};

ExtremalReport extremal_report(int n, const std::vector<GraphRecord>& records);
nlohmann::json report_to_json(const ExtremalReport& r);

/// Summary table over several n: one row per report.
std::string reports_table(const std::vector<ExtremalReport>& reports, const std::string& format);

}  // namespace tammes
