#include "tammes/embedder.hpp"

#include "tammes/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace tammes {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kTriangleLimit = 2.0 * kPi / 3.0;

void tangent_basis(const Vec3& x, Vec3& e1, Vec3& e2) {
    const Vec3 a = std::abs(x.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    e1 = (a - a.dot(x) * x).normalized();
    e2 = x.cross(e1);
}

double alpha_or_flat(double d) { return d < kTriangleLimit ? equilateral_triangle_angle(d) : kPi; }

// Residual system over point coordinates (two tangent parameters per point)
// and optionally the edge length d.
//   edges:       <xi, xj> - cos d = 0
//   non-edges:   <xi, xj> - cos d + sep <= 0
//   corners:     det(a, b, c) >= cvx for consecutive a, b, c of a face
//   containment: det(a, b, q) >= cvx for an isolated q and each edge a -> b of its face
//   bounds:      d_lo <= d <= d_hi
class ContactSystem {
public:
    ContactSystem(const PlanarCandidate& g, bool free_d, double d_lo, double d_hi, double sep, double cvx,
                  bool with_isolated = true)
        : n_(g.n()), free_d_(free_d), d_lo_(d_lo), d_hi_(d_hi), sep_(sep), cvx_(cvx) {
        edges_ = g.edges();
        const int active = with_isolated ? n_ : g.core_size();
        for (int i = 0; i < active; ++i)
            for (int j = i + 1; j < active; ++j)
                if (!g.adjacent(i, j)) nonedges_.emplace_back(i, j);
        for (const auto& f : g.faces()) {
            const int m = static_cast<int>(f.size());
            for (int i = 0; i < m; ++i) dets_.push_back({f[(i + m - 1) % m], f[i], f[(i + 1) % m]});
        }
        if (!with_isolated) return;
        for (const auto& iso : g.isolated()) {
            const auto& f = g.faces()[iso.face];
            const int m = static_cast<int>(f.size());
            for (int i = 0; i < m; ++i) dets_.push_back({f[i], f[(i + 1) % m], iso.vertex});
        }
    }

    int variables() const { return 2 * n_ + (free_d_ ? 1 : 0); }

    // Fills r with the active residuals; J (if given) with their Jacobian.
    void evaluate(const std::vector<Vec3>& x, double d, std::vector<double>& r, Eigen::MatrixXd* J) const {
        r.clear();
        struct Entry {
            int point;
            Vec3 grad;
        };
        std::vector<std::vector<Entry>> grads;
        std::vector<double> dgrad;
        const double cd = std::cos(d), sd = std::sin(d);
        for (auto [i, j] : edges_) {
            r.push_back(x[i].dot(x[j]) - cd);
            if (J) {
                grads.push_back({{i, x[j]}, {j, x[i]}});
                dgrad.push_back(sd);
            }
        }
        for (auto [i, j] : nonedges_) {
            const double h = x[i].dot(x[j]) - cd + sep_;
            if (h <= 0.0) continue;
            r.push_back(h);
            if (J) {
                grads.push_back({{i, x[j]}, {j, x[i]}});
                dgrad.push_back(sd);
            }
        }
        for (const auto& t : dets_) {
            const Vec3 &a = x[t[0]], &b = x[t[1]], &c = x[t[2]];
            const double h = cvx_ - triple(a, b, c);
            if (h <= 0.0) continue;
            r.push_back(h);
            if (J) {
                grads.push_back({{t[0], -b.cross(c)}, {t[1], -c.cross(a)}, {t[2], -a.cross(b)}});
                dgrad.push_back(0.0);
            }
        }
        if (free_d_) {
            if (d < d_lo_) {
                r.push_back(d_lo_ - d);
                if (J) {
                    grads.push_back({});
                    dgrad.push_back(-1.0);
                }
            }
            if (d > d_hi_) {
                r.push_back(d - d_hi_);
                if (J) {
                    grads.push_back({});
                    dgrad.push_back(1.0);
                }
            }
        }
        if (!J) return;
        J->setZero(static_cast<int>(r.size()), variables());
        std::vector<Vec3> e1(n_), e2(n_);
        for (int p = 0; p < n_; ++p) tangent_basis(x[p], e1[p], e2[p]);
        for (size_t k = 0; k < r.size(); ++k) {
            for (const auto& e : grads[k]) {
                (*J)(k, 2 * e.point) += e.grad.dot(e1[e.point]);
                (*J)(k, 2 * e.point + 1) += e.grad.dot(e2[e.point]);
            }
            if (free_d_) (*J)(k, 2 * n_) = dgrad[k];
        }
    }

    void step(const std::vector<Vec3>& x, double d, const Eigen::VectorXd& delta, std::vector<Vec3>& x_out,
              double& d_out) const {
        x_out.resize(n_);
        for (int p = 0; p < n_; ++p) {
            Vec3 e1, e2;
            tangent_basis(x[p], e1, e2);
            x_out[p] = (x[p] + delta[2 * p] * e1 + delta[2 * p + 1] * e2).normalized();
        }
        d_out = free_d_ ? d + delta[2 * n_] : d;
    }

private:
    int n_;
    bool free_d_;
    double d_lo_, d_hi_, sep_, cvx_;
    std::vector<std::pair<int, int>> edges_, nonedges_;
    std::vector<std::array<int, 3>> dets_;
};

enum class Outcome { Converged, Stuck, Unresolved };

struct LmSettings {
    int max_iterations = 500;
    double converge_tol = 1e-12;
    double accept_tol = 1e-10;
};

double max_abs(const std::vector<double>& r) {
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
}

double half_sq(const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s += v * v;
    return 0.5 * s;
}

// Levenberg-Marquardt on the active residuals. Stuck means the cost stopped
// decreasing at a positive value; Unresolved means the budget ran out first.
Outcome run_lm(const ContactSystem& sys, std::vector<Vec3>& x, double& d, const LmSettings& s) {
    std::vector<double> r, r_trial;
    std::vector<Vec3> x_trial;
    Eigen::MatrixXd J;
    double lambda = 1e-3;
    std::vector<double> history;
    const int nv = sys.variables();
    for (int iter = 0; iter < s.max_iterations; ++iter) {
        sys.evaluate(x, d, r, &J);
        const double cost = half_sq(r);
        if (max_abs(r) < s.converge_tol) return Outcome::Converged;
        history.push_back(cost);
        if (history.size() > 40 && cost > 0.99 * history[history.size() - 21] && max_abs(r) > 1e-7)
            return Outcome::Stuck;
        Eigen::Map<const Eigen::VectorXd> rv(r.data(), static_cast<int>(r.size()));
        const Eigen::MatrixXd A = J.transpose() * J;
        const Eigen::VectorXd grad = J.transpose() * rv;
        bool accepted = false;
        while (lambda < 1e12) {
            Eigen::MatrixXd M = A;
            for (int k = 0; k < nv; ++k) M(k, k) += lambda * (A(k, k) + 1e-9);
            const Eigen::VectorXd delta = M.ldlt().solve(-grad);
            double d_trial;
            sys.step(x, d, delta, x_trial, d_trial);
            sys.evaluate(x_trial, d_trial, r_trial, nullptr);
            if (half_sq(r_trial) < cost) {
                x.swap(x_trial);
                d = d_trial;
                lambda = std::max(lambda / 3.0, 1e-15);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!accepted) return max_abs(r) < s.accept_tol ? Outcome::Converged : Outcome::Stuck;
    }
    sys.evaluate(x, d, r, nullptr);
    return max_abs(r) < s.accept_tol ? Outcome::Converged : Outcome::Unresolved;
}

std::uint64_t key_hash(const PlanarCandidate& g) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : canonical_key(g).bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

Vec3 face_centroid(const std::vector<Vec3>& x, const std::vector<int>& face) {
    Vec3 c = Vec3::Zero();
    for (int v : face) c += x[v];
    return c.normalized();
}

// Weighted Tutte drawing with the given outer face, lifted to the sphere by
// inverse stereographic projection so that the outer face surrounds the north pole.
std::vector<Vec3> tutte_start(const PlanarCandidate& g, int outer, double scale, double noise, std::mt19937_64& rng) {
    const int nc = g.core_size();
    std::uniform_real_distribution<double> weight(0.5, 1.5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::Vector2d> plane(nc, Eigen::Vector2d::Zero());
    std::vector<int> slot(nc, -1);
    const auto& of = g.faces()[outer];
    const int m = static_cast<int>(of.size());
    for (int k = 0; k < m; ++k) {
        const double a = -kTwoPi * k / m;
        plane[of[k]] = {std::cos(a), std::sin(a)};
        slot[of[k]] = -2;
    }
    std::vector<int> inner;
    for (int v = 0; v < nc; ++v)
        if (slot[v] != -2) {
            slot[v] = static_cast<int>(inner.size());
            inner.push_back(v);
        }
    if (!inner.empty()) {
        const int k = static_cast<int>(inner.size());
        Eigen::MatrixXd L = Eigen::MatrixXd::Zero(k, k);
        Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(k, 2);
        std::map<std::pair<int, int>, double> w;
        for (auto [a, b] : g.edges()) w[{a, b}] = w[{b, a}] = weight(rng);
        for (int i = 0; i < k; ++i) {
            const int v = inner[i];
            for (int u : g.rotation()[v]) {
                const double wt = w[{v, u}];
                L(i, i) += wt;
                if (slot[u] >= 0) L(i, slot[u]) -= wt;
                else rhs.row(i) += wt * plane[u].transpose();
            }
        }
        const Eigen::MatrixXd sol = L.partialPivLu().solve(rhs);
        for (int i = 0; i < k; ++i) plane[inner[i]] = sol.row(i).transpose();
    }
    std::vector<Vec3> x(g.n());
    for (int v = 0; v < nc; ++v) {
        const Eigen::Vector2d p = scale * plane[v];
        const double r2 = p.squaredNorm();
        x[v] = Vec3(2 * p.x(), 2 * p.y(), r2 - 1.0) / (r2 + 1.0);
    }
    double orient = 0.0;
    for (const auto& f : g.faces()) {
        const int fm = static_cast<int>(f.size());
        for (int i = 0; i < fm; ++i) orient += triple(x[f[(i + fm - 1) % fm]], x[f[i]], x[f[(i + 1) % fm]]);
    }
    if (orient < 0.0)
        for (auto& p : x) p.x() = -p.x();
    for (const auto& iso : g.isolated()) x[iso.vertex] = face_centroid(x, g.faces()[iso.face]);
    for (auto& p : x) p = (p + noise * Vec3(gauss(rng), gauss(rng), gauss(rng))).normalized();
    return x;
}

double mean_edge(const PlanarCandidate& g, const std::vector<Vec3>& x) {
    double s = 0.0;
    const auto edges = g.edges();
    for (auto [a, b] : edges) s += std::acos(std::clamp(x[a].dot(x[b]), -1.0, 1.0));
    return s / static_cast<double>(edges.size());
}

std::vector<UnitVector> to_units(const std::vector<Vec3>& x) {
    std::vector<UnitVector> u;
    u.reserve(x.size());
    for (const auto& p : x) u.emplace_back(p);
    return u;
}

std::vector<Vec3> to_vecs(const std::vector<UnitVector>& u) {
    std::vector<Vec3> x;
    x.reserve(u.size());
    for (const auto& p : u) x.push_back(p.vec());
    return x;
}

double d_ceiling(const PlanarCandidate& g) {
    double cap = kPi - 1e-6;
    for (const auto& f : g.faces()) cap = std::min(cap, kTwoPi / static_cast<double>(f.size()) - 1e-9);
    return cap;
}

// Starting point number s of a multistart sequence.
struct Start {
    std::vector<Vec3> x;
    double d;
};

Start make_start(const PlanarCandidate& g, int s, int total, double d_lo, double d_hi, std::mt19937_64& rng) {
    std::vector<int> order(g.face_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.faces()[a].size() > g.faces()[b].size(); });
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int outer = order[s % static_cast<int>(order.size())];
    const double scale = 1.2 + 2.5 * unit(rng) / std::sqrt(static_cast<double>(g.faces()[outer].size()) / 3.0);
    const double noise = 0.01 + 0.1 * static_cast<double>(s) / std::max(1, total);
    Start st{tutte_start(g, outer, scale, noise, rng), 0.0};
    const double guess = mean_edge(g, st.x);
    st.d = (s % 2 == 0) ? std::clamp(guess, d_lo, d_hi) : d_lo + (d_hi - d_lo) * unit(rng);
    return st;
}

// Steepest ascent direction of min_j dist(p, x_j) over the active set: the
// minimum-norm point of the convex hull of the active gradients (zero when
// the hull contains the origin).
Vec3 ascent_direction(const Vec3& p, const std::vector<Vec3>& grads) {
    Vec3 best = Vec3::Zero();
    double best_norm = std::numeric_limits<double>::infinity();
    auto consider = [&](const Vec3& w) {
        if (w.norm() >= best_norm) return;
        for (const auto& g : grads)
            if (g.dot(w) < w.squaredNorm() - 1e-12) return;
        best = w;
        best_norm = w.norm();
    };
    for (const auto& g : grads) consider(g);
    for (size_t i = 0; i < grads.size(); ++i)
        for (size_t j = i + 1; j < grads.size(); ++j) {
            const Vec3 e = grads[j] - grads[i];
            const double den = e.squaredNorm();
            if (den < 1e-30) continue;
            const double t = std::clamp(-grads[i].dot(e) / den, 0.0, 1.0);
            consider(grads[i] + t * e);
        }
    if (!std::isfinite(best_norm)) return Vec3::Zero();
    return best - best.dot(p) * p;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "feasible";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

SphericalConfig SphericalConfig::from_points(std::vector<UnitVector> points, double contact_tol) {
    SphericalConfig c;
    c.points = std::move(points);
    if (c.points.size() < 2) return c;
    c.psi = tammes::psi(c.points);
    const int n = static_cast<int>(c.points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (angular_dist(c.points[i], c.points[j]) <= c.psi + contact_tol) c.edges.emplace_back(i, j);
    return c;
}

bool lp_prune(const PlanarCandidate& g, double d_lo, double d_hi) {
    if (!(d_lo > 0.0 && d_lo <= d_hi && d_hi < kPi)) throw std::domain_error("lp_prune: interval must lie in (0, pi)");
    bool has_triangle = false;
    for (const auto& f : g.faces()) {
        const int m = static_cast<int>(f.size());
        if (m * d_lo >= kTwoPi - 1e-12) return false;
        if (m == 3) has_triangle = true;
    }
    if (has_triangle && d_lo >= kTriangleLimit) return false;

    LinearProgram lp;
    const int t = lp.add_variable(alpha_or_flat(d_lo), alpha_or_flat(d_hi));
    const int nc = g.core_size();
    std::vector<std::vector<std::pair<int, double>>> around(nc);
    for (const auto& f : g.faces()) {
        const int m = static_cast<int>(f.size());
        std::vector<int> vars(m, t);
        if (m > 3) {
            for (int i = 0; i < m; ++i) {
                vars[i] = lp.add_variable(0.0, kPi);
                lp.add_constraint({{vars[i], 1.0}, {t, -1.0}}, Relation::GreaterEq, 0.0);
            }
            if (m == 4) {
                lp.add_constraint({{vars[0], 1.0}, {vars[2], -1.0}}, Relation::Equal, 0.0);
                lp.add_constraint({{vars[1], 1.0}, {vars[3], -1.0}}, Relation::Equal, 0.0);
            }
            std::vector<std::pair<int, double>> sum;
            for (int v : vars) sum.emplace_back(v, 1.0);
            lp.add_constraint(sum, Relation::GreaterEq, (m - 2) * kPi);
            const double top = m * d_hi < kTwoPi ? m * regular_polygon_angle(m, d_hi) : m * kPi;
            lp.add_constraint(sum, Relation::LessEq, top);
        }
        for (int i = 0; i < m; ++i) around[f[i]].emplace_back(vars[i], 1.0);
    }
    for (int v = 0; v < nc; ++v) {
        std::map<int, double> merged;
        for (auto [var, c] : around[v]) merged[var] += c;
        lp.add_constraint({merged.begin(), merged.end()}, Relation::Equal, kTwoPi);
    }
    return lp.feasible();
}

std::vector<std::pair<double, double>> lp_feasible_intervals(const PlanarCandidate& g, double d_lo, double d_hi,
                                                             double resolution) {
    std::vector<std::pair<double, double>> pieces;
    auto rec = [&](auto&& self, double a, double b) -> void {
        if (!lp_prune(g, a, b)) return;
        if (b - a <= resolution) {
            if (!pieces.empty() && pieces.back().second >= a) pieces.back().second = b;
            else pieces.emplace_back(a, b);
            return;
        }
        const double mid = 0.5 * (a + b);
        self(self, a, mid);
        self(self, mid, b);
    };
    rec(rec, d_lo, d_hi);
    return pieces;
}

EmbeddingSolution make_solution(const PlanarCandidate& g, std::vector<UnitVector> points, double d) {
    EmbeddingSolution sol;
    sol.d = d;
    const auto x = to_vecs(points);
    std::vector<double> sums(g.core_size(), 0.0);
    double res = 0.0;
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& face = g.faces()[f];
        const int m = static_cast<int>(face.size());
        FaceAngleVector fa{f, {}};
        for (int i = 0; i < m; ++i) {
            const double u = corner_angle(x[face[(i + m - 1) % m]], x[face[i]], x[face[(i + 1) % m]]);
            fa.angles.push_back(u);
            sums[face[i]] += u;
        }
        res = std::max(res, polygon_closure_residual(d, fa));
        sol.face_angles.push_back(std::move(fa));
    }
    for (double s : sums) res = std::max(res, std::abs(s - kTwoPi));
    for (auto [a, b] : g.edges()) res = std::max(res, std::abs(angular_dist(points[a], points[b]) - d));
    sol.residual = res;
    sol.coords = SphericalConfig::from_points(std::move(points));
    return sol;
}

Slack slack_of(const PlanarCandidate& g, const std::vector<UnitVector>& points, double d) {
    Slack s{std::numeric_limits<double>::infinity(), 0.0};
    const int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) s.separation = std::min(s.separation, angular_dist(points[i], points[j]) - d);
    for (const auto& face : g.faces()) {
        const int m = static_cast<int>(face.size());
        for (int i = 0; i < m; ++i)
            s.max_corner = std::max(s.max_corner, corner_angle(points[face[(i + m - 1) % m]].vec(), points[face[i]].vec(),
                                                               points[face[(i + 1) % m]].vec()));
    }
    return s;
}

SolveResult solve_embedding(const PlanarCandidate& g, std::optional<double> d_fixed, const SolverOptions& options) {
    SolveResult result;
    std::vector<std::pair<double, double>> intervals;
    if (d_fixed) {
        const double d = *d_fixed;
        if (!(d > 0.0 && d < kPi)) throw std::domain_error("solve_embedding: d must lie in (0, pi)");
        if (d >= options.d_floor && lp_prune(g, d, d)) intervals.emplace_back(d, d);
    } else {
        const double lo = std::max(0.05, options.d_floor);
        const double hi = d_ceiling(g);
        if (lo < hi) intervals = lp_feasible_intervals(g, lo, hi);
    }
    if (intervals.empty()) {
        result.verdict = Verdict::Infeasible;
        return result;
    }
    const double d_lo = intervals.front().first, d_hi = intervals.back().second;
    ContactSystem sys(g, !d_fixed, d_lo, d_hi, options.separation_margin, options.convexity_margin);
    const LmSettings settings{options.max_iterations, options.converge_tol, std::min(options.accept_tol, 1e-10)};
    std::mt19937_64 rng(options.seed ^ key_hash(g));
    int unresolved = 0;
    for (int s = 0; s < options.starts; ++s) {
        ++result.attempts;
        Start st = make_start(g, s, options.starts, d_lo, d_hi, rng);
        if (d_fixed) st.d = *d_fixed;
        Outcome out = run_lm(sys, st.x, st.d, settings);
        if (out == Outcome::Unresolved) {
            LmSettings longer = settings;
            longer.max_iterations *= 4;
            out = run_lm(sys, st.x, st.d, longer);
        }
        if (out == Outcome::Converged) {
            EmbeddingSolution sol = make_solution(g, to_units(st.x), st.d);
            if (sol.residual < options.accept_tol && verify_config(sol.coords, g)) {
                result.verdict = Verdict::Feasible;
                result.solution = std::move(sol);
                return result;
            }
            ++unresolved;
        } else if (out == Outcome::Unresolved) {
            ++unresolved;
        }
    }
    result.verdict = unresolved == 0 ? Verdict::Infeasible : Verdict::Undecided;
    return result;
}

FeasibleRange d_range(const PlanarCandidate& g, const SolverOptions& options) {
    FeasibleRange range;
    const SolveResult base = solve_embedding(g, std::nullopt, options);
    range.status = base.verdict;
    if (base.verdict != Verdict::Feasible) return range;

    const double cap_hi = d_ceiling(g);
    const double cap_lo = std::max(1e-3, options.d_floor);
    const LmSettings settings{std::min(options.max_iterations, 300), options.converge_tol, 1e-11};
    std::mt19937_64 rng(options.seed ^ key_hash(g) ^ 0x9e3779b97f4a7c15ULL);

    // Looks for a closure point with d >= t (upward) or d <= t (downward).
    auto probe = [&](double t, bool upward, const std::vector<Vec3>& warm, std::vector<Vec3>& x_out, double& d_out) {
        const double lo = upward ? t : cap_lo, hi = upward ? cap_hi : t;
        ContactSystem sys(g, true, lo, hi, 0.0, 0.0);
        std::vector<Vec3> x = warm;
        double d = t;
        if (run_lm(sys, x, d, settings) == Outcome::Converged) {
            x_out = x;
            d_out = d;
            return true;
        }
        for (int k = 0; k < 4; ++k) {
            Start st = make_start(g, k, 4, lo, hi, rng);
            st.d = t;
            if (run_lm(sys, st.x, st.d, settings) == Outcome::Converged) {
                x_out = st.x;
                d_out = st.d;
                return true;
            }
        }
        return false;
    };

    auto extreme = [&](bool upward, double& value, std::vector<Vec3>& best) {
        const double sign = upward ? 1.0 : -1.0;
        best = to_vecs(base.solution->coords.points);
        double good = base.solution->d, bad;
        double step = 2e-3;
        std::vector<Vec3> x;
        double d;
        for (;;) {
            const double t = good + sign * step;
            if (upward ? t >= cap_hi : t <= cap_lo) {
                bad = upward ? cap_hi : cap_lo;
                break;
            }
            if (!probe(t, upward, best, x, d)) {
                bad = t;
                break;
            }
            good = upward ? std::max(t, d) : std::min(t, d);
            best = x;
            step *= 2.0;
        }
        while (std::abs(bad - good) > 1e-7) {
            const double t = 0.5 * (good + bad);
            if (probe(t, upward, best, x, d)) {
                good = upward ? std::max(t, d) : std::min(t, d);
                best = x;
            } else {
                bad = t;
            }
        }
        value = good;
    };

    std::vector<Vec3> x_max, x_min;
    extreme(true, range.d_max, x_max);
    extreme(false, range.d_min, x_min);
    range.witness_max = make_solution(g, to_units(x_max), range.d_max);
    range.witness_min = make_solution(g, to_units(x_min), range.d_min);
    auto at_bound = [&](const std::vector<Vec3>& x, double d) {
        const Slack s = slack_of(g, to_units(x), d);
        return s.separation < 1e-5 || s.max_corner > kPi - 1e-5;
    };
    range.max_at_bound = at_bound(x_max, range.d_max);
    range.min_at_bound = at_bound(x_min, range.d_min);
    return range;
}

UnitVector maximin_position(const std::vector<UnitVector>& points, int index) {
    if (index < 0 || index >= static_cast<int>(points.size())) throw std::out_of_range("maximin_position: index");
    const int n = static_cast<int>(points.size());
    Vec3 p = points[index].vec();
    auto value = [&](const Vec3& q) {
        double m = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j)
            if (j != index) m = std::min(m, std::acos(std::clamp(q.dot(points[j].vec()), -1.0, 1.0)));
        return m;
    };
    double h = 0.05;
    for (int iter = 0; iter < 5000 && h > 1e-14; ++iter) {
        const double f = value(p);
        std::vector<Vec3> grads;
        const double band = std::max(1e-12, 0.5 * h);
        for (int j = 0; j < n; ++j) {
            if (j == index) continue;
            const Vec3& q = points[j].vec();
            if (std::acos(std::clamp(p.dot(q), -1.0, 1.0)) <= f + band) grads.push_back(-tangent_toward(p, q));
        }
        const Vec3 w = ascent_direction(p, grads);
        if (w.norm() < 1e-12) {
            h *= 0.5;
            continue;
        }
        const Vec3 q = geodesic_step(p, w.normalized(), h);
        if (value(q) > f) {
            p = q;
            h = std::min(h * 1.5, 0.1);
        } else {
            h *= 0.5;
        }
    }
    return UnitVector(p);
}

PlanarCandidate contact_map(const SphericalConfig& c) {
    const int n = static_cast<int>(c.points.size());
    std::vector<std::vector<int>> nbrs(n);
    for (auto [a, b] : c.edges) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    std::vector<int> label(n, -1), order;
    for (int v = 0; v < n; ++v)
        if (!nbrs[v].empty()) {
            label[v] = static_cast<int>(order.size());
            order.push_back(v);
        }
    if (order.empty()) throw StructuralError("contact_map: no contacts");
    std::vector<std::vector<int>> rot(order.size());
    for (int v : order) {
        const Vec3& p = c.points[v].vec();
        Vec3 e1, e2;
        tangent_basis(p, e1, e2);
        std::vector<std::pair<double, int>> ang;
        for (int u : nbrs[v]) {
            const Vec3 t = tangent_toward(p, c.points[u].vec());
            ang.emplace_back(std::atan2(t.dot(e2), t.dot(e1)), u);
        }
        std::sort(ang.begin(), ang.end());
        for (auto [a, u] : ang) rot[label[v]].push_back(label[u]);
    }
    const PlanarCandidate core = PlanarCandidate::from_rotation(rot);
    std::vector<int> iso_faces;
    for (int v = 0; v < n; ++v) {
        if (label[v] >= 0) continue;
        int host = -1;
        for (int f = 0; f < core.face_count() && host < 0; ++f) {
            const auto& face = core.faces()[f];
            const int m = static_cast<int>(face.size());
            bool inside = true;
            for (int i = 0; i < m && inside; ++i)
                inside = triple(c.points[order[face[i]]].vec(), c.points[order[face[(i + 1) % m]]].vec(),
                                c.points[v].vec()) > 0.0;
            if (inside) host = f;
        }
        if (host < 0) throw StructuralError("contact_map: isolated point outside every convex face");
        iso_faces.push_back(host);
    }
    return PlanarCandidate::from_rotation(std::move(rot), std::move(iso_faces));
}

bool verify_config(const SphericalConfig& c, const PlanarCandidate& g) {
    if (static_cast<int>(c.points.size()) != g.n() || g.n() < 2) return false;
    const SphericalConfig fresh = SphericalConfig::from_points(c.points);
    const auto& e = fresh.edges;
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
            auto [a, b] = e[i];
            auto [p, q] = e[j];
            if (a == p || a == q || b == p || b == q) continue;
            if (arcs_intersect(fresh.points[a], fresh.points[b], fresh.points[p], fresh.points[q])) return false;
        }
    PlanarCandidate map;
    try {
        map = contact_map(fresh);
    } catch (const StructuralError&) {
        return false;
    }
    if (map.n() != g.n() || map.core_size() != g.core_size()) return false;
    // Core vertices of the map are the contact points in index order.
    std::vector<int> original;
    for (int v = 0; v < g.n(); ++v) {
        bool has = false;
        for (auto [a, b] : e) has = has || a == v || b == v;
        if (has) original.push_back(v);
    }
    for (const auto& face : map.faces()) {
        const int m = static_cast<int>(face.size());
        for (int i = 0; i < m; ++i) {
            const double u = corner_angle(fresh.points[original[face[(i + m - 1) % m]]].vec(),
                                          fresh.points[original[face[i]]].vec(),
                                          fresh.points[original[face[(i + 1) % m]]].vec());
            if (u > kPi + 1e-9) return false;
        }
    }
    return canonical_key(map) == canonical_key(g);
}

SphericalConfig realize_coordinates(const PlanarCandidate& g, const EmbeddingSolution& sol) {
    if (!(sol.residual < 1e-9)) throw std::invalid_argument("realize_coordinates: residual too large");
    if (static_cast<int>(sol.face_angles.size()) != g.face_count())
        throw std::invalid_argument("realize_coordinates: face angles do not match the candidate");
    const double d = sol.d;
    std::vector<std::optional<Vec3>> pos(g.n());
    std::vector<const std::vector<double>*> angles(g.face_count());
    for (const auto& fa : sol.face_angles) angles.at(fa.face_id) = &fa.angles;

    const auto& f0 = g.faces()[0];
    pos[f0[0]] = Vec3(0.0, 0.0, 1.0);
    pos[f0[1]] = Vec3(std::sin(d), 0.0, std::cos(d));
    std::vector<char> done(g.face_count(), 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        if (done[f]) continue;
        const auto& face = g.faces()[f];
        const int m = static_cast<int>(face.size());
        int start = -1;
        for (int i = 0; i < m && start < 0; ++i)
            if (pos[face[i]] && pos[face[(i + 1) % m]]) start = i;
        if (start < 0) continue;
        done[f] = 1;
        for (int k = 1; k + 1 < m; ++k) {
            const int prev = face[(start + k - 1) % m], cur = face[(start + k) % m], next = face[(start + k + 1) % m];
            if (pos[next]) continue;
            const Vec3& b = *pos[cur];
            const Vec3 ta = tangent_toward(b, *pos[prev]);
            const double u = (*angles[f])[(start + k) % m];
            const Vec3 tc = std::cos(u) * ta - std::sin(u) * b.cross(ta);
            pos[next] = geodesic_step(b, tc, d);
        }
        for (int i = 0; i < m; ++i) {
            const int other = g.face_of_dart(face[(i + 1) % m], face[i]);
            if (!done[other]) queue.push_back(other);
        }
    }
    std::vector<Vec3> x(g.n());
    for (int v = 0; v < g.core_size(); ++v) {
        if (!pos[v]) throw InconsistencyError("realize_coordinates: vertex not reached by face traversal");
        x[v] = *pos[v];
    }
    for (const auto& iso : g.isolated()) x[iso.vertex] = face_centroid(x, g.faces()[iso.face]);

    ContactSystem polish(g, false, d, d, 0.0, 0.0, false);
    double dd = d;
    run_lm(polish, x, dd, LmSettings{200, 1e-14, 1e-10});
    auto pts = to_units(x);
    // Isolated points: best local maximin among seeds carried over from the
    // solution (by the best-fit rotation of the core) and in-face circumcenters.
    Eigen::Matrix3d H = Eigen::Matrix3d::Zero();
    for (int v = 0; v < g.core_size(); ++v) H += x[v] * sol.coords.points[v].vec().transpose();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d R = svd.matrixU() * svd.matrixV().transpose();
    if (R.determinant() < 0.0) {
        Eigen::Matrix3d U = svd.matrixU();
        U.col(2) = -U.col(2);
        R = U * svd.matrixV().transpose();
    }
    for (const auto& iso : g.isolated()) {
        const auto& face = g.faces()[iso.face];
        const int m = static_cast<int>(face.size());
        std::vector<Vec3> seeds{face_centroid(x, face)};
        if (static_cast<int>(sol.coords.points.size()) == g.n())
            seeds.push_back((R * sol.coords.points[iso.vertex].vec()).normalized());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) {
                    Vec3 n = (x[face[b]] - x[face[a]]).cross(x[face[c]] - x[face[a]]);
                    if (n.norm() < 1e-12) continue;
                    seeds.push_back(n.normalized());
                }
        double best_value = -1.0;
        UnitVector best;
        for (const auto& seed : seeds) {
            bool inside = true;
            for (int i = 0; i < m && inside; ++i) inside = triple(x[face[i]], x[face[(i + 1) % m]], seed) > 0.0;
            if (!inside) continue;
            pts[iso.vertex] = UnitVector(seed);
            const UnitVector q = maximin_position(pts, iso.vertex);
            double value = std::numeric_limits<double>::infinity();
            for (int j = 0; j < g.n(); ++j)
                if (j != iso.vertex) value = std::min(value, angular_dist(q, pts[j]));
            if (value > best_value) {
                best_value = value;
                best = q;
            }
        }
        if (best_value < 0.0) throw InconsistencyError("realize_coordinates: isolated vertex has no interior seed");
        pts[iso.vertex] = best;
    }

    SphericalConfig c = SphericalConfig::from_points(std::move(pts));
    if (!verify_config(c, g)) throw InconsistencyError("realize_coordinates: placement does not realize the candidate");
    for (const auto& iso : g.isolated()) {
        double m = std::numeric_limits<double>::infinity();
        for (int j = 0; j < g.n(); ++j)
            if (j != iso.vertex) m = std::min(m, angular_dist(c.points[iso.vertex], c.points[j]));
        if (!(m > c.psi)) throw InconsistencyError("realize_coordinates: isolated vertex touches another point");
    }
    return c;
}

}  // namespace tammes
