#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spanet/graph.hpp"
#include "spanet/spa_graph.hpp"

namespace spanet {

// Smallest d such that at least `fraction` of connected vertex pairs are at
// BFS distance <= d; pairs in different components do not count. 0 for graphs
// with fewer than 2 vertices or no connected pair.

// All-pairs BFS; guarded to n <= 2000.
int effective_diameter_exact(const Graph& g, double fraction = 0.9);

// Quantile over `num_pairs` uniformly random connected pairs.
int effective_diameter_sampled(const Graph& g, double fraction, uint32_t num_pairs,
                               uint64_t seed);

struct EdgeClassification {
    double tau = 0.0; // old/new cutoff n^beta (edge old iff birth <= tau)
    double L = 0.0;   // long/short cutoff n^-eta (edge long iff length > L)
    uint64_t old_long = 0, old_short = 0, new_long = 0, new_short = 0;

    std::vector<uint32_t> old_vertices;      // ids <= tau
    std::vector<double> old_degree_ratio;    // deg(v,tau) / deg(v,n), 0 when deg(v,n)=0
    std::vector<double> old_long_fraction;   // long incident edges / incident edges

    uint64_t total() const { return old_long + old_short + new_long + new_short; }
};

EdgeClassification classify_edges(const SpaGraph& g, double beta, double eta);

struct RatioViolation {
    uint32_t v;
    double ratio;
    double bound;
};

// Old vertices violating deg(v,tau)/deg(v,n) < n^eps (y log n / n)^{pA1} with
// y = n^gamma. Parameter constraints (gamma in (beta, 1 - eps/pA1) and
// beta < (gamma-beta) pA1 / 2) are validated up front.
std::vector<RatioViolation> old_vertex_ratio_check(const SpaGraph& g, double beta,
                                                   double gamma, double epsilon);

struct DoublingStats {
    double mean = 0.0;
    std::vector<double> ratios; // deg^-(v,2R) / deg^-(v,R) per qualifying vertex
};

// Ratio statistics over vertices with deg^-(v,R) >= min_deg.
DoublingStats degree_doubling_stats(const SpaGraph& g, uint32_t R, uint32_t min_deg);

struct TrajectoryBound {
    double statistic = 0.0; // max over (i,t) of deg^-(v_i,t) / ((t/i)^{pA1} log n)
    double bound = 0.0;     // C * n^{f_exponent}
    bool within = true;
};

TrajectoryBound trajectory_bound_check(const SpaGraph& g, double C, double f_exponent);

uint32_t max_outdegree(const SpaGraph& g);

// Exponent block for the slow-spread analysis with a = p*A1.
struct TheoremParams {
    double a = 0.0;
    int m = 0;
    double K = 0.0;         // (3+a)m + 1 - a
    double alpha_max = 0.0; // a(1-a)/K
    double delta = 0.0;
    double tau_exp = 0.0;   // m a / K
    double y_exp = 0.0;     // m(2+a)/K + delta
    double L_exp = 0.0;     // -a(1-a)/K + delta/2
    double T_exp = 0.0;     // a(1-a)/K - delta
    double epsilon = 0.0;
    bool valid = false;     // all four parameter inequalities hold
};

// delta defaults to alpha_max/2. Throws std::invalid_argument for a outside
// (0,1) or delta outside (0, alpha_max).
TheoremParams theorem_params(double a, int m, std::optional<double> delta = {});

} // namespace spanet
