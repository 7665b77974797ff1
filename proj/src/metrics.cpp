#include "spanet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spanet/geometry.hpp"
#include "spanet/percolation.hpp"
#include "spanet/rng.hpp"

namespace spanet {

namespace {

// smallest d with cum_count(d) >= fraction * total, tolerant of the usual
// floating-point droop in fraction * total
int quantile_distance(const std::vector<uint64_t>& count_by_distance, uint64_t total,
                      double fraction) {
    double need = fraction * static_cast<double>(total) - 1e-9 * static_cast<double>(total);
    uint64_t cum = 0;
    for (size_t d = 0; d < count_by_distance.size(); ++d) {
        cum += count_by_distance[d];
        if (static_cast<double>(cum) >= need) return static_cast<int>(d);
    }
    return count_by_distance.empty() ? 0 : static_cast<int>(count_by_distance.size()) - 1;
}

} // namespace

int effective_diameter_exact(const Graph& g, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("effective_diameter: fraction must be in (0,1]");
    const uint32_t n = g.num_vertices();
    if (n > 2000) throw std::invalid_argument("effective_diameter_exact: n > 2000");
    if (n < 2) return 0;

    std::vector<uint64_t> count_by_distance;
    uint64_t total = 0;
    BfsScratch scratch;
    for (uint32_t v = 1; v <= n; ++v) {
        scratch.run(g, v);
        auto dist = scratch.dist();
        for (uint32_t u = v + 1; u <= n; ++u) {
            if (dist[u] < 0) continue;
            if (count_by_distance.size() <= static_cast<size_t>(dist[u]))
                count_by_distance.resize(dist[u] + 1, 0);
            ++count_by_distance[dist[u]];
            ++total;
        }
    }
    if (total == 0) return 0;
    return quantile_distance(count_by_distance, total, fraction);
}

int effective_diameter_sampled(const Graph& g, double fraction, uint32_t num_pairs,
                               uint64_t seed) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("effective_diameter: fraction must be in (0,1]");
    if (num_pairs < 1) throw std::invalid_argument("effective_diameter_sampled: num_pairs");
    const uint32_t n = g.num_vertices();
    if (n < 2) return 0;

    ComponentLabeling labeling = connected_components(g);
    std::vector<std::vector<uint32_t>> members;
    std::vector<uint64_t> cum_weight;
    uint64_t total_weight = 0;
    {
        std::vector<std::vector<uint32_t>> by_label(n + 1);
        for (uint32_t v = 1; v <= n; ++v) by_label[labeling.label[v]].push_back(v);
        for (auto& vs : by_label) {
            if (vs.size() < 2) continue;
            total_weight += static_cast<uint64_t>(vs.size()) * (vs.size() - 1);
            members.push_back(std::move(vs));
            cum_weight.push_back(total_weight);
        }
    }
    if (total_weight == 0) return 0;

    // group sampled pairs by source so each distinct source costs one BFS
    Rng rng = substream(seed, 0xd1a7);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(num_pairs);
    for (uint32_t k = 0; k < num_pairs; ++k) {
        uint64_t x = rng.next_below(total_weight);
        size_t c = std::upper_bound(cum_weight.begin(), cum_weight.end(), x) - cum_weight.begin();
        const auto& vs = members[c];
        uint32_t ui = static_cast<uint32_t>(rng.next_below(vs.size()));
        uint32_t vi = static_cast<uint32_t>(rng.next_below(vs.size() - 1));
        if (vi >= ui) ++vi;
        pairs.emplace_back(vs[ui], vs[vi]);
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<uint64_t> count_by_distance;
    BfsScratch scratch;
    uint32_t current = 0;
    for (auto [u, v] : pairs) {
        if (u != current) {
            scratch.run(g, u);
            current = u;
        }
        int32_t d = scratch.dist()[v];
        if (count_by_distance.size() <= static_cast<size_t>(d))
            count_by_distance.resize(d + 1, 0);
        ++count_by_distance[d];
    }
    return quantile_distance(count_by_distance, pairs.size(), fraction);
}

EdgeClassification classify_edges(const SpaGraph& g, double beta, double eta) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("classify_edges: beta in (0,1)");
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("classify_edges: eta in (0,1)");

    const double n = static_cast<double>(g.n());
    EdgeClassification cls;
    cls.tau = std::pow(n, beta);
    cls.L = std::pow(n, -eta);

    std::vector<uint64_t> long_incident(g.n() + 1, 0);
    for (const SpaEdge& e : g.edges) {
        bool old_edge = static_cast<double>(e.child) <= cls.tau; // birth step == child
        double dist = torus_distance(g.positions.point(e.child), g.positions.point(e.parent));
        bool long_edge = dist > cls.L;
        if (long_edge) {
            ++long_incident[e.child];
            ++long_incident[e.parent];
        }
        if (old_edge) {
            long_edge ? ++cls.old_long : ++cls.old_short;
        } else {
            long_edge ? ++cls.new_long : ++cls.new_short;
        }
    }

    uint32_t tau_floor = static_cast<uint32_t>(std::min(cls.tau, n));
    for (uint32_t v = 1; v <= tau_floor; ++v) {
        cls.old_vertices.push_back(v);
        uint32_t deg_tau = g.degree_at(v, tau_floor);
        uint32_t deg_n = g.degree_at(v, g.n());
        cls.old_degree_ratio.push_back(deg_n == 0 ? 0.0
                                                  : static_cast<double>(deg_tau) / deg_n);
        cls.old_long_fraction.push_back(
            deg_n == 0 ? 0.0 : static_cast<double>(long_incident[v]) / deg_n);
    }
    return cls;
}

std::vector<RatioViolation> old_vertex_ratio_check(const SpaGraph& g, double beta,
                                                   double gamma, double epsilon) {
    double a = g.params.p * g.params.A1;
    if (!(a > 0.0)) throw std::invalid_argument("old_vertex_ratio_check: requires p*A1 > 0");
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("old_vertex_ratio_check: beta must be in (0,1)");
    if (!(gamma > beta && gamma < 1.0 - epsilon / a))
        throw std::invalid_argument(
            "old_vertex_ratio_check: need gamma in (beta, 1 - epsilon/(p*A1))");
    if (!(beta < (gamma - beta) * a / 2.0))
        throw std::invalid_argument(
            "old_vertex_ratio_check: need beta < (gamma - beta) * p*A1 / 2");

    const double n = static_cast<double>(g.n());
    double tau = std::pow(n, beta);
    double y = std::pow(n, gamma);
    double bound = std::pow(n, epsilon) * std::pow(y * std::log(n) / n, a);

    std::vector<RatioViolation> violations;
    uint32_t tau_floor = static_cast<uint32_t>(std::min(tau, n));
    for (uint32_t v = 1; v <= tau_floor; ++v) {
        uint32_t deg_tau = g.degree_at(v, tau_floor);
        if (deg_tau == 0) continue; // ratio 0, never a violation
        uint32_t deg_n = g.degree_at(v, g.n());
        double ratio = static_cast<double>(deg_tau) / deg_n;
        if (ratio >= bound) violations.push_back({v, ratio, bound});
    }
    return violations;
}

DoublingStats degree_doubling_stats(const SpaGraph& g, uint32_t R, uint32_t min_deg) {
    if (R < 1 || 2ull * R > g.n())
        throw std::invalid_argument("degree_doubling_stats: need 1 <= R <= n/2");
    DoublingStats stats;
    double sum = 0.0;
    for (uint32_t v = 1; v <= g.n(); ++v) {
        uint32_t d_r = g.in_degree_at(v, R);
        if (d_r < min_deg || d_r == 0) continue;
        double ratio = static_cast<double>(g.in_degree_at(v, 2 * R)) / d_r;
        stats.ratios.push_back(ratio);
        sum += ratio;
    }
    if (!stats.ratios.empty()) stats.mean = sum / static_cast<double>(stats.ratios.size());
    return stats;
}

TrajectoryBound trajectory_bound_check(const SpaGraph& g, double C, double f_exponent) {
    TrajectoryBound out;
    const double a = g.params.p * g.params.A1;
    const double log_n = std::log(std::max(2.0, static_cast<double>(g.n())));
    // deg^-(v_i, t) only increases at event steps, while the normalizer grows
    // with t, so the per-vertex maximum is attained right after some event
    for (uint32_t v = 1; v <= g.n(); ++v) {
        const auto& ev = g.in_events[v];
        for (size_t k = 0; k < ev.size(); ++k) {
            double t_over_i = static_cast<double>(ev[k]) / v;
            double value = static_cast<double>(k + 1) / (std::pow(t_over_i, a) * log_n);
            out.statistic = std::max(out.statistic, value);
        }
    }
    out.bound = C * std::pow(static_cast<double>(g.n()), f_exponent);
    out.within = out.statistic <= out.bound;
    return out;
}

uint32_t max_outdegree(const SpaGraph& g) {
    uint32_t best = 0;
    for (uint32_t v = 1; v <= g.n(); ++v) best = std::max(best, g.out_degree[v]);
    return best;
}

TheoremParams theorem_params(double a, int m, std::optional<double> delta) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("theorem_params: a = p*A1 must be in (0,1)");
    if (m < 1) throw std::invalid_argument("theorem_params: dimension must be positive");

    TheoremParams tp;
    tp.a = a;
    tp.m = m;
    tp.K = (3.0 + a) * m + 1.0 - a;
    tp.alpha_max = a * (1.0 - a) / tp.K;
    tp.delta = delta.value_or(tp.alpha_max / 2.0);
    if (!(tp.delta > 0.0 && tp.delta < tp.alpha_max))
        throw std::invalid_argument("theorem_params: delta must be in (0, a(1-a)/K)");

    tp.tau_exp = m * a / tp.K;
    tp.y_exp = m * (2.0 + a) / tp.K + tp.delta;
    tp.L_exp = -tp.alpha_max + tp.delta / 2.0;
    tp.T_exp = tp.alpha_max - tp.delta;
    tp.epsilon = std::min(a * m / tp.K, tp.delta * (1.0 - a)) / 2.0;

    // the four constraints the spread bound needs
    double beta = tp.tau_exp, gamma = tp.y_exp, eta = -tp.L_exp, alpha = tp.T_exp;
    bool c_length = eta * m < beta * (1.0 - a);
    bool c_gamma = gamma > beta && gamma < 1.0 - tp.epsilon / a;
    bool c_theta = beta < (gamma - beta) * a / 2.0;
    bool c_spread = alpha + beta + (tp.epsilon - a) + gamma * a < 0.0;
    tp.valid = c_length && c_gamma && c_theta && c_spread;
    return tp;
}

} // namespace spanet
