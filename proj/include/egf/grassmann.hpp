#pragma once

#include <vector>

#include "egf/complex.hpp"
#include "egf/eigen_support.hpp"
#include "egf/rational.hpp"

namespace egf {

/* Critical point of the trace Morse function on Gr(k, n): the coordinate
 * k-plane spanned by the axes in index_set (1-based, strictly increasing).
 * The Morse index is real, 2·Σ (i_j - j), hence always even. */
struct SchubertCritical {
    std::vector<int> index_set;
    int morse_index;
};

int schubert_index(const std::vector<int>& index_set);

/* all C(n, k) coordinate k-planes, ordered lexicographically */
std::vector<SchubertCritical> critical_points(int k, int n);

/* Strictly increasing negative diagonal a_1 < a_2 < ... < a_n < 0 driving the
 * flow e^{-At}. Values only matter through their order for the exact limit;
 * the default is a_i = -1/i. */
std::vector<Rational> default_spectrum(int n);
void check_spectrum(const std::vector<Rational>& spectrum);

enum class FlowDirection { forward, backward };

/* Exact limit of span(e^{-At} V) as t -> ±∞: column echelon pivot rows with
 * rows scanned in order of decay, top-down for forward (t -> +∞), bottom-up
 * for backward (t -> -∞). V is n x k of full rank. */
SchubertCritical flow_limit(int k, int n, const std::vector<Rational>& spectrum,
                            const QMatrix& plane, FlowDirection direction);

/* Cellular model of BG(N) for a torus of the given rank: one cell per
 * multi-index (m_1..m_r), m_i <= N, in degree 2·Σ m_i, zero differential. */
struct TorusBGModel {
    int rank;
    int level;
};

GradedComplex cellular_complex(const TorusBGModel& model);

/* projection killing the cells that use the top power; a surjective chain map */
ChainMap torus_bg_projection(const ComplexPtr& from_level_n1, const ComplexPtr& to_level_n);

struct TowerLevelReport {
    int level;            /* tower level N; the stratum is Gr(k, N+1) */
    int critical_count;
    int new_points;
    int min_new_index;    /* smallest Morse index among the new points */
    bool included_in_next;
};

struct TowerReport {
    int k;
    std::vector<TowerLevelReport> levels;
    /* N(l) per even l: least N past which every new critical point has
     * index > l */
    std::vector<std::pair<int, int>> stabilization;
};

TowerReport tower_report(int k, int n_max, const std::vector<Rational>& spectrum);

}  // namespace egf
