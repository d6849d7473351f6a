#include "egf/grassmann.hpp"

#include <algorithm>
#include <string>

#include "egf/linalg.hpp"

namespace egf {

int schubert_index(const std::vector<int>& index_set) {
    int half = 0;
    for (std::size_t j = 0; j < index_set.size(); ++j)
        half += index_set[j] - static_cast<int>(j) - 1;
    return 2 * half;
}

std::vector<SchubertCritical> critical_points(int k, int n) {
    if (k < 1 || k > n) throw BadRange("critical_points needs 1 <= k <= n");
    std::vector<SchubertCritical> out;
    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j) idx[j] = j + 1;
    for (;;) {
        out.push_back({idx, schubert_index(idx)});
        /* next k-subset of {1..n} in lexicographic order */
        int j = k - 1;
        while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    return out;
}

std::vector<Rational> default_spectrum(int n) {
    std::vector<Rational> a(n);
    for (int i = 0; i < n; ++i) a[i] = Rational(-1, i + 1);
    return a;
}

void check_spectrum(const std::vector<Rational>& spectrum) {
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (!(spectrum[i] < Rational(0)))
            throw BadRange("spectrum entries must be negative");
        if (i > 0 && !(spectrum[i - 1] < spectrum[i]))
            throw BadRange("spectrum must be strictly increasing");
    }
}

SchubertCritical flow_limit(int k, int n, const std::vector<Rational>& spectrum,
                            const QMatrix& plane, FlowDirection direction) {
    if (k < 1 || k > n) throw BadRange("flow_limit needs 1 <= k <= n");
    if (static_cast<int>(spectrum.size()) < n) throw BadRange("spectrum shorter than n");
    check_spectrum(spectrum);
    if (plane.rows() != n || plane.cols() != k)
        throw AmbientMismatch("plane must be an n x k matrix");
    if (rank_of(plane) != k) throw RankDeficient("plane matrix does not have rank k");

    /* rows in decay order: under e^{-a_i t}, as t -> -∞ the last row dies
     * slowest, so the backward limit is carried by the bottom pivots */
    std::vector<int> order =
        direction == FlowDirection::forward ? top_down(n) : bottom_up(n);
    auto cr = column_reduce(plane, order);
    std::vector<int> rows = cr.pivot_rows;
    std::sort(rows.begin(), rows.end());
    for (int& r : rows) r += 1;
    return {rows, schubert_index(rows)};
}

GradedComplex cellular_complex(const TorusBGModel& model) {
    if (model.rank < 1 || model.level < 0)
        throw BadRange("torus model needs rank >= 1 and level >= 0");
    std::vector<Generator> gens;
    std::vector<int> m(model.rank, 0);
    for (;;) {
        std::string label = "cell:(";
        int total = 0;
        for (int i = 0; i < model.rank; ++i) {
            label += std::to_string(m[i]);
            label += (i + 1 < model.rank) ? "," : ")";
            total += m[i];
        }
        gens.push_back({label, 2 * total});
        int i = model.rank - 1;
        while (i >= 0 && m[i] == model.level) --i;
        if (i < 0) break;
        ++m[i];
        for (int j = i + 1; j < model.rank; ++j) m[j] = 0;
        }
    std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.label < b.label;
    });
    return GradedComplex::build_indexed(std::move(gens), {});
}

ChainMap torus_bg_projection(const ComplexPtr& from, const ComplexPtr& to) {
    ChainMap p{from, to, {}};
    p.assign.resize(from->size());
    for (int i = 0; i < from->size(); ++i) {
        const std::string& label = from->generator(i).label;
        if (to->has_label(label)) p.assign[i] = {{to->id_of(label), Fp(1)}};
    }
    return p;
}

TowerReport tower_report(int k, int n_max, const std::vector<Rational>& spectrum) {
    if (n_max < 1) throw BadRange("tower_report needs N_max >= 1");
    check_spectrum(spectrum);
    TowerReport report;
    report.k = k;

    /* level N carries Gr(k, N+1); levels start where the stratum exists */
    const int level_lo = k - 1;
    std::vector<std::vector<SchubertCritical>> crit;
    for (int level = level_lo; level <= n_max; ++level)
        crit.push_back(critical_points(k, level + 1));

    for (std::size_t li = 0; li < crit.size(); ++li) {
        const int level = level_lo + static_cast<int>(li);
        TowerLevelReport row;
        row.level = level;
        row.critical_count = static_cast<int>(crit[li].size());
        row.new_points = 0;
        row.min_new_index = -1;
        const int n = level + 1;
        for (const auto& c : crit[li])
            if (c.index_set.back() == n || li == 0) {
                ++row.new_points;
                if (row.min_new_index < 0 || c.morse_index < row.min_new_index)
                    row.min_new_index = c.morse_index;
            }
        /* inclusion of critical sets: every index set at this level reappears */
        row.included_in_next = true;
        if (li + 1 < crit.size()) {
            for (const auto& c : crit[li]) {
                bool found = false;
                for (const auto& d : crit[li + 1])
                    if (d.index_set == c.index_set && d.morse_index == c.morse_index) {
                        found = true;
                        break;
                    }
                if (!found) {
                    row.included_in_next = false;
                    break;
                }
            }
        }
        report.levels.push_back(row);
    }

    /* N(l): least N with min_new_index > l at every level >= N; emitted only
     * when the census certifies it inside the computed range */
    for (int l = 0; l <= 2 * n_max; l += 2) {
        int nl = n_max + 1;
        for (int li = static_cast<int>(report.levels.size()) - 1; li >= 0; --li) {
            if (report.levels[li].new_points > 0 && report.levels[li].min_new_index <= l) break;
            nl = report.levels[li].level;
        }
        if (nl <= n_max) report.stabilization.emplace_back(l, nl);
    }
    return report;
}

}  // namespace egf
