#include "egf/complex.hpp"

#include <algorithm>

namespace egf {

namespace {

void sort_sum(FormalSum& s) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FormalSum merged;
    for (const auto& [id, c] : s) {
        if (!merged.empty() && merged.back().first == id)
            merged.back().second += c;
        else
            merged.emplace_back(id, c);
    }
    std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
    s = std::move(merged);
}

}  // namespace

GradedComplex GradedComplex::build(std::vector<Generator> gens, const std::vector<Line>& diff) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        if (!index.emplace(gens[i].label, i).second)
            throw DuplicateLabel("duplicate generator label: " + gens[i].label);
    }
    std::vector<FormalSum> d(gens.size());
    for (const auto& line : diff) {
        auto it = index.find(line.source);
        if (it == index.end()) throw UnknownLabel("differential of unknown generator: " + line.source);
        FormalSum sum;
        for (const auto& [coeff, label] : line.targets) {
            auto jt = index.find(label);
            if (jt == index.end())
                throw UnknownLabel("differential hits unknown generator: " + label);
            sum.emplace_back(jt->second, coeff);
        }
        sort_sum(sum);
        FormalSum& slot = d[it->second];
        slot.insert(slot.end(), sum.begin(), sum.end());
        sort_sum(slot);
    }
    return build_indexed(std::move(gens), std::move(d));
}

GradedComplex GradedComplex::build_indexed(std::vector<Generator> gens,
                                           std::vector<FormalSum> diff) {
    GradedComplex c;
    c.gens_ = std::move(gens);
    diff.resize(c.gens_.size());
    c.diff_ = std::move(diff);
    for (auto& s : c.diff_) sort_sum(s);
    c.index();
    c.validate();
    return c;
}

void GradedComplex::index() {
    index_of_.clear();
    by_degree_.clear();
    pos_in_degree_.assign(gens_.size(), 0);
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
        if (!index_of_.emplace(gens_[i].label, i).second)
            throw DuplicateLabel("duplicate generator label: " + gens_[i].label);
        auto& block = by_degree_[gens_[i].degree];
        pos_in_degree_[i] = static_cast<int>(block.size());
        block.push_back(i);
    }
}

void GradedComplex::validate() const {
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
        for (const auto& [j, c] : diff_[i]) {
            (void)c;
            if (gens_[j].degree != gens_[i].degree + 1)
                throw NotADifferential("differential does not raise degree by 1 on " +
                                       gens_[i].label);
        }
    for (const auto& [deg, block] : by_degree_) {
        (void)block;
        if (by_degree_.count(deg + 1) == 0) continue;
        FMatrix dd = diff_matrix(deg + 1) * diff_matrix(deg);
        if (!is_zero(dd)) {
            /* name one offending generator for the error message */
            for (int col = 0; col < dd.cols(); ++col)
                for (int row = 0; row < dd.rows(); ++row)
                    if (!dd(row, col).is_zero())
                        throw NotADifferential("d•d ≠ 0 on generator " +
                                               gens_[gens_in(deg)[col]].label);
        }
    }
}

int GradedComplex::id_of(const std::string& label) const {
    auto it = index_of_.find(label);
    if (it == index_of_.end()) throw UnknownLabel("unknown generator label: " + label);
    return it->second;
}

std::vector<int> GradedComplex::degrees() const {
    std::vector<int> out;
    out.reserve(by_degree_.size());
    for (const auto& [deg, block] : by_degree_) {
        (void)block;
        out.push_back(deg);
    }
    return out;
}

int GradedComplex::min_degree() const {
    if (by_degree_.empty()) return 0;
    return by_degree_.begin()->first;
}

int GradedComplex::max_degree() const {
    if (by_degree_.empty()) return -1;
    return by_degree_.rbegin()->first;
}

const std::vector<int>& GradedComplex::gens_in(int degree) const {
    static const std::vector<int> empty;
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? empty : it->second;
}

FMatrix GradedComplex::diff_matrix(int degree) const {
    const auto& dom = gens_in(degree);
    const auto& cod = gens_in(degree + 1);
    FMatrix m = FMatrix::Zero(cod.size(), dom.size());
    for (int j = 0; j < static_cast<int>(dom.size()); ++j)
        for (const auto& [tgt, c] : diff_[dom[j]]) m(pos_in_degree_[tgt], j) = c;
    return m;
}

FVector GradedComplex::apply_diff(int degree, const FVector& v) const {
    return diff_matrix(degree) * v;
}

std::string GradedComplex::render(int degree, const FVector& v) const {
    const auto& block = gens_in(degree);
    std::string out;
    for (int i = 0; i < static_cast<int>(block.size()); ++i) {
        if (v(i).is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (!(v(i) == Fp(1))) out += v(i).str() + "*";
        out += gens_[block[i]].label;
    }
    return out.empty() ? "0" : out;
}

ComplexPtr make_complex(GradedComplex c) {
    return std::make_shared<const GradedComplex>(std::move(c));
}

ChainMap ChainMap::identity(const ComplexPtr& c) {
    ChainMap f{c, c, {}};
    f.assign.resize(c->size());
    for (int i = 0; i < c->size(); ++i) f.assign[i] = {{i, Fp(1)}};
    return f;
}

ChainMap ChainMap::zero(const ComplexPtr& src, const ComplexPtr& tgt) {
    ChainMap f{src, tgt, {}};
    f.assign.resize(src->size());
    return f;
}

FMatrix ChainMap::matrix(int degree) const {
    const auto& dom = source->gens_in(degree);
    const auto& cod = target->gens_in(degree);
    FMatrix m = FMatrix::Zero(cod.size(), dom.size());
    for (int j = 0; j < static_cast<int>(dom.size()); ++j)
        for (const auto& [tgt, c] : assign[dom[j]]) {
            if (target->generator(tgt).degree != degree)
                throw NotChainMap("chain map does not preserve degree on " +
                                  source->generator(dom[j]).label);
            m(target->position_in_degree(tgt), j) = c;
        }
    return m;
}

FVector ChainMap::apply(int degree, const FVector& v) const {
    return matrix(degree) * v;
}

bool verify_chain_map(const ChainMap& f) {
    for (int i = 0; i < f.source->size(); ++i)
        for (const auto& [tgt, c] : f.assign[i]) {
            (void)c;
            if (f.target->generator(tgt).degree != f.source->generator(i).degree) return false;
        }
    std::vector<int> degs = f.source->degrees();
    for (int deg : f.source->degrees())
        if (std::find(degs.begin(), degs.end(), deg + 1) == degs.end()) degs.push_back(deg + 1);
    for (int deg : degs) {
        FMatrix lhs = f.target->diff_matrix(deg) * f.matrix(deg);
        FMatrix rhs = f.matrix(deg + 1) * f.source->diff_matrix(deg);
        if (!is_zero(FMatrix(lhs - rhs))) return false;
    }
    return true;
}

int cohomology_dim(const GradedComplex& c, int degree) {
    FMatrix d_out = c.diff_matrix(degree);
    FMatrix d_in = c.diff_matrix(degree - 1);
    int kernel = c.dim_in(degree) - rank_of(d_out);
    return kernel - rank_of(d_in);
}

FMatrix cohomology_reps(const GradedComplex& c, int degree) {
    FMatrix kernel = kernel_of(c.diff_matrix(degree));
    FMatrix image = image_of(c.diff_matrix(degree - 1));
    Quotient<Fp> q(image, kernel);
    SpanForm<Fp> im(image);
    FMatrix reps = q.reps();
    for (int j = 0; j < reps.cols(); ++j) reps.col(j) = im.normal_form(reps.col(j));
    return reps;
}

CohomologyTable cohomology(const GradedComplex& c, int lo, int hi) {
    if (lo > hi) throw BadRange("empty degree range");
    CohomologyTable table;
    for (int deg = lo; deg <= hi; ++deg) {
        FMatrix reps = cohomology_reps(c, deg);
        DegreeDim row{deg, static_cast<int>(reps.cols()), {}};
        for (int j = 0; j < reps.cols(); ++j) row.representatives.push_back(c.render(deg, reps.col(j)));
        table.push_back(std::move(row));
    }
    return table;
}

bool is_exact(const GradedComplex& c, int degree, const FVector& v) {
    FMatrix image = image_of(c.diff_matrix(degree - 1));
    return SpanForm<Fp>(image).contains(v);
}

FMatrix induced_on_cohomology(const ChainMap& f, int degree) {
    FMatrix src_reps = cohomology_reps(*f.source, degree);
    FMatrix tgt_kernel = kernel_of(f.target->diff_matrix(degree));
    FMatrix tgt_image = image_of(f.target->diff_matrix(degree - 1));
    Quotient<Fp> q(tgt_image, tgt_kernel);
    FMatrix out(q.dim(), src_reps.cols());
    FMatrix fm = f.matrix(degree);
    for (int j = 0; j < src_reps.cols(); ++j) out.col(j) = q.coords(fm * src_reps.col(j));
    return out;
}

GradedComplex tensor(const GradedComplex& a, const GradedComplex& b) {
    std::vector<Generator> gens;
    gens.reserve(a.size() * b.size());
    std::vector<std::vector<int>> id(a.size(), std::vector<int>(b.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            id[i][j] = static_cast<int>(gens.size());
            gens.push_back({a.generator(i).label + "⊗" + b.generator(j).label,
                            a.generator(i).degree + b.generator(j).degree});
        }
    std::vector<FormalSum> diff(gens.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            FormalSum& s = diff[id[i][j]];
            for (const auto& [ti, c] : a.diff(i)) s.emplace_back(id[ti][j], c);
            Fp sign = (a.generator(i).degree % 2 == 0) ? Fp(1) : Fp(-1);
            for (const auto& [tj, c] : b.diff(j)) s.emplace_back(id[i][tj], sign * c);
        }
    return GradedComplex::build_indexed(std::move(gens), std::move(diff));
}

GradedComplex cone(const ChainMap& f) {
    if (!verify_chain_map(f)) throw NotChainMap("cone of a map that is not a chain map");
    const GradedComplex& s = *f.source;
    const GradedComplex& t = *f.target;
    std::vector<Generator> gens;
    gens.reserve(s.size() + t.size());
    for (int i = 0; i < s.size(); ++i)
        gens.push_back({"s:" + s.generator(i).label, s.generator(i).degree - 1});
    for (int i = 0; i < t.size(); ++i)
        gens.push_back({"t:" + t.generator(i).label, t.generator(i).degree});
    const int off = s.size();
    std::vector<FormalSum> diff(gens.size());
    for (int i = 0; i < s.size(); ++i) {
        FormalSum& d = diff[i];
        for (const auto& [tgt, c] : s.diff(i)) d.emplace_back(tgt, -c);
        for (const auto& [tgt, c] : f.assign[i]) d.emplace_back(off + tgt, c);
    }
    for (int i = 0; i < t.size(); ++i)
        for (const auto& [tgt, c] : t.diff(i)) diff[off + i].emplace_back(off + tgt, c);
    return GradedComplex::build_indexed(std::move(gens), std::move(diff));
}

}  // namespace egf
