#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "egf/eigen_support.hpp"
#include "egf/errors.hpp"
#include "egf/fp.hpp"
#include "egf/linalg.hpp"

namespace egf {

/* formal F_p-linear combination of generators, by generator id */
using FormalSum = std::vector<std::pair<int, Fp>>;

struct Generator {
    std::string label;
    int degree;
};

/* Z-graded cochain complex with named generators over F_p. The differential
 * raises degree by one and squares to zero; both are enforced at build time.
 * Instances are immutable once built. */
class GradedComplex {
  public:
    struct Line {
        std::string source;
        std::vector<std::pair<Fp, std::string>> targets;
    };

    static GradedComplex build(std::vector<Generator> gens, const std::vector<Line>& diff);

    /* id-based construction used by the combinators; same validation */
    static GradedComplex build_indexed(std::vector<Generator> gens,
                                       std::vector<FormalSum> diff);

    int size() const { return static_cast<int>(gens_.size()); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(int id) const { return gens_[id]; }
    const FormalSum& diff(int id) const { return diff_[id]; }

    bool has_label(const std::string& label) const { return index_of_.count(label) != 0; }
    int id_of(const std::string& label) const;

    /* empty complex reports an empty degree list */
    std::vector<int> degrees() const;
    int min_degree() const;
    int max_degree() const;

    const std::vector<int>& gens_in(int degree) const;
    int dim_in(int degree) const { return static_cast<int>(gens_in(degree).size()); }

    /* matrix of d : C^deg -> C^{deg+1}; rows index gens_in(deg+1) */
    FMatrix diff_matrix(int degree) const;

    /* image of a degree-homogeneous vector under d */
    FVector apply_diff(int degree, const FVector& v) const;

    /* position of generator id within its degree block */
    int position_in_degree(int id) const { return pos_in_degree_[id]; }

    std::string render(int degree, const FVector& v) const;

  private:
    GradedComplex() = default;
    void index();
    void validate() const;

    std::vector<Generator> gens_;
    std::vector<FormalSum> diff_;
    std::map<std::string, int> index_of_;
    std::map<int, std::vector<int>> by_degree_;
    std::vector<int> pos_in_degree_;
};

using ComplexPtr = std::shared_ptr<const GradedComplex>;

ComplexPtr make_complex(GradedComplex c);

/* Degree-preserving linear map of complexes, one formal sum per source
 * generator. Commutation with the differentials is checked on demand. */
struct ChainMap {
    ComplexPtr source;
    ComplexPtr target;
    std::vector<FormalSum> assign; /* indexed by source generator id */

    static ChainMap identity(const ComplexPtr& c);
    static ChainMap zero(const ComplexPtr& src, const ComplexPtr& tgt);

    /* matrix of the map in one degree; rows index target gens */
    FMatrix matrix(int degree) const;
    FVector apply(int degree, const FVector& v) const;
};

bool verify_chain_map(const ChainMap& f);

struct DegreeDim {
    int degree;
    int dim;
    std::vector<std::string> representatives;
};
using CohomologyTable = std::vector<DegreeDim>;

/* dim H and representatives (kernel vectors reduced modulo the image) for
 * every degree in [lo, hi] */
CohomologyTable cohomology(const GradedComplex& c, int lo, int hi);
int cohomology_dim(const GradedComplex& c, int degree);

/* representatives of H^degree as columns, reduced modulo the image */
FMatrix cohomology_reps(const GradedComplex& c, int degree);

/* true if the degree-homogeneous cycle v is a coboundary */
bool is_exact(const GradedComplex& c, int degree, const FVector& v);

/* matrix of H^degree(f.source) -> H^degree(f.target) */
FMatrix induced_on_cohomology(const ChainMap& f, int degree);

/* graded tensor product; labels are joined with '⊗' and the differential
 * follows the Leibniz rule (sign (-1)^{deg} on the left factor) */
GradedComplex tensor(const GradedComplex& a, const GradedComplex& b);

/* mapping cone; source generators appear one degree lower with prefix "s:",
 * target generators keep their degree with prefix "t:" */
GradedComplex cone(const ChainMap& f);

}  // namespace egf
