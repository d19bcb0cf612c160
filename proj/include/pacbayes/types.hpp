#ifndef PACBAYES_TYPES_HPP
#define PACBAYES_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pacbayes {

/// Low-rank factor parameter: the predictor matrix is left * right^T.
/// `gamma` holds the per-column prior variances when the point was drawn
/// from (or is sampled under) the hierarchical low-rank prior; it is empty
/// for plain factor pairs.
struct FactorState {
    Eigen::MatrixXd left;    // d1 x K
    Eigen::MatrixXd right;   // d2 x K
    Eigen::VectorXd gamma;   // K (may be empty)

    Eigen::MatrixXd product() const { return left * right.transpose(); }
};

/// A classifier parameter: a dense vector theta (linear classifier),
/// a dense predictor matrix M, or a factor pair with M = L R^T.
using ParamPoint = std::variant<Eigen::VectorXd, Eigen::MatrixXd, FactorState>;

enum class FeatureLaw { RademacherGrid, UnitSphere };

/// Sample set for classification. Either a dense design matrix (one row per
/// sample) or a list of matrix entry positions for the entry-prediction
/// problem. Labels are +/-1. When the generating model is known,
/// `true_cond_prob[i]` stores P(Y=+1 | x_i).
struct Dataset {
    Eigen::MatrixXd features;                    // n x d, empty when entry-indexed
    std::vector<std::pair<int, int>> entries;    // entry positions, empty when dense
    int n_rows = 0;                              // matrix dims for entry data
    int n_cols = 0;
    Eigen::VectorXi labels;                      // entries in {-1,+1}
    std::optional<Eigen::VectorXd> true_cond_prob;

    Eigen::Index n() const { return labels.size(); }
    bool entry_indexed() const { return !entries.empty(); }

    /// Throws std::invalid_argument if labels, probabilities, or entry
    /// positions violate the declared invariants.
    void validate() const;
};

/// Parameter lies outside the declared support of a prior. Deliberately not
/// a std::domain_error so callers can tell the two conditions apart.
class support_error : public std::runtime_error {
  public:
    explicit support_error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejection sampler exhausted its proposal budget.
class sampling_error : public std::runtime_error {
  public:
    sampling_error(const std::string& what, double acceptance_rate_estimate)
        : std::runtime_error(what), acceptance_rate(acceptance_rate_estimate) {}
    double acceptance_rate;
};

/// Chain finished with an acceptance rate too low to be trusted.
class chain_diagnostics_error : public std::runtime_error {
  public:
    chain_diagnostics_error(const std::string& what, double rate)
        : std::runtime_error(what), acceptance_rate(rate) {}
    double acceptance_rate;
};

/// All candidates in an empirical constant estimate fell below the
/// tolerance floor, so no ratio could be formed.
class insufficient_spread_error : public std::runtime_error {
  public:
    explicit insufficient_spread_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative optimizer increased its objective; carries the trace.
class optimization_error : public std::runtime_error {
  public:
    optimization_error(const std::string& what, std::vector<double> trace)
        : std::runtime_error(what), objective_trace(std::move(trace)) {}
    std::vector<double> objective_trace;
};

/// Linear score of a parameter point on sample i: theta^T x_i for dense
/// designs, M_{entry(i)} for entry-indexed data.
double score_at(const ParamPoint& point, const Dataset& data, Eigen::Index i);

/// All scores at once; preferred for repeated evaluation.
Eigen::VectorXd scores(const ParamPoint& point, const Dataset& data);

/// Number of scalar parameters when flattened (used for CSV export).
Eigen::Index flat_size(const ParamPoint& point);

/// Flatten into a row vector: theta as-is, matrices row-major, factor
/// states as [vec(L), vec(R), gamma].
Eigen::VectorXd flatten(const ParamPoint& point);

}  // namespace pacbayes

#endif
