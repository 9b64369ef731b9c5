#ifndef GRAPHMARK_CLASSIFIERS_HPP
#define GRAPHMARK_CLASSIFIERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace graphmark {

struct FeatureModelConfig {
    double learning_rate = 0.1;
    int epochs = 500;
    int hidden_units = 0; // 0 = logistic regression, >0 = one hidden layer
    std::uint64_t seed = 0;
};

// Logistic regression (one-vs-rest for more than two classes) on features
// z-scored with training statistics, trained by full-batch gradient
// descent for a fixed epoch count; with hidden_units > 0 a one-hidden-layer
// tanh network is trained instead. Fully deterministic given the config.
class FeatureClassifier {
public:
    void fit(const Eigen::MatrixXd& x, std::span<const int> y, int classes,
             const FeatureModelConfig& config);

    std::vector<int> predict(const Eigen::MatrixXd& x) const;

    // Binary decision scores (class-1 margin); requires classes == 2.
    std::vector<double> decision_scores(const Eigen::MatrixXd& x) const;

    // True when every feature column was constant on the training set.
    bool degenerate_features() const { return degenerate_; }

private:
    Eigen::MatrixXd standardize(const Eigen::MatrixXd& x) const;
    Eigen::MatrixXd raw_scores(const Eigen::MatrixXd& x) const;

    int classes_ = 2;
    int hidden_ = 0;
    bool degenerate_ = false;
    Eigen::VectorXd mean_;
    Eigen::VectorXd scale_;
    // Logistic: weights_[c] is (d+1) with bias last. Hidden: per class,
    // input_weights_[c] is (d+1) x h and output_weights_[c] is (h+1).
    std::vector<Eigen::VectorXd> weights_;
    std::vector<Eigen::MatrixXd> input_weights_;
    std::vector<Eigen::VectorXd> output_weights_;
};

// Kernel ridge classifier head: solves (K + alpha I) C = Y_centered for
// one-hot targets and predicts the argmax of cross-kernel projections.
class KernelRidge {
public:
    void fit(const Eigen::MatrixXd& k_train, std::span<const int> y,
             int classes, double alpha);

    // k_cross is n_eval x n_train.
    std::vector<int> predict(const Eigen::MatrixXd& k_cross) const;
    std::vector<double> decision_scores(const Eigen::MatrixXd& k_cross) const;

private:
    Eigen::MatrixXd coef_;
    Eigen::RowVectorXd intercept_;
};

// Rank-based AUC-ROC (ties contribute 1/2); labels must contain both classes.
double compute_auc(std::span<const double> scores, std::span<const int> labels);

} // namespace graphmark

#endif // GRAPHMARK_CLASSIFIERS_HPP
