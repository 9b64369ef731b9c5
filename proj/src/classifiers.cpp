#include "graphmark/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphmark/errors.hpp"
#include "graphmark/rng.hpp"

namespace graphmark {

namespace {

inline double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Eigen::VectorXd binary_targets(std::span<const int> y, int positive) {
    Eigen::VectorXd t(static_cast<Eigen::Index>(y.size()));
    for (std::size_t i = 0; i < y.size(); ++i)
        t[static_cast<Eigen::Index>(i)] = y[i] == positive ? 1.0 : 0.0;
    return t;
}

// Gradient descent for logistic regression on [X | 1].
Eigen::VectorXd train_logistic(const Eigen::MatrixXd& xb,
                               const Eigen::VectorXd& t, double lr,
                               int epochs) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(xb.cols());
    double inv_n = 1.0 / static_cast<double>(xb.rows());
    for (int epoch = 0; epoch < epochs; ++epoch) {
        Eigen::VectorXd p = (xb * w).unaryExpr([](double z) { return sigmoid(z); });
        w -= lr * inv_n * (xb.transpose() * (p - t));
    }
    return w;
}

} // namespace

Eigen::MatrixXd FeatureClassifier::standardize(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd z = x;
    for (Eigen::Index j = 0; j < z.cols(); ++j)
        z.col(j) = (z.col(j).array() - mean_[j]) / scale_[j];
    return z;
}

void FeatureClassifier::fit(const Eigen::MatrixXd& x, std::span<const int> y,
                            int classes, const FeatureModelConfig& config) {
    if (static_cast<std::size_t>(x.rows()) != y.size())
        throw spec_error("feature matrix rows do not match label count");
    if (x.rows() == 0) throw spec_error("training set is empty");
    classes_ = classes;
    hidden_ = config.hidden_units;

    mean_ = x.colwise().mean();
    scale_.resize(x.cols());
    degenerate_ = true;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        double var = (x.col(j).array() - mean_[j]).square().sum() / x.rows();
        double sd = std::sqrt(var);
        if (sd > 1e-12) degenerate_ = false;
        scale_[j] = sd > 1e-12 ? sd : 1.0;
    }

    Eigen::MatrixXd z = standardize(x);
    Eigen::MatrixXd zb(z.rows(), z.cols() + 1);
    zb << z, Eigen::VectorXd::Ones(z.rows());

    int heads = classes_ == 2 ? 1 : classes_;
    weights_.clear();
    input_weights_.clear();
    output_weights_.clear();

    for (int head = 0; head < heads; ++head) {
        int positive = classes_ == 2 ? 1 : head;
        Eigen::VectorXd t = binary_targets(y, positive);
        if (hidden_ == 0) {
            weights_.push_back(train_logistic(zb, t, config.learning_rate,
                                              config.epochs));
            continue;
        }
        // One hidden tanh layer, deterministic small random init.
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(head)));
        double init_scale = 1.0 / std::sqrt(static_cast<double>(zb.cols()));
        Eigen::MatrixXd w1(zb.cols(), hidden_);
        for (Eigen::Index r = 0; r < w1.rows(); ++r)
            for (Eigen::Index c = 0; c < w1.cols(); ++c)
                w1(r, c) = rng.uniform(-init_scale, init_scale);
        Eigen::VectorXd w2(hidden_ + 1);
        for (Eigen::Index r = 0; r < w2.size(); ++r)
            w2[r] = rng.uniform(-init_scale, init_scale);

        double inv_n = 1.0 / static_cast<double>(zb.rows());
        for (int epoch = 0; epoch < config.epochs; ++epoch) {
            Eigen::MatrixXd h = (zb * w1).array().tanh();
            Eigen::MatrixXd hb(h.rows(), h.cols() + 1);
            hb << h, Eigen::VectorXd::Ones(h.rows());
            Eigen::VectorXd p =
                (hb * w2).unaryExpr([](double v) { return sigmoid(v); });
            Eigen::VectorXd delta = (p - t) * inv_n;
            Eigen::VectorXd grad_w2 = hb.transpose() * delta;
            Eigen::MatrixXd back = delta * w2.head(hidden_).transpose();
            Eigen::MatrixXd grad_h = back.array() * (1.0 - h.array().square());
            Eigen::MatrixXd grad_w1 = zb.transpose() * grad_h;
            w1 -= config.learning_rate * grad_w1;
            w2 -= config.learning_rate * grad_w2;
        }
        input_weights_.push_back(std::move(w1));
        output_weights_.push_back(std::move(w2));
    }
}

Eigen::MatrixXd FeatureClassifier::raw_scores(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd z = standardize(x);
    Eigen::MatrixXd zb(z.rows(), z.cols() + 1);
    zb << z, Eigen::VectorXd::Ones(z.rows());

    int heads = classes_ == 2 ? 1 : classes_;
    Eigen::MatrixXd scores(z.rows(), heads);
    for (int head = 0; head < heads; ++head) {
        if (hidden_ == 0) {
            scores.col(head) = zb * weights_[static_cast<std::size_t>(head)];
        } else {
            Eigen::MatrixXd h =
                (zb * input_weights_[static_cast<std::size_t>(head)])
                    .array()
                    .tanh();
            Eigen::MatrixXd hb(h.rows(), h.cols() + 1);
            hb << h, Eigen::VectorXd::Ones(h.rows());
            scores.col(head) =
                hb * output_weights_[static_cast<std::size_t>(head)];
        }
    }
    return scores;
}

std::vector<int> FeatureClassifier::predict(const Eigen::MatrixXd& x) const {
    Eigen::MatrixXd scores = raw_scores(x);
    std::vector<int> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
        if (classes_ == 2) {
            out[static_cast<std::size_t>(i)] = scores(i, 0) >= 0.0 ? 1 : 0;
        } else {
            Eigen::Index best = 0;
            scores.row(i).maxCoeff(&best);
            out[static_cast<std::size_t>(i)] = static_cast<int>(best);
        }
    }
    return out;
}

std::vector<double> FeatureClassifier::decision_scores(
    const Eigen::MatrixXd& x) const {
    if (classes_ != 2)
        throw spec_error("decision scores are only defined for binary tasks");
    Eigen::MatrixXd scores = raw_scores(x);
    std::vector<double> out(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < scores.rows(); ++i)
        out[static_cast<std::size_t>(i)] = scores(i, 0);
    return out;
}

void KernelRidge::fit(const Eigen::MatrixXd& k_train, std::span<const int> y,
                      int classes, double alpha) {
    if (!(alpha > 0.0))
        throw spec_error("kernel ridge requires alpha > 0, got " +
                         std::to_string(alpha));
    if (k_train.rows() != k_train.cols())
        throw spec_error("training kernel must be square");
    if (static_cast<std::size_t>(k_train.rows()) != y.size())
        throw spec_error("kernel size does not match label count");

    Eigen::Index n = k_train.rows();
    Eigen::MatrixXd targets = Eigen::MatrixXd::Zero(n, classes);
    for (Eigen::Index i = 0; i < n; ++i)
        targets(i, y[static_cast<std::size_t>(i)]) = 1.0;
    intercept_ = targets.colwise().mean();
    targets.rowwise() -= intercept_;

    Eigen::MatrixXd system = k_train;
    system.diagonal().array() += alpha;
    Eigen::LLT<Eigen::MatrixXd> llt(system);
    if (llt.info() != Eigen::Success) {
        Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
        if (ldlt.info() != Eigen::Success)
            throw internal_error("kernel ridge system is singular");
        coef_ = ldlt.solve(targets);
        return;
    }
    coef_ = llt.solve(targets);
}

std::vector<int> KernelRidge::predict(const Eigen::MatrixXd& k_cross) const {
    Eigen::MatrixXd scores = k_cross * coef_;
    scores.rowwise() += intercept_;
    std::vector<int> out(static_cast<std::size_t>(k_cross.rows()));
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
        Eigen::Index best = 0;
        scores.row(i).maxCoeff(&best);
        out[static_cast<std::size_t>(i)] = static_cast<int>(best);
    }
    return out;
}

std::vector<double> KernelRidge::decision_scores(
    const Eigen::MatrixXd& k_cross) const {
    if (coef_.cols() != 2)
        throw spec_error("decision scores are only defined for binary tasks");
    Eigen::MatrixXd scores = k_cross * coef_;
    scores.rowwise() += intercept_;
    std::vector<double> out(static_cast<std::size_t>(k_cross.rows()));
    for (Eigen::Index i = 0; i < scores.rows(); ++i)
        out[static_cast<std::size_t>(i)] = scores(i, 1) - scores(i, 0);
    return out;
}

double compute_auc(std::span<const double> scores,
                   std::span<const int> labels) {
    if (scores.size() != labels.size())
        throw spec_error("auc: scores and labels length mismatch");
    std::size_t n = scores.size();
    std::size_t positives = 0;
    for (int l : labels) positives += l == 1 ? 1 : 0;
    if (positives == 0 || positives == n)
        throw spec_error("auc requires both classes present");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] < scores[b];
    });

    // Rank-sum with mid-ranks for ties.
    double positive_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        double mean_rank = 0.5 * (static_cast<double>(i) + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            if (labels[order[k]] == 1) positive_rank_sum += mean_rank;
        i = j + 1;
    }
    double n_pos = static_cast<double>(positives);
    double n_neg = static_cast<double>(n - positives);
    return (positive_rank_sum - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

} // namespace graphmark
