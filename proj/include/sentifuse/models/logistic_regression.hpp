#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "sentifuse/error.hpp"
#include "sentifuse/models/tfidf.hpp"

namespace sentifuse {

// Multinomial logistic model: class scores = W x + b.
struct LogisticModel {
    int num_classes = 0;
    int dim = 0;
    std::vector<double> weights;  // num_classes x dim, row-major
    std::vector<double> bias;

    double weight_at(int c, int d) const {
        return weights[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim) +
                       static_cast<std::size_t>(d)];
    }

    std::vector<double> scores(const SparseVector& x) const {
        std::vector<double> s(bias);
        for (const auto& [idx, value] : x.entries) {
            for (int c = 0; c < num_classes; ++c) {
                s[static_cast<std::size_t>(c)] +=
                    weights[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim) +
                            static_cast<std::size_t>(idx)] *
                    value;
            }
        }
        return s;
    }

    std::vector<double> probabilities(const SparseVector& x) const {
        std::vector<double> s = scores(x);
        const double m = *std::max_element(s.begin(), s.end());
        double z = 0.0;
        for (double& v : s) {
            v = std::exp(v - m);
            z += v;
        }
        for (double& v : s) v /= z;
        return s;
    }
};

struct LogisticTrainConfig {
    double lambda = 1.0;  // L2 strength on the coefficient matrix (bias excluded)
    double lr = 0.1;      // base step per iteration
    double tol = 1e-6;    // stop when gradient inf-norm drops below
    int max_iters = 500;
    std::uint64_t seed = 0;  // unused by the zero-initialized full-batch path
};

struct LogisticTrainResult {
    LogisticModel model;
    std::vector<double> loss_history;  // loss before training, then after each step
    int iterations = 0;
    bool converged = false;
};

// Mean cross-entropy + (lambda/2)*||W||^2 and (optionally) its gradient.
// grad_w/grad_b may be null when only the objective value is needed.
inline double logistic_loss_and_gradient(const std::vector<double>& weights,
                                         const std::vector<double>& bias,
                                         const std::vector<SparseVector>& rows,
                                         const std::vector<int>& labels, int num_classes,
                                         int dim, double lambda,
                                         std::vector<double>* grad_w = nullptr,
                                         std::vector<double>* grad_b = nullptr) {
    const std::size_t n = rows.size();
    if (grad_w) grad_w->assign(weights.size(), 0.0);
    if (grad_b) grad_b->assign(bias.size(), 0.0);

    double loss = 0.0;
    std::vector<double> s(static_cast<std::size_t>(num_classes));
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < num_classes; ++c) s[static_cast<std::size_t>(c)] = bias[static_cast<std::size_t>(c)];
        for (const auto& [idx, value] : rows[i].entries) {
            for (int c = 0; c < num_classes; ++c) {
                s[static_cast<std::size_t>(c)] +=
                    weights[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim) +
                            static_cast<std::size_t>(idx)] *
                    value;
            }
        }
        const double m = *std::max_element(s.begin(), s.end());
        double z = 0.0;
        for (int c = 0; c < num_classes; ++c) z += std::exp(s[static_cast<std::size_t>(c)] - m);
        const double log_z = std::log(z) + m;
        loss += log_z - s[static_cast<std::size_t>(labels[i])];

        if (grad_w || grad_b) {
            for (int c = 0; c < num_classes; ++c) {
                const double p = std::exp(s[static_cast<std::size_t>(c)] - log_z);
                const double residual = (p - (labels[i] == c ? 1.0 : 0.0)) / static_cast<double>(n);
                if (grad_b) (*grad_b)[static_cast<std::size_t>(c)] += residual;
                if (grad_w) {
                    for (const auto& [idx, value] : rows[i].entries) {
                        (*grad_w)[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim) +
                                  static_cast<std::size_t>(idx)] += residual * value;
                    }
                }
            }
        }
    }
    loss /= static_cast<double>(n);

    double reg = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        reg += weights[j] * weights[j];
        if (grad_w) (*grad_w)[j] += lambda * weights[j];
    }
    return loss + 0.5 * lambda * reg;
}

// Full-batch gradient descent from zero-initialized parameters. The base
// step is halved (deterministically) whenever it would increase the
// objective, so the recorded loss sequence is non-increasing and large
// regularization strengths stay stable. Stops on gradient inf-norm < tol.
inline LogisticTrainResult logistic_train(const std::vector<SparseVector>& rows,
                                          const std::vector<int>& labels, int num_classes,
                                          int dim, const LogisticTrainConfig& config = {}) {
    if (rows.empty() || rows.size() != labels.size())
        throw Error(ErrorCategory::config, "training rows and labels must align and be non-empty");
    std::set<int> distinct(labels.begin(), labels.end());
    if (distinct.size() < 2)
        throw Error(ErrorCategory::degenerate_data,
                    "training set contains a single label; need at least two");
    for (int y : distinct) {
        if (y < 0 || y >= num_classes)
            throw Error(ErrorCategory::config, "label index outside class range");
    }

    LogisticTrainResult result;
    result.model.num_classes = num_classes;
    result.model.dim = dim;
    result.model.weights.assign(static_cast<std::size_t>(num_classes) * static_cast<std::size_t>(dim), 0.0);
    result.model.bias.assign(static_cast<std::size_t>(num_classes), 0.0);

    std::vector<double> grad_w, grad_b, trial_w, trial_b;
    double loss = logistic_loss_and_gradient(result.model.weights, result.model.bias, rows,
                                             labels, num_classes, dim, config.lambda, &grad_w,
                                             &grad_b);
    result.loss_history.push_back(loss);

    for (int iter = 0; iter < config.max_iters; ++iter) {
        double grad_norm = 0.0;
        for (double g : grad_w) grad_norm = std::max(grad_norm, std::abs(g));
        for (double g : grad_b) grad_norm = std::max(grad_norm, std::abs(g));
        if (grad_norm < config.tol) {
            result.converged = true;
            break;
        }

        double step = config.lr;
        bool accepted = false;
        double trial_loss = loss;
        for (int halving = 0; halving < 60; ++halving) {
            trial_w = result.model.weights;
            trial_b = result.model.bias;
            for (std::size_t j = 0; j < trial_w.size(); ++j) trial_w[j] -= step * grad_w[j];
            for (std::size_t j = 0; j < trial_b.size(); ++j) trial_b[j] -= step * grad_b[j];
            trial_loss = logistic_loss_and_gradient(trial_w, trial_b, rows, labels, num_classes,
                                                    dim, config.lambda);
            if (trial_loss <= loss) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // numerical floor; no descent direction step helps

        result.model.weights.swap(trial_w);
        result.model.bias.swap(trial_b);
        loss = logistic_loss_and_gradient(result.model.weights, result.model.bias, rows, labels,
                                          num_classes, dim, config.lambda, &grad_w, &grad_b);
        result.loss_history.push_back(loss);
        ++result.iterations;
    }
    return result;
}

}  // namespace sentifuse
