// src/nnet/trainer.cc

// Copyright 2026  The phonacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "nnet/trainer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "base/error.h"
#include "base/log.h"
#include "base/random.h"
#include "json.hpp"

namespace phonacq {

void TrainConfig::Check() const {
  if (!(learning_rate > 0.0)) Fail(ErrorCode::kInvalidArgument, "learning rate must be positive");
  if (epochs < 1) Fail(ErrorCode::kInvalidArgument, "need at least one epoch");
  if (batch_size < 1) Fail(ErrorCode::kInvalidArgument, "batch size must be positive");
}

TrainConfig TrainConfigFromJson(const nlohmann::json &j) {
  TrainConfig c;
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.beta1 = j.value("beta1", c.beta1);
  c.beta2 = j.value("beta2", c.beta2);
  c.epsilon = j.value("epsilon", c.epsilon);
  c.epochs = j.value("epochs", c.epochs);
  c.batch_size = j.value("batch_size", c.batch_size);
  c.shuffle_seed = j.value("shuffle_seed", c.shuffle_seed);
  c.Check();
  return c;
}

TrainConfig ReadTrainConfig(const std::string &path) {
  std::ifstream is(path);
  if (!is) Fail(ErrorCode::kMissingFile, "cannot open " + path);
  try {
    return TrainConfigFromJson(nlohmann::json::parse(is));
  } catch (const nlohmann::json::exception &e) {
    Fail(ErrorCode::kParse, path + ": " + e.what());
  }
}

InputNormalizer InputNormalizer::Fit(const std::vector<Segment> &segments) {
  if (segments.empty()) Fail(ErrorCode::kEmptyInput, "cannot fit a normalizer on no segments");
  const Eigen::Index C = segments[0].input.cols();
  Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(C), sumsq = Eigen::RowVectorXd::Zero(C);
  double n = 0;
  for (const auto &s : segments) {
    const Eigen::MatrixXd x = s.input.cast<double>();
    sum += x.colwise().sum();
    sumsq += x.array().square().matrix().colwise().sum();
    n += static_cast<double>(x.rows());
  }
  InputNormalizer norm;
  const Eigen::RowVectorXd mean = sum / n;
  const Eigen::RowVectorXd var =
      (sumsq / n - mean.array().square().matrix()).cwiseMax(0.0);
  norm.mean = mean.cast<float>();
  norm.sd = var.cwiseSqrt().cast<float>();
  for (Eigen::Index c = 0; c < C; ++c)
    if (!(norm.sd[c] > 1e-12f)) norm.sd[c] = 1.0f;
  return norm;
}

void InputNormalizer::Apply(Segment *seg) const {
  if (Empty()) return;
  if (seg->input.cols() != mean.size())
    Fail(ErrorCode::kDimensionMismatch, "normalizer width does not match segment");
  seg->input = ((seg->input.rowwise() - mean).array().rowwise() / sd.array()).matrix();
  seg->target = seg->input.leftCols(seg->target.cols());
}

void InputNormalizer::Apply(std::vector<Segment> *segs) const {
  for (auto &s : *segs) Apply(&s);
}

Dataset PackSegments(const std::vector<Segment> &segments) {
  Dataset d;
  if (segments.empty()) return d;
  const Eigen::Index in_w = segments[0].input.size(), out_w = segments[0].target.size();
  d.inputs.resize(static_cast<Eigen::Index>(segments.size()), in_w);
  d.targets.resize(static_cast<Eigen::Index>(segments.size()), out_w);
  for (size_t i = 0; i < segments.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    d.inputs.row(r) = Eigen::Map<const Eigen::RowVectorXf>(segments[i].input.data(), in_w);
    d.targets.row(r) = Eigen::Map<const Eigen::RowVectorXf>(segments[i].target.data(), out_w);
  }
  return d;
}

double EvaluateLoss(const ModelParams &params, const Dataset &data, int batch_size) {
  const Eigen::Index n = data.Size();
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  double sse = 0.0;
  for (Eigen::Index start = 0; start < n; start += batch_size) {
    const Eigen::Index b = std::min<Eigen::Index>(batch_size, n - start);
    FloatMatrix x = data.inputs.middleRows(start, b);
    FloatMatrix t = data.targets.middleRows(start, b);
    auto out = Forward(params, x);
    sse += MseLoss(out.output, t) * static_cast<double>(out.output.size());
  }
  return sse / static_cast<double>(n * data.targets.cols());
}

TrainResult Train(const ModelParams &init, const Dataset &train, const Dataset &val,
                  const TrainConfig &cfg) {
  cfg.Check();
  const Eigen::Index n = train.Size();
  if (n == 0) Fail(ErrorCode::kEmptyInput, "training set is empty");
  if (train.inputs.cols() != init.enc_in.InDim() ||
      train.targets.cols() != init.dec_out.OutDim())
    Fail(ErrorCode::kDimensionMismatch, "training data does not match model dimensions");

  TrainResult res{init, init, {}};
  ModelParams &params = res.final_params;
  AdamState adam = InitAdamState(params);
  const AdamOptions opts = cfg.Adam();
  double best = std::numeric_limits<double>::infinity();

  FloatMatrix xb, tb;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    Rng rng(DeriveSeed(cfg.shuffle_seed, static_cast<uint64_t>(epoch)));
    const auto order = rng.SampleWithoutReplacement(static_cast<size_t>(n), static_cast<size_t>(n));
    double sse = 0.0;
    for (Eigen::Index start = 0; start < n; start += cfg.batch_size) {
      const Eigen::Index b = std::min<Eigen::Index>(cfg.batch_size, n - start);
      xb.resize(b, train.inputs.cols());
      tb.resize(b, train.targets.cols());
      for (Eigen::Index i = 0; i < b; ++i) {
        const auto src = static_cast<Eigen::Index>(order[static_cast<size_t>(start + i)]);
        xb.row(i) = train.inputs.row(src);
        tb.row(i) = train.targets.row(src);
      }
      double loss = 0.0;
      ModelParams grads = Backward(params, xb, tb, &loss);
      sse += loss * static_cast<double>(b);
      AdamStep(&params, grads, &adam, opts);
    }
    const double train_loss = sse / static_cast<double>(n);
    const double val_loss = val.Size() > 0 ? EvaluateLoss(params, val) : train_loss;
    res.history.train_loss.push_back(train_loss);
    res.history.val_loss.push_back(val_loss);
    if (val_loss < best) {
      best = val_loss;
      res.history.best_epoch = epoch;
      res.best_params = params;
    }
    PHONACQ_VLOG(2) << "epoch " << epoch + 1 << "/" << cfg.epochs << " train " << train_loss
                    << " val " << val_loss;
  }
  PHONACQ_LOG << "trained " << cfg.epochs << " epochs: final train loss "
              << res.history.train_loss.back() << ", best val loss " << best << " at epoch "
              << res.history.best_epoch + 1;
  return res;
}

FloatMatrix EncodeSegments(const ModelParams &params, const std::vector<Segment> &segments) {
  const Dataset d = PackSegments(segments);
  FloatMatrix out(d.Size(), params.config.hidden_dim);
  const Eigen::Index chunk = 1024;
  for (Eigen::Index start = 0; start < d.Size(); start += chunk) {
    const Eigen::Index b = std::min(chunk, d.Size() - start);
    FloatMatrix x = d.inputs.middleRows(start, b);
    out.middleRows(start, b) = EncodeBatch(params, x);
  }
  return out;
}

EmbeddingSet Encode(const ModelParams &params, const std::vector<Segment> &segments) {
  const FloatMatrix hidden = EncodeSegments(params, segments);
  EmbeddingSet out(segments.size());
  for (size_t i = 0; i < segments.size(); ++i) {
    out[i].vector = hidden.row(static_cast<Eigen::Index>(i)).transpose().cast<double>();
    out[i].label = segments[i].label.value_or("");
  }
  return out;
}

}  // namespace phonacq
