#include "taa/nmf.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "taa/errors.hpp"

namespace taa {

namespace {

constexpr double kEps = 1e-12;

// Fully specified normal sampler (Box-Muller over mt19937_64 uniforms), so
// factor initialization is reproducible independent of the standard
// library's distribution implementations.
class NormalSampler {
public:
  explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace

TopicModelResult topic_model_nmf(const Array& matrix, int k, int iterations,
                                 std::uint64_t seed,
                                 std::vector<double>* frobenius_trace) {
  if (k < 1) throw Error("nmf: topic count must be at least 1");
  if (iterations < 1) throw Error("nmf: iteration count must be at least 1");
  const std::size_t m = matrix.rows().size();
  const std::size_t n = matrix.cols().size();
  if (static_cast<std::size_t>(k) > std::min(m, n))
    throw Error("nmf: topic count " + std::to_string(k) +
                " exceeds min(" + std::to_string(m) + ", " +
                std::to_string(n) + ")");
  for (const auto& [key, value] : matrix.entries())
    if (value < 0.0)
      throw ValueError("nmf: input matrix has a negative entry");

  // Dense copy in canonical key order.
  std::map<Key, Eigen::Index> row_index, col_index;
  {
    Eigen::Index i = 0;
    for (const Key& r : matrix.rows()) row_index.emplace(r, i++);
    i = 0;
    for (const Key& c : matrix.cols()) col_index.emplace(c, i++);
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                            static_cast<Eigen::Index>(n));
  double total = 0.0;
  for (const auto& [key, value] : matrix.entries()) {
    v(row_index.at(key.first), col_index.at(key.second)) = value;
    total += value;
  }
  double scale = total / (static_cast<double>(m) * static_cast<double>(n));
  if (!(scale > 0.0)) scale = 1.0;

  NormalSampler normal(seed);
  Eigen::MatrixXd w(m, k), h(k, n);
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j)
      w(i, j) = std::abs(normal()) * scale;
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      h(i, j) = std::abs(normal()) * scale;

  if (frobenius_trace) {
    frobenius_trace->clear();
    frobenius_trace->reserve(static_cast<std::size_t>(iterations));
  }
  for (int it = 0; it < iterations; ++it) {
    // Lee-Seung multiplicative updates for the Frobenius objective.
    Eigen::MatrixXd w_num = v * h.transpose();
    Eigen::MatrixXd w_den = w * (h * h.transpose());
    w = (w.array() * w_num.array() / (w_den.array() + kEps)).matrix();

    Eigen::MatrixXd h_num = w.transpose() * v;
    Eigen::MatrixXd h_den = (w.transpose() * w) * h;
    h = (h.array() * h_num.array() / (h_den.array() + kEps)).matrix();

    if (frobenius_trace) frobenius_trace->push_back((v - w * h).norm());
  }

  std::vector<Key> topic_keys;
  topic_keys.reserve(static_cast<std::size_t>(k));
  for (int t = 1; t <= k; ++t) topic_keys.push_back(Key::integer(t));
  KeySet topics(std::move(topic_keys));

  EntryMap dt;
  {
    Eigen::Index i = 0;
    for (const Key& r : matrix.rows()) {
      for (int t = 0; t < k; ++t)
        if (w(i, t) != 0.0) dt.emplace(KeyPair{r, topics.at(t)}, w(i, t));
      ++i;
    }
  }
  EntryMap tt;
  {
    Eigen::Index j = 0;
    for (const Key& c : matrix.cols()) {
      for (int t = 0; t < k; ++t)
        if (h(t, j) != 0.0) tt.emplace(KeyPair{topics.at(t), c}, h(t, j));
      ++j;
    }
  }
  return TopicModelResult{
      Array(matrix.rows(), topics, real_semiring(), std::move(dt)),
      Array(topics, matrix.cols(), real_semiring(), std::move(tt))};
}

namespace {

class NmfTopicModel final : public TopicModel {
public:
  std::string_view name() const noexcept override { return "nmf"; }

  TopicModelResult run(const Array& matrix, int k, int iterations,
                       std::uint64_t seed) const override {
    return topic_model_nmf(matrix, k, iterations, seed);
  }
};

}  // namespace

const TopicModel* find_topic_model(std::string_view name) {
  static const NmfTopicModel nmf;
  if (name == nmf.name()) return &nmf;
  return nullptr;
}

}  // namespace taa
