#ifndef TAA_NMF_HPP
#define TAA_NMF_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "taa/array.hpp"

namespace taa {

/// Output of a topic model over a document-term matrix: document-topic
/// weights (D x Topics) and topic-term weights (Topics x T), topics keyed
/// as integers 1..k. All weights are non-negative.
struct TopicModelResult {
  Array doc_topics;
  Array topic_terms;
};

/// Pluggable topic-model boundary: anything that factors a non-negative
/// D x T array given (k, iterations, seed) can be swapped in. The CLI picks
/// an implementation by name.
class TopicModel {
public:
  virtual ~TopicModel() = default;
  virtual std::string_view name() const noexcept = 0;
  virtual TopicModelResult run(const Array& matrix, int k, int iterations,
                               std::uint64_t seed) const = 0;
};

/// Reference implementation: multiplicative-update non-negative matrix
/// factorization minimizing Frobenius error. Deterministic for a given
/// (matrix, k, iterations, seed); factors stay non-negative and the error is
/// non-increasing across iterations. If frobenius_trace is non-null it
/// receives the error after every iteration.
TopicModelResult topic_model_nmf(const Array& matrix, int k, int iterations,
                                 std::uint64_t seed,
                                 std::vector<double>* frobenius_trace = nullptr);

/// Registry lookup ("nmf" is built in); nullptr when unknown.
const TopicModel* find_topic_model(std::string_view name);

}  // namespace taa

#endif
