#ifndef TAA_PIPELINES_HPP
#define TAA_PIPELINES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "taa/array.hpp"
#include "taa/corpus.hpp"
#include "taa/nmf.hpp"
#include "taa/relation.hpp"

namespace taa {

/// Settings for the entity-filtered topic pipeline.
struct PipelineConfig {
  std::string from_date;  // d1
  std::string to_date;    // d2

  /// Mention thresholds: a document survives when its organization mentions
  /// exceed org_threshold and its person mentions exceed person_threshold
  /// (strict >). With distinct_entities set, each phrase counts once per
  /// document instead of once per occurrence.
  double org_threshold = 0.0;     // c1
  double person_threshold = 0.0;  // c2
  bool distinct_entities = false;

  /// Marginal pruning: keep documents whose row sum is at least
  /// row_marginal_min (theta1) and terms whose column sum is at least
  /// col_marginal_min (theta2). figure_literal_pruning flips the comparison
  /// to the strict < form for study; see README.
  double row_marginal_min = 0.0;  // theta1
  double col_marginal_min = 0.0;  // theta2
  bool figure_literal_pruning = false;

  int topic_count = 2;   // k
  int top_topics = 1;    // topics reported per document
  int iterations = 200;  // topic-model iterations
  std::uint64_t seed = 42;

  int informative_terms = 1000;  // tf-idf informative-term cut

  void validate() const;  // throws Error on inconsistent settings
};

/// Which terms a document-term matrix carries.
enum class TermMode { Unigrams, UnigramsAndBigrams };

/// Per-document term vector of unigram and bigram counts, dimension
/// {d} x (T union TxT): tokenize, count terms, take the positional
/// co-occurrence product against the one-shifted index matrix, flatten,
/// re-key to bigram pairs, keep realized bigrams, and merge with the
/// unigram counts.
Array build_unibigram_vector(const Document& d);

/// Corpus document-term matrix: the fold of merge over per-document term
/// vectors in canonical document order.
Array build_doc_term_matrix(const Corpus& corpus, TermMode mode);

/// tf-idf matrix over the most informative terms. From a unigram occurrence
/// matrix: occurrence indicators, document frequencies, ascending
/// document-frequency ranks, the lowest-df (highest-idf) informative_terms
/// terms, idf(x) = -ln(x/|D|), and the broadcast product against the
/// restricted counts.
Array build_tfidf_matrix(const Array& unigram_counts, int informative_terms);

/// Rank-based selection of each document's top-k topics: keeps the (d,topic)
/// pairs whose ascending in-row rank is at least n_topics - topk + 1. Ties
/// at the cut resolve by canonical key order.
Array top_k_topics(const Array& doc_topics, int topk);

struct EntityTopicResult {
  std::size_t stage1_documents = 0;        // in the date window
  std::vector<std::string> entity_selected;    // survivors of entity filtering
  std::vector<std::string> modeled_documents;  // survivors of marginal pruning
  Array pruned_matrix;   // the matrix handed to the topic model
  TopicModelResult topics;
  Array top_topic_ranks;  // top_k_topics over the document-topic weights
};

/// The hybrid relational + entity-filter + topic-model pipeline over a news
/// relation with schema (newsID, date, newspaper, title, content):
///   1. select rows in [from_date, to_date], take their content
///   2. per document: unigram/bigram/trigram term-index matrices, phrase
///      counts, accumulated into a phrase matrix FV and a unigram matrix M
///   3. restrict FV to the organization and person term lists; keep
///      documents whose mention sums clear the thresholds
///   4. prune M by row/column marginal sums
///   5. run the topic model
/// Raises EmptyStageError naming the stage (1, 8 or 11) when no documents
/// survive.
EntityTopicResult entity_topic_pipeline(const Relation& news,
                                        const KeySet& organizations,
                                        const KeySet& persons,
                                        const PipelineConfig& cfg,
                                        const TopicModel& model);

}  // namespace taa

#endif
