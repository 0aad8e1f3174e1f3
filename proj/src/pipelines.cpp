#include "taa/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "taa/errors.hpp"
#include "taa/text_ops.hpp"

namespace taa {

void PipelineConfig::validate() const {
  if (!is_iso_date(from_date) || !is_iso_date(to_date))
    throw Error("pipeline config: dates must be YYYY-MM-DD");
  if (from_date > to_date)
    throw Error("pipeline config: from_date is after to_date");
  if (org_threshold < 0 || person_threshold < 0 || row_marginal_min < 0 ||
      col_marginal_min < 0)
    throw Error("pipeline config: thresholds must be non-negative");
  if (topic_count < 1) throw Error("pipeline config: topic count must be >= 1");
  if (top_topics < 1) throw Error("pipeline config: topk must be >= 1");
  if (iterations < 1) throw Error("pipeline config: iterations must be >= 1");
  if (informative_terms < 1)
    throw Error("pipeline config: informative term count must be >= 1");
}

namespace {

double occurrence_indicator(double x) { return x > 0.0 ? 1.0 : 0.0; }

// Drops all-zero rows while keeping the column (index) set intact. Used
// between n-gram unions so the carried key sets stay proportional to the
// document instead of quadratic in its vocabulary; stored entries and all
// downstream sums are unchanged.
Array keep_support_rows(const Array& a) {
  std::vector<Key> rows;
  for (const auto& [key, value] : a.entries())
    if (rows.empty() || !(rows.back() == key.first))
      rows.push_back(key.first);
  return extract(a, KeySet(std::move(rows)), a.cols());
}

// Sum over positions, transposed and re-keyed to a {d} x terms vector.
Array phrase_vector(const Array& n, const std::string& doc_id) {
  Array counts = transpose(sum(n, 2));
  std::map<Key, Key> row_map{{Key::unit(), Key::doc(doc_id)}};
  std::map<Key, Key> col_map =
      key_map(counts.cols(), [](const Key& k) { return k.second(); });
  return rename(counts, row_map, col_map);
}

}  // namespace

Array build_unibigram_vector(const Document& d) {
  TermIndexMatrix tim = tokenize(d);
  const Array& n = tim.array;

  Array unigrams = term_vector_of(tim);
  Array cooc = matmul(n, transpose(lshift(n, 1)));
  Array bigrams = flatten(cooc);
  std::map<Key, Key> row_map{{Key::unit(), Key::doc(tim.doc_id)}};
  std::map<Key, Key> col_map = key_map(bigrams.cols(), [](const Key& k) {
    // ((d,t1),(d,t2)) -> (t1,t2)
    return Key::pair(k.first().second(), k.second().second());
  });
  bigrams = rename(bigrams, row_map, col_map);
  bigrams = filter(bigrams, [](double x) { return x > 0.0; });
  return merge(unigrams, bigrams);
}

Array build_doc_term_matrix(const Corpus& corpus, TermMode mode) {
  if (corpus.documents.empty())
    throw Error("document-term matrix: corpus has no documents");
  std::vector<const Document*> docs;
  docs.reserve(corpus.documents.size());
  for (const Document& d : corpus.documents) docs.push_back(&d);
  std::sort(docs.begin(), docs.end(),
            [](const Document* a, const Document* b) { return a->id < b->id; });
  for (std::size_t i = 1; i < docs.size(); ++i)
    if (docs[i - 1]->id == docs[i]->id)
      throw Error("document-term matrix: duplicate document id '" +
                  docs[i]->id + "'");

  std::vector<Array> vectors;
  vectors.reserve(docs.size());
  for (const Document* d : docs)
    vectors.push_back(mode == TermMode::Unigrams
                          ? term_vector_of(tokenize(*d))
                          : build_unibigram_vector(*d));

  Array acc = std::move(vectors.back());
  for (std::size_t i = vectors.size() - 1; i-- > 0;)
    acc = merge(vectors[i], acc);
  return acc;
}

Array build_tfidf_matrix(const Array& unigram_counts, int informative_terms) {
  if (informative_terms <= 0)
    throw Error("tf-idf: informative term count must be positive");
  if (unigram_counts.rows().empty())
    throw Error("tf-idf: corpus has no documents");

  Array occurrences = apply(unigram_counts, occurrence_indicator);
  Array doc_frequencies = sum(occurrences, 1);
  Array ranks = sort(doc_frequencies);
  Array informative = filter(ranks, [informative_terms](double rank) {
    return rank <= static_cast<double>(informative_terms);
  });
  const KeySet& selected = informative.cols();

  double n_docs = static_cast<double>(unigram_counts.rows().size());
  Array idf =
      apply(extract(doc_frequencies, doc_frequencies.rows(), selected),
            [n_docs](double df) { return -std::log(df / n_docs); });
  Array restricted = extract(unigram_counts, unigram_counts.rows(), selected);
  return expand(ExpandOp::Mul, idf, restricted);
}

Array top_k_topics(const Array& doc_topics, int topk) {
  if (topk <= 0) throw Error("top_k_topics: topk must be positive");
  std::size_t n_topics = doc_topics.cols().size();
  if (static_cast<std::size_t>(topk) > n_topics)
    throw Error("top_k_topics: topk exceeds the topic count");
  Array ranks = sort(doc_topics, 2);
  double cut = static_cast<double>(n_topics - static_cast<std::size_t>(topk)) + 1.0;
  return filter(ranks, [cut](double rank) { return rank >= cut; });
}

EntityTopicResult entity_topic_pipeline(const Relation& news,
                                        const KeySet& organizations,
                                        const KeySet& persons,
                                        const PipelineConfig& cfg,
                                        const TopicModel& model) {
  cfg.validate();

  // 1: date selection over the relation, keeping id and content.
  Relation in_window = relation_select(
      news, "date", DateRange{cfg.from_date, cfg.to_date});
  Relation selected = relation_project(in_window, {"newsID", "content"});
  if (selected.row_count() == 0) throw EmptyStageError("stage 1");

  std::vector<Document> docs;
  docs.reserve(selected.row_count());
  for (std::size_t i = 0; i < selected.row_count(); ++i) {
    Document d;
    d.id = std::get<std::string>(selected.at(i, 0));
    d.content = std::get<std::string>(selected.at(i, 1));
    docs.push_back(std::move(d));
  }
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < docs.size(); ++i)
    if (docs[i - 1].id == docs[i].id)
      throw Error("pipeline: duplicate document id '" + docs[i].id + "'");

  // 2-3: accumulate the unigram matrix M and the phrase matrix FV.
  Array m = Array::zeros(KeySet{}, KeySet{});
  Array fv = Array::zeros(KeySet{}, KeySet{});
  for (const Document& d : docs) {
    TermIndexMatrix tim = tokenize(d);
    const Array& n1 = tim.array;
    Array v = term_vector_of(tim);
    Array n2 = keep_support_rows(tim_union(n1, lshift(n1, 1)));
    Array n3 = keep_support_rows(tim_union(n2, lshift(n1, 2)));
    Array n = merge(n1, merge(n2, n3));
    Array vf = phrase_vector(n, tim.doc_id);
    fv = merge(fv, vf);
    m = merge(m, v);
  }

  // 4-7: entity mention sums against the two term lists.
  auto mention_rows = [&](const KeySet& term_list, double threshold) {
    Array mentions = extract(fv, fv.rows(), term_list);
    if (cfg.distinct_entities) mentions = apply(mentions, occurrence_indicator);
    Array sums = sum(mentions, 2);
    return filter(sums, [threshold](double x) { return x > threshold; }).rows();
  };
  KeySet org_rows = mention_rows(organizations, cfg.org_threshold);
  KeySet person_rows = mention_rows(persons, cfg.person_threshold);

  // 8: restrict M to documents passing both filters.
  m = extract(m, org_rows.intersect(person_rows), m.cols());
  if (m.rows().empty()) throw EmptyStageError("stage 8");

  EntityTopicResult result;
  result.stage1_documents = docs.size();
  for (const Key& r : m.rows()) result.entity_selected.push_back(r.text());

  // 9-11: marginal pruning. The prose semantics keep marginals >= theta;
  // the literal figure predicate (< theta) is available for study.
  auto marginal_pred = [&](double threshold) {
    return [threshold, literal = cfg.figure_literal_pruning](double x) {
      return literal ? x < threshold : x >= threshold;
    };
  };
  Array term_marginals = filter(sum(m, 1), marginal_pred(cfg.col_marginal_min));
  Array doc_marginals = filter(sum(m, 2), marginal_pred(cfg.row_marginal_min));
  m = extract(m, doc_marginals.rows(), term_marginals.cols());
  if (m.rows().empty() || m.cols().empty()) throw EmptyStageError("stage 11");

  for (const Key& r : m.rows()) result.modeled_documents.push_back(r.text());

  // 12: topic model plus the per-document top-k topic selection.
  result.topics = model.run(m, cfg.topic_count, cfg.iterations, cfg.seed);
  result.top_topic_ranks = top_k_topics(result.topics.doc_topics, cfg.top_topics);
  result.pruned_matrix = std::move(m);
  return result;
}

}  // namespace taa
