#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "taa/corpus.hpp"
#include "taa/errors.hpp"
#include "taa/io.hpp"
#include "taa/nmf.hpp"
#include "taa/pipelines.hpp"

namespace {

bool log_enabled() {
  const char* v = std::getenv("TAA_LOG");
  return v && *v && std::string_view(v) != "0";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[taa] " << msg << '\n';
}

int run_ingest(const std::string& input, const std::string& out_dir) {
  taa::Corpus corpus = taa::ingest_jsonl(input);
  taa::save_corpus(corpus, out_dir);
  std::cout << "ingested " << corpus.documents.size() << " documents\n";
  return 0;
}

int run_dtm(const std::string& corpus_dir, bool bigrams, bool tfidf,
            int informative, const std::string& out,
            const std::string& format_name) {
  taa::Format format = taa::format_from_name(format_name);
  taa::Corpus corpus = taa::load_corpus(corpus_dir);
  log_line("building document-term matrix over " +
           std::to_string(corpus.documents.size()) + " documents");
  taa::Array matrix = taa::build_doc_term_matrix(
      corpus, bigrams ? taa::TermMode::UnigramsAndBigrams
                      : taa::TermMode::Unigrams);
  if (tfidf) matrix = taa::build_tfidf_matrix(matrix, informative);
  taa::write_array_file(matrix, out, format);
  std::cout << "wrote " << out << ": dim " << matrix.rows().size() << "×"
            << matrix.cols().size() << ", " << matrix.entry_count()
            << " entries\n";
  return 0;
}

int run_topics(const std::string& corpus_dir, const std::string& orgs_path,
               const std::string& persons_path, const taa::PipelineConfig& cfg,
               const std::string& model_name, const std::string& out_dir,
               const std::string& format_name) {
  taa::Format format = taa::format_from_name(format_name);
  const taa::TopicModel* model = taa::find_topic_model(model_name);
  if (!model) throw taa::Error("unknown topic model '" + model_name + "'");

  taa::Corpus corpus = taa::load_corpus(corpus_dir);
  taa::KeySet orgs = taa::load_term_list(orgs_path);
  taa::KeySet persons = taa::load_term_list(persons_path);
  log_line("running entity/topic pipeline over " +
           std::to_string(corpus.documents.size()) + " documents");

  taa::EntityTopicResult result =
      taa::entity_topic_pipeline(corpus.relation, orgs, persons, cfg, *model);

  std::cout << "stage 1: " << result.stage1_documents << " documents\n";
  std::cout << "stage 8: " << result.entity_selected.size() << " documents\n";
  std::cout << "stage 11: " << result.modeled_documents.size()
            << " documents\n";

  std::filesystem::path dir(out_dir);
  std::string ext(taa::format_extension(format));
  taa::write_array_file(result.topics.doc_topics,
                        dir / ("doc_topics." + ext), format);
  taa::write_array_file(result.topics.topic_terms,
                        dir / ("topic_terms." + ext), format);
  taa::write_array_file(result.top_topic_ranks, dir / ("top_topics." + ext),
                        format);
  std::string selected;
  for (const auto& id : result.entity_selected) {
    selected += id;
    selected += '\n';
  }
  taa::atomic_write_file(dir / "selected_docs.txt", selected);
  std::cout << "wrote " << (dir / ("doc_topics." + ext)).string() << ", "
            << (dir / ("topic_terms." + ext)).string() << ", "
            << (dir / ("top_topics." + ext)).string() << ", "
            << (dir / "selected_docs.txt").string() << '\n';
  return 0;
}

int run_show(const std::string& path, int head) {
  taa::Array a = taa::read_array_file(path);
  std::cout << "dim " << a.rows().size() << "×" << a.cols().size() << ", "
            << a.entry_count() << " entries\n";
  int printed = 0;
  for (const auto& [key, value] : a.entries()) {
    if (printed++ >= head) break;
    std::cout << key.first.to_sexpr() << '\t' << key.second.to_sexpr() << '\t'
              << taa::format_double(value) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch tool for text associative arrays: corpus ingestion, "
               "document-term matrices, tf-idf, and entity-filtered topic "
               "models."};
  app.require_subcommand(1);

  std::string ingest_input, ingest_out;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "Validate a JSONL corpus and store it as a corpus directory");
  ingest->add_option("input", ingest_input, "JSONL corpus file")->required();
  ingest->add_option("-o,--out", ingest_out, "output corpus directory")
      ->required();

  std::string dtm_corpus, dtm_out, dtm_format = "triples";
  bool dtm_bigrams = false, dtm_tfidf = false;
  int dtm_informative = 1000;
  CLI::App* dtm = app.add_subcommand(
      "dtm", "Build a document-term matrix from an ingested corpus");
  dtm->add_option("corpus", dtm_corpus, "corpus directory")->required();
  dtm->add_flag("--bigrams", dtm_bigrams, "include bigram terms");
  dtm->add_flag("--tfidf", dtm_tfidf,
                "tf-idf weights over the most informative unigrams");
  dtm->add_option("--informative", dtm_informative,
                  "informative-term count for --tfidf");
  dtm->add_option("-o,--out", dtm_out, "output array file")->required();
  dtm->add_option("--format", dtm_format, "triples|json|csv");

  std::string topics_corpus, topics_orgs, topics_persons, topics_out;
  std::string topics_model = "nmf", topics_format = "triples";
  taa::PipelineConfig cfg;
  CLI::App* topics = app.add_subcommand(
      "topics", "Entity-filtered topic model over a date window");
  topics->add_option("corpus", topics_corpus, "corpus directory")->required();
  topics->add_option("--orgs", topics_orgs, "organization term list")
      ->required();
  topics->add_option("--persons", topics_persons, "person term list")
      ->required();
  topics->add_option("--from", cfg.from_date, "window start (YYYY-MM-DD)")
      ->required();
  topics->add_option("--to", cfg.to_date, "window end (YYYY-MM-DD)")
      ->required();
  topics->add_option("--c1", cfg.org_threshold,
                     "organization mention threshold (strict >)");
  topics->add_option("--c2", cfg.person_threshold,
                     "person mention threshold (strict >)");
  topics->add_option("--theta1", cfg.row_marginal_min,
                     "document marginal-sum minimum");
  topics->add_option("--theta2", cfg.col_marginal_min,
                     "term marginal-sum minimum");
  topics->add_option("-k,--topics", cfg.topic_count, "topic count");
  topics->add_option("--topk", cfg.top_topics, "topics reported per document");
  topics->add_option("--seed", cfg.seed, "random seed for the topic model");
  topics->add_option("--iters", cfg.iterations, "topic-model iterations");
  topics->add_flag("--distinct-entities", cfg.distinct_entities,
                   "count each entity once per document");
  topics->add_flag("--figure-literal", cfg.figure_literal_pruning,
                   "strict < marginal pruning (see README)");
  topics->add_option("--model", topics_model, "topic model plug-in name");
  topics->add_option("-o,--out", topics_out, "output directory")->required();
  topics->add_option("--format", topics_format, "triples|json|csv");

  std::string show_path;
  int show_head = 10;
  CLI::App* show =
      app.add_subcommand("show", "Print an array file's header and entries");
  show->add_option("array", show_path, "array file (triples or JSON)")
      ->required();
  show->add_option("--head", show_head, "number of entries to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (ingest->parsed()) return run_ingest(ingest_input, ingest_out);
    if (dtm->parsed()) {
      if (dtm_tfidf && dtm_bigrams)
        throw taa::Error(
            "--tfidf cannot be combined with --bigrams: tf-idf is defined "
            "over unigram counts");
      return run_dtm(dtm_corpus, dtm_bigrams, dtm_tfidf, dtm_informative,
                     dtm_out, dtm_format);
    }
    if (topics->parsed())
      return run_topics(topics_corpus, topics_orgs, topics_persons, cfg,
                        topics_model, topics_out, topics_format);
    if (show->parsed()) return run_show(show_path, show_head);
  } catch (const taa::EmptyStageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
