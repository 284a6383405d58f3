#include "otg/otg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "otg/chroma.hpp"
#include "otg/decomp.hpp"
#include "otg/embed.hpp"
#include "otg/error.hpp"
#include "otg/io.hpp"
#include "otg/suite.hpp"

struct otg_graph {
  otg::io::AnyGraph g;
};

namespace {

thread_local std::string last_error;

otg_status status_of(otg::ErrorKind kind) {
  switch (kind) {
    case otg::ErrorKind::invalid_argument: return OTG_ERR_INVALID_ARGUMENT;
    case otg::ErrorKind::verification_failed: return OTG_ERR_VERIFICATION;
    case otg::ErrorKind::capacity_exceeded: return OTG_ERR_CAPACITY;
    case otg::ErrorKind::parse_error: return OTG_ERR_PARSE;
    case otg::ErrorKind::internal: return OTG_ERR_INTERNAL;
  }
  return OTG_ERR_INTERNAL;
}

template <class F>
otg_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const otg::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OTG_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OTG_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) otg::fail(otg::ErrorKind::invalid_argument, std::string(what) + " must not be null");
}

std::pair<otg::IncreasingTuple, otg::IncreasingTuple> pair_of(const uint64_t* a, const uint64_t* b,
                                                              size_t len) {
  otg::require(len >= 1, "tuples must be non-empty");
  need(a, "a");
  need(b, "b");
  return {otg::IncreasingTuple(std::vector<otg::Value>(a, a + len)),
          otg::IncreasingTuple(std::vector<otg::Value>(b, b + len))};
}

otg_status emit(otg::io::AnyGraph g, otg_graph** out) {
  need(out, "out");
  *out = new otg_graph{std::move(g)};
  return OTG_OK;
}

otg::SuiteConfig suite_config(const otg_suite_config* c) {
  need(c, "config");
  otg::SuiteConfig config;
  config.seed = c->seed;
  config.count = c->count;
  config.caps.max_length = c->max_length;
  config.caps.max_value = c->max_value;
  config.max_n = c->max_n;
  config.threads = c->threads;
  return config;
}

otg_status suite_output(const otg::SuiteReport& report, otg_format format, char** out) {
  otg::require(format != OTG_FORMAT_DOT, "suite output is json or table");
  *out = copy_string(format == OTG_FORMAT_JSON ? otg::io::dump(otg::to_json(report))
                                               : otg::format_table(report));
  return report.ok() ? OTG_OK : OTG_ERR_VERIFICATION;
}

}  // namespace

extern "C" {

const char* otg_version(void) { return "0.1.0"; }
const char* otg_last_error(void) { return last_error.c_str(); }

const char* otg_status_name(otg_status status) {
  switch (status) {
    case OTG_OK: return "ok";
    case OTG_ERR_VERIFICATION: return "verification failed";
    case OTG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OTG_INCONCLUSIVE: return "inconclusive";
    case OTG_ERR_PARSE: return "parse error";
    case OTG_ERR_CAPACITY: return "capacity exceeded";
    case OTG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void otg_string_free(char* s) { std::free(s); }

otg_suite_config otg_suite_defaults(void) {
  const otg::SuiteConfig d;
  return {d.seed, d.count, d.caps.max_length, d.caps.max_value, d.max_n, d.threads};
}

otg_status otg_graph_shift(size_t r, uint64_t n, otg_graph** out) {
  return guarded([&] { return emit(otg::shift_graph(r, n), out); });
}

otg_status otg_graph_lshift(size_t k, uint64_t n, otg_graph** out) {
  return guarded([&] { return emit(otg::lshift_digraph(k, n), out); });
}

otg_status otg_graph_rshift(size_t k, uint64_t n, otg_graph** out) {
  return guarded([&] { return emit(otg::rshift_digraph(k, n), out); });
}

otg_status otg_graph_order_type(const uint64_t* a, const uint64_t* b, size_t len, uint64_t theta,
                                otg_graph** out) {
  return guarded([&] {
    const auto [x, y] = pair_of(a, b, len);
    return emit(otg::order_type_graph(otg::otp(x, y), theta), out);
  });
}

otg_status otg_graph_from_json(const char* text, otg_graph** out) {
  return guarded([&] {
    need(text, "text");
    return emit(otg::io::graph_from_json(otg::io::parse(text)), out);
  });
}

otg_status otg_graph_export(const otg_graph* g, otg_format format, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    std::string text;
    switch (format) {
      case OTG_FORMAT_JSON:
        text = otg::io::dump(std::visit([](const auto& x) { return otg::io::to_json(x); }, g->g));
        break;
      case OTG_FORMAT_DOT:
        text = std::visit([](const auto& x) { return otg::io::to_dot(x); }, g->g);
        break;
      case OTG_FORMAT_TABLE:
        text = otg::io::to_table(g->g);
        break;
      default:
        otg::fail(otg::ErrorKind::invalid_argument, "unknown output format");
    }
    *out = copy_string(text);
    return OTG_OK;
  });
}

size_t otg_graph_order(const otg_graph* g) {
  return g ? std::visit([](const auto& x) { return x.order(); }, g->g) : 0;
}

size_t otg_graph_size(const otg_graph* g) {
  return g ? std::visit([](const auto& x) { return x.size(); }, g->g) : 0;
}

int otg_graph_directed(const otg_graph* g) {
  return g && std::holds_alternative<otg::Digraph>(g->g) ? 1 : 0;
}

int otg_graph_equal(const otg_graph* x, const otg_graph* y) { return x && y && x->g == y->g ? 1 : 0; }

void otg_graph_free(otg_graph* g) { delete g; }

otg_status otg_chromatic(const otg_graph* g, uint64_t budget, otg_progress_fn progress, void* user,
                         char** report) {
  return guarded([&] {
    need(g, "graph");
    need(report, "report");
    const auto* graph = std::get_if<otg::Graph>(&g->g);
    otg::require(graph != nullptr, "chromatic number needs an undirected graph");
    otg::SolverOptions options;
    if (budget != 0) options.budget = budget;
    if (progress)
      options.progress = [&](std::string_view line) { progress(std::string(line).c_str(), user); };
    const otg::ChromaticResult r = otg::chromatic_number(*graph, options);
    *report = copy_string(otg::io::dump(otg::io::chi_report(r)));
    return r.exact ? OTG_OK : OTG_INCONCLUSIVE;
  });
}

otg_status otg_decompose(const uint64_t* a, const uint64_t* b, size_t len, char** report) {
  return guarded([&] {
    need(report, "report");
    const auto [x, y] = pair_of(a, b, len);
    *report = copy_string(otg::io::dump(otg::io::decomposition_report(x, y, otg::decompose(x, y))));
    return OTG_OK;
  });
}

otg_status otg_embed(const uint64_t* a, const uint64_t* b, size_t len, uint64_t n, char** report) {
  return guarded([&] {
    need(report, "report");
    const auto [x, y] = pair_of(a, b, len);
    const otg::CoverWitness w = otg::orderly_cover(x, y);
    const otg::EmbeddingMap e = otg::cover_embedding(x, y, w, n);
    const bool verified = otg::verify_embedding(e, otg::otp(x, y));
    *report = copy_string(otg::io::dump(otg::io::embedding_report(x, y, e, w, verified)));
    return verified ? OTG_OK : OTG_ERR_VERIFICATION;
  });
}

otg_status otg_suite_run(const otg_suite_config* config, otg_format format, char** report) {
  return guarded([&] {
    need(report, "report");
    return suite_output(otg::run_suite(suite_config(config)), format, report);
  });
}

otg_status otg_suite_run_pair(const otg_suite_config* config, const uint64_t* a, const uint64_t* b,
                              size_t len, otg_format format, char** report) {
  return guarded([&] {
    need(report, "report");
    const auto [x, y] = pair_of(a, b, len);
    return suite_output(otg::run_suite_on(x, y, suite_config(config)), format, report);
  });
}

otg_status otg_verify(const char* artifact_json, const char* graph_json, uint64_t budget,
                      char** message) {
  return guarded([&] {
    need(artifact_json, "artifact");
    need(message, "message");
    std::optional<otg::io::AnyGraph> graph;
    if (graph_json) graph = otg::io::graph_from_json(otg::io::parse(graph_json));
    const auto outcome = otg::io::verify_artifact(otg::io::parse(artifact_json), graph,
                                                  budget ? budget : otg::kDefaultBudget);
    *message = copy_string(outcome.message);
    if (outcome.ok) return OTG_OK;
    last_error = outcome.message;
    return outcome.inconclusive ? OTG_INCONCLUSIVE : OTG_ERR_VERIFICATION;
  });
}

}  // extern "C"
