// Command-line front end. Talks to the library only through otg/otg.h.
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otg/otg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(otg_status s) {
  switch (s) {
    case OTG_OK: return kExitOk;
    case OTG_INCONCLUSIVE: return kExitInconclusive;
    case OTG_ERR_INVALID_ARGUMENT:
    case OTG_ERR_PARSE:
    case OTG_ERR_CAPACITY: return kExitUsage;
    case OTG_ERR_VERIFICATION:
    case OTG_ERR_INTERNAL: return kExitFailure;
  }
  return kExitFailure;
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { otg_string_free(p); }
};

struct GraphDeleter {
  void operator()(otg_graph* g) const { otg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<otg_graph, GraphDeleter>;

std::vector<uint64_t> parse_tuple(const std::string& text, const char* flag) {
  std::vector<uint64_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError(std::string(flag) + ": expected comma-separated naturals, got \"" + text + "\"");
    errno = 0;
    const unsigned long long v = std::strtoull(item.c_str(), nullptr, 10);
    if (errno == ERANGE) throw UsageError(std::string(flag) + ": value out of range");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty tuple");
  return out;
}

std::pair<std::vector<uint64_t>, std::vector<uint64_t>> parse_pair(const std::string& a, const std::string& b) {
  auto x = parse_tuple(a, "--a");
  auto y = parse_tuple(b, "--b");
  if (x.size() != y.size()) throw UsageError("--a and --b must have the same length");
  return {std::move(x), std::move(y)};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

otg_format parse_format(const std::string& f) {
  if (f == "json") return OTG_FORMAT_JSON;
  if (f == "dot") return OTG_FORMAT_DOT;
  return OTG_FORMAT_TABLE;
}

uint64_t default_budget() {
  const char* env = std::getenv("OTG_BUDGET");
  if (!env || !*env) return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || errno == ERANGE || v == 0) throw UsageError("OTG_BUDGET must be a positive integer");
  return v;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}

  void write(const char* text) {
    if (path_.empty() || path_ == "-") {
      std::fputs(text, stdout);
      return;
    }
    std::ofstream out(path_);
    if (!out) throw UsageError("cannot write " + path_);
    out << text;
  }

 private:
  std::string path_;
};

int report(otg_status s, const char* text, Output& out) {
  if (text) out.write(text);
  if (s != OTG_OK) std::cerr << "otg: " << otg_status_name(s) << ": " << otg_last_error() << "\n";
  return exit_code(s);
}

int fail(otg_status s) {
  std::cerr << "otg: " << otg_status_name(s) << ": " << otg_last_error() << "\n";
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift graphs, order-type graphs and their colourings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(otg_version()));
  std::string output;
  app.add_option("-o,--output", output, "Write the result to a file instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  std::string kind, a_text, b_text, format = "json";
  std::size_t r = 0;
  uint64_t n = 0, theta = 0;
  gen->add_option("kind", kind, "sh, lsh, rsh or otg")->required()->check(CLI::IsMember({"sh", "lsh", "rsh", "otg"}));
  gen->add_option("--r,--k", r, "Tuple length");
  gen->add_option("--n", n, "Values range over 0..n-1");
  gen->add_option("--a", a_text, "First tuple of the pattern (otg)");
  gen->add_option("--b", b_text, "Second tuple of the pattern (otg)");
  gen->add_option("--theta", theta, "Values range over 0..theta-1 (otg)");
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "table"}));

  auto* chi = app.add_subcommand("chi", "Exact chromatic number of a JSON graph");
  std::string input = "-";
  std::optional<uint64_t> budget;
  bool progress = false;
  chi->add_option("--input,-i", input, "Graph file, - for stdin");
  chi->add_option("--budget", budget, "Decision-node limit (overrides OTG_BUDGET)")->check(CLI::PositiveNumber);
  chi->add_flag("--progress", progress, "Print bound improvements to stderr");

  auto* dec = app.add_subcommand("decompose", "Decompose a pair into orderly pieces");
  dec->add_option("--a", a_text)->required();
  dec->add_option("--b", b_text)->required();

  auto* emb = app.add_subcommand("embed", "Build and verify the shift-graph embedding of a pair");
  uint64_t big_n = 0;
  emb->add_option("--a", a_text)->required();
  emb->add_option("--b", b_text)->required();
  emb->add_option("--N", big_n, "Shift graph ground set size")->required();

  auto* suite = app.add_subcommand("suite", "Run the property suite on seeded random pairs");
  otg_suite_config cfg = otg_suite_defaults();
  std::string suite_format = "table";
  suite->add_option("--seed", cfg.seed);
  suite->add_option("--count", cfg.count);
  suite->add_option("--threads", cfg.threads);
  suite->add_option("--max-length", cfg.max_length);
  suite->add_option("--max-value", cfg.max_value, "Values are drawn below this");
  suite->add_option("--max-n", cfg.max_n, "Largest N for embedding checks");
  suite->add_option("--format", suite_format)->check(CLI::IsMember({"json", "table"}));
  suite->add_option("--a", a_text, "Replay one pair instead of random cases");
  suite->add_option("--b", b_text);

  auto* ver = app.add_subcommand("verify", "Re-check a serialised artifact");
  std::string graph_path;
  ver->add_option("--input,-i", input, "Artifact file, - for stdin");
  ver->add_option("--graph", graph_path, "Graph the colouring or chi report refers to");
  ver->add_option("--budget", budget)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output out(output);
    OwnedString text;
    if (*gen) {
      GraphPtr g;
      otg_graph* raw = nullptr;
      otg_status s;
      if (kind == "otg") {
        if (a_text.empty() || b_text.empty() || theta == 0) throw UsageError("gen otg needs --a, --b and --theta");
        const auto [a, b] = parse_pair(a_text, b_text);
        s = otg_graph_order_type(a.data(), b.data(), a.size(), theta, &raw);
      } else {
        if (r == 0 || n == 0) throw UsageError("gen " + kind + " needs --r (or --k) and --n");
        s = kind == "sh" ? otg_graph_shift(r, n, &raw)
            : kind == "lsh" ? otg_graph_lshift(r, n, &raw)
                            : otg_graph_rshift(r, n, &raw);
      }
      g.reset(raw);
      if (s != OTG_OK) return fail(s);
      s = otg_graph_export(g.get(), parse_format(format), &text.p);
      return report(s, text.p, out);
    }
    if (*chi) {
      GraphPtr g;
      otg_graph* raw = nullptr;
      const std::string source = read_input(input);
      otg_status s = otg_graph_from_json(source.c_str(), &raw);
      g.reset(raw);
      if (s != OTG_OK) return fail(s);
      const uint64_t limit = budget ? *budget : default_budget();
      otg_progress_fn fn = nullptr;
      if (progress) fn = [](const char* line, void*) { std::cerr << line << "\n"; };
      s = otg_chromatic(g.get(), limit, fn, nullptr, &text.p);
      return report(s, text.p, out);
    }
    if (*dec) {
      const auto [a, b] = parse_pair(a_text, b_text);
      const otg_status s = otg_decompose(a.data(), b.data(), a.size(), &text.p);
      return report(s, text.p, out);
    }
    if (*emb) {
      const auto [a, b] = parse_pair(a_text, b_text);
      const otg_status s = otg_embed(a.data(), b.data(), a.size(), big_n, &text.p);
      return report(s, text.p, out);
    }
    if (*suite) {
      const otg_format f = parse_format(suite_format);
      if (a_text.empty() != b_text.empty()) throw UsageError("replay needs both --a and --b");
      if (!a_text.empty()) {
        const auto [a, b] = parse_pair(a_text, b_text);
        const otg_status s = otg_suite_run_pair(&cfg, a.data(), b.data(), a.size(), f, &text.p);
        return report(s, text.p, out);
      }
      const otg_status s = otg_suite_run(&cfg, f, &text.p);
      return report(s, text.p, out);
    }
    if (*ver) {
      const std::string artifact = read_input(input);
      std::string graph_text;
      if (!graph_path.empty()) graph_text = read_input(graph_path);
      const uint64_t limit = budget ? *budget : default_budget();
      const otg_status s = otg_verify(artifact.c_str(), graph_path.empty() ? nullptr : graph_text.c_str(),
                                      limit, &text.p);
      if (text.p) std::cout << text.p << "\n";
      if (s != OTG_OK && !text.p) return fail(s);
      return exit_code(s);
    }
  } catch (const UsageError& e) {
    std::cerr << "otg: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
