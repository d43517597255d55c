#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "freevertex/colorer.hpp"
#include "freevertex/generators.hpp"
#include "freevertex/io.hpp"
#include "freevertex/nae_solver.hpp"
#include "freevertex/oracle.hpp"
#include "freevertex/structure.hpp"

namespace freevertex::cli {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::GenerationFailed: return kGenerationFailed;
    case ErrorKind::PreconditionViolated: return kPrecondition;
    case ErrorKind::NotTwoColorable: return kNotTwoColorable;
    case ErrorKind::InternalInvariant: return kInternal;
    case ErrorKind::TooLarge: return kTooLarge;
    case ErrorKind::NonUniformEdge:
    case ErrorKind::DanglingVariable:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ParseError:
    case ErrorKind::InvalidColoring:
    case ErrorKind::InvalidParams: return kUsage;
  }
  return kInternal;
}

namespace {

using json = nlohmann::json;
using Input = std::variant<Hypergraph, NaeInstance>;

const std::vector<std::string> kGenKinds = {"fano",          "fano-complement", "complete",   "prop-family",
                                            "random-regular", "random-lemma",   "random-nae"};

std::size_t default_limit() {
  const char* env = std::getenv("FREEVERTEX_LIMIT");
  if (env == nullptr || *env == '\0') return oracle::kDefaultExhaustiveLimit;
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0') fail(ErrorKind::InvalidParams, std::string("FREEVERTEX_LIMIT is not a number: ") + env);
  return value;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// "hg" or "cnf": the explicit flag, else the extension, else the first
/// meaningful line of the file.
std::string detect_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (ends_with(path, ".hg")) return "hg";
  if (ends_with(path, ".cnf")) return "cnf";
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const char c = line[first];
    if (c == '#') continue;
    if (c == 'h') return "hg";
    if (c == 'p' || c == 'c' || c == '%') return "cnf";
    break;
  }
  fail(ErrorKind::ParseError, "cannot tell the format of " + path + "; pass --format hg|cnf");
}

Input load(const std::string& path, const std::string& format_flag) {
  if (detect_format(path, format_flag) == "hg") return io::read_hypergraph_file(path);
  return io::read_dimacs_file(path);
}

NaeInstance as_instance(const Input& in) {
  if (const auto* h = std::get_if<Hypergraph>(&in)) return instance_from_hypergraph(*h);
  return std::get<NaeInstance>(in);
}

Hypergraph as_hypergraph(const Input& in) {
  if (const auto* h = std::get_if<Hypergraph>(&in)) return *h;
  const auto& i = std::get<NaeInstance>(in);
  for (const Clause& c : i.clauses()) {
    for (const Literal& l : c.literals()) {
      if (l.negated) fail(ErrorKind::InvalidArgument, "instance has negated literals and is not a hypergraph");
    }
  }
  return hypergraph_from_instance(i);
}

void write_to(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorKind::InvalidArgument, "failed writing " + path);
}

std::string text_of(const Input& in) {
  std::ostringstream s;
  if (const auto* h = std::get_if<Hypergraph>(&in)) {
    io::write_hypergraph(s, *h);
  } else {
    io::write_dimacs(s, std::get<NaeInstance>(in));
  }
  return s.str();
}

json counts_of(const std::string& kind, const Input& in) {
  json j{{"kind", kind}};
  if (const auto* h = std::get_if<Hypergraph>(&in)) {
    j["vertices"] = h->vertex_count();
    j["edges"] = h->edge_count();
  } else {
    const auto& i = std::get<NaeInstance>(in);
    j["variables"] = i.var_count();
    j["clauses"] = i.clause_count();
  }
  return j;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenParams {
  std::optional<std::size_t> n, k, s, m;
  gen::Seed seed = 0;
};

std::size_t need(const std::optional<std::size_t>& v, const std::string& kind, const char* name) {
  if (!v) fail(ErrorKind::InvalidParams, kind + " needs --" + name);
  return *v;
}

Input make_object(const std::string& kind, const GenParams& p) {
  if (kind == "fano") return gen::fano();
  if (kind == "fano-complement") return gen::complement(gen::fano());
  if (kind == "complete") return gen::complete_uniform(need(p.n, kind, "n"), need(p.k, kind, "k"));
  if (kind == "prop-family") return gen::proposition_family(need(p.s, kind, "s"));
  if (kind == "random-regular") return gen::random_regular_uniform(need(p.n, kind, "n"), p.k.value_or(4), p.seed);
  if (kind == "random-lemma") return gen::random_lemma_instance(need(p.n, kind, "n"), p.seed);
  if (kind == "random-nae") {
    const std::size_t n = need(p.n, kind, "n");
    return gen::random_nae_instance(n, p.m.value_or(n == 0 ? 0 : n - 1), p.seed);
  }
  fail(ErrorKind::InvalidParams, "unknown generator " + kind);
}

Input convert(const Input& in, const std::string& format) {
  if (format.empty()) return in;
  if (format == "hg") return as_hypergraph(in);
  return as_instance(in);
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveConfig {
  std::string mode;
  std::string path;
  std::string format;
  std::string out;
  bool trace = false;
  bool fallback = false;
  std::size_t limit = 0;
};

void print_walk(std::ostream& err, const color::WalkReport& report) {
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const auto& r = report.components[c];
    err << "COMPONENT " << c << " VERTICES " << r.vertices.size() << (r.early_exit ? " EARLY-EXIT" : " WALK") << '\n';
    for (std::size_t t = 0; t < r.walk.size(); ++t) {
      const auto& s = r.walk[t];
      err << "  WALK " << t << " SIDE " << s.side + 1 << " COMP " << s.component << " FREE " << s.free_vertex
          << " REMOVED " << (s.removed_edge ? std::to_string(*s.removed_edge) : "-") << '\n';
    }
    if (!r.early_exit) err << "  CYCLE " << r.cycle_start << ' ' << r.cycle_end << '\n';
    for (const auto& a : r.absorptions) {
      err << "  ABSORB VIA " << a.via << " SIDE " << a.side + 1 << " COMP " << a.component << " FREE " << a.new_free
          << '\n';
    }
  }
}

void emit(const SolveConfig& cfg, const std::string& json_text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << json_text << '\n';
  } else {
    write_to(cfg.out, json_text + "\n");
  }
}

int report_unverified(const oracle::Verdict& v, std::ostream& err) {
  err << "certificate failed verification\n";
  for (const auto& r : v.reasons) err << "  " << r << '\n';
  return kInternal;
}

int solve_nae(const SolveConfig& cfg, const NaeInstance& i, std::ostream& out, std::ostream& err) {
  nae::ReductionTrace trace;
  NaeCertificate cert;
  bool fallback = false;
  try {
    cert = nae::solve_free(i, &trace);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalInvariant) throw;
    err << e.what() << '\n' << trace.dump();
    if (!cfg.fallback) return kInternal;
    if (i.var_count() > cfg.limit) {
      err << "fallback unavailable: " << i.var_count() << " variables exceed the limit " << cfg.limit << '\n';
      return kInternal;
    }
    const auto report = oracle::free_variables(i, cfg.limit);
    if (report.free.empty()) {
      err << "oracle finds no free variable either\n";
      return kInternal;
    }
    err << "discrepancy: solver failed, oracle supplies free variable " << report.free.front() << '\n';
    cert = {report.witnesses.front(), report.free.front()};
    fallback = true;
  }
  if (cfg.trace && !fallback) err << trace.dump();
  const auto verdict = oracle::verify_nae_certificate(i, cert);
  if (!verdict.ok) return report_unverified(verdict, err);
  emit(cfg, io::to_json(cert, fallback), out);
  return kOk;
}

int solve_free_vertex(const SolveConfig& cfg, const Hypergraph& h, std::ostream& out, std::ostream& err) {
  color::WalkReport report;
  ColoringCertificate cert;
  bool fallback = false;
  try {
    cert = color::solve_free_vertex(h, &report);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InternalInvariant) throw;
    err << e.what() << '\n';
    print_walk(err, report);
    if (!cfg.fallback) return kInternal;
    if (h.vertex_count() > cfg.limit) {
      err << "fallback unavailable: " << h.vertex_count() << " vertices exceed the limit " << cfg.limit << '\n';
      return kInternal;
    }
    const auto exact = oracle::free_vertices(h, cfg.limit);
    if (exact.free.empty()) {
      err << "oracle finds no free vertex either\n";
      return kInternal;
    }
    err << "discrepancy: solver failed, oracle supplies free vertex " << exact.free.front() << '\n';
    cert = {exact.witnesses.front(), exact.free.front()};
    fallback = true;
  }
  if (cfg.trace && !fallback) print_walk(err, report);
  const auto verdict = oracle::verify_coloring_certificate(h, cert);
  if (!verdict.ok) return report_unverified(verdict, err);
  emit(cfg, io::to_json(cert, fallback), out);
  return kOk;
}

int solve_two_color(const SolveConfig& cfg, const Hypergraph& h, std::ostream& out, std::ostream& err) {
  const ColoringCertificate cert{color::two_color(h), std::nullopt};
  const auto verdict = oracle::verify_coloring_certificate(h, cert);
  if (!verdict.ok) return report_unverified(verdict, err);
  emit(cfg, io::to_json(cert), out);
  return kOk;
}

int cmd_solve(const SolveConfig& cfg, std::ostream& out, std::ostream& err) {
  const Input in = load(cfg.path, cfg.format);
  if (cfg.mode == "nae-free") return solve_nae(cfg, as_instance(in), out, err);
  if (cfg.mode == "free-vertex") return solve_free_vertex(cfg, as_hypergraph(in), out, err);
  return solve_two_color(cfg, as_hypergraph(in), out, err);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& instance_path, const std::string& cert_path, const std::string& format,
               std::ostream& out) {
  const Input in = load(instance_path, format);
  const auto doc = io::read_certificate_file(cert_path);
  oracle::Verdict verdict;
  if (const auto* c = std::get_if<NaeCertificate>(&doc.certificate)) {
    const NaeInstance i = as_instance(in);
    if (c->assignment.size() != i.var_count()) {
      fail(ErrorKind::InvalidArgument, "certificate has " + std::to_string(c->assignment.size()) +
                                           " entries, instance has " + std::to_string(i.var_count()) + " variables");
    }
    verdict = oracle::verify_nae_certificate(i, *c);
  } else {
    const auto& col = std::get<ColoringCertificate>(doc.certificate);
    const Hypergraph h = as_hypergraph(in);
    if (col.coloring.size() != h.vertex_count()) {
      fail(ErrorKind::InvalidArgument, "certificate has " + std::to_string(col.coloring.size()) +
                                           " entries, hypergraph has " + std::to_string(h.vertex_count()) +
                                           " vertices");
    }
    verdict = oracle::verify_coloring_certificate(h, col);
  }
  out << json{{"verified", verdict.ok}, {"reasons", verdict.reasons}}.dump() << '\n';
  return verdict.ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int cmd_oracle(const std::string& path, const std::string& query, std::optional<std::size_t> size,
               const std::string& coloring_path, const std::string& format, std::size_t limit, std::ostream& out) {
  const Input in = load(path, format);
  json j{{"query", query}};
  if (query == "sat") {
    if (const auto* h = std::get_if<Hypergraph>(&in)) {
      j["satisfiable"] = oracle::is_two_colorable(*h, limit);
    } else {
      j["satisfiable"] = oracle::is_nae_satisfiable(std::get<NaeInstance>(in), limit);
    }
  } else if (query == "free-vars") {
    if (const auto* h = std::get_if<Hypergraph>(&in)) {
      const auto r = oracle::free_vertices(*h, limit);
      j["satisfiable"] = r.colorable;
      j["free"] = r.free;
    } else {
      const auto r = oracle::free_variables(std::get<NaeInstance>(in), limit);
      j["satisfiable"] = r.satisfiable;
      j["free"] = r.free;
    }
  } else if (query == "free-sets") {
    if (!size) fail(ErrorKind::InvalidParams, "free-sets needs --size");
    j["size"] = *size;
    j["sets"] = oracle::free_sets(as_hypergraph(in), *size, limit);
  } else {
    if (coloring_path.empty()) fail(ErrorKind::InvalidParams, "fixed needs --coloring");
    const auto doc = io::read_certificate_file(coloring_path);
    const auto* c = std::get_if<ColoringCertificate>(&doc.certificate);
    if (c == nullptr) fail(ErrorKind::InvalidArgument, "fixed needs a coloring certificate");
    j["fixed"] = oracle::fixed_vertices(as_hypergraph(in), c->coloring);
  }
  out << j.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchJob {
  std::string generator;
  std::string mode;
  GenParams params;
  std::string params_text;
};

struct BenchRow {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double solve_ms = 0;
  std::size_t depth = 0;
  std::size_t walk = 0;
  std::size_t absorptions = 0;
  std::string cases;
  bool verified = false;
  std::optional<ErrorKind> error;
};

std::string default_mode(const std::string& generator) {
  if (generator == "prop-family" || generator == "random-nae") return "nae-free";
  if (generator == "random-lemma") return "lemma";
  if (generator == "fano") return "two-color";
  return "free-vertex";
}

std::pair<std::size_t, std::size_t> range_of(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return {v.get<std::size_t>(), v.get<std::size_t>()};
  if (v.is_array() && v.size() == 2 && v[0].is_number_unsigned() && v[1].is_number_unsigned() &&
      v[0].get<std::size_t>() <= v[1].get<std::size_t>()) {
    return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
  }
  fail(ErrorKind::InvalidParams, "corpus field '" + key + "' must be a number or [lo, hi]");
}

std::vector<BenchJob> expand_corpus(const json& corpus) {
  if (!corpus.is_array()) fail(ErrorKind::InvalidParams, "corpus must be a JSON array of entries");
  std::vector<BenchJob> jobs;
  for (const auto& entry : corpus) {
    if (!entry.is_object() || !entry.contains("gen") || !entry["gen"].is_string()) {
      fail(ErrorKind::InvalidParams, "corpus entry needs a \"gen\" string");
    }
    const std::string generator = entry["gen"].get<std::string>();
    if (std::find(kGenKinds.begin(), kGenKinds.end(), generator) == kGenKinds.end()) {
      fail(ErrorKind::InvalidParams, "unknown generator " + generator);
    }
    std::string mode = default_mode(generator);
    std::pair<std::size_t, std::size_t> seeds{0, 0};
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> ranges;
    for (const auto& [key, value] : entry.items()) {
      if (key == "gen") continue;
      if (key == "mode") {
        if (!value.is_string()) fail(ErrorKind::InvalidParams, "corpus field 'mode' must be a string");
        mode = value.get<std::string>();
        if (mode != "nae-free" && mode != "free-vertex" && mode != "two-color" && mode != "lemma") {
          fail(ErrorKind::InvalidParams, "unknown mode " + mode);
        }
      } else if (key == "seeds") {
        seeds = range_of(value, key);
      } else if (key == "n" || key == "k" || key == "s" || key == "m") {
        ranges.emplace_back(key, range_of(value, key));
      } else {
        fail(ErrorKind::InvalidParams, "unknown corpus field '" + key + "'");
      }
    }
    // Cartesian product of the parameter ranges, then seeds.
    std::vector<std::map<std::string, std::size_t>> combos{{}};
    for (const auto& [key, r] : ranges) {
      std::vector<std::map<std::string, std::size_t>> next;
      for (const auto& base : combos) {
        for (std::size_t v = r.first; v <= r.second; ++v) {
          auto c = base;
          c[key] = v;
          next.push_back(std::move(c));
        }
      }
      combos = std::move(next);
    }
    for (const auto& combo : combos) {
      for (std::size_t seed = seeds.first; seed <= seeds.second; ++seed) {
        BenchJob job{generator, mode, {}, {}};
        std::string text;
        for (const auto& [key, v] : combo) {
          (key == "n" ? job.params.n : key == "k" ? job.params.k : key == "s" ? job.params.s : job.params.m) = v;
          if (!text.empty()) text += ';';
          text += key + '=' + std::to_string(v);
        }
        job.params.seed = seed;
        job.params_text = text.empty() ? "-" : text;
        jobs.push_back(std::move(job));
      }
    }
  }
  return jobs;
}

std::string histogram_text(const nae::ReductionTrace& trace) {
  std::map<std::string, std::size_t> hist;
  for (const auto& s : trace.steps) ++hist[std::string(nae::to_string(s.label))];
  std::string out;
  for (const auto& [label, count] : hist) {
    if (!out.empty()) out += ';';
    out += label + ':' + std::to_string(count);
  }
  return out.empty() ? "-" : out;
}

BenchRow run_job(const BenchJob& job) {
  BenchRow row;
  Input in;
  try {
    in = make_object(job.generator, job.params);
  } catch (const Error& e) {
    row.error = e.kind();
    row.cases = "error:" + std::string(to_string(e.kind()));
    return row;
  }
  using Clock = std::chrono::steady_clock;
  try {
    if (job.mode == "nae-free" || job.mode == "lemma") {
      const NaeInstance i = as_instance(in);
      row.vertices = i.var_count();
      row.edges = i.clause_count();
      nae::ReductionTrace trace;
      const auto start = Clock::now();
      if (job.mode == "nae-free") {
        const auto cert = nae::solve_free(i, &trace);
        row.solve_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        row.verified = oracle::verify_nae_certificate(i, cert).ok && cert.free_var.has_value();
      } else {
        const Hypergraph h = as_hypergraph(in);
        const auto two = color::lemma_two_free(h);
        row.solve_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        nae::solve_free(i, &trace);
        row.verified = oracle::verify_coloring_certificate(h, two.primary).ok &&
                       oracle::verify_coloring_certificate(h, two.alternate).ok &&
                       two.alternate_free != *two.primary.free_vertex;
      }
      row.depth = trace.max_depth();
      row.cases = histogram_text(trace);
    } else {
      const Hypergraph h = as_hypergraph(in);
      row.vertices = h.vertex_count();
      row.edges = h.edge_count();
      const auto start = Clock::now();
      if (job.mode == "free-vertex") {
        color::WalkReport report;
        const auto cert = color::solve_free_vertex(h, &report);
        row.solve_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        row.verified = oracle::verify_coloring_certificate(h, cert).ok && cert.free_vertex.has_value();
        std::size_t early = 0;
        for (const auto& c : report.components) {
          early += c.early_exit ? 1 : 0;
          row.walk += c.walk.size();
          row.absorptions += c.absorptions.size();
        }
        row.cases = "early-exit:" + std::to_string(early) + ";walk:" + std::to_string(report.components.size() - early);
      } else {
        const ColoringCertificate cert{color::two_color(h), std::nullopt};
        row.solve_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        row.verified = oracle::verify_coloring_certificate(h, cert).ok;
        row.cases = "-";
      }
    }
  } catch (const Error& e) {
    row.verified = false;
    row.cases = "error:" + std::string(to_string(e.kind()));
  }
  return row;
}

int cmd_bench(const std::string& corpus_path, std::size_t jobs_flag, bool timing, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(corpus_path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + corpus_path);
  json corpus;
  try {
    corpus = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("corpus: ") + e.what());
  }
  const auto jobs = expand_corpus(corpus);

  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) rows[k] = run_job(jobs[k]);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs_flag, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "index,generator,params,seed,vertices,edges,mode,solve_ms,depth,walk_steps,absorptions,cases,verified\n";
  std::size_t verified = 0;
  double total_ms = 0;
  std::optional<ErrorKind> gen_error;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto& j = jobs[k];
    const auto& r = rows[k];
    verified += r.verified ? 1 : 0;
    total_ms += r.solve_ms;
    if (r.error && !gen_error) gen_error = r.error;
    csv << k << ',' << j.generator << ',' << j.params_text << ',' << j.params.seed << ',' << r.vertices << ','
        << r.edges << ',' << j.mode << ',' << std::fixed << std::setprecision(3) << (timing ? r.solve_ms : 0.0) << ','
        << r.depth << ',' << r.walk << ',' << r.absorptions << ',' << r.cases << ','
        << (r.verified ? "true" : "false") << '\n';
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_to(out_path, csv.str());
  }
  err << "rows=" << jobs.size() << " verified=" << verified << " failed=" << jobs.size() - verified
      << " total_solve_ms=" << std::fixed << std::setprecision(3) << (timing ? total_ms : 0.0) << '\n';
  if (gen_error) return exit_code(*gen_error);
  return verified == jobs.size() ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free vertices of 4-regular 4-uniform hypergraphs and free variables of NAE-3-SAT instances",
               "freevertex"};
  app.require_subcommand(1);
  std::optional<std::size_t> limit_flag;
  std::string format;

  auto* gen_cmd = app.add_subcommand("gen", "Write a named or random object");
  std::string kind;
  GenParams params;
  std::string gen_out;
  gen_cmd->add_option("kind", kind, "Object kind")->required()->check(CLI::IsMember(kGenKinds));
  gen_cmd->add_option("--n", params.n, "Vertices / variables");
  gen_cmd->add_option("--k", params.k, "Uniformity (complete, random-regular)");
  gen_cmd->add_option("--s", params.s, "Family index (prop-family)");
  gen_cmd->add_option("--m", params.m, "Clauses (random-nae, default n-1)");
  gen_cmd->add_option("--seed", params.seed, "Seed for random kinds");
  gen_cmd->add_option("--out", gen_out, "Output path (stdout when absent)");
  gen_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"hg", "cnf"}));

  auto* solve_cmd = app.add_subcommand("solve", "Produce and verify a certificate");
  SolveConfig solve;
  solve_cmd->add_option("--mode", solve.mode, "What to solve")
      ->required()
      ->check(CLI::IsMember({"nae-free", "free-vertex", "two-color"}));
  solve_cmd->add_option("path", solve.path, "Input file (.hg or .cnf)")->required();
  solve_cmd->add_option("--out", solve.out, "Certificate path (stdout when absent)");
  solve_cmd->add_flag("--trace", solve.trace, "Print the reduction trace or walk to stderr");
  solve_cmd->add_flag("--fallback-oracle", solve.fallback, "Fall back to the exhaustive oracle on internal failure");
  solve_cmd->add_option("--limit", limit_flag, "Exhaustive limit for the fallback");
  solve_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"hg", "cnf"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
  std::string verify_instance;
  std::string verify_cert;
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("certificate", verify_cert, "Certificate JSON")->required();
  verify_cmd->add_option("--format", format, "Instance format")->check(CLI::IsMember({"hg", "cnf"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact answers by exhaustive enumeration");
  std::string oracle_path;
  std::string query;
  std::optional<std::size_t> set_size;
  std::string coloring_path;
  oracle_cmd->add_option("path", oracle_path, "Input file")->required();
  oracle_cmd->add_option("query", query, "Query")->required()->check(
      CLI::IsMember({"sat", "free-vars", "free-sets", "fixed"}));
  oracle_cmd->add_option("--size", set_size, "Set size for free-sets");
  oracle_cmd->add_option("--coloring", coloring_path, "Coloring certificate for fixed");
  oracle_cmd->add_option("--limit", limit_flag, "Exhaustive limit");
  oracle_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"hg", "cnf"}));

  auto* bench_cmd = app.add_subcommand("bench", "Run a generated corpus and print CSV rows");
  std::string corpus_path;
  std::size_t jobs = 1;
  bool no_timing = false;
  std::string bench_out;
  bench_cmd->add_option("corpus", corpus_path, "Corpus JSON")->required();
  bench_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", no_timing, "Print zero timings (for byte-identical output)");
  bench_cmd->add_option("--out", bench_out, "CSV path (stdout when absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::size_t limit = limit_flag ? *limit_flag : default_limit();
    if (gen_cmd->parsed()) {
      const Input object = convert(make_object(kind, params), format);
      const std::string text = text_of(object);
      const std::string counts = counts_of(kind, object).dump();
      if (gen_out.empty()) {
        out << text;
        err << counts << '\n';
      } else {
        write_to(gen_out, text);
        out << counts << '\n';
      }
      return kOk;
    }
    if (solve_cmd->parsed()) {
      solve.format = format;
      solve.limit = limit;
      return cmd_solve(solve, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_instance, verify_cert, format, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_path, query, set_size, coloring_path, format, limit, out);
    return cmd_bench(corpus_path, jobs, !no_timing, bench_out, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.kind());
  }
}

}  // namespace freevertex::cli
