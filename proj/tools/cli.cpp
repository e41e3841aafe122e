#include "cli.hpp"

#include "report_json.hpp"

#include "rankbound/codes/bounds.hpp"
#include "rankbound/codes/embedding.hpp"
#include "rankbound/codes/lemma.hpp"
#include "rankbound/graph/invariants.hpp"
#include "rankbound/graph/rank.hpp"
#include "rankbound/hunt/census.hpp"
#include "rankbound/hunt/enumerate.hpp"
#include "rankbound/hunt/extremal.hpp"
#include "rankbound/hunt/suites.hpp"
#include "rankbound/io/edge_list.hpp"
#include "rankbound/io/graph6.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace rankbound::cli {

namespace {

using exact::QSqrt2;

struct GraphInput {
  std::string graph6;
  std::string edges;
  std::string named;

  bool given() const { return !graph6.empty() || !edges.empty() || !named.empty(); }
};

struct Options {
  std::string format;
  std::string output;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  long seed = 0;
};

struct Result {
  Json payload;
  std::optional<std::string> text;  ///< replaces the generic text rendering
  std::optional<std::string> raw;   ///< printed as-is whatever the format
  int status = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_graph_options(CLI::App* sub, GraphInput& in) {
  sub->add_option("--graph6", in.graph6, "graph6 string");
  sub->add_option("--edges", in.edges, "edge-list file ('-' for stdin)");
  sub->add_option("--named", in.named, "K<n>, P<n>, C<n> or E<n> (edgeless)");
}

graph::Graph named_graph(const std::string& spec) {
  if (spec.size() < 2) throw UsageError("named graph must look like K4, P4, C5 or E3");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(spec.substr(1), &used);
    if (used != spec.size() - 1) throw UsageError("bad named graph '" + spec + "'");
  } catch (const std::logic_error&) {
    throw UsageError("bad named graph '" + spec + "'");
  }
  switch (spec[0]) {
    case 'K': return graph::Graph::complete(n);
    case 'P': return graph::Graph::path(n);
    case 'C': return graph::Graph::cycle(n);
    case 'E': return graph::Graph::edgeless(n);
    default: throw UsageError("unknown named graph family '" + spec.substr(0, 1) + "'");
  }
}

graph::Graph load_graph(const GraphInput& in) {
  const int count = !in.graph6.empty() + !in.edges.empty() + !in.named.empty();
  if (count != 1) throw UsageError("give exactly one of --graph6, --edges, --named");
  if (!in.graph6.empty()) return io::parse_graph6(in.graph6);
  if (!in.named.empty()) return named_graph(in.named);
  if (in.edges == "-") return io::read_edge_list(std::cin);
  std::ifstream file(in.edges);
  if (!file) throw UsageError("cannot open " + in.edges);
  return io::read_edge_list(file);
}

QSqrt2 parse_scalar(const std::string& text, const char* what) {
  try {
    return QSqrt2::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad value for ") + what + ": " + e.what());
  }
}

// --- rendering -------------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void text_lines(const Json& j, const std::string& prefix, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      text_lines(v, key, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << ":\n";
      for (const auto& e : v) {
        out << " ";
        for (auto f = e.begin(); f != e.end(); ++f) out << ' ' << f.key() << '=' << scalar_text(f.value());
        out << '\n';
      }
    } else {
      out << key << ": " << scalar_text(v) << '\n';
    }
  }
}

std::string csv_cell(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void csv_rows(const Json& j, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      const Json& first = v.front();
      bool head = true;
      for (auto f = first.begin(); f != first.end(); ++f) {
        out << (head ? "" : ",") << f.key();
        head = false;
      }
      out << '\n';
      for (const auto& e : v) {
        bool lead = true;
        for (auto f = first.begin(); f != first.end(); ++f) {
          out << (lead ? "" : ",") << (e.contains(f.key()) ? csv_cell(e[f.key()]) : "");
          lead = false;
        }
        out << '\n';
      }
      return;
    }
  }
  out << "key,value\n";
  std::function<void(const Json&, const std::string&)> flat = [&](const Json& o, const std::string& prefix) {
    for (auto it = o.begin(); it != o.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it.value().is_object()) {
        flat(it.value(), key);
      } else {
        out << csv_cell(Json(key)) << ',' << csv_cell(it.value()) << '\n';
      }
    }
  };
  flat(j, "");
}

void emit(const std::string& command, const std::string& format, Result& r, std::ostream& out) {
  if (r.raw) {
    out << *r.raw;
    return;
  }
  if (format == "json") {
    Json root;
    root["schema"] = kSchemaVersion;
    root["command"] = command;
    for (auto it = r.payload.begin(); it != r.payload.end(); ++it) root[it.key()] = it.value();
    out << root.dump(2) << '\n';
  } else if (format == "csv") {
    csv_rows(r.payload, out);
  } else if (r.text) {
    out << *r.text << '\n';
  } else {
    text_lines(r.payload, "", out);
  }
}

// --- commands --------------------------------------------------------------

Result cmd_rank(const graph::Graph& g) {
  Result r;
  r.payload = graph_summary(g);
  r.text = std::to_string(r.payload["rank"].get<std::size_t>());
  return r;
}

Result cmd_reduce(const graph::Graph& g) {
  const graph::Graph h = graph::reduce(g);
  Result r;
  r.payload["input"] = graph_summary(g);
  r.payload["reduced"] = graph_summary(h);
  r.text = io::to_graph6(h);
  return r;
}

Result cmd_tau(const graph::Graph& g) {
  Result r;
  const std::size_t t = graph::tau(g);
  r.payload["graph6"] = io::to_graph6(g);
  r.payload["tau"] = t;
  r.text = std::to_string(t);
  return r;
}

Result cmd_rho(const graph::Graph& g) {
  Result r;
  const std::size_t p = graph::rho(g);
  r.payload["graph6"] = io::to_graph6(g);
  r.payload["rho"] = p;
  r.text = std::to_string(p);
  return r;
}

Result cmd_delta(const graph::Graph& g, std::size_t u, std::size_t v) {
  Result r;
  const auto d = graph::to_vector(graph::delta(g, u, v));
  r.payload["graph6"] = io::to_graph6(g);
  r.payload["u"] = u;
  r.payload["v"] = v;
  r.payload["delta"] = d;
  r.payload["size"] = d.size();
  std::ostringstream s;
  for (std::size_t i = 0; i < d.size(); ++i) s << (i ? " " : "") << d[i];
  r.text = s.str();
  return r;
}

Result cmd_witness(const graph::Graph& g) {
  Result r;
  r.payload["graph6"] = io::to_graph6(g);
  r.payload["witness"] = to_json(graph::duplication_witness(g));
  return r;
}

std::optional<QSqrt2> threshold_from(const std::string& threshold, const std::optional<int>& offset, int n) {
  if (!threshold.empty() && offset) throw UsageError("give at most one of --threshold, --offset");
  if (!threshold.empty()) return parse_scalar(threshold, "--threshold");
  if (offset) return codes::code_threshold(n, *offset);
  return std::nullopt;
}

void set_status_from(Result& r, const codes::BoundReport& b) {
  if (b.holds && !*b.holds) r.status = kVerificationFailed;
}

Result cmd_bounds_graph(const graph::Graph& g) {
  Result r;
  const codes::CodeReport c = codes::graph_to_code(g);
  r.payload["graph6"] = io::to_graph6(g);
  r.payload["code"] = to_json(c);
  if (!c.all_hold()) r.status = kVerificationFailed;
  return r;
}

Result cmd_bounds(int n, const QSqrt2& s, std::optional<QSqrt2> threshold) {
  Result r;
  Json reports = Json::array();
  auto attempt = [&](const char* method, const std::function<codes::BoundReport()>& f) {
    try {
      const codes::BoundReport b = f();
      reports.push_back(to_json(b));
      set_status_from(r, b);
    } catch (const std::invalid_argument& e) {
      reports.push_back({{"n", n}, {"method", method}, {"skipped", e.what()}});
    } catch (const std::domain_error& e) {
      reports.push_back({{"n", n}, {"method", method}, {"skipped", e.what()}});
    }
  };
  const int sign = s.sign();
  if (sign == 0) {
    attempt("rankin_half_pi", [&] { return codes::rankin_bound(n, codes::HalfPi{}, threshold); });
  } else if (sign < 0) {
    attempt("rankin_obtuse", [&] { return codes::rankin_bound(n, codes::Obtuse{}, threshold); });
  } else {
    attempt("rankin_integral",
            [&] { return codes::rankin_bound(n, codes::Acute{codes::make_angle_params(n, s)}, threshold); });
    attempt("closed_form", [&] { return codes::closed_form_bound(n, codes::make_angle_params(n, s), threshold); });
  }
  attempt("levenshtein", [&] { return codes::levenshtein_bound(n, s, threshold); });
  r.payload["n"] = n;
  r.payload["s"] = s.to_string();
  r.payload["reports"] = reports;
  return r;
}

Result single_bound(const codes::BoundReport& b) {
  Result r;
  r.payload = to_json(b);
  set_status_from(r, b);
  return r;
}

Result cmd_code_lemma(int from, int to, int offset, int tail_to, unsigned threads) {
  Result r;
  const auto reports = codes::verify_code_lemma(from, to, offset, threads);
  Json arr = Json::array();
  bool all = true;
  for (const auto& b : reports) {
    arr.push_back(to_json(b));
    all = all && b.holds.value_or(false);
  }
  r.payload["exponent_offset"] = offset;
  r.payload["from"] = from;
  r.payload["to"] = to;
  r.payload["all_hold"] = all;
  r.payload["reports"] = arr;
  if (tail_to > 0) {
    const codes::TailCertificate c = codes::tail_certificate(codes::kClosedFormCrossover, tail_to, offset);
    r.payload["tail_certificate"] = to_json(c);
    all = all && c.valid();
  }
  if (!all) r.status = kVerificationFailed;
  return r;
}

Result cmd_census(std::optional<int> order, const std::string& input, bool reduced, bool list, unsigned threads) {
  Result r;
  if (!input.empty()) {
    if (order) throw UsageError("give at most one of --order, --input");
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
      file.open(input);
      if (!file) throw UsageError("cannot open " + input);
      in = &file;
    }
    const hunt::ConjectureReport rep = hunt::verify_conjecture_stream(*in);
    Json orders = Json::array();
    for (const auto& c : rep.orders) orders.push_back(to_json(c));
    r.payload["orders"] = orders;
    return r;
  }
  if (!order) throw UsageError("census needs --order or --input");
  hunt::CensusBuilder builder;
  std::ostringstream lines;
  hunt::for_each_graph(*order, {reduced, threads}, [&](const hunt::SmallGraph& s) {
    const graph::Graph g = s.to_graph();
    builder.add(g);
    if (list) lines << io::to_graph6(g) << '\n';
  });
  if (list) {
    r.raw = lines.str();
    return r;
  }
  const hunt::ConjectureReport rep = builder.finish();
  r.payload["reduced_only"] = reduced;
  r.payload["census"] = rep.orders.empty() ? Json(nullptr) : to_json(rep.orders.front());
  return r;
}

Result cmd_conjecture(int max_order, const std::string& input, unsigned threads) {
  Result r;
  hunt::ConjectureReport rep;
  if (!input.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
      file.open(input);
      if (!file) throw UsageError("cannot open " + input);
      in = &file;
    }
    rep = hunt::verify_conjecture_stream(*in);
    r.payload["source"] = "graph6 stream";
  } else {
    rep = hunt::verify_conjecture(max_order, threads);
    r.payload["source"] = "generator";
  }
  r.payload["report"] = to_json(rep);
  if (!rep.holds()) r.status = kVerificationFailed;
  return r;
}

Result cmd_extremal(int r_lo, int r_hi) {
  Result r;
  Json arr = Json::array();
  for (int k = r_lo; k <= r_hi; ++k) {
    const graph::Graph g = hunt::construct_extremal(k);
    Json j = graph_summary(g);
    j["r"] = k;
    arr.push_back(j);
  }
  r.payload["reports"] = arr;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rank bounds for reduced graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", opt.output, "write the report to this file");
  app.add_option("--threads", opt.threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "accepted for compatibility; every computation is deterministic");

  GraphInput gin;
  std::size_t du = 0;
  std::size_t dv = 0;
  int n = 0;
  std::string s_text;
  std::string threshold_text;
  std::optional<int> offset;
  std::string angle = "acute";
  int from5 = 47;
  int to5 = 118;
  int tail5 = 0;
  int from8 = 3;
  int to8 = 118;
  int tail8 = 0;
  std::optional<int> order;
  int conj_max_order = 8;
  int lemmas_max_order = 7;
  std::string input;
  bool reduced = false;
  bool list = false;
  int r_value = 0;
  int r_to = 0;
  int r_max = 60;

  std::map<std::string, std::function<Result()>> handlers;
  std::map<std::string, std::string> default_format;
  auto sub = [&](const std::string& name, const std::string& desc, const std::string& fmt) {
    default_format[name] = fmt;
    return app.add_subcommand(name, desc);
  };

  auto* c_rank = sub("rank", "rank of the adjacency matrix", "text");
  add_graph_options(c_rank, gin);
  handlers["rank"] = [&] { return cmd_rank(load_graph(gin)); };

  auto* c_reduce = sub("reduce", "collapse duplicated vertices and drop isolated ones", "text");
  add_graph_options(c_reduce, gin);
  handlers["reduce"] = [&] { return cmd_reduce(load_graph(gin)); };

  auto* c_tau = sub("tau", "min |delta(u,v)| over non-adjacent pairs", "text");
  add_graph_options(c_tau, gin);
  handlers["tau"] = [&] { return cmd_tau(load_graph(gin)); };

  auto* c_rho = sub("rho", "fewest vertices whose removal lowers the rank", "text");
  add_graph_options(c_rho, gin);
  handlers["rho"] = [&] { return cmd_rho(load_graph(gin)); };

  auto* c_delta = sub("delta", "symmetric difference of two neighbourhoods", "text");
  add_graph_options(c_delta, gin);
  c_delta->add_option("--u", du)->required();
  c_delta->add_option("--v", dv)->required();
  handlers["delta"] = [&] { return cmd_delta(load_graph(gin), du, dv); };

  auto* c_witness = sub("witness", "duplication witness H, T1, T2 of a reduced graph", "json");
  add_graph_options(c_witness, gin);
  handlers["witness"] = [&] { return cmd_witness(load_graph(gin)); };

  auto* c_bounds = sub("bounds", "all code bounds at (n, s), or the +-1 code of a graph", "json");
  add_graph_options(c_bounds, gin);
  c_bounds->add_option("--n", n, "dimension");
  c_bounds->add_option("--s", s_text, "cos(phi), e.g. s0, 0, -1/2, 1/3 + 1/5*sqrt2");
  c_bounds->add_option("--threshold", threshold_text, "compare against this value");
  c_bounds->add_option("--offset", offset, "compare against 5*2^((n+offset)/2) - 2");
  handlers["bounds"] = [&] {
    if (gin.given()) return cmd_bounds_graph(load_graph(gin));
    if (n == 0 || s_text.empty()) throw UsageError("bounds needs a graph, or --n and --s");
    return cmd_bounds(n, parse_scalar(s_text, "--s"), threshold_from(threshold_text, offset, n));
  };

  auto* c_lev = sub("lev", "Levenshtein bound at (n, s)", "json");
  c_lev->add_option("--n", n)->required();
  c_lev->add_option("--s", s_text, "cos(phi)")->required();
  c_lev->add_option("--threshold", threshold_text);
  c_lev->add_option("--offset", offset);
  handlers["lev"] = [&] {
    return single_bound(codes::levenshtein_bound(n, parse_scalar(s_text, "--s"), threshold_from(threshold_text, offset, n)));
  };

  auto* c_rankin = sub("rankin", "Rankin bound", "json");
  c_rankin->add_option("--n", n)->required();
  c_rankin->add_option("--angle", angle, "half-pi, obtuse or acute")->check(CLI::IsMember({"half-pi", "obtuse", "acute"}));
  c_rankin->add_option("--s", s_text, "cos(phi), acute case only");
  c_rankin->add_option("--threshold", threshold_text);
  c_rankin->add_option("--offset", offset);
  handlers["rankin"] = [&] {
    const auto thr = threshold_from(threshold_text, offset, n);
    if (angle == "half-pi") return single_bound(codes::rankin_bound(n, codes::HalfPi{}, thr));
    if (angle == "obtuse") return single_bound(codes::rankin_bound(n, codes::Obtuse{}, thr));
    if (s_text.empty()) throw UsageError("the acute case needs --s");
    return single_bound(
        codes::rankin_bound(n, codes::Acute{codes::make_angle_params(n, parse_scalar(s_text, "--s"))}, thr));
  };

  auto* c_l5 = sub("lemma5", "code bound below 5*2^((n-4)/2) - 2 at s0", "json");
  c_l5->add_option("--from", from5)->capture_default_str();
  c_l5->add_option("--to", to5)->capture_default_str();
  c_l5->add_option("--tail-to", tail5, "also certify the closed-form tail up to this n")->capture_default_str();
  handlers["lemma5"] = [&] { return cmd_code_lemma(from5, to5, -4, tail5, opt.threads); };

  auto* c_l8 = sub("lemma8", "code bound below 5*2^((n+2)/2) - 2 at s0", "json");
  c_l8->add_option("--from", from8)->capture_default_str();
  c_l8->add_option("--to", to8)->capture_default_str();
  c_l8->add_option("--tail-to", tail8, "also certify the closed-form tail up to this n")->capture_default_str();
  handlers["lemma8"] = [&] { return cmd_code_lemma(from8, to8, 2, tail8, opt.threads); };

  auto* c_census = sub("census", "isomorph-free census of one order", "json");
  c_census->add_option("--order", order);
  c_census->add_option("--input", input, "graph6 file instead of the generator ('-' for stdin)");
  c_census->add_flag("--reduced", reduced, "reduced graphs only");
  c_census->add_flag("--list", list, "print the graphs as graph6 lines");
  handlers["census"] = [&] { return cmd_census(order, input, reduced, list, opt.threads); };

  auto* c_conj = sub("conjecture", "check order <= m(rank) over all reduced graphs", "json");
  c_conj->add_option("--max-order", conj_max_order)->capture_default_str();
  c_conj->add_option("--input", input, "graph6 file instead of the generator ('-' for stdin)");
  handlers["conjecture"] = [&] { return cmd_conjecture(conj_max_order, input, opt.threads); };

  auto* c_ext = sub("extremal", "reduced graphs of rank r and order m(r)", "json");
  c_ext->add_option("--r", r_value)->required();
  c_ext->add_option("--to", r_to, "build every rank from --r to this one");
  handlers["extremal"] = [&] { return cmd_extremal(r_value, std::max(r_value, r_to)); };

  auto* c_mineq = sub("mineq", "recursions and inequalities for m and m'", "json");
  c_mineq->add_option("--r-max", r_max)->capture_default_str();
  handlers["mineq"] = [&] {
    Result r;
    const auto rep = hunt::verify_m_inequalities(r_max);
    r.payload = to_json(rep);
    if (!rep.all_hold()) r.status = kVerificationFailed;
    return r;
  };

  auto* c_lemmas = sub("lemmas", "per-graph lemma checks over all small reduced graphs", "json");
  c_lemmas->add_option("--max-order", lemmas_max_order)->capture_default_str();
  handlers["lemmas"] = [&] {
    Result r;
    const auto rep = hunt::lemma_suite(lemmas_max_order, opt.threads);
    r.payload = to_json(rep);
    if (!rep.all_pass()) r.status = kVerificationFailed;
    return r;
  };

  std::vector<std::string> argv_store{"rankbound"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::string format = opt.format.empty() ? default_format[command] : opt.format;
  try {
    Result result = handlers.at(command)();
    if (!opt.output.empty()) {
      std::ofstream file(opt.output);
      if (!file) throw UsageError("cannot write " + opt.output);
      emit(command, format, result, file);
    } else {
      emit(command, format, result, out);
    }
    return result.status;
  } catch (const io::ParseError& e) {
    err << "error: malformed graph input: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const hunt::ExtremalConstructionError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::domain_error& e) {
    err << "refused: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace rankbound::cli
