#include "report_json.hpp"

#include "rankbound/graph/mbound.hpp"
#include "rankbound/graph/rank.hpp"
#include "rankbound/io/graph6.hpp"

namespace rankbound::cli {

namespace {

Json vertices(const std::vector<graph::Vertex>& vs) {
  Json a = Json::array();
  for (auto v : vs) a.push_back(v);
  return a;
}

Json rank_map(const std::map<std::size_t, std::size_t>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

}  // namespace

Json exact_json(const exact::QSqrt2& x) { return x.to_string(); }

Json graph_summary(const graph::Graph& g) {
  const std::size_t r = graph::rank(g);
  Json j;
  j["graph6"] = io::to_graph6(g);
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  j["rank"] = r;
  j["reduced"] = graph::is_reduced(g);
  if (r >= 2 && r <= static_cast<std::size_t>(graph::kMaxBoundRank)) {
    j["m_of_rank"] = graph::m_of(static_cast<int>(r));
    j["m_prime_of_rank"] = graph::m_prime_of(static_cast<int>(r));
  } else {
    j["m_of_rank"] = nullptr;
    j["m_prime_of_rank"] = nullptr;
  }
  return j;
}

Json to_json(const codes::BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["method"] = std::string(codes::to_string(r.method));
  j["value"] = exact_json(r.value);
  j["value_decimal"] = r.value.to_decimal_upper();
  j["value_exact"] = r.value_exact;
  if (r.threshold) {
    j["threshold"] = exact_json(*r.threshold);
    j["threshold_decimal"] = r.threshold->to_decimal_upper();
    j["holds"] = *r.holds;
  } else {
    j["threshold"] = nullptr;
    j["threshold_decimal"] = nullptr;
    j["holds"] = nullptr;
  }
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  j["branch"] = r.branch ? Json(std::string(exact::to_string(*r.branch))) : Json(nullptr);
  return j;
}

Json to_json(const codes::CodeReport& r) {
  Json j;
  j["n"] = r.n;
  j["rank"] = r.rank;
  j["sign_rank"] = r.sign_rank;
  j["rho"] = r.rho;
  j["scale"] = "1/sqrt(" + std::to_string(r.n) + ")";
  j["signs"] = r.signs;
  j["max_inner_product"] = exact::to_string(r.max_inner_product);
  j["max_pair"] = {r.arg_u, r.arg_v};
  j["rho_bound"] = exact::to_string(r.rho_bound);
  j["bound_holds"] = r.bound_holds;
  j["sign_rank_ok"] = r.sign_rank_ok;
  j["half_applicable"] = r.half_applicable;
  j["half_holds"] = r.half_holds;
  j["s0_applicable"] = r.s0_applicable;
  j["s0_holds"] = r.s0_holds;
  return j;
}

Json to_json(const codes::TailCertificate& c) {
  Json j;
  j["start"] = c.start;
  j["window_end"] = c.window_end;
  j["exponent_offset"] = c.exponent_offset;
  j["start_holds"] = c.start_holds;
  j["ratio_bound_at_start"] = c.ratio_bound_at_start;
  j["ratio_decreasing"] = c.ratio_decreasing;
  j["threshold_ratio_ok"] = c.threshold_ratio_ok;
  j["window_checked"] = c.window_checked;
  j["first_window_failure"] = c.first_window_failure ? Json(*c.first_window_failure) : Json(nullptr);
  j["valid"] = c.valid();
  return j;
}

Json to_json(const graph::DuplicationWitness& w) {
  Json j;
  j["u"] = w.u;
  j["v"] = w.v;
  j["removed"] = vertices(w.removed);
  Json classes = Json::array();
  for (const auto& c : w.classes) classes.push_back(vertices(c));
  j["classes"] = classes;
  j["isolated"] = w.isolated ? Json(*w.isolated) : Json(nullptr);
  j["isolated_count"] = w.isolated_count;
  j["split_found"] = w.split_found;
  j["t1"] = vertices(w.t1);
  j["t2"] = vertices(w.t2);
  j["rank_g"] = w.rank_g;
  j["rank_h"] = w.rank_h;
  return j;
}

Json to_json(const hunt::CensusReport& c) {
  Json j;
  j["order"] = c.order;
  j["total_graphs"] = c.total_graphs;
  j["reduced_graphs"] = c.reduced_graphs;
  j["rank_counts"] = rank_map(c.rank_counts);
  j["per_rank_max_order"] = rank_map(c.per_rank_max_order);
  j["violations"] = c.violations;
  return j;
}

Json to_json(const hunt::ConjectureReport& c) {
  Json j;
  j["max_order"] = c.max_order;
  j["holds"] = c.holds();
  j["violation_count"] = c.violation_count;
  j["per_rank_max_order"] = rank_map(c.per_rank_max_order);
  j["covered_ranks"] = c.covered_ranks;
  Json orders = Json::array();
  for (const auto& o : c.orders) orders.push_back(to_json(o));
  j["orders"] = orders;
  return j;
}

Json to_json(const hunt::MInequalityReport& r) {
  Json j;
  j["r_max"] = r.r_max;
  j["all_hold"] = r.all_hold();
  j["recursion_checks"] = r.recursion_checks;
  j["sum_checks"] = r.sum_checks;
  j["shifted_sum_checks"] = r.shifted_sum_checks;
  Json f = Json::array();
  for (const auto& x : r.failures) f.push_back({{"check", x.check}, {"r", x.r}, {"k", x.k}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  j["failures"] = f;
  return j;
}

Json to_json(const hunt::LemmaSuiteReport& r) {
  Json j;
  j["max_order"] = r.max_order;
  j["all_pass"] = r.all_pass();
  j["graphs_processed"] = r.graphs_processed;
  j["reduced_per_order"] = rank_map(r.reduced_per_order);
  Json checks = Json::object();
  for (const auto& [k, v] : r.checks_run) checks[k] = v;
  j["checks_run"] = checks;
  Json f = Json::array();
  for (const auto& x : r.failures) f.push_back({{"graph6", x.graph6}, {"check", x.check}, {"detail", x.detail}});
  j["failures"] = f;
  return j;
}

}  // namespace rankbound::cli
