#pragma once

#include "rankbound/codes/bounds.hpp"
#include "rankbound/codes/embedding.hpp"
#include "rankbound/codes/lemma.hpp"
#include "rankbound/graph/invariants.hpp"
#include "rankbound/hunt/census.hpp"
#include "rankbound/hunt/suites.hpp"

#include "json.hpp"

namespace rankbound::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json exact_json(const exact::QSqrt2& x);
Json graph_summary(const graph::Graph& g);
Json to_json(const codes::BoundReport& r);
Json to_json(const codes::CodeReport& r);
Json to_json(const codes::TailCertificate& c);
Json to_json(const graph::DuplicationWitness& w);
Json to_json(const hunt::CensusReport& c);
Json to_json(const hunt::ConjectureReport& c);
Json to_json(const hunt::MInequalityReport& r);
Json to_json(const hunt::LemmaSuiteReport& r);

}  // namespace rankbound::cli
