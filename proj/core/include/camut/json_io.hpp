#ifndef CAMUT_JSON_IO_HPP
#define CAMUT_JSON_IO_HPP

#include "camut/exchange_matrix.hpp"
#include "camut/mod_quiver.hpp"
#include "camut/preprojective.hpp"
#include "camut/seed.hpp"
#include "camut/valued_quiver.hpp"

#include <set>
#include <string>
#include <vector>

// JSON schemas (all carry "format": 1) and DOT emitters. Inputs throw
// parse_error on malformed documents; value-level violations surface as
// precondition_error from the module constructors. Output is deterministic:
// keys are sorted and integers too wide for JSON numbers are emitted as
// decimal strings.
namespace camut::io {

ExchangeMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const ExchangeMatrix& b);
std::string symmetrizer_to_json(const Symmetrizer& s);

ValuedQuiver quiver_from_json(const std::string& text);
std::string quiver_to_json(const ValuedQuiver& q);
std::string quiver_to_dot(const ValuedQuiver& q);

Seed seed_from_json(const std::string& text);  // accepts a bare matrix document too
std::string seed_to_json(const Seed& s);
std::string exchange_graph_to_json(const ExchangeGraph& g);
std::string exchange_graph_to_dot(const ExchangeGraph& g);
std::string variables_table(const ExchangeGraph& g);

struct SubclusterCheckInput {
  Seed parent;
  std::vector<int> sigma;
  int p = 0;
  std::set<int> inverted_sub;
};
SubclusterCheckInput subcluster_from_json(const std::string& text);

/// "kind" field of a modulation document: "field_algebra", "bimodule",
/// "mod_quiver_dims" or "modulated_graph".
std::string modulation_kind(const std::string& text);

FieldPtr algebra_from_json(const std::string& text);
Bimodule bimodule_from_json(const std::string& text);
ModQuiverDims mod_quiver_from_json(const std::string& text);
std::string mod_quiver_to_json(const ModQuiverDims& d);
ModulatedGraph modulated_graph_from_json(const std::string& text);

std::string algebra_report_json(const FieldPtr& alg);
std::string pair_report_json(const DualizingPair& p);

std::string graded_dims_to_json(const GradedDims& gd);
std::string graded_dims_table(const GradedDims& gd);

}  // namespace camut::io

#endif
