#include "camut/json_io.hpp"

#include "camut/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace camut::io {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON document");
  if (!j.is_object()) throw parse_error("top-level JSON value must be an object");
  return j;
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw parse_error(std::string("missing field '") + name + "'");
  return *it;
}

Int int_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw parse_error(std::string("expected integer for ") + what);
}

json int_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());
}

Rat rat_from_json(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer() || v.is_number_unsigned()) return Rat(int_from_json(v, what));
  throw parse_error(std::string("expected rational for ") + what);
}

json rat_to_json(const Rat& v) {
  if (denominator(v) == 1) return int_to_json(Int(numerator(v)));
  return json(camut::to_string(v));
}

void require_format(const json& j) {
  if (j.contains("format") && field(j, "format") != 1)
    throw parse_error("unsupported format version");
}

IntGrid grid_from_json(const json& rows, const char* what) {
  if (!rows.is_array()) throw parse_error(std::string(what) + " must be an array of rows");
  IntGrid g;
  for (const json& row : rows) {
    if (!row.is_array()) throw parse_error(std::string(what) + " rows must be arrays");
    std::vector<Int> r;
    for (const json& v : row) r.push_back(int_from_json(v, what));
    g.push_back(std::move(r));
  }
  return g;
}

json grid_to_json(const IntGrid& g) {
  json rows = json::array();
  for (const auto& r : g) {
    json row = json::array();
    for (const Int& v : r) row.push_back(int_to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat ratmat_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw parse_error(std::string(what) + " must be a non-empty array of rows");
  size_t cols = 0;
  std::vector<std::vector<Rat>> data;
  for (const json& row : rows) {
    if (!row.is_array()) throw parse_error(std::string(what) + " rows must be arrays");
    std::vector<Rat> r;
    for (const json& v : row) r.push_back(rat_from_json(v, what));
    if (data.empty())
      cols = r.size();
    else if (r.size() != cols)
      throw parse_error(std::string(what) + " rows have uneven length");
    data.push_back(std::move(r));
  }
  RatMat m(data.size(), cols);
  for (size_t i = 0; i < data.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = data[i][j];
  return m;
}

std::string hash_prefix(uint64_t h) {
  std::ostringstream out;
  out << std::hex << std::setw(8) << std::setfill('0') << (h >> 32);
  return out.str();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

ExchangeMatrix matrix_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  IntGrid g = grid_from_json(field(j, "entries"), "entries");
  ExchangeMatrix b = ExchangeMatrix::make(std::move(g));
  if (j.contains("n") && int_from_json(field(j, "n"), "n") != b.n_mutable())
    throw parse_error("declared n does not match the entry grid");
  if (j.contains("m") && int_from_json(field(j, "m"), "m") != b.m_total())
    throw parse_error("declared m does not match the entry grid");
  return b;
}

std::string matrix_to_json(const ExchangeMatrix& b) {
  json j;
  j["format"] = 1;
  j["n"] = b.n_mutable();
  j["m"] = b.m_total();
  j["entries"] = grid_to_json(b.grid());
  return j.dump(2);
}

std::string symmetrizer_to_json(const Symmetrizer& s) {
  json j;
  j["format"] = 1;
  json diag = json::array();
  for (const Int& v : s.diag) diag.push_back(int_to_json(v));
  j["diag"] = std::move(diag);
  return j.dump(2);
}

ValuedQuiver quiver_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  std::vector<std::string> points;
  for (const json& p : field(j, "points")) points.push_back(p.get<std::string>());
  std::vector<bool> frozen(points.size(), false);
  if (j.contains("frozen"))
    for (const json& p : field(j, "frozen")) {
      auto it = std::find(points.begin(), points.end(), p.get<std::string>());
      if (it == points.end()) throw parse_error("frozen point not in point list");
      frozen[size_t(it - points.begin())] = true;
    }
  std::vector<Int> sym(points.size(), Int(1));
  if (j.contains("symmetrizer")) {
    const json& sj = field(j, "symmetrizer");
    for (size_t i = 0; i < points.size(); ++i) {
      if (!sj.contains(points[i])) throw parse_error("symmetrizer misses point " + points[i]);
      sym[i] = int_from_json(sj.at(points[i]), "symmetrizer");
    }
  }
  std::vector<ArrowSpec> arrows;
  if (j.contains("arrows"))
    for (const json& a : field(j, "arrows")) {
      const json& d = field(a, "d");
      if (!d.is_array() || d.size() != 2) throw parse_error("arrow valuation must be [d_ij, d_ji]");
      arrows.push_back({field(a, "from").get<std::string>(), field(a, "to").get<std::string>(),
                        int_from_json(d[0], "d"), int_from_json(d[1], "d")});
    }
  bool extended = j.value("extended", false);
  return ValuedQuiver::make(std::move(points), std::move(frozen), std::move(sym), arrows, extended);
}

std::string quiver_to_json(const ValuedQuiver& q) {
  json j;
  j["format"] = 1;
  j["points"] = q.points();
  json frozen = json::array();
  for (int i = 0; i < q.point_count(); ++i)
    if (q.frozen()[i]) frozen.push_back(q.points()[i]);
  j["frozen"] = std::move(frozen);
  json sym;
  for (int i = 0; i < q.point_count(); ++i) sym[q.points()[i]] = int_to_json(q.symmetrizer()[i]);
  j["symmetrizer"] = std::move(sym);
  json arrows = json::array();
  for (const auto& [key, v] : q.arrows()) {
    json a;
    a["from"] = q.points()[key.first];
    a["to"] = q.points()[key.second];
    a["d"] = json::array({int_to_json(v.fwd), int_to_json(v.bwd)});
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  j["extended"] = q.extended();
  return j.dump(2);
}

std::string quiver_to_dot(const ValuedQuiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int i = 0; i < q.point_count(); ++i) {
    out << "  \"" << dot_escape(q.points()[i]) << "\"";
    if (q.frozen()[i]) out << " [shape=box]";
    out << ";\n";
  }
  for (const auto& [key, v] : q.arrows())
    out << "  \"" << dot_escape(q.points()[key.first]) << "\" -> \""
        << dot_escape(q.points()[key.second]) << "\" [label=\"" << v.fwd << "," << v.bwd
        << "\"];\n";
  out << "}\n";
  return out.str();
}

Seed seed_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  IntGrid g;
  if (j.contains("matrix"))
    g = grid_from_json(field(j, "matrix"), "matrix");
  else
    g = grid_from_json(field(j, "entries"), "entries");
  ExchangeMatrix b = ExchangeMatrix::make(std::move(g));
  std::set<int> inverted;
  if (j.contains("inverted"))
    for (const json& v : field(j, "inverted"))
      inverted.insert(int(int_from_json(v, "inverted").convert_to<long long>()));
  Seed s = initial_seed(b, std::move(inverted));
  if (j.contains("cluster")) {
    const json& cl = field(j, "cluster");
    if (!cl.is_array() || int(cl.size()) != b.n_mutable())
      throw parse_error("cluster must list one variable per mutable index");
    for (int i = 0; i < b.n_mutable(); ++i) {
      LaurentPoly p = LaurentPoly::parse(cl[i].get<std::string>(), b.m_total());
      if (p.is_zero()) throw precondition_error("cluster variables must be nonzero");
      s.cluster[i] = std::move(p);
    }
  }
  return s;
}

std::string seed_to_json(const Seed& s) {
  json j;
  j["format"] = 1;
  j["n"] = s.n();
  j["m"] = s.m();
  j["matrix"] = grid_to_json(s.matrix.grid());
  json cl = json::array();
  for (const auto& x : s.cluster) cl.push_back(x.to_string("u"));
  j["cluster"] = std::move(cl);
  j["inverted"] = s.inverted;
  return j.dump(2);
}

std::string exchange_graph_to_json(const ExchangeGraph& g) {
  json j;
  j["format"] = 1;
  j["complete"] = g.complete;
  j["depth"] = g.depth_reached;
  j["seeds"] = g.nodes.size();
  j["variables"] = g.variables;
  json nodes = json::array();
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    json n;
    n["id"] = i;
    n["hash"] = hash_prefix(g.nodes[i].hash);
    json cl = json::array();
    for (const auto& x : g.nodes[i].seed.cluster) cl.push_back(x.to_string("u"));
    n["cluster"] = std::move(cl);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [a, b, k] : g.edges) edges.push_back(json::array({a, b, k}));
  j["edges"] = std::move(edges);
  return j.dump(2);
}

std::string exchange_graph_to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << hash_prefix(g.nodes[i].hash) << "\"];\n";
  for (const auto& [a, b, k] : g.edges)
    out << "  n" << a << " -- n" << b << " [label=\"" << k << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string variables_table(const ExchangeGraph& g) {
  std::ostringstream out;
  out << (g.complete ? "complete" : "truncated") << ": " << g.nodes.size() << " seeds, "
      << g.variables.size() << " variables\n";
  for (const auto& v : g.variables) out << "  " << v << "\n";
  return out.str();
}

SubclusterCheckInput subcluster_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  SubclusterCheckInput in;
  in.parent = seed_from_json(field(j, "parent").dump());
  for (const json& v : field(j, "sigma"))
    in.sigma.push_back(int(int_from_json(v, "sigma").convert_to<long long>()));
  in.p = int(int_from_json(field(j, "p"), "p").convert_to<long long>());
  if (j.contains("inverted_sub"))
    for (const json& v : field(j, "inverted_sub"))
      in.inverted_sub.insert(int(int_from_json(v, "inverted_sub").convert_to<long long>()));
  return in;
}

std::string modulation_kind(const std::string& text) {
  json j = parse_document(text);
  if (!j.contains("kind")) throw parse_error("modulation document needs a 'kind' field");
  return field(j, "kind").get<std::string>();
}

namespace {

FieldPtr algebra_from_value(const json& v) {
  if (!v.is_array()) throw parse_error("algebra must be a minpoly coefficient array");
  std::vector<Rat> coeffs;
  for (const json& c : v) coeffs.push_back(rat_from_json(c, "minpoly"));
  return FieldAlgebra::make(std::move(coeffs));
}

Bimodule bimodule_from_value(const json& v, FieldPtr left, FieldPtr right) {
  Bimodule base = [&]() {
    std::string model = v.value("model", std::string(v.contains("left_gen") ? "explicit" : ""));
    if (model == "regular") {
      if (!left->same_algebra(*right))
        throw parse_error("'regular' bimodule needs equal endpoint algebras");
      return Bimodule::regular(left);
    }
    if (model == "left-regular") return Bimodule::left_regular(left, right);
    if (model == "explicit") {
      RatMat lg = ratmat_from_json(field(v, "left_gen"), "left_gen");
      RatMat rg = ratmat_from_json(field(v, "right_gen"), "right_gen");
      return Bimodule::make(std::move(left), std::move(right), std::move(lg), std::move(rg));
    }
    throw parse_error("bimodule needs a 'model' or explicit generator actions");
  }();
  int copies = v.value("copies", 1);
  return copies == 1 ? base : Bimodule::direct_sum(base, copies);
}

}  // namespace

FieldPtr algebra_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  return algebra_from_value(field(j, "minpoly"));
}

Bimodule bimodule_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  FieldPtr left = algebra_from_value(field(j, "left"));
  FieldPtr right = algebra_from_value(field(j, "right"));
  return bimodule_from_value(j, std::move(left), std::move(right));
}

ModQuiverDims mod_quiver_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  std::vector<std::string> points;
  for (const json& p : field(j, "points")) points.push_back(p.get<std::string>());
  const json& degj = field(j, "degrees");
  std::vector<Int> degrees;
  for (const auto& p : points) {
    if (!degj.contains(p)) throw parse_error("degrees misses point " + p);
    degrees.push_back(int_from_json(degj.at(p), "degrees"));
  }
  std::vector<bool> frozen(points.size(), false);
  if (j.contains("frozen"))
    for (const json& p : field(j, "frozen")) {
      auto it = std::find(points.begin(), points.end(), p.get<std::string>());
      if (it == points.end()) throw parse_error("frozen point not in point list");
      frozen[size_t(it - points.begin())] = true;
    }
  std::vector<ModArrowSpec> arrows;
  if (j.contains("arrows"))
    for (const json& a : field(j, "arrows"))
      arrows.push_back({field(a, "from").get<std::string>(), field(a, "to").get<std::string>(),
                        int_from_json(field(a, "ldim"), "ldim")});
  return ModQuiverDims::make(std::move(points), std::move(degrees), std::move(frozen), arrows);
}

std::string mod_quiver_to_json(const ModQuiverDims& d) {
  json j;
  j["format"] = 1;
  j["kind"] = "mod_quiver_dims";
  j["points"] = d.points();
  json deg;
  for (int i = 0; i < d.point_count(); ++i) deg[d.points()[i]] = int_to_json(d.degrees()[i]);
  j["degrees"] = std::move(deg);
  json frozen = json::array();
  for (int i = 0; i < d.point_count(); ++i)
    if (d.frozen()[i]) frozen.push_back(d.points()[i]);
  j["frozen"] = std::move(frozen);
  json arrows = json::array();
  for (const auto& [key, l] : d.ldims()) {
    json a;
    a["from"] = d.points()[key.first];
    a["to"] = d.points()[key.second];
    a["ldim"] = int_to_json(l);
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  return j.dump(2);
}

ModulatedGraph modulated_graph_from_json(const std::string& text) {
  json j = parse_document(text);
  require_format(j);
  std::vector<std::string> points;
  for (const json& p : field(j, "points")) points.push_back(p.get<std::string>());
  const json& algj = field(j, "algebras");
  std::vector<FieldPtr> algebras;
  for (const auto& p : points) {
    if (!algj.contains(p)) throw parse_error("algebras misses point " + p);
    algebras.push_back(algebra_from_value(algj.at(p)));
  }
  std::vector<ModulatedGraph::EdgeInput> edges;
  if (j.contains("edges"))
    for (const json& e : field(j, "edges")) {
      std::string from = field(e, "from").get<std::string>();
      std::string to = field(e, "to").get<std::string>();
      auto find = [&](const std::string& label) -> FieldPtr {
        auto it = std::find(points.begin(), points.end(), label);
        if (it == points.end()) throw parse_error("edge endpoint unknown: " + label);
        return algebras[size_t(it - points.begin())];
      };
      Bimodule b = bimodule_from_value(field(e, "bimodule"), find(from), find(to));
      edges.push_back({from, to, std::move(b)});
    }
  return ModulatedGraph::make(std::move(points), std::move(algebras), std::move(edges));
}

std::string algebra_report_json(const FieldPtr& alg) {
  json j;
  j["format"] = 1;
  j["kind"] = "field_algebra_report";
  j["degree"] = alg->degree();
  json mp = json::array();
  for (const Rat& c : alg->minpoly()) mp.push_back(rat_to_json(c));
  j["minpoly"] = std::move(mp);
  j["trace_of_one"] = rat_to_json(alg->trace(alg->one()));
  j["gram_determinant"] = rat_to_json(det(alg->gram()));
  return j.dump(2);
}

std::string pair_report_json(const DualizingPair& p) {
  json j;
  j["format"] = 1;
  j["kind"] = "dualizing_pair_report";
  j["dim_q"] = p.mod().dim();
  j["left_degree"] = p.E()->degree();
  j["right_degree"] = p.F()->degree();
  j["left_dim"] = p.mod().left_dim();
  j["right_dim"] = p.mod().right_dim();
  j["valuation"] = json::array({p.mod().right_dim(), p.mod().left_dim()});
  j["central_terms_e"] = central_element(p, CentralSide::e_side).terms.size();
  j["central_terms_f"] = central_element(p, CentralSide::f_side).terms.size();
  j["verified"] = true;  // construction re-verifies; reaching here means it passed
  return j.dump(2);
}

std::string graded_dims_to_json(const GradedDims& gd) {
  json j;
  j["format"] = 1;
  j["cap"] = gd.cap;
  j["tensor_dims"] = gd.tensor_dims;
  j["dims"] = gd.dims;
  if (gd.total)
    j["total"] = *gd.total;
  else
    j["total"] = nullptr;
  return j.dump(2);
}

std::string graded_dims_table(const GradedDims& gd) {
  std::ostringstream out;
  out << "degree | dim T_m | dim Lambda_m\n";
  for (size_t m = 0; m < gd.dims.size(); ++m)
    out << std::setw(6) << m << " | " << std::setw(7)
        << (m < gd.tensor_dims.size() ? gd.tensor_dims[m] : -1) << " | " << gd.dims[m] << "\n";
  if (gd.total)
    out << "total dim Lambda = " << *gd.total << "\n";
  else
    out << "no zero layer up to degree " << gd.cap << "; total dimension undetermined\n";
  return out.str();
}

}  // namespace camut::io
