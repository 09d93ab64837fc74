#include "hypfan/io.hpp"

#include <json.hpp>

#include "hypfan/error.hpp"

namespace hypfan {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, where));
  return out;
}

Rational component(const json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    mpz_class den(j[1].dump());
    if (den == 0) bad("zero denominator in fan vector");
    Rational q(mpz_class(j[0].dump()), den);
    q.canonicalize();
    return q;
  }
  bad("fan component must be an integer, [num, den] or \"p/q\"");
}

json component_json(const Rational& q) {
  if (q.get_den() == 1) {
    if (q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
  }
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) return json::array({q.get_num().get_si(), q.get_den().get_si()});
  return q.get_str();
}

Fan fan_from_json(const json& j) {
  int n = as_int(field(j, "dimension"), "fan dimension");
  if (n != 2 && n != 3) bad("fan dimension must be 2 or 3");
  const json& vs = field(j, "vectors");
  if (!vs.is_object()) bad("fan vectors must be an object");
  Fan fan(n);
  for (const auto& [key, val] : vs.items()) {
    Label l;
    try {
      std::size_t used = 0;
      l = std::stoi(key, &used);
      if (used != key.size() || l < 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad("fan label '" + key + "' is not a non-negative integer");
    }
    if (!val.is_array()) bad("fan vector for label " + key + " must be an array");
    Vec v;
    for (const auto& c : val) v.push_back(component(c));
    fan.set(l, std::move(v));
  }
  return fan;
}

json fan_to_json(const Fan& fan) {
  json vs = json::object();
  for (const auto& [l, v] : fan.vectors()) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(component_json(q));
    vs[std::to_string(l)] = arr;
  }
  return json{{"dimension", fan.dimension()}, {"vectors", vs}};
}

SurfaceComplex surface_from_json(const json& j) {
  SurfaceInput in;
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("'vertices' must be an array");
  for (const auto& v : vs) {
    auto r = int_list(v, "vertex rotation");
    if (r.size() != 4) throw Error(ErrorCode::NonQuadrivalentVertex, "vertex with " + std::to_string(r.size()) + " darts");
    in.vertices.push_back({r[0], r[1], r[2], r[3]});
  }
  const json& es = field(j, "edges");
  if (!es.is_array()) bad("'edges' must be an array");
  for (const auto& e : es) {
    auto p = int_list(e, "edge");
    if (p.size() != 2) bad("an edge must list exactly two darts");
    in.edges.push_back({p[0], p[1]});
  }
  if (j.contains("twisted")) {
    if (!j["twisted"].is_array()) bad("'twisted' must be an array");
    for (const auto& t : j["twisted"]) {
      if (!t.is_boolean()) bad("'twisted' entries must be booleans");
      in.twisted.push_back(t.get<bool>());
    }
  }
  if (j.contains("surface")) {
    const json& s = j["surface"];
    const json& o = field(s, "orientable");
    if (!o.is_boolean()) bad("'orientable' must be a boolean");
    in.surface = Surface{o.get<bool>(), as_int(field(s, "genus_or_crosscaps"), "genus_or_crosscaps")};
  }
  return SurfaceComplex::build(std::move(in));
}

CellComplex3 cells_from_json(const json& j) {
  const json& cs = field(j, "cells");
  std::array<std::vector<std::vector<int>>, 4> bd;
  std::vector<Label> labels;
  for (int d = 0; d < 4; ++d) {
    const json& list = field(cs, std::to_string(d).c_str());
    if (!list.is_array()) bad("cells of dimension " + std::to_string(d) + " must be an array");
    for (const auto& cell : list) {
      if (!cell.is_object()) bad("a cell must be an object");
      if (d == 0) {
        bd[0].push_back({});
        continue;
      }
      bd[d].push_back(int_list(field(cell, "boundary"), "boundary"));
      if (d == 2) labels.push_back(as_int(field(cell, "hypersurface"), "hypersurface"));
    }
  }
  return CellComplex3(std::move(bd), std::move(labels));
}

}  // namespace

ComplexDocument parse_complex(const std::string& text) {
  json j = parse_json(text);
  int dim = as_int(field(j, "dimension"), "dimension");
  std::optional<Fan> fan;
  if (j.contains("fan")) fan = fan_from_json(j["fan"]);
  if (dim == 2) {
    ComplexDocument doc{surface_from_json(j), fan, std::nullopt, std::nullopt};
    if (j.contains("involution")) doc.involution2 = DartInvolution{int_list(j["involution"], "involution")};
    return doc;
  }
  if (dim == 3) {
    ComplexDocument doc{cells_from_json(j), fan, std::nullopt, std::nullopt};
    if (j.contains("involution")) {
      CellInvolution s;
      for (int d = 0; d < 4; ++d) s.map[d] = int_list(field(j["involution"], std::to_string(d).c_str()), "involution");
      doc.involution3 = std::move(s);
    }
    return doc;
  }
  bad("dimension must be 2 or 3");
}

Fan parse_fan(const std::string& text) { return fan_from_json(parse_json(text)); }

MoveScript parse_script(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) bad("a move script is a JSON array");
  MoveScript script;
  for (const auto& step : j) {
    const json& op = field(step, "op");
    if (!op.is_string()) bad("'op' must be a string");
    MoveOp m{op.get<std::string>(), {}};
    if (step.contains("args")) {
      if (!step["args"].is_object()) bad("'args' must be an object");
      for (const auto& [k, v] : step["args"].items()) {
        if (v.is_string()) {
          m.args[k] = v.get<std::string>();
        } else if (v.is_array()) {
          std::string s;
          for (const auto& x : v) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
          m.args[k] = s;
        } else {
          m.args[k] = v.dump();
        }
      }
    }
    script.push_back(std::move(m));
  }
  return script;
}

std::string write_complex(const ComplexDocument& doc) {
  json j;
  if (const auto* s = std::get_if<SurfaceComplex>(&doc.complex)) {
    const SurfaceInput& in = s->input();
    j["dimension"] = 2;
    j["vertices"] = in.vertices;
    j["edges"] = in.edges;
    bool any = false;
    for (bool t : in.twisted) any = any || t;
    if (any) j["twisted"] = in.twisted;
    if (in.surface) j["surface"] = {{"orientable", in.surface->orientable}, {"genus_or_crosscaps", in.surface->genus_or_crosscaps}};
    if (doc.involution2) j["involution"] = doc.involution2->map;
  } else {
    const auto& c = std::get<CellComplex3>(doc.complex);
    j["dimension"] = 3;
    json cells = json::object();
    for (int d = 0; d < 4; ++d) {
      json list = json::array();
      for (std::size_t i = 0; i < c.count(d); ++i) {
        json cell = json::object();
        if (d > 0) cell["boundary"] = c.boundary(d, static_cast<int>(i));
        if (d == 2) cell["hypersurface"] = c.hypersurface(static_cast<int>(i));
        list.push_back(cell);
      }
      cells[std::to_string(d)] = list;
    }
    j["cells"] = cells;
    if (doc.involution3) {
      json m = json::object();
      for (int d = 0; d < 4; ++d) m[std::to_string(d)] = doc.involution3->map[d];
      j["involution"] = m;
    }
  }
  if (doc.fan) j["fan"] = fan_to_json(*doc.fan);
  return j.dump(2) + "\n";
}

std::string write_fan(const Fan& fan) { return fan_to_json(fan).dump(2) + "\n"; }

std::string write_script(const MoveScript& script) {
  json j = json::array();
  for (const auto& m : script) j.push_back({{"op", m.op}, {"args", m.args}});
  return j.dump(2) + "\n";
}

ComplexDocument to_document(const State& s) {
  return ComplexDocument{s.complex, s.fan, s.involution2, s.involution3};
}

State to_state(ComplexDocument doc) {
  int dim = std::holds_alternative<SurfaceComplex>(doc.complex) ? 2 : 3;
  Fan fan = doc.fan ? std::move(*doc.fan) : Fan(dim);
  return State{std::move(doc.complex), std::move(fan), std::move(doc.involution2), std::move(doc.involution3), {}};
}

}  // namespace hypfan
