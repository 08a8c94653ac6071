#include "srlab/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace srlab {

using nlohmann::json;

namespace {

std::string label_of(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw InputError("field '" + field + "': vertex labels must be strings or integers");
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError("field '" + where + "': expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError("field '" + where + key + "': missing");
  return *it;
}

std::vector<std::vector<std::string>> face_list(const json& j, const std::string& field,
                                                const std::vector<std::string>& ground) {
  if (!j.is_array()) throw InputError("field '" + field + "': expected an array of faces");
  std::vector<std::vector<std::string>> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = field + "[" + std::to_string(k) + "]";
    if (!j[k].is_array()) throw InputError("field '" + f + "': expected an array of vertices");
    std::vector<std::string> face;
    for (std::size_t x = 0; x < j[k].size(); ++x) {
      std::string l = label_of(j[k][x], f + "[" + std::to_string(x) + "]");
      if (std::find(ground.begin(), ground.end(), l) == ground.end())
        throw InputError("field '" + f + "[" + std::to_string(x) + "]': unknown vertex '" + l + "'");
      face.push_back(std::move(l));
    }
    out.push_back(std::move(face));
  }
  return out;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

RelativeComplex complex_from(const json& j, const std::string& where) {
  const json& verts = require(j, "vertices", where);
  if (!verts.is_array()) throw InputError("field '" + where + "vertices': expected an array");
  std::vector<std::string> ground;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    std::string l = label_of(verts[k], where + "vertices[" + std::to_string(k) + "]");
    if (std::find(ground.begin(), ground.end(), l) != ground.end())
      throw InputError("field '" + where + "vertices': duplicate vertex '" + l + "'");
    ground.push_back(std::move(l));
  }
  if (ground.size() > 64) throw InputError("field '" + where + "vertices': more than 64 vertices");
  bool is_void = false;
  if (auto it = j.find("void"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("field '" + where + "void': expected a boolean");
    is_void = it->get<bool>();
  }
  auto facets = face_list(require(j, "facets", where), where + "facets", ground);
  if (is_void && !facets.empty()) throw InputError("field '" + where + "void': a void complex has no facets");
  SimplicialComplex delta = SimplicialComplex::from_facets(ground, facets, is_void);
  SimplicialComplex gamma = SimplicialComplex::void_complex(ground);
  if (auto it = j.find("gamma_facets"); it != j.end())
    gamma = SimplicialComplex::from_facets(ground, face_list(*it, where + "gamma_facets", ground));
  for (Face f : gamma.faces())
    if (!delta.contains(f))
      throw InputError("field '" + where + "gamma_facets': face " + gamma.face_label(f) + " is not in delta");
  return RelativeComplex(delta, gamma);
}

json complex_json(const RelativeComplex& psi) {
  json j;
  j["vertices"] = psi.ground_set();
  auto faces_json = [&](const SimplicialComplex& c) {
    json arr = json::array();
    for (Face f : c.facets()) {
      json face = json::array();
      for (int v : face_vertices(f)) face.push_back(psi.ground_set()[static_cast<std::size_t>(v)]);
      arr.push_back(face);
    }
    return arr;
  };
  j["facets"] = psi.delta().is_void() ? json::array() : faces_json(psi.delta());
  if (psi.delta().is_void()) j["void"] = true;
  if (!psi.gamma().is_void()) j["gamma_facets"] = faces_json(psi.gamma());
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

RelativeComplex parse_complex_json(const std::string& text) { return complex_from(parse_text(text), ""); }

std::string complex_to_json(const RelativeComplex& psi) { return complex_json(psi).dump(2) + "\n"; }

SubdivisionStructure parse_subdivision_json(const std::string& text) {
  json j = parse_text(text);
  RelativeComplex delta = complex_from(require(j, "delta", ""), "delta.");
  if (!delta.is_absolute()) throw InputError("field 'delta.gamma_facets': the subdivided complex must be absolute");
  const json& sigma = require(j, "sigma", "");
  if (!sigma.is_array()) throw InputError("field 'sigma': expected an array of cells");
  const auto& ground = delta.ground_set();
  std::vector<CellSpec> cells;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    const std::string where = "sigma[" + std::to_string(k) + "].";
    const json& c = sigma[k];
    const json& dim = require(c, "dim", where);
    if (!dim.is_number_integer()) throw InputError("field '" + where + "dim': expected an integer");
    CellSpec spec;
    spec.dim = dim.get<int>();
    for (const auto& f : face_list(require(c, "facets", where), where + "facets", ground))
      spec.facets.push_back(delta.delta().face_of(f));
    if (auto it = c.find("boundary_facets"); it != c.end())
      for (const auto& f : face_list(*it, where + "boundary_facets", ground))
        spec.boundary_facets.push_back(delta.delta().face_of(f));
    cells.push_back(std::move(spec));
  }
  return make_subdivision_structure(delta.delta(), cells);
}

std::string report_to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["input"] = r.input;
  j["input_hash"] = r.input_hash;
  j["prime"] = r.prime;
  j["seeds"] = r.seeds;
  j["trials"] = r.trials;
  j["verdict"] = verdict_name(r.verdict);
  j["diagnostics"] = r.diagnostics;
  j["tables"] = json::array();
  for (const auto& t : r.tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  return j.dump(2) + "\n";
}

TheoremReport report_from_json(const std::string& text) {
  json j = parse_text(text);
  TheoremReport r;
  try {
    r.theorem = j.at("theorem").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.input_hash = j.at("input_hash").get<std::string>();
    r.prime = j.at("prime").get<std::uint64_t>();
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    r.trials = j.at("trials").get<int>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    for (const auto& t : j.at("tables"))
      r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                          t.at("rows").get<std::vector<std::vector<std::int64_t>>>()});
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

SubdivisionStructure builtin_structure(const std::string& name) {
  static const std::regex sized(R"((sd_simplex|sd_boundary_simplex)(?:_(\d+)|\((\d+)\)))");
  std::smatch m;
  if (name == "sd_two_triangles")
    return barycentric_structure(SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "c", "d"}}));
  if (std::regex_match(name, m, sized)) {
    const int k = std::stoi(m[2].matched ? m[2].str() : m[3].str());
    if (k < 1 || k > 4) throw InputError("builtin '" + name + "': size must be in [1, 4]");
    const std::string base = m[1].str() == "sd_simplex" ? "simplex" : "boundary_simplex";
    return barycentric_structure(builtin_complex(base + "(" + std::to_string(k) + ")").delta());
  }
  throw InputError("unknown builtin subdivision structure '" + name + "'");
}

RelativeComplex subdivided_disk(int k) {
  if (k < 1 || k > 4) throw InputError("subdivided disk: size must be in [1, 4]");
  SimplicialComplex whole = builtin_complex("simplex(" + std::to_string(k) + ")").delta();
  SimplicialComplex sd = barycentric_subdivision(whole);
  // sd vertices are the nonempty faces of the simplex in face order; the
  // boundary is induced on the proper ones.
  Face proper = 0;
  int index = 0;
  const Face top = whole.vertex_mask();
  for (Face f : whole.faces()) {
    if (!f) continue;
    if (f != top) proper |= vertex_face(index);
    ++index;
  }
  return RelativeComplex(sd, induced_subcomplex(sd, proper));
}

LoadedInput load_input(const std::string& spec) {
  LoadedInput in;
  in.name = spec;
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string name = spec.substr(prefix.size());
    static const std::regex disk(R"(sd_disk(?:_(\d+)|\((\d+)\)))");
    std::smatch m;
    if (std::regex_match(name, m, disk)) {
      in.complex = subdivided_disk(std::stoi(m[1].matched ? m[1].str() : m[2].str()));
    } else if (name.rfind("sd_", 0) == 0) {
      in.structure = builtin_structure(name);
    } else {
      in.complex = builtin_complex(name);
    }
    return in;
  }
  const std::string text = read_file(spec);
  json j = parse_text(text);
  if (j.is_object() && j.contains("sigma"))
    in.structure = parse_subdivision_json(text);
  else
    in.complex = parse_complex_json(text);
  return in;
}

}  // namespace srlab
