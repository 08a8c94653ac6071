#include "srlab/complex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace srlab {

namespace {

bool size_then_value(Face a, Face b) {
  int sa = face_size(a), sb = face_size(b);
  return sa != sb ? sa < sb : a < b;
}

void check_same_ground(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.ground_set() != b.ground_set())
    throw InputError("complexes live on different ground sets");
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<int> face_vertices(Face f) {
  std::vector<int> out;
  while (f) {
    out.push_back(std::countr_zero(f));
    f &= f - 1;
  }
  return out;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> ground) {
  return from_face_set(std::move(ground), {});
}

SimplicialComplex SimplicialComplex::from_face_set(std::vector<std::string> ground,
                                                   std::vector<Face> faces) {
  if (ground.size() > kMaxVertices) throw InputError("ground set exceeds 64 vertices");
  std::unordered_set<std::string> seen;
  for (const auto& v : ground)
    if (!seen.insert(v).second) throw InputError("duplicate vertex label '" + v + "'");
  SimplicialComplex c;
  c.ground_ = std::move(ground);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  Face all = c.ground_.size() == 64 ? ~Face{0} : (Face{1} << c.ground_.size()) - 1;
  for (Face f : faces)
    if (f & ~all) throw InputError("face uses a vertex outside the ground set");
  c.sorted_ = faces;
  std::sort(faces.begin(), faces.end(), size_then_value);
  c.faces_ = std::move(faces);
  return c;
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<std::string> ground,
                                                     const std::vector<Face>& generators) {
  std::unordered_set<Face> faces;
  for (Face g : generators) {
    if (face_size(g) > 24) throw InputError("facet too large to enumerate its faces");
    for (Face s = g;; s = (s - 1) & g) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  return from_face_set(std::move(ground), std::vector<Face>(faces.begin(), faces.end()));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> ground,
                                                 const std::vector<std::vector<std::string>>& facets,
                                                 bool is_void) {
  if (is_void && !facets.empty()) throw InputError("a void complex cannot list facets");
  SimplicialComplex probe = void_complex(ground);
  std::vector<Face> gens;
  for (const auto& f : facets) gens.push_back(probe.face_of(f));
  if (gens.empty() && !is_void) gens.push_back(0);
  return from_generators(std::move(ground), gens);
}

int SimplicialComplex::vertex_index(const std::string& label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) throw InputError("unknown vertex label '" + label + "'");
  return static_cast<int>(it - ground_.begin());
}

Face SimplicialComplex::face_of(const std::vector<std::string>& labels) const {
  Face f = 0;
  for (const auto& l : labels) f |= vertex_face(vertex_index(l));
  return f;
}

std::string SimplicialComplex::face_label(Face f) const {
  std::string s = "{";
  bool first = true;
  for (int v : face_vertices(f)) {
    if (!first) s += ",";
    s += ground_.at(static_cast<std::size_t>(v));
    first = false;
  }
  return s + "}";
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), f);
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (Face f : faces_)
    if (face_size(f) == k + 1) out.push_back(f);
  return out;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  const int n = static_cast<int>(ground_.size());
  for (Face f : faces_) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(f & vertex_face(v)) && contains(f | vertex_face(v))) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dim() const {
  if (faces_.empty()) return kVoidDim;
  return face_size(faces_.back()) - 1;
}

Face SimplicialComplex::vertex_mask() const {
  Face m = 0;
  for (Face f : faces_) m |= f;
  return m;
}

bool SimplicialComplex::is_pure() const {
  auto fs = facets();
  return std::all_of(fs.begin(), fs.end(),
                     [&](Face f) { return face_size(f) == face_size(fs.front()); });
}

SimplicialComplex link(const SimplicialComplex& d, Face tau) {
  std::vector<Face> out;
  if (d.contains(tau))
    for (Face r : d.faces())
      if (!(r & tau) && d.contains(r | tau)) out.push_back(r);
  return SimplicialComplex::from_face_set(d.ground_set(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& d, Face tau) {
  std::vector<Face> out;
  if (d.contains(tau))
    for (Face r : d.faces())
      if (d.contains(r | tau)) out.push_back(r);
  return SimplicialComplex::from_face_set(d.ground_set(), std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& d, Face tau) {
  std::vector<Face> out;
  for (Face r : d.faces())
    if (!(r & tau)) out.push_back(r);
  return SimplicialComplex::from_face_set(d.ground_set(), std::move(out));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  check_same_ground(a, b);
  std::vector<Face> out = a.faces();
  out.insert(out.end(), b.faces().begin(), b.faces().end());
  return SimplicialComplex::from_face_set(a.ground_set(), std::move(out));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, Face vertices) {
  std::vector<Face> out;
  for (Face r : d.faces())
    if (!(r & ~vertices)) out.push_back(r);
  return SimplicialComplex::from_face_set(d.ground_set(), std::move(out));
}

SimplicialComplex join_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> ground = a.ground_set();
  for (const auto& v : b.ground_set()) {
    if (std::find(ground.begin(), ground.end(), v) != ground.end())
      throw InputError("join of complexes with overlapping ground sets (vertex '" + v + "')");
    ground.push_back(v);
  }
  if (ground.size() > kMaxVertices) throw InputError("join exceeds 64 vertices");
  const int shift = static_cast<int>(a.ground_size());
  std::vector<Face> out;
  for (Face s : a.faces())
    for (Face r : b.faces()) out.push_back(s | (r << shift));
  return SimplicialComplex::from_face_set(std::move(ground), std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& d, const std::string& apex) {
  return join_of(d, SimplicialComplex::from_facets({apex}, {{apex}}));
}

SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& d) {
  if (d.is_void()) return d;
  const int top = d.dim();
  std::unordered_map<Face, int> count;
  for (Face f : d.faces_of_dim(top))
    for (int v : face_vertices(f)) ++count[f & ~vertex_face(v)];
  std::vector<Face> gens;
  for (auto [r, c] : count)
    if (c == 1) gens.push_back(r);
  return SimplicialComplex::from_generators(d.ground_set(), gens);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& d) {
  if (d.is_void()) throw InputError("barycentric subdivision of the void complex");
  std::vector<Face> cells;
  for (Face f : d.faces())
    if (f) cells.push_back(f);
  if (cells.size() > kMaxVertices) throw InputError("subdivision would exceed 64 vertices");
  std::vector<std::string> ground;
  std::unordered_map<Face, int> index;
  for (Face f : cells) {
    index[f] = static_cast<int>(ground.size());
    ground.push_back(d.face_label(f));
  }
  std::vector<Face> chains{0};
  std::function<void(Face, Face)> extend = [&](Face chain, Face last) {
    chains.push_back(chain);
    for (Face g : cells)
      if (g != last && (g & ~last) == 0) extend(chain | vertex_face(index[g]), g);
  };
  for (Face f : cells) extend(vertex_face(index[f]), f);
  return SimplicialComplex::from_face_set(std::move(ground), std::move(chains));
}

RelativeComplex::RelativeComplex(SimplicialComplex delta)
    : delta_(std::move(delta)), gamma_(SimplicialComplex::void_complex(delta_.ground_set())) {}

RelativeComplex::RelativeComplex(SimplicialComplex delta, SimplicialComplex gamma)
    : delta_(std::move(delta)), gamma_(std::move(gamma)) {
  check_same_ground(delta_, gamma_);
  for (Face f : gamma_.faces())
    if (!delta_.contains(f))
      throw InputError("gamma face " + gamma_.face_label(f) + " is not a face of delta");
}

std::vector<Face> RelativeComplex::faces() const {
  std::vector<Face> out;
  for (Face f : delta_.faces())
    if (!gamma_.contains(f)) out.push_back(f);
  return out;
}

bool RelativeComplex::is_void() const { return delta_.num_faces() == gamma_.num_faces(); }

int RelativeComplex::dim() const {
  int d = kVoidDim;
  for (Face f : delta_.faces())
    if (!gamma_.contains(f)) d = std::max(d, face_size(f) - 1);
  return d;
}

std::size_t RelativeComplex::max_face_size() const {
  int d = dim();
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1);
}

std::vector<Face> RelativeComplex::maximal_faces() const {
  std::vector<Face> out;
  for (Face f : delta_.facets())
    if (!gamma_.contains(f)) out.push_back(f);
  return out;
}

std::vector<Face> RelativeComplex::minimal_faces() const {
  std::vector<Face> out;
  for (Face f : faces()) {
    bool minimal = true;
    for (int v : face_vertices(f))
      if (contains(f & ~vertex_face(v))) minimal = false;
    if (minimal) out.push_back(f);
  }
  return out;
}

bool RelativeComplex::is_pure() const {
  auto fs = maximal_faces();
  return std::all_of(fs.begin(), fs.end(),
                     [&](Face f) { return face_size(f) == face_size(fs.front()); });
}

RelativeComplex relative_link(const RelativeComplex& psi, Face tau) {
  return RelativeComplex(link(psi.delta(), tau), link(psi.gamma(), tau));
}

RelativeComplex relative_star(const RelativeComplex& psi, Face tau) {
  return RelativeComplex(star(psi.delta(), tau), star(psi.gamma(), tau));
}

RelativeComplex open_star(const RelativeComplex& psi, Face tau) {
  SimplicialComplex st = star(psi.delta(), tau);
  return RelativeComplex(st, union_of(star(psi.gamma(), tau), deletion(st, tau)));
}

FaceNeighborhoods face_neighborhoods(const RelativeComplex& psi, Face tau) {
  if (!psi.delta().contains(tau))
    throw InputError("face " + psi.delta().face_label(tau) + " is not in delta");
  return {relative_link(psi, tau), relative_star(psi, tau), open_star(psi, tau),
          deletion(psi.delta(), tau)};
}

FVector f_h_vectors(const RelativeComplex& psi) {
  if (psi.is_void()) throw InputError("f-vector of the void complex is undefined");
  FVector out;
  out.dim = psi.dim();
  const int d = out.dim;
  out.f.assign(static_cast<std::size_t>(d + 2), 0);
  for (Face f : psi.faces()) ++out.f[static_cast<std::size_t>(face_size(f))];
  out.h.assign(static_cast<std::size_t>(d + 2), 0);
  for (int i = -1; i <= d; ++i) {
    // f_i x^{i+1} (1-x)^{d-i}
    const int m = d - i;
    for (int k = 0; k <= m; ++k) {
      std::int64_t c = binom(m, k) * ((k % 2) ? -1 : 1);
      out.h[static_cast<std::size_t>(i + 1 + k)] += out.f_at(i) * c;
    }
  }
  return out;
}

ChainComplex cochain_complex(const RelativeComplex& psi, const PrimeField& F) {
  ChainComplex cx;
  cx.lo = -1;
  const int d = std::max(psi.dim(), -1);
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(d + 2));
  std::unordered_map<Face, std::uint32_t> index;
  for (Face f : psi.faces()) {
    auto& bucket = by_dim[static_cast<std::size_t>(face_size(f))];
    index[f] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(f);
  }
  for (const auto& b : by_dim) cx.dims.push_back(b.size());
  const int n = static_cast<int>(psi.ground_size());
  for (int k = 0; k + 1 < static_cast<int>(by_dim.size()); ++k) {
    SparseMatrix m(by_dim[k + 1].size(), by_dim[k].size());
    for (std::size_t c = 0; c < by_dim[k].size(); ++c) {
      Face r = by_dim[k][c];
      for (int v = 0; v < n; ++v) {
        if (r & vertex_face(v)) continue;
        Face t = r | vertex_face(v);
        if (!psi.delta().contains(t)) continue;
        m.add(index.at(t), c, position_in(r, v) % 2 ? F.neg(1) : 1);
      }
    }
    m.compress(F);
    cx.differentials.push_back(std::move(m));
  }
  return cx;
}

BettiTable relative_cohomology_dims(const RelativeComplex& psi, const PrimeField& F) {
  if (psi.is_void()) return {{-1, 0}};
  return chain_homology_dims(F, cochain_complex(psi, F), false);
}

std::int64_t reduced_euler_characteristic(const RelativeComplex& psi) {
  std::int64_t chi = 0;
  for (Face f : psi.faces()) chi += (face_size(f) % 2) ? 1 : -1;  // dim = size - 1
  return chi;
}

// ---------------------------------------------------------------------------
// Builtins

const std::vector<std::vector<int>>& torus7_facets() {
  static const std::vector<std::vector<int>> facets = [] {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < 7; ++i) {
      out.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
      out.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    for (auto& f : out) std::sort(f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
  }();
  return facets;
}

const std::vector<std::vector<int>>& rp2_6_facets() {
  static const std::vector<std::vector<int>> facets = {
      {1, 2, 3}, {1, 2, 6}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
      {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  return facets;
}

const std::vector<std::vector<int>>& moebius_facets() {
  static const std::vector<std::vector<int>> facets = {
      {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}};
  return facets;
}

namespace {

std::vector<std::string> numbered(int n, int from = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(from + i));
  return out;
}

SimplicialComplex from_int_facets(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Face> gens;
  for (const auto& f : facets) {
    Face m = 0;
    for (int v : f) m |= vertex_face(v - 1);
    gens.push_back(m);
  }
  return SimplicialComplex::from_generators(numbered(n), gens);
}

SimplicialComplex skeleton_of_simplex(int n_vertices, int facet_size) {
  std::vector<Face> gens;
  const Face all = (Face{1} << n_vertices) - 1;
  for (Face s = 0; s <= all; ++s)
    if (face_size(s) == facet_size) gens.push_back(s);
  return SimplicialComplex::from_generators(numbered(n_vertices), gens);
}

struct ParsedName {
  std::string base;
  int param = -1;
};

ParsedName parse_builtin_name(const std::string& name) {
  ParsedName out;
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw InputError("malformed builtin name '" + name + "'");
    out.base = name.substr(0, open);
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit))
      throw InputError("malformed builtin parameter in '" + name + "'");
    out.param = std::stoi(arg);
    return out;
  }
  auto us = name.find_last_of('_');
  if (us != std::string::npos && us + 1 < name.size() &&
      std::all_of(name.begin() + static_cast<long>(us) + 1, name.end(), ::isdigit)) {
    std::string head = name.substr(0, us);
    if (head != "rp2") {
      out.base = head;
      out.param = std::stoi(name.substr(us + 1));
      return out;
    }
  }
  out.base = name;
  return out;
}

void require_param(const ParsedName& p, int lo, int hi) {
  if (p.param < lo || p.param > hi)
    throw InputError("builtin " + p.base + " needs a parameter in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
}

}  // namespace

RelativeComplex builtin_complex(const std::string& name) {
  const ParsedName p = parse_builtin_name(name);
  if (p.base == "torus7") return RelativeComplex(from_int_facets(7, torus7_facets()));
  if (p.base == "rp2_6") return RelativeComplex(from_int_facets(6, rp2_6_facets()));
  if (p.base == "moebius") return RelativeComplex(from_int_facets(5, moebius_facets()));
  if (p.base == "two_points") return RelativeComplex(from_int_facets(2, {{1}, {2}}));
  if (p.base == "simplex") {
    require_param(p, 0, 20);
    return RelativeComplex(skeleton_of_simplex(p.param + 1, p.param + 1));
  }
  if (p.base == "boundary_simplex") {
    require_param(p, 0, 20);
    return RelativeComplex(skeleton_of_simplex(p.param + 1, p.param));
  }
  if (p.base == "cross_polytope") {
    require_param(p, 1, 12);
    std::vector<std::string> ground;
    for (int i = 1; i <= p.param; ++i) {
      ground.push_back("+" + std::to_string(i));
      ground.push_back("-" + std::to_string(i));
    }
    std::vector<Face> gens;
    for (Face signs = 0; signs < (Face{1} << p.param); ++signs) {
      Face f = 0;
      for (int i = 0; i < p.param; ++i) f |= vertex_face(2 * i + ((signs >> i) & 1));
      gens.push_back(f);
    }
    return RelativeComplex(SimplicialComplex::from_generators(ground, gens));
  }
  if (p.base == "disk_with_induced_boundary") {
    require_param(p, 1, 20);
    SimplicialComplex sphere = skeleton_of_simplex(p.param + 1, p.param);
    SimplicialComplex disk = cone(sphere, "c");
    std::vector<Face> faces = sphere.faces();
    return RelativeComplex(disk, SimplicialComplex::from_face_set(disk.ground_set(), faces));
  }
  if (p.base == "path") {
    require_param(p, 1, 60);
    std::vector<std::vector<int>> edges;
    for (int i = 1; i <= p.param; ++i) edges.push_back({i, i + 1});
    return RelativeComplex(from_int_facets(p.param + 1, edges));
  }
  throw InputError("unknown builtin complex '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"simplex(k)", "boundary_simplex(k)", "cross_polytope(k)", "torus7", "rp2_6",
          "moebius", "disk_with_induced_boundary(k)", "two_points", "path(k)"};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string canonical_text(const RelativeComplex& psi) {
  std::ostringstream os;
  os << "V:";
  for (std::size_t i = 0; i < psi.ground_size(); ++i) os << (i ? "," : "") << psi.ground_set()[i];
  auto part = [&](const char* tag, const SimplicialComplex& c) {
    os << ";" << tag << ":";
    if (c.is_void()) {
      os << "void";
      return;
    }
    auto fs = c.facets();
    std::sort(fs.begin(), fs.end());
    for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? "," : "") << std::hex << fs[i] << std::dec;
  };
  part("D", psi.delta());
  part("G", psi.gamma());
  return os.str();
}

std::string input_hash(const RelativeComplex& psi) { return fnv1a_hex(canonical_text(psi)); }

}  // namespace srlab
