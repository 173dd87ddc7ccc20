#pragma once

#include "kleinian/appendix.hpp"
#include "kleinian/corner.hpp"
#include "kleinian/hilbert.hpp"
#include "kleinian/mckay.hpp"
#include "kleinian/representation.hpp"
#include "kleinian/stability.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON payloads. Rationals are strings "p/q" (or "p"); the framing vertex is
// the string "inf". Objects are nlohmann::ordered_json so key order is stable.

namespace kleinian::io {

using Json = nlohmann::ordered_json;

inline DomainError bad_payload(const std::string& what) { return DomainError("malformed JSON payload: " + what); }

inline Json vertex_json(Vertex v) { return v == kInfinity ? Json("inf") : Json(v); }

inline Vertex vertex_from_json(const Json& j) {
  if (j.is_string()) return parse_vertex(j.get<std::string>());
  if (j.is_number_integer()) return j.get<int>();
  throw bad_payload("vertex must be an integer or \"inf\"");
}

inline Json matrix_json(const RMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw bad_payload("rational must be a string \"p/q\" or an integer");
}

/// Shape is fixed by the caller; rows == 0 means an empty list.
inline RMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw bad_payload("expected " + std::to_string(rows) + " matrix rows");
  RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw bad_payload("expected " + std::to_string(cols) + " matrix columns");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

inline Json vector_json(const RVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline RVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw bad_payload("expected an array of rationals");
  RVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

// ---- quivers ----

inline Json to_json(const FramedMcKayQuiver& q) {
  Json edges = Json::array();
  for (const auto& e : q.edges()) edges.push_back(Json::array({vertex_json(e.u), vertex_json(e.v), e.multiplicity}));
  Json out{{"type", q.type().family_letter()}, {"rank", q.rank()}, {"edges", edges}, {"delta", q.delta()}};
  if (q.arrows().front().epsilon < 0) out["epsilon_flipped"] = true;
  return out;
}

/// Rebuilds from (type, rank) and checks the stored edges and delta agree.
inline FramedMcKayQuiver quiver_from_json(const Json& j) {
  try {
    const DynkinType t = DynkinType::parse(j.at("type").get<std::string>() + std::to_string(j.at("rank").get<int>()));
    FramedMcKayQuiver q = build_framed_quiver(t);
    if (j.value("epsilon_flipped", false)) q = q.with_flipped_epsilon();
    Json expected = to_json(q);
    if (j.at("edges") != expected["edges"] || j.at("delta") != expected["delta"])
      throw bad_payload("edges/delta disagree with the canonical " + t.name() + " quiver");
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw bad_payload(e.what());
  }
}

// ---- representations ----

inline Json to_json(const QuiverRepresentation& rep) {
  Json dims = Json::object();
  for (Vertex v : rep.quiver().vertices()) dims[vertex_name(v)] = rep.dims()[v];
  Json mats = Json::object();
  for (std::size_t a = 0; a < rep.mats().size(); ++a) mats[rep.quiver().arrow_id(a)] = matrix_json(rep.mat(a));
  return {{"quiver", to_json(rep.quiver())}, {"dims", dims}, {"mats", mats}};
}

/// Missing arrows default to zero maps.
inline QuiverRepresentation representation_from_json(const Json& j) {
  try {
    const FramedMcKayQuiver q = quiver_from_json(j.at("quiver"));
    DimensionVector dims(q.rank());
    for (const auto& [key, value] : j.at("dims").items()) {
      const Vertex v = parse_vertex(key);
      if (!q.has_vertex(v)) throw bad_payload("dims names unknown vertex " + key);
      dims.set(v, value.get<long>());
    }
    std::vector<RMatrix> mats;
    for (const auto& a : q.arrows())
      mats.emplace_back(static_cast<std::size_t>(dims[a.head]), static_cast<std::size_t>(dims[a.tail]));
    for (const auto& [key, value] : j.at("mats").items()) {
      const auto a = q.find_arrow(key);
      if (!a) throw bad_payload("unknown arrow id " + key);
      mats[*a] = matrix_from_json(value, mats[*a].rows(), mats[*a].cols());
    }
    return {q, std::move(dims), std::move(mats)};
  } catch (const nlohmann::json::exception& e) {
    throw bad_payload(e.what());
  }
}

// ---- corner modules ----

inline Json to_json(const CornerModuleQ0& m) {
  Json a = Json::array();
  for (const auto& x : m.A()) a.push_back(matrix_json(x));
  return {{"n", m.n()}, {"w", vector_json(m.w().col(0))}, {"wstar", vector_json(m.wstar().row(0))}, {"A", a}};
}

inline CornerModuleQ0 corner_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const RVector w = vector_from_json(j.at("w"));
    const RVector wstar = vector_from_json(j.at("wstar"));
    if (w.size() != n || wstar.size() != n) throw bad_payload("w and wstar must have n entries");
    const Json& a = j.at("A");
    if (!a.is_array() || a.size() != 3) throw bad_payload("A must hold three matrices");
    RMatrix ws(1, n);
    for (std::size_t k = 0; k < n; ++k) ws(0, k) = wstar[k];
    return CornerModuleQ0(RMatrix::column(w), ws,
                          {matrix_from_json(a[0], n, n), matrix_from_json(a[1], n, n), matrix_from_json(a[2], n, n)});
  } catch (const nlohmann::json::exception& e) {
    throw bad_payload(e.what());
  }
}

// ---- staircases ----

inline Json cells_json(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(Json::array({c.i, c.j}));
  return out;
}

inline std::vector<Cell> cells_from_json(const Json& j) {
  if (!j.is_array()) throw bad_payload("cells must be an array");
  std::vector<Cell> cells;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw bad_payload("cell must be [i,j]");
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return cells;
}

inline Json to_json(const Staircase& s) { return {{"cells", cells_json(s.cells())}}; }

inline Staircase staircase_from_json(const Json& j) {
  try {
    return Staircase(cells_from_json(j.at("cells")));
  } catch (const nlohmann::json::exception& e) {
    throw bad_payload(e.what());
  }
}

inline Json to_json(const MonoidStaircase& s) { return {{"r", s.r()}, {"cells", cells_json(s.cells())}}; }

inline MonoidStaircase monoid_staircase_from_json(const Json& j) {
  try {
    return MonoidStaircase(j.at("r").get<int>(), cells_from_json(j.at("cells")));
  } catch (const nlohmann::json::exception& e) {
    throw bad_payload(e.what());
  }
}

// ---- verification reports ----

inline Json to_json(const VerificationReport& r) {
  Json unknowns = Json::array();
  for (Vertex v : r.unknowns) unknowns.push_back(v);
  Json imax = Json::object(), lmax = Json::object();
  for (std::size_t k = 0; k < r.unknowns.size(); ++k) {
    imax[std::to_string(r.unknowns[k])] = r.integer_max[k];
    lmax[std::to_string(r.unknowns[k])] = to_string(r.lp_max[k]);
  }
  return {{"type", r.type.name()},      {"n", r.n},           {"J", r.J.vertices()},
          {"status", r.status_string()}, {"unknowns", unknowns}, {"witnesses", r.witnesses},
          {"integer_max", imax},         {"lp_max", lmax},     {"points", r.point_count}};
}

inline VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r{DynkinType::parse(j.at("type").get<std::string>()),
                         j.at("n").get<long>(),
                         Face::from_vertices(j.at("J").get<std::vector<Vertex>>()),
                         VerificationReport::Status::Verified,
                         j.at("unknowns").get<std::vector<Vertex>>(),
                         j.at("witnesses").get<std::vector<std::vector<long>>>(),
                         {},
                         {},
                         j.at("points").get<std::size_t>()};
    const std::string status = j.at("status").get<std::string>();
    if (status == "counterexample") r.status = VerificationReport::Status::Counterexample;
    else if (status != "verified") throw bad_payload("unknown status " + status);
    if (r.verified() != r.witnesses.empty()) throw bad_payload("status disagrees with witnesses");
    for (Vertex v : r.unknowns) {
      r.integer_max.push_back(j.at("integer_max").at(std::to_string(v)).get<long>());
      r.lp_max.push_back(parse_rational(j.at("lp_max").at(std::to_string(v)).get<std::string>()));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw bad_payload(e.what());
  }
}

inline Json to_json(const std::vector<VerificationReport>& reports) {
  Json list = Json::array();
  std::size_t ok = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    ok += r.verified() ? 1 : 0;
  }
  return {{"verified", ok}, {"total", reports.size()}, {"reports", list}};
}

// ---- face poset ----

inline Json to_json(const FacePoset& p) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : p.nodes) nodes.push_back({{"J", n.face.vertices()}, {"rank", n.rank}, {"label", n.label}});
  for (const auto& e : p.edges) edges.push_back(Json::array({p.nodes[e.from].face.vertices(), p.nodes[e.to].face.vertices()}));
  return {{"type", p.type.name()}, {"nodes", nodes}, {"edges", edges}};
}

} // namespace kleinian::io
