#pragma once

// JSON encoding of instances, fans, A-infinity algebras and certificates.

#include <string>
#include <vector>

#include "json.hpp"

#include "cocert/hochschild.hpp"
#include "cocert/qh.hpp"
#include "cocert/superpotential.hpp"

namespace cocert {

using json = nlohmann::json;

/// Parses text, turning syntax errors into ParseError with line and column.
inline json parse_json_text(const std::string& text, const std::string& source = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

namespace detail {

template <class T>
T get_field(const json& j, const char* key, const std::string& what) {
  require(j.is_object(), ErrorKind::Parse, what + ": expected an object");
  require(j.contains(key), ErrorKind::Parse, what + ": missing key \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, what + ": bad value for \"" + key + "\": " + e.what());
  }
}

}  // namespace detail

inline Scalar parse_scalar(const std::string& s, const Field& f) {
  const LaurentPoly c = parse_laurent(s, {}, f);
  return c.coeff(Exponent{});
}

inline json scalar_json(const Scalar& s) { return s.str(); }

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

inline Vector vector_from_json(const json& j, const Field& f) {
  require(j.is_array(), ErrorKind::Parse, "expected an array of scalars");
  Vector v;
  for (const auto& e : j) v.push_back(parse_scalar(e.is_string() ? e.get<std::string>() : e.dump(), f));
  return v;
}

inline json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

inline Matrix matrix_from_json(const json& j, const Field& f) {
  require(j.is_array(), ErrorKind::Parse, "expected an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, f));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return rows.empty() ? Matrix(f, 0, 0) : Matrix::from_rows(f, rows, cols);
}

// ---- instances and fans

inline json to_json(const ToricInstance& i) {
  json j{{"family", i.family}, {"n", i.n}, {"char", i.characteristic}};
  if (i.family != "CPn") {
    j["k"] = i.k;
    j["a"] = i.a;
  }
  return j;
}

inline ToricInstance instance_from_json(const json& j) {
  ToricInstance i;
  i.family = j.is_object() && j.contains("family") ? detail::get_field<std::string>(j, "family", "instance") : "picard2";
  i.n = detail::get_field<long>(j, "n", "instance");
  if (i.family != "CPn") {
    i.k = detail::get_field<long>(j, "k", "instance");
    i.a = detail::get_field<std::vector<long>>(j, "a", "instance");
  }
  i.characteristic = j.contains("char") ? detail::get_field<std::uint64_t>(j, "char", "instance") : 2;
  return i;
}

inline json to_json(const FanData& f) { return {{"name", f.name}, {"dim", f.dim}, {"normals", f.normals}}; }

inline FanData fan_from_json(const json& j) {
  FanData f;
  f.name = j.contains("name") ? detail::get_field<std::string>(j, "name", "fan") : "";
  f.dim = detail::get_field<std::size_t>(j, "dim", "fan");
  f.normals = detail::get_field<std::vector<std::vector<long>>>(j, "normals", "fan");
  validate_fan(f);
  return f;
}

// ---- verdicts and certificates

inline json to_json(const TraceEntry& t) { return {{"claim", t.claim}, {"status", t.status}, {"ref", t.ref}}; }

inline json to_json(const Verdict& v) {
  json tr = json::array();
  for (const auto& t : v.trace) tr.push_back(to_json(t));
  return {{"instance", to_json(v.instance)},
          {"co0_injective", v.co0_injective},
          {"costar_injective", v.costar_injective},
          {"split_generates", v.split_generates},
          {"qh_dim", v.qh_dim},
          {"ker_f_dim", v.ker_f_dim},
          {"trace", tr}};
}

inline Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.instance = instance_from_json(detail::get_field<json>(j, "instance", "verdict"));
  v.co0_injective = detail::get_field<bool>(j, "co0_injective", "verdict");
  v.costar_injective = detail::get_field<bool>(j, "costar_injective", "verdict");
  v.split_generates = detail::get_field<bool>(j, "split_generates", "verdict");
  v.qh_dim = detail::get_field<std::size_t>(j, "qh_dim", "verdict");
  v.ker_f_dim = detail::get_field<std::size_t>(j, "ker_f_dim", "verdict");
  for (const auto& t : detail::get_field<json>(j, "trace", "verdict"))
    v.trace.push_back({detail::get_field<std::string>(t, "claim", "trace"),
                       detail::get_field<std::string>(t, "status", "trace"),
                       detail::get_field<std::string>(t, "ref", "trace")});
  return v;
}

inline json to_json(const Certificate& c) {
  json hs = json::array();
  for (const auto& h : c.hypotheses) hs.push_back({{"name", h.name}, {"status", h.status}, {"detail", h.detail}});
  return {{"hypotheses", hs}, {"conclusion", c.conclusion}, {"axioms", c.axioms}, {"issued", c.issued}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  for (const auto& h : detail::get_field<json>(j, "hypotheses", "certificate"))
    c.hypotheses.push_back({detail::get_field<std::string>(h, "name", "hypothesis"),
                            detail::get_field<std::string>(h, "status", "hypothesis"),
                            detail::get_field<std::string>(h, "detail", "hypothesis")});
  c.conclusion = detail::get_field<std::string>(j, "conclusion", "certificate");
  c.axioms = detail::get_field<std::vector<std::string>>(j, "axioms", "certificate");
  c.issued = detail::get_field<bool>(j, "issued", "certificate");
  return c;
}

// ---- A-infinity algebras

/// {"char", "graded", "basis":[{"name","deg"}], "mu":[{"arity", "entries":[{"inputs":[..], "output":{name: c}}]}], "unit"}
inline json to_json(const AInfAlgebra& A) {
  json basis = json::array();
  for (const auto& b : A.basis()) basis.push_back({{"name", b.name}, {"deg", b.deg}});
  auto named = [&](const Vector& v) {
    json o = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) o[A.basis()[i].name] = v[i].str();
    return o;
  };
  json mu = json::array();
  for (const auto& [k, flat] : A.all_mu()) {
    json entries = json::array();
    const std::size_t d = A.dim();
    for (std::size_t c = 0; c < ipow(d, k); ++c) {
      const auto in = detail::decode_tuple(c, d, k);
      const Vector out = A.mu_basis(in);
      if (is_zero(out)) continue;
      json names = json::array();
      for (auto i : in) names.push_back(A.basis()[i].name);
      entries.push_back({{"inputs", names}, {"output", named(out)}});
    }
    mu.push_back({{"arity", k}, {"entries", entries}});
  }
  json j{{"char", A.field().characteristic()}, {"graded", A.graded()}, {"basis", basis}, {"mu", mu}};
  if (A.unit()) j["unit"] = named(*A.unit());
  return j;
}

inline AInfAlgebra ainf_from_json(const json& j) {
  const auto p = detail::get_field<std::uint64_t>(j, "char", "algebra");
  const Field f(p);
  std::vector<BasisElement> basis;
  for (const auto& b : detail::get_field<json>(j, "basis", "algebra"))
    basis.push_back({detail::get_field<std::string>(b, "name", "basis"), detail::get_field<int>(b, "deg", "basis")});
  const bool graded = j.contains("graded") ? detail::get_field<bool>(j, "graded", "algebra") : true;
  AInfAlgebra A(f, basis, graded);
  auto vec = [&](const json& o) {
    require(o.is_object(), ErrorKind::Parse, "algebra: output must be an object name -> coefficient");
    Vector v = zero_vector(f, A.dim());
    for (const auto& [name, c] : o.items())
      v[A.index_of(name)] += parse_scalar(c.is_string() ? c.get<std::string>() : c.dump(), f);
    return v;
  };
  for (const auto& m : detail::get_field<json>(j, "mu", "algebra")) {
    const auto k = detail::get_field<std::size_t>(m, "arity", "mu");
    A.declare_mu(k);
    if (!m.contains("entries")) continue;
    for (const auto& e : m.at("entries")) {
      std::vector<std::size_t> in;
      for (const auto& name : detail::get_field<std::vector<std::string>>(e, "inputs", "mu entry"))
        in.push_back(A.index_of(name));
      require(in.size() == k, ErrorKind::Parse, "mu entry: inputs do not match the arity");
      A.set_mu(in, A.mu_basis(in) + vec(detail::get_field<json>(e, "output", "mu entry")));
    }
  }
  if (j.contains("unit")) A.set_unit(vec(j.at("unit")));
  return A;
}

// ---- fibre reports

inline json point_json(const Point& p) {
  json a = json::array();
  for (const auto& s : p) a.push_back(s.str());
  return a;
}

inline json to_json(const FibreReport& r) {
  json pts = json::array();
  for (const auto& c : r.points) {
    json e{{"rho", point_json(c.rho)},
           {"value", c.value.str()},
           {"hessian", matrix_json(c.hessian)},
           {"rank", c.rank},
           {"type", to_string(c.type)},
           {"detail", c.detail},
           {"local_dim", c.local_dim},
           {"local_basis", c.local_basis}};
    if (c.kernel_direction) e["kernel_direction"] = vector_json(*c.kernel_direction);
    pts.push_back(e);
  }
  json vals = json::array();
  for (const auto& v : r.values) {
    json ws = json::array();
    for (const auto& w : v.witnesses) {
      json hs{{"solvable", w.hessian_star.solvable()}};
      if (w.hessian_star.certificate) hs["certificate"] = vector_json(*w.hessian_star.certificate);
      if (w.hessian_star.solution) hs["solution"] = vector_json(*w.hessian_star.solution);
      ws.push_back({{"P", matrix_json(w.congruence.P)},
                    {"D", matrix_json(w.congruence.D)},
                    {"kernel_index", w.kernel_index},
                    {"hessian_star", hs},
                    {"clifford_checked", w.clifford_checked},
                    {"clifford_star_infeasible", w.clifford_star_infeasible}});
    }
    vals.push_back({{"value", v.value.str()},
                    {"points", v.points},
                    {"summand_dim", v.summand_dim},
                    {"all_morse", v.all_morse},
                    {"co0_injective", v.co0_injective},
                    {"costar_certified", v.costar_certified},
                    {"split_generates", v.split_generates},
                    {"status", v.status},
                    {"witnesses", ws}});
  }
  return {{"char", r.W.field().characteristic()},
          {"vars", r.W.vars()},
          {"W", r.W.str()},
          {"jacobian_dim", r.jacobian_dim},
          {"points", pts},
          {"values", vals},
          {"local_dims_sum_to_dim", r.local_dims_sum_to_dim},
          {"eigen_crosscheck", r.eigen_crosscheck},
          {"axioms", r.axioms}};
}

inline FibreReport fibre_report_from_json(const json& j) {
  const Field f(detail::get_field<std::uint64_t>(j, "char", "report"));
  FibreReport r;
  r.W = parse_laurent(detail::get_field<std::string>(j, "W", "report"),
                      detail::get_field<std::vector<std::string>>(j, "vars", "report"), f);
  r.jacobian_dim = detail::get_field<std::size_t>(j, "jacobian_dim", "report");
  for (const auto& e : detail::get_field<json>(j, "points", "report")) {
    CritReport c;
    c.rho = vector_from_json(e.at("rho"), f);
    c.value = parse_scalar(detail::get_field<std::string>(e, "value", "point"), f);
    c.hessian = matrix_from_json(e.at("hessian"), f);
    c.rank = detail::get_field<std::size_t>(e, "rank", "point");
    const auto t = detail::get_field<std::string>(e, "type", "point");
    c.type = t == "Morse" ? CritType::Morse : t == "A2" ? CritType::A2 : CritType::Other;
    c.detail = detail::get_field<std::string>(e, "detail", "point");
    c.local_dim = detail::get_field<std::size_t>(e, "local_dim", "point");
    c.local_basis = detail::get_field<std::vector<std::string>>(e, "local_basis", "point");
    if (e.contains("kernel_direction")) c.kernel_direction = vector_from_json(e.at("kernel_direction"), f);
    r.points.push_back(std::move(c));
  }
  for (const auto& e : detail::get_field<json>(j, "values", "report")) {
    ValueVerdict v;
    v.value = parse_scalar(detail::get_field<std::string>(e, "value", "value"), f);
    v.points = detail::get_field<std::vector<std::size_t>>(e, "points", "value");
    v.summand_dim = detail::get_field<std::size_t>(e, "summand_dim", "value");
    v.all_morse = detail::get_field<bool>(e, "all_morse", "value");
    v.co0_injective = detail::get_field<bool>(e, "co0_injective", "value");
    v.costar_certified = detail::get_field<bool>(e, "costar_certified", "value");
    v.split_generates = detail::get_field<bool>(e, "split_generates", "value");
    v.status = detail::get_field<std::string>(e, "status", "value");
    for (const auto& w : e.at("witnesses")) {
      A2Witness a;
      a.congruence = {matrix_from_json(w.at("P"), f), matrix_from_json(w.at("D"), f)};
      a.kernel_index = detail::get_field<std::size_t>(w, "kernel_index", "witness");
      const json& hs = w.at("hessian_star");
      if (hs.contains("solution")) a.hessian_star.solution = vector_from_json(hs.at("solution"), f);
      if (hs.contains("certificate")) a.hessian_star.certificate = vector_from_json(hs.at("certificate"), f);
      a.clifford_checked = detail::get_field<bool>(w, "clifford_checked", "witness");
      a.clifford_star_infeasible = detail::get_field<bool>(w, "clifford_star_infeasible", "witness");
      v.witnesses.push_back(std::move(a));
    }
    r.values.push_back(std::move(v));
  }
  r.local_dims_sum_to_dim = detail::get_field<bool>(j, "local_dims_sum_to_dim", "report");
  r.eigen_crosscheck = detail::get_field<bool>(j, "eigen_crosscheck", "report");
  r.axioms = detail::get_field<std::vector<std::string>>(j, "axioms", "report");
  return r;
}

}  // namespace cocert
