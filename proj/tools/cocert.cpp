// cocert command-line front end.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cocert/json_io.hpp"

using namespace cocert;

namespace {

struct Options {
  std::string format = "table";
  long characteristic = -1;
  std::uint64_t seed = 20240229;
  std::size_t guard_dim = 20000;
  std::uint64_t guard_scan = 10'000'000;
};

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> w(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      for (std::size_t i = 0; i < rows_[ri].size(); ++i)
        os << std::left << std::setw(static_cast<int>(w[i]) + 2) << rows_[ri][i];
      os << '\n';
      if (ri == 0) {
        std::size_t total = 0;
        for (auto x : w) total += x + 2;
        os << std::string(total, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Field field_from(const Options& o, std::uint64_t fallback) {
  return Field(o.characteristic < 0 ? fallback : static_cast<std::uint64_t>(o.characteristic));
}

void emit(const Options& o, const json& j, const std::function<void()>& table) {
  if (o.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    table();
}

// ---- rp-report

int cmd_rp_report(const Options& o, long n_max) {
  require(n_max >= 1 && n_max <= 64, ErrorKind::InvalidArgument, "n-max must lie in 1..64");
  require(o.characteristic < 0 || o.characteristic == 2, ErrorKind::WrongCharacteristic,
          "rp-report works in characteristic 2");
  json rows = json::array();
  Table t({"n", "dim QH", "dim ker F", "CO0 inj", "CO* inj", "split-gen", "non-formal"});
  for (long n = 1; n <= n_max; ++n) {
    ToricInstance inst;
    inst.family = "CPn";
    inst.n = n;
    const Verdict v = verdict_real_lagrangian(inst);
    std::string nf = "-";
    json row = to_json(v);
    if (n % 4 == 1) {
      const MonicAlgebra alg(UniPoly::sparse(Field(2), {0, static_cast<std::size_t>(n + 1)}));
      const Certificate c = nonformality_certificate(alg, 1, true);
      nf = c.issued ? "certified" : "refused";
      row["nonformality"] = to_json(c);
    }
    rows.push_back(row);
    t.add({std::to_string(n), std::to_string(v.qh_dim), std::to_string(v.ker_f_dim), yn(v.co0_injective),
           yn(v.costar_injective), yn(v.split_generates), nf});
  }
  emit(o, json{{"command", "rp-report"}, {"rows", rows}}, [&] { t.print(std::cout); });
  return 0;
}

// ---- picard2

int cmd_picard2(const Options& o, const std::string& file, long n, long k, std::vector<long> a) {
  ToricInstance inst;
  if (!file.empty()) {
    inst = instance_from_json(parse_json_text(read_file(file), file));
  } else {
    require(n > 0, ErrorKind::InvalidArgument, "give an instance file or --n/--k/--a");
    inst.n = n;
    inst.k = k;
    inst.a = std::move(a);
  }
  if (o.characteristic >= 0) inst.characteristic = static_cast<std::uint64_t>(o.characteristic);
  inst.validate();

  json out{{"command", "picard2"}, {"instance", to_json(inst)}};
  json hyp = json::array();
  auto check = [&](const std::string& name, bool ok) { hyp.push_back({{"hypothesis", name}, {"holds", ok}}); };
  bool all_odd = true;
  for (long ai : inst.a) all_odd = all_odd && ai % 2 == 1;
  const long m = inst.n - inst.k + 1;
  check("Fano: sum a_i <= n-k-1", true);
  check("minimal Chern number >= 2", inst.minimal_chern() >= 2);
  check("all a_i odd", all_odd);
  check("n-k+1 odd (injective CO^0 branch)", m % 2 == 1);
  const auto bad = even_case_violations(inst);
  check("n-k+1 even, k even, a_i in equal pairs (CO^* branch)", bad.empty());
  out["hypotheses"] = hyp;
  out["minimal_chern"] = inst.minimal_chern();

  const QhPresentation qh = qh_picard2(inst);
  out["qh_dim"] = qh.ring->dim();
  out["groebner_verified"] = groebner_verified(*qh.ring);
  json phi_j = nullptr;
  if (bad.empty()) {
    const RingElement s = seidel_picard2(qh, inst);
    const auto [r, q, p] = even_case_params(inst);
    json sj{{"seidel", s.str()}, {"squares_to_one", s.pow(2).is_one()}, {"r", r}, {"q", q}, {"p", p}};
    const PhiIso phi = build_phi(qh, inst);
    const auto ids = phi_identities(phi, inst);
    const auto c = divide_by_V(phi, s + qh.ring->element("1"));
    phi_j = {{"g", phi.g},
             {"alpha", phi.alpha},
             {"beta", phi.beta},
             {"V", phi.V.str("u")},
             {"multiplicative", true},
             {"phi(u^(p/g)) = y", ids.first},
             {"phi(u^(2qr/g)) = x^-1", ids.second},
             {"seidel_plus_one_is_unit_times_V", c.has_value() && is_invertible(*c)}};
    if (c) phi_j["unit"] = c->str();
    out["seidel"] = sj;
  }
  out["phi"] = phi_j;
  const Verdict v = verdict_real_lagrangian(inst);
  out["verdict"] = to_json(v);
  for (const auto& e : v.trace)
    if (e.status == "failed") std::cerr << "warning: check failed: " << e.claim << " (" << e.ref << ")\n";

  emit(o, out, [&] {
    std::cout << "X(" << inst.n << "," << inst.k << ",(";
    for (std::size_t i = 0; i < inst.a.size(); ++i) std::cout << (i ? "," : "") << inst.a[i];
    std::cout << "))  minimal Chern " << inst.minimal_chern() << "  dim QH " << qh.ring->dim() << "\n\n";
    Table h({"hypothesis", "holds"});
    for (const auto& e : hyp) h.add({e["hypothesis"].get<std::string>(), yn(e["holds"].get<bool>())});
    h.print(std::cout);
    if (!phi_j.is_null()) {
      std::cout << "\nSeidel element " << out["seidel"]["seidel"].get<std::string>() << ", V(u) = "
                << phi_j["V"].get<std::string>() << ", phi checks "
                << yn(phi_j["phi(u^(p/g)) = y"].get<bool>() && phi_j["phi(u^(2qr/g)) = x^-1"].get<bool>() &&
                      phi_j["seidel_plus_one_is_unit_times_V"].get<bool>())
                << "\n";
    }
    std::cout << '\n';
    Table tr({"status", "claim", "ref"});
    for (const auto& e : v.trace) tr.add({e.status, e.claim, e.ref});
    tr.print(std::cout);
    std::cout << "\nCO0 injective: " << yn(v.co0_injective) << "   CO* injective: " << yn(v.costar_injective)
              << "   split-generates: " << yn(v.split_generates) << '\n';
  });
  return 0;
}

// ---- fibre

int cmd_fibre(const Options& o, const std::string& file) {
  const FanData fan = fan_from_json(parse_json_text(read_file(file), file));
  const Field f = field_from(o, 7);
  const LaurentPoly W = potential_from_fan(fan, f);
  const FibreReport rep = split_generation_verdict(W, o.guard_scan, o.guard_dim);
  json j = to_json(rep);
  j["command"] = "fibre";
  j["fan"] = to_json(fan);
  emit(o, j, [&] {
    std::cout << fan.name << " over " << (f.characteristic() ? "GF(" + std::to_string(f.characteristic()) + ")" : "QQ")
              << ": W = " << W.str() << ", dim Jac = " << rep.jacobian_dim << "\n\n";
    Table t({"point", "value", "rank", "type", "local dim", "local basis"});
    for (const auto& c : rep.points) {
      std::string p = "(", b;
      for (std::size_t i = 0; i < c.rho.size(); ++i) p += (i ? "," : "") + c.rho[i].str();
      for (std::size_t i = 0; i < c.local_basis.size(); ++i) b += (i ? " " : "") + c.local_basis[i];
      t.add({p + ")", c.value.str(), std::to_string(c.rank), to_string(c.type), std::to_string(c.local_dim), b});
    }
    t.print(std::cout);
    std::cout << '\n';
    Table v({"value", "points", "CO0 inj", "CO* cert", "split-gen", "status"});
    for (const auto& vv : rep.values)
      v.add({vv.value.str(), std::to_string(vv.points.size()), yn(vv.co0_injective), yn(vv.costar_certified),
             yn(vv.split_generates), vv.status});
    v.print(std::cout);
    std::cout << "\neigendecomposition of W agrees with grouping: " << yn(rep.eigen_crosscheck) << '\n';
  });
  return 0;
}

// ---- circle

json circle_json(char config) {
  const AInfAlgebra A = circle_model(config);
  const Field f(2);
  const RelationCheck rc = check_ainf_relations(A, 4);
  const Vector x{f.one(), f.one()};
  const MasseyResult m = massey_triple(A, x);
  HochschildCochain h = HochschildCochain::zero(f, 2, 1, 0);
  h.set(2, {1}, unit_vector(f, 2, 0));
  const CoboundaryResult cb = is_coboundary_through_length(A, h, 1, {unit_cochain(A, 1)});
  json terms = json::array();
  for (const auto& [in, v] : m.terms) {
    std::string s;
    for (auto i : in) s += (s.empty() ? "" : ",") + A.basis()[i].name;
    terms.push_back({{"inputs", s}, {"value", vector_json(v)}});
  }
  json j{{"config", std::string(1, config)},
         {"algebra", to_json(A)},
         {"relations_hold_to_arity_4", rc.ok},
         {"massey_value", vector_json(m.value)},
         {"massey_terms", terms},
         {"massey_nontrivial", m.nontrivial},
         {"co1_is_coboundary", cb.is_coboundary}};
  if (!rc.ok) {
    json in = json::array();
    for (auto i : rc.inputs) in.push_back(A.basis()[i].name);
    j["relation_failure"] = {{"arity", rc.arity}, {"inputs", in}, {"value", vector_json(rc.value)}};
  }
  if (cb.certificate) j["non_coboundary_certificate"] = vector_json(*cb.certificate);
  return j;
}

std::string named_vector(const json& v) {
  const std::vector<std::string> names{"1", "u"};
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].get<std::string>() != "0") s += (s.empty() ? "" : " + ") + names[i];
  return s.empty() ? "0" : s;
}

int cmd_circle(const Options& o, const std::string& config) {
  require(config == "a" || config == "b" || config == "both", ErrorKind::InvalidArgument,
          "config must be a, b or both");
  json out{{"command", "circle"}, {"configs", json::array()}};
  for (char c : std::string(config == "both" ? "ab" : config)) out["configs"].push_back(circle_json(c));
  emit(o, out, [&] {
    Table t({"config", "A-inf relations (arity <= 4)", "mu3(1+u,1+u,1+u)", "nontrivial mod (1+u)",
             "CO1 coboundary"});
    for (const auto& c : out["configs"])
      t.add({c["config"].get<std::string>(), c["relations_hold_to_arity_4"].get<bool>() ? "hold" : "fail",
             named_vector(c["massey_value"]), yn(c["massey_nontrivial"].get<bool>()),
             yn(c["co1_is_coboundary"].get<bool>())});
    t.print(std::cout);
  });
  return 0;
}

// ---- hochschild

int cmd_hochschild(const Options& o, const std::string& fsrc, std::size_t k_max, long t, bool pairing) {
  const Field f = field_from(o, 2);
  const MonicAlgebra alg = MonicAlgebra::parse(fsrc, f);
  const auto holm = hh_dims_holm(alg, k_max);
  json out{{"command", "hochschild"}, {"f", alg.f().str("u")}, {"char", f.characteristic()}, {"dim", alg.dim()},
           {"hh_holm", holm}};
  json oracle = nullptr;
  if (alg.dim() <= 5) {
    oracle = json::array();
    for (std::size_t k = 0; k <= std::min<std::size_t>(k_max, 3); ++k) oracle.push_back(bar_hh_oracle(alg, k));
  }
  out["hh_bar_oracle"] = oracle;
  const bool char2 = f.characteristic() == 2;
  const bool fp0 = alg.f().derivative().is_zero();
  if (char2 && fp0) {
    out["E"] = yoneda_factor(alg).str();
    if (alg.dim() <= 5) {
      const HH1Class h(alg, alg.u_power(0));
      const YonedaCheck y = yoneda_chain_check(h, h);
      out["yoneda_chain_check"] = {{"cup_is_cocycle", y.cocycle_cup},
                                   {"formula_is_cocycle", y.cocycle_formula},
                                   {"cohomologous", y.cohomologous}};
    }
  }
  if (char2) out["nonformality"] = to_json(nonformality_certificate(alg, static_cast<std::size_t>(t), pairing));
  emit(o, out, [&] {
    std::cout << "A = " << (char2 ? "GF(2)" : f.characteristic() ? "GF(" + std::to_string(f.characteristic()) + ")"
                                                                   : "QQ")
              << "[u]/(" << alg.f().str("u") << "), dim " << alg.dim() << "\n\n";
    Table tb({"k", "HH^k (Holm)", "HH^k (bar complex)"});
    for (std::size_t k = 0; k < holm.size(); ++k)
      tb.add({std::to_string(k), std::to_string(holm[k]),
              oracle.is_array() && k < oracle.size() ? std::to_string(oracle[k].get<std::size_t>()) : "-"});
    tb.print(std::cout);
    if (out.contains("E")) std::cout << "\nE = " << out["E"].get<std::string>() << '\n';
    if (out.contains("nonformality")) {
      std::cout << '\n';
      Table c({"status", "hypothesis", "detail"});
      for (const auto& h : out["nonformality"]["hypotheses"])
        c.add({h["status"].get<std::string>(), h["name"].get<std::string>(), h["detail"].get<std::string>()});
      c.print(std::cout);
      std::cout << "\nnon-formality certificate: "
                << (out["nonformality"]["issued"].get<bool>() ? "issued" : "refused") << '\n';
    }
  });
  return 0;
}

// ---- ainf-check

int cmd_ainf_check(const Options& o, const std::string& file, std::size_t arity) {
  const json in = parse_json_text(read_file(file), file);
  const AInfAlgebra A = ainf_from_json(in.contains("algebra") ? in.at("algebra") : in);
  const std::size_t m = arity ? arity : std::max<std::size_t>(A.arity_bound(), 2);
  const RelationCheck rc = check_ainf_relations(A, m);
  json out{{"command", "ainf-check"}, {"dim", A.dim()}, {"checked_to_arity", m}, {"relations_hold", rc.ok}};
  if (!rc.ok) {
    json names = json::array();
    for (auto i : rc.inputs) names.push_back(A.basis()[i].name);
    out["failure"] = {{"arity", rc.arity}, {"inputs", names}, {"value", vector_json(rc.value)}};
  }
  if (in.contains("cochain")) {
    const json& cj = in.at("cochain");
    const auto L = detail::get_field<std::size_t>(cj, "length", "cochain");
    const int parity = detail::get_field<int>(cj, "parity", "cochain");
    HochschildCochain h = HochschildCochain::zero(A.field(), A.dim(), L, parity);
    for (const auto& e : detail::get_field<json>(cj, "entries", "cochain")) {
      std::vector<std::size_t> idx;
      for (const auto& nm : detail::get_field<std::vector<std::string>>(e, "inputs", "cochain entry"))
        idx.push_back(A.index_of(nm));
      require(idx.size() <= L, ErrorKind::Parse, "cochain entry longer than the declared length");
      Vector v = zero_vector(A.field(), A.dim());
      const json outj = detail::get_field<json>(e, "output", "cochain entry");
      for (const auto& [nm, c] : outj.items())
        v[A.index_of(nm)] += parse_scalar(c.is_string() ? c.get<std::string>() : c.dump(), A.field());
      h.set(A.dim(), idx, v);
    }
    std::vector<HochschildCochain> extra;
    if (cj.value("modulo_unit", false)) extra.push_back(unit_cochain(A, L));
    const CoboundaryResult cb = is_coboundary_through_length(A, h, L, extra);
    out["coboundary"] = {{"is_coboundary", cb.is_coboundary}, {"unknowns", cb.unknowns}, {"equations", cb.equations}};
    if (cb.certificate) out["coboundary"]["certificate"] = vector_json(*cb.certificate);
  }
  emit(o, out, [&] {
    std::cout << "A-infinity relations through arity " << m << ": " << (rc.ok ? "hold" : "fail") << '\n';
    if (!rc.ok) std::cout << "  first failure: " << out["failure"].dump() << '\n';
    if (out.contains("coboundary"))
      std::cout << "cochain is a coboundary: " << yn(out["coboundary"]["is_coboundary"].get<bool>()) << '\n';
  });
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::CostGuardExceeded: return 3;
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::VariableMismatch:
    case ErrorKind::CharacteristicMismatch:
    case ErrorKind::DivisionByZero: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocert: closed-open map certificates for toric examples"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--char", o.characteristic, "field characteristic (prime or 0)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--guard-dim", o.guard_dim, "maximum quotient ring dimension");
  app.add_option("--guard-scan", o.guard_scan, "maximum number of points in a field scan");

  long n_max = 16;
  auto* rp = app.add_subcommand("rp-report", "RP^n in CP^n over GF(2)");
  rp->add_option("--n-max", n_max, "largest n");

  std::string inst_file;
  long pn = 0, pk = 0;
  std::vector<long> pa;
  auto* pic = app.add_subcommand("picard2", "real Lagrangian in X(a_1..a_k)");
  pic->add_option("instance", inst_file, "instance JSON file");
  pic->add_option("--n", pn);
  pic->add_option("--k", pk);
  pic->add_option("--a", pa);

  std::string fan_file;
  auto* fib = app.add_subcommand("fibre", "monotone toric fibre from a fan file");
  fib->add_option("fan", fan_file, "fan JSON file")->required();

  std::string config = "both";
  auto* cir = app.add_subcommand("circle", "equator in S^2");
  cir->add_option("--config", config, "a, b or both");

  std::string fpoly;
  std::size_t k_max = 3;
  long t = 1;
  bool pairing = false;
  auto* hh = app.add_subcommand("hochschild", "Hochschild cohomology of k[u]/(f)");
  hh->add_option("f", fpoly, "polynomial in u")->required();
  hh->add_option("--k-max", k_max);
  hh->add_option("--t", t, "generator r = u^t for the non-formality check");
  hh->add_flag("--pairing", pairing, "assert <Psi(r), l> = 1");

  std::string alg_file;
  std::size_t arity = 0;
  auto* ac = app.add_subcommand("ainf-check", "A-infinity relations and coboundary test");
  ac->add_option("algebra", alg_file, "algebra JSON file")->required();
  ac->add_option("--arity", arity, "check relations through this arity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (o.characteristic > 0) Field check(static_cast<std::uint64_t>(o.characteristic));
    if (*rp) return cmd_rp_report(o, n_max);
    if (*pic) return cmd_picard2(o, inst_file, pn, pk, pa);
    if (*fib) return cmd_fibre(o, fan_file);
    if (*cir) return cmd_circle(o, config);
    if (*hh) return cmd_hochschild(o, fpoly, k_max, t, pairing);
    if (*ac) return cmd_ainf_check(o, alg_file, arity);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
