#include "cyclohodge/jobs.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "cyclohodge/errors.hpp"

namespace cyclohodge {

namespace {

[[noreturn]] void violation(const std::string& message) { throw Error(ErrorCode::SchemaViolation, message); }

void expect_object(const Json& j, const std::string& ctx) {
  if (!j.is_object()) violation(ctx + " must be a JSON object");
}

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& ctx) {
  expect_object(j, ctx);
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) violation("unknown field '" + k + "' in " + ctx);
  }
}

const Json& require(const Json& j, const std::string& key, const std::string& ctx) {
  const auto it = j.find(key);
  if (it == j.end()) violation("missing field '" + key + "' in " + ctx);
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) violation("field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) violation("field '" + field + "' must be a string");
  return j.get<std::string>();
}

std::int64_t get_int(const Json& obj, const std::string& key, const std::string& ctx) {
  return as_int(require(obj, key, ctx), key);
}

Json with_header(Json body, const std::string& command) {
  body["schema_version"] = kSchemaVersion;
  body["command"] = command;
  return body;
}

Json signature_json(const Signature& s) { return Json{{"p", s.p}, {"q", s.q}, {"nullity", s.nullity}}; }

Json local_order_json(const LocalOrder& o) {
  return Json{{"order", o.order}, {"possibly_unipotent", o.possibly_unipotent}};
}

// Either explicit parameters or a four-point cover with a character.
HypergeometricParams params_or_character(const Json& input, const std::string& ctx) {
  expect_object(input, ctx);
  if (input.contains("cover")) {
    allow_keys(input, {"cover", "j"}, ctx);
    const BranchData b = validate(branch_data_from_json(require(input, "cover", ctx)));
    return character_to_hg(b, get_int(input, "j", ctx));
  }
  return params_from_json(input);
}

std::string verdict_word(const FinitenessVerdict& v) { return v.finite ? "Finite" : "Infinite"; }

std::string eigen_table_text(const EigenspaceTable& t) {
  std::ostringstream os;
  os << "genus " << t.genus << ", mu_" << t.order << " eigenspaces\n";
  os << std::setw(4) << "j" << std::setw(6) << "h10" << std::setw(6) << "h01" << std::setw(9) << "deg L_j"
     << "  type\n";
  for (const auto& row : t.rows) {
    os << std::setw(4) << row.j << std::setw(6) << row.h10 << std::setw(6) << row.h01 << std::setw(9)
       << row.eigensheaf_degree << "  "
       << (row.h10 == 0 && row.h01 == 0 ? "zero" : row.unitary_flat ? "unitary flat" : "mixed") << "\n";
  }
  return os.str();
}

std::string finiteness_text(const FinitenessReport& r) {
  std::ostringstream os;
  os << "parameters (" << r.params.alpha << ", " << r.params.beta << ", " << r.params.gamma << ")\n";
  os << "  schwarz:        " << verdict_word(r.schwarz) << "  " << r.schwarz.witness << "\n";
  os << "  interlacing:    " << verdict_word(r.interlacing) << "  " << r.interlacing.witness << "\n";
  os << "  invariant form: " << to_string(r.form_verdict);
  for (const auto& s : r.form_signatures) os << "  k=" << s.k << ":(" << s.signature.p << "," << s.signature.q << ")";
  os << "\n  closure bfs:    " << to_string(r.bfs_verdict) << "  " << to_string(r.bfs.stop_reason) << " after "
     << r.bfs.elements_explored << " elements";
  if (r.bfs.order_if_found) os << ", order " << *r.bfs.order_if_found << " (projective " << *r.bfs.projective_order << ")";
  if (r.bfs.witness) os << ", " << *r.bfs.witness;
  os << "\nverdict: " << to_string(r.verdict) << (r.methods_agree ? " (all methods agree)" : " (DISCREPANCY)") << "\n";
  for (const auto& d : r.discrepancies) os << "  ! " << d << "\n";
  return os.str();
}

CommandOutput analyze_cover(const Json& input, const JobOptions& opt) {
  const BranchData b = validate(branch_data_from_json(input));
  const EigenspaceTable t = eigenspace_table(b);
  Json out = to_json(t);
  out["cover"] = to_json(b);
  return {out, opt.format == "text" ? eigen_table_text(t) : ""};
}

CommandOutput classify_hg(const Json& input, const JobOptions& opt) {
  const HypergeometricParams p = params_or_character(input, "classify-hg input");
  Json out;
  out["params"] = to_json(p);
  const bool irreducible = is_irreducible(p);
  out["irreducible"] = irreducible;
  out["pairwise_nonresonant"] = pairwise_nonresonant(p);
  const auto rs = riemann_scheme(p);
  out["riemann_scheme"] = {{"0", {to_json(rs.at0.first), to_json(rs.at0.second)}},
                           {"1", {to_json(rs.at1.first), to_json(rs.at1.second)}},
                           {"inf", {to_json(rs.at_inf.first), to_json(rs.at_inf.second)}}};
  const auto d = exponent_differences(p);
  out["exponent_differences"] = {to_json(d.lambda), to_json(d.mu), to_json(d.nu)};
  const auto nt = normalize_triple(d.lambda, d.mu, d.nu);
  out["normalized_differences"] = {to_json(nt.lambda), to_json(nt.mu), to_json(nt.nu)};
  const auto lo = local_orders(p);
  out["local_orders"] = {{"0", local_order_json(lo.at0)}, {"1", local_order_json(lo.at1)},
                         {"inf", local_order_json(lo.at_inf)}};
  const auto sw = schwarz_classify(p);
  out["schwarz"] = to_json(sw);
  std::ostringstream text;
  text << "parameters (" << p.alpha << ", " << p.beta << ", " << p.gamma << "), "
       << (irreducible ? "irreducible" : "reducible") << "\n";
  text << "local orders " << lo.at0.order << ", " << lo.at1.order << ", " << lo.at_inf.order << "\n";
  if (irreducible) {
    const auto il = interlacing_finiteness(p);
    out["interlacing"] = to_json(il);
    out["agree"] = il.finite == sw.finite && il.schwarz_type == sw.schwarz_type;
    out["finite"] = sw.finite;
    text << "schwarz: " << verdict_word(sw) << " (" << sw.witness << ")\n";
    text << "interlacing: " << verdict_word(il) << " (" << il.witness << ")\n";
  } else {
    out["interlacing"] = nullptr;
    out["agree"] = true;
    out["finite"] = nullptr;
    text << "schwarz: not applicable to reducible parameters\n";
  }
  return {out, opt.format == "text" ? text.str() : ""};
}

CommandOutput monodromy(const Json& input, const JobOptions& opt) {
  const HypergeometricParams p = params_or_character(input, "monodromy input");
  const MonodromyRep rep = levelt_generators(p);
  const FinitenessReport f = finiteness_report(p, opt.bfs_bound, BfsOptions{opt.certify_infinite});
  Json out;
  out["representation"] = to_json(rep);
  out["finiteness"] = to_json(f);
  std::string text;
  if (opt.format == "text") {
    text = "conductor " + std::to_string(rep.conductor) + "\n  g0   = " + rep.g0.str() + "\n  g1   = " +
           rep.g1.str() + "\n  gInf = " + rep.gInf.str() + "\n";
    if (f.form) text += "invariant form " + f.form->matrix().str() + "\n";
    text += finiteness_text(f);
  }
  return {out, text};
}

CommandOutput resolve_sing(const Json& input, const JobOptions& opt) {
  allow_keys(input, {"n", "q"}, "resolve-sing input");
  const QuotientSingularity s{get_int(input, "n", "resolve-sing input"), get_int(input, "q", "resolve-sing input")};
  const HJString h = hj_resolve(s);
  Json out{{"n", s.n}, {"q", s.q}, {"string", h.coefficients}, {"value", to_json(h.value())}};
  std::vector<std::int64_t> self;
  for (auto c : h.coefficients) self.push_back(-c);
  out["self_intersections"] = self;
  std::ostringstream text;
  text << "1/" << s.n << "(1," << s.q << "): chain of " << h.coefficients.size() << " curves, self-intersections";
  for (auto c : self) text << " " << c;
  text << "\n";
  return {out, opt.format == "text" ? text.str() : ""};
}

BaseCover base_cover_from_json(const Json& j) {
  allow_keys(j, {"n", "target_genus", "branch"}, "base_cover");
  BaseCover c;
  c.n = get_int(j, "n", "base_cover");
  if (j.contains("target_genus")) c.target_genus = as_int(j["target_genus"], "target_genus");
  const Json& br = require(j, "branch", "base_cover");
  if (!br.is_array()) violation("base_cover.branch must be an array");
  for (const auto& e : br) {
    allow_keys(e, {"over", "e"}, "base_cover branch entry");
    c.branch.push_back({as_string(require(e, "over", "base_cover branch entry"), "over"),
                        get_int(e, "e", "base_cover branch entry")});
  }
  return c;
}

CommandOutput reduce(const Json& input, const JobOptions& opt) {
  allow_keys(input, {"multiplicities", "base_cover"}, "reduce input");
  if (!input.contains("multiplicities") && !input.contains("base_cover"))
    violation("reduce input needs 'multiplicities' or 'base_cover'");
  Json out = Json::object();
  std::ostringstream text;
  if (input.contains("multiplicities")) {
    const Json& m = input["multiplicities"];
    if (!m.is_array()) violation("'multiplicities' must be an array");
    std::vector<std::int64_t> mults;
    for (const auto& x : m) mults.push_back(as_int(x, "multiplicities"));
    const auto order = semistable_base_order(mults);
    out["multiplicities"] = mults;
    out["base_order"] = order;
    text << "semistable reduction needs a base change of order divisible by " << order << "\n";
  }
  if (input.contains("base_cover")) {
    const BaseCover c = base_cover_from_json(input["base_cover"]);
    std::vector<std::int64_t> es;
    for (const auto& b : c.branch) es.push_back(b.e);
    const auto g = hurwitz_base_genus(c.n, c.target_genus, es);
    out["hurwitz_genus"] = g;
    text << "the base cover has genus " << g << "\n";
  }
  return {out, opt.format == "text" ? text.str() : ""};
}

CommandOutput fujita_report(const Json& input, const JobOptions& opt) {
  const FibrationSpec spec = fibration_spec_from_json(input);
  const FujitaReport r = fujita_decomposition(spec, opt.bfs_bound);
  std::string text;
  if (opt.format == "text") text = render_text(r, eigenspace_table(validate(spec.fiber_branch)));
  return {to_json(r), text};
}

CommandOutput kodaira_check(const Json& input, const JobOptions& opt) {
  allow_keys(input, {"K2", "b", "g", "sigma"}, "kodaira-check input");
  const std::string ctx = "kodaira-check input";
  const auto k = kodaira_degree_check(get_int(input, "K2", ctx), get_int(input, "b", ctx), get_int(input, "g", ctx),
                                      get_int(input, "sigma", ctx));
  std::ostringstream text;
  text << "e = " << k.e << ", 3 sigma = " << k.three_sigma << ", " << (k.consistent ? "consistent" : "inconsistent")
       << ", deg V " << (k.degV_positive ? "positive" : "not positive") << "\n";
  return {to_json(k), opt.format == "text" ? text.str() : ""};
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) violation("field '" + field + "' must be a \"p/q\" string or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    violation("field '" + field + "': " + e.what());
  }
}

Json to_json(const Rational& r) { return r.str(); }

BranchData branch_data_from_json(const Json& j) {
  allow_keys(j, {"n", "branch"}, "cover");
  BranchData b;
  b.order = get_int(j, "n", "cover");
  const Json& br = require(j, "branch", "cover");
  if (!br.is_array()) violation("'branch' must be an array");
  for (const auto& e : br) {
    allow_keys(e, {"label", "m", "point"}, "branch entry");
    BranchPoint p;
    p.label = as_string(require(e, "label", "branch entry"), "label");
    p.exponent = get_int(e, "m", "branch entry");
    if (e.contains("point")) p.point = as_string(e["point"], "point");
    b.branch.push_back(std::move(p));
  }
  return b;
}

HypergeometricParams params_from_json(const Json& j) {
  allow_keys(j, {"alpha", "beta", "gamma"}, "hypergeometric parameters");
  return HypergeometricParams{rational_from_json(require(j, "alpha", "parameters"), "alpha"),
                              rational_from_json(require(j, "beta", "parameters"), "beta"),
                              rational_from_json(require(j, "gamma", "parameters"), "gamma")};
}

FibrationSpec fibration_spec_from_json(const Json& j) {
  const std::string ctx = "fibration spec";
  allow_keys(j, {"fiber", "base_genus", "base_cover", "singular_fibers"}, ctx);
  FibrationSpec s;
  s.fiber_branch = branch_data_from_json(require(j, "fiber", ctx));
  s.base_genus = get_int(j, "base_genus", ctx);
  if (j.contains("base_cover")) s.base_cover = base_cover_from_json(j["base_cover"]);
  if (j.contains("singular_fibers")) {
    const Json& sf = j["singular_fibers"];
    if (!sf.is_array()) violation("'singular_fibers' must be an array");
    for (const auto& e : sf) {
      allow_keys(e, {"value", "orders"}, "singular fibre entry");
      SingularFiberOrders o;
      o.value = as_string(require(e, "value", "singular fibre entry"), "value");
      const Json& orders = require(e, "orders", "singular fibre entry");
      expect_object(orders, "singular fibre orders");
      for (const auto& [key, val] : orders.items()) {
        std::int64_t jj = 0;
        try {
          std::size_t used = 0;
          jj = std::stoll(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          violation("singular fibre order keys must be character indices, got '" + key + "'");
        }
        o.orders[jj] = as_int(val, "orders");
      }
      s.singular_fiber_local_orders.push_back(std::move(o));
    }
  }
  return s;
}

Json to_json(const BranchData& b) {
  Json branch = Json::array();
  for (const auto& p : b.branch) {
    Json e{{"label", p.label}, {"m", p.exponent}};
    if (p.point) e["point"] = *p.point;
    branch.push_back(e);
  }
  return Json{{"n", b.order}, {"branch", branch}};
}

Json to_json(const EigenspaceTable& t) {
  Json rows = Json::array();
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> degrees;
  for (const auto& r : t.rows) {
    Json exps = Json::array();
    for (const auto& e : r.local_exponents) exps.push_back(to_json(e.value()));
    rows.push_back(Json{{"j", r.j},
                        {"h10", r.h10},
                        {"h01", r.h01},
                        {"rank", r.rank},
                        {"eigensheaf_degree", r.eigensheaf_degree},
                        {"unitary_flat", r.unitary_flat},
                        {"local_exponents", exps}});
    dims.push_back(r.h10);
    degrees.push_back(r.eigensheaf_degree);
  }
  return Json{{"n", t.order}, {"genus", t.genus}, {"eigenspaces", rows}, {"dims", dims}, {"degrees", degrees}};
}

Json to_json(const HypergeometricParams& p) {
  return Json{{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}, {"gamma", to_json(p.gamma)}};
}

Json to_json(const CyclotomicNumber& x) {
  Json c = Json::array();
  for (const auto& q : x.coeffs()) c.push_back(to_json(q));
  return c;
}

Json to_json(const Matrix2& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const MonodromyRep& r) {
  Json out{{"format_version", 1},
           {"conductor", r.conductor},
           {"g0", to_json(r.g0.embed(r.conductor))},
           {"g1", to_json(r.g1.embed(r.conductor))},
           {"gInf", to_json(r.gInf.embed(r.conductor))}};
  out["source_params"] = r.source_params ? to_json(*r.source_params) : Json(nullptr);
  return out;
}

MonodromyRep monodromy_rep_from_json(const Json& j) {
  const std::string ctx = "monodromy representation";
  allow_keys(j, {"format_version", "conductor", "g0", "g1", "gInf", "source_params"}, ctx);
  if (get_int(j, "format_version", ctx) != 1) violation("unsupported representation format_version");
  MonodromyRep r;
  r.conductor = get_int(j, "conductor", ctx);
  const auto number = [&](const Json& c) {
    if (!c.is_array()) violation("matrix entries must be coefficient arrays");
    std::vector<Rational> coeffs;
    for (const auto& q : c) coeffs.push_back(rational_from_json(q, "coefficient"));
    return CyclotomicNumber(r.conductor, std::move(coeffs));
  };
  const auto matrix = [&](const std::string& key) {
    const Json& m = require(j, key, ctx);
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
        m[1].size() != 2)
      violation("'" + key + "' must be a 2x2 array");
    return Matrix2(number(m[0][0]), number(m[0][1]), number(m[1][0]), number(m[1][1]));
  };
  r.g0 = matrix("g0");
  r.g1 = matrix("g1");
  r.gInf = matrix("gInf");
  if (j.contains("source_params") && !j["source_params"].is_null())
    r.source_params = params_from_json(j["source_params"]);
  return r;
}

Json to_json(const FinitenessVerdict& v) {
  Json out{{"finite", v.finite},
           {"schwarz_type", std::string(to_string(v.schwarz_type))},
           {"case_number", v.case_number},
           {"witness", v.witness}};
  out["failing_k"] = v.failing_k ? Json(*v.failing_k) : Json(nullptr);
  return out;
}

Json to_json(const GroupClosureReport& r) {
  Json out{{"finite_within_bound", r.finite_within_bound},
           {"elements_explored", r.elements_explored},
           {"bound", r.bound},
           {"stop_reason", std::string(to_string(r.stop_reason))}};
  out["order_if_found"] = r.order_if_found ? Json(*r.order_if_found) : Json(nullptr);
  out["projective_order"] = r.projective_order ? Json(*r.projective_order) : Json(nullptr);
  out["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const FinitenessReport& r) {
  Json out;
  out["params"] = to_json(r.params);
  out["verdict"] = std::string(to_string(r.verdict));
  out["methods_agree"] = r.methods_agree;
  out["discrepancies"] = r.discrepancies;
  out["schwarz"] = to_json(r.schwarz);
  out["interlacing"] = to_json(r.interlacing);
  if (r.form) {
    std::int64_t n = 1;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) n = std::lcm(n, (*r.form)(a, b).conductor());
    out["invariant_form"] = Json{{"conductor", n}, {"matrix", to_json(r.form->matrix().embed(n))}};
  } else {
    out["invariant_form"] = nullptr;
  }
  Json sigs = Json::array();
  for (const auto& s : r.form_signatures) {
    Json e = signature_json(s.signature);
    e["k"] = s.k;
    sigs.push_back(e);
  }
  out["form_signatures"] = sigs;
  out["form_verdict"] = std::string(to_string(r.form_verdict));
  out["bfs"] = to_json(r.bfs);
  out["bfs_verdict"] = std::string(to_string(r.bfs_verdict));
  return out;
}

Json to_json(const FujitaReport& r) {
  Json summands = Json::array();
  for (const auto& s : r.summands) {
    Json e{{"kind", std::string(to_string(s.kind))}, {"rank", s.rank}};
    e["character"] = s.character ? Json(*s.character) : Json(nullptr);
    e["monodromy"] = s.monodromy ? Json(std::string(to_string(*s.monodromy))) : Json(nullptr);
    summands.push_back(e);
  }
  return Json{{"total_rank", r.total_rank},
              {"summands", summands},
              {"semiample", std::string(to_string(r.semiample))},
              {"rationale", r.rationale}};
}

Json to_json(const KodairaCheck& k) {
  return Json{{"consistent", k.consistent}, {"e", k.e}, {"three_sigma", k.three_sigma},
              {"degV_positive", k.degV_positive}};
}

CommandOutput run_command(const std::string& command, const Json& input, const JobOptions& options) {
  if (options.bfs_bound < 1) violation("bfs_bound must be at least 1");
  if (options.format != "json" && options.format != "text") violation("format must be 'json' or 'text'");
  CommandOutput out;
  try {
    if (command == "analyze-cover") out = analyze_cover(input, options);
    else if (command == "classify-hg") out = classify_hg(input, options);
    else if (command == "monodromy") out = monodromy(input, options);
    else if (command == "resolve-sing") out = resolve_sing(input, options);
    else if (command == "reduce") out = reduce(input, options);
    else if (command == "fujita-report") out = fujita_report(input, options);
    else if (command == "kodaira-check") out = kodaira_check(input, options);
    else violation("unknown command '" + command + "'");
  } catch (const nlohmann::json::exception& e) {
    violation(std::string("malformed input: ") + e.what());
  }
  out.json = with_header(std::move(out.json), command);
  return out;
}

CommandOutput run_job(const Json& job, const JobOptions& defaults) {
  allow_keys(job, {"schema_version", "command", "input", "options"}, "job");
  if (job.contains("schema_version") && as_int(job["schema_version"], "schema_version") != kSchemaVersion)
    violation("unsupported schema_version");
  JobOptions opt = defaults;
  if (job.contains("options")) {
    const Json& o = job["options"];
    allow_keys(o, {"bfs_bound", "format", "certify_infinite"}, "job options");
    if (o.contains("bfs_bound")) opt.bfs_bound = as_int(o["bfs_bound"], "bfs_bound");
    if (o.contains("format")) opt.format = as_string(o["format"], "format");
    if (o.contains("certify_infinite")) {
      if (!o["certify_infinite"].is_boolean()) violation("field 'certify_infinite' must be a boolean");
      opt.certify_infinite = o["certify_infinite"].get<bool>();
    }
  }
  return run_command(as_string(require(job, "command", "job"), "command"), require(job, "input", "job"), opt);
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace cyclohodge
