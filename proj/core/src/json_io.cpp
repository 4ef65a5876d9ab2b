#include "tnfactor/json_io.hpp"

#include <json.hpp>

namespace tnfactor {

namespace {

using Json = nlohmann::ordered_json;

ScalarKind scalar_kind_from_string(const std::string& s) {
  if (s == "exact") return ScalarKind::exact;
  if (s == "radical") return ScalarKind::radical;
  if (s == "float") return ScalarKind::floating;
  throw Error("unknown matrix kind: '" + s + "'");
}

Property property_from_string(const std::string& s) {
  if (s == "tp") return Property::tp;
  if (s == "tn") return Property::tn;
  throw Error("unknown property: '" + s + "'");
}

CheckMode mode_from_string(const std::string& s) {
  if (s == "exact") return CheckMode::exact;
  if (s == "float") return CheckMode::floating;
  throw Error("unknown check mode: '" + s + "'");
}

CheckOutcome outcome_from_string(const std::string& s) {
  if (s == "holds") return CheckOutcome::holds;
  if (s == "fails") return CheckOutcome::fails;
  if (s == "indeterminate") return CheckOutcome::indeterminate;
  throw Error("unknown outcome: '" + s + "'");
}

VerificationReport::Status status_from_string(const std::string& s) {
  if (s == "exact-equal") return VerificationReport::Status::exact_equal;
  if (s == "float-equal") return VerificationReport::Status::float_equal;
  if (s == "mismatch") return VerificationReport::Status::mismatch;
  throw Error("unknown verification status: '" + s + "'");
}

const Json& expect(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing JSON key: '") + key + "'");
  return *it;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

std::vector<Rational> rationals_from_json(const Json& arr) {
  std::vector<Rational> out;
  for (const auto& e : arr) out.push_back(Rational::parse(e.get<std::string>()));
  return out;
}

Json indices_to_json(const std::vector<std::size_t>& v) {
  Json arr = Json::array();
  for (std::size_t i : v) arr.push_back(i + 1);
  return arr;
}

std::vector<std::size_t> indices_from_json(const Json& arr) {
  std::vector<std::size_t> out;
  for (const auto& e : arr) {
    long long v = e.get<long long>();
    if (v < 1) throw Error("indices in JSON documents are 1-based and positive");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

Json minor_spec_to_json(const MinorSpec& spec) {
  Json j;
  j["rows"] = indices_to_json(spec.rows);
  j["cols"] = indices_to_json(spec.cols);
  return j;
}

MinorSpec minor_spec_from_json(const Json& j) {
  return MinorSpec(indices_from_json(expect(j, "rows")), indices_from_json(expect(j, "cols")));
}

Json matrix_to_json_value(const Matrix& m) {
  Json j;
  j["kind"] = to_string(m.kind());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < m.cols(); ++jj) {
      if (m.kind() == ScalarKind::floating)
        row.push_back(m.at_floating(i, jj));
      else
        row.push_back(m.entry_str(i, jj));
    }
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

Matrix matrix_from_json_value(const Json& j) {
  ScalarKind kind = scalar_kind_from_string(expect(j, "kind").get<std::string>());
  std::size_t rows = expect(j, "rows").get<std::size_t>();
  std::size_t cols = expect(j, "cols").get<std::size_t>();
  const Json& data = expect(j, "data");
  if (data.size() != rows) throw Error("matrix JSON row count does not match 'rows'");

  std::vector<Rational> exact;
  std::vector<Radical> radical;
  std::vector<double> floating;
  for (const auto& row : data) {
    if (row.size() != cols) throw Error("matrix JSON row length does not match 'cols'");
    for (const auto& e : row) {
      switch (kind) {
        case ScalarKind::exact: exact.push_back(Rational::parse(e.get<std::string>())); break;
        case ScalarKind::radical: radical.push_back(Radical::parse(e.get<std::string>())); break;
        case ScalarKind::floating: floating.push_back(e.get<double>()); break;
      }
    }
  }
  switch (kind) {
    case ScalarKind::exact: return Matrix::exact(rows, cols, std::move(exact));
    case ScalarKind::radical: return Matrix::radical(rows, cols, std::move(radical));
    case ScalarKind::floating: return Matrix::floating(rows, cols, std::move(floating));
  }
  throw Error("unreachable");
}

Json factor_to_json(const Factor& f) {
  struct Visitor {
    Json operator()(const ElemLower& e) const {
      return Json{{"form", "elem-lower"}, {"i", e.index}, {"s", e.s.str()}};
    }
    Json operator()(const ElemUpper& e) const {
      return Json{{"form", "elem-upper"}, {"i", e.index}, {"s", e.s.str()}};
    }
    Json operator()(const DiagFactor& d) const {
      return Json{{"form", "diag"}, {"d", rationals_to_json(d.d)}};
    }
    Json operator()(const LowerBidiagonal& b) const {
      return Json{{"form", "gen-lower"},
                  {"diag", rationals_to_json(b.diag)},
                  {"sub", rationals_to_json(b.sub)}};
    }
    Json operator()(const UpperBidiagonal& b) const {
      return Json{{"form", "gen-upper"},
                  {"diag", rationals_to_json(b.diag)},
                  {"super", rationals_to_json(b.super)}};
    }
    Json operator()(const DenseFactor& d) const {
      return Json{{"form", "dense"}, {"matrix", matrix_to_json_value(d.matrix)}};
    }
  };
  return std::visit(Visitor{}, f);
}

Factor factor_from_json(const Json& j) {
  std::string form = expect(j, "form").get<std::string>();
  if (form == "elem-lower")
    return ElemLower{expect(j, "i").get<std::size_t>(),
                     Rational::parse(expect(j, "s").get<std::string>())};
  if (form == "elem-upper")
    return ElemUpper{expect(j, "i").get<std::size_t>(),
                     Rational::parse(expect(j, "s").get<std::string>())};
  if (form == "diag") return DiagFactor{rationals_from_json(expect(j, "d"))};
  if (form == "gen-lower")
    return LowerBidiagonal{rationals_from_json(expect(j, "diag")),
                           rationals_from_json(expect(j, "sub"))};
  if (form == "gen-upper")
    return UpperBidiagonal{rationals_from_json(expect(j, "diag")),
                           rationals_from_json(expect(j, "super"))};
  if (form == "dense") return DenseFactor{matrix_from_json_value(expect(j, "matrix"))};
  throw Error("unknown factor form: '" + form + "'");
}

Json verdict_to_json_value(const PositivityVerdict& v) {
  Json j;
  j["property"] = to_string(v.property);
  j["k"] = v.order;
  j["mode"] = to_string(v.mode);
  j["tol"] = v.tol;
  j["outcome"] = to_string(v.outcome);
  if (v.witness) {
    Json w = minor_spec_to_json(*v.witness);
    w["value"] = v.witness_value;
    j["witness"] = std::move(w);
  }
  j["minors_evaluated"] = v.minors_evaluated;
  j["indeterminate_minors"] = v.indeterminate_count;
  if (v.first_indeterminate) j["first_indeterminate"] = minor_spec_to_json(*v.first_indeterminate);
  j["structural"] = v.structural;
  return j;
}

PositivityVerdict verdict_from_json_value(const Json& j) {
  PositivityVerdict v;
  v.property = property_from_string(expect(j, "property").get<std::string>());
  v.order = expect(j, "k").get<std::size_t>();
  v.mode = mode_from_string(expect(j, "mode").get<std::string>());
  v.tol = expect(j, "tol").get<double>();
  v.outcome = outcome_from_string(expect(j, "outcome").get<std::string>());
  if (j.contains("witness")) {
    v.witness = minor_spec_from_json(j["witness"]);
    v.witness_value = expect(j["witness"], "value").get<std::string>();
  }
  v.minors_evaluated = expect(j, "minors_evaluated").get<std::size_t>();
  v.indeterminate_count = expect(j, "indeterminate_minors").get<std::size_t>();
  if (j.contains("first_indeterminate"))
    v.first_indeterminate = minor_spec_from_json(j["first_indeterminate"]);
  v.structural = expect(j, "structural").get<bool>();
  return v;
}

Json mean_kind_to_json(const MeanKind& k) {
  Json j;
  switch (k.family) {
    case MeanKind::Family::arithmetic_reciprocal: j["family"] = "arith-recip"; break;
    case MeanKind::Family::harmonic: j["family"] = "harmonic"; break;
    case MeanKind::Family::heinz_reciprocal:
      j["family"] = "heinz-recip";
      j["nu"] = k.nu.str();
      break;
    case MeanKind::Family::binomial_reciprocal:
      j["family"] = "binom-recip";
      j["alpha"] = k.alpha.str();
      break;
    case MeanKind::Family::min: j["family"] = "min"; break;
    case MeanKind::Family::max: j["family"] = "max"; break;
    case MeanKind::Family::flat: j["family"] = "flat"; break;
  }
  return j;
}

MeanKind mean_kind_from_json(const Json& j) {
  std::string family = expect(j, "family").get<std::string>();
  if (family == "arith-recip") return MeanKind::arithmetic_reciprocal();
  if (family == "harmonic") return MeanKind::harmonic();
  if (family == "heinz-recip")
    return MeanKind::heinz_reciprocal(Rational::parse(expect(j, "nu").get<std::string>()));
  if (family == "binom-recip")
    return MeanKind::binomial_reciprocal(ExtendedReal::parse(expect(j, "alpha").get<std::string>()));
  if (family == "min") return MeanKind::min();
  if (family == "max") return MeanKind::max();
  if (family == "flat") return MeanKind::flat();
  throw Error("unknown mean family: '" + family + "'");
}

std::string dump(const Json& j) { return j.dump(2); }

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("invalid JSON input");
  return j;
}

} // namespace

std::string matrix_to_json(const Matrix& m) { return dump(matrix_to_json_value(m)); }

Matrix matrix_from_json(const std::string& text) { return matrix_from_json_value(parse_text(text)); }

std::string certificate_to_json(const FactorizationCertificate& cert) {
  Json target;
  target["family"] = cert.target.family;
  target["n"] = cert.target.n;
  if (!cert.target.x.empty()) target["x"] = rationals_to_json(cert.target.x);
  if (!cert.target.y.empty()) target["y"] = rationals_to_json(cert.target.y);
  if (cert.target.hadamard_m) target["m"] = *cert.target.hadamard_m;
  if (cert.target.matrix) target["matrix"] = matrix_to_json_value(*cert.target.matrix);

  Json j;
  j["target"] = std::move(target);
  j["kind"] = cert.kind == ProductKind::exact ? "exact" : "radical-display";
  Json factors = Json::array();
  for (const Factor& f : cert.factors) factors.push_back(factor_to_json(f));
  j["factors"] = std::move(factors);
  return dump(j);
}

FactorizationCertificate certificate_from_json(const std::string& text) {
  Json j = parse_text(text);
  const Json& t = expect(j, "target");

  FactorizationCertificate cert;
  cert.target.family = expect(t, "family").get<std::string>();
  cert.target.n = expect(t, "n").get<std::size_t>();
  if (t.contains("x")) cert.target.x = rationals_from_json(t["x"]);
  if (t.contains("y")) cert.target.y = rationals_from_json(t["y"]);
  if (t.contains("m")) cert.target.hadamard_m = t["m"].get<unsigned long>();
  if (t.contains("matrix")) cert.target.matrix = matrix_from_json_value(t["matrix"]);

  std::string kind = expect(j, "kind").get<std::string>();
  if (kind == "exact")
    cert.kind = ProductKind::exact;
  else if (kind == "radical-display")
    cert.kind = ProductKind::radical_display;
  else
    throw Error("unknown certificate kind: '" + kind + "'");

  for (const auto& f : expect(j, "factors")) cert.factors.push_back(factor_from_json(f));
  return cert;
}

std::string verification_report_to_json(const VerificationReport& rep) {
  Json j;
  j["status"] = to_string(rep.status);
  j["detail"] = rep.detail;
  if (rep.mismatch_at) {
    j["mismatch"] = Json{{"row", rep.mismatch_at->first},
                         {"col", rep.mismatch_at->second},
                         {"got", rep.got},
                         {"want", rep.want}};
  }
  j["max_abs_deviation"] = rep.max_abs_deviation;
  j["max_rel_deviation"] = rep.max_rel_deviation;
  if (rep.squared_form_exact) j["squared_form_exact"] = *rep.squared_form_exact;
  return dump(j);
}

VerificationReport verification_report_from_json(const std::string& text) {
  Json j = parse_text(text);
  VerificationReport rep;
  rep.status = status_from_string(expect(j, "status").get<std::string>());
  rep.detail = expect(j, "detail").get<std::string>();
  if (j.contains("mismatch")) {
    const Json& m = j["mismatch"];
    rep.mismatch_at = {expect(m, "row").get<std::size_t>(), expect(m, "col").get<std::size_t>()};
    rep.got = expect(m, "got").get<std::string>();
    rep.want = expect(m, "want").get<std::string>();
  }
  rep.max_abs_deviation = expect(j, "max_abs_deviation").get<double>();
  rep.max_rel_deviation = expect(j, "max_rel_deviation").get<double>();
  if (j.contains("squared_form_exact")) rep.squared_form_exact = j["squared_form_exact"].get<bool>();
  return rep;
}

std::string verdict_to_json(const PositivityVerdict& v) { return dump(verdict_to_json_value(v)); }

PositivityVerdict verdict_from_json(const std::string& text) {
  return verdict_from_json_value(parse_text(text));
}

std::string threshold_report_to_json(const ThresholdScanReport& rep) {
  Json j;
  j["family"] = "S-pow";
  j["x"] = rationals_to_json(rep.x);
  j["y"] = rationals_to_json(rep.y);
  j["k"] = rep.order;
  j["tol"] = rep.tol;
  j["claimed_boundary"] = rep.claimed_boundary;
  Json samples = Json::array();
  for (const auto& s : rep.samples) {
    Json e;
    e["r"] = s.r;
    e["arithmetic"] = s.exact_arithmetic ? "exact" : "float";
    e["tp"] = verdict_to_json_value(s.tp);
    e["tn"] = verdict_to_json_value(s.tn);
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return dump(j);
}

ThresholdScanReport threshold_report_from_json(const std::string& text) {
  Json j = parse_text(text);
  ThresholdScanReport rep;
  rep.x = rationals_from_json(expect(j, "x"));
  rep.y = rationals_from_json(expect(j, "y"));
  rep.order = expect(j, "k").get<std::size_t>();
  rep.tol = expect(j, "tol").get<double>();
  rep.claimed_boundary = expect(j, "claimed_boundary").get<std::size_t>();
  for (const auto& e : expect(j, "samples")) {
    ThresholdSample s;
    s.r = expect(e, "r").get<double>();
    s.exact_arithmetic = expect(e, "arithmetic").get<std::string>() == "exact";
    s.tp = verdict_from_json_value(expect(e, "tp"));
    s.tn = verdict_from_json_value(expect(e, "tn"));
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

std::string mean_table_to_json(const MeanTableDocument& doc) {
  Json j;
  j["lambda"] = rationals_to_json(doc.lambda);
  j["r"] = doc.r.str();
  j["k"] = doc.k;
  j["tol"] = doc.tol;
  Json rows = Json::array();
  for (const auto& row : doc.rows) {
    Json e;
    e["kind"] = mean_kind_to_json(row.kind);
    e["expected"] = row.expected_tp ? "tp" : "tn";
    e["tp"] = verdict_to_json_value(row.tp);
    e["tn"] = verdict_to_json_value(row.tn);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

MeanTableDocument mean_table_from_json(const std::string& text) {
  Json j = parse_text(text);
  MeanTableDocument doc;
  doc.lambda = rationals_from_json(expect(j, "lambda"));
  doc.r = Exponent::parse(expect(j, "r").get<std::string>());
  doc.k = expect(j, "k").get<std::size_t>();
  doc.tol = expect(j, "tol").get<double>();
  for (const auto& e : expect(j, "rows")) {
    MeanCheckRow row;
    row.kind = mean_kind_from_json(expect(e, "kind"));
    row.expected_tp = expect(e, "expected").get<std::string>() == "tp";
    row.tp = verdict_from_json_value(expect(e, "tp"));
    row.tn = verdict_from_json_value(expect(e, "tn"));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string rank_report_to_json(const RankReport& rep) {
  Json j;
  j["family"] = "S-pow";
  j["x"] = rationals_to_json(rep.x);
  j["y"] = rationals_to_json(rep.y);
  j["m"] = rep.m;
  j["rank"] = rep.rank;
  j["expected"] = rep.expected;
  return dump(j);
}

RankReport rank_report_from_json(const std::string& text) {
  Json j = parse_text(text);
  RankReport rep;
  rep.x = rationals_from_json(expect(j, "x"));
  rep.y = rationals_from_json(expect(j, "y"));
  rep.m = expect(j, "m").get<unsigned long>();
  rep.rank = expect(j, "rank").get<std::size_t>();
  rep.expected = expect(j, "expected").get<std::size_t>();
  return rep;
}

std::string selftest_report_to_json(const SelftestReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  j["trials_per_check"] = rep.trials_per_check;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["trials"] = c.trials;
    e["failures"] = c.failures;
    if (!c.first_failure.empty()) e["first_failure"] = c.first_failure;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = rep.all_passed;
  return dump(j);
}

SelftestReport selftest_report_from_json(const std::string& text) {
  Json j = parse_text(text);
  SelftestReport rep;
  rep.seed = expect(j, "seed").get<std::uint64_t>();
  rep.trials_per_check = expect(j, "trials_per_check").get<std::size_t>();
  for (const auto& e : expect(j, "checks")) {
    SelftestCheck c;
    c.name = expect(e, "name").get<std::string>();
    c.trials = expect(e, "trials").get<std::size_t>();
    c.failures = expect(e, "failures").get<std::size_t>();
    if (e.contains("first_failure")) c.first_failure = e["first_failure"].get<std::string>();
    rep.checks.push_back(std::move(c));
  }
  rep.all_passed = expect(j, "all_passed").get<bool>();
  return rep;
}

} // namespace tnfactor
