#include "pellsum/pellsum.h"

#include <chrono>
#include <cstring>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "pellsum/power_sum.hpp"
#include "pellsum/render.hpp"
#include "pellsum/verify.hpp"

using json = nlohmann::ordered_json;

struct pellsum_report {
  int status = PELLSUM_OK;
  std::string json;
  std::string text;
  std::string error;
};

struct pellsum_rational {
  pellsum::Rational value;
};

namespace pellsum {
namespace {

constexpr const char* kVersion = "1.0.0";

// R = 0 or R = -2 collapses the recurrence; reported as degenerate input.
Rational parse_r(const char* text) {
  const Rational R = Rational::parse(text);
  if (R.is_zero()) throw DegenerateDenominator("R = 0: P(1) = 2/R is undefined");
  if (R == Rational(-2)) throw DegenerateDenominator("R = -2: the characteristic roots coincide");
  return R;
}

std::string flag(bool b) { return b ? "true" : "false"; }

template <class T>
std::string num(T v) {
  return std::to_string(v);
}

// Symbolic values carry a readable expression next to the canonical form.
void put(json& obj, const std::string& key, const Rational& v) { obj[key] = v.str(); }
void put(json& obj, const std::string& key, const Sym& v) {
  obj[key] = v.str();
  obj[key + "_expr"] = to_expr(v);
}

json series_json(const auto& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

struct Doc {
  json root;
  int status = PELLSUM_OK;
};

Doc start(const char* command, json params) {
  Doc d;
  d.root["command"] = command;
  d.root["params"] = std::move(params);
  d.root["result"] = json::object();
  d.root["notes"] = json::array();
  return d;
}

void note(Doc& d, std::string text) { d.root["notes"].push_back(std::move(text)); }

// ---- text rendering of a report document ----

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::vector<std::string> parts;
    bool nested = false;
    for (const auto& e : v) {
      parts.push_back(scalar_text(e));
      nested = nested || parts.back().find_first_of(",[") != std::string::npos;
    }
    std::string s;
    for (const auto& part : parts) s += (s.empty() ? "" : nested ? " ; " : ", ") + part;
    return s;
  }
  return v.dump();
}

void render_object(std::string& out, const json& obj, const std::string& indent) {
  for (const auto& [k, v] : obj.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out += indent + k + ":\n";
      for (const auto& e : v) {
        std::string line;
        for (const auto& [ek, ev] : e.items()) line += (line.empty() ? "" : "  ") + ek + "=" + scalar_text(ev);
        out += indent + "  - " + line + "\n";
      }
    } else if (v.is_object()) {
      out += indent + k + ":\n";
      render_object(out, v, indent + "  ");
    } else {
      out += indent + k + ": " + scalar_text(v) + "\n";
    }
  }
}

std::string render_text(const json& root) {
  std::string out = root["command"].get<std::string>() + "\n";
  render_object(out, json{{"params", root["params"]}}, "");
  if (root.contains("result")) render_object(out, json{{"result", root["result"]}}, "");
  if (root.contains("error")) render_object(out, json{{"error", root["error"]}}, "");
  for (const auto& n : root["notes"]) out += "note: " + n.get<std::string>() + "\n";
  return out;
}

int finish(Doc d, pellsum_report** out, const std::string& error = "") {
  if (out != nullptr) {
    auto* r = new pellsum_report;
    r->status = d.status;
    r->json = d.root.dump(2) + "\n";
    r->text = render_text(d.root);
    r->error = error;
    *out = r;
  }
  return d.status;
}

// Runs body on a fresh document; exceptions become an "error" object.
int run(const char* command, json params, pellsum_report** out, const std::function<void(Doc&)>& body) {
  Doc d = start(command, std::move(params));
  std::string kind, message;
  int status = PELLSUM_OK;
  try {
    body(d);
    return finish(std::move(d), out);
  } catch (const SymbolicBoundExceeded& e) {
    status = PELLSUM_USAGE_ERROR, kind = "symbolic_bound_exceeded", message = e.what();
  } catch (const InvalidInput& e) {
    status = PELLSUM_USAGE_ERROR, kind = "invalid_input", message = e.what();
  } catch (const DegenerateDenominator& e) {
    status = PELLSUM_DEGENERATE_INPUT, kind = "degenerate_input", message = e.what();
  } catch (const DivisionByZero& e) {
    status = PELLSUM_DEGENERATE_INPUT, kind = "division_by_zero", message = e.what();
  } catch (const BinetInconsistency& e) {
    status = PELLSUM_VERIFICATION_FAILED, kind = "binet_inconsistency", message = e.what();
  } catch (const std::exception& e) {
    status = PELLSUM_VERIFICATION_FAILED, kind = "error", message = e.what();
  }
  d.root.erase("result");
  d.root["error"] = json{{"kind", kind}, {"message", message}};
  d.root["notes"] = json::array();
  d.status = status;
  return finish(std::move(d), out, message);
}

json r_param(const char* R) { return R == nullptr ? json("symbolic") : json(R); }

std::string method_or(const char* m, const char* fallback) { return m == nullptr ? fallback : m; }

template <Field F>
void pell_body(Doc& d, const PellParams<F>& p, long n, const std::string& method) {
  auto& res = d.root["result"];
  if (method == "iter") {
    put(res, "P", pell_iter(p, n));
  } else if (method == "fast") {
    put(res, "P", pell_fast(p, n));
  } else if (method == "binet") {
    put(res, "P", pell_binet(p, n));
  } else if (method == "all") {
    const F a = pell_iter(p, n), b = pell_fast(p, n), c = pell_binet(p, n);
    put(res, "iter", a);
    put(res, "fast", b);
    put(res, "binet", c);
    const bool agree = a == b && b == c;
    res["agree"] = flag(agree);
    if (!agree) d.status = PELLSUM_VERIFICATION_FAILED;
  } else {
    throw InvalidInput("unknown method '" + method + "'");
  }
}

template <Field F>
void gf_body(Doc& d, const PellParams<F>& p, long m, long series) {
  const auto g = subsequence_gf(p, m);
  auto& res = d.root["result"];
  put(res, "n0", g.n0);
  put(res, "n1", g.n1);
  put(res, "b", g.b);
  put(res, "c", g.c);
  put(res, "d", g.d);
  if (series >= 0) res["series"] = series_json(gf_series(g, series));
  note(d, "G(z) = (n0 + n1 z)/(b + c z + d z^2) = sum P(m n) z^n");
}

json term_json(const LinTerm& t, const char* R) {
  json o;
  if (R == nullptr) {
    put(o, "coeff", t.coeff);
  } else {
    put(o, "coeff", coeff_at(t.coeff, PellParams<Rational>(parse_r(R))));
  }
  o["stride"] = num(t.stride);
  o["shift"] = num(t.shift);
  o["geo_j"] = num(t.geo_j);
  o["kind"] = to_string(t.kind);
  return o;
}

template <Field F>
bool linearize_check(const LinearizedForm& form, const PellParams<F>& p, long n_max) {
  for (long n = 0; n <= n_max; ++n) {
    if (eval_linearized(form, p, n) != pow(pell_iter(p, n), form.ell)) return false;
  }
  return true;
}

}  // namespace
}  // namespace pellsum

using namespace pellsum;

extern "C" {

const char* pellsum_version(void) { return kVersion; }

int pellsum_pell(const char* R, long n, const char* method, pellsum_report** out) {
  const std::string m = method_or(method, "fast");
  return run("pell", json{{"R", r_param(R)}, {"n", n}, {"method", m}}, out, [&](Doc& d) {
    if (R == nullptr) {
      pell_body(d, symbolic_params(), n, m);
    } else {
      pell_body(d, PellParams<Rational>(parse_r(R)), n, m);
    }
  });
}

int pellsum_q(const char* R, long n, pellsum_report** out) {
  return run("q", json{{"R", r_param(R)}, {"n", n}}, out, [&](Doc& d) {
    if (R == nullptr) {
      put(d.root["result"], "Q", q_pell(symbolic_params(), n));
    } else {
      put(d.root["result"], "Q", q_pell(PellParams<Rational>(parse_r(R)), n));
    }
    note(d, "Q(n) = 2P(n+1) - R P(n)");
  });
}

int pellsum_gf(const char* R, long m, long series, pellsum_report** out) {
  json params{{"R", r_param(R)}, {"m", m}};
  if (series >= 0) params["series"] = series;
  return run("gf", std::move(params), out, [&](Doc& d) {
    if (R == nullptr) {
      gf_body(d, symbolic_params(), m, series);
    } else {
      gf_body(d, PellParams<Rational>(parse_r(R)), m, series);
    }
  });
}

int pellsum_weighted_sum(const char* R, long m, const char* sigma, long n, pellsum_report** out) {
  json params{{"R", r_param(R)}, {"m", m}, {"sigma", sigma == nullptr ? json(nullptr) : json(sigma)}, {"n", n}};
  return run("sum", std::move(params), out, [&](Doc& d) {
    if (R == nullptr || sigma == nullptr) throw InvalidInput("sum needs numeric R and sigma");
    const PellParams<Rational> p(parse_r(R));
    const auto ws = weighted_partial_sum(subsequence_gf(p, m), Rational::parse(sigma), n);
    auto& res = d.root["result"];
    res["S"] = ws.value.str();
    res["resonance"] = flag(ws.resonance);
    if (ws.resonance) note(d, "b + c sigma + d sigma^2 = 0; summed directly");
  });
}

int pellsum_power_sum(const char* R, long m, long ell, long n, const char* mode, pellsum_report** out) {
  const std::string md = method_or(mode, "closed");
  json params{{"R", r_param(R)}, {"m", m}, {"ell", ell}, {"n", n}, {"mode", md}};
  return run("sum", std::move(params), out, [&](Doc& d) {
    if (R == nullptr) throw InvalidInput("sum needs a numeric R");
    const PowerSumRequest<Rational> req{PellParams<Rational>(parse_r(R)), m, ell, n};
    auto& res = d.root["result"];
    using clock = std::chrono::steady_clock;
    auto us = [](clock::duration t) { return std::chrono::duration_cast<std::chrono::microseconds>(t).count(); };
    if (md == "closed") {
      const auto r = power_sum_closed(req);
      res["S"] = r.value.str();
      res["weighted_sum_calls"] = num(r.weighted_sum_calls);
      res["resonances"] = num(r.resonances);
    } else if (md == "brute") {
      res["S"] = power_sum_brute(req).str();
    } else if (md == "both") {
      auto t0 = clock::now();
      const auto c = power_sum_closed(req);
      const auto closed_us = us(clock::now() - t0);
      t0 = clock::now();
      const Rational b = power_sum_brute(req);
      const auto brute_us = us(clock::now() - t0);
      res["closed"] = c.value.str();
      res["brute"] = b.str();
      res["equal"] = flag(c.value == b);
      res["closed_us"] = num(closed_us);
      res["brute_us"] = num(brute_us);
      if (c.value != b) d.status = PELLSUM_VERIFICATION_FAILED;
    } else {
      throw InvalidInput("unknown mode '" + md + "'");
    }
  });
}

int pellsum_linearize(long ell, const char* R, long check_n, pellsum_report** out) {
  json params{{"ell", ell}, {"R", r_param(R)}};
  if (check_n >= 0) params["check"] = check_n;
  return run("linearize", std::move(params), out, [&](Doc& d) {
    const auto form = linearize(ell);
    auto& res = d.root["result"];
    if (R != nullptr) check_nondegenerate(form, PellParams<Rational>(parse_r(R)));
    json terms = json::array();
    for (const auto& t : form.terms) terms.push_back(term_json(t, R));
    res["terms"] = std::move(terms);
    if (check_n >= 0) {
      const bool ok = R == nullptr ? linearize_check(form, symbolic_params(), check_n)
                                   : linearize_check(form, PellParams<Rational>(parse_r(R)), check_n);
      res["check"] = ok ? "pass" : "fail";
      if (!ok) d.status = PELLSUM_VERIFICATION_FAILED;
    }
    note(d, "term = coeff * P(stride*n + shift) * (-R/2)^(geo_j*n)");
  });
}

int pellsum_powersum_gf(long m, long ell, pellsum_report** out) {
  return run("powersum-gf", json{{"m", m}, {"ell", ell}}, out, [&](Doc& d) {
    const auto gf = power_sum_gf(m, ell);
    json fr = json::array();
    for (const auto& f : gf.fractions) {
      json o;
      json nc = json::array(), dc = json::array();
      for (const auto& c : f.num.coeffs()) nc.push_back(c.str());
      for (const auto& c : f.den.coeffs()) dc.push_back(c.str());
      o["num"] = std::move(nc);
      o["den"] = std::move(dc);
      o["expr"] = "(" + to_expr(f.num) + ")/(" + to_expr(f.den) + ")";
      fr.push_back(std::move(o));
    }
    d.root["result"]["fractions"] = std::move(fr);
    note(d, "sum_n S(n) z^n with S(n) = sum_{k<=n} P(m k)^ell; num and den list z-coefficients lowest first");
  });
}

int pellsum_verify(const char* suite, int quick, pellsum_report** out) {
  const std::string s = method_or(suite, "all");
  return run("verify", json{{"suite", s}, {"quick", quick != 0}}, out, [&](Doc& d) {
    const auto report = run_verify(parse_suite(s), quick ? VerifyBounds::quick() : VerifyBounds{});
    json recs = json::array();
    long failed = 0, flagged = 0;
    for (const auto& r : report.records) {
      failed += r.status == CheckStatus::fail;
      flagged += r.status == CheckStatus::paper_discrepancy_confirmed;
      json o;
      o["status"] = to_string(r.status);
      o["id"] = r.id;
      o["params"] = r.params;
      if (!r.expected.empty()) o["expected"] = r.expected;
      if (!r.actual.empty()) o["actual"] = r.actual;
      if (!r.note.empty()) o["note"] = r.note;
      recs.push_back(std::move(o));
    }
    auto& res = d.root["result"];
    res["records"] = std::move(recs);
    res["total"] = num(report.records.size());
    res["failed"] = num(failed);
    res["discrepancies_confirmed"] = num(flagged);
    d.status = report.exit_status();
  });
}

int pellsum_bench(const char* R, long m, long ell, long n, pellsum_report** out) {
  json params = R == nullptr ? json{{"grid", "default"}} : json{{"R", R}, {"m", m}, {"ell", ell}, {"n", n}};
  return run("bench", std::move(params), out, [&](Doc& d) {
    std::vector<PowerSumRequest<Rational>> grid;
    if (R == nullptr) {
      grid = default_bench_grid();
    } else {
      grid.push_back({PellParams<Rational>(parse_r(R)), m, ell, n});
    }
    json recs = json::array();
    for (const auto& b : run_bench(grid)) {
      recs.push_back(json{{"R", b.R},
                          {"m", num(b.m)},
                          {"ell", num(b.ell)},
                          {"n", num(b.n)},
                          {"equal", flag(b.equal)},
                          {"closed_us", num(b.closed_us)},
                          {"brute_us", num(b.brute_us)},
                          {"closed_mults", num(b.closed_mults)},
                          {"brute_mults", num(b.brute_mults)}});
    }
    d.root["result"]["records"] = std::move(recs);
    note(d, "mults count bigint products; scaling by word-sized integers is not counted");
  });
}

int pellsum_report_status(const pellsum_report* r) { return r == nullptr ? PELLSUM_USAGE_ERROR : r->status; }

const char* pellsum_report_json(const pellsum_report* r) { return r == nullptr ? nullptr : r->json.c_str(); }

const char* pellsum_report_text(const pellsum_report* r) { return r == nullptr ? nullptr : r->text.c_str(); }

const char* pellsum_report_error(const pellsum_report* r) {
  return r == nullptr || r->error.empty() ? nullptr : r->error.c_str();
}

void pellsum_report_free(pellsum_report* r) { delete r; }

pellsum_rational* pellsum_rational_parse(const char* text) {
  if (text == nullptr) return nullptr;
  try {
    return new pellsum_rational{Rational::parse(text)};
  } catch (const std::exception&) {
    return nullptr;
  }
}

char* pellsum_rational_str(const pellsum_rational* q) {
  if (q == nullptr) return nullptr;
  const std::string s = q->value.str();
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int pellsum_rational_equal(const pellsum_rational* a, const pellsum_rational* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

void pellsum_rational_free(pellsum_rational* q) { delete q; }

void pellsum_string_free(char* s) { delete[] s; }

}  // extern "C"
