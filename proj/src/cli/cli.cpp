#include "sov/cli/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "sov/algebra/errors.hpp"
#include "sov/algebra/poly_json.hpp"
#include "sov/characters/characters.hpp"
#include "sov/characters/characters_json.hpp"
#include "sov/integral/integral.hpp"
#include "sov/operators/operators.hpp"

namespace sov::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

ordered_json lambda_params(const Partition& lambda) {
  return ordered_json{{"L", lambda.length()}, {"lambda", lambda.parts()}};
}

ordered_json with(ordered_json p, const std::string& key, ordered_json v) {
  p[key] = std::move(v);
  return p;
}

ordered_json difference(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.vars() == rhs.vars()) return poly_to_json(lhs - rhs);
  return ordered_json{{"lhs", poly_to_json(lhs)}, {"rhs", poly_to_json(rhs)}};
}

CheckRecord compare(std::string check, ordered_json params, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  CheckRecord r{std::move(check), std::move(params), lhs == rhs, nullptr};
  if (!r.pass) r.witness = difference(lhs, rhs);
  return r;
}

CheckRecord is_zero_check(std::string check, ordered_json params, const LaurentPoly& residual) {
  CheckRecord r{std::move(check), std::move(params), residual.is_zero(), nullptr};
  if (!r.pass) r.witness = poly_to_json(residual);
  return r;
}

struct Defaults {
  std::size_t L_min;
  std::size_t L_max;
  int lambda_max;
};

std::vector<Partition> sweep(const SweepBounds& b, Defaults d) {
  if (b.lambda) return {*b.lambda};
  std::vector<Partition> out;
  const std::size_t L_max = b.L_max.value_or(d.L_max);
  const int lmax = b.lambda_max.value_or(d.lambda_max);
  for (std::size_t L = d.L_min; L <= L_max; ++L) {
    for (auto& p : partitions_in_box(L, lmax)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::size_t> lengths(const SweepBounds& b, Defaults d) {
  if (b.lambda) return {b.lambda->length()};
  std::vector<std::size_t> out;
  for (std::size_t L = d.L_min; L <= b.L_max.value_or(d.L_max); ++L) out.push_back(L);
  return out;
}

std::vector<std::size_t> indices(std::size_t hi, const std::optional<std::size_t>& only) {
  if (only) {
    if (*only >= 1 && *only <= hi) return {*only};
    return {};
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<Case> eigen_cases(const SweepBounds& b) {
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {1, 4, 3})) {
    const std::size_t L = lambda.length();
    for (std::size_t j : indices(L, b.j)) {
      auto params = with(lambda_params(lambda), "j", j);
      out.push_back({"eigen", params, [=] {
                       const LaurentPoly c = chi(lambda);
                       return compare("eigen", params, hamiltonian_apply(j, c, L), c * eigenvalue(lambda, j));
                     }});
    }
  }
  return out;
}

std::vector<Case> denominator_cases(const SweepBounds& b) {
  const Defaults d{1, 4, 3};
  std::vector<Case> out;
  for (std::size_t L : lengths(b, d)) {
    const ordered_json pL{{"L", L}};
    out.push_back({"weyl-denominator", pL, [=] {
                     return compare("weyl-denominator", pL, a_mu(delta(L)), weyl_denominator_product(L));
                   }});
    for (std::size_t k = 1; k <= L + 1; ++k) {
      const auto p = with(pL, "k", k);
      out.push_back({"a-delta-trunc", p, [=] {
                       return compare("a-delta-trunc", p, a_mu_trunc(delta(L), k), a_delta_trunc_product(L, k));
                     }});
    }
  }
  for (const Partition& lambda : sweep(b, d)) {
    const auto p = lambda_params(lambda);
    out.push_back({"a2-expansion", p, [=] {
                     const MuVector mu = mu_from_lambda(lambda);
                     return compare("a2-expansion", p, a_mu_trunc(mu, 2, {"z"}), a2_mu_expansion(mu));
                   }});
    out.push_back({"dimension", p, [=] {
                     const MuVector mu = mu_from_lambda(lambda);
                     const LaurentPoly c = chi(lambda);
                     const Rational at_one = eval_at_one(c, c.vars().names()).constant_term();
                     const Rational ratio = a1_mu_product(mu) / a1_mu_product(delta(lambda.length()));
                     CheckRecord r{"dimension", p, at_one == dimension(lambda) && ratio == at_one, nullptr};
                     if (!r.pass) {
                       r.witness = ordered_json{{"chi_at_one", at_one.to_string()},
                                                {"dimension", dimension(lambda).to_string()},
                                                {"a1_ratio", ratio.to_string()}};
                     }
                     return r;
                   }});
  }
  return out;
}

std::vector<Case> inverse_s_cases(const SweepBounds& b) {
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {1, 3, 3})) {
    const auto p = lambda_params(lambda);
    out.push_back({"inverse-s", p, [=] {
                     const std::size_t L = lambda.length();
                     return compare("inverse-s", p, s_inverse_apply(q_product(lambda, L), L),
                                    chi(lambda) * dimension(lambda).inverse());
                   }});
  }
  return out;
}

std::vector<Case> inverse_sk_cases(const SweepBounds& b) {
  const bool printed = b.printed_sign;
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {1, 3, 3})) {
    const std::size_t L = lambda.length();
    for (std::size_t k : indices(L, b.k)) {
      auto p = with(lambda_params(lambda), "k", k);
      if (printed) p["sign"] = "printed";
      out.push_back({"inverse-sk", p, [=] {
                       LaurentPoly got = s_k_inverse_apply(q_product(lambda, k), L, k);
                       if (printed && s_k_inverse_sign_as_printed(L, k) != s_k_inverse_sign(L, k)) got = -got;
                       return compare("inverse-sk", p, got, chi_truncated(lambda, k) * dimension(lambda).inverse());
                     }});
    }
  }
  return out;
}

std::vector<Case> w_cases(const SweepBounds& b) {
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {1, 4, 3})) {
    const auto p = lambda_params(lambda);
    out.push_back({"w-annihilate", p, [=] { return is_zero_check("w-annihilate", p, diff2_residual(lambda)); }});
    out.push_back({"w-annihilate-z", p, [=] {
                     return is_zero_check("w-annihilate-z", p, w_operator_residual(lambda).numerator());
                   }});
  }
  return out;
}

// Seeded weights c_1..c_L with sum 1; the last one absorbs the remainder.
std::vector<WeightVector> weight_vectors(std::size_t L, std::size_t count) {
  std::mt19937 gen(static_cast<std::mt19937::result_type>(1000 + L));
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<WeightVector> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Rational> c;
    Rational sum(0);
    for (std::size_t i = 0; i + 1 < L; ++i) {
      c.emplace_back(num(gen), den(gen));
      sum += c.back();
    }
    c.push_back(Rational(1) - sum);
    out.emplace_back(std::move(c));
  }
  return out;
}

constexpr std::size_t kWeightCount = 5;

std::vector<Case> factorized_h_cases(const SweepBounds& b) {
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {1, 4, 3})) {
    const std::size_t L = lambda.length();
    const auto weights = weight_vectors(L, kWeightCount);
    for (std::size_t w = 0; w < weights.size(); ++w) {
      ordered_json c = ordered_json::array();
      for (std::size_t i = 0; i < L; ++i) c.push_back(weights[w][i].to_string());
      for (std::size_t j : indices(L, b.j)) {
        auto p = with(with(lambda_params(lambda), "j", j), "weights", c);
        const WeightVector wv = weights[w];
        out.push_back({"factorized-h", p, [=] {
                         return compare("factorized-h", p, factorized_hamiltonian_apply(lambda, j, wv),
                                        q_product(lambda, L) * eigenvalue(lambda, j));
                       }});
      }
    }
  }
  return out;
}

std::vector<Case> qred_cases(const SweepBounds& b) {
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {1, 3, 2})) {
    const auto p = lambda_params(lambda);
    out.push_back({"qred", p, [=] {
                     const LaurentPoly got = q_operator_integral_apply(lambda);
                     const MuVector mu = mu_from_lambda(lambda);
                     return compare("qred", p, got, phi_mu(mu).embed(got.vars()) * a_mu(mu).embed(got.vars()));
                   }});
  }
  return out;
}

std::vector<Case> aam_cases(const SweepBounds& b) {
  SweepBounds capped = b;
  const std::size_t cap = b.aam_L3 ? 3 : 2;
  if (!capped.L_max || *capped.L_max > cap) capped.L_max = std::min<std::size_t>(capped.L_max.value_or(cap), cap);
  if (b.lambda && b.lambda->length() > cap) {
    throw UsageError("aam at L = 3 needs --aam-L3; larger L is not supported");
  }
  std::vector<Case> out;
  for (const Partition& lambda : sweep(capped, {1, 2, 2})) {
    for (std::size_t k : indices(lambda.length(), b.k)) {
      const auto p = with(lambda_params(lambda), "k", k);
      out.push_back({"aam", p, [=] {
                       const EpsLimitResult r = a_k_integral_run(lambda, k);
                       const MuVector mu = mu_from_lambda(lambda);
                       const VarSet vs = VarSet::numbered("x", k);
                       const LaurentPoly rhs = phi_mu(mu, "x" + std::to_string(k)).embed(vs) * a_mu_trunc(mu, k).embed(vs);
                       CheckRecord rec = compare("aam", p, r.extracted.embed(vs), rhs);
                       if (!r.series[0].is_zero()) {
                         rec.pass = false;
                         rec.witness = ordered_json{{"eps0", poly_to_json(r.series[0])}};
                       }
                       return rec;
                     }});
    }
  }
  return out;
}

std::vector<Case> kprop_cases(const SweepBounds& b) {
  std::vector<Case> out;
  for (const Partition& lambda : sweep(b, {2, 3, 2})) {
    for (std::size_t k : indices(lambda.length(), b.k)) {
      const auto p = with(lambda_params(lambda), "k", k);
      out.push_back({"kprop-direct", p, [=] {
                       return CheckRecord{"kprop-direct", p, kprop_direct_verify(lambda, k), nullptr};
                     }});
      out.push_back({"kprop-inductive", p, [=] {
                       return CheckRecord{"kprop-inductive", p, kprop_inductive_verify(lambda, k), nullptr};
                     }});
    }
  }
  return out;
}

CharacterExpansion random_expansion(std::size_t L, int lmax, unsigned seed) {
  std::mt19937 gen(seed);
  const auto basis = partitions_in_box(L, lmax);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::bernoulli_distribution neg(0.5);
  CharacterExpansion e(L);
  const int n = terms(gen);
  for (int i = 0; i < n; ++i) {
    const Rational c(neg(gen) ? -num(gen) : num(gen), den(gen));
    e.add(basis[pick(gen)], c);
  }
  return e;
}

constexpr int kRoundTripTrials = 3;

std::vector<Case> roundtrip_cases(const SweepBounds& b) {
  const Defaults d{1, 3, 2};
  const int lmax = b.lambda_max.value_or(d.lambda_max);
  std::vector<Case> out;
  for (std::size_t L : lengths(b, d)) {
    for (int trial = 0; trial < kRoundTripTrials; ++trial) {
      const CharacterExpansion e = random_expansion(L, lmax, static_cast<unsigned>(100 * L + trial));
      const ordered_json p{{"L", L}, {"trial", trial}, {"expansion", expansion_to_json(e)}};
      out.push_back({"roundtrip-s", p, [=] {
                       return compare("roundtrip-s", p, s_inverse_apply(separating_operator_apply(e), L), reconstruct(e));
                     }});
      out.push_back({"roundtrip-chain", p, [=] {
                       return compare("roundtrip-chain", p, separating_operator_chain(e), separating_operator_apply(e));
                     }});
      out.push_back({"roundtrip-basis", p, [=] {
                       const CharacterExpansion back = expand_in_chi_basis(reconstruct(e), L);
                       CheckRecord r{"roundtrip-basis", p, back == e, nullptr};
                       if (!r.pass) r.witness = expansion_to_json(back);
                       return r;
                     }});
      out.push_back({"roundtrip-json", p, [=] {
                       const std::string poly = poly_to_json(reconstruct(e)).dump();
                       const std::string exp = expansion_to_json(e).dump();
                       const bool ok = poly_to_json(poly_from_json(ordered_json::parse(poly))).dump() == poly &&
                                       expansion_to_json(expansion_from_json(ordered_json::parse(exp), L)).dump() == exp;
                       return CheckRecord{"roundtrip-json", p, ok, nullptr};
                     }});
    }
  }
  return out;
}

using SuiteFn = std::vector<Case> (*)(const SweepBounds&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"eigen", eigen_cases},
      {"denominator", denominator_cases},
      {"inverse-s", inverse_s_cases},
      {"inverse-sk", inverse_sk_cases},
      {"w-annihilate", w_cases},
      {"factorized-h", factorized_h_cases},
      {"qred", qred_cases},
      {"aam", aam_cases},
      {"kprop", kprop_cases},
      {"roundtrip", roundtrip_cases},
  };
  return table;
}

std::string params_text(const ordered_json& params) {
  std::string out;
  for (const auto& [key, v] : params.items()) {
    if (key == "expansion") continue;
    if (!out.empty()) out += ' ';
    out += key + '=';
    if (v.is_array()) {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      out += joined;
    } else {
      out += v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: " + item);
    }
    if (used != item.size()) throw UsageError("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

struct Options {
  std::optional<std::size_t> L;
  std::optional<std::string> lambda;
  std::optional<std::size_t> k;
  std::optional<std::size_t> j;
  std::optional<std::size_t> L_max;
  std::optional<int> lambda_max;
  std::optional<unsigned> jobs;
  std::string out;
  std::string format = "json";
  bool pretty = false;
  bool aam_L3 = false;
  bool printed_sign = false;
  std::optional<std::string> sizes;
};

std::optional<Partition> resolve_lambda(const Options& o) {
  if (!o.lambda) {
    if (o.L) throw UsageError("--L given without --lambda");
    return std::nullopt;
  }
  Partition p({0});
  try {
    p = Partition::parse(*o.lambda);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --lambda: ") + e.what());
  }
  if (o.L && *o.L != p.length()) throw UsageError("--lambda length must equal --L");
  if (p.length() > 16) throw UsageError("at most 16 variables are supported");
  return p;
}

std::string format_of(const Options& o) { return o.pretty ? "pretty" : o.format; }

int cmd_compute(const std::string& what, const Options& o, std::ostream& out) {
  const auto lambda = resolve_lambda(o);
  if (!lambda) throw UsageError("compute needs --lambda");
  const std::size_t L = lambda->length();
  const MuVector mu = mu_from_lambda(*lambda);
  ordered_json params = lambda_params(*lambda);
  std::optional<LaurentPoly> poly;
  std::optional<Rational> value;
  if (what == "chi") {
    poly = chi(*lambda);
  } else if (what == "chi-trunc") {
    if (!o.k || *o.k < 1 || *o.k > L) throw UsageError("chi-trunc needs 1 <= --k <= L");
    params["k"] = *o.k;
    poly = chi_truncated(*lambda, *o.k);
  } else if (what == "q") {
    poly = q_poly(*lambda);
  } else if (what == "dim") {
    value = dimension(*lambda);
  } else if (what == "a-mu") {
    poly = a_mu(mu);
  } else {
    poly = phi_mu(mu);
  }
  const std::string fmt = format_of(o);
  if (fmt == "pretty") {
    out << (value ? value->to_string() : poly->to_string()) << '\n';
  } else if (fmt == "csv") {
    if (value) {
      out << "value\n" << value->to_string() << '\n';
    } else {
      out << "coeff";
      for (const auto& n : poly->vars().names()) out << ',' << n;
      out << '\n';
      for (const auto& t : poly->terms()) {
        out << t.coeff.to_string();
        for (int e : t.exps.to_vector()) out << ',' << e;
        out << '\n';
      }
    }
  } else {
    ordered_json j{{"what", what}, {"params", params}};
    j["result"] = value ? ordered_json(value->to_string()) : poly_to_json(*poly);
    out << j.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, const Options& o, std::ostream& out) {
  SweepBounds b;
  b.L_max = o.L_max;
  b.lambda_max = o.lambda_max;
  b.lambda = resolve_lambda(o);
  b.k = o.k;
  b.j = o.j;
  b.aam_L3 = o.aam_L3;
  b.printed_sign = o.printed_sign;
  for (const auto& idx : {o.k, o.j}) {
    if (idx && (*idx < 1 || (b.lambda && *idx > b.lambda->length()))) throw UsageError("--k and --j must lie in 1..L");
  }
  std::vector<Case> cases;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      auto more = suite_cases(name, b);
      cases.insert(cases.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
  } else {
    cases = suite_cases(suite, b);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run_cases(cases, resolve_jobs(o.jobs));
  const double secs = seconds_since(t0);
  std::size_t passed = 0;
  for (const auto& r : records) passed += r.pass ? 1 : 0;
  const std::size_t failed = records.size() - passed;

  const std::string fmt = format_of(o);
  if (fmt == "pretty") {
    for (const auto& r : records) out << (r.pass ? "PASS " : "FAIL ") << r.check << ' ' << params_text(r.params) << '\n';
    out << suite << ": " << passed << '/' << records.size() << " passed in " << fixed(secs, 3) << " s\n";
  } else if (fmt == "csv") {
    out << "check,params,pass\n";
    for (const auto& r : records) {
      out << r.check << ',' << csv_field(params_text(r.params)) << ',' << (r.pass ? "true" : "false") << '\n';
    }
  } else {
    for (const auto& r : records) out << record_to_json(r).dump() << '\n';
    ordered_json summary{{"suite", suite}, {"total", records.size()}, {"passed", passed},
                         {"failed", failed}, {"seconds", fixed(secs, 3)}};
    out << ordered_json{{"summary", summary}}.dump() << '\n';
  }
  return failed == 0 ? 0 : 1;
}

struct BenchRow {
  int size;
  std::string method;
  double seconds;
  std::size_t terms;
};

int cmd_bench(const std::string& target, const Options& o, std::ostream& out, std::ostream& err) {
  const bool det = target == "det-vs-product";
  const int cap = det ? 6 : 4;
  std::vector<int> sizes = o.sizes ? parse_int_list(*o.sizes) : (det ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{1, 2, 3});
  for (int s : sizes) {
    if (s < 1 || s > cap) throw UsageError("bench size out of range 1.." + std::to_string(cap));
  }
  std::vector<BenchRow> rows;
  bool ok = true;
  for (int s : sizes) {
    const std::size_t L = static_cast<std::size_t>(s);
    if (det) {
      auto t0 = std::chrono::steady_clock::now();
      const LaurentPoly d = a_mu(delta(L));
      rows.push_back({s, "determinant", seconds_since(t0), d.size()});
      t0 = std::chrono::steady_clock::now();
      const LaurentPoly p = weyl_denominator_product(L);
      rows.push_back({s, "product", seconds_since(t0), p.size()});
      if (d != p) {
        err << "det-vs-product: determinant and product differ at L = " << s << '\n';
        ok = false;
      }
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      const LaurentPoly q = q_operator_integral_apply(Partition::zero(L));
      rows.push_back({s, "qred", seconds_since(t0), q.size()});
    }
  }
  if (format_of(o) == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"size", r.size}, {"method", r.method}, {"wall_time", fixed(r.seconds)}, {"term_count", r.terms}});
    }
    out << arr.dump() << '\n';
  } else {
    out << "size,method,wall_time,term_count\n";
    for (const auto& r : rows) out << r.size << ',' << r.method << ',' << fixed(r.seconds) << ',' << r.terms << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

ordered_json record_to_json(const CheckRecord& r) {
  return ordered_json{{"check", r.check}, {"params", r.params}, {"pass", r.pass}, {"witness", r.witness}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<Case> suite_cases(const std::string& suite, const SweepBounds& bounds) {
  for (const auto& [name, fn] : suites()) {
    if (name == suite) return fn(bounds);
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<CheckRecord> run_cases(const std::vector<Case>& cases, unsigned jobs) {
  std::vector<CheckRecord> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i].run();
      } catch (const std::exception& e) {
        results[i] = CheckRecord{cases[i].check, cases[i].params, false, ordered_json{{"error", e.what()}}};
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  if (n == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

unsigned resolve_jobs(std::optional<unsigned> flag) {
  if (flag) return std::max(1u, *flag);
  if (const char* env = std::getenv("SOV_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic characters and separation-of-variables toolkit", "sov"};
  app.require_subcommand(1);
  Options o;
  std::string what;
  std::string suite;
  std::string target;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--jobs", o.jobs, "Worker threads (fallback: SOV_JOBS)")->check(CLI::PositiveNumber);
  };
  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--L", o.L, "Number of variables")->check(CLI::Range(1, 16));
    sub->add_option("--lambda", o.lambda, "Partition, comma separated");
  };

  CLI::App* compute = app.add_subcommand("compute", "Compute a character-theoretic object");
  compute->add_option("what", what)->required()->check(CLI::IsMember({"chi", "chi-trunc", "q", "dim", "a-mu", "phi"}));
  add_lambda(compute);
  compute->add_option("--k", o.k, "Truncation index");
  compute->add_flag("--pretty", o.pretty, "Human readable output");
  add_common(compute);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(allowed));
  add_lambda(verify);
  verify->add_option("--k", o.k, "Restrict to this k");
  verify->add_option("--j", o.j, "Restrict to this j");
  verify->add_option("--Lmax", o.L_max, "Largest L in the sweep")->check(CLI::Range(1, 8));
  verify->add_option("--lmax", o.lambda_max, "Largest part lambda_1 in the sweep")->check(CLI::Range(0, 20));
  verify->add_flag("--aam-L3", o.aam_L3, "Include L = 3 in the aam suite");
  verify->add_flag("--printed-sign", o.printed_sign, "Use the sign (-1)^{L(L-1)/2+k(L+1)} in inverse-sk");
  verify->add_flag("--pretty", o.pretty, "Human readable output");
  add_common(verify);

  CLI::App* bench = app.add_subcommand("bench", "Time a computation over sizes");
  bench->add_option("target", target)->required()->check(CLI::IsMember({"det-vs-product", "qred-scaling"}));
  bench->add_option("--sizes", o.sizes, "Comma separated sizes; empty for none");
  o.format = "json";
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (bench->parsed() && bench->count("--format") == 0) o.format = "csv";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "cannot open " << o.out << '\n';
      return 2;
    }
    sink = &file;
  }
  try {
    if (compute->parsed()) return cmd_compute(what, o, *sink);
    if (verify->parsed()) return cmd_verify(suite, o, *sink);
    return cmd_bench(target, o, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage{"sov"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sov::cli
