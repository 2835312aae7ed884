// Copyright 2026 The refkac Authors
// SPDX-License-Identifier: Apache-2.0

#include "refkac/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "refkac/error.hpp"
#include "refkac/hua.hpp"
#include "refkac/partitions.hpp"
#include "refkac/table_io.hpp"

namespace refkac {

namespace detail {
extern const std::string_view golden_tables;
}

// ---------------------------------------------------------------------------
// reports

bool CheckReport::passed() const { return error.empty() && failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

void CheckReport::add(std::string input, std::string expected, std::string actual, bool pass) {
  cases.push_back({std::move(input), std::move(expected), std::move(actual), pass});
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& check : checks) {
    if (check.passed()) {
      out << "PASS " << check.name << " (" << check.cases.size() << " cases)\n";
      continue;
    }
    ++failed;
    if (!check.error.empty()) {
      out << "FAIL " << check.name << ": " << check.error << "\n";
      continue;
    }
    out << "FAIL " << check.name << " (" << check.failures() << " of " << check.cases.size()
        << " cases failed)\n";
    for (const auto& c : check.cases) {
      if (c.pass) continue;
      out << "  " << c.input << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
  }
  out << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed\n"
                      : std::to_string(failed) + " of " + std::to_string(checks.size()) +
                            " checks failed\n");
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& check : checks) {
    nlohmann::ordered_json c;
    c["name"] = check.name;
    c["status"] = check.passed() ? "pass" : "fail";
    if (!check.error.empty()) c["error"] = check.error;
    c["cases"] = nlohmann::ordered_json::array();
    for (const auto& r : check.cases) {
      c["cases"].push_back(
          {{"input", r.input}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
    }
    doc["checks"].push_back(std::move(c));
  }
  return doc.dump(2) + "\n";
}

namespace {

// Runs body and turns an escaping exception into a check-level error.
CheckReport guarded(std::string name, const std::function<void(CheckReport&)>& body) {
  CheckReport report;
  report.name = std::move(name);
  try {
    body(report);
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  return report;
}

std::string dim_string(std::span<const unsigned> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

DimVector parse_dim_vector(std::string_view text) { return parse_dim_vector_text(text); }

unsigned total(std::span<const unsigned> v) {
  unsigned t = 0;
  for (unsigned x : v) t += x;
  return t;
}

std::string quiver_tag(const Quiver& q) { return render_quiver_matrix(q); }

std::string shape_of(const RationalFunction& r) {
  if (rf_is_nonneg_int_poly(r)) return "non-negative integer polynomial";
  if (rf_as_polynomial(r)) return "integer polynomial with negative coefficients";
  if (rf_as_laurent(r)) return "Laurent polynomial";
  return "rational function";
}

// Series equality reported term by term over the union of keys.
void compare_series(CheckReport& report, const std::string& label, const TruncatedSeries& expected,
                    const TruncatedSeries& actual) {
  std::map<Monomial, std::pair<RationalFunction, RationalFunction>> keys;
  for (const auto& [k, c] : expected.terms()) keys[k].first = c;
  for (const auto& [k, c] : actual.terms()) keys[k].second = c;
  for (const auto& [k, pair] : keys) {
    report.add(label + " " + dim_string(k.exps), pair.first.to_string(), pair.second.to_string(),
               pair.first == pair.second);
  }
  if (keys.empty()) report.add(label, "0", "0", true);
}

Quiver looped_arrow_quiver() { return Quiver({{1, 1}, {0, 1}}); }
Quiver a2_quiver() { return Quiver({{0, 1}, {0, 0}}); }

}  // namespace

// ---------------------------------------------------------------------------
// golden tables

CheckReport check_tables() {
  return guarded("tables", [](CheckReport& report) {
    struct Row {
      std::string table, quiver, key, multiplicity, value;
    };
    std::vector<Row> rows;
    std::istringstream in{std::string(detail::golden_tables)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> fields;
      std::istringstream ls(line);
      std::string f;
      while (std::getline(ls, f, '\t')) fields.push_back(f);
      if (fields.size() != 5) throw Error(ErrorCode::parse_error, "malformed golden row: " + line);
      rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4]});
    }

    // Each table is computed once at the largest weight any of its rows needs.
    std::map<std::string, unsigned> kac_bound;
    std::map<std::string, unsigned> refined_bound;
    for (const auto& r : rows) {
      if (r.multiplicity == "-") {
        kac_bound[r.quiver] = std::max(kac_bound[r.quiver], total(parse_dim_vector(r.key)));
      } else {
        refined_bound[r.quiver] =
            std::max(refined_bound[r.quiver], tuple_weight(parse_partition_tuple(r.key)));
      }
    }
    std::map<std::string, KacTable> kac;
    std::map<std::string, RefinedKacTable> refined;
    for (const auto& [q, w] : kac_bound) kac.emplace(q, kac_table(parse_quiver(q), w));
    for (const auto& [q, w] : refined_bound) refined.emplace(q, refined_kac_table(parse_quiver(q), w));

    for (const auto& r : rows) {
      const std::string input = r.table + " " + r.quiver + " " + r.key;
      RationalFunction value;
      std::string expected = r.value;
      std::string actual;
      bool mult_ok = true;
      if (r.multiplicity == "-") {
        value = kac.at(r.quiver).at(parse_dim_vector(r.key));
      } else {
        const PartitionTuple lambda = parse_partition_tuple(r.key);
        value = refined.at(r.quiver).at(lambda);
        const std::string mult = render_multiplicity(tuple_multiplicity_matrix(lambda));
        mult_ok = mult == r.multiplicity;
        if (!mult_ok) {
          expected = r.multiplicity + " " + r.value;
          actual = mult + " ";
        }
      }
      actual += value.to_string();
      const bool pass = mult_ok && value.to_string() == r.value &&
                        parse_rational_function(r.value) == value;
      report.add(input, expected, actual, pass);
    }
  });
}

// ---------------------------------------------------------------------------
// identities

CheckReport check_sum_identity(const Quiver& quiver, unsigned weight) {
  return guarded("sum-identity " + quiver_tag(quiver) + " W=" + std::to_string(weight),
                 [&](CheckReport& report) {
                   const KacTable kac = kac_table(quiver, weight);
                   const RefinedKacTable refined = refined_kac_table(quiver, weight);
                   for (const auto& alpha : kac.keys()) {
                     RationalFunction sum;
                     for (const auto& lambda : lambda_fiber(alpha)) sum += refined.at(lambda);
                     const RationalFunction a = kac.at(alpha);
                     report.add(dim_string(alpha), a.to_string(), sum.to_string(), a == sum);
                   }
                 });
}

CheckReport check_level_transport(const Quiver& quiver, unsigned m, unsigned weight) {
  if (!has_enough_loops(quiver)) {
    throw Error(ErrorCode::precondition, "level transport needs a loop at every vertex");
  }
  return guarded("levels " + quiver_tag(quiver) + " m=" + std::to_string(m) +
                     " W=" + std::to_string(weight),
                 [&](CheckReport& report) {
                   const Quiver big = gamma_m(quiver, m);
                   const RefinedKacTable left = refined_kac_table(quiver, weight, m);
                   const RefinedKacTable right = refined_kac_table(big, weight, 1);
                   for (const auto& lambda : left.keys()) {
                     const PartitionTuple image = tau_m(lambda, m);
                     const RationalFunction a = left.at(lambda);
                     const RationalFunction b = right.at(image);
                     report.add(render_tuple_table(lambda) + " -> " + render_tuple_table(image),
                                a.to_string(), b.to_string(), a == b);
                   }
                 });
}

CheckReport check_gloop_closed_forms(unsigned g) {
  return guarded("closed-forms g=" + std::to_string(g), [&](CheckReport& report) {
    if (g == 0) throw Error(ErrorCode::invalid_argument, "g must be positive");
    const long gi = g;
    const RationalFunction q = RationalFunction::q();
    const RationalFunction one(1);
    auto qp = [](long e) { return RationalFunction::q_power(e); };
    struct Form {
      std::string lambda, image;
      RationalFunction value;
    };
    const std::vector<Form> forms = {
        {"[2]", "[];[1]", qp(2 * gi - 1)},
        {"[2,1]", "[1];[1]", qp(3 * gi - 1) * (qp(2 * gi - 2) - one) / (q - one)},
        {"[2,2]", "[];[1,1]", qp(4 * gi - 1) * (qp(4 * gi - 4) - one) / (q * q - one)},
        {"[2,1,1]", "[1,1];[1]",
         qp(4 * gi - 1) *
             (qp(6 * gi - 5) - RationalFunction(2) * qp(2 * gi - 1) - qp(2 * gi - 2) + q + one) /
             ((q * q - one) * (q - one))},
    };
    const Quiver base = Quiver::loops(g);
    const RefinedKacTable left = refined_kac_table(base, 4, 2);
    const RefinedKacTable right = refined_kac_table(gamma_m(base, 2), 4, 1);
    for (const auto& f : forms) {
      const PartitionTuple lambda = parse_partition_tuple(f.lambda);
      const PartitionTuple image = parse_partition_tuple(f.image);
      if (tau_m(lambda, 2) != image) {
        report.add("tau_2 " + f.lambda, f.image, render_partition_tuple(tau_m(lambda, 2)), false);
      }
      const RationalFunction a = left.at(lambda);
      const RationalFunction b = right.at(image);
      report.add("A(" + f.lambda + ")", f.value.to_string(), a.to_string(), a == f.value);
      report.add("A_Gamma2(" + render_tuple_table(image) + ")", f.value.to_string(), b.to_string(),
                 b == f.value);
    }
  });
}

CheckReport check_positivity(const Quiver& quiver, unsigned weight) {
  return guarded("positivity " + quiver_tag(quiver) + " W=" + std::to_string(weight),
                 [&](CheckReport& report) {
                   const bool claim = has_enough_loops(quiver);
                   const RefinedKacTable refined = refined_kac_table(quiver, weight);
                   for (const auto& lambda : refined.keys()) {
                     const RationalFunction a = refined.at(lambda);
                     if (claim) {
                       report.add(render_tuple_table(lambda), "non-negative integer polynomial",
                                  a.to_string(), rf_is_nonneg_int_poly(a));
                     } else {
                       report.add(render_tuple_table(lambda), "no claim (quiver lacks loops)",
                                  a.to_string() + " [" + shape_of(a) + "]", true);
                     }
                   }
                 });
}

CheckReport check_jordan(unsigned weight) {
  return guarded("jordan W=" + std::to_string(weight), [&](CheckReport& report) {
    const RefinedKacTable refined = refined_kac_table(Quiver::loops(1), weight);
    for (const auto& lambda : refined.keys()) {
      const bool single_part = lambda[0].parts().size() == 1;
      const RationalFunction expected = single_part ? RationalFunction::q() : RationalFunction();
      const RationalFunction a = refined.at(lambda);
      report.add(render_tuple_table(lambda), expected.to_string(), a.to_string(), a == expected);
    }
  });
}

CheckReport check_heine(unsigned weight) {
  return guarded("heine W=" + std::to_string(weight), [&](CheckReport& report) {
    if (weight == 0) throw Error(ErrorCode::invalid_argument, "weight must be at least 1");
    const Grading g = Grading::uniform(1, weight);
    const RationalFunction q = RationalFunction::q();
    const RationalFunction one(1);

    TruncatedSeries q_factorial_sum(g);
    TruncatedSeries gl_sum(g);
    RationalFunction prod(1);
    for (unsigned m = 0; m <= weight; ++m) {
      if (m > 0) prod *= one - q.pow(m);
      q_factorial_sum.add_term(std::vector<unsigned>{m}, one / prod);
      const unsigned mm[] = {m};
      gl_sum.add_term(std::vector<unsigned>{m},
                      q.pow(static_cast<long>(m) * m) / RationalFunction(gl_order(mm)));
    }
    TruncatedSeries x(g);
    x.add_term(std::vector<unsigned>{1}, one);

    compare_series(report, "sum X^m/(1-q)..(1-q^m) vs Exp(X/(1-q))", q_factorial_sum,
                   plethystic_exp(x * (one / (one - q))));
    compare_series(report, "sum q^(m^2)/|GL(m)| X^m vs Exp(qX/(q-1))", gl_sum,
                   plethystic_exp(x * (q / (q - one))));

    // the second form is the first with q -> 1/q
    TruncatedSeries inverted(g);
    for (const auto& [k, c] : q_factorial_sum.terms()) inverted.add_term(k, c.substitute_inverse());
    compare_series(report, "q -> 1/q of the first form", gl_sum, inverted);
  });
}

CheckReport check_single_level(const Quiver& quiver, unsigned weight) {
  return guarded("width1 " + quiver_tag(quiver) + " W=" + std::to_string(weight),
                 [&](CheckReport& report) {
                   const std::size_t n = quiver.vertex_count();
                   const Grading g = Grading::uniform(n, weight);
                   TruncatedSeries lhs(g);
                   lhs.add_term(std::vector<unsigned>(n, 0), RationalFunction(1));
                   for (const auto& alpha : dimension_vectors(n, weight)) {
                     lhs.add_term(alpha, RationalFunction::q_power(rep_space_exponent(quiver, alpha)) /
                                             RationalFunction(gl_order(alpha)));
                   }
                   const RefinedKacTable refined = refined_kac_table(quiver, weight, 1);
                   TruncatedSeries arg(g);
                   const RationalFunction inv = RationalFunction(1) / (RationalFunction::q() - 1);
                   for (const auto& lambda : refined.keys()) {
                     // for 0/1 partitions the multiplicity vector is the size vector
                     arg.add_term(tuple_weights(lambda), refined.at(lambda) * inv);
                   }
                   compare_series(report, "coefficient", lhs, plethystic_exp(arg));
                 });
}

CheckReport check_random_transport(unsigned trials, unsigned weight, std::uint64_t seed) {
  return guarded("transport trials=" + std::to_string(trials) + " W=" + std::to_string(weight),
                 [&](CheckReport& report) {
                   std::mt19937_64 rng(seed);
                   const RationalFunction inv = RationalFunction(1) / (RationalFunction::q() - 1);
                   for (unsigned t = 0; t < trials; ++t) {
                     const std::size_t n = 1 + rng() % 2;
                     std::vector<std::vector<unsigned>> c(n, std::vector<unsigned>(n, 0));
                     if (t > 0) {
                       for (auto& row : c)
                         for (auto& e : row) e = static_cast<unsigned>(rng() % 3);
                     }
                     const Quiver twist(c);
                     const Grading g = Grading::uniform(n, weight);
                     const auto dims = dimension_vectors(n, weight);
                     std::map<DimVector, RationalFunction> v;
                     TruncatedSeries arg(g);
                     for (const auto& alpha : dims) {
                       if (rng() % 3 == 0) continue;
                       std::vector<Integer> coeffs(1 + rng() % 3);
                       for (auto& x : coeffs) x = static_cast<long>(rng() % 3);
                       const RationalFunction poly{IntPolynomial(coeffs)};
                       if (poly.is_zero()) continue;
                       v[alpha] = poly;
                       arg.add_term(alpha, poly * inv);
                     }
                     const TruncatedSeries u = plethystic_exp(arg);
                     TruncatedSeries twisted(g);
                     for (const auto& [k, coeff] : u.terms()) {
                       twisted.add_term(k, coeff * RationalFunction::q_power(
                                                       rep_space_exponent(twist, k.exps)));
                     }
                     const TruncatedSeries recovered =
                         plethystic_log(twisted) * (RationalFunction::q() - 1);
                     const std::string tag = "trial " + std::to_string(t) + " C=" + quiver_tag(twist);
                     for (const auto& alpha : dims) {
                       const RationalFunction r = recovered.coefficient(alpha);
                       if (t == 0) {
                         const auto it = v.find(alpha);
                         const RationalFunction want = it == v.end() ? RationalFunction() : it->second;
                         report.add(tag + " " + dim_string(alpha), want.to_string(), r.to_string(),
                                    r == want);
                       } else {
                         report.add(tag + " " + dim_string(alpha), "non-negative integer polynomial",
                                    r.to_string(), rf_is_nonneg_int_poly(r));
                       }
                     }
                   }
                 });
}

// ---------------------------------------------------------------------------
// oracle Log

TruncatedSeries oracle_log(const TruncatedSeries& f) {
  if (!f.constant_term().is_one()) {
    throw Error(ErrorCode::precondition, "oracle log needs constant term 1");
  }
  const Grading& full = f.grading();
  std::map<Monomial, RationalFunction> solved;
  for (unsigned w = 1; w <= full.bound; ++w) {
    // Exp of the part solved so far, computed only up to weight w. Adding
    // c X^k of weight w changes the weight-w part of Exp by exactly c X^k.
    const Grading gw(full.var_weights, w);
    TruncatedSeries partial(gw);
    for (const auto& [k, c] : solved) partial.add_term(k, c);
    const TruncatedSeries e = plethystic_exp(partial);
    std::map<Monomial, RationalFunction> level;
    for (const auto& [k, c] : f.terms()) {
      if (k.weight == w) level[k] += c;
    }
    for (const auto& [k, c] : e.terms()) {
      if (k.weight == w) level[k] -= c;
    }
    for (auto& [k, c] : level) {
      if (!c.is_zero()) solved.emplace(k, std::move(c));
    }
  }
  TruncatedSeries out(full);
  for (const auto& [k, c] : solved) out.add_term(k, c);
  return out;
}

TruncatedSeries random_series(std::mt19937_64& rng, const Grading& grading, unsigned max_terms) {
  TruncatedSeries s(grading);
  if (grading.bound == 0 || grading.var_count() == 0) return s;
  const RationalFunction q = RationalFunction::q();
  const std::vector<RationalFunction> dens = {RationalFunction(1), q - 1, q,     q + 1,
                                              RationalFunction(2), q * q + q + 1};
  const unsigned terms = 1 + static_cast<unsigned>(rng() % max_terms);
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(grading.var_count(), 0);
    // random walk up to a random target weight
    const unsigned target = 1 + static_cast<unsigned>(rng() % grading.bound);
    unsigned w = 0;
    for (int guard = 0; guard < 32 && w < target; ++guard) {
      const std::size_t j = rng() % grading.var_count();
      if (w + grading.var_weights[j] > grading.bound) continue;
      ++exps[j];
      w += grading.var_weights[j];
    }
    if (w == 0) continue;
    std::vector<Integer> coeffs(1 + rng() % 3);
    for (auto& c : coeffs) c = static_cast<long>(rng() % 7) - 3;
    const RationalFunction num{IntPolynomial(coeffs)};
    s.add_term(exps, num / dens[rng() % dens.size()]);
  }
  return s;
}

namespace {

Grading random_grading(std::mt19937_64& rng, unsigned max_vars, unsigned max_bound) {
  const std::size_t n = 1 + rng() % max_vars;
  std::vector<unsigned> weights(n, 1);
  // some cases use refined-style weights 1, 2, ...
  if (rng() % 3 == 0) {
    for (std::size_t j = 0; j < n; ++j) weights[j] = 1 + static_cast<unsigned>(j);
  }
  return Grading(std::move(weights), 1 + static_cast<unsigned>(rng() % max_bound));
}

}  // namespace

CheckReport check_oracle_log(const std::vector<std::pair<std::string, TruncatedSeries>>& series) {
  return guarded("oracle-log pipeline", [&](CheckReport& report) {
    for (const auto& [name, f] : series) {
      const TruncatedSeries fast = plethystic_log(f);
      const TruncatedSeries slow = oracle_log(f);
      report.add(name, std::to_string(slow.size()) + " terms (oracle)",
                 fast == slow ? "identical" : "differs", fast == slow);
    }
  });
}

CheckReport check_oracle_random(unsigned trials, std::uint64_t seed) {
  return guarded("oracle-log random trials=" + std::to_string(trials), [&](CheckReport& report) {
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
      const Grading g = random_grading(rng, 3, 5);
      const TruncatedSeries f = TruncatedSeries::one(g) + random_series(rng, g, 5);
      const TruncatedSeries fast = plethystic_log(f);
      const TruncatedSeries slow = oracle_log(f);
      report.add("trial " + std::to_string(t) + " vars=" + std::to_string(g.var_count()) +
                     " W=" + std::to_string(g.bound),
                 "oracle", fast == slow ? "identical" : "differs", fast == slow);
    }
  });
}

CheckReport check_exp_log_roundtrip(unsigned trials, std::uint64_t seed) {
  return guarded("exp-log roundtrip trials=" + std::to_string(trials), [&](CheckReport& report) {
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
      const Grading g = random_grading(rng, 3, 5);
      const TruncatedSeries s = random_series(rng, g, 5);
      const bool ok = plethystic_log(plethystic_exp(s)) == s;
      report.add("Log(Exp(s)) trial " + std::to_string(t), "s", ok ? "s" : "differs", ok);
    }
    for (unsigned t = 0; t < trials; ++t) {
      const Grading g = random_grading(rng, 3, 5);
      const TruncatedSeries f = TruncatedSeries::one(g) + random_series(rng, g, 5);
      const bool ok = plethystic_exp(plethystic_log(f)) == f;
      report.add("Exp(Log(f)) trial " + std::to_string(t), "f", ok ? "f" : "differs", ok);
    }
  });
}

std::vector<std::pair<std::string, TruncatedSeries>> pipeline_series() {
  std::vector<std::pair<std::string, TruncatedSeries>> out;
  auto add_p = [&](const Quiver& q, unsigned w) {
    out.emplace_back("P " + quiver_tag(q) + " W=" + std::to_string(w), p_series(q, w));
  };
  auto add_q = [&](const Quiver& q, unsigned w, std::optional<unsigned> m) {
    out.emplace_back("Q " + quiver_tag(q) + " W=" + std::to_string(w) +
                         (m ? " m=" + std::to_string(*m) : std::string()),
                     q_series(q, w, m));
  };
  for (const Quiver& q : {Quiver::loops(2), looped_arrow_quiver(), a2_quiver()}) {
    add_p(q, 4);
    add_q(q, 4, std::nullopt);
  }
  add_p(Quiver::loops(3), 3);
  add_q(Quiver::loops(3), 3, std::nullopt);
  for (unsigned g = 1; g <= 3; ++g) {
    add_q(Quiver::loops(g), 4, std::nullopt);
    add_q(Quiver::loops(g), 4, 2u);
    add_q(gamma_m(Quiver::loops(g), 2), 4, 1u);
  }
  add_q(gamma_m(looped_arrow_quiver(), 2), 4, 1u);
  add_q(looped_arrow_quiver(), 4, 2u);
  add_q(Quiver::loops(1), 6, std::nullopt);
  for (const Quiver& q : {Quiver::loops(2), looped_arrow_quiver(), a2_quiver()}) add_q(q, 3, 1u);

  // Heine left-hand sides
  const Grading g = Grading::uniform(1, 8);
  const RationalFunction q = RationalFunction::q();
  TruncatedSeries h1(g);
  TruncatedSeries h2(g);
  RationalFunction prod(1);
  for (unsigned m = 0; m <= 8; ++m) {
    if (m > 0) prod *= RationalFunction(1) - q.pow(m);
    h1.add_term(std::vector<unsigned>{m}, RationalFunction(1) / prod);
    const unsigned mm[] = {m};
    h2.add_term(std::vector<unsigned>{m},
                q.pow(static_cast<long>(m) * m) / RationalFunction(gl_order(mm)));
  }
  out.emplace_back("Heine q-factorial sum W=8", h1);
  out.emplace_back("Heine GL sum W=8", h2);
  return out;
}

// ---------------------------------------------------------------------------
// suites

namespace {

using SuiteFn = std::function<void(VerifyReport&, const SuiteOptions&)>;

unsigned pick(const SuiteOptions& o, unsigned fallback) { return o.weight.value_or(fallback); }

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"tables", [](VerifyReport& r, const SuiteOptions&) { r.checks.push_back(check_tables()); }},
      {"sum",
       [](VerifyReport& r, const SuiteOptions& o) {
         r.checks.push_back(check_sum_identity(Quiver::loops(2), pick(o, 4)));
         r.checks.push_back(check_sum_identity(looped_arrow_quiver(), pick(o, 4)));
         r.checks.push_back(check_sum_identity(a2_quiver(), pick(o, 4)));
         r.checks.push_back(check_sum_identity(Quiver::loops(3), pick(o, 3)));
       }},
      {"levels",
       [](VerifyReport& r, const SuiteOptions& o) {
         for (unsigned g = 1; g <= 3; ++g) {
           r.checks.push_back(check_level_transport(Quiver::loops(g), 2, pick(o, 4)));
           r.checks.push_back(check_gloop_closed_forms(g));
         }
         r.checks.push_back(check_level_transport(looped_arrow_quiver(), 2, pick(o, 4)));
       }},
      {"jordan",
       [](VerifyReport& r, const SuiteOptions& o) { r.checks.push_back(check_jordan(pick(o, 6))); }},
      {"positivity",
       [](VerifyReport& r, const SuiteOptions& o) {
         for (unsigned g = 1; g <= 3; ++g) {
           r.checks.push_back(check_positivity(Quiver::loops(g), pick(o, 4)));
         }
         r.checks.push_back(check_positivity(looped_arrow_quiver(), pick(o, 4)));
         r.checks.push_back(check_positivity(a2_quiver(), pick(o, 4)));
       }},
      {"heine",
       [](VerifyReport& r, const SuiteOptions& o) { r.checks.push_back(check_heine(pick(o, 8))); }},
      {"width1",
       [](VerifyReport& r, const SuiteOptions& o) {
         r.checks.push_back(check_single_level(Quiver::loops(2), pick(o, 3)));
         r.checks.push_back(check_single_level(a2_quiver(), pick(o, 3)));
         r.checks.push_back(check_single_level(looped_arrow_quiver(), pick(o, 3)));
       }},
      {"transport",
       [](VerifyReport& r, const SuiteOptions& o) {
         r.checks.push_back(check_random_transport(20, pick(o, 4), o.seed));
       }},
      {"oracle",
       [](VerifyReport& r, const SuiteOptions& o) {
         r.checks.push_back(check_oracle_log(pipeline_series()));
         r.checks.push_back(check_oracle_random(50, o.seed));
       }},
      {"roundtrip",
       [](VerifyReport& r, const SuiteOptions& o) {
         r.checks.push_back(check_exp_log_roundtrip(50, o.seed));
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_suite(std::string_view name, const SuiteOptions& options) {
  VerifyReport report;
  if (name == "theorem34") name = "levels";
  if (name == "all") {
    for (const auto& [n, fn] : suites()) fn(report, options);
    return report;
  }
  for (const auto& [n, fn] : suites()) {
    if (n == name) {
      fn(report, options);
      return report;
    }
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::invalid_argument,
              "unknown suite '" + std::string(name) + "'; known suites: all, " + known);
}

}  // namespace refkac
