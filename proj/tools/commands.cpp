#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropkap/error.hpp"
#include "tropkap/parse_io.hpp"

namespace tropkap::cli {

namespace {

using nlohmann::json;

// Bad command line values that CLI11 itself cannot catch.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalFlags {
  bool json = false;
  std::size_t threshold = kDefaultEnumerationThreshold;
};

struct SelectorFlags {
  std::string rows;
  std::string cols;
};

std::vector<std::size_t> parse_index_list(const std::string& text,
                                          std::size_t limit,
                                          const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    if (first == std::string::npos) {
      throw UsageError(std::string("empty entry in --") + what);
    }
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string("--") + what + " expects 1-based indices, got '" +
                       item + "'");
    }
    const std::size_t value = std::stoul(item);
    if (value < 1 || value > limit) {
      throw UsageError(std::string("--") + what + " index " + item +
                       " out of range 1.." + std::to_string(limit));
    }
    if (!out.empty() && value - 1 <= out.back()) {
      throw UsageError(std::string("--") + what +
                       " indices must be strictly increasing");
    }
    out.push_back(value - 1);
  }
  if (out.empty()) throw UsageError(std::string("--") + what + " is empty");
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

// nullopt when neither --rows nor --cols was given.
std::optional<SubmatrixSelector> selector_from(const SelectorFlags& flags,
                                               std::size_t rows,
                                               std::size_t cols) {
  if (flags.rows.empty() && flags.cols.empty()) return std::nullopt;
  SubmatrixSelector sel;
  sel.rows = flags.rows.empty() ? all_indices(rows)
                                : parse_index_list(flags.rows, rows, "rows");
  sel.cols = flags.cols.empty() ? all_indices(cols)
                                : parse_index_list(flags.cols, cols, "cols");
  return sel;
}

TropicalMatrix load_selected(const std::string& path,
                             const SelectorFlags& flags) {
  TropicalMatrix m = load_tropical_matrix(path);
  if (auto sel = selector_from(flags, m.rows(), m.cols())) {
    return m.submatrix(*sel);
  }
  return m;
}

PuiseuxMatrix load_selected_series(const std::string& path,
                                   const SelectorFlags& flags) {
  PuiseuxMatrix m = load_puiseux_matrix(path);
  if (auto sel = selector_from(flags, m.rows(), m.cols())) {
    return m.submatrix(*sel);
  }
  return m;
}

json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

json selector_json(const SubmatrixSelector& sel) {
  return json{{"rows", one_based(sel.rows)}, {"cols", one_based(sel.cols)}};
}

CommandResult finish(const json& doc, std::string human, int exit_code) {
  CommandResult r;
  r.exit_code = exit_code;
  r.human_report = std::move(human);
  r.machine_report = doc.dump(2) + "\n";
  return r;
}

CommandResult cmd_perm(const std::string& file, const SelectorFlags& sel,
                       const GlobalFlags& g) {
  const TropicalMatrix s = load_selected(file, sel);
  const PermanentCertificate cert = permanent(s, g.threshold);
  std::ostringstream human;
  human << "value=" << cert.value << " count=" << cert.optimal_count << "\n";
  human << "witnesses=";
  json witnesses = json::array();
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    if (i > 0) human << ' ';
    human << cert.witnesses[i].to_string();
    witnesses.push_back(cert.witnesses[i].one_line());
  }
  human << "\n";
  json doc{{"command", "perm"},
           {"value", cert.value.to_string()},
           {"optimal_count", cert.optimal_count},
           {"witnesses", witnesses}};
  return finish(doc, human.str(), kExitPass);
}

CommandResult cmd_singular(const std::string& file, const SelectorFlags& sel,
                           const GlobalFlags& g) {
  const TropicalMatrix s = load_selected(file, sel);
  const PermanentCertificate cert = permanent(s, g.threshold);
  const bool singular = cert.optimal_count >= 2;
  std::ostringstream human;
  human << "singular=" << (singular ? "true" : "false")
        << " count=" << cert.optimal_count << "\n";
  json doc{{"command", "singular"},
           {"singular", singular},
           {"optimal_count", cert.optimal_count},
           {"value", cert.value.to_string()}};
  return finish(doc, human.str(), kExitPass);
}

CommandResult cmd_troprank(const std::string& file, const SelectorFlags& sel,
                           const GlobalFlags& g) {
  const TropicalMatrix m = load_selected(file, sel);
  const TropicalRank r = tropical_rank(m, g.threshold);
  std::ostringstream human;
  human << "rank=" << r.rank << "\n"
        << "witness " << r.witness.to_string() << "\n";
  json doc{{"command", "troprank"},
           {"rank", r.rank},
           {"witness", selector_json(r.witness)}};
  return finish(doc, human.str(), kExitPass);
}

CommandResult cmd_deg(const std::string& file, const std::string& literal) {
  std::ostringstream human;
  json doc{{"command", "deg"}};
  if (!literal.empty()) {
    const Valuation v = deg(parse_series(literal));
    human << "deg=" << v.to_string() << "\n";
    doc["deg"] = v.to_string();
    return finish(doc, human.str(), kExitPass);
  }
  if (file.empty()) throw UsageError("deg needs a .pmat file or --series");
  const PuiseuxMatrix m = load_puiseux_matrix(file);
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string v = deg(m(i, j)).to_string();
      if (j > 0) human << ' ';
      human << v;
      row.push_back(v);
    }
    human << "\n";
    rows.push_back(row);
  }
  doc["degrees"] = rows;
  return finish(doc, human.str(), kExitPass);
}

CommandResult cmd_pdet(const std::string& file, const SelectorFlags& sel,
                       const GlobalFlags& g) {
  const PuiseuxMatrix m = load_selected_series(file, sel);
  const PuiseuxSeries det = determinant(m, g.threshold);
  const std::string text = format_series(det);
  const std::string d = deg(det).to_string();
  json doc{{"command", "pdet"}, {"det", text}, {"deg", d}};
  return finish(doc, "det=" + text + "\ndeg=" + d + "\n", kExitPass);
}

CommandResult cmd_prank(const std::string& file, const GlobalFlags& g) {
  const PuiseuxMatrix m = load_puiseux_matrix(file);
  const std::size_t r = series_rank(m, g.threshold);
  json doc{{"command", "prank"}, {"rank", r}};
  return finish(doc, "rank=" + std::to_string(r) + "\n", kExitPass);
}

CommandResult cmd_liftcheck(const std::string& trop_file,
                            const std::string& series_file) {
  const TropicalMatrix base = load_tropical_matrix(trop_file);
  const PuiseuxMatrix lift = load_puiseux_matrix(series_file);
  const auto mismatch = find_lift_mismatch(lift, base);
  json doc{{"command", "liftcheck"}, {"lift", !mismatch.has_value()}};
  if (!mismatch) return finish(doc, "lift=true\n", kExitPass);
  doc["reason"] = mismatch->message;
  if (!mismatch->dimension_mismatch) {
    doc["cell"] = {mismatch->row + 1, mismatch->col + 1};
  }
  return finish(doc, "lift=false\nreason=" + mismatch->message + "\n",
                kExitVerificationFailed);
}

CommandResult cmd_kapbound(const std::string& trop_file,
                           const std::string& series_file,
                           const GlobalFlags& g) {
  const TropicalMatrix base = load_tropical_matrix(trop_file);
  const PuiseuxMatrix lift = load_puiseux_matrix(series_file);
  const KapranovBounds b = kapranov_bounds(base, lift, g.threshold);
  json doc{{"command", "kapbound"}, {"lower", b.lower}, {"upper", b.upper}};
  std::ostringstream human;
  human << "lower=" << b.lower << " upper=" << b.upper << "\n";
  return finish(doc, human.str(), kExitPass);
}

std::string certificate_line(const CertificateReport& rep) {
  std::ostringstream os;
  const bool h61 = rep.nonzero_minor_name == "H61";
  os << "delta=" << rep.delta.to_string() << " case="
     << short_name(rep.case_taken);
  // The minor the case relies on is listed first.
  if (h61) {
    os << " deg_H61=" << rep.deg_h61.to_string()
       << " deg_H25=" << rep.deg_h25.to_string();
  } else {
    os << " deg_H25=" << rep.deg_h25.to_string()
       << " deg_H61=" << rep.deg_h61.to_string();
  }
  return os.str();
}

json certificate_json(const CertificateReport& rep) {
  return json{{"delta", rep.delta.to_string()},
              {"case", short_name(rep.case_taken)},
              {"deg_H25", rep.deg_h25.to_string()},
              {"deg_H61", rep.deg_h61.to_string()},
              {"nonzero_minor", rep.nonzero_minor_name},
              {"nonzero_minor_selector", selector_json(rep.nonzero_minor)},
              {"rank_lower_bound", rep.rank_lower_bound}};
}

CommandResult cmd_certify(const std::string& file) {
  const PuiseuxMatrix lift = load_puiseux_matrix(file);
  json doc{{"command", "certify"}};
  try {
    const CertificateReport rep = certify_rank5(lift);
    doc.update(certificate_json(rep));
    doc["pass"] = true;
    std::ostringstream human;
    human << certificate_line(rep) << "\n"
          << "nonzero_minor=" << rep.nonzero_minor_name << ' '
          << rep.nonzero_minor.to_string() << "\n"
          << "rank_lower_bound=" << rep.rank_lower_bound << "\n";
    return finish(doc, human.str(), kExitPass);
  } catch (const NotALiftError& e) {
    doc["pass"] = false;
    doc["reason"] = e.what();
    return finish(doc, std::string("certificate=FAIL\nreason=") + e.what() + "\n",
                  kExitVerificationFailed);
  } catch (const CertificateError& e) {
    doc["pass"] = false;
    doc["reason"] = e.what();
    return finish(doc, std::string("certificate=FAIL\nreason=") + e.what() + "\n",
                  kExitVerificationFailed);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct TrialOutcome {
  bool pass = false;
  DeltaCase delta_case = DeltaCase::equal_one;
  std::size_t rank = 0;
  std::string failure;
};

TrialOutcome run_trial(const TropicalMatrix& a, const FuzzOptions& options,
                       std::size_t index) {
  RandomLiftOptions lift_options;
  lift_options.seed = trial_seed(options.seed, index);
  lift_options.max_extra_terms = options.max_extra_terms;
  lift_options.exponent_step = options.exponent_step;
  const PuiseuxMatrix lift = random_lift(a, lift_options);

  TrialOutcome out;
  try {
    const CertificateReport rep = certify_rank5(lift);
    out.delta_case = rep.case_taken;
    out.rank = series_rank(lift, options.threshold);
    if (out.rank < 5) {
      out.failure = "series rank " + std::to_string(out.rank) + " < 5";
      return out;
    }
    out.pass = true;
  } catch (const Error& e) {
    out.failure = e.what();
  }
  return out;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, std::size_t index) {
  return splitmix64(base ^ splitmix64(static_cast<std::uint64_t>(index)));
}

CommandResult fuzz_lifts(const FuzzOptions& options) {
  if (options.trials < 1) throw UsageError("--trials must be at least 1");
  if (options.exponent_step.sign() <= 0) {
    throw UsageError("--exponent-step must be positive");
  }
  const TropicalMatrix a = example_matrix_a();
  std::vector<TrialOutcome> outcomes(options.trials);

  const std::size_t workers =
      std::max<std::size_t>(1, std::min(options.threads, options.trials));
  if (workers == 1) {
    for (std::size_t i = 0; i < options.trials; ++i) {
      outcomes[i] = run_trial(a, options, i);
    }
  } else {
    // Strided partition; each slot is written by exactly one worker.
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < options.trials; i += workers) {
          outcomes[i] = run_trial(a, options, i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  std::size_t lt = 0, eq = 0, gt = 0, failures = 0;
  std::size_t min_rank = 6;
  std::ostringstream failure_text;
  json failed = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const TrialOutcome& o = outcomes[i];
    if (!o.pass) {
      ++failures;
      const std::uint64_t seed = trial_seed(options.seed, i);
      RandomLiftOptions lift_options{seed, options.max_extra_terms,
                                     options.exponent_step};
      const std::string dump =
          format_puiseux_matrix(random_lift(a, lift_options));
      failure_text << "FAIL trial=" << i << " seed=" << seed
                   << " reason=" << o.failure << "\n"
                   << dump;
      failed.push_back(json{{"trial", i},
                            {"seed", seed},
                            {"reason", o.failure},
                            {"matrix", dump}});
      continue;
    }
    switch (o.delta_case) {
      case DeltaCase::below_one:
        ++lt;
        break;
      case DeltaCase::equal_one:
        ++eq;
        break;
      case DeltaCase::above_one:
        ++gt;
        break;
    }
    min_rank = std::min(min_rank, o.rank);
  }

  std::ostringstream human;
  human << "trials=" << options.trials << " seed=" << options.seed
        << " max_extra_terms=" << options.max_extra_terms
        << " exponent_step=" << options.exponent_step << "\n"
        << "case_lt=" << lt << " case_eq=" << eq << " case_gt=" << gt << "\n";
  if (failures == 0) human << "min_rank=" << min_rank << "\n";
  human << failure_text.str();
  human << "failures=" << failures << "\n"
        << "result=" << (failures == 0 ? "PASS" : "FAIL") << "\n";

  json doc{{"command", "fuzz-lifts"},
           {"trials", options.trials},
           {"seed", options.seed},
           {"max_extra_terms", options.max_extra_terms},
           {"exponent_step", options.exponent_step.to_string()},
           {"cases", {{"lt", lt}, {"eq", eq}, {"gt", gt}}},
           {"failures", failures},
           {"failed", failed},
           {"pass", failures == 0}};
  if (failures == 0) doc["min_rank"] = min_rank;
  return finish(doc, human.str(),
                failures == 0 ? kExitPass : kExitVerificationFailed);
}

CommandResult verify_example(const TropicalMatrix& a, const PuiseuxMatrix& m0,
                             std::size_t threshold) {
  struct Check {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  const auto run_check = [&](std::string id, std::string name,
                             const std::function<std::pair<bool, std::string>()>& body) {
    Check c{std::move(id), std::move(name), false, {}};
    try {
      std::tie(c.pass, c.detail) = body();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    checks.push_back(std::move(c));
  };

  run_check("a", "every 5x5 submatrix is tropically singular", [&] {
    if (std::min(a.rows(), a.cols()) < 5) {
      return std::pair{false, std::string("matrix smaller than 5x5")};
    }
    std::size_t total = 0, singular = 0;
    std::string first_bad;
    for_each_square_submatrix(a, 5, [&](const SubmatrixSelector& sel,
                                        const TropicalMatrix& sub) {
      ++total;
      if (is_tropically_singular(sub, threshold)) {
        ++singular;
      } else if (first_bad.empty()) {
        first_bad = sel.to_string();
      }
      return true;
    });
    std::string detail = std::to_string(singular) + "/" +
                         std::to_string(total) + " singular";
    if (!first_bad.empty()) detail += ", nonsingular at " + first_bad;
    return std::pair{singular == total && total == 36, detail};
  });

  run_check("b", "4x4 submatrix rows 1,2,4,6 cols 1,4,5,6 has a unique optimum", [&] {
    const SubmatrixSelector sel{{0, 1, 3, 5}, {0, 3, 4, 5}};
    const PermanentCertificate cert = permanent(a.submatrix(sel), threshold);
    const bool ok = cert.optimal_count == 1 && cert.value == Rational(1) &&
                    cert.witnesses.front().one_line() ==
                        std::vector<std::size_t>{1, 3, 2, 4};
    std::string detail = "value=" + cert.value.to_string() +
                         " count=" + std::to_string(cert.optimal_count) +
                         " witness=" + cert.witnesses.front().to_string();
    return std::pair{ok, detail};
  });

  run_check("c", "tropical rank is 4", [&] {
    const TropicalRank r = tropical_rank(a, threshold);
    return std::pair{r.rank == 4, "rank=" + std::to_string(r.rank) + " " +
                                      r.witness.to_string()};
  });

  run_check("d", "M0 lifts A, its rows sum to zero, and its rank is 5", [&] {
    const auto mismatch = find_lift_mismatch(m0, a);
    const auto sums = row_sum(m0);
    const bool zero_rows = std::all_of(sums.begin(), sums.end(),
                                       [](const PuiseuxSeries& s) {
                                         return s.is_zero();
                                       });
    const std::size_t r = series_rank(m0, threshold);
    std::string detail = std::string("lift=") + (mismatch ? "false" : "true") +
                         " row_sum_zero=" + (zero_rows ? "true" : "false") +
                         " rank=" + std::to_string(r);
    if (mismatch) detail += " (" + mismatch->message + ")";
    return std::pair{!mismatch && zero_rows && r == 5, detail};
  });

  run_check("e", "rank-5 certificate holds for M0", [&] {
    const CertificateReport rep = certify_rank5(m0);
    return std::pair{rep.rank_lower_bound == 5,
                     certificate_line(rep) + " nonzero_minor=" +
                         rep.nonzero_minor_name};
  });

  bool all = true;
  std::ostringstream human;
  json items = json::array();
  for (const Check& c : checks) {
    all = all && c.pass;
    human << (c.pass ? "PASS" : "FAIL") << " (" << c.id << ") " << c.name
          << ": " << c.detail << "\n";
    items.push_back(json{{"id", c.id},
                         {"name", c.name},
                         {"pass", c.pass},
                         {"detail", c.detail}});
  }
  human << "trop_rank=4 kapranov_rank=5 " << (all ? "verified" : "NOT verified")
        << "\n";
  json doc{{"command", "verify-example"}, {"checks", items}, {"pass", all}};
  return finish(doc, human.str(), all ? kExitPass : kExitVerificationFailed);
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact tropical rank, series-field rank and lift certificates",
               "tropkap"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit a JSON report on stdout");
  app.add_option("--threshold", g.threshold,
                 "Largest size handled by permutation enumeration")
      ->check(CLI::PositiveNumber);

  SelectorFlags sel;
  std::string file, second;
  std::string series_literal;
  FuzzOptions fuzz;
  std::string step_text = "1";

  const auto add_selector = [&](CLI::App* sub) {
    sub->add_option("--rows", sel.rows, "1-based row indices, e.g. 1,2,4,6");
    sub->add_option("--cols", sel.cols, "1-based column indices");
  };
  const auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* perm = sub("perm", "Tropical permanent with all optimal permutations");
  perm->add_option("file", file, ".tmat file")->required();
  add_selector(perm);
  auto* singular = sub("singular", "Tropical singularity of a square matrix");
  singular->add_option("file", file, ".tmat file")->required();
  add_selector(singular);
  auto* troprank = sub("troprank", "Tropical rank with a witness submatrix");
  troprank->add_option("file", file, ".tmat file")->required();
  add_selector(troprank);
  auto* degc = sub("deg", "Valuations of a series matrix or a single series");
  degc->add_option("file", file, ".pmat file");
  degc->add_option("--series", series_literal, "Series literal, e.g. '1 - t^2'");
  auto* pdet = sub("pdet", "Exact determinant of a square series matrix");
  pdet->add_option("file", file, ".pmat file")->required();
  add_selector(pdet);
  auto* prank = sub("prank", "Exact rank over the series field");
  prank->add_option("file", file, ".pmat file")->required();
  auto* liftcheck = sub("liftcheck", "Check that a series matrix lifts a tropical one");
  liftcheck->add_option("trop", file, ".tmat file")->required();
  liftcheck->add_option("series", second, ".pmat file")->required();
  auto* kapbound = sub("kapbound", "Kapranov rank bounds from a lift");
  kapbound->add_option("trop", file, ".tmat file")->required();
  kapbound->add_option("series", second, ".pmat file")->required();
  auto* certify = sub("certify", "Rank-5 certificate for a lift of the built-in A");
  certify->add_option("series", file, ".pmat file")->required();
  auto* verify = sub("verify-example", "Reproduce trop(A)=4 and Kap(A)=5");
  auto* fuzzc = sub("fuzz-lifts", "Certify many random lifts of the built-in A");
  fuzzc->add_option("--trials", fuzz.trials, "Number of random lifts")
      ->capture_default_str();
  fuzzc->add_option("--seed", fuzz.seed, "Base seed")->capture_default_str();
  fuzzc->add_option("--max-extra-terms", fuzz.max_extra_terms,
                    "Extra terms per entry above the leading one")
      ->capture_default_str();
  fuzzc->add_option("--exponent-step", step_text,
                    "Exponent gap between successive terms")
      ->capture_default_str();
  fuzzc->add_option("--threads", fuzz.threads, "Worker threads")
      ->capture_default_str();

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.human_report = out.str();
    result.error = err.str();
    result.exit_code = code == 0 ? kExitPass : kExitUsage;
    return result;
  }

  try {
    if (perm->parsed()) {
      result = cmd_perm(file, sel, g);
    } else if (singular->parsed()) {
      result = cmd_singular(file, sel, g);
    } else if (troprank->parsed()) {
      result = cmd_troprank(file, sel, g);
    } else if (degc->parsed()) {
      result = cmd_deg(file, series_literal);
    } else if (pdet->parsed()) {
      result = cmd_pdet(file, sel, g);
    } else if (prank->parsed()) {
      result = cmd_prank(file, g);
    } else if (liftcheck->parsed()) {
      result = cmd_liftcheck(file, second);
    } else if (kapbound->parsed()) {
      result = cmd_kapbound(file, second, g);
    } else if (certify->parsed()) {
      result = cmd_certify(file);
    } else if (verify->parsed()) {
      result = verify_example(example_matrix_a(), example_lift_m0(), g.threshold);
    } else if (fuzzc->parsed()) {
      fuzz.exponent_step = parse_rational(step_text);
      fuzz.threshold = g.threshold;
      result = fuzz_lifts(fuzz);
    }
  } catch (const NotALiftError& e) {
    result = CommandResult{};
    result.exit_code = kExitVerificationFailed;
    result.human_report = std::string("FAIL: ") + e.what() + "\n";
    result.machine_report =
        json{{"pass", false}, {"reason", e.what()}}.dump(2) + "\n";
  } catch (const CertificateError& e) {
    result = CommandResult{};
    result.exit_code = kExitVerificationFailed;
    result.human_report = std::string("FAIL: ") + e.what() + "\n";
    result.machine_report =
        json{{"pass", false}, {"reason", e.what()}}.dump(2) + "\n";
  } catch (const std::exception& e) {
    // Parse, shape, file and usage errors.
    result = CommandResult{};
    result.exit_code = kExitUsage;
    result.error = std::string("error: ") + e.what() + "\n";
  }
  result.json = g.json;
  return result;
}

}  // namespace tropkap::cli
