#include "spcoh/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "spcoh/coxeter.hpp"
#include "spcoh/errors.hpp"
#include "spcoh/oracle.hpp"
#include "spcoh/strata.hpp"
#include "spcoh/text.hpp"
#include "spcoh/verify.hpp"

namespace spcoh::cli {

namespace {

enum class Format { kPretty, kTsv, kJson };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out, Format fmt) const {
    if (fmt == Format::kTsv) {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "\t" : "") << r[k];
        out << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
    for (const auto& r : rows)
      for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t k = 0; k < r.size(); ++k) {
        s += r[k];
        if (k + 1 < r.size()) s += std::string(width[k] - r[k].size() + 2, ' ');
      }
      out << s << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

std::string rational_str(const Rational& r) { return r.str(); }

std::string label_str(const Symbol& s) {
  const auto l = symbol_to_label(s);
  return "(" + std::to_string(l.delta) + "," + to_string(l.bip.first) + "," + to_string(l.bip.second) + ")";
}

Json symbol_entry(const Symbol& s) {
  const auto l = symbol_to_label(s);
  return Json{{"symbol", to_json(s)},
              {"text", to_string(s)},
              {"defect", s.defect()},
              {"delta", l.delta},
              {"bipartition", to_json(l.bip)},
              {"degree", to_string(degree(s))}};
}

std::string bracket(const RepMultiset& reps) { return "[" + join_symbols(reps) + "]"; }

struct Options {
  std::string format = "pretty";
  int rank = 0;
  int theta = 0;
  int theta_max = 5;
  int a = 0;
  int n = 1;
  int p = 2;
  int e = 1;
  std::optional<long> q;
  std::string symbol;
  std::string suite = "all";
  std::optional<double> max_work;
  bool no_guard = false;
  bool reference = false;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "tsv") return Format::kTsv;
  return Format::kPretty;
}

int cmd_symbols(const Options& o, Format fmt, std::ostream& out) {
  const auto syms = enumerate_symbols(o.rank);
  if (fmt == Format::kJson) {
    Json arr = Json::array();
    for (const auto& s : syms) arr.push_back(symbol_entry(s));
    out << Json{{"rank", o.rank}, {"symbols", arr}}.dump(2) << '\n';
    return kOk;
  }
  Table t{{"symbol", "defect", "label", "degree"}, {}};
  for (const auto& s : syms) t.rows.push_back({to_string(s), std::to_string(s.defect()), label_str(s), to_string(degree(s))});
  t.write(out, fmt);
  return kOk;
}

int cmd_degree(const Options& o, Format fmt, std::ostream& out) {
  const auto s = parse_symbol(o.symbol);
  const auto d = degree(s);
  Json j = symbol_entry(s);
  if (o.q) j["value"] = rational_str(eval_at(d, *o.q));
  if (fmt == Format::kJson) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  Table t{{"symbol", "label", "degree"}, {{to_string(s), label_str(s), to_string(d)}}};
  if (o.q) {
    t.header.push_back("value at q=" + std::to_string(*o.q));
    t.rows[0].push_back(j["value"].get<std::string>());
  }
  t.write(out, fmt);
  return kOk;
}

int cmd_hc(const Options& o, Format fmt, std::ostream& out, bool up) {
  const auto s = parse_symbol(o.symbol);
  const auto reps = up ? induce(o.a, s) : restrict_sp(o.a, s);
  if (fmt == Format::kJson) {
    Json arr = Json::array();
    for (const auto& [r, m] : reps) {
      Json entry = symbol_entry(r);
      entry["multiplicity"] = m;
      arr.push_back(entry);
    }
    out << Json{{"symbol", to_json(s)}, {"a", o.a}, {"result", arr}}.dump(2) << '\n';
    return kOk;
  }
  Table t{{"symbol", "label", "multiplicity"}, {}};
  for (const auto& [r, m] : reps) t.rows.push_back({to_string(r), label_str(r), std::to_string(m)});
  t.write(out, fmt);
  return kOk;
}

int cmd_coxeter(const Options& o, Format fmt, std::ostream& out) {
  const auto h = coxeter_cohomology(o.theta);
  if (fmt == Format::kJson) {
    Json arr = Json::array();
    for (const auto& [deg, terms] : h.terms())
      for (const auto& t : terms) {
        Json entry = symbol_entry(t.symbol);
        entry["cohomology_degree"] = deg;
        entry["eigenvalue"] = to_json(t.eigenvalue);
        arr.push_back(entry);
      }
    out << Json{{"theta", o.theta}, {"terms", arr}}.dump(2) << '\n';
    return kOk;
  }
  Table t{{"H_c^k", "eigenvalue", "symbol", "label", "degree"}, {}};
  for (const auto& [deg, terms] : h.terms())
    for (const auto& term : terms)
      t.rows.push_back({std::to_string(deg), to_string(term.eigenvalue), to_string(term.symbol), label_str(term.symbol),
                        to_string(degree(term.symbol))});
  t.write(out, fmt);
  return kOk;
}

int cmd_e1(const Options& o, Format fmt, std::ostream& out) {
  const auto page = e1_page(o.theta);
  if (fmt == Format::kJson) {
    Json cells = Json::array();
    for (int tp = 0; tp <= o.theta; ++tp)
      for (int i = 0; i <= tp; ++i) {
        const auto sp = ab_split(page, tp, i);
        cells.push_back(Json{{"theta_prime", tp},
                             {"i", i},
                             {"degree", tp + i},
                             {"A0", to_json(sp.a0)},
                             {"A1", to_json(sp.a1)},
                             {"B0", to_json(sp.b0)},
                             {"B1", to_json(sp.b1)}});
      }
    out << Json{{"theta", o.theta}, {"cells", cells}}.dump(2) << '\n';
    return kOk;
  }
  if (fmt == Format::kTsv) {
    Table t{{"i"}, {}};
    for (int tp = 0; tp <= o.theta; ++tp) t.header.push_back("theta'=" + std::to_string(tp));
    for (int i = o.theta; i >= 0; --i) {
      std::vector<std::string> row{std::to_string(i)};
      for (int tp = 0; tp <= o.theta; ++tp) {
        if (i > tp) {
          row.emplace_back();
          continue;
        }
        const auto sp = ab_split(page, tp, i);
        row.push_back("A0=" + bracket(sp.a0) + " A1=" + bracket(sp.a1) + " B0=" + bracket(sp.b0) + " B1=" + bracket(sp.b1));
      }
      t.rows.push_back(row);
    }
    t.write(out, fmt);
    return kOk;
  }
  for (int tp = 0; tp <= o.theta; ++tp)
    for (int i = 0; i <= tp; ++i) {
      const auto sp = ab_split(page, tp, i);
      out << "theta'=" << tp << " i=" << i << " (degree " << tp + i << ")\n";
      out << "  A0 " << bracket(sp.a0) << "\n  A1 " << bracket(sp.a1) << "\n  B0 " << bracket(sp.b0) << "\n  B1 "
          << bracket(sp.b1) << '\n';
    }
  return kOk;
}

int cmd_cohomology(const Options& o, Format fmt, std::ostream& out) {
  const auto h = cohomology_of_S(o.theta);
  if (fmt == Format::kJson) {
    Json degs = Json::array();
    for (int i = 0; i <= o.theta; ++i) {
      Json terms = Json::array();
      for (const auto& [part, sign] : {std::pair{&h.h2i(i).plus, 1}, std::pair{&h.h2i(i).minus, -1}})
        for (const auto& [s, m] : *part)
          for (int k = 0; k < m; ++k) {
            Json entry = symbol_entry(s);
            entry["eigenvalue"] = to_json(FrobEigenvalue(sign, i));
            terms.push_back(entry);
          }
      degs.push_back(Json{{"degree", 2 * i}, {"terms", terms}});
    }
    out << Json{{"theta", o.theta}, {"cohomology", degs}}.dump(2) << '\n';
    return kOk;
  }
  Table t{{"H^k", "eigenvalue", "symbol", "label", "degree"}, {}};
  for (int i = 0; i <= o.theta; ++i)
    for (const auto& [part, sign] : {std::pair{&h.h2i(i).plus, 1}, std::pair{&h.h2i(i).minus, -1}})
      for (const auto& [s, m] : *part)
        for (int k = 0; k < m; ++k)
          t.rows.push_back({std::to_string(2 * i), to_string(FrobEigenvalue(sign, i)), to_string(s), label_str(s),
                            to_string(degree(s))});
  t.write(out, fmt);
  return kOk;
}

int cmd_zeta(const Options& o, Format fmt, std::ostream& out) {
  const auto page = e1_page(o.theta);
  const auto total = point_count_S(o.theta, o.n);
  std::vector<QPoly> strata;
  for (int tp = 0; tp <= o.theta; ++tp) strata.push_back(point_count_stratum(page, tp, o.n));
  if (fmt == Format::kJson) {
    Json j{{"theta", o.theta}, {"n", o.n}, {"total", to_string(total)}};
    Json per = Json::object();
    for (int tp = 0; tp <= o.theta; ++tp) per[std::to_string(tp)] = to_string(strata[tp]);
    j["per_stratum"] = per;
    if (o.q) {
      j["q"] = *o.q;
      j["total_value"] = rational_str(eval_at(total, *o.q));
      Json vals = Json::object();
      for (int tp = 0; tp <= o.theta; ++tp) vals[std::to_string(tp)] = rational_str(eval_at(strata[tp], *o.q));
      j["per_stratum_value"] = vals;
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  Table t{{"stratum", "count"}, {}};
  if (o.q) t.header.push_back("at q=" + std::to_string(*o.q));
  auto row = [&](const std::string& name, const QPoly& p) {
    std::vector<std::string> r{name, to_string(p)};
    if (o.q) r.push_back(rational_str(eval_at(p, *o.q)));
    t.rows.push_back(r);
  };
  for (int tp = 0; tp <= o.theta; ++tp) row(std::to_string(tp), strata[tp]);
  row("total", total);
  t.write(out, fmt);
  return kOk;
}

int cmd_oracle(const Options& o, Format fmt, std::ostream& out) {
  ScaleLimits limits;
  if (const char* env = std::getenv(kMaxWorkEnv)) {
    try {
      limits.max_work = std::stod(env);
    } catch (const std::exception&) {
      throw ParseError(std::string(kMaxWorkEnv) + " is not a number");
    }
  }
  if (o.max_work) limits.max_work = *o.max_work;
  limits.enforce = !o.no_guard;
  const auto counts =
      o.reference ? oracle_counts_reference(o.theta, o.p, o.e, o.n, limits) : oracle_counts(o.theta, o.p, o.e, o.n, limits);
  if (fmt == Format::kJson) {
    out << to_json(counts).dump(2) << '\n';
    return kOk;
  }
  Table t{{"stratum", "points"}, {}};
  for (const auto& [tp, c] : counts.per_stratum) t.rows.push_back({std::to_string(tp), std::to_string(c)});
  t.rows.push_back({"total", std::to_string(counts.total)});
  t.rows.push_back({"lagrangians", std::to_string(counts.lagrangians)});
  t.write(out, fmt);
  return kOk;
}

int cmd_verify(const Options& o, Format fmt, std::ostream& out) {
  const auto results = run_suite(o.suite, o.theta_max);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  if (fmt == Format::kJson) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back(Json{{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    out << Json{{"theta_max", o.theta_max}, {"passed", ok}, {"results", arr}}.dump(2) << '\n';
  } else {
    Table t{{"suite", "result", "seconds", "detail"}, {}};
    for (const auto& r : results) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.seconds;
      t.rows.push_back({r.name, r.passed ? "PASS" : "FAIL", secs.str(), r.detail});
    }
    t.write(out, fmt);
  }
  return ok ? kOk : kVerifyFailed;
}

void report(std::ostream& err, Format fmt, const std::string& kind, const std::string& message) {
  if (fmt == Format::kJson)
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  else
    err << "error: " << kind << ": " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unipotent representations of Sp(2n) over finite fields and the cohomology of the varieties S_theta."};
  app.name("spcoh");
  app.require_subcommand(1);
  app.footer(
      "Symbols are written as two comma-separated rows joined by ';', for example 0,2;1 or 0,1,2;\n"
      "\n"
      "Exit status:\n"
      "  0  success\n"
      "  2  malformed arguments or input text\n"
      "  3  domain error (invalid symbol or label, rank underflow, non-exact division)\n"
      "  4  scale guard refused an oracle enumeration\n"
      "  5  a verify suite failed\n"
      "\n"
      "Environment:\n"
      "  " + std::string(kMaxWorkEnv) + "  default work cap for `oracle` (|k|^(theta^2)); --max-work overrides it");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}))->capture_default_str();
  };
  auto nonneg = CLI::NonNegativeNumber;
  auto pos = CLI::PositiveNumber;

  std::map<CLI::App*, std::function<int(Format)>> handlers;

  auto* symbols = app.add_subcommand("symbols", "List the unipotent symbols of a given rank");
  symbols->add_option("--rank", o.rank, "Rank theta of Sp(2 theta)")->required()->check(nonneg);
  handlers[symbols] = [&](Format f) { return cmd_symbols(o, f, out); };

  auto* deg = app.add_subcommand("degree", "Generic degree of a unipotent representation");
  deg->add_option("--symbol", o.symbol, "Symbol text, e.g. 0,1,2;")->required();
  deg->add_option("--q", o.q, "Also evaluate at this q")->check(pos);
  handlers[deg] = [&](Format f) { return cmd_degree(o, f, out); };

  auto* ind = app.add_subcommand("induce", "Harish-Chandra induction from GL(a) x Sp(2 rank)");
  ind->add_option("--symbol", o.symbol, "Symbol text")->required();
  ind->add_option("--a", o.a, "Rank of the GL factor")->required()->check(nonneg);
  handlers[ind] = [&](Format f) { return cmd_hc(o, f, out, true); };

  auto* res = app.add_subcommand("restrict", "Harish-Chandra restriction to Sp(2 (rank - a))");
  res->add_option("--symbol", o.symbol, "Symbol text")->required();
  res->add_option("--a", o.a, "Rank of the GL factor")->required()->check(nonneg);
  handlers[res] = [&](Format f) { return cmd_hc(o, f, out, false); };

  auto* cox = app.add_subcommand("coxeter", "Cohomology of the Coxeter variety with Frobenius eigenvalues");
  cox->add_option("--theta", o.theta, "Rank")->required()->check(nonneg);
  handlers[cox] = [&](Format f) { return cmd_coxeter(o, f, out); };

  auto* e1 = app.add_subcommand("e1", "First page of the stratification spectral sequence (rows i, columns theta')");
  e1->add_option("--theta", o.theta, "Rank")->required()->check(nonneg);
  handlers[e1] = [&](Format f) { return cmd_e1(o, f, out); };

  auto* coh = app.add_subcommand("cohomology", "Cohomology of S_theta with Frobenius eigenvalues");
  coh->add_option("--theta", o.theta, "Rank")->required()->check(nonneg);
  handlers[coh] = [&](Format f) { return cmd_cohomology(o, f, out); };

  auto* zeta = app.add_subcommand("zeta", "Point counts of S_theta and its strata over F_{q^n}");
  zeta->add_option("--theta", o.theta, "Rank")->required()->check(nonneg);
  zeta->add_option("--n", o.n, "Extension degree")->required()->check(pos);
  zeta->add_option("--q", o.q, "Also evaluate at this q")->check(pos);
  handlers[zeta] = [&](Format f) { return cmd_zeta(o, f, out); };

  auto* orc = app.add_subcommand("oracle", "Count points of S_theta over F_{q0^n}, q0 = p^e, by enumerating Lagrangians");
  orc->add_option("--theta", o.theta, "Rank")->required()->check(nonneg);
  orc->add_option("--p", o.p, "Characteristic")->required()->check(pos);
  orc->add_option("--e", o.e, "Base field degree, q0 = p^e")->check(pos)->capture_default_str();
  orc->add_option("--n", o.n, "Extension degree")->required()->check(pos);
  orc->add_option("--max-work", o.max_work, "Work cap |k|^(theta^2)")->check(pos);
  orc->add_flag("--no-scale-guard", o.no_guard, "Disable the scale guard");
  orc->add_flag("--reference", o.reference, "Use the serial brute-force enumeration");
  handlers[orc] = [&](Format f) { return cmd_oracle(o, f, out); };

  auto* ver = app.add_subcommand("verify", "Run consistency suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
  ver->add_option("--theta-max", o.theta_max, "Largest rank exercised")->check(CLI::Range(1, 8))->capture_default_str();
  handlers[ver] = [&](Format f) { return cmd_verify(o, f, out); };

  for (auto& [sub, fn] : handlers) add_format(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kParseError;
  }

  const Format fmt = parse_format(o.format);
  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn(fmt);
  } catch (const ParseError& e) {
    report(err, fmt, e.kind(), e.what());
    return kParseError;
  } catch (const ScaleGuard& e) {
    report(err, fmt, e.kind(), e.what());
    return kScaleGuard;
  } catch (const Error& e) {
    report(err, fmt, e.kind(), e.what());
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    report(err, fmt, "InvalidArgument", e.what());
    return kParseError;
  }
  return kParseError;
}

}  // namespace spcoh::cli
