#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "casimir/cache.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/serialization.hpp"
#include "casimir/spectrum.hpp"

namespace casimir::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One root system plus its irreducible-character cache.
struct TypeContext {
  explicit TypeContext(const CartanType& t, const RunConfig& cfg) : rs(t) {
    std::optional<std::filesystem::path> dir;
    if (cfg.cache_dir) dir = *cfg.cache_dir;
    cache = std::make_unique<IrreducibleCache>(rs, dir);
  }
  RootSystem rs;
  std::unique_ptr<IrreducibleCache> cache;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string module_name(const Weight& w) { return "V" + w.str(); }

std::string components_md(const SpectrumRow& row) {
  std::string s;
  for (const auto& c : row.components) {
    if (!s.empty()) s += " + ";
    if (c.mult != 1) s += std::to_string(c.mult) + " ";
    s += module_name(c.weight);
  }
  return s;
}

std::string components_csv(const SpectrumRow& row) {
  std::string s;
  for (const auto& c : row.components) {
    if (!s.empty()) s += ';';
    s += c.weight.str() + "x" + std::to_string(c.mult);
  }
  return s;
}

std::string strategies_text(const SpectrumRow& row, const char* sep) {
  std::string s;
  for (auto st : row.strategies) {
    if (!s.empty()) s += sep;
    s += strategy_name(st);
  }
  return s;
}

std::string header_line(const RootSystem& rs) {
  return rs.type().name() + " (n = " + std::to_string(rs.dimension()) + ", r = " +
         std::to_string(rs.num_positive_roots()) + ", l = " + std::to_string(rs.rank()) + ")";
}

/// Runs `body` once per type on up to cfg.jobs threads and returns the
/// results in input order.
template <class Result, class Body>
std::vector<Result> per_type(const RunConfig& cfg, Body&& body) {
  std::vector<Result> results(cfg.types.size());
  const int type_jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(cfg.types.size())));
  const int inner_jobs = std::max(1, cfg.jobs / type_jobs);
  parallel_for(static_cast<int>(cfg.types.size()), type_jobs, [&](int t) {
    TypeContext ctx(cfg.types[static_cast<std::size_t>(t)], cfg);
    results[static_cast<std::size_t>(t)] = body(ctx, inner_jobs);
  });
  return results;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOutcome {
  CartanType type;
  int n = 0, r = 0, l = 0;
  std::vector<SpectrumRow> rows;
  std::string error;
};

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto outcomes = per_type<SpectrumOutcome>(cfg, [&](TypeContext& ctx, int jobs) {
    SpectrumOutcome o{ctx.rs.type(), ctx.rs.dimension(), ctx.rs.num_positive_roots(), ctx.rs.rank(), {}, {}};
    try {
      o.rows = spectrum_table(ctx.rs, SpectrumOptions{cfg.budget, ctx.cache.get(), jobs});
    } catch (const StrategyDisagreement& e) {
      o.error = e.what();
    }
    return o;
  });

  int code = kOk;
  for (const auto& o : outcomes) {
    if (!o.error.empty()) {
      err << "error: " << o.error << "\n";
      code = kCheckFailed;
    }
  }
  switch (cfg.format) {
    case Format::Json: {
      Json doc = Json::array();
      for (const auto& o : outcomes) {
        Json rows = Json::array();
        for (const auto& row : o.rows) rows.push_back(row_to_json(row));
        Json t;
        t["type"] = o.type.name();
        t["n"] = o.n;
        t["r"] = o.r;
        t["l"] = o.l;
        t["agreed"] = o.error.empty();
        t["rows"] = std::move(rows);
        doc.push_back(std::move(t));
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "type,i,m,components,dim,strategies\n";
      for (const auto& o : outcomes)
        for (const auto& row : o.rows)
          out << o.type.name() << ',' << row.i << ',' << row.m.str() << ',' << csv_cell(components_csv(row)) << ','
              << row.dim << ',' << strategies_text(row, ";") << "\n";
      break;
    case Format::Md:
      for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const auto& o = outcomes[t];
        if (t) out << "\n";
        out << "## " << o.type.name() << " (n = " << o.n << ", r = " << o.r << ", l = " << o.l << ")\n\n";
        if (!o.error.empty()) {
          out << "strategies disagree: " << o.error << "\n";
          continue;
        }
        out << "| i | m_i | M_i | dim M_i | strategies |\n|---|---|---|---|---|\n";
        for (const auto& row : o.rows)
          out << "| " << row.i << " | " << row.m.str() << " | " << components_md(row) << " | " << row.dim << " | "
              << strategies_text(row, ", ") << " |\n";
      }
      break;
  }
  return code;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto reports = per_type<VerificationReport>(cfg, [&](TypeContext& ctx, int jobs) {
    return verify_theorems(ctx.rs, SpectrumOptions{cfg.budget, ctx.cache.get(), jobs});
  });

  bool all = true;
  for (const auto& rep : reports) {
    all &= rep.passed();
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail)
        err << rep.type.name() << ": check " << c.id << " (" << c.name << ") failed: " << c.clause << ": " << c.detail
            << "\n";
  }

  switch (cfg.format) {
    case Format::Json: {
      Json doc = Json::array();
      for (const auto& rep : reports) doc.push_back(report_to_json(rep));
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "type,check,name,status,detail\n";
      for (const auto& rep : reports)
        for (const auto& c : rep.checks)
          out << rep.type.name() << ',' << c.id << ',' << csv_cell(c.name) << ',' << status_name(c.status) << ','
              << csv_cell(c.detail) << "\n";
      break;
    case Format::Md: {
      out << "| type | observed p |";
      std::vector<std::string> ids;
      if (!reports.empty())
        for (const auto& c : reports.front().checks) ids.push_back(c.id);
      for (const auto& id : ids) out << ' ' << id << " |";
      out << " result |\n|---|---|";
      for (std::size_t k = 0; k < ids.size(); ++k) out << "---|";
      out << "---|\n";
      for (const auto& rep : reports) {
        out << "| " << rep.type.name() << " | " << rep.observed_p << " |";
        for (const auto& id : ids) {
          const Check* c = rep.find(id);
          out << ' ' << (c ? status_name(c->status) : "-") << " |";
        }
        out << ' ' << (rep.passed() ? "PASS" : "FAIL") << " |\n";
      }
      for (const auto& rep : reports) {
        out << "\n## " << rep.type.name() << "\n\n| id | check | statement | status | detail |\n|---|---|---|---|---|\n";
        for (const auto& c : rep.checks)
          out << "| " << c.id << " | " << c.name << " | " << c.clause << " | " << status_name(c.status) << " | "
              << c.detail << " |\n";
      }
      break;
    }
  }
  return all ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ ideals

int cmd_ideals(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Json doc = Json::array();
  std::ostringstream md, csv;
  csv << (cfg.k ? "type,k,index,sum,cas,achieving,members\n" : "type,size,count\n");
  for (const auto& type : cfg.types) {
    const RootSystem rs(type);
    const int r = rs.num_positive_roots();
    Json t;
    t["type"] = type.name();
    if (!md.str().empty()) md << "\n";
    md << "## " << header_line(rs) << "\n\n";
    if (!cfg.k) {
      std::vector<std::size_t> counts(static_cast<std::size_t>(r + 1), 0);
      const auto all = enumerate_ideals(rs);
      for (const auto& ideal : all) ++counts[static_cast<std::size_t>(ideal.size())];
      t["counts"] = counts;
      t["total"] = all.size();
      md << "| size | ideals |\n|---|---|\n";
      for (int s = 0; s <= r; ++s) {
        md << "| " << s << " | " << counts[static_cast<std::size_t>(s)] << " |\n";
        csv << type.name() << ',' << s << ',' << counts[static_cast<std::size_t>(s)] << "\n";
      }
      md << "\ntotal: " << all.size() << "\n";
      if (cfg.full) {
        Json members = Json::array();
        md << "\n";
        for (const auto& ideal : all) {
          members.push_back(ideal_to_json(rs, ideal));
          md << "- " << ideal_to_json(rs, ideal).dump() << "\n";
        }
        t["ideals"] = std::move(members);
      }
    } else {
      if (*cfg.k < 0 || *cfg.k > r)
        throw UsageError("--k must lie in [0, " + std::to_string(r) + "] for " + type.name());
      const auto ideals = enumerate_ideals(rs, *cfg.k);
      Rational best;
      bool first = true;
      for (const auto& ideal : ideals) {
        const Rational c = rs.casimir(ideal_weight_sum(rs, ideal));
        if (first || c > best) best = c;
        first = false;
      }
      t["k"] = *cfg.k;
      t["max_cas"] = best.str();
      Json list = Json::array();
      md << "| # | <a> | Cas(<a>) | achieving |" << (cfg.full ? " members |" : "") << "\n|---|---|---|---|"
         << (cfg.full ? "---|" : "") << "\n";
      int index = 0;
      for (const auto& ideal : ideals) {
        const Weight sum = ideal_weight_sum(rs, ideal);
        const Rational c = rs.casimir(sum);
        const bool achieving = c == best;
        Json e;
        e["sum"] = weight_to_json(sum);
        e["cas"] = c.str();
        e["achieving"] = achieving;
        if (cfg.full) e["members"] = ideal_to_json(rs, ideal);
        list.push_back(std::move(e));
        const std::string members = ideal_to_json(rs, ideal).dump();
        md << "| " << index << " | " << sum.str() << " | " << c.str() << " | " << (achieving ? "yes" : "no") << " |"
           << (cfg.full ? " " + members + " |" : "") << "\n";
        csv << type.name() << ',' << *cfg.k << ',' << index << ',' << csv_cell(sum.str()) << ',' << c.str() << ','
            << (achieving ? "true" : "false") << ',' << (cfg.full ? csv_cell(members) : "") << "\n";
        ++index;
      }
      t["ideals"] = std::move(list);
    }
    doc.push_back(std::move(t));
  }
  switch (cfg.format) {
    case Format::Json: out << doc.dump(2) << "\n"; break;
    case Format::Csv: out << csv.str(); break;
    case Format::Md: out << md.str(); break;
  }
  return kOk;
}

// -------------------------------------------------------------------- krho

int cmd_krho(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.k) throw UsageError("krho requires --k");
  if (*cfg.k < 0) throw UsageError("--k must be nonnegative");
  const int k = *cfg.k;
  Json doc = Json::array();
  std::ostringstream md, csv;
  csv << "type,k,mass,expected_mass,distinct_weights,verdict\n";
  int code = kOk;
  for (const auto& type : cfg.types) {
    TypeContext ctx(type, cfg);
    const RootSystem& rs = ctx.rs;
    BigInt expected = 1;
    for (int j = 0; j < rs.num_positive_roots(); ++j) expected *= (k + 1);
    if (expected > BigInt(1) << 62) throw UsageError("mass (k+1)^r of " + type.name() + " exceeds 64-bit multiplicities");
    const Character box = krho_box_character(rs, k);
    std::string verdict = "SKIPPED";
    if (expected <= cfg.budget) {
      const Weight top = k * rs.rho();
      verdict = (*ctx.cache->get(top) == box) ? "EQUAL" : "DIFFERENT";
    }
    if (verdict == "DIFFERENT") {
      err << type.name() << ": box character differs from the Freudenthal character of " << k << " rho\n";
      code = kCheckFailed;
    }
    Json t;
    t["type"] = type.name();
    t["k"] = k;
    t["mass"] = box.mass();
    t["expected_mass"] = bigint_to_json(expected);
    t["distinct_weights"] = box.size();
    t["verdict"] = verdict;
    if (!md.str().empty()) md << "\n";
    md << "## " << header_line(rs) << ", k = " << k << "\n\n- mass: " << box.mass() << " (expected " << expected
       << ")\n- distinct weights: " << box.size() << "\n- verdict vs Freudenthal: " << verdict << "\n";
    csv << type.name() << ',' << k << ',' << box.mass() << ',' << expected << ',' << box.size() << ',' << verdict << "\n";
    if (cfg.full) {
      Json entries = Json::array();
      md << "\n| weight | mult |\n|---|---|\n";
      for (const auto& [w, m] : box.sorted()) {
        entries.push_back(Json::array({weight_to_json(w), m}));
        md << "| " << w.str() << " | " << m << " |\n";
      }
      t["entries"] = std::move(entries);
    }
    doc.push_back(std::move(t));
  }
  switch (cfg.format) {
    case Format::Json: out << doc.dump(2) << "\n"; break;
    case Format::Csv: out << csv.str(); break;
    case Format::Md: out << md.str(); break;
  }
  return code;
}

// ------------------------------------------------------ decompose-exterior

int cmd_decompose_exterior(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (!cfg.i) throw UsageError("decompose-exterior requires --i");
  Json doc = Json::array();
  std::ostringstream md, csv;
  csv << "type,i,weight,mult,dim,cas,maximal\n";
  for (const auto& type : cfg.types) {
    TypeContext ctx(type, cfg);
    const RootSystem& rs = ctx.rs;
    const int i = *cfg.i;
    if (i < 0 || i > rs.dimension())
      throw UsageError("--i must lie in [0, " + std::to_string(rs.dimension()) + "] for " + type.name());
    CharacterResult res;
    try {
      res = mi_via_characters(rs, i, cfg.budget, ctx.cache.get());
    } catch (const BudgetExceeded& e) {
      throw UsageError(std::string(e.what()) + "; raise --budget");
    }
    Json comps = Json::array();
    if (!md.str().empty()) md << "\n";
    md << "## " << header_line(rs) << ", degree " << i << "\n\n| highest weight | mult | dim | Cas | maximal |\n"
       << "|---|---|---|---|---|\n";
    for (const auto& [lambda, m] : res.full.components) {
      const Rational c = rs.casimir(lambda);
      const BigInt dim = rs.weyl_dim(lambda);
      Json e;
      e["weight"] = weight_to_json(lambda);
      e["mult"] = m;
      e["dim"] = bigint_to_json(dim);
      e["cas"] = c.str();
      e["maximal"] = c == res.m;
      comps.push_back(std::move(e));
      md << "| " << lambda.str() << " | " << m << " | " << dim << " | " << c.str() << " | " << (c == res.m ? "yes" : "")
         << " |\n";
      csv << type.name() << ',' << i << ',' << csv_cell(lambda.str()) << ',' << m << ',' << dim << ',' << c.str() << ','
          << (c == res.m ? "true" : "false") << "\n";
    }
    md << "\nm_" << i << " = " << res.m.str() << ", total dimension " << res.full.dimension(rs) << "\n";
    Json t;
    t["type"] = type.name();
    t["i"] = i;
    t["m"] = res.m.str();
    t["dim"] = bigint_to_json(res.full.dimension(rs));
    t["components"] = std::move(comps);
    doc.push_back(std::move(t));
  }
  switch (cfg.format) {
    case Format::Json: out << doc.dump(2) << "\n"; break;
    case Format::Csv: out << csv.str(); break;
    case Format::Md: out << md.str(); break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal Casimir eigenvalues on exterior powers of simple Lie algebras", "casimir"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string types;
  std::string format = "md";
  const char* env_cache = std::getenv("CASIMIR_CACHE_DIR");
  if (env_cache && *env_cache) cfg.cache_dir = env_cache;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", types, "Comma separated Cartan types, e.g. A2,B2,G2");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--budget", cfg.budget, "Size budget for exhaustive strategies")->capture_default_str();
    sub->add_option("--cache-dir", cfg.cache_dir, "Directory for cached irreducible characters (default $CASIMIR_CACHE_DIR)");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    sub->add_flag("--full", cfg.full, "Dump weight lists / ideal memberships");
  };
  auto* spectrum = app.add_subcommand("spectrum", "Table of m_i and M_i for i = 0..n");
  auto* verify = app.add_subcommand("verify", "Check the spectrum properties of each type");
  auto* ideals = app.add_subcommand("ideals", "Ad-nilpotent ideal counts, or the size-k ideals with --k");
  auto* krho = app.add_subcommand("krho", "Box character of V_{k rho} against Freudenthal");
  auto* decompose = app.add_subcommand("decompose-exterior", "Decompose the i-th exterior power");
  for (auto* sub : {spectrum, verify, ideals, krho, decompose}) add_common(sub);
  ideals->add_option("--k", cfg.k, "Ideal size");
  krho->add_option("--k", cfg.k, "Multiple of rho");
  decompose->add_option("--i", cfg.i, "Exterior degree");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    else err << app.help();
    return kUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Md;
    if (cfg.budget < 1000) throw UsageError("--budget must be at least 1000");
    if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (types.empty()) {
      if (cfg.command != "verify") throw UsageError(cfg.command + " requires --type");
      cfg.types = simple_types_up_to_rank(3);
    } else {
      cfg.types = parse_type_list(types);
    }

    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "ideals") return cmd_ideals(cfg, out, err);
    if (cfg.command == "krho") return cmd_krho(cfg, out, err);
    return cmd_decompose_exterior(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace casimir::cli
