#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetmult/components.hpp"
#include "jetmult/jet_ideal.hpp"
#include "jetmult/json_emit.hpp"
#include "jetmult/length_oracle.hpp"
#include "jetmult/text_format.hpp"

namespace jetmult::cli {

Environment Environment::from_process() {
  Environment env;
  if (const char* seed = std::getenv("JETMULT_SEED"); seed != nullptr) {
    env.seed_base = seed;
  }
  return env;
}

namespace {

const std::map<std::string, Format> kFormats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

struct Flags {
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> m;
  std::vector<std::string> polynomials;
  Format format = Format::table;
  std::vector<std::uint64_t> seeds;
  std::uint32_t trials = 2;
  bool random_seeds = false;
  unsigned jobs = 0;
  std::string out_path;
  std::optional<std::uint32_t> ambient;
  std::uint32_t value_bound = 100;
  std::uint32_t max_truncation = 64;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--m", f.m, "Jet order m")->required();
  sub->add_option("--format", f.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  sub->add_option("--out", f.out_path, "Write output to FILE instead of stdout");
  sub->add_option("--ambient", f.ambient, "Ambient dimension n (labels only)");
}

void add_r(CLI::App* sub, Flags& f) {
  sub->add_option("--r", f.r, "Number of factors of x1*...*xr")->required()->check(CLI::PositiveNumber);
}

}  // namespace

std::optional<Request> parse_request(std::span<const std::string> args, std::ostream& out) {
  CLI::App app{"Jet schemes of monomial hypersurfaces: ideals, components and multiplicities", "jetmult"};
  app.require_subcommand(1);
  Flags f;

  auto* ideal = app.add_subcommand("ideal", "Generators g_0..g_m of the jet ideal of x1*...*xr");
  add_r(ideal, f);
  add_common(ideal, f);

  auto* general = app.add_subcommand("jet-general", "Jet ideal of arbitrary polynomials in x<i>_0");
  general->add_option("--poly", f.polynomials, "Generator (repeatable)")->required();
  add_common(general, f);

  auto* components = app.add_subcommand("components", "Minimal primes with formula and recursive multiplicities");
  add_r(components, f);
  add_common(components, f);

  auto* verify = app.add_subcommand("verify", "Components cross-checked against the local-length oracle");
  add_r(verify, f);
  add_common(verify, f);
  auto* seeds = verify->add_option("--seeds", f.seeds, "Comma-separated trial seeds")->delimiter(',');
  verify->add_option("--trials", f.trials, "Number of trials when --seeds is absent")->check(CLI::Range(2U, 1000U));
  verify->add_flag("--random", f.random_seeds, "Draw seeds from system entropy")->excludes(seeds);
  verify->add_option("--jobs", f.jobs, "Worker threads (default: all processors)")->check(CLI::PositiveNumber);
  verify->add_option("--bound", f.value_bound, "Bound B on substituted numerators and denominators")
      ->check(CLI::Range(1U, 1000000U));
  verify->add_option("--max-truncation", f.max_truncation, "Give up if the local length has not stabilized by N")
      ->check(CLI::Range(1U, 4096U));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Request req;
  if (ideal->parsed()) {
    req.command = Command::ideal;
  } else if (general->parsed()) {
    req.command = Command::jet_general;
  } else if (components->parsed()) {
    req.command = Command::components;
  } else {
    req.command = Command::verify;
  }
  req.r = f.r;
  req.m = *f.m;
  req.polynomials = f.polynomials;
  req.format = f.format;
  req.seeds = f.seeds;
  req.trials = f.trials;
  req.random_seeds = f.random_seeds;
  req.jobs = f.jobs;
  if (!f.out_path.empty()) {
    req.out_path = f.out_path;
  }
  req.ambient = f.ambient;
  req.value_bound = f.value_bound;
  req.max_truncation = f.max_truncation;

  if (req.command == Command::verify && !req.seeds.empty() && req.seeds.size() < 2) {
    throw UsageError("--seeds needs at least two seeds");
  }
  if (req.ambient && req.r && *req.ambient < *req.r) {
    throw UsageError("--ambient must be at least r");
  }
  return req;
}

std::vector<std::uint64_t> resolve_seeds(const Request& req, const Environment& env) {
  if (!req.seeds.empty()) {
    return req.seeds;
  }
  std::uint64_t base = kDefaultSeedBase;
  if (req.random_seeds) {
    std::random_device rd;
    base = (static_cast<std::uint64_t>(rd()) << 32U) ^ rd();
  } else if (env.seed_base) {
    try {
      std::size_t used = 0;
      base = std::stoull(*env.seed_base, &used, 0);
      if (used != env.seed_base->size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      throw UsageError("JETMULT_SEED is not an unsigned integer: '" + *env.seed_base + "'");
    }
  }
  std::vector<std::uint64_t> seeds;
  for (std::uint32_t i = 0; i < req.trials; ++i) {
    seeds.push_back(base + i);
  }
  return seeds;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

template <typename Range, typename Fn>
std::string join(const Range& items, const std::string& sep, Fn fn) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) {
      out += sep;
    }
    first = false;
    out += fn(item);
  }
  return out;
}

std::string product_label(std::uint32_t r) {
  if (r <= 3) {
    std::string s = "x1";
    for (std::uint32_t i = 2; i <= r; ++i) s += "*x" + std::to_string(i);
    return s;
  }
  return "x1*...*x" + std::to_string(r);
}

std::string ambient_note(const Request& req) {
  return req.ambient ? ", ambient n=" + std::to_string(*req.ambient) : "";
}

void emit_ideal(const jet::JetIdeal& ideal, const Request& req, std::ostream& out) {
  const bool general = ideal.kind == jet::JetIdeal::Kind::general;
  switch (req.format) {
    case Format::json:
      out << to_json(ideal) << '\n';
      return;
    case Format::csv:
      out << (general ? "source,power,generator\n" : "k,generator\n");
      for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        if (general) {
          out << ideal.labels[i].source + 1 << ',';
        }
        out << ideal.labels[i].power << ',' << csv_field(to_string(ideal.generators[i])) << '\n';
      }
      return;
    case Format::table:
      if (general) {
        out << "# jet ideal of " << req.polynomials.size() << " generator(s), m=" << ideal.m << ambient_note(req)
            << '\n';
      } else {
        out << "# jet ideal of " << product_label(ideal.r) << ", r=" << ideal.r << ", m=" << ideal.m << ambient_note(req)
            << '\n';
      }
      for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        if (general) {
          out << "f" << ideal.labels[i].source + 1 << "^(" << ideal.labels[i].power << ")";
        } else {
          out << "g" << ideal.labels[i].power;
        }
        out << " = " << to_string(ideal.generators[i]) << '\n';
      }
      return;
  }
}

struct Row {
  std::string t;
  std::string prime;
  std::string formula;
  std::string recursive;
  std::string oracle;
  std::string status;
};

Row row_of(const comp::ComponentReport& report) {
  return {join(report.prime.composition.parts(), ",", [](auto t) { return std::to_string(t); }),
          join(report.prime.generators(), ",", [](JetVar v) { return to_string(v); }),
          report.multiplicity_formula.get_str(),
          report.multiplicity_recursive.get_str(),
          report.multiplicity_oracle ? report.multiplicity_oracle->get_str() : "",
          std::string(comp::to_string(report.status()))};
}

void emit_census(const comp::Census& census, const Request& req, std::ostream& out) {
  switch (req.format) {
    case Format::json:
      out << to_json(census) << '\n';
      return;
    case Format::csv:
      out << "t,prime,mult_formula,mult_recursive,mult_oracle,status\n";
      for (const auto& report : census.components) {
        const Row row = row_of(report);
        out << csv_field(row.t) << ',' << csv_field(row.prime) << ',' << row.formula << ',' << row.recursive << ','
            << row.oracle << ',' << row.status << '\n';
      }
      out << "mult_sum,," << census.multiplicity_sum.get_str() << ",,,\n";
      return;
    case Format::table: {
      out << "# components of the jet scheme of " << product_label(census.r) << ", r=" << census.r << ", m=" << census.m
          << ambient_note(req) << '\n';
      std::vector<Row> rows;
      Row header{"t", "prime", "formula", "recursive", "oracle", "status"};
      rows.push_back(header);
      for (const auto& report : census.components) {
        Row row = row_of(report);
        row.t = "(" + row.t + ")";
        if (row.oracle.empty()) {
          row.oracle = "-";
        }
        rows.push_back(std::move(row));
      }
      std::size_t w[6] = {};
      for (const auto& row : rows) {
        const std::string* cells[] = {&row.t, &row.prime, &row.formula, &row.recursive, &row.oracle, &row.status};
        for (std::size_t i = 0; i < 6; ++i) {
          w[i] = std::max(w[i], cells[i]->size());
        }
      }
      for (const auto& row : rows) {
        const std::string* cells[] = {&row.t, &row.prime, &row.formula, &row.recursive, &row.oracle, &row.status};
        std::string line;
        for (std::size_t i = 0; i < 6; ++i) {
          std::string cell = *cells[i];
          if (i + 1 < 6) {
            cell.resize(w[i] + 2, ' ');
          }
          line += cell;
        }
        out << line << '\n';
      }
      out << "components: " << census.components.size() << ", multiplicity sum: " << census.multiplicity_sum.get_str()
          << " (r^(m+1) = " << census.expected_mass().get_str() << ")\n";
      for (const auto& report : census.components) {
        if (report.oracle_error) {
          out << "oracle failure at (" << row_of(report).t << "): " << *report.oracle_error << '\n';
        }
      }
      return;
    }
  }
}

void run_oracle(comp::Census& census, const Request& req, const std::vector<std::uint64_t>& seeds) {
  oracle::OracleOptions options;
  options.value_bound = req.value_bound;
  options.local.max_truncation = req.max_truncation;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < census.components.size(); i = next++) {
      auto& report = census.components[i];
      try {
        auto result = oracle::oracle_multiplicity(census.r, census.m, report.prime.composition, seeds, options);
        report.multiplicity_oracle = Integer(static_cast<unsigned long>(result.length));
        report.verification = result.record();
      } catch (const oracle::OracleError& e) {
        report.oracle_error = std::string(oracle::to_string(e.code())) + ": " + e.what();
      } catch (const std::exception& e) {
        report.oracle_error = e.what();
      }
    }
  };
  unsigned jobs = req.jobs != 0 ? req.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, census.components.size()));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  worker();
}

}  // namespace

int run(const Request& req, std::ostream& out, std::ostream& err, const Environment& env) {
  (void)err;
  std::ofstream file;
  std::ostream* sink = &out;
  if (req.out_path) {
    file.open(*req.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw UsageError("cannot open output file '" + *req.out_path + "'", "io");
    }
    sink = &file;
  }

  int code = kExitOk;
  switch (req.command) {
    case Command::ideal:
      emit_ideal(jet::monomial_jet_generators(*req.r, req.m), req, *sink);
      break;
    case Command::jet_general: {
      std::vector<Polynomial> gens;
      for (const auto& src : req.polynomials) {
        try {
          gens.push_back(parse_polynomial(src));
        } catch (const ParseError& e) {
          throw UsageError("cannot parse '" + src + "': " + e.what(), "parse", e.line(), e.column());
        }
      }
      try {
        emit_ideal(jet::build_jet_ideal_general(gens, req.m), req, *sink);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), "validation");
      }
      break;
    }
    case Command::components:
      emit_census(comp::census(*req.r, req.m), req, *sink);
      break;
    case Command::verify: {
      const auto seeds = resolve_seeds(req, env);
      auto census = comp::census(*req.r, req.m);
      run_oracle(census, req, seeds);
      emit_census(census, req, *sink);
      const bool failed = std::any_of(census.components.begin(), census.components.end(), [](const auto& c) {
        return c.oracle_error.has_value() || c.status() != comp::Status::consistent;
      });
      if (failed) {
        code = kExitInconsistent;
      }
      break;
    }
  }
  sink->flush();
  return code;
}

namespace {

bool wants_json(std::span<const std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json" || (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json")) {
      return true;
    }
  }
  return false;
}

void report_error(std::ostream& err, bool json, const std::string& kind, const std::string& message,
                  std::size_t line = 0, std::size_t column = 0) {
  if (json) {
    nlohmann::ordered_json body;
    body["kind"] = kind;
    body["message"] = message;
    if (line != 0) {
      body["line"] = line;
      body["column"] = column;
    }
    nlohmann::ordered_json doc;
    doc["error"] = std::move(body);
    err << doc.dump() << '\n';
  } else {
    err << "jetmult: " << message << '\n';
  }
}

}  // namespace

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Environment& env) {
  const bool json = wants_json(args);
  try {
    auto req = parse_request(args, out);
    if (!req) {
      return kExitOk;
    }
    return run(*req, out, err, env);
  } catch (const UsageError& e) {
    report_error(err, json, e.kind(), e.what(), e.line(), e.column());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    report_error(err, json, "validation", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report_error(err, json, "internal", e.what());
    return kExitInconsistent;
  }
}

}  // namespace jetmult::cli
