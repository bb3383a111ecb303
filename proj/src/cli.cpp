#include "avsplit/cli.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "avsplit/engine.hpp"
#include "avsplit/minuscule.hpp"
#include "avsplit/serialization.hpp"

namespace avsplit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInconclusive = 2;

std::string slurp(const CliConfig& config, std::istream& in) {
  if (!config.input_path.empty()) {
    std::ifstream file(config.input_path);
    if (!file) throw std::invalid_argument("cannot open input file \"" + config.input_path + "\"");
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog load_catalog(const CliConfig& config, std::istream& in) {
  Catalog c = parse_catalog_text(slurp(config, in));
  if (config.characteristic) c.context.characteristic = *config.characteristic;
  if (config.ordinary) c.context.ordinary_reduction_dim1 = *config.ordinary;
  return c;
}

void print_trace_text(std::ostream& out, const Verdict& v) {
  out << "trace:\n";
  for (const auto& f : v.trace) {
    out << "  - " << f.rule;
    if (!f.effect.empty()) out << " [" << f.effect << "]";
    out << ": " << f.anchor;
    if (!f.details.empty()) out << " -- " << f.details;
    out << "\n";
  }
}

void print_verdict(std::ostream& out, const Verdict& v, OutputFormat format) {
  if (format == OutputFormat::json) {
    out << verdict_to_json(v).dump(2) << "\n";
    return;
  }
  out << "splits: " << to_string(v.splits) << "\n";
  out << "mt: " << to_string(v.mt) << "\n";
  if (!v.blocks.empty()) {
    out << "blocks:";
    for (const auto& b : v.blocks) {
      out << " {";
      for (std::size_t i = 0; i < b.size(); ++i) out << (i ? ", " : "") << b[i];
      out << "}";
    }
    out << "\n";
  }
  print_trace_text(out, v);
}

int run_validate(const CliConfig& config, std::istream& in, std::ostream& out) {
  Catalog c = load_catalog(config, in);
  auto violations = validate_catalog(c);
  if (config.format == OutputFormat::json) {
    Json j;
    j["ok"] = violations.empty();
    j["violations"] = violations;
    out << j.dump(2) << "\n";
  } else if (violations.empty()) {
    out << "ok\n";
  } else {
    for (const auto& msg : violations) out << "violation: " << msg << "\n";
  }
  return violations.empty() ? kExitOk : kExitInvalid;
}

int run_classify(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  Catalog c = load_catalog(config, in);
  auto violations = validate_catalog(c);
  if (!violations.empty()) {
    err << "invalid catalog: " << violations.front() << "\n";
    return kExitInvalid;
  }
  bool all_classified = true;
  Json result = Json::array();
  for (const auto& f : c.factors) {
    ModelSet ms = build_model_set(f, c.context);
    all_classified = all_classified && ms.classified;
    if (config.format == OutputFormat::json) {
      Json entry;
      entry["label"] = f.label;
      entry["models"] = model_set_to_json(ms);
      result.push_back(entry);
    } else {
      out << f.label << ":";
      if (!ms.classified) {
        out << " unclassified (" << ms.unclassified_reason << ")\n";
        continue;
      }
      out << "\n";
      for (const auto& cand : ms.candidates) {
        out << "  - center rank " << cand.center_rank;
        for (const auto& fa : cand.factors) {
          out << ", " << to_string(fa.system) << " acting by";
          if (fa.module.empty()) out << " (joint block)";
          for (const auto& [w, mult] : fa.module) out << " " << mult << "x" << to_string(w);
        }
        for (const auto& b : cand.tensor_blocks) {
          out << ", tensor block";
          for (const auto& [idx, w] : b.legs) out << " #" << idx << ":" << to_string(w);
          out << " x" << b.multiplicity;
        }
        out << "\n";
      }
    }
  }
  if (config.format == OutputFormat::json) out << result.dump(2) << "\n";
  return all_classified ? kExitOk : kExitInconclusive;
}

int run_decide(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  Catalog c = load_catalog(config, in);
  auto violations = validate_catalog(c);
  if (!violations.empty()) {
    err << "invalid catalog: " << violations.front() << "\n";
    return kExitInvalid;
  }
  Verdict v = decide_product(c);
  print_verdict(out, v, config.format);
  return v.splits == SplitsOutcome::inconclusive ? kExitInconclusive : kExitOk;
}

int run_mt(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  Catalog c = load_catalog(config, in);
  auto violations = validate_catalog(c);
  if (!violations.empty()) {
    err << "invalid catalog: " << violations.front() << "\n";
    return kExitInvalid;
  }
  Verdict v = mt_verdict(c);
  print_verdict(out, v, config.format);
  return v.mt == MtOutcome::holds ? kExitOk : kExitInconclusive;
}

int run_table(const CliConfig& config, std::ostream& out) {
  const auto catalog = minuscule_catalog(config.max_rank);
  if (config.format == OutputFormat::json) {
    Json j = Json::array();
    for (const auto& e : catalog) {
      Json entry;
      entry["system"] = to_string(e.system);
      entry["weight"] = to_string(e.weight);
      entry["dimension"] = e.dimension;
      entry["duality"] = e.duality;
      j.push_back(entry);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(8) << "system" << std::setw(8) << "weight" << std::right
      << std::setw(10) << "dimension" << std::setw(9) << "duality" << "\n";
  for (const auto& e : catalog) {
    out << std::left << std::setw(8) << to_string(e.system) << std::setw(8) << to_string(e.weight)
        << std::right << std::setw(10) << e.dimension << std::setw(9) << e.duality << "\n";
  }
  return kExitOk;
}

int run_phi0(const CliConfig& config, std::istream& in, std::ostream& out) {
  std::string input = config.inline_input;
  if (input.empty()) std::getline(in, input);
  const RootSystemSum sum = parse_root_system_sum(input);
  const RootSystemSum restricted = short_root_restriction_sum(sum);
  if (config.format == OutputFormat::json) {
    Json j;
    j["input"] = to_string(sum);
    j["phi0"] = to_string(restricted);
    if (config.preimage) {
      Json pre = Json::array();
      for (const auto& s : phi0_preimage(sum, config.max_rank)) pre.push_back(to_string(s));
      j["preimage"] = pre;
      j["max_rank"] = config.max_rank;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << to_string(restricted) << "\n";
  if (config.preimage)
    for (const auto& s : phi0_preimage(sum, config.max_rank)) out << "preimage: " << to_string(s) << "\n";
  return kExitOk;
}

int run_oracle(const CliConfig& config, std::istream& in, std::ostream& out) {
  std::stringstream text(slurp(config, in));
  const auto fixtures = parse_fixtures(text);
  if (fixtures.empty()) throw std::invalid_argument("no fixtures in input");

  Json reports = Json::array();
  for (const auto& fx : fixtures) {
    BlockAlgebra g = bracket_closure(fx.generators, fx.block_dims);
    RibetReport rep = verify_ribet(g);
    if (config.format == OutputFormat::json) {
      Json j = ribet_report_to_json(fx.name, rep);
      j["algebra_dimension"] = g.dimension();
      j["commutant_dimension"] = commutant(g).dimension;
      reports.push_back(j);
    } else {
      out << fx.name << ": dim " << g.dimension() << ", a=" << (rep.condition_a ? "true" : "false")
          << ", b1=" << (rep.condition_b1 ? "true" : "false")
          << ", b2=" << (rep.condition_b2 ? "true" : "false")
          << ", conclusion=" << (rep.conclusion ? "true" : "false")
          << (rep.preconditions_ok ? "" : " [precondition violated: non-simple projection]") << "\n";
    }
  }
  if (config.format == OutputFormat::json) out << reports.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::validate: return run_validate(config, in, out);
      case Subcommand::classify: return run_classify(config, in, out, err);
      case Subcommand::decide: return run_decide(config, in, out, err);
      case Subcommand::mt: return run_mt(config, in, out, err);
      case Subcommand::table: return run_table(config, out);
      case Subcommand::phi0: return run_phi0(config, in, out);
      case Subcommand::oracle: return run_oracle(config, in, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace avsplit
