// Command-line front end: tables, norms, dichotomy reports, gap bounds,
// diameters, and family verification sweeps. Exit status: 0 on success,
// 1 on bad input, 2 when the data is inconsistent or a verification fails.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csnorm/errors.hpp"
#include "csnorm/families.hpp"
#include "csnorm/model_io.hpp"
#include "csnorm/norm_model.hpp"
#include "csnorm/theorems.hpp"

namespace {

using namespace csnorm;

enum class Format { text, csv };

struct Options {
  Format format = Format::text;
  std::optional<unsigned> decimal;
  std::optional<std::string> model_file;
};

struct CommandArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::vector<std::string>> values;
  std::set<std::string> flags;

  std::optional<std::string> value(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
  }
  std::string require(const std::string& name) const {
    auto v = value(name);
    if (!v) throw InputError("bad_arguments", "missing required flag --" + name);
    return *v;
  }
};

const char* kUsage = R"(csnorm: exact Culler-Shalen norms from weighted boundary-slope data

usage: csnorm <command> [arguments] [flags]

commands:
  table <model>                     pole orders at every ideal point
  norm <model> [--class a/b ...]    norms of peripheral classes
  dichotomy <model> --alpha s --beta s
                                    pole-order ratios against t = |beta|/|alpha|
  theorem1 <model> --alpha s --beta s
                                    boundary slopes on each side of t, with gaps
  gap <model> --beta s [--kind cyclic|finite:<T>|seifert:<A>] [--alpha s]
              [--s-m p/q] [--even-torsion]
                                    strict boundary slopes near an exceptional slope
  diam <model>                      diameter of the strict boundary slopes vs its bound
  sweep <family> <lo>..<hi>         verify a parametric family (pretzel | twist)
  families                          list built-in families
  validate <model>                  check a model against every invariant

models: built-in names resolve first (pretzel:-2,3,7, twist:4, figure8), then
file paths (*.csn.json); --model <file> forces a file.

global flags:
  --model <file>     load the model from <file>
  --format text|csv  output format (default text)
  --decimal <k>      render rationals as k-digit decimals instead of p/q
)";

std::vector<std::string> extract_global(const std::vector<std::string>& raw, Options& opt) {
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& tok = raw[i];
    auto next = [&](const char* what) -> const std::string& {
      if (i + 1 >= raw.size()) {
        throw InputError("bad_arguments", std::string("flag ") + what + " needs a value");
      }
      return raw[++i];
    };
    if (tok == "--format") {
      const std::string& v = next("--format");
      if (v == "text") {
        opt.format = Format::text;
      } else if (v == "csv") {
        opt.format = Format::csv;
      } else {
        throw InputError("bad_arguments", "--format must be text or csv, got \"" + v + "\"");
      }
    } else if (tok == "--decimal") {
      const std::string& v = next("--decimal");
      try {
        std::size_t used = 0;
        const unsigned long k = std::stoul(v, &used);
        if (used != v.size() || k > 1000) throw std::invalid_argument(v);
        opt.decimal = static_cast<unsigned>(k);
      } catch (const std::exception&) {
        throw InputError("bad_arguments", "--decimal needs a digit count, got \"" + v + "\"");
      }
    } else if (tok == "--model") {
      opt.model_file = next("--model");
    } else {
      rest.push_back(tok);
    }
  }
  return rest;
}

CommandArgs parse_args(const std::string& command, const std::vector<std::string>& rest,
                       const std::set<std::string>& value_flags,
                       const std::set<std::string>& bool_flags) {
  CommandArgs out;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const std::string& tok = rest[i];
    if (tok.rfind("--", 0) == 0) {
      const std::string name = tok.substr(2);
      if (value_flags.count(name)) {
        if (i + 1 >= rest.size()) {
          throw InputError("bad_arguments", "flag --" + name + " needs a value");
        }
        out.values[name].push_back(rest[++i]);
      } else if (bool_flags.count(name)) {
        out.flags.insert(name);
      } else {
        throw InputError("bad_arguments",
                         "unknown flag --" + name + " for command \"" + command + "\"");
      }
    } else {
      // A leading '-' followed by a digit is a negative number or a range
      // like -199..-5, not a flag.
      out.positional.push_back(tok);
    }
  }
  return out;
}

std::string fmt(const Rat& value, const Options& opt) {
  return opt.decimal ? decimal_str(value, *opt.decimal) : rational_str(value);
}

std::string fmt(const ExtRat& value, const Options& opt) {
  return value.is_infinite() ? std::string("inf") : fmt(value.finite(), opt);
}

struct TableData {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void render(std::ostream& os, const TableData& table, Format format) {
  if (format == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "," : "") << cells[i];
      }
      os << "\n";
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return;
  }
  std::vector<std::size_t> widths(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      widths[i] = std::max(widths[i], cells[i].size());
    }
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      if (i == 0) {
        os << cells[i] << std::string(widths[i] - cells[i].size(), ' ');
      } else {
        os << std::string(widths[i] - cells[i].size(), ' ') << cells[i];
      }
    }
    os << "\n";
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

NormModel resolve_model(const std::vector<std::string>& positional, const Options& opt) {
  if (opt.model_file) {
    return load_model_file(*opt.model_file);
  }
  if (positional.empty()) {
    throw InputError("bad_arguments", "a model is required (built-in name or file path)");
  }
  const std::string& spec = positional.front();
  if (looks_like_builtin(spec)) {
    return builtin_model(spec);
  }
  if (std::filesystem::exists(spec)) {
    return load_model_file(spec);
  }
  throw InputError("unknown_model",
                   "\"" + spec + "\" is neither a built-in model nor an existing file");
}

// Column classes for `table` and the default for `norm`: the meridian plus
// every exceptional slope, deduplicated and in slope order.
std::vector<PeripheralClass> default_classes(const NormModel& model) {
  std::vector<PeripheralClass> out = {PeripheralClass::meridian()};
  for (const auto& exc : model.exceptional_slopes()) {
    if (exc.slope == Slope::meridian()) continue;
    out.push_back(PeripheralClass::from_slope(exc.slope));
  }
  return out;
}

int cmd_table(const NormModel& model, const Options& opt, std::ostream& os) {
  const auto classes = default_classes(model);
  // Published pole-order tables list integer boundary slopes before the
  // fractional ones, so order rows by denominator, then by value.
  std::vector<IdealSlopeDatum> data = model.ideal_slopes();
  std::stable_sort(data.begin(), data.end(), [](const IdealSlopeDatum& lhs,
                                                const IdealSlopeDatum& rhs) {
    if (lhs.boundary_slope.b() != rhs.boundary_slope.b()) {
      return lhs.boundary_slope.b() < rhs.boundary_slope.b();
    }
    return lhs.boundary_slope < rhs.boundary_slope;
  });
  TableData table;
  table.header.push_back("boundary_slope");
  for (const auto& cls : classes) table.header.push_back("f_" + cls.str());
  for (const auto& datum : data) {
    std::vector<std::string> row{datum.boundary_slope.str()};
    for (const auto& cls : classes) row.push_back(fmt(model.pole_order(datum, cls), opt));
    table.rows.push_back(std::move(row));
  }
  if (opt.format == Format::text) {
    os << "pole orders at the ideal points of " << model.name() << "\n\n";
  }
  render(os, table, opt.format);
  return 0;
}

int cmd_norm(const NormModel& model, const CommandArgs& args, const Options& opt,
             std::ostream& os) {
  std::vector<PeripheralClass> classes;
  if (auto it = args.values.find("class"); it != args.values.end()) {
    for (const auto& text : it->second) classes.push_back(PeripheralClass::parse(text));
  } else {
    classes = default_classes(model);
  }
  TableData table;
  table.header = {"class", "norm"};
  for (const auto& cls : classes) {
    table.rows.push_back({cls.str(), fmt(model.norm(cls), opt)});
  }
  if (opt.format == Format::text) {
    os << "Culler-Shalen norms on " << model.name() << "\n\n";
  }
  render(os, table, opt.format);
  return 0;
}

std::string sigma_list(const std::vector<SlopeSigma>& entries, const Options& opt) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].slope.str() + " (sigma = " + fmt(entries[i].sigma, opt) + ")";
  }
  return out.empty() ? "none" : out;
}

int cmd_dichotomy(const NormModel& model, const CommandArgs& args, const Options& opt,
                  std::ostream& os) {
  const auto alpha = PeripheralClass::parse(args.require("alpha"));
  const auto beta = PeripheralClass::parse(args.require("beta"));
  const auto result = dichotomy(model, alpha, beta);

  if (opt.format == Format::csv) {
    TableData table;
    table.header = {"slope", "sigma", "relation", "t", "case"};
    const std::string t = fmt(result.t, opt);
    const std::string case_no = std::to_string(result.case_number());
    for (const auto& e : result.below) {
      table.rows.push_back({e.slope.str(), fmt(e.sigma, opt), "below", t, case_no});
    }
    for (const auto& e : result.at) {
      table.rows.push_back({e.slope.str(), fmt(e.sigma, opt), "equal", t, case_no});
    }
    for (const auto& e : result.above) {
      table.rows.push_back({e.slope.str(), fmt(e.sigma, opt), "above", t, case_no});
    }
    render(os, table, opt.format);
    return 0;
  }

  if (result.proportional) {
    os << "Case 2, t = " << fmt(result.t, opt) << ", slopes {" << result.gamma->str() << ", "
       << result.delta->str() << "}\n";
    os << "  every ideal slope satisfies sigma = t\n";
    return 0;
  }
  os << "Case 1, t = " << fmt(result.t, opt) << "\n";
  os << "  sigma < t: " << sigma_list(result.below, opt) << "\n";
  if (!result.at.empty()) {
    os << "  sigma = t: " << sigma_list(result.at, opt) << "\n";
  }
  os << "  sigma > t: " << sigma_list(result.above, opt) << "\n";
  return 0;
}

std::string entry_text(const Theorem1Entry& entry, const Options& opt) {
  std::string out = entry.slope.str() + " (sigma = " + fmt(entry.sigma, opt);
  if (entry.gap) out += ", |r - r_beta| = " + fmt(*entry.gap, opt);
  return out + ")";
}

int cmd_theorem1(const NormModel& model, const CommandArgs& args, const Options& opt,
                 std::ostream& os) {
  const auto alpha = PeripheralClass::parse(args.require("alpha"));
  const auto beta = PeripheralClass::parse(args.require("beta"));
  const auto report = theorem1_report(model, alpha, beta);

  if (opt.format == Format::csv) {
    TableData table;
    table.header = {"slope", "sigma", "side", "gap", "t", "case"};
    const std::string t = fmt(report.t, opt);
    const std::string case_no = std::to_string(report.case_number);
    auto push = [&](const Theorem1Entry& e, const char* side) {
      table.rows.push_back({e.slope.str(), fmt(e.sigma, opt), side,
                            e.gap ? fmt(*e.gap, opt) : std::string(), t, case_no});
    };
    for (const auto& e : report.gamma_side) push(e, "gamma");
    for (const auto& e : report.equal_side) push(e, "equal");
    for (const auto& e : report.delta_side) push(e, "delta");
    if (report.case_number == 2) {
      table.rows.push_back({report.gamma->str(), fmt(report.t, opt), "gamma",
                            report.gamma_gap ? fmt(*report.gamma_gap, opt) : std::string(), t,
                            case_no});
      table.rows.push_back({report.delta->str(), fmt(report.t, opt), "delta",
                            report.delta_gap ? fmt(*report.delta_gap, opt) : std::string(), t,
                            case_no});
    }
    render(os, table, opt.format);
    return 0;
  }

  os << "Case " << report.case_number << ", t = " << fmt(report.t, opt) << "\n";
  if (report.meridian_form) {
    os << "meridian form: gap bound t/b = " << fmt(*report.gap_bound, opt) << "\n";
  }
  if (report.case_number == 1) {
    os << "  gamma side (sigma < t):";
    if (report.gamma_side.empty()) os << " none";
    os << "\n";
    for (const auto& e : report.gamma_side) os << "    " << entry_text(e, opt) << "\n";
    if (!report.equal_side.empty()) {
      os << "  sigma = t:\n";
      for (const auto& e : report.equal_side) os << "    " << entry_text(e, opt) << "\n";
    }
    os << "  delta side (sigma > t):";
    if (report.delta_side.empty()) os << " none";
    os << "\n";
    for (const auto& e : report.delta_side) os << "    " << entry_text(e, opt) << "\n";
    return 0;
  }
  os << "exactly two strict boundary slopes:\n";
  os << "  gamma = " << report.gamma->str() << " (signed sublattice slope -t)";
  if (report.gamma_gap) os << "; r_beta - r_gamma = " << fmt(*report.gamma_gap, opt) << " = t/b";
  os << "\n";
  os << "  delta = " << report.delta->str() << " (signed sublattice slope t)";
  if (report.delta_gap) os << "; r_delta - r_beta = " << fmt(*report.delta_gap, opt) << " = t/b";
  os << "\n";
  return 0;
}

struct KindSpec {
  ExceptionalSlope::Kind kind;
  std::optional<FiniteType> finite_type;
  std::optional<Int> seifert_count;
  bool from_model = false;
};

KindSpec resolve_kind(const NormModel& model, const Slope& beta_slope,
                      const std::optional<std::string>& kind_text) {
  if (kind_text) {
    if (*kind_text == "cyclic") {
      return {ExceptionalSlope::Kind::cyclic, std::nullopt, std::nullopt, false};
    }
    if (kind_text->rfind("finite:", 0) == 0) {
      return {ExceptionalSlope::Kind::finite, parse_finite_type(kind_text->substr(7)),
              std::nullopt, false};
    }
    if (kind_text->rfind("seifert:", 0) == 0) {
      return {ExceptionalSlope::Kind::seifert, std::nullopt,
              parse_int(kind_text->substr(8)), false};
    }
    throw InputError("bad_arguments",
                     "--kind must be cyclic, finite:<type> or seifert:<A>, got \"" + *kind_text +
                         "\"");
  }
  const ExceptionalSlope* exc = model.find_exceptional(beta_slope);
  if (!exc) {
    throw InputError("bad_arguments", "slope " + beta_slope.str() +
                                          " carries no exceptional data in this model; "
                                          "pass --kind explicitly");
  }
  return {exc->kind, exc->finite_type, exc->seifert_count, true};
}

int cmd_gap(const NormModel& model, const CommandArgs& args, const Options& opt,
            std::ostream& os) {
  const auto beta = PeripheralClass::parse(args.require("beta"));
  const auto alpha = PeripheralClass::parse(args.value("alpha").value_or("1/0"));
  const KindSpec kind = resolve_kind(model, beta.slope(), args.value("kind"));

  if (kind.kind == ExceptionalSlope::Kind::cyclic) {
    const auto report = cyclic_gap_check(model, alpha, beta, model.h1_z2_is_z2());
    if (opt.format == Format::csv) {
      TableData table;
      table.header = {"slope", "sigma", "side"};
      for (const auto& e : report.gamma_side) {
        table.rows.push_back({e.slope.str(), fmt(e.sigma, opt), "gamma"});
      }
      for (const auto& e : report.delta_side) {
        table.rows.push_back({e.slope.str(), fmt(e.sigma, opt), "delta"});
      }
      render(os, table, opt.format);
      return 0;
    }
    os << "cyclic pair alpha = " << alpha.str() << ", beta = " << beta.str()
       << "; t = " << fmt(report.t, opt) << "\n";
    os << "  gamma side (sigma < 1): " << sigma_list(report.gamma_side, opt) << "\n";
    os << "  delta side (sigma > 1): " << sigma_list(report.delta_side, opt) << "\n";
    return 0;
  }

  const auto report = theorem1_report(model, alpha, beta);
  const Rat s0 = model.min_norm().value;

  if (kind.kind == ExceptionalSlope::Kind::finite) {
    const Rat s_m = args.value("s-m") ? parse_rational(*args.value("s-m")) : s0;
    const FiniteBound bound =
        finite_gap_bound(*kind.finite_type, s_m, args.flags.count("even-torsion") > 0);
    if (ExtRat(report.t) > ExtRat(bound.t_bound)) {
      throw ModelError("finite_bound_violation",
                       "t = " + rational_str(report.t) + " exceeds the type-" +
                           finite_type_str(*kind.finite_type) + " bound " +
                           rational_str(bound.t_bound));
    }
    if (opt.format == Format::csv) {
      TableData table;
      table.header = {"slope", "sigma", "gap"};
      for (const auto& e : report.gamma_side) {
        table.rows.push_back(
            {e.slope.str(), fmt(e.sigma, opt), e.gap ? fmt(*e.gap, opt) : std::string()});
      }
      render(os, table, opt.format);
      return 0;
    }
    os << "beta = " << beta.str() << " is a finite class (type "
       << finite_type_str(*kind.finite_type) << "); alpha = " << alpha.str() << "\n";
    os << "t = " << fmt(report.t, opt) << " <= " << fmt(bound.t_bound, opt)
       << " (type bound at s_M = " << fmt(s_m, opt) << ")\n";
    os << "nearest strict boundary slopes (sigma < t";
    if (report.gap_bound) os << ", gap < t/b = " << fmt(*report.gap_bound, opt);
    os << "):\n";
    for (const auto& e : report.gamma_side) os << "  " << entry_text(e, opt) << "\n";
    return 0;
  }

  // Seifert filling: bound 1 + 2A/s0, and the norm identity |beta| = s0 + 2A.
  const Rat bound = seifert_gap(*kind.seifert_count, s0);
  const Rat beta_norm = model.norm(beta.primitive());
  const Rat expected = s0 + 2 * Rat(*kind.seifert_count);
  const bool identity = beta_norm == expected;
  if (!identity && kind.from_model) {
    throw ModelError("seifert_identity_violation",
                     "norm of " + beta.slope().str() + " is " + rational_str(beta_norm) +
                         ", but s0 + 2A = " + rational_str(expected));
  }

  std::vector<Theorem1Entry> within;
  for (const auto& side : {report.gamma_side, report.equal_side, report.delta_side}) {
    for (const auto& e : side) {
      if (e.sigma <= ExtRat(bound)) within.push_back(e);
    }
  }
  if (opt.format == Format::csv) {
    TableData table;
    table.header = {"slope", "sigma", "gap"};
    for (const auto& e : within) {
      table.rows.push_back(
          {e.slope.str(), fmt(e.sigma, opt), e.gap ? fmt(*e.gap, opt) : std::string()});
    }
    render(os, table, opt.format);
    return 0;
  }
  os << "beta = " << beta.str() << " is a Seifert filling with A = " << kind.seifert_count->get_str()
     << "; alpha = " << alpha.str() << "\n";
  os << "s0 = " << fmt(s0, opt) << ", gap bound 1 + 2A/s0 = " << fmt(bound, opt) << "\n";
  os << "norm identity: |beta| = " << fmt(beta_norm, opt) << (identity ? " = " : " != ")
     << "s0 + 2A = " << fmt(expected, opt) << "\n";
  os << "strict boundary slopes within the bound (sigma <= " << fmt(bound, opt) << "):\n";
  for (const auto& e : within) os << "  " << entry_text(e, opt) << "\n";
  return 0;
}

int cmd_diam(const NormModel& model, const Options& opt, std::ostream& os) {
  const Rat diam = model.diameter();
  const DiamBound bound = diam_lower_bound(model);
  const bool ok = diam > bound.bound;
  if (opt.format == Format::csv) {
    TableData table;
    table.header = {"diam", "bound", "witness", "ok"};
    table.rows.push_back(
        {fmt(diam, opt), fmt(bound.bound, opt), bound.witness.str(), ok ? "yes" : "no"});
    render(os, table, opt.format);
  } else {
    os << "diam = " << fmt(diam, opt) << ", bound = " << fmt(bound.bound, opt) << " (witness "
       << bound.witness.str() << "), " << (ok ? "OK" : "VIOLATED") << "\n";
  }
  return ok ? 0 : 2;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw InputError("bad_arguments", "ranges are written <lo>..<hi>, got \"" + text + "\"");
  }
  auto parse = [&](const std::string& part) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      return v;
    } catch (const std::exception&) {
      throw InputError("bad_arguments", "bad range endpoint \"" + part + "\"");
    }
  };
  return {parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
}

int render_sweep(const SweepReport& report, const Options& opt, std::ostream& os);

int cmd_sweep(const CommandArgs& args, const Options& opt, std::ostream& os) {
  if (args.positional.empty() || args.positional.size() > 2) {
    throw InputError("bad_arguments", "usage: sweep <pretzel|twist> [<lo>..<hi>]");
  }
  const std::string& family = args.positional[0];
  if (family != "pretzel" && family != "twist") {
    throw InputError("bad_arguments", "unknown family \"" + family + "\" (pretzel or twist)");
  }

  std::vector<std::pair<long, long>> ranges;
  if (args.positional.size() == 2) {
    ranges.push_back(parse_range(args.positional[1]));
  } else if (family == "pretzel") {
    ranges = {{11, 199}, {-199, -5}};
  } else {
    ranges = {{2, 100}, {-100, -1}};
  }

  int code = 0;
  bool first = true;
  for (const auto& [lo, hi] : ranges) {
    if (!first) os << "\n";
    first = false;
    if (opt.format == Format::text && ranges.size() > 1) {
      os << family << " " << lo << ".." << hi << ":\n";
    }
    const SweepReport report = family == "pretzel" ? sweep_pretzel(lo, hi) : sweep_twist(lo, hi);
    code = std::max(code, render_sweep(report, opt, os));
  }
  return code;
}

int render_sweep(const SweepReport& report, const Options& opt, std::ostream& os) {
  TableData table;
  table.header = {"n", "s0"};
  if (!report.rows.empty()) {
    for (const auto& [label, value] : report.rows.front().norms) {
      (void)value;
      table.header.push_back(label);
    }
  }
  table.header.insert(table.header.end(), {"diam", "bound", "difference"});
  const bool text = opt.format == Format::text;
  if (text) table.header.push_back("status");
  for (const auto& row : report.rows) {
    std::vector<std::string> cells{std::to_string(row.n), fmt(row.s0, opt)};
    for (const auto& [label, value] : row.norms) {
      (void)label;
      cells.push_back(fmt(value, opt));
    }
    cells.push_back(fmt(row.diam, opt));
    cells.push_back(fmt(row.bound, opt));
    cells.push_back(fmt(row.difference, opt));
    if (text) cells.push_back(row.pass() ? "ok" : "FAIL");
    table.rows.push_back(std::move(cells));
  }
  render(os, table, opt.format);

  if (text) {
    os << "\n";
    for (const auto& check : report.cross_checks) {
      os << (check.pass ? "ok   " : "FAIL ") << check.name;
      if (!check.pass) os << ": " << check.detail;
      os << "\n";
    }
  }
  if (report.pass()) {
    if (text) {
      os << "all " << report.rows.size() << " parameter values verified\n";
    }
    return 0;
  }
  const auto failure = report.first_failure();
  std::cerr << "sweep failed";
  if (failure) {
    if (failure->first != 0) std::cerr << " at n = " << failure->first;
    std::cerr << ": " << failure->second.name;
    if (!failure->second.detail.empty()) std::cerr << " (" << failure->second.detail << ")";
  }
  std::cerr << "\n";
  return 2;
}

int cmd_families(std::ostream& os) {
  os << "built-in families:\n";
  for (const auto& [name, description] : builtin_descriptions()) {
    os << "  " << name << "\n      " << description << "\n";
  }
  os << "model files: JSON documents (*.csn.json) with textual rationals; see README\n";
  return 0;
}

int cmd_validate(const NormModel& model, std::ostream& os) {
  os << model.name() << ": valid model (" << model.ideal_slopes().size() << " ideal slopes, "
     << model.fibre_slopes().size() << " fibre, " << model.exceptional_slopes().size()
     << " exceptional)\n";
  return 0;
}

int dispatch(const std::string& command, const std::vector<std::string>& rest,
             const Options& opt, std::ostream& os) {
  if (command == "table") {
    const auto args = parse_args(command, rest, {}, {});
    return cmd_table(resolve_model(args.positional, opt), opt, os);
  }
  if (command == "norm") {
    const auto args = parse_args(command, rest, {"class"}, {});
    return cmd_norm(resolve_model(args.positional, opt), args, opt, os);
  }
  if (command == "dichotomy") {
    const auto args = parse_args(command, rest, {"alpha", "beta"}, {});
    return cmd_dichotomy(resolve_model(args.positional, opt), args, opt, os);
  }
  if (command == "theorem1") {
    const auto args = parse_args(command, rest, {"alpha", "beta"}, {});
    return cmd_theorem1(resolve_model(args.positional, opt), args, opt, os);
  }
  if (command == "gap") {
    const auto args = parse_args(command, rest, {"alpha", "beta", "kind", "s-m"}, {"even-torsion"});
    return cmd_gap(resolve_model(args.positional, opt), args, opt, os);
  }
  if (command == "diam") {
    const auto args = parse_args(command, rest, {}, {});
    return cmd_diam(resolve_model(args.positional, opt), opt, os);
  }
  if (command == "sweep") {
    const auto args = parse_args(command, rest, {}, {});
    return cmd_sweep(args, opt, os);
  }
  if (command == "families") {
    return cmd_families(os);
  }
  if (command == "validate") {
    const auto args = parse_args(command, rest, {}, {});
    return cmd_validate(resolve_model(args.positional, opt), os);
  }
  throw InputError("bad_arguments", "unknown command \"" + command + "\" (try csnorm help)");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    Options opt;
    const std::vector<std::string> raw(argv + 1, argv + argc);
    std::vector<std::string> rest = extract_global(raw, opt);
    if (rest.empty()) {
      std::cerr << kUsage;
      return 1;
    }
    const std::string command = rest.front();
    rest.erase(rest.begin());
    if (command == "help" || command == "--help" || command == "-h") {
      std::cout << kUsage;
      return 0;
    }
    std::ostringstream buffer;
    const int code = dispatch(command, rest, opt, buffer);
    std::cout << buffer.str();
    return code;
  } catch (const InputError& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return 1;
  } catch (const ModelError& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
