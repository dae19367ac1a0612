#include "sk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sk/bounds.hpp"
#include "sk/census.hpp"
#include "sk/colored_graph.hpp"
#include "sk/constructions.hpp"
#include "sk/group_spec.hpp"
#include "sk/json_io.hpp"
#include "sk/metric.hpp"
#include "sk/presentation.hpp"

namespace sk {

namespace {

struct Common {
  std::string format = "json";
  std::string in_file;
  std::string out_file;
};

void add_common(CLI::App* cmd, Common& c, bool reads_input) {
  cmd->add_option("--format", c.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  if (reads_input) cmd->add_option("--in", c.in_file, "input file (default stdin)");
  cmd->add_option("--out", c.out_file, "output file (default stdout)");
}

std::string read_all(std::istream& s) {
  return std::string(std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>());
}

std::string read_input(const Common& c, std::istream& in) {
  if (c.in_file.empty() || c.in_file == "-") return read_all(in);
  std::ifstream f(c.in_file);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open " + c.in_file);
  return read_all(f);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Two columns, nested objects flattened with dotted keys.
void table_rows(const Json& j, const std::string& prefix, std::ostream& os) {
  if (!j.is_object()) {
    os << prefix << "  " << scalar_text(j) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object() && !v.empty())
      table_rows(v, key, os);
    else
      os << key << "  " << scalar_text(v) << "\n";
  }
}

void emit(const Json& j, const std::string& format, std::ostream& os) {
  if (format == "table")
    table_rows(j, "", os);
  else
    os << j.dump(2) << "\n";
}

std::string census_row(const Json& e) {
  std::ostringstream os;
  os << "s2=" << e["s2"].dump() << " s0=" << e["s0"].dump() << " s1=" << e["s1"].dump()
     << " euler=" << e["euler"].dump() << " betti=" << e["betti"].dump() << " torsion=" << e["torsion"].dump()
     << " triangles=" << e["canonical_triangles"].dump();
  return os.str();
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["text"] = format_presentation(p);
  j["generators"] = p.generator_count;
  j["relators"] = p.relators.size();
  const auto st = presentation_stats(p);
  j["length"] = st.length;
  j["t_upper"] = st.t_upper;
  return j;
}

Json abelian_json(const AbelianInvariants& a) {
  Json j;
  j["rank"] = a.rank;
  Json t = Json::array();
  for (const auto& f : a.torsion) t.push_back(mpz_json(f));
  j["torsion"] = std::move(t);
  return j;
}

Json lens_json(const LensBounds& b) {
  Json j;
  j["n"] = b.n;
  j["m"] = mpz_json(b.m);
  j["cube_count"] = mpz_json(b.cube_count);
  j["d_n"] = b.d_n.get_str();
  j["sysvol_upper"] = b.sysvol_upper.get_str();
  j["t1_lower"] = mpz_json(b.t1_lower);
  j["sysvol_lower"] = b.sysvol_lower;
  return j;
}

Json counting_json(std::size_t t, const CountingBounds& c) {
  Json j;
  j["T"] = t;
  j["side"] = c.side == CountSide::Kappa ? "kappa" : "sigma";
  j["log2_lower"] = interval_json(c.log2_lower);
  j["log2_upper"] = interval_json(c.log2_upper);
  if (c.log2_upper_full) j["log2_upper_full"] = interval_json(*c.log2_upper_full);
  if (c.lower_count) j["lower_count"] = mpz_json(*c.lower_count);
  return j;
}

std::pair<std::size_t, mpz_class> parse_lens(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "--lens expects n:m");
  const std::string n = s.substr(0, colon), m = s.substr(colon + 1);
  mpz_class nz, mz;
  if (n.empty() || m.empty() || nz.set_str(n, 10) != 0 || mz.set_str(m, 10) != 0 || nz < 0 || nz > 1000)
    throw Error(ErrorCode::ParseError, "--lens expects n:m with small n");
  return {nz.get_ui(), mz};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial and systolic complexity toolkit", "sk"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  Common common;

  std::string build_name;
  auto* build = app.add_subcommand("build", "build a named complex or a group-spec witness");
  build->add_option("name", build_name, "rp2, torus, moebius, telescope:n, cyclic:m, ...")->required();
  add_common(build, common, false);

  auto* invariants = app.add_subcommand("invariants", "counts, Euler characteristic and homology of a complex");
  add_common(invariants, common, true);

  std::string group, lens;
  auto* bounds = app.add_subcommand("bounds", "certified kappa and sigma bounds");
  auto* group_opt = bounds->add_option("--group", group, "group spec");
  auto* lens_opt = bounds->add_option("--lens", lens, "lens space n:m");
  group_opt->excludes(lens_opt);
  add_common(bounds, common, false);

  CensusOptions copt;
  auto* census_cmd = app.add_subcommand("census", "exhaustive census of small complexes (NDJSON)");
  census_cmd->add_option("--max-T", copt.max_t, "largest triangle count")->required();
  census_cmd->add_option("--ceiling", copt.ceiling, "refuse max-T above this");
  census_cmd->add_option("--budget-nodes", copt.budget_nodes, "search node budget");
  census_cmd->add_option("--budget-seconds", copt.budget_seconds, "wall-clock budget");
  census_cmd->add_option("--workers", copt.workers, "worker threads")->check(CLI::Range(1u, 256u));
  add_common(census_cmd, common, false);

  std::size_t check_t = 0;
  auto* encode_cmd = app.add_subcommand("encode", "colored-graph encoding of a complex");
  encode_cmd->add_option("--check-T", check_t, "also check P1-P4 at this T");
  add_common(encode_cmd, common, true);

  auto* decode_cmd = app.add_subcommand("decode", "complex from a colored graph");
  add_common(decode_cmd, common, true);

  std::string pres_text;
  auto* compile = app.add_subcommand("compile", "complex realizing a presentation");
  compile->add_option("--pres", pres_text, "presentation such as \"<a | a^3>\"");
  add_common(compile, common, true);

  auto* present = app.add_subcommand("present", "presentation of the fundamental group of a complex");
  add_common(present, common, true);

  unsigned ring = 0;
  std::string metric = "unit";
  auto* systole = app.add_subcommand("systole", "shortest homologically nontrivial edge cycle");
  systole->add_option("--ring", ring, "0 for Z, or a prime p");
  systole->add_option("--metric", metric, "unit or equilateral (edges 2 pi/3)")
      ->check(CLI::IsMember({"unit", "equilateral"}));
  add_common(systole, common, true);

  std::size_t count_t = 0;
  std::string side = "kappa";
  auto* count = app.add_subcommand("count", "log2 bounds on the number of groups of complexity <= T");
  count->add_option("--T", count_t, "T >= 2")->required();
  count->add_option("--side", side, "kappa or sigma")->check(CLI::IsMember({"kappa", "sigma"}));
  add_common(count, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!common.out_file.empty() && common.out_file != "-") {
    file.open(common.out_file);
    if (!file) {
      err << "usage error: cannot write " << common.out_file << "\n";
      return 2;
    }
    os = &file;
  }

  try {
    if (build->parsed()) {
      emit(complex_json(build_named(build_name)), common.format, *os);
    } else if (invariants->parsed()) {
      const auto x = complex_from_json(parse_json(read_input(common, in)));
      emit(invariants_json(x.complex), common.format, *os);
    } else if (bounds->parsed()) {
      if (!lens.empty()) {
        const auto [n, m] = parse_lens(lens);
        emit(lens_json(lens_bounds(n, m)), common.format, *os);
      } else if (!group.empty()) {
        const auto spec = parse_group_spec(group);
        auto cert = sigma_bounds(spec);
        Json j = certificate_json(cert);
        const auto st = stable_bounds(spec);
        if (st.applicable) {
          Json s;
          if (st.lower) s["lower"] = interval_json(*st.lower);
          s["lower_reason"] = st.lower_reason;
          s["lower_formula"] = st.lower_formula;
          s["upper"] = mpz_json(*st.upper);
          j["stable"] = std::move(s);
        }
        emit(j, common.format, *os);
      } else {
        err << "usage error: bounds needs --group or --lens\n" << bounds->help();
        return 2;
      }
    } else if (census_cmd->parsed()) {
      const auto r = census(copt);
      for (const auto& e : r.entries) {
        const Json j = census_entry_json(e);
        if (common.format == "table")
          *os << census_row(j) << "\n";
        else
          *os << j.dump() << "\n";
      }
      if (!r.complete) {
        Json t;
        t["incomplete"] = {{"code", "BudgetExceeded"}, {"reason", r.stop_reason}, {"entries", r.entries.size()}};
        *os << t.dump() << "\n";
        err << error_json(Error(ErrorCode::BudgetExceeded, r.stop_reason)).dump() << "\n";
        return 1;
      }
    } else if (encode_cmd->parsed()) {
      const auto x = complex_from_json(parse_json(read_input(common, in)));
      const auto g = encode(x.complex);
      Json j = colored_graph_json(g);
      if (check_t > 0) {
        const auto rep = check_properties(g, check_t);
        j["properties"] = {{"T", check_t}, {"P1", rep.p1}, {"P2", rep.p2}, {"P3", rep.p3}, {"P4", rep.p4},
                           {"failures", rep.failures}};
      }
      emit(j, common.format, *os);
    } else if (decode_cmd->parsed()) {
      const auto g = colored_graph_from_json(parse_json(read_input(common, in)));
      emit(complex_json(unmarked(decode(g))), common.format, *os);
    } else if (compile->parsed()) {
      const std::string text = pres_text.empty() ? read_input(common, in) : pres_text;
      emit(complex_json(presentation_to_complex(parse_presentation(text))), common.format, *os);
    } else if (present->parsed()) {
      const auto x = complex_from_json(parse_json(read_input(common, in)));
      const auto p = complex_to_presentation(x.complex);
      Json j;
      j["raw"] = presentation_json(p);
      j["simplified"] = presentation_json(tietze_simplify(p));
      j["abelianization"] = abelian_json(abelianization(p));
      emit(j, common.format, *os);
    } else if (systole->parsed()) {
      const auto x = complex_from_json(parse_json(read_input(common, in)));
      auto m = EdgeMetric::unit(x.complex);
      if (metric == "equilateral") {
        m.scale = Interval(2L) * Interval::pi() / Interval(3L);
        m.scale_name = "2pi/3";
      }
      Json j = systole_json(homological_systole(x.complex, m, ring));
      j["metric"] = metric;
      emit(j, common.format, *os);
    } else if (count->parsed()) {
      const auto c = counting_bounds(count_t, side == "kappa" ? CountSide::Kappa : CountSide::Sigma);
      emit(counting_json(count_t, c), common.format, *os);
    }
  } catch (const Error& e) {
    err << error_json(e).dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sk
