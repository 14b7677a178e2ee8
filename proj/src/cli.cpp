#include "irack/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "irack/algebra.hpp"
#include "irack/braid.hpp"
#include "irack/enumerate.hpp"
#include "irack/errors.hpp"
#include "irack/tangled.hpp"
#include "irack/text_format.hpp"
#include "irack/tuple_rack.hpp"

namespace irack::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string irack = std::string(kBuiltinExample);
  std::string group;
  std::string relation;
  std::vector<std::string> probes;
  std::string word;
  std::string compare;
  std::string tuple;
  std::string out_dir;
  std::size_t strands = 3;
  std::size_t power = 2;
  std::size_t max_arity = 2;
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 0;
  std::size_t max_pairs = kMaterializationCap;
  std::size_t order = 2;
  std::size_t m = 1, n = 1, p = 1;
  int belt_probes = 0;
  unsigned threads = 1;
  bool json = false;
  bool dual = false;
  bool rack = false;
  bool irack_laws = false;
  bool racks = false;
  bool dedup = false;
  bool via_probes = false;
};

json report_json(const Carrier& carrier, const CheckReport& report) {
  json checks = json::array();
  for (const auto& e : report.entries) {
    json j{{"law", e.law},
           {"status", e.passed() ? "pass" : "fail"},
           {"checked", e.checked},
           {"exhaustive", e.exhaustive}};
    if (!e.passed()) {
      json w = json::array();
      for (const auto& v : e.witness) w.push_back(format_value(carrier, v));
      j["witness"] = w;
      if (e.lhs) j["lhs"] = format_value(carrier, *e.lhs);
      if (e.rhs) j["rhs"] = format_value(carrier, *e.rhs);
      if (!e.detail.empty()) j["detail"] = e.detail;
    }
    checks.push_back(std::move(j));
  }
  json out{{"checks", checks}};
  if (report.seed) out["seed"] = *report.seed;
  return out;
}

int emit(const Options& opt, std::ostream& out, const Carrier& carrier, const CheckReport& report,
         const std::string& header = {}) {
  if (opt.json) {
    json j = report_json(carrier, report);
    if (!header.empty()) j["header"] = header;
    out << j.dump(2) << '\n';
  } else {
    if (!header.empty()) out << header << '\n';
    out << format_report(carrier, report);
  }
  return report.all_passed() ? kOk : kLawFailed;
}

RawIrack load_raw(const Options& opt) {
  if (!opt.group.empty()) return irack_from_group(parse_group(read_file(opt.group), opt.group)).raw();
  if (opt.irack == kBuiltinExample) return builtin_example_irack().raw();
  return parse_irack(read_file(opt.irack), opt.irack);
}

IrackTable load(const Options& opt) {
  IrackTable t = opt.group.empty() ? load_irack(opt.irack)
                                   : irack_from_group(parse_group(read_file(opt.group), opt.group));
  return opt.dual ? dual_irack(t) : t;
}

RawRack derived_rack(const RawIrack& raw) {
  const std::size_t k = raw.carrier.size();
  RawRack rack{raw.carrier, raw.rhd, Grid(k, std::vector<Element>(k))};
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) rack.lhd[b][a] = raw.rhd[raw.minus[a]][b];
  return rack;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  RawIrack raw = load_raw(opt);
  if (opt.dual) std::swap(raw.plus, raw.minus);
  CheckReport report = check_irack_axioms(raw);
  if (opt.rack) report.merge(check_rack_axioms(derived_rack(raw)));
  return emit(opt, out, raw.carrier, report);
}

int cmd_lemmas(const Options& opt, std::ostream& out) {
  RawIrack raw = load_raw(opt);
  if (opt.dual) std::swap(raw.plus, raw.minus);
  return emit(opt, out, raw.carrier, check_lemmas(raw));
}

int cmd_tuple_check(const Options& opt, std::ostream& out) {
  const IrackTable ir = load(opt);
  TupleCheckOptions tc{opt.max_arity, opt.budget, opt.seed, opt.threads};
  CheckReport report = check_tuple_rack(ir, tc);
  if (opt.irack_laws) report.merge(check_tuple_irack(ir, opt.max_arity), "tuple-");
  std::ostringstream header;
  header << "seed=" << opt.seed << " max-arity=" << opt.max_arity << " budget=" << opt.budget;
  return emit(opt, out, ir.carrier(), report, header.str());
}

int cmd_tangle_check(const Options& opt, std::ostream& out) {
  const IrackTable ir = load(opt);
  if (opt.relation.empty()) throw ParseError("<args>", 0, "tangle-check needs --relation");
  const Relation r = parse_relation(read_file(opt.relation), ir.carrier(), opt.relation);
  return emit(opt, out, ir.carrier(), is_tangled(r, ir));
}

int cmd_category_check(const Options& opt, std::ostream& out) {
  const IrackTable ir = load(opt);
  std::vector<Probe> probes;
  for (const auto& path : opt.probes)
    probes.push_back({path, parse_relation(read_file(path), ir.carrier(), path)});
  if (opt.belt_probes > 0) {
    const auto p = belt_probes(static_cast<std::size_t>(opt.belt_probes), ir);
    probes.push_back({"R", p.seed});
    probes.push_back({"S", p.test});
  }
  CheckReport report;
  report.merge(check_braiding(ir, opt.m, opt.n, opt.p, probes));
  report.merge(check_tangle_algebra(ir));
  std::ostringstream header;
  header << "m=" << opt.m << " n=" << opt.n << " p=" << opt.p;
  return emit(opt, out, ir.carrier(), report, header.str());
}

int cmd_braid_eval(const Options& opt, std::ostream& out) {
  const IrackTable ir = load(opt);
  const BraidWord word = parse_braid(opt.word, opt.strands);
  const Carrier& L = ir.carrier();

  if (!opt.tuple.empty()) {
    const Tuple t = parse_tuple(L, opt.tuple);
    out << format_tuple(L, t) << " -> " << format_tuple(L, apply_braid(word, t, ir)) << '\n';
    return kOk;
  }
  if (!opt.compare.empty()) {
    const BraidWord other = parse_braid(opt.compare, opt.strands);
    if (opt.via_probes) {
      const auto p = belt_probes(opt.strands, ir);
      const auto d = distinguish(word, other, p.seed, p.test, ir);
      auto tag = [](const Relation& r) { return r.is_empty() ? "empty" : "point"; };
      out << "first=" << tag(d.first) << " second=" << tag(d.second)
          << " result=" << (d.distinct ? "distinct" : "equal") << '\n';
      return d.distinct ? kLawFailed : kOk;
    }
    CheckReport report;
    report.entries.push_back(relation_law("equal", eval_braid(word, ir), eval_braid(other, ir)));
    return emit(opt, out, L, report);
  }
  out << format_relation(L, eval_braid(word, ir));
  return kOk;
}

int cmd_belt(const Options& opt, std::ostream& out) {
  const IrackTable ir = load(opt);
  const BeltReport report = belt_trick(opt.strands, opt.power, ir);
  if (opt.json) {
    json traj = json::array();
    for (const auto& t : report.trajectories)
      traj.push_back({{"from", format_tuple(ir.carrier(), t.from)}, {"to", format_tuple(ir.carrier(), t.to)}});
    out << json{{"n", report.strands},
                {"k", report.power},
                {"result", report.point ? "point" : "empty"},
                {"trajectories", traj}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "# S T^" << opt.power << " R in composite order = R, then T^" << opt.power
      << ", then S in application order\n";
  out << format_belt_report(ir.carrier(), report);
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const EnumerationResult result = opt.racks ? enumerate_racks(opt.order, opt.dedup, opt.threads)
                                             : enumerate_iracks(opt.order, opt.dedup, opt.threads);
  if (!opt.out_dir.empty()) {
    if (opt.racks) throw ParseError("<args>", 0, "--out is only supported for iracks");
    std::filesystem::create_directories(opt.out_dir);
    for (std::size_t i = 0; i < result.iracks.size(); ++i) {
      std::ostringstream name;
      name << "irack-" << opt.order << "-" << std::setw(5) << std::setfill('0') << i << ".txt";
      std::ofstream file(std::filesystem::path(opt.out_dir) / name.str(), std::ios::binary);
      file << format_irack(result.iracks[i]);
    }
  }
  out << "order=" << result.order << " raw=" << result.raw_count
      << " canonical=" << result.canonical_count << '\n';
  return kOk;
}

int cmd_saturate(const Options& opt, std::ostream& out) {
  const IrackTable ir = load(opt);
  if (opt.relation.empty()) throw ParseError("<args>", 0, "saturate needs --relation");
  const Relation seed = parse_relation(read_file(opt.relation), ir.carrier(), opt.relation);
  const SaturationResult result = saturate_to_tangled(seed, ir, opt.max_pairs);
  if (const auto* ok = std::get_if<TangledRelation>(&result)) {
    out << format_relation(ir.carrier(), ok->relation());
    return kOk;
  }
  const auto& failure = std::get<SaturationFailure>(result);
  out << "saturation failed: " << failure.reason;
  if (!failure.witness.empty()) {
    out << " at";
    for (const auto& v : failure.witness) out << ' ' << format_value(ir.carrier(), v);
  }
  out << '\n';
  return kLawFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rack and irack verifier with tangled-relation braid invariants", "irack"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  app.add_flag("--json", opt.json, "Emit JSON instead of text reports");
  app.add_option("--threads", opt.threads, "Worker threads for exhaustive checks")->check(CLI::Range(1u, 256u));

  auto irack_source = [&](CLI::App* sub) {
    sub->add_option("--irack", opt.irack, "Irack file or builtin:example12");
    sub->add_option("--group", opt.group, "Group multiplication file; uses its conjugation irack");
    sub->add_flag("--dual", opt.dual, "Swap plus and minus");
  };

  auto* verify = app.add_subcommand("verify", "Check the irack axioms");
  irack_source(verify);
  verify->add_flag("--rack", opt.rack, "Also check the rack axioms of the derived rack");

  auto* lemmas = app.add_subcommand("lemmas", "Check the ten derived irack identities");
  irack_source(lemmas);

  auto* tuple = app.add_subcommand("tuple-check", "Check the rack laws on tuples");
  irack_source(tuple);
  tuple->add_option("--max-arity", opt.max_arity);
  tuple->add_option("--budget", opt.budget, "Largest arity combination checked exhaustively");
  tuple->add_option("--seed", opt.seed);
  tuple->add_flag("--irack-laws", opt.irack_laws, "Also check the irack laws with reversing unary maps");

  auto* tangle = app.add_subcommand("tangle-check", "Check that a relation is tangled");
  irack_source(tangle);
  tangle->add_option("--relation", opt.relation)->required();

  auto* category = app.add_subcommand("category-check", "Check the braiding and the tangle algebra");
  irack_source(category);
  category->add_option("--m", opt.m);
  category->add_option("--n", opt.n);
  category->add_option("--p", opt.p);
  category->add_option("--probe", opt.probes, "Relation file used as a naturality probe");
  category->add_option("--belt-probes", opt.belt_probes, "Add the belt-trick probes on this many strands");

  auto* braid = app.add_subcommand("braid-eval", "Evaluate a braid word");
  irack_source(braid);
  braid->add_option("--strands", opt.strands);
  braid->add_option("--word", opt.word, "Braid word, e.g. \"s1 s2^-1\"")->required();
  braid->add_option("--tuple", opt.tuple, "Apply to one tuple instead of materializing");
  braid->add_option("--compare", opt.compare, "Second word; compare the two evaluations");
  braid->add_flag("--belt-probes", opt.via_probes, "Compare through the belt-trick probes");

  auto* belt = app.add_subcommand("belt", "Evaluate S T^k R for the torsion T");
  irack_source(belt);
  belt->add_option("--strands", opt.strands);
  belt->add_option("--power", opt.power);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all iracks (or racks) of a small order");
  enumerate->add_option("--order", opt.order)->required();
  enumerate->add_flag("--racks", opt.racks);
  enumerate->add_flag("--dedup", opt.dedup, "Keep one canonical form per relabelling class");
  enumerate->add_option("--out", opt.out_dir, "Write one irack file per structure here");

  auto* saturate = app.add_subcommand("saturate", "Close a relation to a tangled one");
  irack_source(saturate);
  saturate->add_option("--relation", opt.relation)->required();
  saturate->add_option("--max-pairs", opt.max_pairs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, out);
    if (lemmas->parsed()) return cmd_lemmas(opt, out);
    if (tuple->parsed()) return cmd_tuple_check(opt, out);
    if (tangle->parsed()) return cmd_tangle_check(opt, out);
    if (category->parsed()) return cmd_category_check(opt, out);
    if (braid->parsed()) return cmd_braid_eval(opt, out);
    if (belt->parsed()) return cmd_belt(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (saturate->parsed()) return cmd_saturate(opt, out);
  } catch (const AxiomViolation& e) {
    err << "error: " << e.what() << '\n';
    return kLawFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace irack::cli
