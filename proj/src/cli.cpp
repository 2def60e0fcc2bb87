#include "relca/cli.hpp"

#include "relca/errors.hpp"
#include "relca/export.hpp"
#include "relca/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace relca {

namespace {

struct Common {
  std::string file;
  std::string out;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

Family semantics(const std::string& which, const RelationalContextFamily& rcf) {
  return which == "gfp" ? rca_gfp(rcf, Exec::Parallel) : rca_lfp(rcf, Exec::Parallel);
}

std::string check_text(const Family& o, const RelationalContextFamily& rcf, bool& acceptable) {
  std::ostringstream s;
  auto violations = well_formedness_violations(o, rcf);
  if (!violations.empty()) {
    acceptable = false;
    s << "not acceptable: not well-formed\n";
    for (const auto& v : violations) s << "  " << v << '\n';
    return s.str();
  }
  auto miss = missing_attributes(o, rcf);
  auto unsup = unsupported(o, rcf);
  bool saturated = true, supported = true;
  for (const auto& v : miss) saturated = saturated && v.empty();
  for (const auto& v : unsup) supported = supported && v.empty();
  acceptable = saturated && supported;
  if (acceptable) {
    s << "acceptable\n";
  } else {
    s << "not acceptable:";
    if (!saturated) s << " not saturated";
    if (!saturated && !supported) s << ',';
    if (!supported) s << " not self-supported";
    s << '\n';
  }
  for (std::size_t x = 0; x < o.size(); ++x) {
    const auto& k = o[x].k();
    for (const auto& a : unsup[x]) {
      const auto& z = rcf.contexts[rcf.relations[*rcf.relation_index(a.relation)].to];
      s << "  attribute " << a.text() << " of " << k.id() << " unsupported (" << a.target_name
        << " is not a concept of L_" << z.id() << ")\n";
    }
    for (const auto& a : miss[x]) {
      s << "  attribute " << a.text() << " missing from " << k.id();
      if (op_has_target(a.op)) {
        const auto& z = rcf.contexts[rcf.relations[*rcf.relation_index(a.relation)].to];
        s << " (" << a.target_name << " is a concept of L_" << z.id() << ")";
      }
      s << '\n';
    }
  }
  return s.str();
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relational concept analysis: both fixed-point semantics and the acceptable solution space"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Common c;
  bool json = false, prune_off = false, serial = false, reduced = false;
  std::size_t budget = default_budget();
  std::string solution, which = "lfp", context_id;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", c.file, "Relational context family (RCF text)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", c.out, "Write output to this path instead of stdout");
  };
  auto add_semantics = [&](CLI::App* sub) {
    sub->add_option("--semantics", which, "lfp (classic) or gfp (dual)")->check(CLI::IsMember({"lfp", "gfp"}));
  };

  auto* lfp = app.add_subcommand("lfp", "Least fixed point: classic RCA from the initial contexts");
  add_common(lfp);
  lfp->add_flag("--json", json, "JSON output");
  auto* gfp = app.add_subcommand("gfp", "Greatest fixed point: contraction from the fully scaled family");
  add_common(gfp);
  gfp->add_flag("--json", json, "JSON output");

  auto* en = app.add_subcommand("enumerate", "All acceptable families between the two semantics");
  add_common(en);
  en->add_option("--budget", budget, "Largest interval to enumerate (default 2^20 or RELCA_BUDGET)");
  en->add_flag("--no-prune", prune_off, "Test every family of the interval");
  en->add_flag("--serial", serial, "Use the serial reference path");

  auto* ck = app.add_subcommand("check", "Acceptability verdict for a solution file, with witnesses");
  add_common(ck);
  ck->add_option("solution", solution, "Solution file (context blocks)")->required()->check(CLI::ExistingFile);

  auto* im = app.add_subcommand("images", "Both closure-composition images of a solution file");
  add_common(im);
  im->add_option("solution", solution, "Solution file (context blocks)")->required()->check(CLI::ExistingFile);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram of one lattice in DOT");
  add_common(dot);
  add_semantics(dot);
  dot->add_option("--context", context_id, "Context identifier")->required();
  dot->add_flag("--reduced", reduced, "Reduced labelling");

  auto* tbox = app.add_subcommand("export-tbox", "Description-logic TBox and ABox of a family");
  add_common(tbox);
  add_semantics(tbox);

  auto* orc = app.add_subcommand("oracle", "Brute-force check of every well-formed family");
  add_common(orc);
  orc->add_option("--budget", budget, "Largest space to scan (default 2^20 or RELCA_BUDGET)");
  orc->add_flag("--serial", serial, "Use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto rcf = parse_rcf(read_file(c.file));
    const Exec exec = serial ? Exec::Serial : Exec::Parallel;
    if (lfp->parsed() || gfp->parsed()) {
      bool upper = gfp->parsed();
      auto trace = upper ? pq_closure_trace(top_family(rcf), rcf, exec) : ef_closure_trace(bottom_family(rcf), rcf, exec);
      if (json) {
        Json j;
        j["semantics"] = upper ? "gfp" : "lfp";
        j["steps"] = trace.changing_steps;
        j["family"] = family_json(trace.result);
        emit(j.dump(2) + "\n", c.out, out);
      } else {
        std::ostringstream s;
        s << "# " << (upper ? "gfp" : "lfp") << " after " << trace.changing_steps
          << (upper ? " contraction" : " expansion") << " step(s)\n";
        s << serialize_family(trace.result, true);
        emit(s.str(), c.out, out);
      }
      return 0;
    }
    if (en->parsed()) {
      EnumerateOptions opts;
      opts.budget = budget;
      opts.prune = !prune_off;
      opts.exec = exec;
      emit(report_json(enumerate_acceptable(rcf, opts)).dump(2) + "\n", c.out, out);
      return 0;
    }
    if (ck->parsed()) {
      auto o = parse_solution(read_file(solution), rcf);
      bool ok = false;
      emit(check_text(o, rcf, ok), c.out, out);
      return ok ? 0 : 1;
    }
    if (im->parsed()) {
      auto o = parse_solution(read_file(solution), rcf);
      emit(closure_report_json(closure_image_report(o, rcf, exec)).dump(2) + "\n", c.out, out);
      return 0;
    }
    if (dot->parsed()) {
      auto x = rcf.context_index(context_id);
      if (!x) throw InvalidArgument("unknown context " + context_id);
      auto o = semantics(which, rcf);
      emit(export_dot(o[*x].l(), reduced ? Labeling::Reduced : Labeling::Full), c.out, out);
      return 0;
    }
    if (tbox->parsed()) {
      auto o = semantics(which, rcf);
      if (!is_acceptable(o, rcf)) err << "warning: family is not acceptable\n";
      emit(export_tbox(o, rcf), c.out, out);
      return 0;
    }
    if (orc->parsed()) {
      auto res = oracle_enumerate(rcf, budget, exec);
      auto acc = res.acceptable(rcf);
      EnumerateOptions opts;
      opts.budget = budget;
      opts.exec = exec;
      auto rep = enumerate_acceptable(rcf, opts);
      bool agree = acc.size() == rep.acceptable.size();
      for (std::size_t i = 0; agree && i < acc.size(); ++i) agree = family_key(acc[i]) == family_key(rep.acceptable[i]);
      Json j;
      j["universe_size"] = res.universe.size();
      j["families"] = res.entries.size();
      j["acceptable_count"] = res.acceptable_count;
      j["agrees_with_enumeration"] = agree;
      Json list = Json::array();
      for (const auto& f : acc) list.push_back(family_json(f));
      j["acceptable"] = list;
      emit(j.dump(2) + "\n", c.out, out);
      return agree ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace relca
