#include "modtwist/cli.hpp"

#include <future>

#include "CLI11.hpp"
#include "modtwist/catalog.hpp"
#include "modtwist/reports.hpp"

namespace modtwist::cli {

namespace {

using report::Json;
using report::Outcome;

struct Options {
  std::string format = "text";
  std::vector<std::string> files;
  bool all = false;
  std::string output;
  std::string name;
  int n = 3;
  bool check = false;
};

void emit(const Outcome& o, const Options& opt, std::ostream& out, std::ostream& err) {
  if (o.report.contains("error")) err << "error: " << o.report["error"].get<std::string>() << "\n";
  if (opt.format == "json")
    out << o.report.dump(2) << "\n";
  else
    out << report::render_text(o.report);
}

Outcome on_file(const std::string& command, const std::string& path,
                const std::function<Outcome(const StructureFile&)>& body) {
  Outcome o = report::guarded(command, [&] { return body(read_structure_file(path)); });
  o.report["file"] = path;
  return o;
}

std::function<Outcome(const StructureFile&)> command_body(const std::string& command) {
  if (command == "verify") return report::verify;
  if (command == "modular") return report::modular;
  if (command == "frobenius") return report::frobenius;
  if (command == "relations") return report::relations;
  return report::linearize;
}

/// Emits `file` to -o or, failing that, to `out`. Returns false on I/O error.
bool write_file(const StructureFile& file, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.output.empty()) {
    out << serialize_structure(file);
    return true;
  }
  try {
    write_structure_file(opt.output, file);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return false;
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular classes of twisted triangular r-matrices over Q", "modtwist"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check closedness, the twisted CYBE and structural invariants");
  verify->add_flag("--all", opt.all, "Verify every listed file (in parallel)");
  verify->add_option("files", opt.files, "Structure files")->required();

  auto* modular = app.add_subcommand("modular", "Compute the modular class report");
  modular->add_option("file", opt.files, "Structure file")->required()->expected(1);
  auto* frob = app.add_subcommand("frobenius", "Modular class from a Frobenius functional xi on a subalgebra");
  frob->add_option("file", opt.files, "Structure file")->required()->expected(1);
  auto* lin = app.add_subcommand("linearize", "Build (r, psi) from a 2-cochain mu non-degenerate on a subalgebra");
  lin->add_option("file", opt.files, "Structure file")->required()->expected(1);
  lin->add_option("-o,--output", opt.output, "Write the resulting structure file here");
  auto* rel = app.add_subcommand("relations", "Check the relations between modular classes");
  rel->add_option("file", opt.files, "Structure file")->required()->expected(1);

  auto* cat = app.add_subcommand("catalog", "Emit or check a built-in example");
  cat->add_option("name", opt.name, "affine, q or gg")->required()->check(CLI::IsMember(catalog::names()));
  cat->add_option("--n", opt.n, "Matrix size for q and gg")->capture_default_str();
  cat->add_flag("--check", opt.check, "Recompute and compare with the expected answers");
  cat->add_option("-o,--output", opt.output, "Write the structure file here instead of stdout");


  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return report::kMalformed;
  }

  if (verify->parsed()) {
    if (opt.files.size() > 1 && !opt.all) {
      err << "error: pass --all to verify more than one file\n";
      return report::kMalformed;
    }
    std::vector<std::future<Outcome>> jobs;
    for (const auto& path : opt.files)
      jobs.push_back(std::async(std::launch::async, [path] { return on_file("verify", path, report::verify); }));
    int code = report::kOk;
    Json all = Json::array();
    for (auto& j : jobs) {
      Outcome o = j.get();
      code = std::max(code, o.code);
      if (opt.all && opt.format == "json") {
        if (o.report.contains("error")) err << "error: " << o.report["error"].get<std::string>() << "\n";
        all.push_back(std::move(o.report));
      } else {
        emit(o, opt, out, err);
      }
    }
    if (opt.all && opt.format == "json") out << Json{{"results", all}, {"exit_code", code}}.dump(2) << "\n";
    return code;
  }

  if (cat->parsed()) {
    Outcome o = report::guarded("catalog", [&] { return report::catalog(opt.name, opt.n, opt.check); });
    if (o.file && !opt.check) {
      if (!write_file(*o.file, opt, out, err)) return report::kMalformed;
      return o.code;
    }
    emit(o, opt, out, err);
    return o.code;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome o = on_file(command, opt.files.front(), command_body(command));
  if (command == "linearize" && o.file) {
    if (opt.output.empty()) {
      out << serialize_structure(*o.file);
      return o.code;
    }
    if (!write_file(*o.file, opt, out, err)) return report::kMalformed;
  }
  emit(o, opt, out, err);
  return o.code;
}

}  // namespace modtwist::cli
