#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "d2hopf/catalog.hpp"
#include "d2hopf/runner.hpp"

using namespace d2hopf;

namespace {

struct VerifyOptions {
  std::string input;
  std::string field;
  std::string checks = "all";
  std::string format = "text";
  std::string out;
  unsigned jobs = 1;
};

struct ShowOptions {
  std::string input;
  std::string field;
  std::string what = "all";
};

// Either a catalog entry or a parsed document from disk.
struct ResolvedInput {
  std::string name;
  std::optional<CatalogEntry> entry;
  Json doc;
};

ResolvedInput resolve_input(const std::string& input) {
  try {
    ResolvedInput r;
    r.entry = find_entry(input);
    r.name = r.entry->id;
    return r;
  } catch (const UnknownEntry&) {
    std::ifstream in(input);
    if (!in)
      throw ParseError("'" + input +
                       "' is neither a catalog entry nor a readable file");
    ResolvedInput r;
    r.name = input;
    try {
      r.doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(input + ": " + e.what());
    }
    return r;
  }
}

// The ground field of a run: the --field flag for catalog entries (falling
// back to the entry default), the document's field block for files. A flag
// given alongside a file must restate the document's field; coefficients are
// exact strings tied to that field, so silent reinterpretation is refused.
FieldSpec resolve_field(const ResolvedInput& in, const std::string& flag) {
  if (in.entry) {
    FieldSpec fs =
        flag.empty() ? in.entry->default_field : parse_field_flag(flag);
    require_compatible(*in.entry, fs);
    return fs;
  }
  if (!in.doc.is_object() || !in.doc.contains("field"))
    throw ParseError(in.name + ": missing \"field\" block");
  FieldSpec fs = field_spec_of_json(in.doc.at("field"));
  if (!flag.empty() && parse_field_flag(flag) != fs)
    throw ParseError(in.name + ": the document is defined over " + fs.name() +
                     "; --field may only restate that (edit the field block "
                     "to change it)");
  return fs;
}

template <class F>
ParsedInput<F> build_input(const ResolvedInput& in, F f) {
  if (in.entry) return ParsedInput<F>{build_entry(*in.entry, f), std::nullopt};
  return load_extension(in.doc, f);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write to '" + out_path + "'");
  out << text;
}

template <class F>
int run_verify_cmd(const ResolvedInput& in, F f, const VerifyOptions& o) {
  ParsedInput<F> parsed = build_input(in, f);
  CheckSelection sel = parse_check_selection(o.checks);
  VerifyReport rep =
      run_verify(in.name, parsed.E, parsed.coefficients, sel, o.jobs);
  if (o.format == "json")
    emit(report_to_json(rep).dump(2) + "\n", o.out);
  else
    emit(report_to_text(rep), o.out);
  return rep.all_pass() ? 0 : 1;
}

template <class F>
int run_show_cmd(const ResolvedInput& in, F f, const ShowOptions& o) {
  ParsedInput<F> parsed = build_input(in, f);
  ShowResult res = show_dump(in.name, parsed.E, parse_show_selection(o.what));
  std::cout << res.text;
  return res.ok ? 0 : 1;
}

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldSpec::Kind::rational) return fn(RationalField{});
  return fn(PrimeField(fs.p));
}

int run_list() {
  std::size_t width = 0;
  for (const auto& e : catalog()) width = std::max(width, e.id.size());
  for (const auto& e : catalog()) {
    std::string flags = "[depth-two]";
    flags += e.irreducible ? " [irreducible]" : " [reducible]";
    std::cout << e.id << std::string(width - e.id.size() + 2, ' ') << flags
              << "  fields: " << e.fields << "\n";
    std::cout << std::string(width + 2, ' ') << e.summary << "\n";
  }
  std::cout << "\ngroup-normal(<p>) is accepted for any odd prime p not "
               "dividing 6; bare group-normal means group-normal(5).\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "depth-two extension checker: quasibases, dual bialgebroids, "
      "antipodes and cochain complexes over exact fields"};
  app.require_subcommand(1);

  app.add_subcommand("list", "list the built-in extensions");

  VerifyOptions vo;
  auto* verify =
      app.add_subcommand("verify", "run check suites against an extension");
  verify->add_option("input", vo.input, "catalog entry id or JSON file path")
      ->required();
  verify->add_option("--field", vo.field,
                     "ground field: q, rational or gfp:<p>");
  verify->add_option("--checks", vo.checks,
                     "comma-separated groups: d2, bialgebroid, hopf, skew, "
                     "lu, pi, cohomology, or all");
  verify->add_option("--format", vo.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vo.out, "write the report to a file");
  verify->add_option("--jobs", vo.jobs, "run check groups in parallel")
      ->check(CLI::Range(1u, 64u));

  ShowOptions so;
  auto* show =
      app.add_subcommand("show", "dump computed structure in canonical bases");
  show->add_option("input", so.input, "catalog entry id or JSON file path")
      ->required();
  show->add_option("--field", so.field,
                   "ground field: q, rational or gfp:<p>");
  show->add_option("--what", so.what,
                   "comma-separated sections: dims, quasibases, delta, tau, "
                   "pairings, cohomology, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("list")) return run_list();
    if (app.got_subcommand(verify)) {
      ResolvedInput in = resolve_input(vo.input);
      FieldSpec fs = resolve_field(in, vo.field);
      return with_field(fs, [&](auto f) { return run_verify_cmd(in, f, vo); });
    }
    ResolvedInput in = resolve_input(so.input);
    FieldSpec fs = resolve_field(in, so.field);
    return with_field(fs, [&](auto f) { return run_show_cmd(in, f, so); });
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
