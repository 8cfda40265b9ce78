#include "arrcomb/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "arrcomb/cache.hpp"
#include "arrcomb/error.hpp"
#include "arrcomb/identities.hpp"
#include "arrcomb/io.hpp"

namespace arrcomb::cli {

namespace {

using io::Json;

struct Settings {
  std::string cache_dir;
  bool cache_verify = false;
  bool serial = false;

  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }
  ResultCache cache() const { return ResultCache(ResultCache::resolve_dir(cache_dir)); }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

const DeformedBraidSpec& braid_spec(const Arrangement& a) {
  const auto* spec = a.deformed_braid();
  if (!spec) throw InvalidArgument("this command needs a deformed_braid arrangement");
  return *spec;
}

std::string report_text(const std::vector<CheckResult>& report) {
  std::ostringstream s;
  for (const auto& r : report) {
    s << (r.pass ? "pass" : "FAIL") << "  " << r.check << "  [" << r.instance << "]  " << r.lhs << "  vs  " << r.rhs;
    if (!r.note.empty()) s << "  (" << r.note << ")";
    s << '\n';
  }
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faces, levels and Whitney polynomials of deformed braid arrangements, with identity checks",
               "arrcomb"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--cache-dir", settings.cache_dir, "Cache directory (ARRCOMB_CACHE_DIR overrides)");
  app.add_flag("--cache-verify", settings.cache_verify, "Recompute cached face lists and compare");
  app.add_flag("--serial", settings.serial, "Use the serial kernels");

  std::string file, out_path;

  auto* gen = app.add_subcommand("gen", "Write arrangement JSON for a family, or validate a spec file");
  std::string family, spec_file;
  int n = 0, a = 1;
  auto* fam_opt = gen->add_option("--family", family, "braid|shi|catalan|semiorder|linial");
  auto* spec_opt = gen->add_option("--spec", spec_file, "Arrangement JSON to validate");
  gen->add_option("--n", n, "Number of coordinates")->needs(fam_opt);
  gen->add_option("--a", a, "Extension parameter")->needs(fam_opt);
  gen->add_option("-o,--out", out_path, "Output file");
  fam_opt->excludes(spec_opt);

  auto* faces = app.add_subcommand("faces", "Emit the face list");
  faces->add_option("file", file, "Arrangement JSON")->required();
  faces->add_option("-o,--out", out_path, "Output file");

  auto* table = app.add_subcommand("table", "Emit the f(d,l) and b_d counts as CSV");
  table->add_option("file", file, "Arrangement JSON")->required();
  table->add_option("-o,--out", out_path, "Output file");

  auto* poly = app.add_subcommand("poly", "Emit the Whitney or characteristic polynomial");
  poly->add_option("file", file, "Arrangement JSON")->required();
  bool whitney = false, chi = false;
  auto* w_flag = poly->add_flag("--whitney", whitney);
  auto* c_flag = poly->add_flag("--char", chi);
  w_flag->excludes(c_flag);
  poly->add_option("-o,--out", out_path, "Output file");

  auto* verify = app.add_subcommand("verify", "Run identity checks on a family or on random specs");
  int n_max = 0, random_count = -1, trunc = 4;
  std::uint64_t seed = 1;
  std::string checks, format = "json";
  auto* vfam = verify->add_option("--family", family, "braid|shi|catalan|semiorder|linial");
  auto* vrand = verify->add_option("--random", random_count, "Number of random deformed braid specs");
  vfam->excludes(vrand);
  verify->add_option("--n-max", n_max, "Largest n")->required();
  verify->add_option("--a", a, "Extension parameter")->needs(vfam);
  verify->add_option("--seed", seed, "Random seed")->needs(vrand);
  verify->add_option("--checks", checks, "Comma-separated subset of checks");
  verify->add_option("--trunc", trunc, "Series truncation order");
  verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("-o,--out", out_path, "Output file");

  auto* bij = app.add_subcommand("bijection", "Apply phi to a face, or phi^-1 to a partition with parts");
  int face_id = -1;
  std::string inverse;
  bij->add_option("file", file, "Arrangement JSON")->required();
  auto* id_opt = bij->add_option("--face", face_id, "Face id (position in the face list)");
  auto* inv_opt = bij->add_option("--inverse", inverse, "JSON {\"partition\", \"parts\"} inline or as a file");
  id_opt->excludes(inv_opt);
  bij->add_option("-o,--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << io::error_json("usage_error", e.what()).dump() << '\n';
    return 2;
  }

  try {
    const Execution exec = settings.exec();
    const ResultCache cache = settings.cache();

    if (gen->parsed()) {
      Arrangement arr = [&] {
        if (!spec_file.empty()) return io::read_arrangement(spec_file);
        if (family.empty()) throw InvalidArgument("gen needs --family or --spec");
        return build_family(parse_family(family), n, a);
      }();
      emit(pretty(io::to_json(arr)), out_path, out);
      return 0;
    }
    if (faces->parsed()) {
      Arrangement arr = io::read_arrangement(file);
      emit(pretty(io::to_json(cached_faces(cache, arr, exec, settings.cache_verify))), out_path, out);
      return 0;
    }
    if (table->parsed()) {
      Arrangement arr = io::read_arrangement(file);
      auto list = cached_faces(cache, arr, exec, settings.cache_verify);
      emit(io::table_csv(count_table(arr, list, exec)), out_path, out);
      return 0;
    }
    if (poly->parsed()) {
      if (!whitney && !chi) throw InvalidArgument("poly needs --whitney or --char");
      IntersectionPoset poset = build_intersection_poset(io::read_arrangement(file), exec);
      emit(pretty(io::to_json(whitney ? whitney_polynomial(poset) : characteristic_polynomial(poset))), out_path, out);
      return 0;
    }
    if (verify->parsed()) {
      std::vector<CheckResult> report;
      if (random_count >= 0) {
        RandomSuiteOptions o;
        o.count = random_count;
        o.n_max = n_max;
        o.seed = seed;
        o.checks = parse_check_list(checks);
        o.exec = exec;
        report = run_random_suite(o);
      } else {
        if (family.empty()) throw InvalidArgument("verify needs --family or --random");
        FamilySuiteOptions o;
        o.family = parse_family(family);
        o.n_max = n_max;
        o.a = a;
        o.truncation = trunc;
        o.checks = parse_check_list(checks);
        o.exec = exec;
        if (n_max < 1) throw InvalidArgument("--n-max must be at least 1");
        if (trunc < 1) throw InvalidArgument("--trunc must be at least 1");
        std::vector<Analysis> members;
        for (int k = 1; k <= n_max; ++k) {
          Arrangement arr = build_family(o.family, k, a);
          members.push_back(analyze(arr, family_label(o.family, k, a),
                                    cached_faces(cache, arr, exec, settings.cache_verify), exec));
        }
        report = run_family_suite(o, members);
      }
      emit(format == "text" ? report_text(report) : pretty(io::to_json(report)), out_path, out);
      for (const auto& r : report) {
        if (!r.pass) return 1;
      }
      return 0;
    }
    if (bij->parsed()) {
      Arrangement arr = io::read_arrangement(file);
      const DeformedBraidSpec& spec = braid_spec(arr);
      auto list = cached_faces(cache, arr, exec, settings.cache_verify);
      if (face_id >= 0 || inverse.empty()) {
        if (face_id < 0) throw InvalidArgument("bijection needs --face or --inverse");
        if (face_id >= static_cast<int>(list.size())) {
          throw InvalidArgument("face id " + std::to_string(face_id) + " out of range (" +
                                std::to_string(list.size()) + " faces)");
        }
        emit(pretty(io::to_json(phi(spec, list[face_id]))), out_path, out);
        return 0;
      }
      const auto first = inverse.find_first_not_of(" \t\n");
      Json input;
      if (first != std::string::npos && inverse[first] == '{') {
        input = Json::parse(inverse, nullptr, false);
        if (input.is_discarded()) throw ParseError("--inverse is not valid JSON");
      } else {
        input = io::read_json(inverse);
      }
      if (!input.is_object() || !input.contains("partition") || !input.contains("parts") || !input["parts"].is_array()) {
        throw ParseError("--inverse needs {\"partition\": [[...]], \"parts\": [face, ...]}");
      }
      OrderedPartition pi = io::partition_from_json(input["partition"]);
      pi.validate(spec.n);
      if (input["parts"].size() != pi.blocks.size()) throw InvalidArgument("need one part per block");
      std::vector<Face> parts;
      for (std::size_t p = 0; p < pi.blocks.size(); ++p) {
        Arrangement sub = build_deformed_braid(induced_subarrangement(spec, pi.blocks[p]));
        parts.push_back(io::face_from_json(input["parts"][p], sub));
      }
      Face f = phi_inverse(spec, pi, parts);
      std::size_t id = 0;
      while (id < list.size() && list[id].sign != f.sign) ++id;
      if (id == list.size()) throw StructureViolation("assembled face is missing from the face list");
      emit(pretty(io::to_json(list[id], id)), out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << io::error_json(e.code(), e.what()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << io::error_json("internal", e.what()).dump() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace arrcomb::cli
