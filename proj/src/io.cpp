#include "arrcomb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "arrcomb/error.hpp"

namespace arrcomb::io {

namespace {

Json rationals(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json offsets_json(const PairOffsets& offsets) {
  Json out = Json::object();
  for (const auto& [key, list] : offsets) {
    out[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = rationals(list);
  }
  return out;
}

Json form_json(const LinearForm& h) { return {{"normal", rationals(h.normal)}, {"offset", format_rational(h.offset)}}; }

Rational rational_of(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": rationals must be strings \"p/q\" or \"p\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Vector rationals_of(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array");
  Vector out;
  for (const auto& e : j) out.push_back(rational_of(e, where));
  return out;
}

int index_of(const std::string& text, const std::string& where) {
  if (text.empty() || text.size() > 6 || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw ParseError(where + ": bad index '" + text + "'");
  }
  return std::stoi(text);
}

PairOffsets pairs_of(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be an object keyed by \"i,j\"");
  PairOffsets out;
  for (const auto& [key, list] : j.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError(where + ": key '" + key + "' is not \"i,j\"");
    int i = index_of(key.substr(0, comma), where);
    int k = index_of(key.substr(comma + 1), where);
    if (i < 1 || i >= k) throw InvalidSpec(where + ": key '" + key + "' needs 1 <= i < j");
    if (!out.emplace(std::make_pair(i - 1, k - 1), rationals_of(list, where + " " + key)).second) {
      throw ParseError(where + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<LinearForm> forms_of(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("\"hyperplanes\" must be an array");
  std::vector<LinearForm> out;
  for (const auto& h : j) {
    if (!h.is_object()) throw ParseError("each hyperplane must be an object");
    LinearForm f{rationals_of(field(h, "normal"), "normal"), rational_of(field(h, "offset"), "offset")};
    if (static_cast<int>(f.normal.size()) != n) {
      throw DimensionMismatch("hyperplane normal has " + std::to_string(f.normal.size()) + " entries, expected " +
                              std::to_string(n));
    }
    out.push_back(std::move(f));
  }
  return out;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ParseError("unexpected field \"" + key + "\"");
    }
  }
}

void check_listed(const Json& j, const Arrangement& built) {
  if (!j.contains("hyperplanes")) return;
  std::vector<LinearForm> listed;
  for (const auto& f : forms_of(j.at("hyperplanes"), built.ambient_dim())) {
    listed.push_back(canonicalize(f).hyperplane);
  }
  std::vector<LinearForm> expected = built.hyperplanes();
  std::sort(listed.begin(), listed.end());
  std::sort(expected.begin(), expected.end());
  if (listed != expected) throw InvalidSpec("\"hyperplanes\" does not match the offsets");
}

}  // namespace

Json to_json(const Arrangement& a) {
  Json j;
  j["ambient_dim"] = a.ambient_dim();
  j["kind"] = std::string(kind_name(a.kind()));
  if (const auto* s = a.deformed_braid()) {
    j["offsets"] = offsets_json(s->offsets);
  } else if (const auto* b = a.type_b()) {
    j["offsets"] = offsets_json(b->diff_offsets);
    j["sum_offsets"] = offsets_json(b->sum_offsets);
    Json axis = Json::object();
    for (const auto& [i, list] : b->axis_offsets) axis[std::to_string(i + 1)] = rationals(list);
    j["axis_offsets"] = axis;
  }
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes()) hs.push_back(form_json(h));
  j["hyperplanes"] = hs;
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("arrangement must be a JSON object");
  check_keys(j, {"ambient_dim", "kind", "offsets", "sum_offsets", "axis_offsets", "hyperplanes"});
  const int n = int_field(j, "ambient_dim");
  if (n < 0) throw InvalidSpec("ambient_dim must be nonnegative");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();

  if (k == "generic") {
    if (j.contains("offsets") || j.contains("sum_offsets") || j.contains("axis_offsets")) {
      throw ParseError("generic arrangements take only \"hyperplanes\"");
    }
    return Arrangement::generic(n, j.contains("hyperplanes") ? forms_of(j.at("hyperplanes"), n) : std::vector<LinearForm>{});
  }
  if (k == "deformed_braid") {
    if (j.contains("sum_offsets") || j.contains("axis_offsets")) {
      throw ParseError("deformed_braid arrangements take only \"offsets\"");
    }
    DeformedBraidSpec spec;
    spec.n = n;
    spec.offsets = pairs_of(j.contains("offsets") ? j.at("offsets") : Json::object(), "offsets");
    Arrangement a = build_deformed_braid(spec);
    check_listed(j, a);
    return a;
  }
  if (k == "type_b") {
    TypeBSpec spec;
    spec.n = n;
    spec.diff_offsets = pairs_of(j.contains("offsets") ? j.at("offsets") : Json::object(), "offsets");
    spec.sum_offsets = pairs_of(j.contains("sum_offsets") ? j.at("sum_offsets") : Json::object(), "sum_offsets");
    const Json& axis = field(j, "axis_offsets");
    if (!axis.is_object()) throw ParseError("\"axis_offsets\" must be an object keyed by \"i\"");
    for (const auto& [key, list] : axis.items()) {
      int i = index_of(key, "axis_offsets");
      if (i < 1) throw InvalidSpec("axis_offsets index must be >= 1");
      spec.axis_offsets[i - 1] = rationals_of(list, "axis_offsets " + key);
    }
    Arrangement a = build_type_b(spec);
    check_listed(j, a);
    return a;
  }
  throw InvalidSpec("unknown arrangement kind '" + k + "'");
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Arrangement read_arrangement(const std::string& path) { return arrangement_from_json(read_json(path)); }

std::string canonical_text(const Arrangement& a) { return to_json(a).dump(); }

Json to_json(const BivariatePolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exp, c] : p.terms()) {
    terms.push_back({{"x", exp.first}, {"t", exp.second}, {"coeff", format_rational(c)}});
  }
  return {{"terms", terms}};
}

BivariatePolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be an object");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  BivariatePolynomial p;
  for (const auto& t : terms) {
    const int x = int_field(t, "x");
    const int e = int_field(t, "t");
    if (x < 0 || e < 0) throw ParseError("exponents must be nonnegative");
    p.add_term(rational_of(field(t, "coeff"), "coeff"), x, e);
  }
  return p;
}

Json to_json(const Face& f, std::size_t id) {
  Json eqs = Json::array();
  for (const auto& e : f.flat.equations()) eqs.push_back(form_json(e));
  return {{"id", id},         {"dim", f.dim}, {"level", f.level}, {"sign", f.sign}, {"witness", rationals(f.witness)},
          {"flat_equations", eqs}};
}

Json to_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (std::size_t i = 0; i < faces.size(); ++i) out.push_back(to_json(faces[i], i));
  return out;
}

Face face_from_json(const Json& j, const Arrangement& a) {
  if (!j.is_object()) throw ParseError("face must be an object");
  Vector w = rationals_of(field(j, "witness"), "witness");
  if (static_cast<int>(w.size()) != a.ambient_dim()) {
    throw DimensionMismatch("witness has " + std::to_string(w.size()) + " coordinates, expected " +
                            std::to_string(a.ambient_dim()));
  }
  Face f = locate_face(a, w);
  if (j.contains("sign")) {
    if (!j.at("sign").is_string()) throw ParseError("\"sign\" must be a string");
    if (j.at("sign").get<std::string>() != f.sign) throw InvalidArgument("witness does not reproduce the sign vector");
  }
  if (j.contains("dim") && (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != f.dim)) {
    throw InvalidArgument("stored dim does not match the face of the witness");
  }
  if (j.contains("level") && (!j.at("level").is_number_integer() || j.at("level").get<int>() != f.level)) {
    throw InvalidArgument("stored level does not match the face of the witness");
  }
  return f;
}

std::vector<Face> faces_from_json(const Json& j, const Arrangement& a) {
  if (!j.is_array()) throw ParseError("face list must be an array");
  std::vector<Face> out;
  for (const auto& f : j) out.push_back(face_from_json(f, a));
  return out;
}

std::string table_csv(const FaceCountTable& t) {
  std::ostringstream out;
  out << "d";
  for (int l = 0; l <= t.n; ++l) out << ',' << l;
  out << ",b\n";
  for (int d = 0; d <= t.n; ++d) {
    out << d;
    for (int l = 0; l <= t.n; ++l) out << ',' << (l <= d ? t.at(d, l) : 0);
    out << ',' << t.b[d] << '\n';
  }
  return out.str();
}

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"N", s.truncation()}, {"coeffs", coeffs}};
}

Json to_json(const std::vector<CheckResult>& report) {
  Json out = Json::array();
  for (const auto& r : report) {
    Json e = {{"check", r.check},
              {"instance", r.instance},
              {"status", r.pass ? "pass" : "fail"},
              {"lhs", r.lhs},
              {"rhs", r.rhs}};
    if (!r.note.empty()) e["note"] = r.note;
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const OrderedPartition& p) {
  Json out = Json::array();
  for (const auto& block : p.blocks) {
    Json b = Json::array();
    for (int v : block) b.push_back(v + 1);
    out.push_back(b);
  }
  return out;
}

OrderedPartition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be an array of blocks");
  OrderedPartition p;
  for (const auto& b : j) {
    if (!b.is_array()) throw ParseError("partition block must be an array");
    std::vector<int> block;
    for (const auto& v : b) {
      if (!v.is_number_integer()) throw ParseError("partition elements must be integers");
      block.push_back(v.get<int>() - 1);
    }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Json to_json(const PhiImage& image) {
  Json parts = Json::array();
  for (std::size_t p = 0; p < image.parts.size(); ++p) parts.push_back(to_json(image.parts[p], p));
  return {{"partition", to_json(image.partition)}, {"parts", parts}};
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace arrcomb::io
