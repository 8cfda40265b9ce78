#include "arrcomb/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>

#include "arrcomb/error.hpp"
#include "arrcomb/io.hpp"

namespace arrcomb {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw Error("internal", "SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::resolve_dir(const std::string& flag_dir) {
  const char* env = std::getenv("ARRCOMB_CACHE_DIR");
  return env && *env ? std::string(env) : flag_dir;
}

std::string ResultCache::path_for(const Arrangement& a, const std::string& operation) const {
  return (fs::path(dir_) / (sha256_hex(io::canonical_text(a) + "\n" + operation) + ".json")).string();
}

std::optional<nlohmann::json> ResultCache::load(const Arrangement& a, const std::string& operation) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(a, operation));
  if (!in) return std::nullopt;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("result")) return std::nullopt;
  if (j.value("operation", "") != operation || j.value("input", "") != io::canonical_text(a)) return std::nullopt;
  return j.at("result");
}

void ResultCache::store(const Arrangement& a, const std::string& operation, const nlohmann::json& result) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error("cache_error", "cannot create cache directory '" + dir_ + "': " + ec.message());
  const std::string path = path_for(a, operation);
  const std::string tmp = path + ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cache_error", "cannot write '" + tmp + "'");
    out << nlohmann::json{{"operation", operation}, {"input", io::canonical_text(a)}, {"result", result}}.dump();
    if (!out) throw Error("cache_error", "cannot write '" + tmp + "'");
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cache_error", "cannot move cache file into place: " + path);
  }
}

namespace {

std::optional<std::vector<Face>> decode_faces(const nlohmann::json& j, const Arrangement& a) {
  if (!j.is_array()) return std::nullopt;
  std::vector<Face> out;
  try {
    for (const auto& e : j) {
      Face f;
      for (const auto& c : e.at("witness")) f.witness.push_back(parse_rational(c.get<std::string>()));
      std::vector<LinearForm> eqs;
      for (const auto& h : e.at("flat_equations")) {
        LinearForm form;
        for (const auto& c : h.at("normal")) form.normal.push_back(parse_rational(c.get<std::string>()));
        form.offset = parse_rational(h.at("offset").get<std::string>());
        eqs.push_back(std::move(form));
      }
      auto flat = flat_from_hyperplanes(eqs, a.ambient_dim());
      if (!flat || flat->equations() != eqs) return std::nullopt;
      f.flat = *flat;
      f.sign = e.at("sign").get<std::string>();
      f.dim = e.at("dim").get<int>();
      f.level = e.at("level").get<int>();
      if (static_cast<int>(f.witness.size()) != a.ambient_dim() || f.dim != f.flat.dim() ||
          !f.flat.contains(f.witness) || sign_vector(a, f.witness) != f.sign) {
        return std::nullopt;
      }
      out.push_back(std::move(f));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return out;
}

bool same_faces(const std::vector<Face>& x, const std::vector<Face>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].sign != y[i].sign || x[i].dim != y[i].dim || x[i].level != y[i].level || !(x[i].flat == y[i].flat)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Face> cached_faces(const ResultCache& cache, const Arrangement& a, Execution exec, bool recompute) {
  std::optional<std::vector<Face>> hit;
  if (auto j = cache.load(a, "faces")) hit = decode_faces(*j, a);
  if (hit && !recompute) return *hit;
  std::vector<Face> fresh = enumerate_faces(a, exec);
  if (hit && !same_faces(*hit, fresh)) {
    throw Error("cache_mismatch", "cached faces differ from a fresh enumeration: " + cache.path_for(a, "faces"));
  }
  if (!hit) cache.store(a, "faces", io::to_json(fresh));
  return fresh;
}

}  // namespace arrcomb
