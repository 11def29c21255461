#include "lshc/model_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lshc {
namespace {

constexpr const char* kMagic = "lshc-model";
constexpr int kVersion = 1;

std::string hexfloat(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::string word() {
    std::string t;
    if (!(in_ >> t)) throw std::runtime_error("model file truncated");
    return t;
  }

  void expect(const std::string& token) {
    const std::string got = word();
    if (got != token)
      throw std::runtime_error("malformed model file: expected '" + token + "', got '" +
                               got + "'");
  }

  double real() {
    const std::string t = word();
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);  // accepts hexfloats
    if (end == begin || *end != '\0')
      throw std::runtime_error("malformed model file: bad real '" + t + "'");
    return v;
  }

  long long integer() {
    const std::string t = word();
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size())
      throw std::runtime_error("malformed model file: bad integer '" + t + "'");
    return v;
  }

 private:
  std::istream& in_;
};

}  // namespace

void save_model(const ClassifierModel& model, std::ostream& out) {
  const auto& params = model.params();
  out << kMagic << ' ' << kVersion << '\n';
  out << "family " << to_string(model.kind()) << '\n';
  out << "d " << model.dim() << '\n';
  out << "m " << model.member_count() << '\n';
  out << "radius " << hexfloat(params.radius) << '\n';
  out << "c " << hexfloat(params.c) << '\n';
  out << "p1 " << hexfloat(params.p1) << '\n';
  out << "p2 " << hexfloat(params.p2) << '\n';

  out << "hashes " << model.member_count() << '\n';
  for (const auto& h : model.composite().members()) {
    out << "offset " << hexfloat(h.offset) << " proj";
    for (double v : h.projection) out << ' ' << hexfloat(v);
    out << '\n';
  }

  std::vector<const BucketKey*> keys;
  keys.reserve(model.labels().size());
  for (const auto& [key, rep] : model.labels()) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const BucketKey* a, const BucketKey* b) { return *a < *b; });

  out << "buckets " << keys.size() << '\n';
  for (const BucketKey* key : keys) {
    const auto& rep = model.labels().at(*key);
    out << "key";
    for (std::int64_t c : key->codes) out << ' ' << c;
    out << " label " << rep.label << " point";
    for (double v : rep.point) out << ' ' << hexfloat(v);
    out << '\n';
  }
  out << "end\n";
}

void save_model(const ClassifierModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_model(model, out);
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

ClassifierModel load_model(std::istream& in) {
  TokenReader r(in);
  if (r.word() != kMagic) throw std::runtime_error("not a model file (bad magic)");
  const long long version = r.integer();
  if (version != kVersion)
    throw std::runtime_error("unsupported model version " + std::to_string(version));

  r.expect("family");
  const StableFamilyKind kind = family_from_string(r.word());
  r.expect("d");
  const int d = static_cast<int>(r.integer());
  r.expect("m");
  const auto m = static_cast<std::size_t>(r.integer());
  if (d < 1 || m < 1) throw std::runtime_error("malformed model file: bad dimensions");

  SensitivityParams params{};
  r.expect("radius");
  params.radius = r.real();
  r.expect("c");
  params.c = r.real();
  r.expect("p1");
  params.p1 = r.real();
  r.expect("p2");
  params.p2 = r.real();

  r.expect("hashes");
  if (static_cast<std::size_t>(r.integer()) != m)
    throw std::runtime_error("malformed model file: hash count mismatch");
  std::vector<StableHashFunction> members(m);
  for (auto& h : members) {
    r.expect("offset");
    h.offset = r.real();
    h.width = params.radius;
    r.expect("proj");
    h.projection.resize(d);
    for (int j = 0; j < d; ++j) h.projection[j] = r.real();
  }

  r.expect("buckets");
  const auto buckets = static_cast<std::size_t>(r.integer());
  std::unordered_map<BucketKey, LabeledExample, BucketKeyHash> labels;
  labels.reserve(buckets);
  for (std::size_t b = 0; b < buckets; ++b) {
    r.expect("key");
    BucketKey key;
    key.codes.resize(m);
    for (std::size_t i = 0; i < m; ++i) key.codes[i] = r.integer();
    r.expect("label");
    LabeledExample rep;
    rep.label = static_cast<int>(r.integer());
    if (rep.label != 0 && rep.label != 1)
      throw std::runtime_error("malformed model file: bad label");
    r.expect("point");
    rep.point.resize(d);
    for (int j = 0; j < d; ++j) rep.point[j] = r.real();
    labels.emplace(std::move(key), std::move(rep));
  }
  r.expect("end");

  return assemble_model(kind, d, params, std::move(members), std::move(labels));
}

ClassifierModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_model(in);
}

}  // namespace lshc
