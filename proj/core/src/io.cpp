#include "grcat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grcat/error.hpp"

namespace grcat::io {

using nlohmann::ordered_json;

namespace {

std::string tuple_key(const std::vector<int>& tuple) {
  std::string s;
  for (size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
  return s;
}

std::vector<int> parse_tuple_key(const std::string& key, int degree) {
  std::vector<int> out;
  if (!key.empty()) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        out.push_back(std::stoi(part));
      } catch (...) {
        throw Error(errc::parse_error, "bad tuple key '" + key + "'");
      }
    }
  }
  if (static_cast<int>(out.size()) != degree)
    throw Error(errc::parse_error, "tuple key '" + key + "' does not match the degree");
  return out;
}

// ---- serializers to json ----

ordered_json group_json(const FiniteGroup& g) {
  ordered_json j;
  j["names"] = g.names();
  j["table"] = g.table_rows();
  return j;
}

ordered_json abelian_json(const AbelianGroup& a) {
  ordered_json j;
  j["invariant_factors"] = a.invariant_factors();
  return j;
}

ordered_json module_json(const PiModule& m) {
  ordered_json j;
  j["group"] = group_json(m.group());
  j["carrier"] = abelian_json(m.carrier());
  ordered_json action = ordered_json::object();
  for (int x = 0; x < m.group().order(); ++x) {
    ordered_json imgs = ordered_json::array();
    for (const auto& img : m.generator_images()[x]) imgs.push_back(img);
    action[std::to_string(x)] = imgs;
  }
  j["action"] = action;
  return j;
}

ordered_json cochain_json(const Cochain& c) {
  ordered_json j;
  j["degree"] = c.degree();
  j["module"] = module_json(c.mod());
  ordered_json values = ordered_json::object();
  const AbelianGroup& a = c.mod().carrier();
  for (size_t slot = 0; slot < c.tuples(); ++slot) {
    if (c.value_by_slot(slot) == 0) continue;
    values[tuple_key(c.tuple_of_slot(slot))] = a.element_at(c.value_by_slot(slot));
  }
  j["values"] = values;
  return j;
}

ordered_json gr_type_json(const GrType& t) {
  ordered_json j;
  j["module"] = module_json(*t.module);
  j["xi"] = cochain_json(t.xi);
  return j;
}

ordered_json functor_json(const FunctorData& f) {
  ordered_json j;
  j["source"] = gr_type_json(f.source);
  j["target"] = gr_type_json(f.target);
  j["phi"] = f.phi.image();
  ordered_json fimgs = ordered_json::array();
  for (const auto& img : f.f_gen_images) fimgs.push_back(img);
  j["f"] = fimgs;
  if (f.g) j["g"] = cochain_json(*f.g);
  return j;
}

ordered_json kernel_json(const AbstractKernel& k) {
  ordered_json j;
  j["pi"] = group_json(k.pi);
  j["g"] = group_json(k.gd->group());
  j["psi"] = k.psi.image();
  return j;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- parsing ----

struct Loader {
  Workspace* ws;
  std::filesystem::path dir;  // base directory for $ref resolution

  /// Follows a chain of $ref indirections; returns the final json together
  /// with the directory nested refs must resolve against.
  std::pair<ordered_json, std::filesystem::path> resolve(const ordered_json& j) const;

  FiniteGroup group(const ordered_json& j) const;
  AbelianGroup abelian(const ordered_json& j) const;
  PiModule module(const ordered_json& j) const;
  Cochain cochain(const ordered_json& j) const;
  GrType gr_type(const ordered_json& j) const;
  FunctorData functor(const ordered_json& j) const;
  AbstractKernel kernel(const ordered_json& j) const;
};

ordered_json parse_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::parse_error, e.what());
  }
}

std::pair<ordered_json, std::filesystem::path> Loader::resolve(const ordered_json& start) const {
  ordered_json j = start;
  std::filesystem::path base = dir;
  int depth = 0;
  while (j.is_object() && j.contains("$ref")) {
    if (++depth > 32) throw Error(errc::bad_reference, "reference chain too deep");
    if (!j["$ref"].is_string()) throw Error(errc::bad_reference, "$ref must be a string");
    std::filesystem::path target = base / j["$ref"].get<std::string>();
    j = parse_text(ws->read_file(target));
    base = target.parent_path();
  }
  return {std::move(j), std::move(base)};
}

FiniteGroup Loader::group(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object()) throw Error(errc::parse_error, "group must be an object");
  if (j.contains("permutation_generators")) {
    auto gens = j.at("permutation_generators").get<std::vector<std::vector<int>>>();
    int degree = j.at("degree").get<int>();
    return FiniteGroup::from_permutations(gens, degree);
  }
  if (!j.contains("names") || !j.contains("table"))
    throw Error(errc::parse_error, "group needs names/table or permutation_generators/degree");
  return FiniteGroup::from_table(j.at("names").get<std::vector<std::string>>(),
                                 j.at("table").get<std::vector<std::vector<int>>>());
}

AbelianGroup Loader::abelian(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object() || !j.contains("invariant_factors"))
    throw Error(errc::parse_error, "abelian group needs invariant_factors");
  return AbelianGroup(j.at("invariant_factors").get<std::vector<int64_t>>());
}

PiModule Loader::module(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object() || !j.contains("group") || !j.contains("carrier") || !j.contains("action"))
    throw Error(errc::parse_error, "module needs group, carrier and action");
  Loader sub{ws, base};
  FiniteGroup g = sub.group(j.at("group"));
  AbelianGroup a = sub.abelian(j.at("carrier"));
  std::vector<std::vector<AbelianGroup::Elem>> images(
      g.order(), std::vector<AbelianGroup::Elem>(a.rank()));
  std::vector<char> given(g.order(), 0);
  for (auto it = j.at("action").begin(); it != j.at("action").end(); ++it) {
    int x;
    try {
      x = std::stoi(it.key());
    } catch (...) {
      throw Error(errc::parse_error, "action key '" + it.key() + "' is not an element index");
    }
    if (x < 0 || x >= g.order())
      throw Error(errc::parse_error, "action key " + std::to_string(x) + " out of range");
    auto imgs = it.value().get<std::vector<AbelianGroup::Elem>>();
    if (static_cast<int>(imgs.size()) != a.rank())
      throw Error(errc::parse_error,
                  "action of " + std::to_string(x) + " needs one image per generator");
    images[x] = imgs;
    given[x] = 1;
  }
  for (int x = 0; x < g.order(); ++x)
    if (!given[x])
      throw Error(errc::not_an_action, "action missing for element " + std::to_string(x));
  return PiModule::make(std::move(g), std::move(a), std::move(images));
}

Cochain Loader::cochain(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object() || !j.contains("degree") || !j.contains("module") || !j.contains("values"))
    throw Error(errc::parse_error, "cochain needs degree, module and values");
  int degree = j.at("degree").get<int>();
  Loader sub{ws, base};
  auto mod = std::make_shared<const PiModule>(sub.module(j.at("module")));
  Cochain c(mod, degree);
  const AbelianGroup& a = mod->carrier();
  const FiniteGroup& g = mod->group();
  for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
    std::vector<int> tuple = parse_tuple_key(it.key(), degree);
    for (int x : tuple)
      if (x < 0 || x >= g.order())
        throw Error(errc::parse_error, "tuple index out of range in '" + it.key() + "'");
    AbelianGroup::Elem v = a.reduce(it.value().get<AbelianGroup::Elem>());
    bool has_identity = false;
    for (int x : tuple) has_identity = has_identity || x == g.identity();
    if (has_identity && degree > 0) {
      if (a.index_of(v) != 0)
        throw Error(errc::bad_argument,
                    "normalization failure: nonzero value on identity tuple (" + it.key() + ")");
      continue;
    }
    c.set_value(tuple, a.index_of(v));
  }
  return c;
}

GrType Loader::gr_type(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object() || !j.contains("module") || !j.contains("xi"))
    throw Error(errc::parse_error, "gr-type needs module and xi");
  Loader sub{ws, base};
  auto mod = std::make_shared<const PiModule>(sub.module(j.at("module")));
  Cochain xi = sub.cochain(j.at("xi"));
  if (xi.degree() != 3) throw Error(errc::bad_argument, "xi must have degree 3");
  if (!(*xi.module() == *mod))
    throw Error(errc::signature_mismatch, "xi is defined over a different module");
  // Re-anchor on the shared module pointer.
  Cochain anchored(mod, 3);
  for (size_t slot = 0; slot < xi.tuples(); ++slot)
    anchored.set_by_slot(slot, xi.value_by_slot(slot));
  return GrType::make(mod, std::move(anchored));
}

FunctorData Loader::functor(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("phi") ||
      !j.contains("f"))
    throw Error(errc::parse_error, "functor needs source, target, phi and f");
  Loader sub{ws, base};
  GrType source = sub.gr_type(j.at("source"));
  GrType target = sub.gr_type(j.at("target"));
  auto phi = j.at("phi").get<std::vector<int>>();
  auto f = j.at("f").get<std::vector<AbelianGroup::Elem>>();
  std::optional<Cochain> g;
  if (j.contains("g")) {
    Cochain raw_g = sub.cochain(j.at("g"));
    if (raw_g.degree() != 2) throw Error(errc::bad_argument, "g must have degree 2");
    // g lives over the pulled-back module; rebuild on that shared pointer.
    GroupHom hom(source.group(), target.group(), phi);
    auto pb = std::make_shared<const PiModule>(pullback_module(hom, *target.module));
    if (!(*raw_g.module() == *pb))
      throw Error(errc::signature_mismatch, "g is not over the pulled-back module");
    Cochain anchored(pb, 2);
    for (size_t slot = 0; slot < raw_g.tuples(); ++slot)
      anchored.set_by_slot(slot, raw_g.value_by_slot(slot));
    g = std::move(anchored);
  }
  return make_functor(source, target, phi, f, std::move(g));
}

AbstractKernel Loader::kernel(const ordered_json& raw) const {
  auto [j, base] = resolve(raw);
  if (!j.is_object() || !j.contains("pi") || !j.contains("g") || !j.contains("psi"))
    throw Error(errc::parse_error, "kernel needs pi, g and psi");
  Loader sub{ws, base};
  FiniteGroup pi = sub.group(j.at("pi"));
  auto gd = std::make_shared<const GroupData>(sub.group(j.at("g")));
  return AbstractKernel::make(std::move(pi), std::move(gd), j.at("psi").get<std::vector<int>>());
}

std::string detect_kind(const ordered_json& j) {
  if (!j.is_object()) throw Error(errc::parse_error, "top-level value must be an object");
  if (j.contains("names") || j.contains("permutation_generators")) return "group";
  if (j.contains("invariant_factors")) return "abelian";
  if (j.contains("psi")) return "kernel";
  if (j.contains("phi")) return "functor";
  if (j.contains("xi")) return "grtype";
  if (j.contains("degree")) return "cochain";
  if (j.contains("action")) return "module";
  throw Error(errc::parse_error, "cannot detect object kind from keys");
}

}  // namespace

std::string Workspace::read_file(const std::filesystem::path& path) {
  std::error_code ec;
  std::filesystem::path canon = std::filesystem::weakly_canonical(path, ec);
  std::string key = ec ? path.string() : canon.string();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::ifstream in(path);
  if (!in) throw Error(errc::bad_reference, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  cache_[key] = buf.str();
  return cache_[key];
}

Object Workspace::load(const std::filesystem::path& path) {
  ordered_json j = parse_text(read_file(path));
  Loader loader{this, path.parent_path()};
  std::string kind = detect_kind(j);
  if (kind == "group") return loader.group(j);
  if (kind == "abelian") return loader.abelian(j);
  if (kind == "module") return loader.module(j);
  if (kind == "cochain") return loader.cochain(j);
  if (kind == "grtype") return loader.gr_type(j);
  if (kind == "functor") return loader.functor(j);
  return loader.kernel(j);
}

FiniteGroup Workspace::load_group(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.group(parse_text(read_file(path)));
}
AbelianGroup Workspace::load_abelian(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.abelian(parse_text(read_file(path)));
}
PiModule Workspace::load_module(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.module(parse_text(read_file(path)));
}
Cochain Workspace::load_cochain(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.cochain(parse_text(read_file(path)));
}
GrType Workspace::load_gr_type(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.gr_type(parse_text(read_file(path)));
}
FunctorData Workspace::load_functor(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.functor(parse_text(read_file(path)));
}
AbstractKernel Workspace::load_kernel(const std::filesystem::path& path) {
  Loader loader{this, path.parent_path()};
  return loader.kernel(parse_text(read_file(path)));
}

std::string serialize(const FiniteGroup& g) { return finish(group_json(g)); }
std::string serialize(const AbelianGroup& a) { return finish(abelian_json(a)); }
std::string serialize(const PiModule& m) { return finish(module_json(m)); }
std::string serialize(const Cochain& c) { return finish(cochain_json(c)); }
std::string serialize(const GrType& t) { return finish(gr_type_json(t)); }
std::string serialize(const FunctorData& f) { return finish(functor_json(f)); }
std::string serialize(const AbstractKernel& k) { return finish(kernel_json(k)); }

std::string serialize(const Object& o) {
  return std::visit([](const auto& x) { return serialize(x); }, o);
}

std::string kind_of(const Object& o) {
  struct V {
    std::string operator()(const FiniteGroup&) { return "group"; }
    std::string operator()(const AbelianGroup&) { return "abelian"; }
    std::string operator()(const PiModule&) { return "module"; }
    std::string operator()(const Cochain&) { return "cochain"; }
    std::string operator()(const GrType&) { return "grtype"; }
    std::string operator()(const FunctorData&) { return "functor"; }
    std::string operator()(const AbstractKernel&) { return "kernel"; }
  };
  return std::visit(V{}, o);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::bad_reference, "cannot write " + path.string());
  out << text;
}

}  // namespace grcat::io
