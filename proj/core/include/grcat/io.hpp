#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "grcat/functor.hpp"
#include "grcat/gr_type.hpp"
#include "grcat/kernel.hpp"

namespace grcat::io {

using Object = std::variant<FiniteGroup, AbelianGroup, PiModule, Cochain, GrType, FunctorData,
                            AbstractKernel>;

/// Loads object files (JSON). Any nested object position accepts either an
/// inline object or {"$ref": "relative/path.json"}; references are resolved
/// relative to the referring file and cached. Loading validates everything
/// and throws grcat::Error (errc::parse_error, errc::bad_reference, or the
/// violated invariant) on bad input.
class Workspace {
 public:
  Object load(const std::filesystem::path& path);

  FiniteGroup load_group(const std::filesystem::path& path);
  AbelianGroup load_abelian(const std::filesystem::path& path);
  PiModule load_module(const std::filesystem::path& path);
  Cochain load_cochain(const std::filesystem::path& path);
  GrType load_gr_type(const std::filesystem::path& path);
  FunctorData load_functor(const std::filesystem::path& path);
  AbstractKernel load_kernel(const std::filesystem::path& path);

  /// Raw text of a file, cached by canonical path.
  std::string read_file(const std::filesystem::path& path);

 private:
  std::map<std::string, std::string> cache_;
};

/// Canonical serialization: fixed key order, two-space indent, sorted cochain
/// tuples with zero values omitted, nested objects inlined, trailing newline.
/// serialize(parse(serialize(x))) is byte-identical to serialize(x).
std::string serialize(const FiniteGroup& g);
std::string serialize(const AbelianGroup& a);
std::string serialize(const PiModule& m);
std::string serialize(const Cochain& c);
std::string serialize(const GrType& t);
std::string serialize(const FunctorData& f);
std::string serialize(const AbstractKernel& k);
std::string serialize(const Object& o);

/// Kind detected from the key set ("group", "abelian", "module", "cochain",
/// "grtype", "functor", "kernel").
std::string kind_of(const Object& o);

void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace grcat::io
