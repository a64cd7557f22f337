#include "grcat/strict_cat.hpp"

#include <sstream>

#include "grcat/error.hpp"

namespace grcat {

std::vector<int> StrictGrCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < n_arr(); ++f)
    if (arrows[f].src == x && arrows[f].dst == y) out.push_back(f);
  return out;
}

int StrictGrCat::arrow_inverse(int f) const {
  for (int g : hom(arrows[f].dst, arrows[f].src))
    if (compose(f, g) == id_arrow[arrows[f].src] && compose(g, f) == id_arrow[arrows[f].dst])
      return g;
  throw Error(errc::not_a_groupoid, "arrow " + arrows[f].name + " has no inverse");
}

void StrictGrCat::validate() const {
  const int no = n_obj();
  const int na = n_arr();
  if (no == 0) throw Error(errc::bad_argument, "category has no objects");
  if (static_cast<int>(id_arrow.size()) != no ||
      obj_tensor.size() != static_cast<size_t>(no) * no ||
      arr_tensor.size() != static_cast<size_t>(na) * na ||
      compose_tab.size() != static_cast<size_t>(na) * na)
    throw Error(errc::bad_argument, "table sizes are inconsistent");

  // Identities and composition typing.
  for (int x = 0; x < no; ++x) {
    int e = id_arrow[x];
    if (arrows[e].src != x || arrows[e].dst != x)
      throw Error(errc::bad_argument, "identity arrow of " + objects[x] + " is not an endo");
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      int c = compose(f, g);
      bool composable = arrows[f].dst == arrows[g].src;
      if (composable != (c >= 0))
        throw Error(errc::bad_argument, "composition table does not match arrow typing");
      if (c >= 0 && (arrows[c].src != arrows[f].src || arrows[c].dst != arrows[g].dst))
        throw Error(errc::bad_argument, "composite has wrong endpoints");
    }
  for (int f = 0; f < na; ++f) {
    if (compose(id_arrow[arrows[f].src], f) != f || compose(f, id_arrow[arrows[f].dst]) != f)
      throw Error(errc::bad_argument, "identity laws fail at " + arrows[f].name);
  }
  // Associativity of composition.
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      if (compose(f, g) < 0) continue;
      for (int h = 0; h < na; ++h) {
        if (compose(g, h) < 0) continue;
        if (compose(compose(f, g), h) != compose(f, compose(g, h)))
          throw Error(errc::bad_argument, "composition is not associative");
      }
    }
  // Groupoid: every arrow invertible.
  for (int f = 0; f < na; ++f) arrow_inverse(f);

  // Strict tensor on objects.
  for (int x = 0; x < no; ++x) {
    if (tensor_obj(unit, x) != x || tensor_obj(x, unit) != x)
      throw Error(errc::bad_argument, "tensor unit law fails on object " + objects[x]);
    for (int y = 0; y < no; ++y)
      for (int z = 0; z < no; ++z)
        if (tensor_obj(tensor_obj(x, y), z) != tensor_obj(x, tensor_obj(y, z)))
          throw Error(errc::bad_argument, "object tensor is not associative");
  }
  // Invertible objects.
  for (int x = 0; x < no; ++x) {
    bool has = false;
    for (int y = 0; y < no && !has; ++y) has = tensor_obj(x, y) == unit;
    if (!has)
      throw Error(errc::non_invertible_object, "object " + objects[x] + " has no tensor inverse");
  }

  // Tensor on arrows: typing, units, associativity, functoriality.
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g) {
      int t = tensor_arr(f, g);
      if (t < 0 || t >= na) throw Error(errc::bad_argument, "arrow tensor out of range");
      if (arrows[t].src != tensor_obj(arrows[f].src, arrows[g].src) ||
          arrows[t].dst != tensor_obj(arrows[f].dst, arrows[g].dst))
        throw Error(errc::bad_argument, "arrow tensor has wrong endpoints");
    }
  for (int f = 0; f < na; ++f) {
    if (tensor_arr(id_arrow[unit], f) != f || tensor_arr(f, id_arrow[unit]) != f)
      throw Error(errc::bad_argument, "arrow tensor unit law fails at " + arrows[f].name);
  }
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y)
      if (tensor_arr(id_arrow[x], id_arrow[y]) != id_arrow[tensor_obj(x, y)])
        throw Error(errc::bad_argument, "tensor of identities is not an identity");
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g)
      for (int h = 0; h < na; ++h)
        if (tensor_arr(tensor_arr(f, g), h) != tensor_arr(f, tensor_arr(g, h)))
          throw Error(errc::bad_argument, "arrow tensor is not associative");
  // Functoriality: (f then f') tensor (g then g') = (f tensor g) then (f' tensor g').
  struct Pair {
    int a, b, c;
  };
  std::vector<Pair> composable;
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g)
      if (int c = compose(f, g); c >= 0) composable.push_back({f, g, c});
  for (const Pair& p : composable)
    for (const Pair& q : composable)
      if (tensor_arr(p.c, q.c) != compose(tensor_arr(p.a, q.a), tensor_arr(p.b, q.b)))
        throw Error(errc::bad_argument, "tensor is not functorial");
}

std::string StrictGrCat::dump() const {
  std::ostringstream os;
  os << "objects (" << n_obj() << "), unit = " << objects[unit] << "\n";
  for (int x = 0; x < n_obj(); ++x) os << "  [" << x << "] " << objects[x] << "\n";
  os << "object tensor:\n";
  for (int x = 0; x < n_obj(); ++x) {
    os << " ";
    for (int y = 0; y < n_obj(); ++y) os << " " << tensor_obj(x, y);
    os << "\n";
  }
  os << "hom sets:\n";
  for (int x = 0; x < n_obj(); ++x)
    for (int y = 0; y < n_obj(); ++y) {
      auto h = hom(x, y);
      if (h.empty()) continue;
      os << "  Hom(" << objects[x] << ", " << objects[y] << ") = {";
      for (size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << arrows[h[i]].name;
      os << "}\n";
    }
  os << "arrows (" << n_arr() << ")\n";
  return os.str();
}

}  // namespace grcat
