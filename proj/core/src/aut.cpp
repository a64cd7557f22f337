#include "grcat/aut.hpp"

#include <algorithm>
#include <map>

#include "grcat/error.hpp"

namespace grcat {

namespace {

std::vector<std::vector<int>> search_automorphisms(const FiniteGroup& g) {
  std::vector<int> gens = g.generating_set();
  const size_t k = gens.size();
  std::vector<std::vector<int>> found;

  if (g.order() == 1) return {{0}};

  std::vector<std::vector<int>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int ord = g.element_order(gens[i]);
    for (int t = 0; t < g.order(); ++t)
      if (g.element_order(t) == ord) candidates[i].push_back(t);
  }

  std::vector<int> choice(k, 0);
  std::vector<int> images(k);
  std::vector<int> image(g.order());

  auto try_current = [&]() {
    std::fill(image.begin(), image.end(), -1);
    image[g.identity()] = g.identity();
    std::vector<int> frontier = {g.identity()};
    for (size_t head = 0; head < frontier.size(); ++head) {
      int x = frontier[head];
      for (size_t i = 0; i < k; ++i) {
        int y = g.mul(x, gens[i]);
        int img = g.mul(image[x], images[i]);
        if (image[y] < 0) {
          image[y] = img;
          frontier.push_back(y);
        } else if (image[y] != img) {
          return;
        }
      }
    }
    std::vector<char> seen(g.order(), 0);
    for (int v : image)
      if (v < 0 || seen[v]++) return;
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        if (image[g.mul(x, y)] != g.mul(image[x], image[y])) return;
    found.push_back(image);
  };

  while (true) {
    for (size_t i = 0; i < k; ++i) images[i] = candidates[i][choice[i]];
    try_current();
    size_t pos = 0;
    while (pos < k && ++choice[pos] == static_cast<int>(candidates[pos].size())) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return found;
}

}  // namespace

AutData automorphism_data(const FiniteGroup& g, int aut_order_limit) {
  if (g.order() > 64)
    throw Error(errc::group_too_large, "automorphism search is guarded at order 64");

  std::vector<std::vector<int>> maps = search_automorphisms(g);

  // Identity automorphism first, the rest sorted by image vector.
  std::vector<int> id(g.order());
  for (int i = 0; i < g.order(); ++i) id[i] = i;
  std::sort(maps.begin(), maps.end());
  auto it = std::find(maps.begin(), maps.end(), id);
  maps.erase(it);
  maps.insert(maps.begin(), id);

  const int n = static_cast<int>(maps.size());
  if (n > aut_order_limit)
    throw Error(errc::group_too_large,
                "automorphism group has order " + std::to_string(n) + ", table limit is " +
                    std::to_string(aut_order_limit));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[maps[i]] = i;

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> buf(g.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < g.order(); ++x) buf[x] = maps[i][maps[j][x]];
      auto found = index.find(buf);
      if (found == index.end())
        throw Error(errc::bad_argument, "internal: automorphisms not closed under composition");
      table[i][j] = found->second;
    }

  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "aut" + std::to_string(i);

  AutData out;
  out.base = g;
  out.aut = FiniteGroup::from_table(std::move(names), table);
  out.maps = std::move(maps);

  out.mu.resize(g.order());
  for (int c = 0; c < g.order(); ++c) {
    for (int x = 0; x < g.order(); ++x) buf[x] = g.conj(c, x);
    out.mu[c] = index.at(buf);
  }
  std::vector<int> inner = out.mu;
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  out.inner = std::move(inner);

  out.out = quotient_group(out.aut, out.inner, &out.coset_of);
  // quotient_group picks the least element of each coset as representative;
  // that is the section, and the identity coset's least element is the
  // identity automorphism (index 0).
  out.section.assign(out.out.order(), -1);
  for (int a = 0; a < n; ++a)
    if (out.section[out.coset_of[a]] < 0) out.section[out.coset_of[a]] = a;
  if (out.section[out.out.identity()] != 0)
    throw Error(errc::bad_argument, "internal: section does not fix the identity");
  return out;
}

std::vector<std::vector<int>> brute_force_automorphisms(const FiniteGroup& g) {
  if (g.order() > 8)
    throw Error(errc::group_too_large, "brute-force automorphism oracle is limited to order 8");
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::vector<std::vector<int>> found;
  do {
    if (perm[g.identity()] != g.identity()) continue;
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x)
      for (int y = 0; y < g.order() && ok; ++y)
        ok = perm[g.mul(x, y)] == g.mul(perm[x], perm[y]);
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace grcat
