#include "grcat/fingroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace grcat {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(errc::no_identity, "empty table");
  if (static_cast<int>(names.size()) != n)
    throw Error(errc::bad_argument, "names/table size mismatch");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::bad_argument, "table is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw Error(errc::bad_argument, "table entry out of range at " + tuple_str({i, j}));

  // Latin square: every row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]++)
        throw Error(errc::not_latin_square, "repeated value in row " + std::to_string(i) +
                                                " at column " + std::to_string(j));
      if (seen_col[table[j][i]]++)
        throw Error(errc::not_latin_square, "repeated value in column " + std::to_string(i) +
                                                " at row " + std::to_string(j));
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw Error(errc::no_identity, "no two-sided identity element");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw Error(errc::not_associative, "associativity fails at " + tuple_str({i, j, k}));

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.names_ = std::move(names);
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table_[static_cast<size_t>(i) * n + j] = table[i][j];

  g.inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == identity && table[j][i] == identity) {
        g.inv_[i] = j;
        break;
      }
    if (g.inv_[i] < 0)
      throw Error(errc::no_inverse, "no two-sided inverse for element " + std::to_string(i));
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators,
                                           int degree) {
  if (degree <= 0) throw Error(errc::bad_argument, "degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(errc::bad_argument, "permutation length != degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++)
        throw Error(errc::bad_argument, "not a permutation of 0..degree-1");
    }
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  // BFS closure; elements in discovery order, identity first.
  std::vector<std::vector<int>> elems = {id};
  std::map<std::vector<int>, int> index = {{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = gen[elems[head][i]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) elems.push_back(prod);
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
      table[a][b] = index.at(prod);
    }

  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string s = "p";
    for (int i = 0; i < degree; ++i) s += (i ? "," : "(") + std::to_string(elems[a][i]);
    names[a] = s + ")";
  }
  return from_table(std::move(names), table);
}

int FiniteGroup::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<int> frontier = {identity_};
  in[identity_] = 1;
  for (size_t head = 0; head < frontier.size(); ++head)
    for (int g : gens) {
      int x = mul(frontier[head], g);
      if (!in[x]) {
        in[x] = 1;
        frontier.push_back(x);
      }
    }
  std::vector<int> out;
  for (int i = 0; i < order_; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<int> FiniteGroup::generating_set() const {
  std::vector<int> gens;
  std::vector<int> current = {identity_};
  while (static_cast<int>(current.size()) < order_) {
    int best = -1;
    size_t best_size = current.size();
    for (int cand = 0; cand < order_; ++cand) {
      if (std::binary_search(current.begin(), current.end(), cand)) continue;
      auto trial = gens;
      trial.push_back(cand);
      size_t sz = closure(trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = cand;
      }
    }
    gens.push_back(best);
    current = closure(gens);
  }
  return gens;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && identity_ == other.identity_ && table_ == other.table_;
}

std::vector<int> FiniteGroup::order_statistics() const {
  std::vector<int> stats(order_);
  for (int i = 0; i < order_; ++i) stats[i] = element_order(i);
  std::sort(stats.begin(), stats.end());
  return stats;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j) rows[i][j] = mul(i, j);
  return rows;
}

FiniteGroup trivial_group() { return FiniteGroup::from_table({"e"}, {{0}}); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw Error(errc::bad_argument, "cyclic_group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw Error(errc::bad_argument, "dihedral_group parameter must be positive");
  // Elements r^i s^j, encoded i + n*j.
  const int m = 2 * n;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  auto enc = [n](int i, int j) { return ((i % n + n) % n) + n * j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^(i + k*(-1)^j) s^(j+l)
          int rot = j == 0 ? i + k : i - k;
          table[enc(i, j)][enc(k, l)] = enc(rot, (j + l) % 2);
        }
  std::vector<std::string> names(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      names[enc(i, j)] = (j ? "r" + std::to_string(i) + "s" : "r" + std::to_string(i));
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup dicyclic_group(int n) {
  if (n <= 0) throw Error(errc::bad_argument, "dicyclic_group parameter must be positive");
  // Elements a^i b^j with a of order 2n, b^2 = a^n, b a b^-1 = a^-1;
  // encoded i + 2n*j, i mod 2n, j mod 2.
  const int m = 4 * n;
  const int c = 2 * n;
  auto enc = [c](int i, int j) { return ((i % c + c) % c) + c * j; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < c; ++k)
        for (int l = 0; l < 2; ++l) {
          // (a^i b^j)(a^k b^l): b a^k = a^-k b, b^2 = a^n
          int rot = j == 0 ? i + k : i - k;
          int bexp = j + l;
          if (bexp == 2) {
            rot += n;
            bexp = 0;
          }
          table[enc(i, j)][enc(k, l)] = enc(rot, bexp);
        }
  std::vector<std::string> names(m);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < 2; ++j)
      names[enc(i, j)] = (j ? "a" + std::to_string(i) + "b" : "a" + std::to_string(i));
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y) {
      names[enc(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
      for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v)
          table[enc(x, y)][enc(u, v)] = enc(a.mul(x, u), b.mul(y, v));
    }
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != h.order())
    throw Error(errc::bad_argument, "semidirect action must have one automorphism per H element");
  const int m = n.order() * h.order();
  auto enc = [&](int a, int x) { return a * h.order() + x; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < n.order(); ++a)
    for (int x = 0; x < h.order(); ++x) {
      names[enc(a, x)] = "(" + n.name(a) + "," + h.name(x) + ")";
      for (int b = 0; b < n.order(); ++b)
        for (int y = 0; y < h.order(); ++y)
          table[enc(a, x)][enc(b, y)] = enc(n.mul(a, action[x][b]), h.mul(x, y));
    }
  return FiniteGroup::from_table(std::move(names), table);
}

FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_elements,
                           std::vector<int>* coset_of) {
  std::vector<char> in_n(g.order(), 0);
  for (int x : normal_elements) in_n[x] = 1;
  if (!in_n[g.identity()]) throw Error(errc::bad_argument, "subgroup must contain identity");
  for (int x : normal_elements)
    for (int y : normal_elements)
      if (!in_n[g.mul(x, y)]) throw Error(errc::bad_argument, "not closed under multiplication");
  for (int x : normal_elements)
    for (int c = 0; c < g.order(); ++c)
      if (!in_n[g.conj(c, x)]) throw Error(errc::bad_argument, "subgroup is not normal");

  // Coset of each element; coset representative = least element index.
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal_elements) coset[g.mul(x, h)] = id;
  }

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) {
    names[i] = "[" + g.name(reps[i]) + "]";
    for (int j = 0; j < q; ++j) table[i][j] = coset[g.mul(reps[i], reps[j])];
  }
  if (coset_of) *coset_of = coset;
  return FiniteGroup::from_table(std::move(names), table);
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (static_cast<int>(image_.size()) != source_.order())
    throw Error(errc::invalid_pair, "image vector has wrong length");
  for (int v : image_)
    if (v < 0 || v >= target_.order())
      throw Error(errc::invalid_pair, "image index out of range");
  if (image_[source_.identity()] != target_.identity())
    throw Error(errc::invalid_pair, "identity is not mapped to identity");
  for (int i = 0; i < source_.order(); ++i)
    for (int j = 0; j < source_.order(); ++j)
      if (image_[source_.mul(i, j)] != target_.mul(image_[i], image_[j]))
        throw Error(errc::invalid_pair,
                    "not a homomorphism at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<int> image(g.order());
  std::iota(image.begin(), image.end(), 0);
  return GroupHom(g, g, std::move(image));
}

GroupHom GroupHom::trivial(const FiniteGroup& source, const FiniteGroup& target) {
  return GroupHom(source, target, std::vector<int>(source.order(), target.identity()));
}

GroupHom GroupHom::from_generator_images(const FiniteGroup& source, const FiniteGroup& target,
                                         const std::vector<int>& gens,
                                         const std::vector<int>& images) {
  if (gens.size() != images.size()) throw Error(errc::bad_argument, "gens/images size mismatch");
  std::vector<int> image(source.order(), -1);
  image[source.identity()] = target.identity();
  std::vector<int> frontier = {source.identity()};
  for (size_t head = 0; head < frontier.size(); ++head) {
    int x = frontier[head];
    for (size_t k = 0; k < gens.size(); ++k) {
      int y = source.mul(x, gens[k]);
      int img = target.mul(image[x], images[k]);
      if (image[y] < 0) {
        image[y] = img;
        frontier.push_back(y);
      } else if (image[y] != img) {
        throw Error(errc::invalid_pair, "generator images are inconsistent");
      }
    }
  }
  for (int v : image)
    if (v < 0) throw Error(errc::bad_argument, "gens do not generate the source group");
  return GroupHom(source, target, std::move(image));  // full validation happens here
}

bool GroupHom::is_bijective() const {
  if (source_.order() != target_.order()) return false;
  std::vector<char> seen(target_.order(), 0);
  for (int v : image_)
    if (seen[v]++) return false;
  return true;
}

namespace {

// Shared backtracking core: enumerate maps a -> b determined by generator
// images, invoking sink on each full homomorphic image vector. When
// `bijective_only`, images must be bijections. Sink returns true to stop.
template <typename Sink>
void enumerate_homs(const FiniteGroup& a, const FiniteGroup& b, bool bijective_only, Sink&& sink) {
  std::vector<int> gens = a.generating_set();
  const size_t k = gens.size();

  if (a.order() == 1) {
    if (!bijective_only || b.order() == 1) sink(std::vector<int>{b.identity()});
    return;
  }

  // Precompute, for each generator, the candidate target elements.
  std::vector<std::vector<int>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int ord = a.element_order(gens[i]);
    for (int t = 0; t < b.order(); ++t) {
      int to = b.element_order(t);
      bool ok = bijective_only ? (to == ord) : (ord % to == 0);
      if (ok) candidates[i].push_back(t);
    }
    if (candidates[i].empty()) return;
  }

  std::vector<int> choice(k, 0);
  std::vector<int> images(k);
  std::vector<int> image(a.order());

  auto try_current = [&]() -> bool {
    // Extend multiplicatively over a BFS spanning tree, then verify fully.
    std::fill(image.begin(), image.end(), -1);
    image[a.identity()] = b.identity();
    std::vector<int> frontier = {a.identity()};
    for (size_t head = 0; head < frontier.size(); ++head) {
      int x = frontier[head];
      for (size_t i = 0; i < k; ++i) {
        int y = a.mul(x, gens[i]);
        int img = b.mul(image[x], images[i]);
        if (image[y] < 0) {
          image[y] = img;
          frontier.push_back(y);
        } else if (image[y] != img) {
          return false;
        }
      }
    }
    if (bijective_only) {
      std::vector<char> seen(b.order(), 0);
      for (int v : image)
        if (v < 0 || seen[v]++) return false;
    }
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (image[a.mul(x, y)] != b.mul(image[x], image[y])) return false;
    return sink(image);
  };

  // Odometer over candidate tuples.
  while (true) {
    for (size_t i = 0; i < k; ++i) images[i] = candidates[i][choice[i]];
    if (try_current()) return;
    size_t pos = 0;
    while (pos < k && ++choice[pos] == static_cast<int>(candidates[pos].size())) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order_statistics() != b.order_statistics()) return std::nullopt;
  std::optional<std::vector<int>> found;
  enumerate_homs(a, b, true, [&](const std::vector<int>& image) {
    found = image;
    return true;
  });
  return found;
}

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::vector<int>> out;
  enumerate_homs(a, b, false, [&](const std::vector<int>& image) {
    out.push_back(image);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_associative: return "NotAssociative";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_an_action: return "NotAnAction";
    case errc::not_additive: return "NotAdditive";
    case errc::source_mismatch: return "SourceMismatch";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::not_a_cocycle: return "NotACocycle";
    case errc::brute_force_too_large: return "BruteForceTooLarge";
    case errc::invalid_pair: return "InvalidPair";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::centrality_violation: return "CentralityViolation";
    case errc::obstruction_nonzero: return "ObstructionNonzero";
    case errc::not_a_groupoid: return "NotAGroupoid";
    case errc::unit_endos_not_abelian: return "UnitEndomorphismsNotAbelian";
    case errc::non_invertible_object: return "NonInvertibleObject";
    case errc::parse_error: return "ParseError";
    case errc::bad_reference: return "BadReference";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace grcat
