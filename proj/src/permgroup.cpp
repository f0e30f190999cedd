#include "bifix/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bifix {

PermutationGroupOnSet::PermutationGroupOnSet(std::vector<int> domain,
                                             std::vector<std::pair<Word, Perm>> generators)
    : domain_(std::move(domain)), generators_(std::move(generators)) {
  int d = degree();
  for (const auto& [label, p] : generators_) {
    if (static_cast<int>(p.size()) != d) throw std::invalid_argument("generator size mismatch");
    std::vector<bool> seen(static_cast<size_t>(d), false);
    for (int x : p) {
      if (x < 0 || x >= d || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("generator is not a bijection of the domain");
      seen[static_cast<size_t>(x)] = true;
    }
  }
  // BFS closure
  Perm ident(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) ident[static_cast<size_t>(i)] = i;
  std::set<Perm> seen{ident};
  elements_.push_back(ident);
  for (size_t i = 0; i < elements_.size(); ++i) {
    Perm cur = elements_[i];
    for (const auto& [label, g] : generators_) {
      Perm nxt = compose_perm(cur, g);
      if (seen.insert(nxt).second) elements_.push_back(std::move(nxt));
    }
    if (elements_.size() > 1000000) throw std::runtime_error("permutation closure too large");
  }
}

PermutationGroupOnSet::Perm PermutationGroupOnSet::compose_perm(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<size_t>(p[i])];
  return r;
}

PermutationGroupOnSet::Perm PermutationGroupOnSet::inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

bool PermutationGroupOnSet::contains(const Perm& p) const {
  return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

bool PermutationGroupOnSet::transitive() const {
  if (domain_.empty()) return true;
  std::vector<bool> orbit(domain_.size(), false);
  orbit[0] = true;
  std::vector<int> todo{0};
  size_t count = 1;
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (const auto& [label, g] : generators_) {
      int y = g[static_cast<size_t>(x)];
      if (!orbit[static_cast<size_t>(y)]) {
        orbit[static_cast<size_t>(y)] = true;
        ++count;
        todo.push_back(y);
      }
    }
  }
  return count == domain_.size();
}

bool PermutationGroupOnSet::abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (compose_perm(generators_[i].second, generators_[j].second) !=
          compose_perm(generators_[j].second, generators_[i].second))
        return false;
  return true;
}

int PermutationGroupOnSet::perm_order(const Perm& p) {
  // lcm of cycle lengths
  std::vector<bool> seen(p.size(), false);
  long long ord = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t x = i;
    while (!seen[x]) {
      seen[x] = true;
      x = static_cast<size_t>(p[x]);
      ++len;
    }
    long long g = std::gcd(ord, static_cast<long long>(len));
    ord = ord / g * len;
  }
  return static_cast<int>(ord);
}

std::vector<std::pair<int, int>> PermutationGroupOnSet::element_order_histogram() const {
  std::map<int, int> hist;
  for (const Perm& p : elements_) ++hist[perm_order(p)];
  return std::vector<std::pair<int, int>>(hist.begin(), hist.end());
}

namespace {

using Perm = PermutationGroupOnSet::Perm;

std::size_t closure_size(const std::vector<Perm>& gens, int degree) {
  Perm ident(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) ident[static_cast<size_t>(i)] = i;
  std::set<Perm> seen{ident};
  std::vector<Perm> queue{ident};
  while (!queue.empty()) {
    Perm cur = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm nxt = PermutationGroupOnSet::compose_perm(cur, g);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return seen.size();
}

// Greedy small generating subset (keeps the search space tiny even when the
// caller hands over a whole H-class as generators).
std::vector<std::pair<Word, Perm>> reduced_generators(const PermutationGroupOnSet& g) {
  std::vector<std::pair<Word, Perm>> out;
  std::vector<Perm> picked;
  std::size_t cur = 1;
  for (const auto& [w, p] : g.generators()) {
    picked.push_back(p);
    std::size_t next = closure_size(picked, g.degree());
    if (next > cur) {
      out.emplace_back(w, p);
      cur = next;
      if (cur == g.order()) break;
    } else {
      picked.pop_back();
    }
  }
  return out;
}

// Extends the candidate generator images to a full map by closure, checking
// multiplicativity and injectivity; success means isomorphism.
bool extends_to_isomorphism(const PermutationGroupOnSet& g1,
                            const std::vector<std::pair<Word, Perm>>& gens1,
                            const PermutationGroupOnSet& g2, const std::vector<Perm>& images) {
  std::map<Perm, Perm> f;
  Perm id1(static_cast<size_t>(g1.degree()));
  for (int i = 0; i < g1.degree(); ++i) id1[static_cast<size_t>(i)] = i;
  Perm id2(static_cast<size_t>(g2.degree()));
  for (int i = 0; i < g2.degree(); ++i) id2[static_cast<size_t>(i)] = i;
  f[id1] = id2;
  std::vector<Perm> queue{id1};
  while (!queue.empty()) {
    Perm x = queue.back();
    queue.pop_back();
    Perm fx = f.at(x);
    for (size_t gi = 0; gi < gens1.size(); ++gi) {
      Perm xg = PermutationGroupOnSet::compose_perm(x, gens1[gi].second);
      Perm fxg = PermutationGroupOnSet::compose_perm(fx, images[gi]);
      auto it = f.find(xg);
      if (it == f.end()) {
        f.emplace(xg, fxg);
        queue.push_back(xg);
      } else if (it->second != fxg) {
        return false;  // not well-defined
      }
    }
  }
  if (f.size() != g1.order()) return false;
  std::set<Perm> image_set;
  for (const auto& [k, v] : f) image_set.insert(v);
  return image_set.size() == g2.order();
}

bool search(const PermutationGroupOnSet& g1, const std::vector<std::pair<Word, Perm>>& gens1,
            const PermutationGroupOnSet& g2, size_t gi, std::vector<Perm>& images) {
  if (gi == gens1.size()) return extends_to_isomorphism(g1, gens1, g2, images);
  int want = PermutationGroupOnSet::perm_order(gens1[gi].second);
  for (const Perm& cand : g2.elements()) {
    if (PermutationGroupOnSet::perm_order(cand) != want) continue;
    images.push_back(cand);
    if (search(g1, gens1, g2, gi + 1, images)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<Word, Word>>> group_iso(const PermutationGroupOnSet& g1,
                                                            const PermutationGroupOnSet& g2,
                                                            std::size_t cap) {
  if (g1.order() > cap || g2.order() > cap)
    throw std::runtime_error("group order exceeds isomorphism search cap");
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.abelian() != g2.abelian()) return std::nullopt;
  if (g1.element_order_histogram() != g2.element_order_histogram()) return std::nullopt;

  std::vector<std::pair<Word, Perm>> gens1 = reduced_generators(g1);
  std::vector<Perm> images;
  if (!search(g1, gens1, g2, 0, images)) return std::nullopt;

  std::vector<std::pair<Word, Word>> out;
  for (size_t gi = 0; gi < gens1.size(); ++gi) {
    // label the image by a matching g2 generator word when one exists
    Word lbl = "<element>";
    for (const auto& [w, p] : g2.generators())
      if (p == images[gi]) {
        lbl = w;
        break;
      }
    out.emplace_back(gens1[gi].first, lbl);
  }
  return out;
}

}  // namespace bifix
