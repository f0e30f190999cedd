#include "bifix/monoid.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_map>

namespace bifix {

Transformation identity_transformation(int n) {
  Transformation t(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) t[static_cast<size_t>(q)] = static_cast<int16_t>(q);
  return t;
}

Transformation letter_transformation(const Dfa& d, int letter_index) {
  Transformation t(static_cast<size_t>(d.size()));
  for (int q = 0; q < d.size(); ++q) {
    int r = d.step_index(q, letter_index);
    t[static_cast<size_t>(q)] = r == Dfa::NO_STATE ? UNDEF : static_cast<int16_t>(r);
  }
  return t;
}

Transformation compose(const Transformation& t, const Transformation& u) {
  Transformation r(t.size());
  for (size_t q = 0; q < t.size(); ++q)
    r[q] = t[q] == UNDEF ? UNDEF : u[static_cast<size_t>(t[q])];
  return r;
}

int rank(const Transformation& t) { return static_cast<int>(image_of(t).size()); }

std::vector<int> image_of(const Transformation& t) {
  std::vector<int> img;
  for (int16_t x : t)
    if (x != UNDEF) img.push_back(x);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

bool is_idempotent(const Transformation& t) { return compose(t, t) == t; }

Transformation omega_power(const Transformation& t) {
  // power iteration; tail + cycle in the finite cyclic semigroup of t
  std::map<Transformation, int> seen;
  std::vector<Transformation> powers;
  Transformation cur = t;
  while (!seen.count(cur)) {
    seen.emplace(cur, static_cast<int>(powers.size()));
    powers.push_back(cur);
    cur = compose(cur, t);
  }
  int tail = seen[cur];                              // cur == t^(tail+1), index of repeat
  int cycle = static_cast<int>(powers.size()) - tail;
  // least multiple of the cycle length with exponent >= tail+1
  int k = cycle;
  while (k < tail + 1) k += cycle;
  // powers[i] == t^(i+1); want exponent k
  Transformation result = powers[static_cast<size_t>(k - 1)];
  if (!is_idempotent(result)) throw std::logic_error("omega power not idempotent");
  return result;
}

namespace {

// FNV-1a over the raw int16 entries
struct SliceHash {
  size_t operator()(const int16_t* p, int n) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < n; ++i) {
      h ^= static_cast<uint16_t>(p[i]);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

TransitionMonoid::TransitionMonoid(const Dfa& d, std::size_t cap)
    : dfa_(d), n_(d.size()), num_letters_(d.alphabet().size()) {
  // open-addressing table of element ids keyed by transformation content
  size_t table_size = 1024;
  std::vector<int32_t> table(table_size, -1);
  SliceHash hasher;

  auto rehash = [&]() {
    table_size *= 4;
    table.assign(table_size, -1);
    for (size_t id = 0; id < num_elements_; ++id) {
      size_t h = hasher(data_.data() + id * n_, n_) & (table_size - 1);
      while (table[h] != -1) h = (h + 1) & (table_size - 1);
      table[h] = static_cast<int32_t>(id);
    }
  };

  // candidate transformation sits in scratch; returns existing id or -1
  auto lookup = [&](const int16_t* t) -> int {
    size_t h = hasher(t, n_) & (table_size - 1);
    while (table[h] != -1) {
      if (std::memcmp(data_.data() + static_cast<size_t>(table[h]) * n_, t,
                      static_cast<size_t>(n_) * sizeof(int16_t)) == 0)
        return table[h];
      h = (h + 1) & (table_size - 1);
    }
    return -1;
  };
  auto insert = [&](const int16_t* t, int parent, int letter) -> int {
    if (num_elements_ >= cap) throw MonoidCapExceeded(cap);
    data_.insert(data_.end(), t, t + n_);
    parent_.push_back(parent);
    parent_letter_.push_back(static_cast<int16_t>(letter));
    int id = static_cast<int>(num_elements_++);
    if (num_elements_ * 2 > table_size) rehash();
    size_t h = hasher(t, n_) & (table_size - 1);
    while (table[h] != -1) h = (h + 1) & (table_size - 1);
    table[h] = id;
    return id;
  };

  Transformation ident = identity_transformation(n_);
  insert(ident.data(), -1, -1);

  std::vector<Transformation> letter_ts;
  gens_.resize(static_cast<size_t>(num_letters_));
  for (int a = 0; a < num_letters_; ++a) {
    letter_ts.push_back(letter_transformation(dfa_, a));
    int id = lookup(letter_ts.back().data());
    if (id < 0) id = insert(letter_ts.back().data(), 0, a);
    gens_[static_cast<size_t>(a)] = id;
  }

  // BFS closure; discovery order equals shortlex order of witnesses
  Transformation scratch(static_cast<size_t>(n_));
  for (size_t cur = 0; cur < num_elements_; ++cur) {
    for (int a = 0; a < num_letters_; ++a) {
      const int16_t* t = data_.data() + cur * n_;
      const Transformation& g = letter_ts[static_cast<size_t>(a)];
      for (int q = 0; q < n_; ++q)
        scratch[static_cast<size_t>(q)] =
            t[q] == UNDEF ? UNDEF : g[static_cast<size_t>(t[q])];
      int id = lookup(scratch.data());
      if (id < 0) id = insert(scratch.data(), static_cast<int>(cur), a);
      rcay_.push_back(id);
    }
  }

  // left Cayley in a second pass
  lcay_.resize(num_elements_ * static_cast<size_t>(num_letters_));
  for (size_t cur = 0; cur < num_elements_; ++cur) {
    const int16_t* t = data_.data() + cur * n_;
    for (int a = 0; a < num_letters_; ++a) {
      const Transformation& g = letter_ts[static_cast<size_t>(a)];
      for (int q = 0; q < n_; ++q) {
        int16_t x = g[static_cast<size_t>(q)];
        scratch[static_cast<size_t>(q)] = x == UNDEF ? UNDEF : t[x];
      }
      int id = lookup(scratch.data());
      if (id < 0) throw std::logic_error("monoid not closed under left composition");
      lcay_[cur * num_letters_ + static_cast<size_t>(a)] = id;
    }
  }
}

Transformation TransitionMonoid::element(int id) const {
  return Transformation(raw(id), raw(id) + n_);
}

int TransitionMonoid::rank_of(int id) const {
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  int r = 0;
  const int16_t* t = raw(id);
  for (int q = 0; q < n_; ++q)
    if (t[q] != UNDEF && !seen[static_cast<size_t>(t[q])]) {
      seen[static_cast<size_t>(t[q])] = true;
      ++r;
    }
  return r;
}

bool TransitionMonoid::idempotent(int id) const {
  const int16_t* t = raw(id);
  for (int q = 0; q < n_; ++q) {
    int16_t x = t[q];
    if ((x == UNDEF ? UNDEF : t[x]) != x) return false;
  }
  return true;
}

int TransitionMonoid::compose_ids(int s, int t) const {
  const int16_t* ts = raw(s);
  const int16_t* tt = raw(t);
  Transformation r(static_cast<size_t>(n_));
  for (int q = 0; q < n_; ++q) r[static_cast<size_t>(q)] = ts[q] == UNDEF ? UNDEF : tt[ts[q]];
  auto id = find(r);
  if (!id) throw std::logic_error("monoid not closed");
  return *id;
}

Word TransitionMonoid::witness(int id) const {
  Word w;
  while (id != 0) {
    w.push_back(dfa_.alphabet().letter(parent_letter_[static_cast<size_t>(id)]));
    id = parent_[static_cast<size_t>(id)];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<int> TransitionMonoid::find(const Transformation& t) const {
  if (static_cast<int>(t.size()) != n_) return std::nullopt;
  SliceHash hasher;
  if (find_index_.empty()) {
    find_index_.reserve(num_elements_ * 2);
    for (size_t id = 0; id < num_elements_; ++id)
      find_index_[hasher(raw(static_cast<int>(id)), n_)].push_back(static_cast<int>(id));
  }
  auto it = find_index_.find(hasher(t.data(), n_));
  if (it == find_index_.end()) return std::nullopt;
  for (int id : it->second)
    if (std::memcmp(raw(id), t.data(), static_cast<size_t>(n_) * sizeof(int16_t)) == 0) return id;
  return std::nullopt;
}

int TransitionMonoid::eta(const Word& w) const {
  int cur = 0;
  for (char c : w) cur = right_step(cur, dfa_.alphabet().index(c));
  return cur;
}

int TransitionMonoid::omega_power_id(int id) const {
  std::unordered_map<int, int> seen;
  std::vector<int> powers;
  int cur = id;
  while (!seen.count(cur)) {
    seen.emplace(cur, static_cast<int>(powers.size()));
    powers.push_back(cur);
    cur = compose_ids(cur, id);
  }
  int tail = seen[cur];
  int cycle = static_cast<int>(powers.size()) - tail;
  int k = cycle;
  while (k < tail + 1) k += cycle;
  return powers[static_cast<size_t>(k - 1)];
}

void TransitionMonoid::ensure_context_bitsets() const {
  if (context_ready_) return;
  constexpr std::size_t kSyntacticCap = 5000;
  if (num_elements_ > kSyntacticCap)
    throw std::runtime_error("syntactic order test capped at " + std::to_string(kSyntacticCap) +
                             " elements");
  size_t words = (num_elements_ + 63) / 64;
  accept_bits_.assign(static_cast<size_t>(n_) * words, 0);
  for (size_t t = 0; t < num_elements_; ++t) {
    const int16_t* tr = raw(static_cast<int>(t));
    for (int p = 0; p < n_; ++p)
      if (tr[p] != UNDEF && dfa_.is_final(tr[p]))
        accept_bits_[static_cast<size_t>(p) * words + t / 64] |= (1ull << (t % 64));
  }
  state_subset_.assign(static_cast<size_t>(n_) * n_, 0);
  state_has_accepting_.assign(static_cast<size_t>(n_), 0);
  for (int p = 0; p < n_; ++p) {
    for (size_t wdx = 0; wdx < words; ++wdx)
      if (accept_bits_[static_cast<size_t>(p) * words + wdx]) {
        state_has_accepting_[static_cast<size_t>(p)] = 1;
        break;
      }
    for (int q = 0; q < n_; ++q) {
      bool sub = true;
      for (size_t wdx = 0; wdx < words && sub; ++wdx) {
        uint64_t bp = accept_bits_[static_cast<size_t>(p) * words + wdx];
        uint64_t bq = accept_bits_[static_cast<size_t>(q) * words + wdx];
        if ((bp & ~bq) != 0) sub = false;
      }
      state_subset_[static_cast<size_t>(p) * n_ + q] = sub ? 1 : 0;
    }
  }
  context_ready_ = true;
}

bool TransitionMonoid::syntactic_leq(int m1, int m2) const {
  ensure_context_bitsets();
  const int16_t* t1 = raw(m1);
  const int16_t* t2 = raw(m2);
  int i = dfa_.initial();
  for (size_t s = 0; s < num_elements_; ++s) {
    int16_t si = raw(static_cast<int>(s))[i];
    int p1 = si == UNDEF ? -1 : t1[si];
    if (p1 < 0) continue;  // s*m1 kills the initial state: nothing to demand
    if (!state_has_accepting_[static_cast<size_t>(p1)]) continue;  // no context accepts via m1
    int p2 = si == UNDEF ? -1 : t2[si];
    if (p2 < 0) return false;
    if (!state_subset_[static_cast<size_t>(p1) * n_ + p2]) return false;
  }
  return true;
}

}  // namespace bifix
