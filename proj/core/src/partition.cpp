#include "sj/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

#include "sj/errors.hpp"

namespace sj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParseError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view s) {
  if (s.empty() || s == "-") return Partition();
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(s)};
  while (std::getline(in, token, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("invalid partition: '" + std::string(s) + "'");
    }
    if (pos != token.size()) throw ParseError("invalid partition: '" + std::string(s) + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  if (empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::conjugate() const {
  if (empty()) return Partition();
  std::vector<int> out(parts_[0], 0);
  for (int j = 1; j <= parts_[0]; ++j)
    out[j - 1] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                [j](int part) { return part >= j; }));
  return Partition(std::move(out));
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Box> Partition::addable_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length() + 1; ++i)
    if (part(i) < part(i - 1) || i == 1) out.push_back({i, part(i) + 1});
  return out;
}

std::vector<Box> Partition::removable_boxes() const {
  std::vector<Box> out;
  for (int i = 1; i <= length(); ++i)
    if (part(i) > part(i + 1)) out.push_back({i, part(i)});
  return out;
}

Partition Partition::with_box(const Box& b) const {
  std::vector<int> parts = parts_;
  if (b.row == length() + 1) parts.push_back(1);
  else parts[b.row - 1] += 1;
  return Partition(std::move(parts));
}

Partition Partition::without_box(const Box& b) const {
  std::vector<int> parts = parts_;
  parts[b.row - 1] -= 1;
  if (parts[b.row - 1] == 0) parts.erase(parts.begin() + (b.row - 1));
  return Partition(std::move(parts));
}

std::optional<BoxChange> box_change(const Partition& lambda, const Partition& mu) {
  if (std::abs(lambda.size() - mu.size()) != 1) return std::nullopt;
  bool add = mu.size() > lambda.size();
  const Partition& big = add ? mu : lambda;
  const Partition& small = add ? lambda : mu;
  int row = 0;
  for (int i = 1; i <= big.length(); ++i) {
    if (big.part(i) == small.part(i)) continue;
    if (big.part(i) != small.part(i) + 1 || row != 0) return std::nullopt;
    row = i;
  }
  if (row == 0) return std::nullopt;
  return BoxChange{add, Box{row, big.part(row)}};
}

bool in_hook(const Partition& p, int m, int n) { return p.part(m + 1) <= n; }

std::vector<Partition> add_candidates(const Partition& p) {
  std::vector<Partition> out;
  for (const Box& b : p.addable_boxes()) out.push_back(p.with_box(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> remove_candidates(const Partition& p) {
  std::vector<Partition> out;
  for (const Box& b : p.removable_boxes()) out.push_back(p.without_box(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<Partition>, std::vector<Partition>> add_remove_sets(const Partition& p,
                                                                          int m, int n) {
  std::vector<Partition> add, rem;
  for (Partition q : add_candidates(p))
    if (in_hook(q, m, n)) add.push_back(std::move(q));
  // Removing a box never leaves the hook.
  rem = remove_candidates(p);
  return {std::move(add), std::move(rem)};
}

std::vector<Partition> hook_partitions(int n, int max_size, int m) {
  std::vector<Partition> out;
  std::vector<int> parts;
  // Depth-first enumeration of weakly decreasing sequences within the hook.
  auto rec = [&](auto&& self, int max_part, int remaining) -> void {
    out.push_back(Partition(parts));
    int cap = std::min(max_part, remaining);
    if (static_cast<int>(parts.size()) >= m) cap = std::min(cap, n);
    for (int next = cap; next >= 1; --next) {
      parts.push_back(next);
      self(self, next, remaining - next);
      parts.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

AffineForm eigenvalue(const Partition& p, const ParamCtx& ctx) {
  // 2n(λ') + 2k n(λ) + |λ|(2h + 2k + 1)
  AffineForm h = ctx.h();
  Rational np(n_stat(p)), npc(n_stat(p.conjugate())), sz(p.size());
  AffineForm out(Rational(0), Rational(0), 2 * npc);
  out.a += 2 * np;
  AffineForm bracket(2 * h.a + 2, 2 * h.b, 2 * h.c + 1);
  return out + bracket * sz;
}

AffineForm eigenvalue_boxsum(const Partition& p, int n) {
  AffineForm out;
  for (const Box& b : p.boxes()) {
    out.a += 2 * (b.row - 1);
    out.b += -1;
    out.c += 2 * (b.col - 1) + 1 - 2 * n;
  }
  return out;
}

long tilde_c(const Partition& p, int n) {
  long out = 0;
  for (const Box& b : p.boxes()) out += 2L * b.col - 2L * b.row + 1 - 2L * n;
  return out;
}

int s_stat(const Partition& p) {
  int out = 0;
  for (int i = 2; i <= p.length(); ++i) out += p.part(i);
  return out;
}

long n_stat(const Partition& p) {
  long out = 0;
  for (int i = 2; i <= p.length(); ++i) out += static_cast<long>(i - 1) * p.part(i);
  return out;
}

DiagramClass classify(const Partition& p, int n) {
  DiagramClass out;
  Partition conj = p.conjugate();
  for (int j = 1; j <= n; ++j)
    if (p.part(1) - n == conj.part(j) + n - j) out.witnesses.push_back(j);
  if (!out.witnesses.empty()) {
    out.singular = true;
    out.j = out.witnesses.front();
    // λ'_j + n - j is strictly decreasing in j, so a second witness signals
    // a broken invariant rather than an interesting diagram.
    if (out.witnesses.size() > 1)
      throw std::logic_error("classify: multiple singular witnesses for " + p.str());
  }
  return out;
}

int r_of(const Partition& p, int n) {
  DiagramClass c = classify(p, n);
  if (!c.singular) throw NotSingular("r_of: " + p.str() + " is regular for n=" + std::to_string(n));
  Partition conj = p.conjugate();
  int count = 0;
  for (int r = c.j; r <= n; ++r)
    if (conj.part(r) == conj.part(c.j)) ++count;
  return count;
}

Partition sharp(const Partition& p, int n) {
  DiagramClass c = classify(p, n);
  if (!c.singular) throw NotSingular("sharp: " + p.str() + " is regular for n=" + std::to_string(n));
  int r = r_of(p, n);
  int row = p.conjugate().part(c.j);  // row index λ'_j
  std::vector<int> parts = p.parts();
  parts[0] -= r;
  parts[row - 1] -= r;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  Partition out(parts);  // validates monotonicity
  assert(tilde_c(out, n) == tilde_c(p, n));
  return out;
}

std::vector<Partition> sharp_chain(const Partition& p, int n) {
  DiagramClass c = classify(p, n);
  if (!c.singular)
    throw NotSingular("sharp_chain: " + p.str() + " is regular for n=" + std::to_string(n));
  std::vector<Partition> chain{p};
  Partition cur = p;
  while (classify(cur, n).singular) {
    cur = sharp(cur, n);
    chain.push_back(cur);
  }
  size_t expected = static_cast<size_t>(p.conjugate().part(c.j)) + 1;
  if (chain.size() != expected)
    throw std::logic_error("sharp_chain: length mismatch for " + p.str());
  return chain;
}

std::vector<Partition> f_set(const Partition& lambda, const Partition& mu, int n) {
  long target = tilde_c(lambda, n);
  std::set<Partition> out;
  auto consider = [&](const Partition& nu) {
    if (in_hook(nu, 1, n) && tilde_c(nu, n) == target) out.insert(nu);
  };
  for (const Partition& nu : add_candidates(mu)) consider(nu);
  for (const Partition& nu : remove_candidates(mu)) consider(nu);
  consider(mu);
  return {out.begin(), out.end()};
}

std::vector<Partition> pi_set(const Partition& lambda, int n) {
  if (lambda.part(1) <= n) return {lambda};
  Partition mu = lambda.without_box({1, lambda.part(1)});
  std::set<Partition> out;
  for (const Partition& q : pi_set(mu, n))
    for (const Partition& nu : f_set(lambda, q, n)) out.insert(nu);
  return {out.begin(), out.end()};
}

}  // namespace sj
