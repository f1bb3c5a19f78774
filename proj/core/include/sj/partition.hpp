#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sj/factored.hpp"

namespace sj {

struct Box {
  int row = 0, col = 0;  // 1-based
};

// Integer partition: strictly positive, weakly decreasing parts. Immutable
// value with structural equality and lexicographic order, so sets of
// partitions print deterministically.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view s);  // "3,1"; "-" is the empty partition
  std::string str() const;

  int size() const { return size_; }                 // |λ|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {                            // 1-based; 0 beyond the length
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  std::vector<Box> boxes() const;

  // Corner enumeration.
  std::vector<Box> addable_boxes() const;
  std::vector<Box> removable_boxes() const;
  Partition with_box(const Box& b) const;
  Partition without_box(const Box& b) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Describes μ relative to λ when they differ by exactly one box.
struct BoxChange {
  bool add = false;
  Box box;
};
std::optional<BoxChange> box_change(const Partition& lambda, const Partition& mu);

// Hook membership: λ_{m+1} <= n.
bool in_hook(const Partition& p, int m, int n);

// S+(λ) and S-(λ) restricted to H(m,n), each sorted.
std::pair<std::vector<Partition>, std::vector<Partition>> add_remove_sets(const Partition& p,
                                                                          int m, int n);
// Unrestricted single-box neighbours.
std::vector<Partition> add_candidates(const Partition& p);
std::vector<Partition> remove_candidates(const Partition& p);

// All of H(m,n) with |λ| <= max_size, sorted by size then lexicographically.
std::vector<Partition> hook_partitions(int n, int max_size, int m = 1);

// Parameter bundle: m (fixed 1 on every specialization path), n, and the
// derived h = -k m - n - p/2 - q as an affine form in (k, p) with q = 0.
struct ParamCtx {
  int m = 1;
  int n = 0;
  AffineForm h() const {
    return AffineForm(Rational(-m), Rational(-1, 2), Rational(-n));
  }
};

// c_λ as an affine form in (k, p): 2n(λ') + 2k n(λ) + |λ|(2h + 2k + 1).
AffineForm eigenvalue(const Partition& p, const ParamCtx& ctx);
// The m=1 box-sum route Σ [2(j-1+k(i-1)) + 1 - 2n - p]; equals eigenvalue.
AffineForm eigenvalue_boxsum(const Partition& p, int n);
// Integer specialization of c_λ at (k,p,q) = (-1,0,0).
long tilde_c(const Partition& p, int n);

int s_stat(const Partition& p);   // λ_2 + λ_3 + ...
long n_stat(const Partition& p);  // λ_2 + 2 λ_3 + ...

// Regular / singular classification: singular when λ_1 - n = λ'_j + n - j for
// some 1 <= j <= n. The witness is unique (λ'_j + n - j strictly decreases in
// j); all solutions are still recorded and uniqueness is asserted.
struct DiagramClass {
  bool singular = false;
  int j = 0;  // smallest witness when singular
  std::vector<int> witnesses;
};
DiagramClass classify(const Partition& p, int n);

int r_of(const Partition& p, int n);                     // throws NotSingular
Partition sharp(const Partition& p, int n);              // throws NotSingular
// X_λ = [λ, λ#, λ##, ...] ending at the first regular diagram; the length is
// checked against λ'_j + 1 and LengthMismatch is reported via logic_error.
std::vector<Partition> sharp_chain(const Partition& p, int n);

// F_λ(μ) = {ν in S(μ) ∩ H(1,n) : c̃_ν = c̃_λ}, by direct eigenvalue filtering.
std::vector<Partition> f_set(const Partition& lambda, const Partition& mu, int n);
// π_λ by the literal recursion (base {λ} for λ_1 <= n).
std::vector<Partition> pi_set(const Partition& lambda, int n);

}  // namespace sj
