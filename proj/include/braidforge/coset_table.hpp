#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidforge/presentation.hpp"
#include "braidforge/word.hpp"

namespace braidforge {

struct EnumLimits {
  std::size_t max_cosets = 2'000'000;
  enum class Strategy { HltLookahead, Felsch };
  Strategy strategy = Strategy::HltLookahead;
};

// Completed, compressed, BFS-standardised coset table: cosets 1..n_cosets,
// action total on signed generators. The action of g^-1 is stored explicitly,
// so rows have 2 * n_gens entries in the column order g1, g1^-1, g2, g2^-1...
class CosetTable {
 public:
  CosetTable(int n_gens, std::size_t n_cosets, std::vector<std::uint32_t> tab,
             std::vector<Word> subgroup_gens)
      : n_gens_(n_gens), n_cosets_(n_cosets), tab_(std::move(tab)), sub_(std::move(subgroup_gens)) {}

  int n_gens() const { return n_gens_; }
  std::size_t n_cosets() const { return n_cosets_; }
  const std::vector<Word>& subgroup_gens() const { return sub_; }

  std::uint32_t act(std::uint32_t coset, Letter l) const {
    if (coset < 1 || coset > n_cosets_) throw std::out_of_range("coset table: coset out of range");
    int i = letter_index(l);
    if (i < 1 || i > n_gens_) throw std::out_of_range("coset table: generator out of range");
    std::size_t col = 2 * static_cast<std::size_t>(i - 1) + (l < 0 ? 1 : 0);
    return tab_[(coset - 1) * 2 * n_gens_ + col];
  }

  std::uint32_t trace(std::uint32_t coset, const Word& w) const {
    for (Letter l : w.letters()) coset = act(coset, l);
    return coset;
  }

  std::string serialize() const {
    std::ostringstream out;
    for (std::size_t c = 1; c <= n_cosets_; ++c) {
      for (int col = 0; col < 2 * n_gens_; ++col) {
        if (col) out << ' ';
        out << tab_[(c - 1) * 2 * n_gens_ + col];
      }
      out << '\n';
    }
    return out.str();
  }

  bool operator==(const CosetTable&) const = default;

 private:
  int n_gens_;
  std::size_t n_cosets_;
  std::vector<std::uint32_t> tab_;
  std::vector<Word> sub_;
};

// Either a completed table or the resource bound that was hit. Running out
// of cosets is a value, not an error: the enumeration only semi-decides
// finiteness.
struct EnumOutcome {
  std::optional<CosetTable> table;
  std::size_t cosets_used = 0;  // total cosets defined over the run

  bool completed() const { return table.has_value(); }
};

namespace detail {

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, const EnumLimits& limits)
      : limits_(limits), n_gens_(p.alphabet.arity()), cols_(2 * p.alphabet.arity()) {
    if (n_gens_ == 0) throw std::invalid_argument("enumerate: presentation has no generators");
    for (const Word& r : p.relators) {
      p.check_word(r);
      if (!r.empty()) relator_cols_.push_back(to_cols(r));
    }
    for (const Word& w : subgroup) {
      p.check_word(w);
      sub_cols_.push_back(to_cols(w));
    }
    if (limits_.strategy == EnumLimits::Strategy::Felsch) build_scan_lists();

    tab_.assign(2 * cols_, 0);  // rows 0 (unused) and 1
    parent_ = {0, 1};
    n_alloc_ = 1;
    n_live_ = 1;
  }

  EnumOutcome run(const Presentation& p, const std::vector<Word>& subgroup) {
    bool ok = limits_.strategy == EnumLimits::Strategy::Felsch ? felsch() : hlt();
    EnumOutcome out;
    out.cosets_used = total_defined_;
    if (!ok) return out;
    validate(p, subgroup);
    out.table = standardize(subgroup);
    return out;
  }

 private:
  struct CapacityHit {};

  EnumLimits limits_;
  int n_gens_;
  int cols_;
  std::vector<std::vector<int>> relator_cols_;
  std::vector<std::vector<int>> sub_cols_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> scan_lists_;  // per column
  std::vector<std::vector<int>> rotations_;  // rotated relators, indexed by scan list entries

  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> parent_;
  std::size_t n_alloc_ = 0, n_live_ = 0, total_defined_ = 1;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> merge_queue_;
  std::vector<std::pair<std::uint32_t, int>> deductions_;
  bool track_deductions_ = false;

  std::vector<int> to_cols(const Word& w) const {
    std::vector<int> cs;
    cs.reserve(w.length());
    for (Letter l : w.letters()) cs.push_back(2 * (letter_index(l) - 1) + (l < 0 ? 1 : 0));
    return cs;
  }

  // Rotations of every relator grouped by first column; a newly set edge
  // (c, x) only needs the rotations that begin with x, scanned at c.
  void build_scan_lists() {
    scan_lists_.assign(cols_, {});
    for (const auto& r : relator_cols_) {
      for (std::size_t k = 0; k < r.size(); ++k) {
        std::vector<int> rot;
        rot.insert(rot.end(), r.begin() + k, r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + k);
        rotations_.push_back(std::move(rot));
        scan_lists_[r[k]].emplace_back(rotations_.size() - 1, 0);
      }
    }
  }

  std::uint32_t find(std::uint32_t c) {
    std::uint32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      std::uint32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::uint32_t raw(std::uint32_t c, int col) const { return tab_[c * cols_ + col]; }

  std::uint32_t get(std::uint32_t c, int col) {
    std::uint32_t e = tab_[c * cols_ + col];
    if (e == 0) return 0;
    std::uint32_t r = find(e);
    if (r != e) tab_[c * cols_ + col] = r;
    return r;
  }

  void set(std::uint32_t c, int col, std::uint32_t d) {
    tab_[c * cols_ + col] = d;
    tab_[d * cols_ + (col ^ 1)] = c;
    if (track_deductions_) {
      deductions_.emplace_back(c, col);
      deductions_.emplace_back(d, col ^ 1);
    }
  }

  std::uint32_t define(std::uint32_t c, int col) {
    if (n_alloc_ >= limits_.max_cosets) throw CapacityHit{};
    std::uint32_t d = static_cast<std::uint32_t>(++n_alloc_);
    ++n_live_;
    ++total_defined_;
    tab_.resize((n_alloc_ + 1) * cols_, 0);
    parent_.push_back(d);
    set(c, col, d);
    return d;
  }

  void coincide(std::uint32_t a, std::uint32_t b) {
    merge_queue_.emplace_back(a, b);
    while (!merge_queue_.empty()) {
      auto [x, y] = merge_queue_.front();
      merge_queue_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent_[y] = x;  // y dies
      --n_live_;
      for (int col = 0; col < cols_; ++col) {
        std::uint32_t e = tab_[y * cols_ + col];
        if (e == 0) continue;
        tab_[y * cols_ + col] = 0;
        e = find(e);
        std::uint32_t xe = get(x, col);
        if (xe != 0) {
          if (xe != e) merge_queue_.emplace_back(xe, e);
        } else {
          set(x, col, e);
        }
      }
    }
  }

  // Scans word cs at coset c; forward and backward fronts meet in the middle.
  // With fill, gaps of length >= 2 are bridged by new cosets (HLT style);
  // a gap of exactly 1 is always closed as a deduction.
  void scan(std::uint32_t c, const std::vector<int>& cs, bool fill) {
    if (cs.empty()) return;
    int i = 0, j = static_cast<int>(cs.size()) - 1;
    std::uint32_t f = c, b = c;
    for (;;) {
      while (i <= j) {
        std::uint32_t d = get(f, cs[i]);
        if (d == 0) break;
        f = d;
        ++i;
      }
      if (i > j) {  // fully traced forward; fronts must agree
        if (f != b) coincide(f, b);
        return;
      }
      while (j >= i) {
        std::uint32_t d = get(b, cs[j] ^ 1);
        if (d == 0) break;
        b = d;
        --j;
      }
      if (j < i) {  // fronts met with no gap
        if (f != b) coincide(f, b);
        return;
      }
      if (j == i) {  // gap of exactly one: deduction
        set(f, cs[i], b);
        return;
      }
      if (!fill) return;
      f = define(f, cs[i]);
      ++i;
    }
  }

  bool hlt() {
    for (const auto& w : sub_cols_) scan(1, w, true);
    std::uint32_t c = 1;
    while (c <= n_alloc_) {
      if (find(c) != c) {
        ++c;
        continue;
      }
      try {
        bool alive = true;
        for (const auto& r : relator_cols_) {
          scan(c, r, true);
          if (find(c) != c) {
            alive = false;
            break;
          }
        }
        if (alive)
          for (int col = 0; col < cols_; ++col)
            if (get(c, col) == 0) define(c, col);
      } catch (const CapacityHit&) {
        std::size_t before = n_live_;
        lookahead();
        if (n_live_ >= before - before / 100 || n_live_ >= limits_.max_cosets) return false;
        c = compress(find(c));
        continue;  // rescan the same coset
      }
      ++c;
    }
    return true;
  }

  bool felsch() {
    track_deductions_ = true;
    try {
      for (const auto& w : sub_cols_) scan(1, w, true);
      process_deductions();
      std::uint32_t c = 1;
      while (c <= n_alloc_) {
        if (find(c) != c) {
          ++c;
          continue;
        }
        bool advanced = false;
        for (int col = 0; col < cols_; ++col) {
          if (get(c, col) != 0) continue;
          define(c, col);
          process_deductions();
          if (find(c) != c) break;  // restart logic below handles death
          advanced = true;
          col = -1;  // re-check the row from the start after deductions
        }
        (void)advanced;
        if (find(c) == c) ++c;
      }
      return true;
    } catch (const CapacityHit&) {
      return false;
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      c = find(c);
      if (get(c, col) == 0) continue;  // cleared by a coincidence
      for (auto [rot_idx, unused] : scan_lists_[col]) {
        (void)unused;
        scan(c, rotations_[rot_idx], false);
        c = find(c);
        if (get(c, col) == 0) break;
      }
    }
  }

  // Scan every relator at every live coset without defining anything; only
  // coincidences can shrink the table.
  void lookahead() {
    for (std::uint32_t c = 1; c <= n_alloc_; ++c) {
      if (find(c) != c) continue;
      for (const auto& r : relator_cols_) {
        scan(c, r, false);
        if (find(c) != c) break;
      }
    }
  }

  // Renumbers live cosets to 1..n_live, returning the new index of `of`.
  std::uint32_t compress(std::uint32_t of) {
    std::vector<std::uint32_t> newidx(n_alloc_ + 1, 0);
    std::uint32_t next = 0;
    for (std::uint32_t c = 1; c <= n_alloc_; ++c)
      if (find(c) == c) newidx[c] = ++next;
    std::vector<std::uint32_t> fresh((static_cast<std::size_t>(next) + 1) * cols_, 0);
    for (std::uint32_t c = 1; c <= n_alloc_; ++c) {
      if (find(c) != c) continue;
      for (int col = 0; col < cols_; ++col) {
        std::uint32_t e = get(c, col);
        fresh[newidx[c] * cols_ + col] = e ? newidx[e] : 0;
      }
    }
    tab_ = std::move(fresh);
    n_alloc_ = next;
    n_live_ = next;
    parent_.resize(next + 1);
    for (std::uint32_t c = 0; c <= next; ++c) parent_[c] = c;
    return newidx[of];
  }

  void validate(const Presentation& p, const std::vector<Word>& subgroup) {
    for (std::uint32_t c = 1; c <= n_alloc_; ++c) {
      if (find(c) != c) continue;
      for (int col = 0; col < cols_; ++col)
        if (get(c, col) == 0) throw std::logic_error("coset enumeration: incomplete row after completion");
      for (const auto& r : relator_cols_) {
        std::uint32_t e = c;
        for (int col : r) e = get(e, col);
        if (e != c) throw std::logic_error("coset enumeration: relator does not close");
      }
    }
    (void)subgroup;
    for (const auto& w : sub_cols_) {
      std::uint32_t e = find(1);
      for (int col : w) e = get(e, col);
      if (e != find(1)) throw std::logic_error("coset enumeration: subgroup generator does not fix coset 1");
    }
    (void)p;
  }

  CosetTable standardize(const std::vector<Word>& subgroup) {
    std::uint32_t start = find(1);
    std::vector<std::uint32_t> newidx(n_alloc_ + 1, 0);
    std::vector<std::uint32_t> order;
    order.push_back(start);
    newidx[start] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::uint32_t c = order[head];
      for (int col = 0; col < cols_; ++col) {
        std::uint32_t e = get(c, col);
        if (e != 0 && newidx[e] == 0) {
          order.push_back(e);
          newidx[e] = static_cast<std::uint32_t>(order.size());
        }
      }
    }
    if (order.size() != n_live_) throw std::logic_error("coset enumeration: table is not connected");
    std::vector<std::uint32_t> fresh(order.size() * static_cast<std::size_t>(cols_), 0);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int col = 0; col < cols_; ++col)
        fresh[k * cols_ + col] = newidx[get(order[k], col)];
    return CosetTable(n_gens_, order.size(), std::move(fresh), subgroup);
  }
};

}  // namespace detail

// Todd-Coxeter enumeration of the cosets of <subgroup_gens> in the presented
// group. Deterministic for a fixed (input, strategy); the completed table is
// standardised, so both strategies produce the same table whenever they both
// finish.
inline EnumOutcome enumerate(const Presentation& p, const std::vector<Word>& subgroup_gens,
                             const EnumLimits& limits = {}) {
  detail::Enumerator e(p, subgroup_gens, limits);
  return e.run(p, subgroup_gens);
}

// Order of the presented group (index of the trivial subgroup), when it can
// be established within the limits.
inline std::optional<std::size_t> group_order(const Presentation& p, const EnumLimits& limits = {}) {
  EnumOutcome out = enumerate(p, {}, limits);
  if (!out.completed()) return std::nullopt;
  return out.table->n_cosets();
}

// The coset action as permutations: generator g maps coset c to c . g^-1,
// which makes word evaluation (function composition) a left action, so every
// relator evaluates to the identity and subgroup generators fix point 1.
inline GeneratorImages permutation_representation(const CosetTable& t) {
  GeneratorImages images;
  for (int g = 1; g <= t.n_gens(); ++g) {
    std::vector<int> img(t.n_cosets());
    for (std::uint32_t c = 1; c <= t.n_cosets(); ++c)
      img[c - 1] = static_cast<int>(t.act(c, -g)) - 1;
    images.push_back(Permutation::from_images(std::move(img)));
  }
  return images;
}

}  // namespace braidforge
