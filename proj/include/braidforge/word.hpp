#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidforge {

// A letter is a signed 1-based generator index: +i is the i-th generator,
// -i its inverse.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter l) { return -l; }
inline int letter_index(Letter l) { return l > 0 ? l : -l; }

class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      if (names_[i].empty())
        throw std::invalid_argument("alphabet: empty generator name");
      auto [it, inserted] = index_.emplace(names_[i], i + 1);
      (void)it;
      if (!inserted)
        throw std::invalid_argument("alphabet: duplicate generator name '" + names_[i] + "'");
    }
  }

  // s1..s{n-1}: the braid generators on n strands.
  static Alphabet sigma(int strands) {
    if (strands < 1) throw std::invalid_argument("alphabet: strands must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
    return Alphabet(std::move(names));
  }

  // s1..s{n-1} followed by r1..rn.
  static Alphabet sigma_rho(int strands) {
    if (strands < 1) throw std::invalid_argument("alphabet: strands must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
    for (int i = 1; i <= strands; ++i) names.push_back("r" + std::to_string(i));
    return Alphabet(std::move(names));
  }

  int arity() const { return static_cast<int>(names_.size()); }

  const std::string& name(int index) const {
    if (index < 1 || index > arity())
      throw std::out_of_range("alphabet: generator index out of range");
    return names_[index - 1];
  }

  // 1-based index, or 0 if the name is unknown.
  int index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? 0 : it->second;
  }

  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

// A freely reduced word. The class invariant is that no adjacent pair of
// letters cancels; every constructor reduces eagerly, so operator== is
// equality in the free group.
class Word {
 public:
  Word() = default;

  Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

  explicit Word(std::span<const Letter> raw) {
    ls_.reserve(raw.size());
    for (Letter l : raw) push_reduced(l);
  }

  static Word generator(int index, int sign = +1) {
    if (index < 1) throw std::invalid_argument("word: generator index must be >= 1");
    Word w;
    w.ls_.push_back(sign >= 0 ? index : -index);
    return w;
  }

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  std::size_t length() const { return ls_.size(); }

  Word inverse() const {
    Word w;
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
    return w;  // reverse of a reduced word is reduced
  }

  // Appends a letter keeping the word reduced.
  void push_reduced(Letter l) {
    if (l == 0) throw std::invalid_argument("word: zero letter");
    if (!ls_.empty() && ls_.back() == -l)
      ls_.pop_back();
    else
      ls_.push_back(l);
  }

  void append_reduced(const Word& w) {
    for (Letter l : w.ls_) push_reduced(l);
  }

  // Largest cyclic reduction: strips matching ends a^-1 ... a.
  Word cyclically_reduced() const {
    std::size_t lo = 0, hi = ls_.size();
    while (hi - lo >= 2 && ls_[lo] == -ls_[hi - 1]) {
      ++lo;
      --hi;
    }
    Word w;
    w.ls_.assign(ls_.begin() + lo, ls_.begin() + hi);
    return w;
  }

  int max_index() const {
    int m = 0;
    for (Letter l : ls_) m = std::max(m, letter_index(l));
    return m;
  }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> ls_;
};

// Free reduction of a raw letter sequence; validates indices against the
// alphabet. Idempotent and length-non-increasing.
inline Word free_reduce(const Alphabet& a, std::span<const Letter> raw) {
  for (Letter l : raw) {
    if (l == 0 || letter_index(l) > a.arity())
      throw std::invalid_argument("word: letter index out of range for alphabet");
  }
  return Word(raw);
}

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.append_reduced(v);
  return w;
}

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

inline Word power(const Word& w, long long k) {
  Word base = k >= 0 ? w : w.inverse();
  long long reps = k >= 0 ? k : -k;
  Word out;
  for (long long i = 0; i < reps; ++i) out.append_reduced(base);
  return out;
}

// g * w * g^-1
inline Word conjugate(const Word& w, const Word& g) {
  Word out = g;
  out.append_reduced(w);
  out.append_reduced(g.inverse());
  return out;
}

// Net exponent of each generator, indexed 1..arity.
inline std::vector<long long> exponent_vector(int arity, const Word& w) {
  std::vector<long long> e(static_cast<std::size_t>(arity), 0);
  for (Letter l : w.letters()) {
    int i = letter_index(l);
    if (i > arity) throw std::invalid_argument("word: letter outside alphabet");
    e[i - 1] += l > 0 ? 1 : -1;
  }
  return e;
}

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    Permutation p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  // 1-based points a, b.
  static Permutation transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw std::invalid_argument("permutation: bad transposition");
    Permutation p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  // The n-cycle (1 2 ... n).
  static Permutation forward_cycle(int n) {
    Permutation p;
    p.img_.resize(n);
    for (int i = 0; i < n; ++i) p.img_[i] = (i + 1) % n;
    return p;
  }

  // images[k] is the 0-based image of point k.
  static Permutation from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
        throw std::invalid_argument("permutation: images are not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  // 1-based evaluation.
  int image(int point) const {
    if (point < 1 || point > degree()) throw std::out_of_range("permutation: point out of range");
    return img_[point - 1] + 1;
  }

  // Function composition: (a*b)(x) = a(b(x)); b acts first.
  Permutation operator*(const Permutation& b) const {
    if (degree() != b.degree()) throw std::invalid_argument("permutation: degree mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[b.img_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<int>(x);
    return r;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != static_cast<int>(x)) return false;
    return true;
  }

  long long order() const {
    Permutation acc = identity(degree());
    for (long long k = 1;; ++k) {
      acc = *this * acc;
      if (acc.is_identity()) return k;
    }
  }

  // Cycle notation on 1-based points, fixed points omitted; "()" if identity.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s] || img_[s] == static_cast<int>(s)) continue;
      out += '(';
      std::size_t x = s;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += ' ';
        out += std::to_string(x + 1);
        first = false;
        x = static_cast<std::size_t>(img_[x]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  const std::vector<int>& images() const { return img_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;  // 0-based
};

// Images of the positive generators, index i-1 for generator i.
using GeneratorImages = std::vector<Permutation>;

// Evaluates a word under a homomorphism given on generators:
// evaluate_perm(u * v) == evaluate_perm(u) * evaluate_perm(v).
inline Permutation evaluate_perm(const Word& w, const GeneratorImages& images) {
  if (images.empty()) throw std::invalid_argument("evaluate_perm: no generator images");
  int deg = images.front().degree();
  for (const auto& p : images)
    if (p.degree() != deg) throw std::invalid_argument("evaluate_perm: mixed degrees");
  Permutation acc = Permutation::identity(deg);
  for (Letter l : w.letters()) {
    int i = letter_index(l);
    if (i > static_cast<int>(images.size()))
      throw std::invalid_argument("evaluate_perm: missing image for generator " + std::to_string(i));
    acc = acc * (l > 0 ? images[i - 1] : images[i - 1].inverse());
  }
  return acc;
}

// --- word text syntax -------------------------------------------------------
//
// Whitespace-separated tokens of the form `name`, `name^k`, `name^-1`.

inline Word parse_word(const Alphabet& a, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long long exp = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      std::string e = tok.substr(pos + 1);
      try {
        std::size_t used = 0;
        exp = std::stoll(e, &used);
        if (used != e.size()) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("word: bad exponent in token '" + tok + "'");
      }
    }
    int idx = a.index_of(name);
    if (idx == 0) throw std::invalid_argument("word: unknown generator '" + name + "'");
    Letter l = exp >= 0 ? idx : -idx;
    for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i) w.push_reduced(l);
  }
  return w;
}

inline std::string word_text(const Alphabet& a, const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long run = static_cast<long long>(j - i);
    if (ls[i] < 0) run = -run;
    if (!out.empty()) out += ' ';
    out += a.name(letter_index(ls[i]));
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace braidforge
