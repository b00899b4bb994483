#include "tcores/squares.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "tcores/errors.hpp"

namespace tcores {

namespace {

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

Int isqrt(Int v) {
  if (v <= 0) return 0;
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool residue_ok(const RepConstraints& c, size_t k, Int x) {
  if (c.residues.size() <= k || c.residues[k].empty()) return true;
  const Int r = mod(x, c.modulus);
  for (Int allowed : c.residues[k])
    if (mod(allowed, c.modulus) == r) return true;
  return false;
}

class RepSearch {
 public:
  RepSearch(Int target, int length, const RepConstraints& c)
      : target_(target), length_(length), c_(c), cur_(static_cast<size_t>(length), 0) {
    const Int b = isqrt(target);
    candidates_.resize(static_cast<size_t>(length));
    for (int k = 0; k < length; ++k)
      for (Int x = -b; x <= b; ++x)
        if (residue_ok(c_, static_cast<size_t>(k), x)) candidates_[static_cast<size_t>(k)].push_back(x);
  }

  std::vector<SquaresRep> run() {
    if (target_ < 0 || length_ < 0) return {};
    if (length_ == 0) {
      if (target_ == 0 && (!c_.sum || *c_.sum == 0)) emit();
      return std::move(out_);
    }
    descend(0, target_, 0);
    return std::move(out_);
  }

 private:
  void emit() {
    SquaresRep rep;
    rep.values = cur_;
    rep.modulus = c_.modulus;
    rep.target = target_;
    for (Int x : cur_) rep.residues.push_back(mod(x, c_.modulus));
    out_.push_back(std::move(rep));
  }

  void try_last(Int x, Int remaining) {
    const auto k = static_cast<size_t>(length_ - 1);
    if (x * x != remaining || !residue_ok(c_, k, x)) return;
    cur_[k] = x;
    emit();
  }

  void descend(int k, Int remaining, Int partial_sum) {
    if (k == length_ - 1) {
      if (c_.sum) {
        try_last(*c_.sum - partial_sum, remaining);
      } else {
        const Int r = isqrt(remaining);
        try_last(-r, remaining);
        if (r != 0) try_last(r, remaining);
      }
      return;
    }
    const Int bound = isqrt(remaining);
    const Int left = length_ - k - 1;
    for (Int x : candidates_[static_cast<size_t>(k)]) {
      if (x < -bound) continue;
      if (x > bound) break;
      const Int rem = remaining - x * x;
      if (c_.sum) {
        // Cauchy-Schwarz on the remaining coordinates.
        const Int s = *c_.sum - partial_sum - x;
        if (s * s > left * rem) continue;
      }
      cur_[static_cast<size_t>(k)] = x;
      descend(k + 1, rem, partial_sum + x);
    }
  }

  Int target_;
  int length_;
  RepConstraints c_;
  std::vector<Int> cur_;
  std::vector<std::vector<Int>> candidates_;
  std::vector<SquaresRep> out_;
};

void require_theorem_t(Theorem th, int t) {
  if (t < 3) throw DomainError("the sums-of-squares theorems need t >= 3, got " + std::to_string(t));
  if (th == Theorem::Squares12 && t % 2 == 0) throw DomainError("theorem 1.2 needs odd t");
  if (th == Theorem::Squares13 && t % 2 == 1) throw DomainError("theorem 1.3 needs even t");
}

SquaresRep make_rep(std::vector<Int> values, Int modulus) {
  SquaresRep rep;
  rep.modulus = modulus;
  for (Int x : values) rep.residues.push_back(mod(x, modulus));
  rep.target = sum_of_squares(values);
  rep.values = std::move(values);
  return rep;
}

// Image of one coding under the explicit map attached to a theorem.
SquaresRep theorem_image(Theorem th, const NCoding& n) {
  switch (th) {
    case Theorem::Squares11:
      return tcore_to_squares(n);
    case Theorem::Squares12:
      return sc_odd_squares(n);
    case Theorem::Squares13:
      return sc_even_squares(n);
    case Theorem::Alpha14:
      return alpha_map(n);
    case Theorem::Alpha15:
      return sc_truncate(alpha_map(n));
  }
  throw InvariantViolation("unknown theorem");
}

bool satisfies(const SquaresRep& rep, Int target, const RepConstraints& c) {
  if (sum_of_squares(rep.values) != target) return false;
  if (c.sum && std::accumulate(rep.values.begin(), rep.values.end(), Int{0}) != *c.sum) return false;
  for (size_t k = 0; k < rep.values.size(); ++k)
    if (!residue_ok(c, k, rep.values[k])) return false;
  return true;
}

}  // namespace

std::string to_string(std::span<const Int> v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ')';
}

std::string to_string(const Triple& v) { return to_string(std::span<const Int>(v)); }

Int sum_of_squares(std::span<const Int> v) {
  Int s = 0;
  for (Int x : v) s += x * x;
  return s;
}

std::string to_string(const TripleClass& c) {
  std::string out = "{" + std::to_string(c.values[0]) + "," + std::to_string(c.values[1]) + "," +
                    std::to_string(c.values[2]) + "}";
  if (c.sign_parity) out += *c.sign_parity ? "-" : "+";
  return out;
}

std::vector<Int> canonical_bkm(std::span<const Int> v) {
  std::vector<Int> out;
  out.reserve(v.size());
  for (Int x : v) out.push_back(x < 0 ? -x : x);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TripleClass canonical_bkm(const Triple& v) {
  const auto sorted = canonical_bkm(std::span<const Int>(v));
  return TripleClass{{sorted[0], sorted[1], sorted[2]}, std::nullopt, Equivalence::BKM};
}

TripleClass canonical_os(const Triple& v) {
  TripleClass c = canonical_bkm(v);
  c.relation = Equivalence::OS;
  if (std::none_of(v.begin(), v.end(), [](Int x) { return x == 0; }))
    c.sign_parity = static_cast<int>(std::count_if(v.begin(), v.end(), [](Int x) { return x < 0; }) % 2);
  return c;
}

TripleClass project_to_bkm(const TripleClass& c) { return TripleClass{c.values, std::nullopt, Equivalence::BKM}; }

SquaresRep tcore_to_squares(const NCoding& n) {
  std::vector<Int> x(static_cast<size_t>(n.t));
  for (int j = 0; j < n.t; ++j) x[static_cast<size_t>(j)] = n.t * n.entries[static_cast<size_t>(j)] + j;
  return make_rep(std::move(x), n.t);
}

NCoding squares_to_tcore(std::span<const Int> x) {
  const auto t = static_cast<Int>(x.size());
  if (t < 2) throw DomainError("need at least two coordinates");
  if (std::accumulate(x.begin(), x.end(), Int{0}) != t * (t - 1) / 2)
    throw DomainError("coordinates of " + to_string(x) + " must sum to t(t-1)/2 = " + std::to_string(t * (t - 1) / 2));
  std::vector<Int> n(x.size());
  for (Int j = 0; j < t; ++j) {
    const Int v = x[static_cast<size_t>(j)];
    if (mod(v - j, t) != 0)
      throw DomainError("coordinate " + std::to_string(j) + " of " + to_string(x) + " is not " + std::to_string(j) +
                        " mod " + std::to_string(t));
    n[static_cast<size_t>(j)] = (v - j) / t;
  }
  return NCoding(std::move(n));
}

SquaresRep alpha_map(const NCoding& n) {
  const Int t = n.t;
  std::vector<Int> w(static_cast<size_t>(t));
  for (Int k = 0; k < t; ++k) w[static_cast<size_t>(k)] = 2 * t * n.entries[static_cast<size_t>(k)] + 2 * k + 1 - t;
  return make_rep(std::move(w), 2 * t);
}

NCoding alpha_inverse(std::span<const Int> w) {
  const auto t = static_cast<Int>(w.size());
  if (t < 2) throw DomainError("need at least two coordinates");
  if (std::accumulate(w.begin(), w.end(), Int{0}) != 0) throw DomainError(to_string(w) + " does not sum to zero");
  std::vector<Int> n(w.size());
  for (Int k = 0; k < t; ++k) {
    const Int shifted = w[static_cast<size_t>(k)] - (2 * k + 1 - t);
    if (mod(shifted, 2 * t) != 0)
      throw DomainError("coordinate " + std::to_string(k) + " of " + to_string(w) + " is not 2k+1-t mod 2t");
    n[static_cast<size_t>(k)] = shifted / (2 * t);
  }
  const Int excess = sum_of_squares(w) - t * (t * t - 1) / 3;
  if (excess < 0 || excess % (8 * t) != 0)
    throw DomainError("sum of squares of " + to_string(w) + " is not 8tn + t(t^2-1)/3");
  return NCoding(std::move(n));
}

SquaresRep sc_truncate(const SquaresRep& w) {
  const auto t = w.values.size();
  for (size_t k = 0; k < t; ++k)
    if (w.values[k] != -w.values[t - 1 - k]) throw DomainError("not self-conjugate: " + to_string(w.values) + " is not anti-symmetric");
  std::vector<Int> head(w.values.begin(), w.values.begin() + static_cast<std::ptrdiff_t>(t / 2));
  return make_rep(std::move(head), w.modulus);
}

SquaresRep sc_halve(const SquaresRep& truncated, int t) {
  if (t % 2 == 0) throw DomainError("halving applies to odd t only");
  std::vector<Int> half;
  for (Int x : truncated.values) {
    if (x % 2 != 0) throw DomainError("odd coordinate in " + to_string(truncated.values));
    half.push_back(x / 2);
  }
  return make_rep(std::move(half), t);
}

namespace {

SquaresRep reversed(SquaresRep rep) {
  std::reverse(rep.values.begin(), rep.values.end());
  std::reverse(rep.residues.begin(), rep.residues.end());
  return rep;
}

}  // namespace

SquaresRep sc_odd_squares(const NCoding& n) { return reversed(sc_halve(sc_truncate(alpha_map(n)), n.t)); }

SquaresRep sc_even_squares(const NCoding& n) {
  if (n.t % 2 != 0) throw DomainError("even t expected");
  return reversed(sc_truncate(alpha_map(n)));
}

std::vector<SquaresRep> enumerate_reps(Int target, int length, const RepConstraints& c) {
  if (c.modulus < 1) throw DomainError("modulus must be positive");
  return RepSearch(target, length, c).run();
}

std::vector<TripleClass> triple_classes(Int target) {
  std::set<TripleClass> classes;
  for (const auto& rep : enumerate_reps(target, 3)) classes.insert(canonical_bkm(Triple{rep.values[0], rep.values[1], rep.values[2]}));
  return {classes.begin(), classes.end()};
}

Int count_triples(Int target) { return static_cast<Int>(enumerate_reps(target, 3).size()); }

std::string to_string(Theorem th) {
  switch (th) {
    case Theorem::Squares11: return "1.1";
    case Theorem::Squares12: return "1.2";
    case Theorem::Squares13: return "1.3";
    case Theorem::Alpha14: return "1.4";
    case Theorem::Alpha15: return "1.5";
  }
  return "?";
}

Theorem parse_theorem(const std::string& id) {
  if (id == "1.1") return Theorem::Squares11;
  if (id == "1.2") return Theorem::Squares12;
  if (id == "1.3") return Theorem::Squares13;
  if (id == "1.4") return Theorem::Alpha14;
  if (id == "1.5") return Theorem::Alpha15;
  throw DomainError("unknown theorem id '" + id + "'");
}

Int theorem_target(Theorem th, int t_, Int n) {
  const Int t = t_;
  switch (th) {
    case Theorem::Squares11: return 2 * t * n + t * (t - 1) * (2 * t - 1) / 6;
    case Theorem::Squares12: return t * n + t * (t * t - 1) / 24;
    case Theorem::Squares13: return 4 * t * n + t * (t * t - 1) / 6;
    case Theorem::Alpha14: return 8 * t * n + t * (t * t - 1) / 3;
    case Theorem::Alpha15: return 4 * t * n + t * (t * t - 1) / 6;
  }
  throw InvariantViolation("unknown theorem");
}

int theorem_length(Theorem th, int t) {
  switch (th) {
    case Theorem::Squares11:
    case Theorem::Alpha14: return t;
    case Theorem::Squares12:
    case Theorem::Squares13:
    case Theorem::Alpha15: return t / 2;
  }
  throw InvariantViolation("unknown theorem");
}

RepConstraints theorem_constraints(Theorem th, int t_) {
  const Int t = t_;
  RepConstraints c;
  const int len = theorem_length(th, t_);
  c.residues.resize(static_cast<size_t>(len));
  for (Int j = 0; j < len; ++j) {
    auto& r = c.residues[static_cast<size_t>(j)];
    switch (th) {
      case Theorem::Squares11:
        c.modulus = t;
        r = {mod(j, t), mod(-j, t)};
        break;
      case Theorem::Squares12:
        c.modulus = t;
        r = {mod(j + 1, t), mod(-(j + 1), t)};
        break;
      case Theorem::Squares13:
        c.modulus = 2 * t;
        r = {mod(2 * j + 1, 2 * t), mod(-(2 * j + 1), 2 * t)};
        break;
      case Theorem::Alpha14:
      case Theorem::Alpha15:
        c.modulus = 2 * t;
        r = {mod(2 * j + 1 - t, 2 * t)};
        break;
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  if (th == Theorem::Squares11) c.sum = t * (t - 1) / 2;
  if (th == Theorem::Alpha14) c.sum = 0;
  return c;
}

ReportRecord verify_theorem_counts(Theorem th, int t, Int n) {
  require_theorem_t(th, t);
  const auto start = std::chrono::steady_clock::now();
  ReportRecord rec;
  rec.check = "theorem" + to_string(th);
  rec.params = {{"t", t}, {"n", n}};
  rec.ok = true;

  const bool self_conjugate = th != Theorem::Squares11 && th != Theorem::Alpha14;
  const auto codings = self_conjugate ? enumerate_sc_t_cores_lattice(t, n) : enumerate_t_cores_lattice(t, n);
  const Int target = theorem_target(th, t, n);
  const int length = theorem_length(th, t);
  const auto constraints = theorem_constraints(th, t);
  const auto solutions = enumerate_reps(target, length, constraints);
  rec.lhs = static_cast<Int>(codings.size());

  std::vector<SquaresRep> images;
  for (const auto& code : codings) {
    auto img = theorem_image(th, code);
    if (static_cast<int>(img.values.size()) != length || !satisfies(img, target, constraints))
      rec.fail(to_string(partition_from_ncoding(code)) + " maps to " + to_string(img.values) +
               ", outside the solution set of " + std::to_string(target));
    images.push_back(std::move(img));
  }

  if (th == Theorem::Alpha14 || th == Theorem::Alpha15) {
    // Elementwise: the image of alpha is exactly the solution set.
    std::set<std::vector<Int>> image_set, solution_set;
    for (size_t i = 0; i < images.size(); ++i) {
      if (!image_set.insert(images[i].values).second)
        rec.fail("alpha is not injective at " + to_string(partition_from_ncoding(codings[i])));
      if (th == Theorem::Alpha14 && alpha_inverse(images[i]) != codings[i])
        rec.fail("alpha_inverse does not undo alpha at " + to_string(codings[i]));
    }
    for (const auto& s : solutions) solution_set.insert(s.values);
    for (const auto& s : solution_set)
      if (!image_set.contains(s)) rec.fail(to_string(s) + " solves the system but is not an image");
    rec.rhs = static_cast<Int>(solution_set.size());
  } else {
    // Class counts under sign changes and permutations.
    std::map<std::vector<Int>, std::vector<size_t>> image_classes;
    for (size_t i = 0; i < images.size(); ++i) image_classes[canonical_bkm(images[i].values)].push_back(i);
    std::set<std::vector<Int>> solution_classes;
    for (const auto& s : solutions) solution_classes.insert(canonical_bkm(s.values));
    rec.rhs = static_cast<Int>(solution_classes.size());
    for (const auto& [cls, members] : image_classes) {
      if (members.size() < 2) continue;
      std::string w;
      for (size_t i : members) w += (w.empty() ? "" : " and ") + to_string(partition_from_ncoding(codings[i]));
      rec.fail(w + " share the class " + to_string(cls));
    }
    for (const auto& cls : solution_classes)
      if (!image_classes.contains(cls)) rec.fail("class " + to_string(cls) + " has no preimage");
  }
  if (rec.lhs != rec.rhs) rec.fail("count mismatch: " + std::to_string(rec.lhs) + " vs " + std::to_string(rec.rhs));
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

ReportRecord theorem11_family_check(int t, Int n) {
  const auto start = std::chrono::steady_clock::now();
  if (t < 3) throw DomainError("theorem 1.1 needs t >= 3");
  ReportRecord rec;
  rec.check = "theorem1.1_family";
  rec.params = {{"t", t}, {"n", n}};
  rec.ok = true;
  std::map<Int, std::map<std::vector<Int>, Partition>> families;
  const auto codings = enumerate_t_cores_lattice(t, n);
  for (const auto& code : codings) {
    const auto p = partition_from_ncoding(code);
    const Int family = normalize_abacus(p, t).beads() % t;
    const auto cls = canonical_bkm(tcore_to_squares(code).values);
    auto [it, fresh] = families[family].emplace(cls, p);
    if (!fresh)
      rec.fail("family " + std::to_string(family) + ": " + to_string(it->second) + " and " + to_string(p) +
               " share the class " + to_string(cls));
  }
  for (const auto& [f, classes] : families) rec.lhs += static_cast<Int>(classes.size());
  rec.rhs = static_cast<Int>(codings.size());
  if (rec.lhs != rec.rhs) rec.fail("count mismatch: " + std::to_string(rec.lhs) + " vs " + std::to_string(rec.rhs));
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace tcores
