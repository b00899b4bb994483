#include "tcores/bqf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>

#include "tcores/errors.hpp"
#include "tcores/families.hpp"

namespace tcores {

namespace {

Int isqrt(Int v) {
  auto r = static_cast<Int>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_discriminant(Int D) {
  const Int r = ((D % 4) + 4) % 4;
  if (D >= 0 || (r != 0 && r != 1))
    throw DomainError("discriminant " + std::to_string(D) + " must be negative and 0 or 1 mod 4");
}

}  // namespace

std::string to_string(const BQF& q) {
  return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + ")";
}

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool is_reduced(const BQF& q) {
  if (!(std::abs(q.b) <= q.a && q.a <= q.c)) return false;
  if ((std::abs(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
  return true;
}

BQF reduce(const BQF& q) {
  if (q.a <= 0 || q.discriminant() >= 0) throw DomainError("form " + to_string(q) + " is not positive definite");
  BQF f = q;
  for (;;) {
    // Translate b into (-a, a].
    if (f.b > f.a || f.b <= -f.a) {
      const Int two_a = 2 * f.a;
      Int k = (f.a - f.b) / two_a;
      if ((f.a - f.b) % two_a < 0) --k;
      // b' = b + 2ak lands in (-a, a]
      const Int b2 = f.b + two_a * k;
      f.c = f.a * k * k + f.b * k + f.c;
      f.b = b2;
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    if (f.b == -f.a) f.b = f.a;
    return f;
  }
}

std::vector<BQF> reduced_forms(Int D) {
  check_discriminant(D);
  std::vector<BQF> out;
  const Int n = -D;
  // 3a^2 <= |D| for reduced forms.
  for (Int a = 1; 3 * a * a <= n; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      const Int num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const Int c = num / (4 * a);
      const BQF q{a, b, c};
      if (c >= a && is_reduced(q)) out.push_back(q);
    }
  }
  return out;
}

Int class_count(Int D) { return static_cast<Int>(reduced_forms(D).size()); }

Int class_count_7primitive(Int D) {
  const auto forms = reduced_forms(D);
  return std::count_if(forms.begin(), forms.end(),
                       [](const BQF& q) { return std::gcd(std::gcd(q.a, std::abs(q.b)), q.c) % 7 != 0; });
}

Rational class_count_hurwitz(Int D) {
  // Sixths: weight 6, 3 or 2.
  Int sixths = 0;
  for (const auto& q : reduced_forms(D)) {
    if (q.b == 0 && q.a == q.c)
      sixths += 3;
    else if (q.b == q.a && q.a == q.c)
      sixths += 2;
    else
      sixths += 6;
  }
  const Int g = std::gcd(sixths, Int{6});
  return {sixths / g, 6 / g};
}

std::array<Int, 3> cross(const std::array<Int, 3>& m, const std::array<Int, 3>& n) {
  return {m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2], m[0] * n[1] - m[1] * n[0]};
}

namespace {

bool solve_for_n(const std::array<Int, 3>& m, const std::array<Int, 3>& v, std::array<Int, 3>& n) {
  int i = 0;
  while (m[i] == 0) ++i;
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  const Int mi = m[i];
  for (Int ni = 0; ni < std::abs(mi); ++ni) {
    const Int pj = v[k] + m[j] * ni, pk = m[k] * ni - v[j];
    if (pj % mi != 0 || pk % mi != 0) continue;
    n[i] = ni;
    n[j] = pj / mi;
    n[k] = pk / mi;
    return cross(m, n) == v;
  }
  return false;
}

std::optional<GaussLift> lift_within(const std::array<Int, 3>& v, Int bound) {
  std::vector<std::array<Int, 3>> candidates;
  for (Int a = -bound; a <= bound; ++a)
    for (Int b = -bound; b <= bound; ++b)
      for (Int c = -bound; c <= bound; ++c)
        if ((a || b || c) && a * v[0] + b * v[1] + c * v[2] == 0) candidates.push_back({a, b, c});
  std::sort(candidates.begin(), candidates.end(), [](const auto& p, const auto& q) {
    const Int np = p[0] * p[0] + p[1] * p[1] + p[2] * p[2], nq = q[0] * q[0] + q[1] * q[1] + q[2] * q[2];
    if (np != nq) return np < nq;
    return p > q;
  });
  for (const auto& m : candidates) {
    std::array<Int, 3> n{};
    if (solve_for_n(m, v, n)) return GaussLift{m, n};
  }
  return std::nullopt;
}

}  // namespace

GaussLift gauss_lift(Int x, Int y, Int z, Int bound) {
  if (x == 0 && y == 0 && z == 0) throw DomainError("gauss_lift needs a nonzero triple");
  const std::array<Int, 3> v{x, y, z};
  if (bound > 0) {
    if (auto l = lift_within(v, bound)) return *l;
    throw ResourceError("no lift of " + to_string(Triple{x, y, z}) + " within radius " + std::to_string(bound));
  }
  const Int cap = 2 * (1 + isqrt(x * x + y * y + z * z) + 1);
  for (Int r = 1;; r = std::min(2 * r, cap)) {
    if (auto l = lift_within(v, r)) return *l;
    if (r == cap) break;
  }
  throw ResourceError("no lift of " + to_string(Triple{x, y, z}) + " within radius " + std::to_string(cap));
}

BQF form_from_lift(const GaussLift& l) {
  BQF q;
  for (int i = 0; i < 3; ++i) {
    q.a += l.m[i] * l.m[i];
    q.b += 2 * l.m[i] * l.n[i];
    q.c += l.n[i] * l.n[i];
  }
  return q;
}

BQF canonical_class(const BQF& q) {
  auto r = reduce(q);
  r.b = std::abs(r.b);
  return r;
}

namespace {

BQF triple_class(const Triple& v) {
  const auto l = gauss_lift(v[0], v[1], v[2]);
  const auto q = form_from_lift(l);
  if (q.discriminant() != -4 * sum_of_squares(v))
    throw InvariantViolation("lift of " + to_string(v) + " gives " + to_string(q));
  return canonical_class(q);
}

}  // namespace

BQF phi_sc6(const Partition& p) {
  if (!is_self_conjugate(p) || !is_t_core(p, 6))
    throw DomainError(to_string(p) + " is not a self-conjugate 6-core");
  const auto fc = sc6_constraints_check(normalize_abacus(p, 6));
  return triple_class(sc6_to_triple(fc, p.size()));
}

ReportRecord sc6_forms_check(Int n) {
  const auto start = std::chrono::steady_clock::now();
  ReportRecord rec;
  rec.check = "sc6_forms";
  rec.params = {{"n", n}};
  rec.relation = "<=";
  rec.ok = true;
  const Int D = -96 * n - 140;
  std::set<BQF> image;
  for (const auto& code : enumerate_sc_t_cores_lattice(6, n)) {
    const auto p = partition_from_ncoding(code);
    const auto fc = sc6_constraints_check(normalize_abacus(p, 6));
    const auto v = sc6_to_triple(fc, n);
    const auto q = phi_sc6(p);
    if (q.discriminant() != D) rec.fail(to_string(p) + " -> " + to_string(q) + " has discriminant " + std::to_string(q.discriminant()));
    // Signed permutations act through SO(3) or its coset, so they keep the
    // class or invert it.
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        Triple w{};
        for (int i = 0; i < 3; ++i) w[i] = (signs >> i & 1 ? -1 : 1) * v[perm[i]];
        if (triple_class(w) != q)
          rec.fail("signed permutation " + to_string(w) + " of " + to_string(v) + " leaves the class of " + to_string(q));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    image.insert(q);
  }
  std::set<BQF> classes;
  for (const auto& q : reduced_forms(D)) classes.insert(canonical_class(q));
  rec.lhs = static_cast<Int>(image.size());
  rec.rhs = static_cast<Int>(classes.size());
  for (const auto& q : image)
    if (!classes.contains(q)) rec.fail("image form " + to_string(q) + " is not a class of " + std::to_string(D));
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace tcores
