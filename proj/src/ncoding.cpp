#include "tcores/ncoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tcores/errors.hpp"

namespace tcores {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

void require_t(int t) {
  if (t < 2) throw DomainError("t must be at least 2, got " + std::to_string(t));
}

// Depth-first search over n_0..n_{t-2} with n_{t-1} fixed by the zero sum.
// Works with twice the size so that all terms are integers:
//   2|lambda| = sum_j (t x_j^2 + 2 j x_j).
class LatticeSearch {
 public:
  LatticeSearch(int t, Int n) : t_(t), twice_n_(2 * n), cur_(static_cast<size_t>(t), 0) {
    radius_ = static_cast<Int>(std::floor(std::sqrt(lattice_norm_bound(t, n)) + 1e-9));
  }

  std::vector<NCoding> run() {
    if (twice_n_ >= 0) descend(0, 0, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  Int term(int j, Int x) const { return t_ * x * x + 2 * j * x; }

  // Real minimum of sum_{j>=k} (t x_j^2 + 2 j x_j) subject to sum x_j = s.
  long double tail_lower_bound(int k, Int s) const {
    const long double m = t_ - k;
    const long double mean = (k + t_ - 1) / 2.0L;
    long double spread = 0;
    for (int j = k; j < t_; ++j) spread += (j - mean) * (j - mean);
    return t_ * static_cast<long double>(s) * s / m + 2 * mean * s - spread / t_;
  }

  void descend(int k, Int partial, Int sum) {
    if (k == t_ - 1) {
      const Int last = -sum;
      if (partial + term(k, last) == twice_n_) {
        cur_[static_cast<size_t>(k)] = last;
        out_.emplace_back(cur_);
      }
      return;
    }
    for (Int x = -radius_; x <= radius_; ++x) {
      const Int p = partial + term(k, x);
      if (static_cast<long double>(p) + tail_lower_bound(k + 1, -(sum + x)) > twice_n_ + 1e-6L) continue;
      cur_[static_cast<size_t>(k)] = x;
      descend(k + 1, p, sum + x);
    }
  }

  int t_;
  Int twice_n_;
  Int radius_ = 0;
  std::vector<Int> cur_;
  std::vector<NCoding> out_;
};

}  // namespace

NCoding::NCoding(std::vector<Int> e) : t(static_cast<int>(e.size())), entries(std::move(e)) {}

Int NCoding::sum() const noexcept { return std::accumulate(entries.begin(), entries.end(), Int{0}); }

std::string to_string(const NCoding& n) {
  std::string out = "[";
  for (size_t i = 0; i < n.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(n.entries[i]);
  }
  return out + ']';
}

NCoding ncoding_from_partition(const Partition& p, int t) {
  require_t(t);
  if (!is_t_core(p, t))
    throw DomainError(to_string(p) + " is not a " + std::to_string(t) + "-core; it has no N-coding");
  std::vector<Int> best(static_cast<size_t>(t));
  std::vector<bool> seen(static_cast<size_t>(t), false);
  auto expose = [&](Int row, Int col) {
    const Int diff = col - row;
    const auto label = static_cast<size_t>(mod(diff, t));
    const Int region = floor_div(diff, t) + 1;
    if (!seen[label] || region > best[label]) best[label] = region;
    seen[label] = true;
  };
  for (int j = 1; j <= p.length(); ++j) expose(j, p.part(j));
  // Column-0 cells below the diagram; the first t of them cover every label
  // and have the largest regions.
  for (int j = p.length() + 1; j <= p.length() + t; ++j) expose(j, 0);
  return NCoding(std::move(best));
}

Int size_from_ncoding(const NCoding& n) {
  if (n.sum() != 0) throw DomainError("N-coding " + to_string(n) + " does not sum to zero");
  Int norm = 0, dot = 0;
  for (int j = 0; j < n.t; ++j) {
    const Int x = n.entries[static_cast<size_t>(j)];
    norm += x * x;
    dot += j * x;
  }
  return n.t * norm / 2 + dot;
}

NCoding conjugate_ncoding(const NCoding& n) {
  std::vector<Int> e(n.entries.rbegin(), n.entries.rend());
  for (Int& x : e) x = -x;
  return NCoding(std::move(e));
}

bool is_self_conjugate(const NCoding& n) { return conjugate_ncoding(n) == n; }

Abacus abacus_from_ncoding(const NCoding& n, Int beads) {
  require_t(n.t);
  if (beads < 0) throw DomainError("bead count must be non-negative");
  std::vector<Int> counts(static_cast<size_t>(n.t), 0);
  for (int l = 0; l < n.t; ++l) {
    const Int alpha = (l + beads) / n.t;
    const Int beta = (l + beads) % n.t;
    counts[static_cast<size_t>(beta)] = n.entries[static_cast<size_t>(l)] + alpha;
  }
  if (std::any_of(counts.begin(), counts.end(), [](Int c) { return c < 0; }))
    throw DomainError("s too small: " + std::to_string(beads) + " beads cannot carry " + to_string(n));
  return Abacus(n.t, std::move(counts));
}

NCoding ncoding_from_abacus(const Abacus& a) {
  const Int beads = a.beads();
  std::vector<Int> e(static_cast<size_t>(a.t));
  for (int l = 0; l < a.t; ++l) {
    const Int alpha = (l + beads) / a.t;
    const Int beta = (l + beads) % a.t;
    e[static_cast<size_t>(l)] = a.counts[static_cast<size_t>(beta)] - alpha;
  }
  return NCoding(std::move(e));
}

Partition partition_from_ncoding(const NCoding& n) {
  if (n.sum() != 0) throw DomainError("N-coding " + to_string(n) + " does not sum to zero");
  Int deficit = 0;
  for (Int x : n.entries) deficit = std::max(deficit, -x);
  return partition_from_abacus(abacus_from_ncoding(n, n.t * (deficit + 1)));
}

double lattice_norm_bound(int t, Int n) {
  require_t(t);
  if (n < 0) return 0;
  const double u = t * (static_cast<double>(t) * t - 1) / 12.0;
  const double r = (std::sqrt(u) + std::sqrt(u + 2.0 * t * static_cast<double>(n))) / t;
  return r * r;
}

std::vector<NCoding> enumerate_t_cores_lattice(int t, Int n) {
  require_t(t);
  if (n < 0) return {};
  return LatticeSearch(t, n).run();
}

std::vector<NCoding> enumerate_sc_t_cores_lattice(int t, Int n) {
  require_t(t);
  if (n < 0) return {};
  // With n_k = -n_{t-1-k}: |lambda| = sum_{k<h} (t n_k^2 + (2k - t + 1) n_k).
  const int h = t / 2;
  const auto radius = static_cast<Int>(std::floor(std::sqrt(lattice_norm_bound(t, n) / 2) + 1e-9));
  auto term = [t](int k, Int x) { return t * x * x + (2 * k - t + 1) * x; };
  std::vector<Int> tail_min(static_cast<size_t>(h) + 1, 0);
  for (int k = h - 1; k >= 0; --k) {
    Int best = 0;
    for (Int x = -radius - 1; x <= radius + 1; ++x) best = std::min(best, term(k, x));
    tail_min[static_cast<size_t>(k)] = tail_min[static_cast<size_t>(k) + 1] + best;
  }
  std::vector<NCoding> out;
  std::vector<Int> free(static_cast<size_t>(h), 0);
  auto emit = [&] {
    std::vector<Int> e(static_cast<size_t>(t), 0);
    for (int k = 0; k < h; ++k) {
      e[static_cast<size_t>(k)] = free[static_cast<size_t>(k)];
      e[static_cast<size_t>(t - 1 - k)] = -free[static_cast<size_t>(k)];
    }
    out.emplace_back(std::move(e));
  };
  auto descend = [&](auto&& self, int k, Int partial) -> void {
    if (k == h) {
      if (partial == n) emit();
      return;
    }
    for (Int x = -radius; x <= radius; ++x) {
      const Int p = partial + term(k, x);
      if (p + tail_min[static_cast<size_t>(k) + 1] > n) continue;
      free[static_cast<size_t>(k)] = x;
      self(self, k + 1, p);
    }
  };
  descend(descend, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Int count_t_cores(int t, Int n) { return static_cast<Int>(enumerate_t_cores_lattice(t, n).size()); }

Int count_sc_t_cores(int t, Int n) { return static_cast<Int>(enumerate_sc_t_cores_lattice(t, n).size()); }

}  // namespace tcores
