#include "agbounds/codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace agc {

std::vector<std::size_t> evaluation_points(const Curve& curve, const Divisor& g) {
  const Support s = support_for(g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < curve.points().size(); ++i) {
    if (i == curve.infinity_index() && uses_place(s, Place::kInfinity)) continue;
    if (i == curve.origin_index() && uses_place(s, Place::kOrigin)) continue;
    out.push_back(i);
  }
  return out;
}

Divisor minus_evaluation_set(const Curve& curve, const Divisor& g) {
  Divisor out{g.inf, g.origin, {}};
  std::vector<std::size_t> affine;
  for (std::size_t p : evaluation_points(curve, g)) {
    if (p == curve.infinity_index()) {
      --out.inf;
    } else if (p == curve.origin_index()) {
      --out.origin;
    } else {
      affine.push_back(p);
    }
  }
  return out.minus_points(std::move(affine));
}

namespace {

Matrix echelon_of(const Field& f, Matrix m, std::size_t cols) {
  if (m.rows() == 0) return Matrix(0, cols);
  return row_reduce(f, std::move(m)).echelon;
}

}  // namespace

Code cl_code(const RiemannRoch& rr, const Divisor& g) {
  if (!g.is_two_point()) throw std::invalid_argument("codes need a two-point divisor");
  const Curve& curve = rr.curve();
  Code code;
  code.kind = CodeKind::kEvaluation;
  code.curve = curve.name();
  code.divisor = g;
  code.points = evaluation_points(curve, g);
  const std::size_t n = code.points.size();

  const FunctionBasis basis = rr.function_basis(g);
  Matrix values(0, n);
  Vector row(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = rr.evaluate(basis, i, curve.points()[code.points[j]]);
    values.append_row(row);
  }
  code.generator = echelon_of(curve.field(), std::move(values), n);

  const int expected = rr.dim(g) - rr.dim(minus_evaluation_set(curve, g));
  if (static_cast<int>(code.dimension()) != expected) {
    throw std::logic_error("C_L rank " + std::to_string(code.dimension()) + " != l(G) - l(G-D) = " +
                           std::to_string(expected) + " for " + to_string(g));
  }
  return code;
}

Code dual(const Field& f, const Code& c) {
  Code out = c;
  out.kind = c.kind == CodeKind::kEvaluation ? CodeKind::kResidue : CodeKind::kEvaluation;
  const std::size_t n = c.length();
  if (c.dimension() == 0) {
    out.generator = Matrix::identity(f, n);
    return out;
  }
  const auto null = row_reduce(f, c.generator).nullspace;
  out.generator = echelon_of(f, Matrix::from_rows(null, n), n);
  return out;
}

Code comega_code(const RiemannRoch& rr, const Divisor& g) {
  Code code = dual(rr.curve().field(), cl_code(rr, g));
  const int expected = rr.index_of_specialty(minus_evaluation_set(rr.curve(), g)) - rr.index_of_specialty(g);
  if (static_cast<int>(code.dimension()) != expected) {
    throw std::logic_error("C_Omega dimension " + std::to_string(code.dimension()) +
                           " != i(G-D) - i(G) = " + std::to_string(expected) + " for " + to_string(g));
  }
  return code;
}

namespace {

void check_budget(const Field& f, const Code& c, std::uint64_t budget) {
  if (c.dimension() == 0) throw std::invalid_argument("trivial code");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (total > budget / static_cast<std::uint64_t>(f.order())) throw std::length_error("budget exceeded");
    total *= static_cast<std::uint64_t>(f.order());
  }
}

// Walks every codeword whose first nonzero message coefficient is 1. Work is
// split into units (lead row, coefficient of the next row) so threads can
// share it.
class ProjectiveWalk {
 public:
  ProjectiveWalk(const Field& f, const Code& c) : f_(f), k_(c.dimension()), n_(c.length()) {
    const int q = f.order();
    multiples_.assign(k_ * q, Vector(n_));
    for (std::size_t i = 0; i < k_; ++i) {
      const auto row = c.generator.row(i);
      for (int a = 0; a < q; ++a) {
        for (std::size_t j = 0; j < n_; ++j) multiples_[i * q + a][j] = f.mul(f.element(a), row[j]);
      }
    }
    for (std::size_t lead = 0; lead < k_; ++lead) {
      if (lead + 1 == k_) {
        units_.push_back({lead, -1});
      } else {
        for (int a = 0; a < q; ++a) units_.push_back({lead, a});
      }
    }
  }

  std::size_t units() const { return units_.size(); }

  // Calls visit(weight) for each codeword of the unit.
  template <typename Visit>
  void run(std::size_t unit, Visit&& visit) const {
    const auto [lead, next] = units_[unit];
    const int q = f_.order();
    std::vector<Vector> partial(k_ + 1, Vector(n_));
    partial[lead + 1] = multiples_[lead * q + 1];
    std::size_t start = lead + 1;
    if (next >= 0) {
      add_into(partial[lead + 1], multiples_[(lead + 1) * q + next], partial[lead + 2]);
      start = lead + 2;
    }
    descend(start, partial, visit);
  }

 private:
  struct Unit {
    std::size_t lead;
    int next;
  };

  void add_into(const Vector& a, const Vector& b, Vector& out) const {
    for (std::size_t j = 0; j < n_; ++j) out[j] = f_.add(a[j], b[j]);
  }

  template <typename Visit>
  void descend(std::size_t level, std::vector<Vector>& partial, Visit& visit) const {
    if (level == k_) {
      int w = 0;
      for (Element e : partial[k_]) w += e != f_.zero();
      visit(w);
      return;
    }
    const int q = f_.order();
    for (int a = 0; a < q; ++a) {
      add_into(partial[level], multiples_[level * q + a], partial[level + 1]);
      descend(level + 1, partial, visit);
    }
  }

  const Field& f_;
  std::size_t k_;
  std::size_t n_;
  std::vector<Vector> multiples_;  // [row * q + a] = a * row
  std::vector<Unit> units_;
};

}  // namespace

int min_distance_exhaustive(const Field& f, const Code& c, std::uint64_t budget, int threads) {
  check_budget(f, c, budget);
  const ProjectiveWalk walk(f, c);
  std::atomic<std::size_t> next{0};
  std::atomic<int> best{std::numeric_limits<int>::max()};
  auto worker = [&] {
    int local = std::numeric_limits<int>::max();
    for (std::size_t u = next++; u < walk.units(); u = next++) {
      walk.run(u, [&](int w) { local = std::min(local, w); });
    }
    int seen = best.load();
    while (local < seen && !best.compare_exchange_weak(seen, local)) {
    }
  };
  const int n = std::clamp<int>(threads, 1, static_cast<int>(walk.units()));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return best.load();
}

std::vector<std::uint64_t> weight_distribution(const Field& f, const Code& c, std::uint64_t budget) {
  std::vector<std::uint64_t> counts(c.length() + 1, 0);
  counts[0] = 1;
  if (c.dimension() == 0) return counts;
  check_budget(f, c, budget);
  const ProjectiveWalk walk(f, c);
  const auto scale = static_cast<std::uint64_t>(f.order() - 1);
  for (std::size_t u = 0; u < walk.units(); ++u) {
    walk.run(u, [&](int w) { counts[w] += scale; });
  }
  return counts;
}

SoundnessReport verify_soundness(const BoundSearch& search, int deg_lo, int deg_hi, int window,
                                 std::uint64_t budget, int threads) {
  const RiemannRoch& rr = search.rr();
  const Field& f = rr.curve().field();
  SoundnessReport report;
  for (int a = -window; a <= window; ++a) {
    for (int d = deg_lo; d <= deg_hi; ++d) {
      const int b = d - a;
      if (b < -window || b > window) continue;
      const Divisor g{a, b, {}};
      const Code code = comega_code(rr, g);
      SoundnessCase sc;
      sc.g = g;
      try {
        sc.distance = min_distance_exhaustive(f, code, budget, threads);
      } catch (const std::invalid_argument&) {
        ++report.skipped;
        continue;
      } catch (const std::length_error&) {
        ++report.skipped;
        continue;
      }

      auto fail = [&](const std::string& what) {
        report.violations.push_back(to_string(g) + ": " + what + " (distance " + std::to_string(sc.distance) + ")");
      };
      auto take = [&](Method m, int* slot) {
        auto r = search.best(g, m);
        if (!r) return;
        *slot = r->value;
        std::string why;
        if (!search.verify(*r, &why)) fail(std::string(method_name(m)) + " witness rejected: " + why);
      };
      sc.designed = search.designed_distance(g);
      take(Method::kFloor, &sc.floor);
      take(Method::kKirfelPellikaan, &sc.kp);
      take(Method::kAsymmetricFloor, &sc.af);
      if (sc.distance < sc.af) fail("af " + std::to_string(sc.af) + " exceeds the true distance");
      if (sc.af < std::max({sc.designed, sc.floor, sc.kp})) fail("af is below another bound");
      report.checked.push_back(sc);
    }
  }
  return report;
}

}  // namespace agc
