#include "gencheb/matrix_unit.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "gencheb/errors.hpp"

namespace gencheb {

namespace {

const GaussianRational kHalf{BigRational(1, 2)};

Mat2 identity() { return Mat2::identity(); }

}  // namespace

const std::array<Mat2, 3>& pauli_matrices() {
  static const std::array<Mat2, 3> sigma{
      Mat2{{0, 1}, {1, 0}},
      Mat2{{0, -GaussianRational::i()}, {GaussianRational::i(), 0}},
      Mat2{{1, 0}, {0, -1}},
  };
  return sigma;
}

PauliCoords pauli_decompose(const Mat2& m) {
  PauliCoords c;
  c.alpha = (m(0, 0) + m(1, 1)) * kHalf;
  c.beta3 = (m(0, 0) - m(1, 1)) * kHalf;
  c.beta1 = (m(0, 1) + m(1, 0)) * kHalf;
  c.beta2 = GaussianRational::i() * (m(0, 1) - m(1, 0)) * kHalf;
  c.gamma = -c.alpha * c.alpha + c.beta1 * c.beta1 + c.beta2 * c.beta2 + c.beta3 * c.beta3;
  return c;
}

Mat2 pauli_recompose(const PauliCoords& c) {
  const auto& sigma = pauli_matrices();
  return c.alpha * identity() + c.beta1 * sigma[0] + c.beta2 * sigma[1] + c.beta3 * sigma[2];
}

Mat2 mat_quadratic_check(const Mat2& m) {
  const PauliCoords c = pauli_decompose(m);
  return m * m - c.gamma * identity() - (GaussianRational(2) * c.alpha) * m;
}

MatPowerMethod parse_mat_power_method(const std::string& name) {
  if (name == "chebyshev") return MatPowerMethod::chebyshev;
  if (name == "squaring") return MatPowerMethod::squaring;
  if (name == "general_recurrence" || name == "general") return MatPowerMethod::general_recurrence;
  throw UsageError("unknown matrix power method '" + name + "' (expected chebyshev, squaring or general_recurrence)");
}

const char* to_string(MatPowerMethod method) {
  switch (method) {
    case MatPowerMethod::chebyshev:
      return "chebyshev";
    case MatPowerMethod::squaring:
      return "squaring";
    case MatPowerMethod::general_recurrence:
      return "general_recurrence";
  }
  return "?";
}

GaussianRational second_kind_at(long n, const GaussianRational& x) {
  if (n < -2) throw DomainError("second_kind_at: index below -2");
  GaussianRational prev(-1);  // U_{-2}
  GaussianRational cur(0);    // U_{-1}
  const GaussianRational two_x = GaussianRational(2) * x;
  for (long k = -1; k < n; ++k) {
    GaussianRational next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == -2 ? prev : cur;
}

Mat2 mat_power(const Mat2& m, long n, MatPowerMethod method) {
  if (n < 0) throw DomainError("mat_power: negative exponent " + std::to_string(n));
  switch (method) {
    case MatPowerMethod::squaring:
      return matrix_power(m, n);
    case MatPowerMethod::chebyshev: {
      const GaussianRational det = m.determinant();
      if (!det.is_one()) {
        throw PreconditionError("chebyshev matrix power requires det(M) = 1, got det(M) = " + det.to_string());
      }
      const GaussianRational alpha = (m(0, 0) + m(1, 1)) * kHalf;
      return second_kind_at(n - 1, alpha) * m - second_kind_at(n - 2, alpha) * identity();
    }
    case MatPowerMethod::general_recurrence: {
      if (n == 0) return identity();
      const PauliCoords c = pauli_decompose(m);
      const GaussianRational two_alpha = GaussianRational(2) * c.alpha;
      GaussianRational p_prev(0);  // p_0
      GaussianRational p_cur(1);   // p_1
      for (long k = 1; k < n; ++k) {
        GaussianRational next = two_alpha * p_cur + c.gamma * p_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(next);
      }
      return p_cur * m + (c.gamma * p_prev) * identity();
    }
  }
  throw std::logic_error("unknown matrix power method");
}

std::size_t max_coeff_bits(const Mat2& m) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) best = std::max(best, m(i, j).bits());
  }
  return best;
}

std::vector<BenchRow> bench_power(const Mat2& m, std::span<const long> sizes, unsigned trials) {
  if (trials == 0) throw UsageError("bench_power: trials must be positive");
  if (sizes.empty()) throw UsageError("bench_power: exponent list is empty");
  if (!m.determinant().is_one()) {
    throw PreconditionError("bench_power needs a unimodular matrix, got det(M) = " + m.determinant().to_string());
  }
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (long n : sizes) {
    Mat2 reference;
    for (MatPowerMethod method : {MatPowerMethod::chebyshev, MatPowerMethod::squaring}) {
      std::vector<double> samples;
      samples.reserve(trials);
      Mat2 result;
      for (unsigned t = 0; t < trials; ++t) {
        const auto start = Clock::now();
        result = mat_power(m, n, method);
        samples.push_back(std::chrono::duration<double, std::nano>(Clock::now() - start).count());
      }
      std::sort(samples.begin(), samples.end());
      const std::size_t mid = samples.size() / 2;
      const double median = samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
      if (method == MatPowerMethod::chebyshev) {
        reference = result;
      } else if (!(result == reference)) {
        throw std::logic_error("bench_power: chebyshev and squaring disagree at n = " + std::to_string(n));
      }
      rows.push_back({to_string(method), n, median, max_coeff_bits(result)});
    }
  }
  return rows;
}

}  // namespace gencheb
