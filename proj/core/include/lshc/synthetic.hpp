#pragma once

#include <span>
#include <string>
#include <vector>

#include "lshc/classifier.hpp"
#include "lshc/rng.hpp"

namespace lshc {

// Labeled-data generator with a uniform marginal on [0,1]^d and a known
// Holder-smooth regression function eta(x) = P(Y=1 | X=x). Each built-in
// family declares valid (alpha, L) constants and has a closed-form optimal
// risk that the cached quadrature value can be checked against.
//
// Built-ins (all driven by the first coordinate):
//   smooth-sine    eta(x) = (1 + sin(2 pi x_1)) / 2          alpha = 1, L = pi
//   holder-power   eta(x) = 1/2 + sign(2x_1 - 1)|2x_1 - 1|^alpha / 2,
//                  alpha in (0, 1], L = 1
//   constant       eta(x) = q                                 L = 0
class SyntheticTask {
 public:
  static SyntheticTask smooth_sine(int d);
  static SyntheticTask holder_power(int d, double alpha);
  static SyntheticTask constant(int d, double value);
  // `param` is alpha for holder-power, the constant value for constant,
  // and ignored for smooth-sine.
  static SyntheticTask make(const std::string& name, int d, double param = 1.0);

  const std::string& name() const { return name_; }
  int dim() const { return d_; }
  double holder_alpha() const { return alpha_; }
  double holder_constant() const { return holder_L_; }

  double eta(std::span<const double> x) const;

  // Optimal risk E[min(eta, 1 - eta)], integrated at construction: tensor
  // quadrature to 1e-6 for d <= 2, Halton quasi-random integration with a
  // reported error estimate for d > 2.
  double bayes_risk() const { return bayes_risk_; }
  double bayes_risk_error() const { return bayes_err_; }

  // Optimal classifier: 1 iff eta(x) > 1/2 (ties to 0).
  int bayes_predict(std::span<const double> x) const;

  // n iid examples: x uniform on the cube, y ~ Bernoulli(eta(x)).
  std::vector<LabeledExample> sample(std::size_t n, Rng& rng) const;

 private:
  enum class Family { smooth_sine_f, holder_power_f, constant_f };

  SyntheticTask(Family family, std::string name, int d, double param);
  void compute_bayes_risk();

  Family family_;
  std::string name_;
  int d_;
  double param_;
  double alpha_ = 1.0;
  double holder_L_ = 0.0;
  double bayes_risk_ = 0.0;
  double bayes_err_ = 0.0;
};

}  // namespace lshc
