#include "lfl/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace lfl::quad {

std::complex<double> composite_gauss_legendre(const std::function<std::complex<double>(double)>& f,
                                              double a, double b, int panels) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double h = (b - a) / panels;
  std::complex<double> total{0.0, 0.0};
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    std::complex<double> panel{0.0, 0.0};
    // 20 nodes: the rule stores the 10 non-negative abscissae.
    for (std::size_t j = 0; j < x.size(); ++j) {
      panel += w[j] * (f(mid + half * x[j]) + f(mid - half * x[j]));
    }
    total += half * panel;
  }
  return total;
}

Result adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol, &err);
  return {v, err};
}

Result half_line_singular(const std::function<std::complex<double>(double)>& f, double tol) {
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  double e1 = 0, e2 = 0, e3 = 0, e4 = 0;
  const double re0 = ts.integrate([&](double x) { return f(x).real(); }, 0.0, 1.0, tol, &e1);
  const double im0 = ts.integrate([&](double x) { return f(x).imag(); }, 0.0, 1.0, tol, &e2);
  const double re1 = es.integrate([&](double x) { return f(x).real(); }, 1.0,
                                  std::numeric_limits<double>::infinity(), tol, &e3);
  const double im1 = es.integrate([&](double x) { return f(x).imag(); }, 1.0,
                                  std::numeric_limits<double>::infinity(), tol, &e4);
  return {{re0 + re1, im0 + im1}, e1 + e2 + e3 + e4};
}

}  // namespace lfl::quad
