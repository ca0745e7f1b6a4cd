#include "wpstab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wpstab/scenario.hpp"

namespace wpstab::verify {

namespace {

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

Scenario load_scenario(const Options& opt, const std::string& name) {
  return Scenario(ScenarioConfig::load_file(opt.data_dir + "/scenarios/" + name + ".json"));
}

CohClass random_class(const RingPtr& ring, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  CohClass v(ring);
  for (int k = 0; k < ring->size(); ++k) v[k] = Complex(n01(rng), n01(rng));
  return v;
}

Eigen::MatrixXi random_unimodular(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> shear(-2, 2);
  Eigen::MatrixXi p = Eigen::MatrixXi::Identity(n, n);
  for (int w = 0; w < 6; ++w) {
    const int i = pick(rng);
    int j = pick(rng);
    if (i == j) j = (j + 1) % n;
    Eigen::MatrixXi e = Eigen::MatrixXi::Identity(n, n);
    e(i, j) = shear(rng);
    p = p * e;
  }
  return p;
}

SiegelPoint random_h2_point(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  Eigen::MatrixXd a(2, 2), x(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = n01(rng);
      x(i, j) = n01(rng);
    }
  const Eigen::MatrixXd y = a * a.transpose() + 0.05 * Eigen::MatrixXd::Identity(2, 2);
  const Eigen::MatrixXd xs = 0.5 * (x + x.transpose());
  Eigen::MatrixXcd m = xs.cast<std::complex<double>>();
  m += Complex(0.0, 1.0) * y.cast<std::complex<double>>();
  return SiegelPoint(m);
}

// int_X (Im omega)^n through the ring.
double imag_power_integral(const CohClass& omega) {
  const RingPtr& ring = omega.ring();
  CohClass im(ring);
  for (int k = 0; k < ring->size(); ++k) im[k] = omega[k].imag();
  CohClass pow = im;
  for (int k = 1; k < ring->dim_n(); ++k) pow = multiply(pow, im);
  return integrate(pow).real();
}

// Kahler-cone section exp(omega) with coordinates drawn inside the cone.
CohClass random_cone_section(const Scenario& sc, std::mt19937_64& rng,
                             std::vector<Complex>* coords_out = nullptr) {
  std::uniform_real_distribution<double> re(-1.0, 1.0);
  std::uniform_real_distribution<double> impos(0.3, 3.0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<Complex> p;
  switch (sc.config().kind) {
    case ScenarioKind::elliptic:
    case ScenarioKind::abelian_nfold:
    case ScenarioKind::quintic:
      p = {Complex(re(rng), impos(rng))};
      break;
    case ScenarioKind::split_abelian:
      p = {Complex(re(rng), impos(rng)), Complex(re(rng), impos(rng))};
      break;
    case ScenarioKind::product_abelian:
    case ScenarioKind::siegel_compare: {
      const double ia = impos(rng), ib = impos(rng);
      const double is = (2.0 * u01(rng) - 1.0) * 0.9 * std::sqrt(ia * ib);
      p = {Complex(re(rng), ia), Complex(re(rng), ib), Complex(re(rng), is)};
      break;
    }
  }
  if (coords_out) *coords_out = p;
  return sc.section(p);
}

struct Checker {
  CriterionResult result;

  explicit Checker(int id, std::string title) {
    result.id = id;
    result.title = std::move(title);
    result.pass = true;
  }
  void check(bool ok, const std::string& text) {
    result.lines.push_back({text, ok});
    result.pass = result.pass && ok;
  }
};

CriterionResult criterion_elliptic_grid(const Options& opt) {
  Checker c(1, "elliptic curve: K_WP = -log(2 Im tau) and Poincare metric on a 20x20 grid");
  Scenario sc = load_scenario(opt, "elliptic");
  double max_dk = 0.0, max_rel_hess = 0.0;
  const ChartedPotential f = sc.wp_chart();
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const double x = -1.0 + 2.0 * i / 19.0;
      const double y = 0.1 + (5.0 - 0.1) * j / 19.0;
      const Complex tau(x, y);
      const double k = sc.wp({tau});
      max_dk = std::max(max_dk, std::abs(k - (-std::log(2.0 * y))));
      const HermitianForm g = complex_hessian(f, {tau}, sc.config().fd_step);
      const double exact = 1.0 / (4.0 * y * y);
      max_rel_hess = std::max(max_rel_hess, std::abs(g.g(0, 0).real() - exact) / exact);
      max_rel_hess = std::max(max_rel_hess, std::abs(g.g(0, 0).imag()) / exact);
    }
  c.check(max_dk <= 1e-12, "max |K_WP + log(2 Im tau)| = " + num(max_dk) + " <= 1e-12");
  c.check(max_rel_hess <= 1e-6,
          "max rel |Hess - 1/(4 Im^2 tau)| = " + num(max_rel_hess) + " <= 1e-6");
  return c.result;
}

CriterionResult criterion_b_mho(const Options& opt) {
  Checker c(2, "b(Z_O1, Z_O2) = (-1)^n <O1, O2> on the shipped rings, 100 seeded pairs each");
  const char* names[] = {"elliptic", "product_abelian", "split_abelian", "abelian3"};
  for (const char* name : names) {
    Scenario sc = load_scenario(opt, name);
    const StabilityModel& m = sc.model();
    std::mt19937_64 rng(opt.seed ^ std::hash<std::string>{}(name));
    const double sign = (m.dim_n() % 2 == 0) ? 1.0 : -1.0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const CohClass o1 = random_class(sc.ring(), rng);
      const CohClass o2 = random_class(sc.ring(), rng);
      const Complex lhs = m.bilinear(m.sample(o1), m.sample(o2));
      const Complex rhs = sign * mukai_pairing(o1, o2, m.chern());
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    c.check(worst <= 1e-12, std::string(name) + ": max |b - (-1)^n <.,.>| = " + num(worst));
  }
  // the twisted ring keeps both forms of the identity
  {
    Scenario sc = load_scenario(opt, "quintic");
    const StabilityModel& m = sc.model();
    std::mt19937_64 rng(opt.seed ^ 0x71u);
    const CohClass lambda = log_gamma_class(m.chern());
    const CohClass twist = exp_nilpotent(Complex(0.0, 2.0) * lambda);
    double worst_pair = 0.0, worst_conj = 0.0;
    for (int t = 0; t < 100; ++t) {
      const CohClass o1 = random_class(sc.ring(), rng);
      const CohClass o2 = random_class(sc.ring(), rng);
      const Complex lhs = m.bilinear(m.sample(o1), m.sample(o2));
      worst_pair = std::max(worst_pair, std::abs(lhs + mukai_pairing(o1, o2, m.chern())));
      const CentralCharge z = m.sample(o1);
      const Complex lhs2 = m.bilinear(z, z.conj());
      const Complex rhs2 = -mukai_pairing(o1, multiply(o1.conj(), twist), m.chern());
      worst_conj = std::max(worst_conj, std::abs(lhs2 - rhs2));
    }
    c.check(worst_pair <= 1e-12, "quintic: max |b - (-1)^n <.,.>| = " + num(worst_pair));
    c.check(worst_conj <= 1e-12,
            "quintic conj form with exp(2 i Lambda): max diff = " + num(worst_conj));
  }
  return c.result;
}

CriterionResult criterion_basis_independence(const Options& opt) {
  Checker c(3, "b is independent of the basis: 50 seeded unimodular changes per ring");
  const char* names[] = {"elliptic", "product_abelian", "split_abelian", "abelian3", "quintic"};
  for (const char* name : names) {
    Scenario sc = load_scenario(opt, name);
    const StabilityModel& m = sc.model();
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ull + std::hash<std::string>{}(name)));
    const int nb = m.basis().size();
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Eigen::MatrixXi p = random_unimodular(nb, rng);
      MukaiBasis changed;
      for (int i = 0; i < nb; ++i) {
        CohClass w(sc.ring());
        for (int j = 0; j < nb; ++j)
          if (p(i, j) != 0)
            w += double(p(i, j)) * m.basis().vectors[std::size_t(j)];
        changed.vectors.push_back(w);
        changed.labels.push_back("w" + std::to_string(i));
      }
      const ChiMatrix chi2 = euler_matrix(changed, m.chern());
      const CohClass o1 = random_class(sc.ring(), rng);
      const CohClass o2 = random_class(sc.ring(), rng);
      const Complex b_old = m.bilinear(m.sample(o1), m.sample(o2));
      const Complex b_new = bilinear_b(sample_charge(o1, changed, m.chern()),
                                       sample_charge(o2, changed, m.chern()), chi2);
      worst = std::max(worst, std::abs(b_old - b_new));
    }
    c.check(worst <= 1e-10, std::string(name) + ": max |delta b| = " + num(worst));
  }
  return c.result;
}

CriterionResult criterion_wp_b(const Options& opt) {
  Checker c(4, "positivity and K_WP closed form (2^n/n!) (Im omega)^n, 100 cone points per ring");
  const char* names[] = {"elliptic", "product_abelian", "split_abelian", "abelian3"};
  for (const char* name : names) {
    Scenario sc = load_scenario(opt, name);
    const StabilityModel& m = sc.model();
    std::mt19937_64 rng(opt.seed ^ (0x5851f42d4c957f2dull + std::hash<std::string>{}(name)));
    const int n = m.dim_n();
    double worst_bzz = 0.0, worst_im = 0.0, worst_rel = 0.0;
    bool all_positive = true;
    for (int t = 0; t < 100; ++t) {
      std::vector<Complex> coords;
      const CohClass section = random_cone_section(sc, rng, &coords);
      const CentralCharge z = m.sample(section);
      worst_bzz = std::max(worst_bzz, std::abs(m.bilinear(z, z)));
      const Complex w = m.positivity_pairing(section);
      worst_im = std::max(worst_im, std::abs(w.imag()));
      all_positive = all_positive && (w.real() > 0.0) && m.stab_plus(section);
      CohClass omega(sc.ring());
      {
        // rebuild omega from the chart coordinates
        std::vector<int> deg2;
        for (int k = 0; k < sc.ring()->size(); ++k)
          if (sc.ring()->degree(k) == 2) deg2.push_back(k);
        for (std::size_t k = 0; k < coords.size(); ++k) omega[deg2[k]] = coords[k];
      }
      double closed = imag_power_integral(omega);
      for (int k = 1; k <= n; ++k) closed *= 2.0 / double(k);
      worst_rel = std::max(worst_rel, std::abs(w.real() - closed) / std::abs(closed));
    }
    c.check(worst_bzz <= 1e-9, std::string(name) + ": max |b(Z,Z)| = " + num(worst_bzz));
    c.check(all_positive && worst_im <= 1e-9,
            std::string(name) + ": i^{-n} b(Z, conj Z) real positive (max Im " + num(worst_im) + ")");
    c.check(worst_rel <= 1e-10,
            std::string(name) + ": closed form rel err = " + num(worst_rel) + " <= 1e-10");
  }
  return c.result;
}

CriterionResult criterion_bergman_identification(const Options& opt) {
  Checker c(5, "K_WP - K_Ber = log 2 on H_2 (200 seeded points) and on the split diagonal");
  {
    Scenario sc = load_scenario(opt, "product_abelian");
    std::mt19937_64 rng(opt.seed ^ 0xb5297a4d3a2d9ull);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const SiegelPoint m = random_h2_point(rng);
      const Complex rho = m.matrix()(0, 0), tau = m.matrix()(1, 1), sigma = m.matrix()(0, 1);
      const double k_wp = sc.wp({rho, tau, sigma});
      const double k_ber = bergman_potential(m);
      worst = std::max(worst, std::abs(k_wp - k_ber - kLog2));
    }
    c.check(worst <= 1e-9, "H_2 tube domain: max |K_WP - K_Ber - log 2| = " + num(worst));
  }
  {
    Scenario sc = load_scenario(opt, "split_abelian");
    std::mt19937_64 rng(opt.seed ^ 0x2545f4914f6cdd1dull);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    std::uniform_real_distribution<double> im(0.05, 4.0);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Complex t1(re(rng), im(rng)), t2(re(rng), im(rng));
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
      m(0, 0) = t1;
      m(1, 1) = t2;
      const double k_wp = sc.wp({t1, t2});
      const double k_ber = bergman_potential(SiegelPoint(m));
      worst = std::max(worst, std::abs(k_wp - k_ber - kLog2));
    }
    c.check(worst <= 1e-9, "split diagonal H x H: max |K_WP - K_Ber - log 2| = " + num(worst));
  }
  return c.result;
}

CriterionResult criterion_tube_domain(const Options& opt) {
  Checker c(6, "stab+ membership of exp(omega) matches Im(M_omega) > 0, 500 seeded triples");
  Scenario sc = load_scenario(opt, "product_abelian");
  const StabilityModel& m = sc.model();
  std::mt19937_64 rng(opt.seed ^ 0x853c49e6748fea9bull);
  std::uniform_real_distribution<double> re(-1.0, 1.0);
  std::uniform_real_distribution<double> im_rho(0.2, 2.5);
  std::uniform_real_distribution<double> im_any(-2.5, 2.5);
  int disagreements = 0, positives = 0;
  for (int t = 0; t < 500; ++t) {
    double ia, ib, is;
    do {
      ia = im_rho(rng);
      ib = im_any(rng);
      is = im_any(rng);
    } while (std::abs(ia * ib - is * is) < 1e-6);  // stay off the boundary
    const Complex rho(re(rng), ia), tau(re(rng), ib), sigma(re(rng), is);
    CohClass omega(sc.ring());
    {
      std::vector<int> deg2;
      for (int k = 0; k < sc.ring()->size(); ++k)
        if (sc.ring()->degree(k) == 2) deg2.push_back(k);
      omega[deg2[0]] = rho;
      omega[deg2[1]] = tau;
      omega[deg2[2]] = sigma;
    }
    const bool in_stab = m.stab_plus(exp_class(omega));
    const bool pd = ia > 0.0 && ia * ib - is * is > 0.0;
    if (pd) ++positives;
    if (in_stab != pd) ++disagreements;
  }
  c.check(disagreements == 0, "disagreements = " + std::to_string(disagreements) + " of 500 (" +
                                  std::to_string(positives) + " inside the cone)");
  return c.result;
}

CriterionResult criterion_sp_descent(const Options& opt) {
  Checker c(7, "Sp(4,Z) descent: transform law and pulled-back Bergman Hessian, 50 seeded words");
  std::mt19937_64 rng(opt.seed ^ 0xda3e39cb94b95bdbull);
  double worst_law = 0.0, worst_hess = 0.0;
  const ChartedPotential base = ChartedPotential::unguarded(3, [](const std::vector<Complex>& p) {
    return bergman_potential(omega_to_M(p[0], p[1], p[2]));
  });
  for (int t = 0; t < 50; ++t) {
    const SymplecticElement gamma = random_symplectic(2, rng);
    const SiegelPoint m = random_h2_point(rng);
    worst_law = std::max(worst_law, bergman_transform_law(gamma, m));

    const ChartedPotential pulled =
        ChartedPotential::unguarded(3, [&gamma](const std::vector<Complex>& p) {
          return bergman_potential(sp_action(gamma, omega_to_M(p[0], p[1], p[2])));
        });
    const std::vector<Complex> coords = {m.matrix()(0, 0), m.matrix()(1, 1), m.matrix()(0, 1)};
    const HermitianForm g0 = complex_hessian(base, coords, 1e-4);
    const HermitianForm g1 = complex_hessian(pulled, coords, 1e-4);
    const double rel = (g1.g - g0.g).norm() / g0.g.norm();
    worst_hess = std::max(worst_hess, rel);
  }
  c.check(worst_law <= 1e-9, "max transform-law residual = " + num(worst_law) + " <= 1e-9");
  c.check(worst_hess <= 1e-4, "max rel Hessian deviation = " + num(worst_hess) + " <= 1e-4");
  return c.result;
}

CriterionResult criterion_gamma(const Options& opt) {
  Checker c(8, "Gamma machinery: series identity, surface Lambda, quintic Lambda coefficient");
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double z = -4.75 + 9.5 * double(k) / 19.0;
    worst = std::max(worst, gamma_identity_check(z, 110));
  }
  c.check(worst <= 1e-10, "max Gamma identity residual on (-5,5), order 110: " + num(worst));

  for (const char* name : {"product_abelian", "split_abelian"}) {
    Scenario sc = load_scenario(opt, name);
    const CohClass lambda = log_gamma_class(ChernData::trivial(sc.ring()));
    c.check(lambda.is_zero(0.0), std::string("Lambda_X == 0 exactly on ") + name);
  }

  Scenario sc = load_scenario(opt, "quintic");
  const CohClass lambda = log_gamma_class(sc.model().chern());
  const int ih3 = sc.ring()->index_of("H3");
  const double expected = 40.0 * kZeta3 / std::pow(kTwoPi, 3);
  const double diff = std::abs(lambda[ih3] - Complex(expected));
  c.check(diff <= 1e-12,
          "quintic Lambda degree-6 coefficient vs 40 zeta(3)/(2 pi)^3: diff = " + num(diff));
  return c.result;
}

CriterionResult criterion_quintic(const Options& opt) {
  Checker c(9, "quintic large-volume asymptotics, metric positivity, first-order q-correction");
  Scenario sc = load_scenario(opt, "quintic");
  const QuinticModel& qm = *sc.quintic();

  // (a) asymptotics against -log((20/3) y^3) + C0, C0 fitted at y = 50
  {
    auto model_value = [&](double y) { return -std::log(20.0 / 3.0 * y * y * y); };
    const double c0 = qm.wp_potential(Complex(0.0, 50.0)) - model_value(50.0);
    bool ok = true;
    std::ostringstream detail;
    for (double y : {5.0, 10.0, 20.0, 50.0}) {
      const double r = std::abs(qm.wp_potential(Complex(0.0, y)) - (model_value(y) + c0));
      const double tol = 10.0 * std::exp(-kTwoPi * y);
      ok = ok && r <= tol;
      detail << " y=" << y << ": " << num(r) << (r <= tol ? " <= " : " > ") << num(tol);
    }
    c.check(ok, "asymptotic residuals vs 10 e^{-2 pi y}:" + detail.str());
  }

  // (b) metric positivity for Im tau >= 2
  {
    bool positive = true;
    double min_g = 1e300;
    const ChartedPotential f = sc.wp_chart();
    for (double y : {2.0, 3.0, 5.0, 10.0})
      for (double x : {-0.4, 0.0, 0.4}) {
        const HermitianForm g = complex_hessian(f, {Complex(x, y)}, sc.config().fd_step);
        min_g = std::min(min_g, g.g(0, 0).real());
        positive = positive && g.g(0, 0).real() > 0.0;
      }
    c.check(positive, "Hessian positive for Im tau >= 2 (min " + num(min_g) + ")");
  }

  // (c) first-order agreement of K(gw) - K(0) with -log Phi(q), Lambda off,
  //     pure imaginary tau; Richardson step in q
  {
    const QuinticModel plain = qm.variant(TwistMode::none, qm.gw());
    const QuinticModel classical = plain.classical();
    auto diff_at_q = [&](double q) {
      const double y = -std::log(q) / kTwoPi;
      const Complex tau(0.0, y);
      return plain.wp_potential(tau) - classical.wp_potential(tau);
    };
    const double q = 1e-8;
    const double fd = (4.0 * diff_at_q(q / 2.0) - diff_at_q(q)) / q;
    const double target = -qm.gw().invariants[0] / 5.0;  // q-coefficient of -log Phi
    const double rel = std::abs(fd - target) / std::abs(target);
    c.check(rel <= 1e-6, "first-order q-coefficient " + num(fd) + " vs -N_1/5 = " + num(target) +
                             " (rel " + num(rel) + ")");
  }
  return c.result;
}

CriterionResult criterion_section_independence(const Options& opt) {
  Checker c(10, "Hessian unchanged under holomorphic rescaling of the section");
  std::mt19937_64 rng(opt.seed ^ 0xc2b2ae3d27d4eb4full);
  std::uniform_real_distribution<double> u(-0.3, 0.3);

  {
    Scenario sc = load_scenario(opt, "elliptic");
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      const Complex a0(1.0 + u(rng), u(rng));
      const Complex a1(u(rng), u(rng));
      for (const Complex tau0 : {Complex(0.2, 0.9), Complex(-0.4, 1.7), Complex(0.0, 3.0)}) {
        const ChartedPotential rescaled =
            ChartedPotential::unguarded(1, [&](const std::vector<Complex>& p) {
              const Complex cfun = a0 + a1 * (p[0] - tau0);
              return sc.model().wp_potential(sc.section(p) * cfun);
            });
        const HermitianForm g0 = complex_hessian(sc.wp_chart(), {tau0}, sc.config().fd_step);
        const HermitianForm g1 = complex_hessian(rescaled, {tau0}, sc.config().fd_step);
        worst = std::max(worst, (g1.g - g0.g).cwiseAbs().maxCoeff());
      }
    }
    c.check(worst <= 1e-6, "elliptic chart: max Hessian change = " + num(worst) + " <= 1e-6");
  }
  {
    Scenario sc = load_scenario(opt, "product_abelian");
    double worst = 0.0;
    const std::vector<Complex> base = {Complex(0.1, 1.2), Complex(-0.2, 0.9), Complex(0.05, 0.3)};
    for (int t = 0; t < 5; ++t) {
      const Complex a0(1.0 + u(rng), u(rng));
      const Complex a1(u(rng), u(rng)), a2(u(rng), u(rng)), a3(u(rng), u(rng));
      const ChartedPotential rescaled =
          ChartedPotential::unguarded(3, [&](const std::vector<Complex>& p) {
            const Complex cfun =
                a0 + a1 * (p[0] - base[0]) + a2 * (p[1] - base[1]) + a3 * (p[2] - base[2]);
            return sc.model().wp_potential(sc.section(p) * cfun);
          });
      const HermitianForm g0 = complex_hessian(sc.wp_chart(), base, sc.config().fd_step);
      const HermitianForm g1 = complex_hessian(rescaled, base, sc.config().fd_step);
      worst = std::max(worst, (g1.g - g0.g).cwiseAbs().maxCoeff());
    }
    c.check(worst <= 1e-6, "surface chart: max Hessian change = " + num(worst) + " <= 1e-6");
  }
  return c.result;
}

}  // namespace

CriterionResult run_criterion(int id, const Options& opt) {
  switch (id) {
    case 1: return criterion_elliptic_grid(opt);
    case 2: return criterion_b_mho(opt);
    case 3: return criterion_basis_independence(opt);
    case 4: return criterion_wp_b(opt);
    case 5: return criterion_bergman_identification(opt);
    case 6: return criterion_tube_domain(opt);
    case 7: return criterion_sp_descent(opt);
    case 8: return criterion_gamma(opt);
    case 9: return criterion_quintic(opt);
    case 10: return criterion_section_independence(opt);
    default: throw std::invalid_argument("unknown criterion id " + std::to_string(id));
  }
}

std::vector<int> criteria_for_suite(const std::string& suite) {
  if (suite == "lemmas") return {2, 3};
  if (suite == "wpb") return {4, 6};
  if (suite == "bergman") return {5, 7};
  if (suite == "quintic") return {9};
  if (suite == "gamma") return {8};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<CriterionResult> run_suite(const std::string& suite, const Options& opt) {
  std::vector<CriterionResult> out;
  for (int id : criteria_for_suite(suite)) out.push_back(run_criterion(id, opt));
  return out;
}

std::string format_result(const CriterionResult& r, bool verbose) {
  std::ostringstream out;
  out << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.title << "\n";
  for (const CheckLine& line : r.lines)
    if (verbose || !line.pass)
      out << "    " << (line.pass ? "ok  " : "FAIL") << "  " << line.text << "\n";
  return out.str();
}

}  // namespace wpstab::verify
