#include "catbreed/fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace catbreed {

namespace {

constexpr double kHermitianTol = 1e-10;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

/// Coherent state |alpha> truncated to `dim` levels.
Eigen::VectorXcd coherent_ket(double alpha, int dim) {
  Eigen::VectorXcd ket(dim);
  const double la = std::abs(alpha) > 0 ? std::log(std::abs(alpha)) : 0.0;
  for (int n = 0; n < dim; ++n) {
    if (alpha == 0.0) {
      ket(n) = (n == 0) ? 1.0 : 0.0;
      continue;
    }
    const double mag = std::exp(-0.5 * alpha * alpha + n * la - 0.5 * log_factorial(n));
    ket(n) = (alpha < 0.0 && n % 2 == 1) ? -mag : mag;
  }
  return ket;
}

/// Squeeze operator exp[(r/2)(a^2 - a^dag^2)] via the standard recurrence;
/// squeezes x for r > 0.
Eigen::MatrixXd squeeze_matrix(double r, int dim) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
  if (r == 0.0) {
    return Eigen::MatrixXd::Identity(dim, dim);
  }
  std::vector<double> sqrt_n(dim);
  for (int n = 0; n < dim; ++n) {
    sqrt_n[n] = std::sqrt(static_cast<double>(n));
  }
  const double tanh_r = std::tanh(r);
  const double sech_r = 1.0 / std::cosh(r);
  s(0, 0) = std::sqrt(sech_r);
  for (int m = 2; m < dim; m += 2) {
    s(m, 0) = -sqrt_n[m - 1] / sqrt_n[m] * tanh_r * s(m - 2, 0);
  }
  for (int m = 0; m < dim; ++m) {
    for (int n = 1; n < dim; ++n) {
      if ((m + n) % 2 != 0) {
        continue;
      }
      double term = 0.0;
      if (n >= 2) {
        term += sqrt_n[n - 1] / sqrt_n[n] * tanh_r * s(m, n - 2);
      }
      if (m >= 1) {
        term += sqrt_n[m] / sqrt_n[n] * sech_r * s(m - 1, n - 1);
      }
      s(m, n) = term;
    }
  }
  return s;
}

/// Attenuation channel of transmissivity eta via the Kraus sum
/// K_k = sqrt((1-eta)^k / k!) eta^{n/2} a^k.
Eigen::MatrixXcd apply_loss_fock(const Eigen::MatrixXcd& rho, double eta) {
  const int dim = static_cast<int>(rho.rows());
  if (eta >= 1.0) {
    return rho;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const double log_eta = std::log(eta);
  const double log_1m = std::log(1.0 - eta);
  for (int k = 0; k < dim; ++k) {
    // K_k row n-k, col n: sqrt(binom(n, k) (1-eta)^k eta^{n-k})
    Eigen::MatrixXcd kraus = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = k; n < dim; ++n) {
      const double log_coeff = 0.5 * (log_factorial(n) - log_factorial(k) - log_factorial(n - k) +
                                      k * log_1m + (n - k) * log_eta);
      kraus(n - k, n) = std::exp(log_coeff);
    }
    out += kraus * rho * kraus.adjoint();
  }
  return out;
}

/// Momentum-basis oscillator eigenfunctions <p|n> up to n = count-1 at
/// outcome p, with the (-i)^n Fourier phase.
Eigen::VectorXcd momentum_wavefunctions(double p, int count, double hbar) {
  Eigen::VectorXcd phi(count);
  const double xi = p / std::sqrt(hbar);
  const double gauss = std::pow(std::numbers::pi * hbar, -0.25) * std::exp(-0.5 * xi * xi);
  // Normalized Hermite recursion h_n = H_n / sqrt(2^n n!).
  double h_prev = 0.0;
  double h = 1.0;
  const std::complex<double> mi(0.0, -1.0);
  std::complex<double> phase = 1.0;
  for (int n = 0; n < count; ++n) {
    phi(n) = phase * gauss * h;
    const double h_next =
        (xi * std::numbers::sqrt2 * h - std::sqrt(static_cast<double>(n)) * h_prev) /
        std::sqrt(static_cast<double>(n + 1));
    h_prev = h;
    h = h_next;
    phase *= mi;
  }
  return phi;
}

/// Two-mode splitter with cos(theta) = sqrt(reflectivity), applied exactly
/// within each total-photon sector. The joint ket is laid out per sector s
/// as amplitudes of |m, s-m> for m = 0..s.
class SectorSplitter {
 public:
  SectorSplitter(double reflectivity, int max_total) {
    blocks_.reserve(max_total + 1);
    const double theta = std::acos(std::sqrt(reflectivity));
    for (int s = 0; s <= max_total; ++s) {
      // Generator a1 a2^dag - a1^dag a2 restricted to the sector is a real
      // antisymmetric tridiagonal matrix; exponentiate via i*G Hermitian.
      Eigen::MatrixXcd herm = Eigen::MatrixXcd::Zero(s + 1, s + 1);
      for (int m = 0; m < s; ++m) {
        // <m+1, s-m-1| a1^dag a2 |m, s-m> = sqrt((m+1)(s-m))
        const double g = std::sqrt(static_cast<double>(m + 1) * (s - m));
        herm(m + 1, m) = std::complex<double>(0.0, -g);
        herm(m, m + 1) = std::complex<double>(0.0, g);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
      Eigen::VectorXcd expvals(s + 1);
      for (int j = 0; j <= s; ++j) {
        expvals(j) = std::exp(std::complex<double>(0.0, -theta * eig.eigenvalues()(j)));
      }
      blocks_.push_back(eig.eigenvectors() * expvals.asDiagonal() *
                        eig.eigenvectors().adjoint());
    }
  }

  const Eigen::MatrixXcd& block(int s) const { return blocks_[s]; }

 private:
  std::vector<Eigen::MatrixXcd> blocks_;
};

/// One breeding step on an ensemble member: join |u> (dim) with |v> (dim),
/// apply the sector splitter, project mode 1 onto <p|, whose wavefunctions
/// over the full sector range are given in `phi`. Returns the unnormalized
/// dim-vector of mode 2.
Eigen::VectorXcd splitter_project(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                                  const SectorSplitter& splitter,
                                  const Eigen::VectorXcd& phi) {
  const int dim = static_cast<int>(u.size());
  const int max_total = 2 * (dim - 1);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd sector, mixed;
  for (int s = 0; s <= max_total; ++s) {
    sector.setZero(s + 1);
    bool any = false;
    for (int a = std::max(0, s - (dim - 1)); a <= std::min(s, dim - 1); ++a) {
      const std::complex<double> amp = u(a) * v(s - a);
      if (amp != std::complex<double>(0.0, 0.0)) {
        sector(a) = amp;
        any = true;
      }
    }
    if (!any) {
      continue;
    }
    mixed = splitter.block(s) * sector;
    // <p|a>_1 contracts mode 1 over the full sector range; keep b < dim.
    for (int a = std::max(0, s - (dim - 1)); a <= s; ++a) {
      const int b = s - a;
      if (b < dim) {
        out(b) += phi(a) * mixed(a);
      }
    }
  }
  return out;
}

/// Weighted pure-state ensemble of a density matrix (eigendecomposition,
/// weights folded into the kets).
std::vector<Eigen::VectorXcd> ensemble_of(const Eigen::MatrixXcd& rho, double weight_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
  std::vector<Eigen::VectorXcd> members;
  for (int j = 0; j < rho.rows(); ++j) {
    const double w = eig.eigenvalues()(j);
    if (w > weight_tol) {
      members.push_back(std::sqrt(w) * eig.eigenvectors().col(j));
    }
  }
  return members;
}

void check_tail(const Eigen::MatrixXcd& rho, int cutoff, const std::string& where) {
  double tail = 0.0;
  for (int n = std::max(0, cutoff - 3); n < cutoff; ++n) {
    tail += rho(n, n).real();
  }
  if (tail > kFockTailTol) {
    throw std::runtime_error(where + ": truncated-tail population " + std::to_string(tail) +
                             " exceeds tolerance; increase the cutoff");
  }
}

}  // namespace

double FockDensity::tail_population(int levels) const {
  double tail = 0.0;
  for (int n = std::max(0, dim - levels); n < dim; ++n) {
    tail += matrix(n, n).real();
  }
  return tail;
}

FockDensity cat_density_fock(const CatSpec& spec, int cutoff, double hbar) {
  if (cutoff < 2) {
    throw std::invalid_argument("cat_density_fock: cutoff must be >= 2");
  }
  if (!(spec.alpha >= 0.0) || (spec.parity != 0 && spec.parity != 1) ||
      !(spec.eta > 0.0 && spec.eta <= 1.0)) {
    throw std::invalid_argument("cat_density_fock: invalid cat spec");
  }
  Eigen::VectorXcd ket = coherent_ket(spec.alpha, cutoff);
  const Eigen::VectorXcd minus = coherent_ket(-spec.alpha, cutoff);
  ket = spec.parity == 0 ? (ket + minus).eval() : (ket - minus).eval();
  const double norm = ket.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("cat_density_fock: degenerate cat (zero norm)");
  }
  ket /= norm;
  ket = squeeze_matrix(spec.r, cutoff).cast<std::complex<double>>() * ket;
  Eigen::MatrixXcd rho = ket * ket.adjoint();
  rho = apply_loss_fock(rho, spec.eta);
  rho /= rho.trace().real();
  check_tail(rho, cutoff, "cat_density_fock");
  return {cutoff, hbar, std::move(rho)};
}

FockBreedResult breed_fock(const std::vector<CatSpec>& cats,
                           const std::vector<double>& p_outcomes, int cutoff, double hbar) {
  const int n = static_cast<int>(cats.size());
  if (n != 2 && n != 3) {
    throw std::invalid_argument("breed_fock supports N in {2, 3}");
  }
  if (static_cast<int>(p_outcomes.size()) != n - 1) {
    throw std::invalid_argument("breed_fock: need N - 1 outcomes");
  }

  FockBreedResult result;
  Eigen::MatrixXcd rho = cat_density_fock(cats[0], cutoff, hbar).matrix;
  for (int i = 1; i < n; ++i) {
    const Eigen::MatrixXcd cat = cat_density_fock(cats[i], cutoff, hbar).matrix;
    const SectorSplitter splitter(1.0 / (i + 1.0), 2 * (cutoff - 1));
    const Eigen::VectorXcd phi =
        momentum_wavefunctions(p_outcomes[i - 1], 2 * (cutoff - 1) + 1, hbar);
    const auto acc_members = ensemble_of(rho, 1e-14);
    const auto cat_members = ensemble_of(cat, 1e-14);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    for (const auto& u : acc_members) {
      for (const auto& v : cat_members) {
        const Eigen::VectorXcd w = splitter_project(u, v, splitter, phi);
        out += w * w.adjoint();
      }
    }
    const double density = out.trace().real();
    if (!(density > 0.0)) {
      throw std::runtime_error("breed_fock: outcome density vanished");
    }
    result.densities.push_back(density);
    rho = out / density;
    check_tail(rho, cutoff, "breed_fock");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::runtime_error("breed_fock: output not Hermitian");
  }
  result.rho = {cutoff, hbar, std::move(rho)};
  return result;
}

Eigen::MatrixXcd displacement_matrix_fock(std::complex<double> beta, int cutoff) {
  // exp(beta a^dag - beta* a) through the Hermitian generator -i(...).
  Eigen::MatrixXcd herm = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  const std::complex<double> mi(0.0, -1.0);
  for (int m = 0; m + 1 < cutoff; ++m) {
    const double g = std::sqrt(static_cast<double>(m + 1));
    herm(m + 1, m) = mi * beta * g;
    herm(m, m + 1) = std::conj(herm(m + 1, m));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  Eigen::VectorXcd expvals(cutoff);
  for (int j = 0; j < cutoff; ++j) {
    expvals(j) = std::exp(std::complex<double>(0.0, eig.eigenvalues()(j)));
  }
  return eig.eigenvectors() * expvals.asDiagonal() * eig.eigenvectors().adjoint();
}

double effective_squeezing_fock(const FockDensity& rho, std::complex<double> beta) {
  const std::complex<double> expectation =
      (rho.matrix * displacement_matrix_fock(beta, rho.dim)).trace();
  const double mag = std::abs(expectation);
  if (mag >= 1.0 + 1e-10) {
    throw std::runtime_error("effective_squeezing_fock: |<D>| >= 1");
  }
  return std::sqrt(-2.0 / std::norm(beta) * std::log(std::min(mag, 1.0)));
}

double wigner_fock(const FockDensity& rho, double x, double p) {
  const std::complex<double> gamma =
      std::complex<double>(x, p) / std::sqrt(2.0 * rho.hbar);
  const Eigen::MatrixXcd d = displacement_matrix_fock(gamma, rho.dim);
  Eigen::VectorXcd parity(rho.dim);
  for (int n = 0; n < rho.dim; ++n) {
    parity(n) = (n % 2 == 0) ? 1.0 : -1.0;
  }
  const Eigen::MatrixXcd kernel = d * parity.asDiagonal() * d.adjoint();
  const std::complex<double> value = (rho.matrix * kernel).trace();
  return value.real() / (std::numbers::pi * rho.hbar);
}

}  // namespace catbreed
