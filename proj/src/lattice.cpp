#include "dgt/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dgt/gates.hpp"
#include "dgt/spectral.hpp"

namespace dgt {

namespace {

int log2_of(int N) {
    int n = 0;
    while ((1 << n) < N) ++n;
    return n;
}

} // namespace

int PlaquetteSystem::link_qubits() const { return 4 * (log2_of(N) + 1); }
int PlaquetteSystem::total_qubits() const { return 5 * (log2_of(N) + 1); }

Circuit trotter_step(const PlaquetteSystem& system, double dt) {
    const int N = system.N;
    if (N > 4) throw std::length_error("plaquette Trotter step capped at N = 4");
    const int n = log2_of(N);
    const int reg = n + 1;

    const Circuit half_potential =
        build_plaquette_trace(N, system.theta_v * dt / 2.0);
    Circuit c(half_potential.qubit_count, "trotter_step_d" + std::to_string(N));

    // Kinetic factor on one link: rotate to the Fourier basis, apply the
    // centered eigenphases, rotate back.
    const Circuit fourier = build_fourier_lean(N);
    Eigen::VectorXd lambda = kinetic_eigenvalues_circuit_order(N);
    lambda.array() -= lambda.mean();
    std::vector<double> angles(2 * N);
    for (int z = 0; z < 2 * N; ++z) angles[z] = system.theta_k * dt * lambda[z];
    std::vector<int> local(reg);
    std::iota(local.begin(), local.end(), 0);
    Circuit kinetic_one(reg, "kinetic_link");
    kinetic_one.append(fourier);
    kinetic_one.append(build_diagonal_phase(angles, local, reg));
    kinetic_one.append(adjoint(fourier));

    c.append(half_potential);
    for (int l = 0; l < 4; ++l) {
        std::vector<int> map(reg);
        for (int i = 0; i < reg; ++i) map[i] = l * reg + i;
        c.append(kinetic_one, map);
    }
    c.append(half_potential);
    return c;
}

Eigen::MatrixXd assemble_hamiltonian(const PlaquetteSystem& system) {
    const int N = system.N;
    const int n = log2_of(N);
    const int reg = n + 1;
    const int links = 4;
    if (N > 4) throw std::length_error("plaquette Hamiltonian capped at N = 4");
    const std::int64_t dim = 1ll << (links * reg);

    Eigen::MatrixXd mk = m_matrix(N);
    mk.diagonal().array() -= mk.trace() / (2.0 * N);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const std::int64_t block = 2 * N;
    for (int l = 0; l < links; ++l) {
        // Link l occupies qubits [l reg, (l+1) reg): stride of its register
        // in the basis index.
        const std::int64_t stride = 1ll << ((links - 1 - l) * reg);
        for (std::int64_t base = 0; base < dim; ++base) {
            const std::int64_t link_val = (base / stride) % block;
            if (link_val != 0) continue;
            for (std::int64_t a = 0; a < block; ++a)
                for (std::int64_t b = 0; b < block; ++b)
                    h(base + a * stride, base + b * stride) +=
                        system.theta_k * mk(a, b);
        }
    }

    for (std::int64_t z = 0; z < dim; ++z) {
        GroupElement u[4];
        for (int l = 0; l < links; ++l) {
            const std::int64_t stride = 1ll << ((links - 1 - l) * reg);
            u[l] = element_from_index(static_cast<int>((z / stride) % block), N);
        }
        const GroupElement plaq =
            multiply(u[0], multiply(u[1], multiply(inverse(u[2]), inverse(u[3]))));
        h(z, z) += system.theta_v * re_trace(plaq);
    }
    return h;
}

ExactEvolver::ExactEvolver(const PlaquetteSystem& system) {
    const Eigen::MatrixXd h = assemble_hamiltonian(system);
    qubits_ = log2_of(static_cast<int>(h.rows()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    vectors_ = eig.eigenvectors();
    values_ = eig.eigenvalues();
}

StateVector ExactEvolver::evolve(double t, const StateVector& state) const {
    const Eigen::VectorXcd coeffs = vectors_.transpose().cast<Complex>() * state;
    Eigen::VectorXcd rotated(coeffs.size());
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        rotated[i] = std::polar(1.0, t * values_[i]) * coeffs[i];
    return vectors_.cast<Complex>() * rotated;
}

DenseOperator exact_evolve(const PlaquetteSystem& system, double t) {
    const Eigen::MatrixXd h = assemble_hamiltonian(system);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    const Eigen::VectorXcd phases =
        (Complex(0, t) * eig.eigenvalues().cast<Complex>().array()).exp();
    return eig.eigenvectors().cast<Complex>() * phases.asDiagonal() *
           eig.eigenvectors().transpose().cast<Complex>();
}

StateVector apply_to_links(const Circuit& circuit, const PlaquetteSystem& system,
                           const StateVector& link_state) {
    const int link_qubits = system.link_qubits();
    const int extra = circuit.qubit_count - link_qubits;
    if (extra < 0) throw std::domain_error("circuit narrower than the link register");
    const std::int64_t pad = 1ll << extra;
    StateVector full = StateVector::Zero(link_state.size() * pad);
    for (std::int64_t i = 0; i < link_state.size(); ++i) full[i * pad] = link_state[i];
    full = dgt::apply(circuit, std::move(full));
    StateVector out(link_state.size());
    for (std::int64_t i = 0; i < link_state.size(); ++i) {
        out[i] = full[i * pad];
        full[i * pad] = 0.0;
    }
    if (full.cwiseAbs().maxCoeff() > 1e-9)
        throw std::runtime_error("work register not restored");
    return out;
}

// -- Monte Carlo --------------------------------------------------------------

int LatticeConfig::site_count() const {
    int s = 1;
    for (int d : dims) s *= d;
    return s;
}

LatticeConfig make_cold_lattice(int N, std::vector<int> dims, double beta,
                                std::uint64_t seed, std::uint64_t stream) {
    if (dims.size() < 2) throw std::domain_error("lattice needs at least 2 dimensions");
    for (int d : dims)
        if (d < 2) throw std::domain_error("each extent must be at least 2");
    LatticeConfig cfg;
    cfg.N = N;
    cfg.dims = std::move(dims);
    cfg.beta = beta;
    cfg.rng_seed = seed;
    cfg.rng_stream = stream;
    cfg.links.assign(static_cast<std::size_t>(cfg.site_count()) * cfg.dims.size(), 0);
    return cfg;
}

namespace {

/// Neighbor bookkeeping and cached 2x2 representations for one lattice.
struct LatticeGeometry {
    int N;
    int dim;
    std::vector<int> extents;
    std::vector<int> strides;        // mixed-radix site strides
    std::vector<Eigen::Matrix2cd> rep;
    std::vector<int> inverse_of;

    explicit LatticeGeometry(const LatticeConfig& cfg)
        : N(cfg.N), dim(static_cast<int>(cfg.dims.size())), extents(cfg.dims) {
        strides.resize(dim);
        int s = 1;
        for (int d = dim - 1; d >= 0; --d) {
            strides[d] = s;
            s *= extents[d];
        }
        rep.resize(2 * N);
        inverse_of.resize(2 * N);
        for (int i = 0; i < 2 * N; ++i) {
            const GroupElement g = element_from_index(i, N);
            rep[i] = fundamental_rep(g);
            inverse_of[i] = element_index(inverse(g));
        }
    }

    int shift(int site, int d, int step) const {
        const int coord = (site / strides[d]) % extents[d];
        const int moved = (coord + step % extents[d] + extents[d]) % extents[d];
        return site + (moved - coord) * strides[d];
    }

    int link_index(int site, int d) const { return site * dim + d; }
};

} // namespace

double measure_plaquette(const LatticeConfig& config) {
    const LatticeGeometry geo(config);
    double sum = 0.0;
    int count = 0;
    for (int site = 0; site < config.site_count(); ++site)
        for (int mu = 0; mu < geo.dim; ++mu)
            for (int nu = mu + 1; nu < geo.dim; ++nu) {
                const Eigen::Matrix2cd p =
                    geo.rep[config.links[geo.link_index(site, mu)]] *
                    geo.rep[config.links[geo.link_index(geo.shift(site, mu, 1), nu)]] *
                    geo.rep[geo.inverse_of[config.links[geo.link_index(
                        geo.shift(site, nu, 1), mu)]]] *
                    geo.rep[geo.inverse_of[config.links[geo.link_index(site, nu)]]];
                sum += p.trace().real();
                ++count;
            }
    return count ? sum / count : 0.0;
}

namespace {

/// Sum of the staple representations around link (site, mu): the local
/// action term is -beta Re Tr(rho(g) K).
Eigen::Matrix2cd staple_sum(const LatticeConfig& cfg, const LatticeGeometry& geo,
                            int site, int mu) {
    Eigen::Matrix2cd k = Eigen::Matrix2cd::Zero();
    for (int nu = 0; nu < geo.dim; ++nu) {
        if (nu == mu) continue;
        const int fwd = geo.shift(site, mu, 1);
        k += geo.rep[cfg.links[geo.link_index(fwd, nu)]] *
             geo.rep[geo.inverse_of[cfg.links[geo.link_index(geo.shift(site, nu, 1), mu)]]] *
             geo.rep[geo.inverse_of[cfg.links[geo.link_index(site, nu)]]];
        const int back = geo.shift(site, nu, -1);
        k += geo.rep[geo.inverse_of[cfg.links[geo.link_index(geo.shift(back, mu, 1), nu)]]] *
             geo.rep[geo.inverse_of[cfg.links[geo.link_index(back, mu)]]] *
             geo.rep[cfg.links[geo.link_index(back, nu)]];
    }
    return k;
}

} // namespace

double metropolis_sweep(LatticeConfig& config, CounterRng& rng) {
    const LatticeGeometry geo(config);
    int accepted = 0;
    int proposals = 0;
    for (int site = 0; site < config.site_count(); ++site)
        for (int mu = 0; mu < geo.dim; ++mu) {
            const int li = geo.link_index(site, mu);
            const int old_idx = config.links[li];
            const int new_idx = static_cast<int>(rng.next_below(2ull * config.N));
            ++proposals;
            const Eigen::Matrix2cd k = staple_sum(config, geo, site, mu);
            const double delta_action =
                -config.beta *
                ((geo.rep[new_idx] - geo.rep[old_idx]) * k).trace().real();
            if (delta_action <= 0.0 || rng.next_double() < std::exp(-delta_action)) {
                config.links[li] = new_idx;
                ++accepted;
            }
        }
    return proposals ? static_cast<double>(accepted) / proposals : 0.0;
}

double exact_small_lattice_average(int N, const std::vector<int>& dims, double beta) {
    LatticeConfig cfg = make_cold_lattice(N, dims, beta, 0);
    const LatticeGeometry geo(cfg);
    const int links = cfg.link_count();
    const double total = std::pow(2.0 * N, links);
    if (total > 1e8) throw std::length_error("enumeration budget exceeded");

    // Precompute the plaquette list as link-index quadruples.
    struct Plaq {
        int a, b, c, d;
    };
    std::vector<Plaq> plaquettes;
    for (int site = 0; site < cfg.site_count(); ++site)
        for (int mu = 0; mu < geo.dim; ++mu)
            for (int nu = mu + 1; nu < geo.dim; ++nu)
                plaquettes.push_back({geo.link_index(site, mu),
                                      geo.link_index(geo.shift(site, mu, 1), nu),
                                      geo.link_index(geo.shift(site, nu, 1), mu),
                                      geo.link_index(site, nu)});

    const Eigen::MatrixXi table = group_table(N);
    std::vector<double> trace_of(2 * N);
    std::vector<int> inv_of(2 * N);
    for (int i = 0; i < 2 * N; ++i) {
        trace_of[i] = re_trace(element_from_index(i, N));
        inv_of[i] = element_index(inverse(element_from_index(i, N)));
    }

    double weight_sum = 0.0;
    double observable_sum = 0.0;
    std::vector<int> assignment(links, 0);
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t rest = code;
        for (int l = 0; l < links; ++l) {
            assignment[l] = static_cast<int>(rest % (2 * N));
            rest /= 2 * N;
        }
        double action_sum = 0.0;
        for (const Plaq& p : plaquettes) {
            const int prod = table(
                table(assignment[p.a], assignment[p.b]),
                table(inv_of[assignment[p.c]], inv_of[assignment[p.d]]));
            action_sum += trace_of[prod];
        }
        const double w = std::exp(beta * action_sum);
        weight_sum += w;
        observable_sum += w * action_sum / static_cast<double>(plaquettes.size());
    }
    return observable_sum / weight_sum;
}

double jackknife_stderr(const std::vector<double>& samples, int bins) {
    const int usable = static_cast<int>(samples.size()) / bins * bins;
    if (bins < 2 || usable < bins) return 0.0;
    const int bin_size = usable / bins;
    std::vector<double> bin_means(bins, 0.0);
    for (int b = 0; b < bins; ++b) {
        for (int i = 0; i < bin_size; ++i) bin_means[b] += samples[b * bin_size + i];
        bin_means[b] /= bin_size;
    }
    const double total = std::accumulate(bin_means.begin(), bin_means.end(), 0.0);
    double var = 0.0;
    const double mean = total / bins;
    for (int b = 0; b < bins; ++b) {
        const double loo = (total - bin_means[b]) / (bins - 1);
        var += (loo - mean) * (loo - mean);
    }
    return std::sqrt(var * (bins - 1) / bins);
}

std::vector<SweepPoint> beta_sweep(int N, const std::vector<int>& dims,
                                   const std::vector<double>& betas, int sweeps,
                                   int thermalization, std::uint64_t seed) {
    std::vector<SweepPoint> points;
    points.reserve(betas.size());
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
        LatticeConfig cfg = make_cold_lattice(N, dims, betas[bi], seed, bi);
        CounterRng rng(seed, bi);
        double accept_sum = 0.0;
        for (int s = 0; s < thermalization; ++s) metropolis_sweep(cfg, rng);
        std::vector<double> measurements;
        measurements.reserve(sweeps);
        for (int s = 0; s < sweeps; ++s) {
            accept_sum += metropolis_sweep(cfg, rng);
            measurements.push_back(measure_plaquette(cfg));
        }
        SweepPoint p;
        p.beta = betas[bi];
        p.plaquette_mean =
            std::accumulate(measurements.begin(), measurements.end(), 0.0) /
            std::max<std::size_t>(measurements.size(), 1);
        p.plaquette_stderr = jackknife_stderr(measurements, 20);
        p.acceptance_rate = sweeps ? accept_sum / sweeps : 0.0;
        points.push_back(p);
    }
    return points;
}

} // namespace dgt
