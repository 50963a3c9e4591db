#include "dgt/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dgt {

namespace {

constexpr double kPi = std::numbers::pi;
using Mat2 = Eigen::Matrix2cd;

void check_width(int qubit_count) {
    if (qubit_count < 1) throw std::domain_error("circuit needs at least one qubit");
    if (qubit_count > kMaxSimQubits)
        throw std::length_error("dense simulation capped at 16 qubits");
}

inline int bit_of(int qubit, int qubit_count) { return qubit_count - 1 - qubit; }

Mat2 single_qubit_matrix(const Gate& g) {
    Mat2 u;
    switch (g.kind) {
        case GateKind::X: u << 0, 1, 1, 0; break;
        case GateKind::H: {
            const double s = 1.0 / std::sqrt(2.0);
            u << s, s, s, -s;
            break;
        }
        case GateKind::RZ:
            u << std::polar(1.0, -g.theta / 2), 0, 0, std::polar(1.0, g.theta / 2);
            break;
        case GateKind::RX: {
            const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
            u << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
            break;
        }
        default: throw std::logic_error("not a single-qubit gate");
    }
    return u;
}

/// Apply a 1-qubit matrix in place.
void apply_1q(StateVector& psi, int qubit_count, int qubit, const Mat2& u) {
    const std::uint64_t dim = psi.size();
    const std::uint64_t stride = 1ull << bit_of(qubit, qubit_count);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & stride) continue;
        const Complex a0 = psi[base], a1 = psi[base | stride];
        psi[base] = u(0, 0) * a0 + u(0, 1) * a1;
        psi[base | stride] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

/// Does basis index satisfy all control selections of the gate?
inline bool controls_selected(const Gate& g, int n_controls, std::uint64_t index,
                              int qubit_count) {
    for (int c = 0; c < n_controls; ++c) {
        const bool bit = (index >> bit_of(g.qubits[c], qubit_count)) & 1;
        if (bit == g.control_on_zero(c)) return false;
    }
    return true;
}

} // namespace

StateVector basis_state(int qubit_count, std::uint64_t index) {
    check_width(qubit_count);
    StateVector psi = StateVector::Zero(1ull << qubit_count);
    psi[index] = 1.0;
    return psi;
}

void apply_gate(const Gate& gate, int qubit_count, StateVector& psi) {
    for (int q : gate.qubits)
        if (q < 0 || q >= qubit_count) throw std::out_of_range("gate qubit out of range");
    const std::uint64_t dim = psi.size();

    switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::RZ:
        case GateKind::RX:
            apply_1q(psi, qubit_count, gate.qubits[0], single_qubit_matrix(gate));
            return;

        case GateKind::CNOT:
        case GateKind::TOFFOLI: {
            const int nc = gate.kind == GateKind::CNOT ? 1 : 2;
            const std::uint64_t tmask = 1ull
                                        << bit_of(gate.qubits[nc], qubit_count);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (i & tmask) continue;
                if (!controls_selected(gate, nc, i, qubit_count)) continue;
                std::swap(psi[i], psi[i | tmask]);
            }
            return;
        }

        case GateKind::CZ:
        case GateKind::CPHASE:
        case GateKind::CCPHASE: {
            const int nq = gate.qubit_count();
            const Complex phase =
                gate.kind == GateKind::CZ ? Complex(-1, 0) : std::polar(1.0, gate.theta);
            for (std::uint64_t i = 0; i < dim; ++i)
                if (controls_selected(gate, nq, i, qubit_count)) psi[i] *= phase;
            return;
        }

        case GateKind::SWAP: {
            const std::uint64_t a = 1ull << bit_of(gate.qubits[0], qubit_count);
            const std::uint64_t b = 1ull << bit_of(gate.qubits[1], qubit_count);
            for (std::uint64_t i = 0; i < dim; ++i)
                if ((i & a) && !(i & b)) std::swap(psi[i], psi[(i & ~a) | b]);
            return;
        }

        case GateKind::XY: {
            const std::uint64_t a = 1ull << bit_of(gate.qubits[0], qubit_count);
            const std::uint64_t b = 1ull << bit_of(gate.qubits[1], qubit_count);
            const double c = std::cos(gate.theta / 2), s = std::sin(gate.theta / 2);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (!(i & a) || (i & b)) continue; // visit |10> once per pair
                const std::uint64_t j = (i & ~a) | b;
                const Complex v10 = psi[i], v01 = psi[j];
                psi[i] = c * v10 + Complex(0, s) * v01;
                psi[j] = Complex(0, s) * v10 + c * v01;
            }
            return;
        }

        case GateKind::ORACLE: {
            const auto& table = *gate.oracle;
            const int k = gate.qubit_count();
            std::vector<std::uint64_t> masks(k);
            for (int q = 0; q < k; ++q)
                masks[q] = 1ull << bit_of(gate.qubits[q], qubit_count);
            // Gather the local sub-index (MSB-first over the gate's qubits).
            auto local_of = [&](std::uint64_t i) {
                std::uint64_t loc = 0;
                for (int q = 0; q < k; ++q) loc = (loc << 1) | ((i & masks[q]) ? 1 : 0);
                return loc;
            };
            if (table.diagonal) {
                for (std::uint64_t i = 0; i < dim; ++i)
                    psi[i] *= std::polar(1.0, table.phases[local_of(i)]);
            } else {
                auto global_of = [&](std::uint64_t i, std::uint64_t loc) {
                    for (int q = k - 1; q >= 0; --q) {
                        i = (loc & 1) ? (i | masks[q]) : (i & ~masks[q]);
                        loc >>= 1;
                    }
                    return i;
                };
                StateVector out = StateVector::Zero(dim);
                for (std::uint64_t i = 0; i < dim; ++i)
                    out[global_of(i, table.permutation[local_of(i)])] = psi[i];
                psi.swap(out);
            }
            return;
        }
    }
    throw std::logic_error("unhandled gate kind");
}

StateVector apply(const Circuit& circuit, StateVector state) {
    check_width(circuit.qubit_count);
    if (state.size() != (1ll << circuit.qubit_count))
        throw std::domain_error("state dimension does not match circuit width");
    for (const Gate& g : circuit.gates) apply_gate(g, circuit.qubit_count, state);
    return state;
}

DenseOperator unitary_of(const Circuit& circuit) {
    check_width(circuit.qubit_count);
    const std::uint64_t dim = 1ull << circuit.qubit_count;
    DenseOperator u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col)
        u.col(col) = apply(circuit, basis_state(circuit.qubit_count, col));
    return u;
}

DenseOperator gate_unitary(const Gate& gate, int qubit_count) {
    Circuit c(qubit_count);
    c.add(gate);
    return unitary_of(c);
}

DenseOperator unitary_on_data(const Circuit& circuit, int data_qubits, double tol) {
    check_width(circuit.qubit_count);
    const int scratch = circuit.qubit_count - data_qubits;
    if (scratch < 0) throw std::domain_error("data block exceeds circuit width");
    if (scratch == 0) return unitary_of(circuit);
    const std::uint64_t data_dim = 1ull << data_qubits;
    const std::uint64_t pad = 1ull << scratch;
    DenseOperator u(data_dim, data_dim);
    for (std::uint64_t col = 0; col < data_dim; ++col) {
        StateVector full =
            apply(circuit, basis_state(circuit.qubit_count, col * pad));
        for (std::uint64_t row = 0; row < data_dim; ++row) {
            u(row, col) = full[row * pad];
            full[row * pad] = 0.0;
        }
        if (full.cwiseAbs().maxCoeff() > tol)
            throw std::runtime_error("scratch qubits not restored to |0>");
    }
    return u;
}

double max_abs_diff(const DenseOperator& u, const DenseOperator& v) {
    return (u - v).cwiseAbs().maxCoeff();
}

double max_abs_diff_up_to_phase(const DenseOperator& u, const DenseOperator& v) {
    Eigen::Index r = 0, c = 0;
    u.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(v(r, c)) < 1e-15) return max_abs_diff(u, v);
    Complex phase = u(r, c) / v(r, c);
    phase /= std::abs(phase);
    return (u - phase * v).cwiseAbs().maxCoeff();
}

BasisAction basis_action(const Circuit& circuit, std::uint64_t input) {
    if (circuit.qubit_count < 1 || circuit.qubit_count > 62)
        throw std::domain_error("basis_action supports 1..62 qubits");
    const int q = circuit.qubit_count;
    BasisAction a;
    a.index = input;
    for (const Gate& g : circuit.gates) {
        auto bit = [&](int qubit) { return (a.index >> bit_of(qubit, q)) & 1ull; };
        auto selected = [&](int n_controls) {
            for (int c = 0; c < n_controls; ++c)
                if (bit(g.qubits[c]) == static_cast<std::uint64_t>(g.control_on_zero(c)))
                    return false;
            return true;
        };
        switch (g.kind) {
            case GateKind::X:
                a.index ^= 1ull << bit_of(g.qubits[0], q);
                break;
            case GateKind::RZ:
                a.phase *= std::polar(1.0, bit(g.qubits[0]) ? g.theta / 2 : -g.theta / 2);
                break;
            case GateKind::CNOT:
                if (selected(1)) a.index ^= 1ull << bit_of(g.qubits[1], q);
                break;
            case GateKind::TOFFOLI:
                if (selected(2)) a.index ^= 1ull << bit_of(g.qubits[2], q);
                break;
            case GateKind::CZ:
                if (selected(2)) a.phase = -a.phase;
                break;
            case GateKind::CPHASE:
                if (selected(2)) a.phase *= std::polar(1.0, g.theta);
                break;
            case GateKind::CCPHASE:
                if (selected(3)) a.phase *= std::polar(1.0, g.theta);
                break;
            case GateKind::SWAP: {
                const std::uint64_t b0 = bit(g.qubits[0]), b1 = bit(g.qubits[1]);
                if (b0 != b1)
                    a.index ^= (1ull << bit_of(g.qubits[0], q)) |
                               (1ull << bit_of(g.qubits[1], q));
                break;
            }
            case GateKind::ORACLE: {
                const auto& table = *g.oracle;
                const int k = g.qubit_count();
                std::uint64_t loc = 0;
                for (int i = 0; i < k; ++i) loc = (loc << 1) | bit(g.qubits[i]);
                if (table.diagonal) {
                    a.phase *= std::polar(1.0, table.phases[loc]);
                } else {
                    std::uint64_t out = table.permutation[loc];
                    for (int i = k - 1; i >= 0; --i) {
                        const std::uint64_t mask = 1ull << bit_of(g.qubits[i], q);
                        a.index = (out & 1) ? (a.index | mask) : (a.index & ~mask);
                        out >>= 1;
                    }
                }
                break;
            }
            default:
                throw std::domain_error(
                    std::string("basis_action: gate mixes basis states: ") +
                    gate_name(g.kind));
        }
    }
    return a;
}

DensityMatrix density_from_state(const StateVector& state) {
    return state * state.adjoint();
}

void apply_gate_density(const Gate& gate, int qubit_count, DensityMatrix& rho) {
    // rho -> U rho U^dag, column/row-wise through the state kernel.
    const std::uint64_t dim = rho.rows();
    StateVector tmp(dim);
    for (std::uint64_t c = 0; c < dim; ++c) {
        tmp = rho.col(c);
        apply_gate(gate, qubit_count, tmp);
        rho.col(c) = tmp;
    }
    for (std::uint64_t r = 0; r < dim; ++r) {
        tmp = rho.row(r).conjugate();
        apply_gate(gate, qubit_count, tmp);
        rho.row(r) = tmp.conjugate();
    }
}

void depolarize(DensityMatrix& rho, int qubit_count, const std::vector<int>& qubits,
                double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("depolarizing strength outside [0,1]");
    if (p == 0.0) return;
    const int k = static_cast<int>(qubits.size());
    const std::uint64_t paulis = 1ull << (2 * k); // 4^k strings over the subset
    DensityMatrix acc = DensityMatrix::Zero(rho.rows(), rho.cols());
    Mat2 pauli[4];
    pauli[0] << 1, 0, 0, 1;
    pauli[1] << 0, 1, 1, 0;
    pauli[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    pauli[3] << 1, 0, 0, -1;
    // The full Pauli twirl (1/4^k) sum_P P rho P replaces the subsystem by
    // the maximally mixed state, so p = 1 depolarizes completely.
    for (std::uint64_t s = 0; s < paulis; ++s) {
        DensityMatrix term = rho;
        std::uint64_t digits = s;
        for (int q = 0; q < k; ++q) {
            const int d = digits % 4;
            digits /= 4;
            if (d == 0) continue;
            // P rho P as two single-qubit conjugations.
            const std::uint64_t dim = term.rows();
            StateVector tmp(dim);
            for (std::uint64_t c = 0; c < dim; ++c) {
                tmp = term.col(c);
                apply_1q(tmp, qubit_count, qubits[q], pauli[d]);
                term.col(c) = tmp;
            }
            for (std::uint64_t r = 0; r < dim; ++r) {
                tmp = term.row(r).conjugate();
                apply_1q(tmp, qubit_count, qubits[q], pauli[d]);
                term.row(r) = tmp.conjugate();
            }
        }
        acc += term;
    }
    rho = (1.0 - p) * rho + (p / static_cast<double>(paulis)) * acc;
}

DensityMatrix apply_noisy(const Circuit& circuit, DensityMatrix rho,
                          const NoiseModel& noise) {
    for (const Gate& g : circuit.gates) {
        apply_gate_density(g, circuit.qubit_count, rho);
        if (g.kind == GateKind::ORACLE) continue;
        if (g.qubit_count() == 2 && noise.p_two_qubit > 0.0)
            depolarize(rho, circuit.qubit_count, g.qubits, noise.p_two_qubit);
        else if (g.qubit_count() == 3 && noise.p_three_qubit > 0.0)
            depolarize(rho, circuit.qubit_count, g.qubits, noise.p_three_qubit);
    }
    return rho;
}

Eigen::VectorXd measurement_distribution(const DensityMatrix& rho) {
    return rho.diagonal().real().cwiseMax(0.0);
}

} // namespace dgt
