#include "dgt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dgt {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string operator_csv(const DenseOperator& op) {
    std::ostringstream out;
    out << "row,col,re,im\n";
    for (Eigen::Index r = 0; r < op.rows(); ++r)
        for (Eigen::Index c = 0; c < op.cols(); ++c)
            out << r << ',' << c << ',' << fmt17(op(r, c).real()) << ','
                << fmt17(op(r, c).imag()) << '\n';
    return out.str();
}

void write_operator_csv(const std::filesystem::path& path, const DenseOperator& op) {
    write_text_file(path, operator_csv(op));
}

void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
    write_operator_csv(path, m.cast<Complex>());
}

std::string circuit_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "# qubits " << circuit.qubit_count;
    if (!circuit.label.empty()) out << " label " << circuit.label;
    out << '\n';
    for (const Gate& g : circuit.gates) {
        out << gate_name(g.kind);
        for (int q : g.qubits) out << ' ' << q;
        if (g.is_parameterized()) out << " theta=" << fmt17(g.theta);
        if (!g.on_zero.empty()) {
            bool any = false;
            for (bool z : g.on_zero) any = any || z;
            if (any) {
                out << " polarity=";
                for (bool z : g.on_zero) out << (z ? '0' : '1');
            }
        }
        if (g.kind == GateKind::ORACLE)
            out << " table=" << (g.oracle->label.empty() ? "anon" : g.oracle->label)
                << " kind=" << (g.oracle->diagonal ? "diagonal" : "permutation")
                << " size="
                << (g.oracle->diagonal ? g.oracle->phases.size()
                                       : g.oracle->permutation.size());
        out << '\n';
    }
    return out.str();
}

void write_circuit_text(const std::filesystem::path& path, const Circuit& circuit) {
    write_text_file(path, circuit_text(circuit));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path.string());
}

} // namespace dgt
