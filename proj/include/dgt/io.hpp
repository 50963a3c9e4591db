#pragma once

#include <filesystem>
#include <string>

#include "dgt/circuit.hpp"
#include "dgt/simulate.hpp"

namespace dgt {

/// Dense operator as CSV `row,col,re,im`, row-major, 17 significant digits.
void write_operator_csv(const std::filesystem::path& path, const DenseOperator& op);
std::string operator_csv(const DenseOperator& op);

/// Real matrix in the same layout (im column zero).
void write_matrix_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m);

/// Line-oriented circuit text: `NAME q0 q1 ... [theta=<radians>]
/// [polarity=<one char per control>]`; oracle gates carry their table label
/// and size.
std::string circuit_text(const Circuit& circuit);
void write_circuit_text(const std::filesystem::path& path, const Circuit& circuit);

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace dgt
