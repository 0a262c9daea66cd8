#include <algorithm>

#include "ybx/tensor/operator.hpp"

namespace ybx {

namespace {

// Display width, counting UTF-8 code points rather than bytes.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t w) {
  return std::string(w - std::min(w, width(s)), ' ') + s;
}

}  // namespace

std::string format_matrix(const Matrix& m, const std::vector<std::string>& labels) {
  const bool headed = !labels.empty();
  if (headed && (labels.size() != m.rows() || labels.size() != m.cols())) {
    throw ShapeError("label count differs from matrix size");
  }
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> widths(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (headed) widths[c] = width(labels[c]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      cells[r][c] = m(r, c).to_string();
      widths[c] = std::max(widths[c], width(cells[r][c]));
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, width(l));

  std::string out;
  auto emit_row = [&](const std::string& head, const std::vector<std::string>& row) {
    std::string line;
    if (headed) line += pad_left(head, label_width) + " |";
    for (std::size_t c = 0; c < row.size(); ++c) line += "  " + pad_left(row[c], widths[c]);
    out += line + "\n";
  };
  if (headed) {
    emit_row("", labels);
    std::size_t total = label_width + 2;
    for (auto w : widths) total += w + 2;
    out += std::string(total, '-') + "\n";
  }
  for (std::size_t r = 0; r < m.rows(); ++r) emit_row(headed ? labels[r] : "", cells[r]);
  return out;
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& basis) {
  std::vector<std::string> out;
  out.reserve(basis.size() * basis.size());
  for (const auto& a : basis) {
    for (const auto& b : basis) out.push_back(a + "⊗" + b);
  }
  return out;
}

}  // namespace ybx
