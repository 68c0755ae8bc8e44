#include "fourier_l1/grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "fourier_l1/error.hpp"

namespace fourier_l1 {

std::string to_string(SignedIndex index) {
  return (index.sign == Sign::plus ? "+" : "-") + std::to_string(index.magnitude);
}

DiffOrder::DiffOrder(int p, int q) : p_(p), q_(q) {
  require(p >= 0 && p <= 2 && q >= 0 && q <= 2,
          "difference order must satisfy 0 <= p, q <= 2 (got " + std::to_string(p) + ", " +
              std::to_string(q) + ")");
}

CoefficientGrid::CoefficientGrid(int bound_j, int bound_k) : bound_j_(bound_j), bound_k_(bound_k) {
  require(bound_j >= 1 && bound_k >= 1, "grid bounds must be positive");
  values_.assign(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols()), cplx{});
}

void CoefficientGrid::set(int j, int k, cplx value) {
  require(contains(j, k), "coefficient index (" + std::to_string(j) + ", " + std::to_string(k) +
                              ") outside grid bounds");
  require(std::isfinite(value.real()) && std::isfinite(value.imag()),
          "coefficient values must be finite");
  values_[offset(j, k)] = value;
}

CoefficientGrid CoefficientGrid::scaled(cplx factor) const {
  CoefficientGrid out = *this;
  for (auto& v : out.values_) v *= factor;
  return out;
}

cplx get(const CoefficientGrid& grid, int j, int k) { return grid(j, k); }

namespace {

cplx diff_k(const CoefficientGrid& grid, int q, int j, SignedIndex k) {
  if (q == 0) return grid(j, k.value());
  return diff_k(grid, q - 1, j, k) - diff_k(grid, q - 1, j, k.outward());
}

cplx diff_jk(const CoefficientGrid& grid, int p, int q, SignedIndex j, SignedIndex k) {
  if (p == 0) return diff_k(grid, q, j.value(), k);
  return diff_jk(grid, p - 1, q, j, k) - diff_jk(grid, p - 1, q, j.outward(), k);
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

cplx diff(const CoefficientGrid& grid, DiffOrder order, SignedIndex j, SignedIndex k) {
  return diff_jk(grid, order.p(), order.q(), j, k);
}

CoefficientGrid load_grid(std::string_view text) {
  std::map<std::pair<int, int>, cplx> entries;
  int bound_j = 1;
  int bound_k = 1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 4) {
      throw ParseError(line_no, "expected \"j k re im\", found " + std::to_string(tokens.size()) +
                                    " fields");
    }
    int j = 0;
    int k = 0;
    double re = 0.0;
    double im = 0.0;
    if (!parse_number(tokens[0], j) || !parse_number(tokens[1], k)) {
      throw ParseError(line_no, "indices must be integers");
    }
    if (!parse_number(tokens[2], re) || !parse_number(tokens[3], im) || !std::isfinite(re) ||
        !std::isfinite(im)) {
      throw ParseError(line_no, "coefficient must be two finite decimals");
    }
    if (!entries.emplace(std::pair{j, k}, cplx{re, im}).second) {
      fail(ErrorKind::duplicate_index, "line " + std::to_string(line_no) + ": index (" +
                                           std::to_string(j) + ", " + std::to_string(k) +
                                           ") appears twice");
    }
    bound_j = std::max(bound_j, std::abs(j));
    bound_k = std::max(bound_k, std::abs(k));
  }
  if (entries.empty()) fail(ErrorKind::parse, "coefficient input is empty");

  CoefficientGrid grid(bound_j, bound_k);
  for (const auto& [index, value] : entries) grid.set(index.first, index.second, value);
  return grid;
}

std::string save_grid(const CoefficientGrid& grid) {
  std::string out = "# j k re im\n";
  char buf[128];
  for (int j = -grid.bound_j(); j <= grid.bound_j(); ++j) {
    for (int k = -grid.bound_k(); k <= grid.bound_k(); ++k) {
      const cplx v = grid(j, k);
      std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", j, k, v.real(), v.imag());
      out += buf;
    }
  }
  return out;
}

CoefficientGrid read_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open grid file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_grid(ss.str());
}

}  // namespace fourier_l1
