#include "fourier_l1/families.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fourier_l1/error.hpp"
#include "fourier_l1/summability.hpp"

namespace fourier_l1 {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

constexpr int kMaxTruncation = 1 << 20;

void validate_radius(double r) {
  require(std::isfinite(r) && r >= 0.0 && r < 1.0, "geometric radius must satisfy 0 <= r < 1");
}

void validate_sequence(const SequenceSpec& s) {
  std::visit(overloaded{
                 [](const GeometricSequence& g) { validate_radius(g.r); },
                 [](const FiniteSequence& f) {
                   for (const auto& [k, v] : f.values) {
                     require(std::isfinite(v.real()) && std::isfinite(v.imag()),
                             "sequence values must be finite");
                     (void)k;
                   }
                 },
                 [](const PowerSequence& p) {
                   require(std::isfinite(p.exponent) && p.exponent >= 0.0,
                           "power exponent must be non-negative");
                 },
             },
             s);
}

/// r^|k| with 0^0 = 1.
double geometric_term(double r, int k) { return k == 0 ? 1.0 : std::pow(r, std::abs(k)); }

cplx sequence_term(const SequenceSpec& s, int k) {
  return std::visit(overloaded{
                        [&](const GeometricSequence& g) { return cplx{geometric_term(g.r, k)}; },
                        [&](const FiniteSequence& f) {
                          cplx sum{};
                          for (const auto& [kk, v] : f.values)
                            if (kk == k) sum += v;
                          return sum;
                        },
                        [&](const PowerSequence& p) {
                          return cplx{std::pow(1.0 + std::abs(k), -p.exponent)};
                        },
                    },
                    s);
}

/// P_r(t) = (1 - r^2) / (1 - 2 r cos t + r^2) = sum_k r^|k| e^{ikt}.
double poisson(double r, double t) {
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(t) + r * r);
}

std::optional<std::vector<cplx>> sequence_closed_form(const SequenceSpec& s, int points) {
  return std::visit(
      overloaded{
          [&](const GeometricSequence& g) -> std::optional<std::vector<cplx>> {
            std::vector<cplx> out(static_cast<std::size_t>(points));
            for (int a = 0; a < points; ++a) out[static_cast<std::size_t>(a)] = poisson(g.r, torus_node(a, points));
            return out;
          },
          [&](const FiniteSequence& f) -> std::optional<std::vector<cplx>> {
            std::vector<cplx> out(static_cast<std::size_t>(points));
            for (int a = 0; a < points; ++a) {
              cplx sum{};
              for (const auto& [k, v] : f.values) sum += v * std::polar(1.0, k * torus_node(a, points));
              out[static_cast<std::size_t>(a)] = sum;
            }
            return out;
          },
          [](const PowerSequence&) -> std::optional<std::vector<cplx>> { return std::nullopt; },
      },
      s);
}

/// Upper bounds on sum_k |c_k| and on sum_{|k| > K} |c_k| for one factor.
struct TailBound {
  std::function<double()> total;
  std::function<double(int)> tail;
};

TailBound geometric_bound(double r) {
  return {[r] { return (1.0 + r) / (1.0 - r); },
          [r](int K) { return 2.0 * std::pow(r, K + 1) / (1.0 - r); }};
}

/// sum_{|k| > K} (1 + |k|)^-a <= 2 int_K^inf (1 + t)^-a dt for a > 1, with
/// the sum cut off entirely past `cap`.
TailBound power_bound(double a, int cap) {
  return {[a] { return 1.0 + 2.0 / (a - 1.0); },
          [a, cap](int K) {
            return K >= cap ? 0.0 : 2.0 * std::pow(1.0 + K, 1.0 - a) / (a - 1.0);
          }};
}

std::optional<TailBound> sequence_bound(const SequenceSpec& s) {
  return std::visit(
      overloaded{
          [](const GeometricSequence& g) -> std::optional<TailBound> { return geometric_bound(g.r); },
          [](const FiniteSequence& f) -> std::optional<TailBound> {
            double total = 0.0;
            for (const auto& [k, v] : f.values) total += std::abs(v);
            std::vector<std::pair<int, cplx>> values = f.values;
            return TailBound{[total] { return total; },
                             [values](int K) {
                               double t = 0.0;
                               for (const auto& [k, v] : values)
                                 if (std::abs(k) > K) t += std::abs(v);
                               return t;
                             }};
          },
          [](const PowerSequence& p) -> std::optional<TailBound> {
            if (p.exponent <= 1.0) return std::nullopt;
            return power_bound(p.exponent, std::numeric_limits<int>::max());
          },
      },
      s);
}

int smallest_cut(const TailBound& bound, double budget) {
  for (int K = 0; K <= kMaxTruncation; ++K) {
    if (bound.tail(K) <= budget) return std::max(K, 1);
  }
  fail(ErrorKind::unavailable, "tail bound does not reach the requested accuracy");
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(overloaded{
                 [](const FiniteFamily& f) {
                   for (const FiniteEntry& e : f.entries) {
                     require(std::isfinite(e.value.real()) && std::isfinite(e.value.imag()),
                             "finite family values must be finite");
                   }
                 },
                 [](const GeometricFamily& g) {
                   validate_radius(g.rx);
                   validate_radius(g.ry);
                 },
                 [](const ProductFamily& p) {
                   validate_sequence(p.x);
                   validate_sequence(p.y);
                 },
                 [](const RandomSparseFamily& r) {
                   require(r.bound_j >= 1 && r.bound_k >= 1, "random family bounds must be positive");
                   require(std::isfinite(r.density) && r.density > 0.0 && r.density <= 1.0,
                           "density must lie in (0, 1]");
                   require(std::isfinite(r.decay_exponent) && r.decay_exponent >= 0.0,
                           "decay exponent must be non-negative");
                 },
             },
             spec);
}

CoefficientGrid build(const FamilySpec& spec, int bound_j, int bound_k) {
  validate(spec);
  require(bound_j >= 1 && bound_k >= 1, "grid bounds must be positive");
  CoefficientGrid grid(bound_j, bound_k);
  std::visit(
      overloaded{
          [&](const FiniteFamily& f) {
            for (const FiniteEntry& e : f.entries) {
              if (grid.contains(e.j, e.k)) grid.set(e.j, e.k, grid(e.j, e.k) + e.value);
            }
          },
          [&](const GeometricFamily& g) {
            for (int j = -bound_j; j <= bound_j; ++j)
              for (int k = -bound_k; k <= bound_k; ++k)
                grid.set(j, k, geometric_term(g.rx, j) * geometric_term(g.ry, k));
          },
          [&](const ProductFamily& p) {
            for (int j = -bound_j; j <= bound_j; ++j) {
              const cplx a = sequence_term(p.x, j);
              for (int k = -bound_k; k <= bound_k; ++k) grid.set(j, k, a * sequence_term(p.y, k));
            }
          },
          [&](const RandomSparseFamily& r) {
            // The whole family box is drawn in a fixed order so that every
            // requested sub-box sees the same values.
            std::mt19937_64 rng(r.seed);
            for (int j = -r.bound_j; j <= r.bound_j; ++j) {
              for (int k = -r.bound_k; k <= r.bound_k; ++k) {
                if (unit_uniform(rng) >= r.density) continue;
                const double re = 2.0 * unit_uniform(rng) - 1.0;
                const double im = 2.0 * unit_uniform(rng) - 1.0;
                const double scale = std::pow(1.0 + std::abs(j), -r.decay_exponent) *
                                     std::pow(1.0 + std::abs(k), -r.decay_exponent);
                if (grid.contains(j, k)) grid.set(j, k, scale * cplx{re, im});
              }
            }
          },
      },
      spec);
  return grid;
}

std::optional<SampleGrid> closed_form(const FamilySpec& spec, int nx, int ny) {
  validate(spec);
  require(nx >= 1 && ny >= 1, "sample resolution must be positive");
  const auto outer = [&](const std::vector<cplx>& fx, const std::vector<cplx>& fy) {
    SampleGrid out(nx, ny);
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < ny; ++b)
        out(a, b) = fx[static_cast<std::size_t>(a)] * fy[static_cast<std::size_t>(b)];
    return out;
  };
  return std::visit(
      overloaded{
          [&](const FiniteFamily& f) -> std::optional<SampleGrid> {
            const auto [bj, bk] = *support_bounds(spec);
            const CoefficientGrid grid = build(f, bj, bk);
            return partial_sum(grid, bj, bk, nx, ny);
          },
          [&](const GeometricFamily& g) -> std::optional<SampleGrid> {
            return outer(*sequence_closed_form(GeometricSequence{g.rx}, nx),
                         *sequence_closed_form(GeometricSequence{g.ry}, ny));
          },
          [&](const ProductFamily& p) -> std::optional<SampleGrid> {
            auto fx = sequence_closed_form(p.x, nx);
            auto fy = sequence_closed_form(p.y, ny);
            if (!fx || !fy) return std::nullopt;
            return outer(*fx, *fy);
          },
          [](const RandomSparseFamily&) -> std::optional<SampleGrid> { return std::nullopt; },
      },
      spec);
}

std::optional<std::pair<int, int>> support_bounds(const FamilySpec& spec) {
  const auto seq_support = [](const SequenceSpec& s) -> std::optional<int> {
    if (const auto* f = std::get_if<FiniteSequence>(&s)) {
      int b = 1;
      for (const auto& [k, v] : f->values) b = std::max(b, std::abs(k));
      return b;
    }
    return std::nullopt;
  };
  return std::visit(
      overloaded{
          [](const FiniteFamily& f) -> std::optional<std::pair<int, int>> {
            int bj = 1;
            int bk = 1;
            for (const FiniteEntry& e : f.entries) {
              bj = std::max(bj, std::abs(e.j));
              bk = std::max(bk, std::abs(e.k));
            }
            return std::pair{bj, bk};
          },
          [](const GeometricFamily&) -> std::optional<std::pair<int, int>> { return std::nullopt; },
          [&](const ProductFamily& p) -> std::optional<std::pair<int, int>> {
            auto a = seq_support(p.x);
            auto b = seq_support(p.y);
            if (!a || !b) return std::nullopt;
            return std::pair{*a, *b};
          },
          [](const RandomSparseFamily& r) -> std::optional<std::pair<int, int>> {
            return std::pair{r.bound_j, r.bound_k};
          },
      },
      spec);
}

std::pair<int, int> reference_truncation(const FamilySpec& spec, double epsilon) {
  validate(spec);
  require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be positive");
  if (std::holds_alternative<FiniteFamily>(spec)) return *support_bounds(spec);

  std::optional<TailBound> bx;
  std::optional<TailBound> by;
  double scale = 1.0;
  std::visit(overloaded{
                 [](const FiniteFamily&) {},
                 [&](const GeometricFamily& g) {
                   bx = geometric_bound(g.rx);
                   by = geometric_bound(g.ry);
                 },
                 [&](const ProductFamily& p) {
                   bx = sequence_bound(p.x);
                   by = sequence_bound(p.y);
                 },
                 [&](const RandomSparseFamily& r) {
                   if (r.decay_exponent <= 1.0) return;
                   bx = power_bound(r.decay_exponent, r.bound_j);
                   by = power_bound(r.decay_exponent, r.bound_k);
                   scale = std::sqrt(2.0);  // |re + i im| with re, im in [-1, 1]
                 },
             },
             spec);
  if (!bx || !by) {
    fail(ErrorKind::unavailable,
         "no certified tail bound for a " + kind_name(spec) + " family with these parameters");
  }
  // tail of the box <= scale * (tail_x(J) total_y + total_x tail_y(K)).
  const double half = 0.5 * epsilon / scale;
  int J = smallest_cut(*bx, half / std::max(by->total(), 1e-300));
  int K = smallest_cut(*by, half / std::max(bx->total(), 1e-300));
  if (const auto* r = std::get_if<RandomSparseFamily>(&spec)) {
    J = std::min(J, r->bound_j);
    K = std::min(K, r->bound_k);
  }
  return {J, K};
}

std::string kind_name(const FamilySpec& spec) {
  static const char* names[] = {"finite", "geometric", "product", "randomSparse"};
  return names[spec.index()];
}

namespace {

nlohmann::json sequence_to_json(const SequenceSpec& s) {
  return std::visit(overloaded{
                        [](const GeometricSequence& g) {
                          return nlohmann::json{{"kind", "geometric"}, {"r", g.r}};
                        },
                        [](const FiniteSequence& f) {
                          nlohmann::json values = nlohmann::json::array();
                          for (const auto& [k, v] : f.values)
                            values.push_back({k, v.real(), v.imag()});
                          return nlohmann::json{{"kind", "finite"}, {"values", values}};
                        },
                        [](const PowerSequence& p) {
                          return nlohmann::json{{"kind", "power"}, {"exponent", p.exponent}};
                        },
                    },
                    s);
}

SequenceSpec sequence_from_json(const nlohmann::json& in) {
  const std::string kind = in.at("kind").get<std::string>();
  if (kind == "geometric") return GeometricSequence{in.at("r").get<double>()};
  if (kind == "power") return PowerSequence{in.at("exponent").get<double>()};
  if (kind == "finite") {
    FiniteSequence f;
    for (const auto& v : in.at("values")) {
      f.values.emplace_back(v.at(0).get<int>(), cplx{v.at(1).get<double>(), v.at(2).get<double>()});
    }
    return f;
  }
  fail(ErrorKind::parse, "unknown sequence kind '" + kind + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) fail(ErrorKind::parse, "cannot parse number '" + s + "'");
  return v;
}

long long parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) fail(ErrorKind::parse, "cannot parse integer '" + s + "'");
  return v;
}

}  // namespace

void to_json(nlohmann::json& out, const FamilySpec& spec) {
  std::visit(overloaded{
                 [&](const FiniteFamily& f) {
                   nlohmann::json entries = nlohmann::json::array();
                   for (const FiniteEntry& e : f.entries)
                     entries.push_back({e.j, e.k, e.value.real(), e.value.imag()});
                   out = {{"kind", "finite"}, {"entries", entries}};
                 },
                 [&](const GeometricFamily& g) {
                   out = {{"kind", "geometric"}, {"rx", g.rx}, {"ry", g.ry}};
                 },
                 [&](const ProductFamily& p) {
                   out = {{"kind", "product"}, {"x", sequence_to_json(p.x)}, {"y", sequence_to_json(p.y)}};
                 },
                 [&](const RandomSparseFamily& r) {
                   out = {{"kind", "randomSparse"}, {"seed", r.seed},
                          {"boundJ", r.bound_j},    {"boundK", r.bound_k},
                          {"density", r.density},   {"decayExponent", r.decay_exponent}};
                 },
             },
             spec);
}

FamilySpec family_from_json(const nlohmann::json& in) {
  FamilySpec spec;
  try {
    const std::string kind = in.at("kind").get<std::string>();
    if (kind == "finite") {
      FiniteFamily f;
      for (const auto& e : in.at("entries")) {
        f.entries.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                             cplx{e.at(2).get<double>(), e.at(3).get<double>()}});
      }
      spec = f;
    } else if (kind == "geometric") {
      spec = GeometricFamily{in.at("rx").get<double>(), in.at("ry").get<double>()};
    } else if (kind == "product") {
      spec = ProductFamily{sequence_from_json(in.at("x")), sequence_from_json(in.at("y"))};
    } else if (kind == "randomSparse") {
      spec = RandomSparseFamily{in.at("seed").get<std::uint64_t>(), in.at("boundJ").get<int>(),
                                in.at("boundK").get<int>(), in.at("density").get<double>(),
                                in.at("decayExponent").get<double>()};
    } else {
      fail(ErrorKind::parse, "unknown family kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed family spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

FamilySpec parse_family_shorthand(const std::string& text) {
  if (text == "zero") return FiniteFamily{};
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::vector<std::string> args =
      colon == std::string::npos ? std::vector<std::string>{} : split(text.substr(colon + 1), ',');
  FamilySpec spec;
  if (kind == "geometric" && (args.size() == 1 || args.size() == 2)) {
    const double rx = parse_real(args[0]);
    spec = GeometricFamily{rx, args.size() == 2 ? parse_real(args[1]) : rx};
  } else if (kind == "randomSparse" && args.size() == 5) {
    const long long seed = parse_integer(args[0]);
    require(seed >= 0, "seed must be non-negative");
    spec = RandomSparseFamily{static_cast<std::uint64_t>(seed),
                              static_cast<int>(parse_integer(args[1])),
                              static_cast<int>(parse_integer(args[2])), parse_real(args[3]),
                              parse_real(args[4])};
  } else {
    fail(ErrorKind::usage, "unrecognised family shorthand '" + text +
                               "' (expected zero, geometric:RX[,RY] or "
                               "randomSparse:SEED,BJ,BK,DENSITY,DECAY)");
  }
  validate(spec);
  return spec;
}

FamilySpec parse_family_argument(const std::string& text) {
  const std::string kind = text.substr(0, text.find(':'));
  if (text == "zero" || ((kind == "geometric" || kind == "randomSparse") &&
                         text.find(':') != std::string::npos)) {
    return parse_family_shorthand(text);
  }
  std::ifstream in(text);
  if (!in) fail(ErrorKind::invalid_argument, "cannot open family spec file '" + text + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, "family spec '" + text + "' is not valid JSON: " + e.what());
  }
  return family_from_json(doc);
}

}  // namespace fourier_l1
