#include "qinvar/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "qinvar/invinfo.hpp"

namespace qinvar {

std::string_view to_string(ChannelKind k) {
  switch (k) {
    case ChannelKind::kDepolarization:
      return "depolarization";
    case ChannelKind::kDephasing:
      return "dephasing";
    case ChannelKind::kDissipation:
      return "dissipation";
  }
  return "unknown";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
  for (ChannelKind k : {ChannelKind::kDepolarization, ChannelKind::kDephasing, ChannelKind::kDissipation})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(what) + " outside [0, 1]");
}

int unit(int i, int j) { return 2 * i + j; }

}  // namespace

Eigen::Matrix4d channel_transfer_matrix(ChannelKind kind, double p) {
  require_unit_interval(p, "decoherence degree");
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  switch (kind) {
    case ChannelKind::kDepolarization:
      // |i><j| -> (1-p)|i><j| + p delta_ij I/2
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t(unit(i, j), unit(i, j)) = 1.0 - p;
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) t(unit(k, k), unit(i, i)) += 0.5 * p;
      break;
    case ChannelKind::kDephasing:
      t(unit(0, 0), unit(0, 0)) = 1.0;
      t(unit(1, 1), unit(1, 1)) = 1.0;
      t(unit(0, 1), unit(0, 1)) = 1.0 - p;
      t(unit(1, 0), unit(1, 0)) = 1.0 - p;
      break;
    case ChannelKind::kDissipation:
      // |i><i| -> (1-p)|i><i| + p|0><0|; off-diagonals scale by sqrt(1-p).
      t(unit(0, 0), unit(0, 0)) = 1.0;
      t(unit(1, 1), unit(1, 1)) = 1.0 - p;
      t(unit(0, 0), unit(1, 1)) = p;
      t(unit(0, 1), unit(0, 1)) = std::sqrt(1.0 - p);
      t(unit(1, 0), unit(1, 0)) = std::sqrt(1.0 - p);
      break;
  }
  return t;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const ChannelSpec& spec) {
  const Dims& dims = rho.dims();
  std::vector<std::size_t> targets = spec.targets;
  if (targets.empty())
    for (std::size_t i = 0; i < dims.size(); ++i) targets.push_back(i);
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t t : targets) {
    if (t >= dims.size()) throw std::invalid_argument("apply_channel: target out of range");
    if (seen[t]) throw std::invalid_argument("apply_channel: duplicate target");
    if (dims[t] != 2) throw std::invalid_argument("apply_channel: target is not a qubit");
    seen[t] = true;
  }
  const Eigen::Matrix4d transfer = channel_transfer_matrix(spec.kind, spec.p);

  const auto n = static_cast<Eigen::Index>(rho.size());
  Matrix m = rho.matrix();
  for (std::size_t t : targets) {
    // Stride of subsystem t in the row-major flat index.
    Eigen::Index stride = 1;
    for (std::size_t i = t + 1; i < dims.size(); ++i) stride *= static_cast<Eigen::Index>(dims[i]);
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const int ri = static_cast<int>((r / stride) % 2);
      const Eigen::Index r0 = r - ri * stride;
      for (Eigen::Index c = 0; c < n; ++c) {
        const int cj = static_cast<int>((c / stride) % 2);
        const Eigen::Index c0 = c - cj * stride;
        const Complex v = m(r, c);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            const double w = transfer(unit(i, j), unit(ri, cj));
            if (w != 0.0) out(r0 + i * stride, c0 + j * stride) += w * v;
          }
      }
    }
    m = std::move(out);
  }
  return DensityMatrix(std::move(m), dims);
}

PureState superposition_state(double a) {
  require_unit_interval(a, "superposition amplitude");
  Vector v = Vector::Zero(4);
  v(0) = a;
  v(3) = std::sqrt(1.0 - a * a);
  return PureState(std::move(v), {2, 2});
}

double local_info_depolarized_closed(double a, double p) {
  require_unit_interval(a, "superposition amplitude");
  require_unit_interval(p, "decoherence degree");
  const double a2 = a * a;
  const double p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const double purity = a2 * (1.0 - a2) * (2.0 * p4 - 8.0 * p3 + 10.0 * p2 - 4.0 * p) + 0.25 * p4 - p3 + 2.0 * p2 -
                        2.0 * p + 1.0;
  return 2.0 / 3.0 * (4.0 * purity - 1.0);
}

double local_info_after_channel(double a, const ChannelSpec& spec) {
  return invariant_info_closed(apply_channel(density_from_pure(superposition_state(a)), spec)).bits;
}

}  // namespace qinvar
