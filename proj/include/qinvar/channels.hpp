#pragma once

// Single-qubit decoherence maps applied independently to selected qubits of a
// multipartite state. Each map is defined on matrix units |i><j| and is
// parameterized by a degree p in [0, 1] (0: identity, 1: complete).

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qinvar/qlinalg.hpp"

namespace qinvar {

enum class ChannelKind { kDepolarization, kDephasing, kDissipation };

std::string_view to_string(ChannelKind k);
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

struct ChannelSpec {
  ChannelKind kind = ChannelKind::kDepolarization;
  double p = 0.0;
  std::vector<std::size_t> targets;  // empty: every subsystem (all must be qubits)
};

// 4x4 map on vec(|i><j|) with row-major index 2 i + j.
Eigen::Matrix4d channel_transfer_matrix(ChannelKind kind, double p);

// Throws std::invalid_argument for p outside [0, 1], duplicate or out-of-range
// targets, and targets that are not two-dimensional.
DensityMatrix apply_channel(const DensityMatrix& rho, const ChannelSpec& spec);

// a|00> + sqrt(1 - a^2)|11>, a in [0, 1].
PureState superposition_state(double a);

// Local information of superposition_state(a) after depolarizing both qubits with degree p.
double local_info_depolarized_closed(double a, double p);

// Invariant information of superposition_state(a) after the channel.
double local_info_after_channel(double a, const ChannelSpec& spec);

}  // namespace qinvar
