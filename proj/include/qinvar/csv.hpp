#pragma once

// CSV emitters: '.' decimal separator, 17 significant digits, header row,
// newline-terminated lines.

#include <ostream>
#include <span>
#include <string>

#include "qinvar/channels.hpp"
#include "qinvar/mub.hpp"
#include "qinvar/sweep.hpp"

namespace qinvar::csv {

std::string format_double(double x);

// Columns: F,I1,I2,tangle_eq8,lhs,rhs
void write_isotropic(std::ostream& out, std::span<const IsotropicRow> rows);

// Columns: a,p,I_bits (+ I_closed for depolarization)
void write_decoherence(std::ostream& out, ChannelKind kind, std::span<const DecoherenceRow> rows);

// Columns: basis,vector,component,re,im; one row per complex entry.
void write_mub(std::ostream& out, const MubSet& set);

}  // namespace qinvar::csv
