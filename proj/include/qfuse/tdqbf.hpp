#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qfuse/pictorial.hpp"
#include "qfuse/qbpa.hpp"

namespace qfuse {

// Two-dimensional quantum belief function: an evidence body and the
// redistributed reliability attached to it.
struct Tdqbf {
    Qbpa m1;
    RedistributedReliability m2;
};

struct FusedBody {
    Qbpa raw;   // straight from the fusion sums, sum(psi^2) generally != 1
    Qbpa body;  // amplitude-normalized copy used downstream
    double raw_probability = 0.0;
};

struct SubsetPartition {
    std::vector<FocalSet> singletons;
    std::vector<FocalSet> multisubsets;  // two or more members, not the full frame
    std::optional<FocalSet> theta;
};

// Splits keys into singletons, proper multisubsets and the full frame. On a
// one-element frame the sole set counts as a singleton.
SubsetPartition multisubset_partition(const Frame& frame, const std::set<FocalSet>& keys);

// Fuses m1 with its reliability:
//   singleton x:  m1(x) Y + (1 - m1(x)) N + sum_{x in A} m1(A) Y + sum_{x notin A} m1(A) N
//   multisubset A: m1(A) Y + m1(Theta) Y
//   Theta:        m1(Theta) R
// where A ranges over proper multisubset keys of m1, Y/N are m_Z(Y)/m_Z(N)
// and R is the refusal mass. Every frame singleton appears in the output.
FusedBody combine_tdqbf(const Tdqbf& t);

}  // namespace qfuse
