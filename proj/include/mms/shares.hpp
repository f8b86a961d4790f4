#pragma once

#include <cstddef>

#include "mms/model.hpp"
#include "mms/scheduling.hpp"

namespace mms {

enum class Share {
  kMaxMin,  // MmS: best worst bundle over N-partitions
  kMinMax,  // mMS: best best bundle over N-partitions
};

struct ShareValue {
  Rational value;
  // A partition whose min (MmS) or max (mMS) bundle value is `value`.
  Allocation witness;
};

// Share guarantee of one agent, computed as identical-machine scheduling on
// the agent's utilities: mMS is P/C_max and MmS is P/C_min. Chores are solved
// on magnitudes and mapped back through MmS(v) = -mMS(-v).
//
// Approx(delta) brackets the value: mMS <= c <= (1 + delta) mMS and
// MmS / (1 + delta) <= c <= MmS, on magnitudes for chores.
ShareValue guarantee(const Instance& instance, std::size_t agent, Share which,
                     const sched::SolveMode& mode,
                     const sched::Budget& budget = {});

GuaranteeProfile guarantee_profile(const Instance& instance,
                                   const sched::SolveMode& mode,
                                   const sched::Budget& budget = {});

}  // namespace mms
