#pragma once

#include <string>

#include "kvsched/instance.hpp"
#include "kvsched/timeline.hpp"

namespace kvsched {

// Stacked per-job memory chart: x = round, y = memory units, one colored band
// per execution run, dotted fill for runs that ended in a kill, horizontal
// line at the budget M. Deterministic output.
std::string render_svg(const Timeline& tl, const Instance& inst);

}  // namespace kvsched
