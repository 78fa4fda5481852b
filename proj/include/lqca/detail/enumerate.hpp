#pragma once

#include <vector>

namespace lqca {

template <class Visit>
void for_each_configuration(std::size_t alphabet, Interval window, Visit&& visit) {
  const auto width = static_cast<std::size_t>(window.width());
  std::vector<StateIndex> cells(width, 0);
  while (true) {
    visit(Configuration(window.lo, cells));
    std::size_t i = 0;
    for (; i < width; ++i) {
      if (++cells[i] < alphabet) break;
      cells[i] = 0;
    }
    if (i == width) return;
  }
}

}  // namespace lqca
