#ifndef PARAFLOW_ARC_TIME_TABLE_HPP
#define PARAFLOW_ARC_TIME_TABLE_HPP

#include <cstddef>
#include <vector>

namespace paraflow {

// Dense (arc, theta) table; theta runs over 0..T.
template <typename T>
class ArcTimeTable {
 public:
  ArcTimeTable() = default;
  ArcTimeTable(std::size_t arc_count, int horizon)
      : periods_(horizon + 1),
        cells_(arc_count * static_cast<std::size_t>(horizon + 1)) {}

  T& at(std::size_t arc, int theta) { return cells_[index(arc, theta)]; }
  const T& at(std::size_t arc, int theta) const {
    return cells_[index(arc, theta)];
  }

  int periods() const { return periods_; }
  std::size_t arc_count() const {
    return periods_ == 0 ? 0 : cells_.size() / periods_;
  }
  bool empty() const { return cells_.empty(); }

  friend bool operator==(const ArcTimeTable&, const ArcTimeTable&) = default;

 private:
  std::size_t index(std::size_t arc, int theta) const {
    return arc * static_cast<std::size_t>(periods_) +
           static_cast<std::size_t>(theta);
  }

  int periods_ = 0;
  std::vector<T> cells_;
};

}  // namespace paraflow

#endif
