// Leaf labels of a binary tree: numbered originals, the two distinguished
// leaves (star, bullet), and the ephemeral tokens created by splitting a
// branch point. Labels are ordered by the ASCII order of their rendered
// tokens ("B7" < "BULLET" < "L1" < "L10" < "L2" < "STAR"), which is the
// order used everywhere a canonical form is needed.
#ifndef MAST_LEAF_LABEL_HPP
#define MAST_LEAF_LABEL_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace mast {

class LeafLabel {
 public:
  enum class Kind : std::uint8_t { Original, Star, Bullet, SplitToken };

  LeafLabel() : kind_(Kind::Star), index_(0) {}

  static LeafLabel original(std::int64_t index);
  static LeafLabel star() { return LeafLabel(Kind::Star, 0); }
  static LeafLabel bullet() { return LeafLabel(Kind::Bullet, 0); }
  static LeafLabel split_token(std::int64_t id);

  Kind kind() const { return kind_; }
  std::int64_t index() const { return index_; }
  bool is_original() const { return kind_ == Kind::Original; }
  bool is_distinguished() const { return kind_ != Kind::Original; }

  /// Rendered token, e.g. "L12", "STAR", "BULLET", "B3".
  std::string token() const;

  /// Parses a rendered token; throws std::invalid_argument on junk.
  static LeafLabel from_token(const std::string& token);

  bool operator==(const LeafLabel& o) const {
    return kind_ == o.kind_ && index_ == o.index_;
  }
  bool operator!=(const LeafLabel& o) const { return !(*this == o); }
  bool operator<(const LeafLabel& o) const { return compare(*this, o) < 0; }

  // <0, 0, >0 as the rendered tokens compare in ASCII order.
  static int compare(const LeafLabel& a, const LeafLabel& b);

 private:
  LeafLabel(Kind kind, std::int64_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::int64_t index_;
};

struct LeafLabelHash {
  std::size_t operator()(const LeafLabel& l) const {
    return std::hash<std::int64_t>()(l.index() * 4 +
                                     static_cast<std::int64_t>(l.kind()));
  }
};

}  // namespace mast

#endif
