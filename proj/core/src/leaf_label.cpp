#include "mast/leaf_label.hpp"

#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace mast {

namespace {

// Writes the token into buf (size >= 24) and returns buf.
const char* write_token(const LeafLabel& l, char* buf) {
  switch (l.kind()) {
    case LeafLabel::Kind::Original:
      std::snprintf(buf, 24, "L%lld", static_cast<long long>(l.index()));
      return buf;
    case LeafLabel::Kind::Star:
      return "STAR";
    case LeafLabel::Kind::Bullet:
      return "BULLET";
    case LeafLabel::Kind::SplitToken:
      std::snprintf(buf, 24, "B%lld", static_cast<long long>(l.index()));
      return buf;
  }
  return "";
}

bool parse_integer(const std::string& s, std::size_t from, std::int64_t* out) {
  if (from >= s.size()) return false;
  std::int64_t v = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  *out = v;
  return true;
}

}  // namespace

LeafLabel LeafLabel::original(std::int64_t index) {
  if (index < 1) throw std::invalid_argument("original leaf index must be >= 1");
  return LeafLabel(Kind::Original, index);
}

LeafLabel LeafLabel::split_token(std::int64_t id) {
  if (id < 0) throw std::invalid_argument("split token id must be >= 0");
  return LeafLabel(Kind::SplitToken, id);
}

std::string LeafLabel::token() const {
  char buf[24];
  return write_token(*this, buf);
}

LeafLabel LeafLabel::from_token(const std::string& token) {
  if (token == "STAR") return star();
  if (token == "BULLET") return bullet();
  std::int64_t v = 0;
  if (!token.empty() && token[0] == 'L' && parse_integer(token, 1, &v) && v >= 1)
    return original(v);
  if (!token.empty() && token[0] == 'B' && parse_integer(token, 1, &v))
    return split_token(v);
  throw std::invalid_argument("unrecognized leaf token: '" + token + "'");
}

int LeafLabel::compare(const LeafLabel& a, const LeafLabel& b) {
  char ba[24], bb[24];
  return std::strcmp(write_token(a, ba), write_token(b, bb));
}

}  // namespace mast
