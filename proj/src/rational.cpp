#include "hgw/rational.hpp"

namespace hgw {

std::string rat_to_fraction_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return rat_to_fraction_string(q);
}

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace hgw
