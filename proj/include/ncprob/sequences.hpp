#ifndef NCPROB_SEQUENCES_HPP
#define NCPROB_SEQUENCES_HPP

#include <string>
#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

enum class Flavor { Classical, Free, Boolean, Monotone };

std::string flavor_name(Flavor f);
Flavor flavor_from_string(const std::string& name);

// Raw moments m_1..m_N; m_0 == 1 implicit.
struct MomentSeq {
  std::vector<Rat> values;

  MomentSeq() = default;
  explicit MomentSeq(std::vector<Rat> v) : values(std::move(v)) {}

  int order() const { return static_cast<int>(values.size()); }
  const Rat& moment(int n) const;  // 1-based
  MomentSeq truncated(int order) const;
  bool operator==(const MomentSeq&) const = default;
};

// Cumulants of one flavor, orders 1..N.
struct CumulantSeq {
  Flavor flavor = Flavor::Classical;
  std::vector<Rat> values;

  CumulantSeq() = default;
  CumulantSeq(Flavor f, std::vector<Rat> v) : flavor(f), values(std::move(v)) {}

  int order() const { return static_cast<int>(values.size()); }
  const Rat& cumulant(int n) const;  // 1-based
  bool operator==(const CumulantSeq&) const = default;
};

}  // namespace ncprob

#endif
