#include "ncprob/sequences.hpp"

#include "ncprob/errors.hpp"

namespace ncprob {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Classical: return "classical";
    case Flavor::Free: return "free";
    case Flavor::Boolean: return "boolean";
    case Flavor::Monotone: return "monotone";
  }
  return "?";
}

Flavor flavor_from_string(const std::string& name) {
  if (name == "classical") return Flavor::Classical;
  if (name == "free") return Flavor::Free;
  if (name == "boolean") return Flavor::Boolean;
  if (name == "monotone") return Flavor::Monotone;
  throw InvalidInputError("unknown flavor: " + name);
}

const Rat& MomentSeq::moment(int n) const {
  if (n < 1 || n > order()) throw InvalidInputError("moment index out of range");
  return values[n - 1];
}

MomentSeq MomentSeq::truncated(int order) const {
  if (order < 1 || order > this->order())
    throw InvalidInputError("truncation order out of range");
  return MomentSeq(std::vector<Rat>(values.begin(), values.begin() + order));
}

const Rat& CumulantSeq::cumulant(int n) const {
  if (n < 1 || n > order()) throw InvalidInputError("cumulant index out of range");
  return values[n - 1];
}

}  // namespace ncprob
