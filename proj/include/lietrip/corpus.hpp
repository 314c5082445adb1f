#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "lietrip/field.hpp"
#include "lietrip/grlie.hpp"
#include "lietrip/lts.hpp"

namespace lietrip::corpus {

/// n-dimensional abelian triple system.
LieTripleSystem abl(FieldSpec f, std::size_t n);
/// Odd part of sl2 graded by span{h}; basis (e, f).
LieTripleSystem odd2(FieldSpec f);
/// sl2 with [a,b,c] = [[a,b],c]; basis (h, e, f).
LieTripleSystem sl2lts(FieldSpec f);

/// sl2 with the trivial grading; basis (h, e, f).
GradedLieAlgebra sl2(FieldSpec f);
/// sl2 graded by (span{h} | span{e, f}).
GradedLieAlgebra sl2graded(FieldSpec f);
/// (span{z} | span{x, y}) with [x, y] = z.
GradedLieAlgebra heis(FieldSpec f);
/// Two-dimensional abelian, purely odd.
GradedLieAlgebra ab2(FieldSpec f);
/// sl2graded plus a central even line; basis (h, c | e, f).
GradedLieAlgebra sl2line(FieldSpec f);
/// sl2 + sl2 with even part {(x, x)} and odd part {(x, -x)}; basis
/// (h+h', e+e', f+f' | h-h', e-e', f-f').
GradedLieAlgebra sl2pair(FieldSpec f);

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Entry = std::variant<LieTripleSystem, GradedLieAlgebra>;

/// Looks up "abl(n)", "odd2", "sl2lts", "heis", "ab2", "sl2graded", "sl2",
/// "sl2line", "sl2pair" or "a_of(<lts name>)". Throws UnknownName on
/// an unknown or malformed name.
Entry lookup(const std::string& name, FieldSpec f);

/// Names of the fixed entries, with abl(1..4).
std::vector<std::string> names();

}  // namespace lietrip::corpus
