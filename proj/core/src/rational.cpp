#include "ordercone/rational.hpp"

#include <cctype>

#include "ordercone/error.hpp"

namespace ordercone {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NotPointed: return "NotPointed";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::InconsistentRepresentation: return "InconsistentRepresentation";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotPervasive: return "NotPervasive";
    case Errc::NotAtom: return "NotAtom";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NoDecomposition: return "NoDecomposition";
    case Errc::NotABand: return "NotABand";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotDirectSum: return "NotDirectSum";
    case Errc::NotMember: return "NotMember";
    case Errc::NotInC: return "NotInC";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::PreconditionViolated, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return Error(Errc::ParseError, "not a rational literal: '" + std::string(text) + "'");
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) throw bad();
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(Integer(std::string(num.front() == '+' ? num.substr(1) : num)));
    return q;
  }
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) throw bad();
  Integer d(std::string{den});
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  q = Rational(Integer(std::string(num.front() == '+' ? num.substr(1) : num)), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ordercone
