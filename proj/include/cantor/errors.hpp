#ifndef CANTOR_ERRORS_HPP
#define CANTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cantor {

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// fmac algebra
struct NotAntichain : Error {
  std::string a, b;
  NotAntichain(std::string a_, std::string b_)
      : Error("not an antichain: " + (a_.empty() ? "ε" : a_) + " is a prefix of " +
              (b_.empty() ? "ε" : b_)),
        a(std::move(a_)), b(std::move(b_)) {}
};
struct NotMaximal : Error {
  std::string kraft;  // exact rational, e.g. "3/4"
  explicit NotMaximal(std::string k)
      : Error("not maximal: Kraft sum is " + k), kraft(std::move(k)) {}
};
struct NotACover : Error {
  explicit NotACover(const std::string& m) : Error("not a cover: " + m) {}
};
struct NodeNotInFmac : Error {
  explicit NodeNotInFmac(const std::string& a)
      : Error("node not in fmac: " + (a.empty() ? "ε" : a)) {}
};
struct PrefixTooShort : Error {
  int required;
  explicit PrefixTooShort(int req)
      : Error("prefix too short, need depth " + std::to_string(req)), required(req) {}
};

// logic core
struct SyntaxError : Error {
  int position;
  SyntaxError(const std::string& m, int pos)
      : Error("syntax error at " + std::to_string(pos) + ": " + m), position(pos) {}
};
struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& s) : Error("unknown symbol: " + s) {}
};
struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& s) : Error("arity mismatch: " + s) {}
};
struct UnassignedFreeVariable : Error {
  explicit UnassignedFreeVariable(const std::string& v)
      : Error("unassigned free variable: " + v) {}
};
struct SymbolOutsideSource : Error {
  explicit SymbolOutsideSource(const std::string& s)
      : Error("symbol indexed outside the lifting source: " + s) {}
};
struct SymbolOutsideFmac : Error {
  explicit SymbolOutsideFmac(const std::string& s)
      : Error("symbol indexed outside the fmac: " + s) {}
};
struct InconsistentDiagram : Error {
  explicit InconsistentDiagram(const std::string& a)
      : Error("inconsistent diagram: " + a) {}
};
struct CongruenceViolation : Error {
  explicit CongruenceViolation(const std::string& m)
      : Error("congruence violation: " + m) {}
};
struct MissingInterpretation : Error {
  explicit MissingInterpretation(const std::string& m)
      : Error("missing interpretation: " + m) {}
};

// oracles
struct UnsupportedSignature : Error {
  explicit UnsupportedSignature(const std::string& m)
      : Error("unsupported signature: " + m) {}
};
struct NoSolution : Error {
  explicit NoSolution(const std::string& m) : Error("no solution: " + m) {}
};
struct AllSolutionsClosed : Error {
  explicit AllSolutionsClosed(const std::string& m)
      : Error("all solutions lie in the closure: " + m) {}
};

// commitments / scheduler / providers
struct CertificateFails : Error {
  explicit CertificateFails(const std::string& conjunct)
      : Error("certificate fails conjunct: " + conjunct) {}
};
struct DegenerateXAssignment : Error {
  explicit DegenerateXAssignment(const std::string& pair)
      : Error("degenerate x-assignment: " + pair) {}
};
struct ProviderFailure : Error {
  ProviderFailure(const std::string& goal, const std::string& reason)
      : Error("provider failure in " + goal + ": " + reason) {}
};
struct OmitSearchExhausted : Error {
  explicit OmitSearchExhausted(int bound)
      : Error("omit search exhausted after " + std::to_string(bound) + " formulas") {}
};
struct FormulaNeverScheduled : Error {
  explicit FormulaNeverScheduled(const std::string& f)
      : Error("formula never entered the decided window: " + f) {}
};
struct Undecided : Error {
  explicit Undecided(const std::string& t) : Error("undecided at: " + t) {}
};
struct CapTooSmall : Error {
  explicit CapTooSmall(int cap)
      : Error("rank cap " + std::to_string(cap) + " too small to certify") {}
};
struct SearchSpaceExceeded : Error {
  explicit SearchSpaceExceeded(long long bound)
      : Error("search space exceeded bound " + std::to_string(bound)) {}
};

}  // namespace cantor

#endif
