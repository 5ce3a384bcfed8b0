#ifndef CANTOR_FMAC_HPP
#define CANTOR_FMAC_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cantor/errors.hpp"
#include "cantor/rational.hpp"

namespace cantor {

// A node of the binary tree 2^<ω, written as a string over {0,1}.
// The empty node prints as "ε".
using Node = std::string;

bool is_prefix(const Node& a, const Node& b);          // a ⊴ b
bool comparable(const Node& a, const Node& b);
std::string node_str(const Node& a);
Node parse_node(const std::string& s);                 // accepts "ε" or "" for the root
std::vector<Node> parse_node_list(const std::string& csv);

// A finite cone prefix standing for all branches of 2^ω that extend it.
struct PointPrefix {
  std::string bits;
  int depth() const { return static_cast<int>(bits.size()); }
};

class Fmac;

// Order-preserving injection from one fmac into a covering one.
struct Lifting {
  std::vector<Node> source;            // sorted
  std::vector<Node> target;            // sorted
  std::map<Node, Node> map;

  const Node& at(const Node& a) const;
  std::vector<Node> apply_set(const std::vector<Node>& s) const;  // sorted image
  std::string str() const;             // "a->b,a'->b'"
  bool operator==(const Lifting& o) const { return map == o.map; }
};

// Finite maximal antichain of 2^<ω. Valid instances are antichains whose
// Kraft sum is exactly 1, checked with exact rationals.
class Fmac {
 public:
  // Throws NotAntichain / NotMaximal; the two failure modes are distinct.
  static Fmac validate(const std::vector<Node>& nodes);
  static Fmac validate(const std::set<Node>& nodes);
  static Fmac root();                  // {ε}
  static Fmac level(int n);            // 2^n

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Node& a) const;
  int max_len() const;
  std::string str() const;             // comma separated, "ε" for the root

  bool operator==(const Fmac& o) const { return nodes_ == o.nodes_; }
  bool operator!=(const Fmac& o) const { return !(*this == o); }

 private:
  std::vector<Node> nodes_;            // sorted
  Fmac() = default;
};

bool covers(const Fmac& a, const Fmac& b);

// All liftings A -> B; |result| equals the product over a in A of the number
// of b in B above a. Throws NotACover.
std::vector<Lifting> enumerate_liftings(const Fmac& a, const Fmac& b);

struct SplitResult {
  Fmac fmac;       // A without a, plus a0 and a1
  Lifting h0, h1;  // the two canonical liftings, h_i(a) = a^i
};
SplitResult split_at(const Fmac& a, const Node& at);

// The unique node of A below p. Requires p at least as deep as the deepest
// node; throws PrefixTooShort otherwise.
Node project(const Fmac& a, const PointPrefix& p);

struct FactorStep {
  Fmac before;
  Node at;
};
// Factors a cover into point splittings: applying split_at along the returned
// chain turns A into B. Splitting order is fixed (lexicographic-least node
// first) so chains replay deterministically.
std::vector<FactorStep> factor_cover(const Fmac& a, const Fmac& b);

Rational kraft_sum(const std::vector<Node>& nodes);

}  // namespace cantor

#endif
