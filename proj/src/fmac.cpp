#include "cantor/fmac.hpp"

#include <algorithm>
#include <sstream>

namespace cantor {

bool is_prefix(const Node& a, const Node& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool comparable(const Node& a, const Node& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

std::string node_str(const Node& a) { return a.empty() ? "ε" : a; }

Node parse_node(const std::string& s) {
  if (s == "ε" || s.empty()) return Node();
  for (char c : s)
    if (c != '0' && c != '1') throw Error("bad node: " + s);
  return s;
}

std::vector<Node> parse_node_list(const std::string& csv) {
  std::vector<Node> out;
  std::string cur;
  std::stringstream ss(csv);
  while (std::getline(ss, cur, ',')) out.push_back(parse_node(cur));
  return out;
}

const Node& Lifting::at(const Node& a) const {
  auto it = map.find(a);
  if (it == map.end()) throw NodeNotInFmac(a);
  return it->second;
}

std::vector<Node> Lifting::apply_set(const std::vector<Node>& s) const {
  std::vector<Node> out;
  out.reserve(s.size());
  for (const auto& a : s) out.push_back(at(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Lifting::str() const {
  std::string out;
  for (const auto& [a, b] : map) {
    if (!out.empty()) out += ",";
    out += node_str(a) + "->" + node_str(b);
  }
  return out;
}

Rational kraft_sum(const std::vector<Node>& nodes) {
  Rational sum(0);
  for (const auto& a : nodes) sum += Rational::pow2(-static_cast<int>(a.size()));
  return sum;
}

Fmac Fmac::validate(const std::vector<Node>& nodes) {
  if (nodes.empty()) throw Error("fmac: empty node set");
  Fmac f;
  f.nodes_ = nodes;
  std::sort(f.nodes_.begin(), f.nodes_.end());
  f.nodes_.erase(std::unique(f.nodes_.begin(), f.nodes_.end()), f.nodes_.end());
  // sorted order puts any prefix immediately-ish before its extensions; a full
  // pairwise check is still cheap at the sizes that occur here
  for (std::size_t i = 0; i < f.nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < f.nodes_.size(); ++j)
      if (comparable(f.nodes_[i], f.nodes_[j]))
        throw NotAntichain(f.nodes_[i], f.nodes_[j]);
  Rational sum = kraft_sum(f.nodes_);
  if (sum != Rational(1)) throw NotMaximal(sum.str());
  return f;
}

Fmac Fmac::validate(const std::set<Node>& nodes) {
  return validate(std::vector<Node>(nodes.begin(), nodes.end()));
}

Fmac Fmac::root() {
  Fmac f;
  f.nodes_ = {Node()};
  return f;
}

Fmac Fmac::level(int n) {
  Fmac f;
  f.nodes_.reserve(1u << n);
  for (unsigned m = 0; m < (1u << n); ++m) {
    Node a;
    for (int i = n - 1; i >= 0; --i) a.push_back((m >> i) & 1 ? '1' : '0');
    f.nodes_.push_back(a);
  }
  std::sort(f.nodes_.begin(), f.nodes_.end());
  return f;
}

bool Fmac::contains(const Node& a) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), a);
}

int Fmac::max_len() const {
  std::size_t m = 0;
  for (const auto& a : nodes_) m = std::max(m, a.size());
  return static_cast<int>(m);
}

std::string Fmac::str() const {
  std::string out;
  for (const auto& a : nodes_) {
    if (!out.empty()) out += ",";
    out += node_str(a);
  }
  return out;
}

bool covers(const Fmac& a, const Fmac& b) {
  for (const auto& x : a.nodes()) {
    bool found = false;
    for (const auto& y : b.nodes())
      if (is_prefix(x, y)) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

std::vector<Lifting> enumerate_liftings(const Fmac& a, const Fmac& b) {
  if (!covers(a, b)) throw NotACover(a.str() + " by " + b.str());
  std::vector<std::vector<Node>> choices;
  for (const auto& x : a.nodes()) {
    std::vector<Node> cs;
    for (const auto& y : b.nodes())
      if (is_prefix(x, y)) cs.push_back(y);
    choices.push_back(std::move(cs));
  }
  std::vector<Lifting> out;
  std::vector<std::size_t> pick(a.size(), 0);
  for (;;) {
    Lifting h;
    h.source = a.nodes();
    h.target = b.nodes();
    for (std::size_t i = 0; i < a.size(); ++i) h.map[a.nodes()[i]] = choices[i][pick[i]];
    out.push_back(std::move(h));
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (a.size() == 0) return out;
  }
}

SplitResult split_at(const Fmac& a, const Node& at) {
  if (!a.contains(at)) throw NodeNotInFmac(at);
  std::vector<Node> ns;
  for (const auto& x : a.nodes())
    if (x != at) ns.push_back(x);
  ns.push_back(at + "0");
  ns.push_back(at + "1");
  SplitResult r{Fmac::validate(ns), {}, {}};
  for (int i = 0; i < 2; ++i) {
    Lifting h;
    h.source = a.nodes();
    h.target = r.fmac.nodes();
    for (const auto& x : a.nodes()) h.map[x] = (x == at) ? at + (i ? "1" : "0") : x;
    (i ? r.h1 : r.h0) = std::move(h);
  }
  return r;
}

Node project(const Fmac& a, const PointPrefix& p) {
  int need = a.max_len();
  if (p.depth() < need) throw PrefixTooShort(need);
  for (const auto& x : a.nodes())
    if (is_prefix(x, p.bits)) return x;
  throw Error("project: no node below " + p.bits);  // unreachable on valid fmacs
}

std::vector<FactorStep> factor_cover(const Fmac& a, const Fmac& b) {
  if (!covers(a, b)) throw NotACover(a.str() + " by " + b.str());
  std::vector<FactorStep> steps;
  Fmac cur = a;
  while (cur != b) {
    // eligible: nodes of cur that are proper prefixes of nodes of b
    Node pick;
    bool found = false;
    for (const auto& x : cur.nodes()) {
      if (!b.contains(x)) { pick = x; found = true; break; }  // nodes() is sorted
    }
    if (!found) throw Error("factor_cover: stuck");  // cannot happen for covers
    steps.push_back({cur, pick});
    cur = split_at(cur, pick).fmac;
  }
  return steps;
}

}  // namespace cantor
