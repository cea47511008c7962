// One line per acceptance item; exit status 0 iff every item passes.

#include "hallkit/errors.hpp"
#include "hallkit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

using namespace hallkit;

namespace {

struct Item {
  int number;
  std::string group;
  double limit_s;  ///< 0: no runtime bound
  /// Extra pinned expectations; returns an empty string or a failure description.
  std::function<std::string(const std::vector<CheckReport>&)> pins;
};

struct Expected {
  DimVector a, b;
  PairCase left, right;
  DimVector gamma, lambda;
};

/// Pinned mutation fixtures: cases and targets on both sides.
std::string check_mutation_pins(bool left) {
  const Expected rows[] = {
      {{1, 0}, {0, 1}, PairCase::nonpos, PairCase::nonpos, {2, 1}, {1, 2}},
      {{2, 1}, {1, 0}, PairCase::big, PairCase::small, {3, 2}, {0, 1}},
      {{1, 2}, {2, 3}, PairCase::big, PairCase::big, {0, 1}, {3, 4}},
      {{0, 1}, {1, 2}, PairCase::small, PairCase::big, {1, 0}, {2, 3}},
  };
  for (int q : {2, 3}) {
    Catalog a2(a2_quiver(q));
    const ExceptionalPair p = classify_pair(a2, a2.simple(0), a2.simple(1));
    const ClassId t = left ? left_mutation(a2, p.alpha, p.beta) : right_mutation(a2, p.alpha, p.beta);
    if ((left ? p.left_case : p.right_case) != PairCase::nonpos || a2.at(t).dim != DimVector{1, 1})
      return "A2 simples: unexpected case or target";
    Catalog k(kronecker_quiver(q));
    for (const auto& r : rows) {
      const ClassId a = find_exceptional(k, r.a), b = find_exceptional(k, r.b);
      const ExceptionalPair kp = classify_pair(k, a, b);
      const PairCase got = left ? kp.left_case : kp.right_case;
      const DimVector target = k.at(left ? left_mutation(k, a, b) : right_mutation(k, a, b)).dim;
      if (got != (left ? r.left : r.right) || target != (left ? r.gamma : r.lambda))
        return "Kronecker pair " + r.a.to_string() + "," + r.b.to_string() + ": got case " + roman(got) + " target " +
               target.to_string();
    }
  }
  return {};
}

std::string count_instances(const std::vector<CheckReport>& rs, const std::string& needle, size_t at_least) {
  size_t n = 0;
  for (const auto& r : rs) n += r.instance.find(needle) != std::string::npos;
  return n >= at_least ? std::string() : "expected at least " + std::to_string(at_least) + " reports on " + needle;
}

} // namespace

int main() {
  const std::vector<Item> items = {
      {1, "sums", 1.0,
       [](const auto& rs) {
         return rs.size() == 2 && rs[0].checked > 0 ? std::string() : std::string("missing field sizes");
       }},
      {2, "green", 120.0,
       [](const auto& rs) {
         for (const char* who : {"quiver[1->2] q=2", "quiver[1->2] q=3", "Kronecker q=2", "Kronecker q=3"})
           if (auto s = count_instances(rs, who, 1); !s.empty()) return s;
         return std::string();
       }},
      {3, "left", 120.0, [](const auto&) { return check_mutation_pins(true); }},
      {4, "right", 120.0, [](const auto&) { return check_mutation_pins(false); }},
      {5, "serre", 0.0,
       [](const auto& rs) {
         std::set<std::string> pairs;
         bool nonpos = false, positive = false;
         for (const auto& r : rs) {
           pairs.insert(r.instance.substr(0, r.instance.find(" sign")));
           nonpos = nonpos || r.instance.find("(nonpositive form)") != std::string::npos;
           positive = positive || r.instance.find("(positive form)") != std::string::npos;
         }
         if (pairs.size() < 3) return std::string("fewer than three pairs");
         return nonpos && positive ? std::string() : std::string("both branches must be covered");
       }},
      {6, "line", 180.0,
       [](const auto& rs) {
         for (const char* who : {"q=2 i=0", "q=2 i=1", "q=2 i=2", "q=3 i=0", "q=3 i=1", "q=3 i=2"})
           if (auto s = count_instances(rs, who, 1); !s.empty()) return s;
         for (int q : {2, 3}) {
           Catalog k(kronecker_quiver(q));
           int regular = 0;
           for (ClassId c : k.enumerate(DimVector{1, 1})) regular += k.is_indecomposable(c);
           if (regular != q + 1) return std::string("regular class count is not q + 1");
         }
         return std::string();
       }},
      {7, "orbits", 0.0,
       [](const auto& rs) {
         for (const char* who : {"quiver[1->2] q=", "quiver[1->2 2->3] q=", "Kronecker q=", "depth 3"})
           if (auto s = count_instances(rs, who, 2); !s.empty()) return s;
         return count_instances(rs, "", 8);
       }},
      {8, "double", 0.0,
       [](const auto& rs) {
         for (const auto& r : rs)
           if (r.name == "double associativity" && r.instance.find("100 triples") == std::string::npos)
             return std::string("fewer than 100 triples");
         return count_instances(rs, "100 triples", 3);
       }},
  };

  std::map<std::string, SuiteGroup> groups;
  for (auto& g : default_suite()) groups.emplace(g.key, g);

  bool all = true;
  for (const auto& item : items) {
    const SuiteGroup& g = groups.at(item.group);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckReport> reports;
    std::string problem;
    try {
      reports = g.run({});
      for (const auto& r : reports)
        if (!r.pass && problem.empty()) problem = r.name + " [" + r.instance + "]: " + r.discrepancy.dump();
      if (problem.empty()) problem = item.pins(reports);
    } catch (const Error& e) {
      problem = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (problem.empty() && item.limit_s > 0 && secs > item.limit_s)
      problem = "took " + std::to_string(secs) + " s, bound " + std::to_string(item.limit_s) + " s";
    long checked = 0;
    for (const auto& r : reports) checked += r.checked;
    const bool ok = problem.empty();
    all = all && ok;
    std::printf("[%d] %-45s %s  (%zu reports, %ld identities, %.2f s)\n", item.number, g.title.c_str(), ok ? "PASS" : "FAIL",
                reports.size(), checked, secs);
    if (!ok) std::printf("    %s\n", problem.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
