// Copyright 2026 The symtk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symtk/theorem.h"

#include <algorithm>
#include <chrono>
#include <map>

#include "json.hpp"
#include "symtk/error.h"
#include "symtk/group.h"
#include "symtk/search.h"

namespace symtk {
namespace {

constexpr std::size_t kClosureCap = 1000;
constexpr std::uint64_t kS5Order = 120;

class PhaseTimer {
 public:
  explicit PhaseTimer(std::vector<PhaseTiming>* timings) : timings_(timings) {}

  template <typename F>
  auto Run(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      timings_->push_back({phase, elapsed.count()});
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto result = f();
      finish();
      return result;
    }
  }

 private:
  std::vector<PhaseTiming>* timings_;
};

// Order of the group generated by gens, by enumeration when small.
std::uint64_t GeneratedOrder(std::span<const Permutation> gens) {
  try {
    return Closure(gens, kClosureCap).size();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCapacityExceeded) throw;
    return SchreierSims(gens).Order();
  }
}

}  // namespace

std::vector<Permutation> S5Generators() {
  return {Permutation::FromCycles(5, {{1, 2}}),
          Permutation::FromCycles(5, {{1, 2, 3, 4, 5}})};
}

Permutation InducedSubsetAction(const Permutation& g, int k) {
  const auto subsets = Subsets(static_cast<int>(g.degree()), k);
  std::map<std::vector<Point>, Point> index;
  for (Point i = 0; i < subsets.size(); ++i) index[subsets[i].members] = i;
  std::vector<Point> images(subsets.size());
  for (Point i = 0; i < subsets.size(); ++i) {
    std::vector<Point> moved;
    for (Point a : subsets[i].members) moved.push_back(g[a - 1] + 1);
    std::sort(moved.begin(), moved.end());
    images[i] = index.at(moved);
  }
  return Permutation::FromImages(std::move(images));
}

Permutation InducedAction(const Permutation& g) {
  if (g.degree() != 5) {
    throw Error(ErrorKind::kDegreeMismatch,
                "induced action needs a permutation of degree 5, got " +
                    std::to_string(g.degree()));
  }
  return InducedSubsetAction(g, 3);
}

HomomorphismCheck CheckHomomorphism(HomomorphismMode mode,
                                    std::span<const Permutation> generators,
                                    const GroupAction& action) {
  HomomorphismCheck check{true, 0};
  auto record = [&](bool ok) {
    ++check.pairs_checked;
    check.holds = check.holds && ok;
  };
  if (mode == HomomorphismMode::kAllPairs) {
    const auto elements = Closure(generators, kClosureCap);
    std::vector<Permutation> images;
    images.reserve(elements.size());
    for (const Permutation& g : elements) images.push_back(action(g));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const Permutation lhs = action(Compose(elements[i], elements[j]));
        record(lhs == Compose(images[i], images[j]));
      }
    }
    return check;
  }
  // Words up to length 3, each compared against the product of the images
  // of its letters.
  struct Word {
    Permutation element;
    Permutation image_product;
  };
  std::vector<Word> words;
  for (const Permutation& g : generators) words.push_back({g, action(g)});
  for (const Word& w : words) record(action(w.element) == w.image_product);
  for (int length = 2; length <= 3; ++length) {
    std::vector<Word> longer;
    for (const Word& w : words) {
      for (const Permutation& g : generators) {
        Word next{Compose(w.element, g), Compose(w.image_product, action(g))};
        record(action(next.element) == next.image_product);
        longer.push_back(std::move(next));
      }
    }
    words = std::move(longer);
  }
  return check;
}

HomomorphismCheck CheckHomomorphism(HomomorphismMode mode) {
  return CheckHomomorphism(mode, S5Generators(), InducedAction);
}

bool CheckKernelTrivial(std::span<const Permutation> generators,
                        const GroupAction& action) {
  for (const Permutation& g : Closure(generators, kClosureCap)) {
    if (!g.IsIdentity() && action(g).IsIdentity()) return false;
  }
  return true;
}

bool CheckKernelTrivial() {
  return CheckKernelTrivial(S5Generators(), InducedAction);
}

VerificationReport VerifyTheorem(const VerifyOptions& options) {
  VerificationReport report;
  PhaseTimer timer(&report.timings);
  const GroupAction action = options.action ? options.action : InducedAction;
  const auto s5 = S5Generators();

  const Graph graph = timer.Run("build_graph", [&] {
    Graph g = options.graph ? *options.graph : PetersenSubsets();
    report.graph_stats = {g.n(), EdgeCount(g), IsRegular(g), Girth(g),
                          Diameter(g)};
    return g;
  });

  timer.Run("phi_into_aut", [&] {
    std::vector<Permutation> image_gens;
    for (const Permutation& g : s5) {
      image_gens.push_back(action(g));
      report.phi_generator_images.emplace_back(g.ToCycleString(),
                                               image_gens.back().ToCycleString());
    }
    report.phi_preserves_adjacency = true;
    for (const Permutation& g : Closure(s5, kClosureCap)) {
      const Permutation image = action(g);
      if (image.degree() != graph.n() || !IsAutomorphism(graph, image)) {
        report.phi_preserves_adjacency = false;
        break;
      }
    }
  });

  timer.Run("homomorphism", [&] {
    const auto check = CheckHomomorphism(HomomorphismMode::kAllPairs, s5, action);
    report.homomorphism_holds = check.holds;
    report.homomorphism_checked = check.pairs_checked;
  });

  timer.Run("kernel", [&] {
    report.kernel_trivial = CheckKernelTrivial(s5, action);
  });

  timer.Run("image_order", [&] {
    std::vector<Permutation> image_gens;
    for (const Permutation& g : s5) image_gens.push_back(action(g));
    report.image_order = GeneratedOrder(image_gens);
  });

  timer.Run("aut_search", [&] {
    const auto gens = AutomorphismGroup(graph);
    report.aut_order_search = gens.empty() ? 1 : SchreierSims(gens).Order();
  });

  if (options.run_brute) {
    timer.Run("aut_brute", [&] {
      const BruteForceScan scan =
          ScanAllPermutations(graph, options.brute_threads);
      report.aut_order_brute = scan.automorphisms.size();
      report.brute_permutations_scanned = scan.permutations_scanned;
    });
  }

  const bool verified =
      report.phi_preserves_adjacency && report.homomorphism_holds &&
      report.kernel_trivial && report.image_order == kS5Order &&
      report.aut_order_search == kS5Order &&
      (!report.aut_order_brute || *report.aut_order_brute == kS5Order);
  report.verdict = verified ? Verdict::kVerified : Verdict::kFalsified;
  return report;
}

const char* VerdictName(Verdict verdict) {
  return verdict == Verdict::kVerified ? "VERIFIED" : "FALSIFIED";
}

std::string ReportToJson(const VerificationReport& report) {
  using nlohmann::ordered_json;
  auto optional_number = [](const auto& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json doc;
  const GraphStats& s = report.graph_stats;
  doc["graph_stats"] = {{"n", s.n},
                        {"edges", s.edges},
                        {"regular_degree", optional_number(s.regular_degree)},
                        {"girth", optional_number(s.girth)},
                        {"diameter", optional_number(s.diameter)}};
  ordered_json images = ordered_json::array();
  for (const auto& [generator, image] : report.phi_generator_images) {
    images.push_back({{"generator", generator}, {"image", image}});
  }
  doc["phi_generator_images"] = std::move(images);
  doc["homomorphism_checked"] = report.homomorphism_checked;
  doc["kernel_trivial"] = report.kernel_trivial;
  doc["image_order"] = report.image_order;
  doc["aut_order_search"] = report.aut_order_search;
  doc["aut_order_brute"] = optional_number(report.aut_order_brute);
  doc["verdict"] = VerdictName(report.verdict);
  ordered_json timings = ordered_json::object();
  for (const PhaseTiming& t : report.timings) timings[t.phase] = t.milliseconds;
  doc["timings"] = std::move(timings);
  return doc.dump(2) + "\n";
}

std::string FormatSummary(const VerificationReport& report) {
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  const GraphStats& s = report.graph_stats;
  std::string out;
  out += "graph: n=" + std::to_string(s.n) + " edges=" +
         std::to_string(s.edges) + " regular=" + opt(s.regular_degree) +
         " girth=" + opt(s.girth) + " diameter=" + opt(s.diameter) + "\n";
  for (const auto& [generator, image] : report.phi_generator_images) {
    out += "phi" + generator + " = " + image + "\n";
  }
  out += std::string("phi maps S5 into Aut: ") +
         yes_no(report.phi_preserves_adjacency) + "\n";
  out += std::string("homomorphism: ") +
         (report.homomorphism_holds ? "holds" : "fails") + " (" +
         std::to_string(report.homomorphism_checked) + " pairs checked)\n";
  out += std::string("kernel trivial: ") + yes_no(report.kernel_trivial) + "\n";
  out += "image of phi: order " + std::to_string(report.image_order) + "\n";
  out += "Aut by search: order " + std::to_string(report.aut_order_search) +
         "\n";
  if (report.aut_order_brute) {
    out += "Aut by exhaustive scan: order " +
           std::to_string(*report.aut_order_brute) + " (" +
           std::to_string(report.brute_permutations_scanned.value_or(0)) +
           " permutations scanned)\n";
  }
  out += std::string("verdict: ") + VerdictName(report.verdict) + "\n";
  return out;
}

}  // namespace symtk
