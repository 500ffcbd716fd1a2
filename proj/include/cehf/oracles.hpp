#pragma once

// Exhaustive reference implementations. Everything here is exponential and
// meant for desk-scale instances; the polynomial pipeline is checked against it.

#include <functional>
#include <optional>
#include <vector>

#include "cehf/certificates.hpp"
#include "cehf/graph.hpp"

namespace cehf {

using Cycle = std::vector<Vertex>;

/// Visits every chordless cycle with min_len <= length <= max_len exactly once,
/// in canonical form (starts at its minimum vertex, second vertex smaller than
/// the last). The visitor returns false to stop early. Returns false when stopped.
///
/// Vertices are extended in ascending order from each start vertex, so the
/// visiting order is deterministic.
bool for_each_chordless_cycle(const Graph& g, int min_len, int max_len,
                              const std::function<bool(const Cycle&)>& visit,
                              const Limits& limits = {});

/// All chordless cycles of length >= 3 (<= max_len when given), sorted.
std::vector<Cycle> enumerate_chordless_cycles(const Graph& g, std::optional<int> max_len = {},
                                              const Limits& limits = {});

/// All holes (chordless cycles of length >= 4), sorted.
std::vector<Cycle> enumerate_holes(const Graph& g, const Limits& limits = {});

/// Solves the GF(2) system "every chordless cycle has odd weight".
std::optional<Signing> odd_signable_signing(const Graph& g, const Limits& limits = {});

/// True when every chordless cycle has odd weight under `s`.
bool verify_signing(const Graph& g, const Signing& s, const Limits& limits = {});

std::optional<ForbiddenWitness> find_forbidden_induced(const Graph& g, ForbiddenKind kind,
                                                       const Limits& limits = {});

// ---- exact solvers ------------------------------------------------------

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

ChromaticResult brute_chromatic(const Graph& g, const Limits& limits = {});
/// Maximum weight stable set under g's weights (negative weights allowed).
StableSetResult brute_mwss(const Graph& g, const Limits& limits = {});
VertexSet brute_max_clique(const Graph& g, const Limits& limits = {});
/// A clique K (possibly empty) with G \ K disconnected, smallest size first and
/// lexicographically first within a size; nullopt when none exists.
std::optional<VertexSet> brute_clique_cutset(const Graph& g, const Limits& limits = {});

/// True-twin classes by direct comparison of closed neighbourhoods, ordered by
/// minimum vertex.
std::vector<VertexSet> twin_classes_pairwise(const Graph& g);

enum class BruteProblem { Chromatic, Mwss, MaxClique, CliqueCutset };

struct Certificate {
  BruteProblem problem;
  bool none = false;    // clique-cutset: no cutset exists
  Weight value = 0;     // chi, alpha_w, omega, or cutset size
  VertexSet set;        // stable set, clique, or cutset
  Coloring coloring;    // chromatic only
};

Certificate brute_solve(const Graph& g, BruteProblem problem, const Limits& limits = {});

}  // namespace cehf
