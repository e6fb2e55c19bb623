#pragma once

#include <optional>
#include <string>

#include "germkit/discriminant.hpp"

namespace germkit {

enum class GermKind { Set, Function };

// Input data for a tower build. The ring lists x_1..x_n in order; for a
// function germ the first entry of `defining` is the function g_0 = g and
// the rest are the set equations, all in x_2..x_n only.
struct InputGerm {
  GermKind kind = GermKind::Set;
  Ring ring;
  std::vector<Series> defining;
  int truncation = 12;
  int shear_bound = 16;
};

struct TowerStage {
  int level = 0;       // f lives in x_1..x_level, Weierstrass in x_level
  WeierstrassPoly f;
  Series unit;
  std::optional<DiscriminantRecord> disc; // record that produced this stage
  std::vector<std::vector<long>> change;  // coordinate change applied here
  int q = 0;                              // extracted power of x_1
  int valid_to = 0;
};

struct TransversalityEntry {
  int level = 0;
  std::vector<int> orders;
  std::vector<int> mults;
  bool strict = true;
};

struct Tower {
  GermKind kind = GermKind::Set;
  Ring ring;
  std::vector<TowerStage> stages; // level n first, strictly decreasing
  // Function mode: b[m][k] with g_m = sum_k x_k b_{m,k} (k is a 0-based
  // variable index; columns 0 stay empty since x_1 is never used).
  std::vector<std::vector<Series>> b;
  std::vector<TransversalityEntry> transversality;
};

Tower build_set_tower(const InputGerm& germ);
Tower build_function_tower(const InputGerm& germ);

struct StageCheck {
  int level = 0;
  bool reconstruction_ok = false;
  int agreement_degree = -1;
  int checked_to = 0;
  bool vanishing_ok = true;
  std::string note;
};

struct TowerReport {
  bool ok = false;
  std::vector<StageCheck> stages;
};

// Re-multiplies every stage identity from scratch: the prepared product at
// the top and u_i * x_1^{q_i} * f_i against the recomputed discriminant
// below, plus the vanishing ledger of the skipped discriminants.
TowerReport verify_tower(const Tower& t, const InputGerm& germ);

} // namespace germkit
