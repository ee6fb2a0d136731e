#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dinf/category.hpp"
#include "dinf/oracle.hpp"

namespace dinf {

// negative controls: deliberately broken rules the suite must catch
enum class Fault { None, FlippedTag };

struct PropertyResult {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;  // sorted

  long failed() const { return static_cast<long>(failures.size()); }
  bool pass() const { return checked > 0 && failures.empty(); }
  friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

struct Report {
  DiskModel model;
  pos_t bound = 0;
  std::vector<PropertyResult> properties;
  bool all_pass() const;
};

TaggedEdge translate_with(Fault f, const DiskModel& m, const TaggedEdge& e);

// A1: phi injective, phi_inverse . phi = id, phi . tau = translate . phi
PropertyResult check_bijection(const DiskModel& m, pos_t bound, Fault f = Fault::None);
// A2: E -> F is a move iff translate(F) -> E is
PropertyResult check_move_lemma(const DiskModel& m, pos_t bound);
// A3: Ext positivity (threshold in the completed model) against crossing
PropertyResult check_crossing_ext(const DiskModel& m, pos_t bound, bool parallel = true);
// A4: finite-oracle Ext against crossing
PropertyResult check_oracle_ext(const DiskModel& m, pos_t bound, bool parallel = true);
// A5: fans, unique flips, involution, frozen limit arcs
PropertyResult check_fan_mutation(const DiskModel& m, pos_t bound, int walk_length = 4);
// A6: D5 classes, D4 tilting sets, exchange pairs
PropertyResult check_finite_counts();
// A7: translation law and agreement of move arrows with oracle AR arrows
PropertyResult check_translation_window(const DiskModel& m, pos_t bound);
// A8: exchange-matrix mutation is an involution preserving skew-symmetry
PropertyResult check_exchange_matrices(int count = 1000, int max_size = 8, std::uint64_t seed = 7);

// dimension vectors of the 20 indecomposables of D5 in the reference drawing
std::vector<DimVector> d5_reference_dims();

Report run_verification_suite(const DiskModel& m, pos_t bound, Fault f = Fault::None);

std::string summary(const Report& r);

}  // namespace dinf
