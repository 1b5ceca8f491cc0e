#pragma once

// Reference data: minimal words per coweight, heavy-node exponents, the
// fully commutative words, and the E7 block schedule.  Node labels follow
// the diagrams in rootsys.hpp.

#include "afflim/fullcomm.hpp"
#include "afflim/limitword.hpp"
#include "afflim/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afflim {

struct FixtureRow {
  /// Coweight index the row is listed under; absent for the affine A rows.
  std::optional<int> coweight;
  PeriodicWord word;
};

/// One row per coweight, w = identity.  Throws UnsupportedType for family A.
std::vector<FixtureRow> table1_fixture(const RootSystem& rs);

/// How to read the D_n omega_1 row, which prints "s_3 s_3".
enum class DnReading { Corrected, Literal };

/// Fully commutative words.  Empty for E8, F4, G2; family A gives the
/// Coxeter word 0 1 ... n.  Throws UnsupportedType for B2.
std::vector<FixtureRow> table3_fixture(const RootSystem& rs, DnReading reading = DnReading::Corrected);

struct HeavyExpectation {
  int exponent = 0;
  /// Heavy node in the library labelling.
  int node = 0;
  /// The same node as the exponent table prints it.
  int printed_node = 0;
};

/// Throws UnsupportedType for family A.
HeavyExpectation table2_expectation(const RootSystem& rs);
/// Library label to the exponent table's label (differs only for G2).
int table2_label(const RootSystem& rs, int node);

/// Unfilled nodes of the affine diagram.
std::vector<int> expected_fc_nodes(const RootSystem& rs);

struct ScheduleRow {
  std::vector<int> nodes;  // ascending
  /// Block contents for four consecutive blocks, repeating.
  std::vector<Word> cycle;
};

/// The period-4 block schedule of the E7 fully commutative word at branch node 3.
std::vector<ScheduleRow> e7_block_schedule();

/// Offset o with blocks[p] matching cycle[(p + o) % 4] on every branch for
/// p in [first, last), if any.
std::optional<std::size_t> schedule_offset(const BlockFactorization& bf, const BranchDecomposition& bd,
                                           const std::vector<ScheduleRow>& schedule, std::size_t first, std::size_t last);

struct Table3Check {
  std::optional<int> listed;
  PeriodicWord word;
  bool reduced = false;
  bool fully_commutative = false;
  std::optional<int> certified;
  std::string note;
};

struct Table3Report {
  std::vector<Table3Check> rows;
  /// Certified coweights of the listed words, ascending.
  std::vector<int> certified;
  /// Nodes where walk and quotient tests both report full commutativity.
  std::vector<int> fc_nodes;
  bool complete() const { return certified == fc_nodes; }
};

/// Words are checked at `periods` repetitions of the period.
Table3Report table3_verify(const RootSystem& rs, int periods = kDefaultFcPeriods);

}  // namespace afflim
