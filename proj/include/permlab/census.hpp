#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/pattern.hpp"
#include "permlab/relations.hpp"

namespace permlab {

/// class-avoid: the whole class avoids every pattern. class-match: the whole class matches every
/// pattern. avoid / match: the permutation itself avoids / matches every pattern.
enum class Mode { class_avoid, class_match, avoid, match };

std::string to_string(Mode mode);
/// Throws ParseError.
Mode parse_mode(std::string_view text);

struct EnumerationResult {
  int n = 0;
  std::vector<BivincularPattern> patterns;
  std::optional<Relation> relation;  // empty for avoid / match
  Mode mode = Mode::avoid;
  std::uint64_t count = 0;
  std::optional<std::vector<Permutation>> members;  // sorted, when requested
};

/// Dispatches on the mode. Class modes require a relation. Length-0 patterns impose no
/// constraint and are dropped from the set.
EnumerationResult enumerate(Mode mode, const std::vector<BivincularPattern>& patterns,
                            const std::optional<Relation>& relation, int n,
                            const EnumerationOptions& options = {});

EnumerationResult class_avoiders(const std::vector<BivincularPattern>& patterns, const Relation& relation,
                                 int n, const EnumerationOptions& options = {});
EnumerationResult class_avoiders(const BivincularPattern& pattern, const Relation& relation, int n,
                                 const EnumerationOptions& options = {});

EnumerationResult class_matchers(const std::vector<BivincularPattern>& patterns, const Relation& relation,
                                 int n, const EnumerationOptions& options = {});
EnumerationResult class_matchers(const BivincularPattern& pattern, const Relation& relation, int n,
                                 const EnumerationOptions& options = {});

/// Permutations avoiding every pattern of the set.
EnumerationResult avoid_all(const std::vector<BivincularPattern>& patterns, int n,
                            const EnumerationOptions& options = {});
/// Permutations matching every pattern of the set.
EnumerationResult match_all(const std::vector<BivincularPattern>& patterns, int n,
                            const EnumerationOptions& options = {});

struct StabilityWitness {
  int n = 0;
  Permutation permutation;
  /// True when the witness is a class avoider that still matches some equivalent pattern.
  bool in_class_avoiders = false;
};

struct StabilityReport {
  bool stable = true;
  std::vector<BivincularPattern> pattern_class;
  std::optional<StabilityWitness> witness;
};

/// Checks that the class avoiders of `pattern` equal the avoiders of its whole pattern class
/// for every n <= n_max. Throws std::invalid_argument when the relation does not extend to
/// patterns.
StabilityReport is_stable(const BivincularPattern& pattern, const Relation& relation, int n_max,
                          const EnumerationOptions& options = {});

struct SurveyRow {
  BivincularPattern representative;
  std::size_t orbit_size = 0;
  std::vector<std::uint64_t> counts;  // class-avoider counts for n_first..n_last
  std::vector<std::string> sequence_ids;
  /// Index of the first row in the same shift-merged class (toric only; otherwise own index).
  std::size_t shift_class = 0;
};

struct SurveyResult {
  Relation relation{RelationKind::toric};
  int length = 0;
  int n_first = 1;
  int n_last = 1;
  std::size_t total_patterns = 0;
  std::vector<SurveyRow> rows;
  std::size_t shift_merged_classes = 0;
};

/// Every bivincular pattern of the given length, reduced by the relation's compatible symmetry
/// group, with class-avoider counts per representative. For toric equivalence, rows that the
/// shift map links (shift is applied only where the pattern's top value sits in Y) are also
/// grouped.
SurveyResult survey(const Relation& relation, int length, int n_first, int n_last,
                    const EnumerationOptions& options = {});

/// Sum over the class avoiders of the divisor pattern of the position of 1.
std::uint64_t sigma_via_class_avoiders(int n, const EnumerationOptions& options = {});

}  // namespace permlab
