#pragma once

// Braid words and their evaluation in the category of tangled relations.
//
// Letters act left to right: the first letter of a word is applied first.
// A positive letter at i sends (..., u, v, ...) at positions (i, i+1) to
// (..., u▷v, u, ...); a negative one sends it to (..., v, u◁v, ...).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "irack/relation.hpp"
#include "irack/tables.hpp"
#include "irack/tangled.hpp"

namespace irack {

struct BraidLetter {
  std::size_t generator = 1;  // 1-based
  bool positive = true;
  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  /// Throws OutOfRange if strands is 0 or a generator is outside [1, strands-1].
  BraidWord(std::size_t strands, std::vector<BraidLetter> letters = {});

  std::size_t strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  BraidWord inverse() const;
  BraidWord power(std::size_t k) const;
  /// Throws ArityMismatch on differing strand counts.
  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);

  bool operator==(const BraidWord&) const = default;

 private:
  std::size_t strands_;
  std::vector<BraidLetter> letters_;
};

/// Whitespace-separated "sI" / "sI^-1" tokens. Throws ParseError or OutOfRange.
BraidWord parse_braid(std::string_view text, std::size_t strands);
std::string format_braid(const BraidWord& word);

/// Throws ArityMismatch unless t.arity() == word.strands().
Tuple apply_braid(const BraidWord& word, const Tuple& t, const IrackTable& irack);

/// {t ↦ apply_braid(word, t)} on A^n. Throws CapExceeded.
Relation eval_braid(const BraidWord& word, const IrackTable& irack);

/// Positive half twist (σ1 ⋯ σ_{n−1})(σ1 ⋯ σ_{n−2}) ⋯ (σ1). Throws OutOfRange for n < 2.
BraidWord torsion(std::size_t strands);

struct Probes {
  TangledRelation seed;  // I → A^n
  TangledRelation test;  // A^n → I
};

/// The seed/test relations separating the double torsion from the identity over the
/// built-in seven-element irack, padded with 1 beyond three strands.
/// Throws OutOfRange for n < 3 and Error when the carrier labels do not match.
Probes belt_probes(std::size_t strands, const IrackTable& irack);

/// test ∘ [word] ∘ seed, computed pointwise without materializing [word].
Relation sandwich(const BraidWord& word, const Relation& seed, const Relation& test,
                  const IrackTable& irack);

struct Trajectory {
  Tuple from;
  Tuple to;
};

struct BeltReport {
  std::size_t strands = 0;
  std::size_t power = 0;
  bool point = false;  // I → I result contains ((), ())
  std::vector<Trajectory> trajectories;
};

BeltReport belt_trick(std::size_t strands, std::size_t power, const IrackTable& irack);

/// "n=3 k=2 result=point" followed by one "trajectory: (..) -> (..)" line per seed tuple.
std::string format_belt_report(const Carrier& carrier, const BeltReport& report);

struct Distinction {
  bool distinct = false;
  Relation first;
  Relation second;
};

/// Compares test∘[w1]∘seed with test∘[w2]∘seed. Throws ArityMismatch.
Distinction distinguish(const BraidWord& w1, const BraidWord& w2, const Relation& seed,
                        const Relation& test, const IrackTable& irack);

}  // namespace irack
