#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbc/words.hpp"

namespace fbc {

class NotAnAutomorphism : public std::invalid_argument {
 public:
  explicit NotAnAutomorphism(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An endomorphism of a free group, given by the images of its generators.
/// The alphabet has generators 1..rank, plus the auxiliary letter z (index 0)
/// when the endomorphism is a z-extension.
class FreeEndomorphism {
 public:
  FreeEndomorphism(int rank, std::vector<Word> images);
  FreeEndomorphism(int rank, std::vector<Word> images, Word z_image);

  int rank() const { return rank_; }
  bool with_z() const { return z_image_.has_value(); }
  /// Number of generators in the alphabet (rank, +1 when z is present).
  int slots() const { return rank_ + (with_z() ? 1 : 0); }

  const Word& image(int index) const;  // index 0 = z when present
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  static FreeEndomorphism identity(int rank, bool with_z = false);

  friend bool operator==(const FreeEndomorphism&, const FreeEndomorphism&) =
      default;

 private:
  int rank_;
  std::vector<Word> images_;  // images_[i] is the image of generator i+1
  std::optional<Word> z_image_;
};

/// An automorphism: a forward/inverse pair of endomorphisms, verified to
/// compose to the identity on every generator at construction.
class FreeAutomorphism {
 public:
  FreeAutomorphism(FreeEndomorphism forward, FreeEndomorphism inverse);

  int rank() const { return fwd_.rank(); }
  bool with_z() const { return fwd_.with_z(); }
  int slots() const { return fwd_.slots(); }
  const FreeEndomorphism& forward() const { return fwd_; }
  const FreeEndomorphism& backward() const { return inv_; }

  Word apply(const Word& w) const { return fwd_.apply(w); }
  Word apply_inverse(const Word& w) const { return inv_.apply(w); }
  const Word& image(int index) const { return fwd_.image(index); }

  FreeAutomorphism inverted() const {
    return FreeAutomorphism(Trusted{}, inv_, fwd_);
  }

  static FreeAutomorphism identity(int rank, bool with_z = false);

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) =
      default;

 private:
  // Composites and inverses of already-verified pairs are verified by
  // construction; this path skips the quadratic re-check of the public
  // constructor (which remains the gate for untrusted image data).
  struct Trusted {};
  FreeAutomorphism(Trusted, FreeEndomorphism forward, FreeEndomorphism inverse)
      : fwd_(std::move(forward)), inv_(std::move(inverse)) {}

  friend FreeAutomorphism compose(const FreeAutomorphism&,
                                  const FreeAutomorphism&);

  FreeEndomorphism fwd_, inv_;
};

/// compose(a, b) maps w to b(a(w)): a is applied first.
FreeEndomorphism compose(const FreeEndomorphism& a, const FreeEndomorphism& b);
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

FreeAutomorphism power(const FreeAutomorphism& phi, long long k);

/// The inner automorphism x -> y^-1 x y.
FreeAutomorphism inner(const Word& y, int rank, bool with_z = false);

/// Decides whether the images define an automorphism; on success returns it
/// with exact inverse images recovered from the recorded Nielsen moves.
/// Throws NotAnAutomorphism otherwise, BudgetExceeded if the move search
/// exceeds its state budget.
FreeAutomorphism invert_and_validate(const FreeEndomorphism& e);

/// The twisted product w_{phi,p} = (w phi^{p-1}) (w phi^{p-2}) ... (w phi) w.
Word twisted_power(const Word& w, const FreeAutomorphism& phi, int p);

/// Extends phi to F * <z> by z -> u z u^-1.
FreeAutomorphism extend_with_z(const FreeAutomorphism& phi, const Word& u);

}  // namespace fbc
