#include "fbc/automorphism.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

#include "fbc/budget.hpp"

namespace fbc {

namespace {

void check_alphabet(const Word& w, int rank, bool with_z) {
  for (Letter l : w) {
    if (l.index() == 0 && with_z) continue;
    if (l.index() < 1 || l.index() > rank)
      throw std::invalid_argument("image letter outside alphabet of rank " +
                                  std::to_string(rank));
  }
}

}  // namespace

FreeEndomorphism::FreeEndomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank)
    throw std::invalid_argument("expected one image per generator");
  for (const Word& w : images_) check_alphabet(w, rank_, false);
}

FreeEndomorphism::FreeEndomorphism(int rank, std::vector<Word> images,
                                   Word z_image)
    : rank_(rank), images_(std::move(images)), z_image_(std::move(z_image)) {
  if (static_cast<int>(images_.size()) != rank)
    throw std::invalid_argument("expected one image per generator");
  for (const Word& w : images_) check_alphabet(w, rank_, true);
  check_alphabet(*z_image_, rank_, true);
}

const Word& FreeEndomorphism::image(int index) const {
  if (index == 0) {
    if (!z_image_) throw std::invalid_argument("no z in this alphabet");
    return *z_image_;
  }
  if (index < 1 || index > rank_)
    throw std::invalid_argument("generator index out of range");
  return images_[index - 1];
}

Word FreeEndomorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& img = image(l.index());
    if (l.sign() > 0) {
      for (Letter m : img) out.push_cancel(m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_cancel(it->inverse());
    }
  }
  return out;
}

FreeEndomorphism FreeEndomorphism::identity(int rank, bool with_z) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word{Letter(i, 1)});
  if (with_z) return FreeEndomorphism(rank, std::move(images), Word{kZ});
  return FreeEndomorphism(rank, std::move(images));
}

FreeAutomorphism::FreeAutomorphism(FreeEndomorphism forward,
                                   FreeEndomorphism inverse)
    : fwd_(std::move(forward)), inv_(std::move(inverse)) {
  if (fwd_.rank() != inv_.rank() || fwd_.with_z() != inv_.with_z())
    throw std::invalid_argument("forward/inverse alphabet mismatch");
  for (int i = fwd_.with_z() ? 0 : 1; i <= fwd_.rank(); ++i) {
    Word g{Letter(i, 1)};
    if (inv_.apply(fwd_.image(i)) != g || fwd_.apply(inv_.image(i)) != g)
      throw NotAnAutomorphism("inverse images do not invert the map");
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank, bool with_z) {
  FreeEndomorphism e = FreeEndomorphism::identity(rank, with_z);
  return FreeAutomorphism(e, e);
}

FreeEndomorphism compose(const FreeEndomorphism& a, const FreeEndomorphism& b) {
  if (a.rank() != b.rank() || a.with_z() != b.with_z())
    throw std::invalid_argument("composing maps of different alphabets");
  std::vector<Word> images;
  for (int i = 1; i <= a.rank(); ++i) images.push_back(b.apply(a.image(i)));
  if (a.with_z())
    return FreeEndomorphism(a.rank(), std::move(images), b.apply(a.image(0)));
  return FreeEndomorphism(a.rank(), std::move(images));
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  return FreeAutomorphism(FreeAutomorphism::Trusted{},
                          compose(a.forward(), b.forward()),
                          compose(b.backward(), a.backward()));
}

FreeAutomorphism power(const FreeAutomorphism& phi, long long k) {
  if (k < 0) return power(phi.inverted(), -k);
  FreeAutomorphism acc = FreeAutomorphism::identity(phi.rank(), phi.with_z());
  FreeAutomorphism sq = phi;
  while (k > 0) {
    if (k & 1) acc = compose(acc, sq);
    k >>= 1;
    if (k > 0) sq = compose(sq, sq);
  }
  return acc;
}

FreeAutomorphism inner(const Word& y, int rank, bool with_z) {
  check_alphabet(y, rank, with_z);
  auto images_for = [&](const Word& c) {
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i)
      images.push_back(conjugated(Word{Letter(i, 1)}, c));
    return images;
  };
  if (with_z)
    return FreeAutomorphism(
        FreeEndomorphism(rank, images_for(y), conjugated(Word{kZ}, y)),
        FreeEndomorphism(rank, images_for(y.inverse()),
                         conjugated(Word{kZ}, y.inverse())));
  return FreeAutomorphism(FreeEndomorphism(rank, images_for(y)),
                          FreeEndomorphism(rank, images_for(y.inverse())));
}

// --- Nielsen move search -----------------------------------------------------
//
// A tuple of images is a basis iff some sequence of elementary Nielsen moves
// that never increases total length carries it to a permuted/inverted standard
// basis.  Best-first search over that move graph is therefore a sound and
// complete acceptance test, and replaying the recorded moves on the final
// permutation's inverse yields exact inverse images.

namespace {

struct Move {
  enum Kind : char { Invert, MulRight, MulLeft } kind;
  int i, j, delta;  // MulRight: u_i <- u_i u_j^delta; MulLeft: u_j^delta u_i
};

constexpr std::size_t kNielsenStateCap = 200'000;

std::string tuple_key(const std::vector<Word>& tuple) {
  std::string key;
  for (const Word& w : tuple) {
    for (Letter l : w) {
      std::int32_t c = l.code();
      key.append(reinterpret_cast<const char*>(&c), sizeof c);
    }
    key.push_back('\x7f');
  }
  return key;
}

std::size_t total_length(const std::vector<Word>& tuple) {
  std::size_t n = 0;
  for (const Word& w : tuple) n += w.size();
  return n;
}

// The generator index tuple position p stands for: 1..rank, then z last.
int slot_index(int pos, int rank) { return pos < rank ? pos + 1 : 0; }

// Applies the elementary automorphism of a recorded move to a word.
Word substitute(const Word& w, const Move& m, int rank) {
  int gi = slot_index(m.i, rank);
  int gj = slot_index(m.j, rank);
  Word out;
  for (Letter l : w) {
    if (l.index() != gi) {
      out.push_cancel(l);
      continue;
    }
    switch (m.kind) {
      case Move::Invert:
        out.push_cancel(l.inverse());
        break;
      case Move::MulRight:
        // x_i -> x_i x_j^delta
        if (l.sign() > 0) {
          out.push_cancel(Letter(gi, 1));
          out.push_cancel(Letter(gj, m.delta));
        } else {
          out.push_cancel(Letter(gj, -m.delta));
          out.push_cancel(Letter(gi, -1));
        }
        break;
      case Move::MulLeft:
        // x_i -> x_j^delta x_i
        if (l.sign() > 0) {
          out.push_cancel(Letter(gj, m.delta));
          out.push_cancel(Letter(gi, 1));
        } else {
          out.push_cancel(Letter(gi, -1));
          out.push_cancel(Letter(gj, -m.delta));
        }
        break;
    }
  }
  return out;
}

bool is_signed_basis(const std::vector<Word>& tuple) {
  for (const Word& w : tuple)
    if (w.size() != 1) return false;
  // Every alphabet slot must occur exactly once (any sign); z sits last.
  std::vector<int> count(tuple.size(), 0);
  for (const Word& w : tuple) {
    int idx = w[0].index();
    int pos = idx == 0 ? static_cast<int>(tuple.size()) - 1 : idx - 1;
    if (pos < 0 || pos >= static_cast<int>(tuple.size())) return false;
    ++count[pos];
  }
  for (int c : count)
    if (c != 1) return false;
  return true;
}

}  // namespace

FreeAutomorphism invert_and_validate(const FreeEndomorphism& e) {
  const int rank = e.rank();
  const bool with_z = e.with_z();
  const int n = e.slots();

  std::vector<Word> start;
  for (int p = 0; p < n; ++p) start.push_back(e.image(slot_index(p, rank)));

  struct Node {
    std::vector<Word> tuple;
    int parent;
    Move move;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> visited;

  auto reject = [] {
    throw NotAnAutomorphism("images do not form a basis");
  };

  for (const Word& w : start)
    if (w.empty()) reject();

  using Pq = std::pair<std::size_t, int>;  // (total length, node id)
  std::priority_queue<Pq, std::vector<Pq>, std::greater<>> frontier;
  nodes.push_back({start, -1, {}});
  visited.emplace(tuple_key(start), 0);
  frontier.emplace(total_length(start), 0);

  int goal = -1;
  while (!frontier.empty()) {
    auto [len, id] = frontier.top();
    frontier.pop();
    std::vector<Word> tuple = nodes[id].tuple;
    if (is_signed_basis(tuple)) {
      goal = id;
      break;
    }
    auto try_push = [&](std::vector<Word>&& next, const Move& m) {
      for (const Word& w : next)
        if (w.empty()) return;  // lost rank: dead branch
      if (total_length(next) > len) return;
      std::string key = tuple_key(next);
      if (visited.count(key)) return;
      if (nodes.size() >= kNielsenStateCap)
        throw BudgetExceeded("Nielsen move search exceeded its state budget");
      visited.emplace(std::move(key), static_cast<int>(nodes.size()));
      frontier.emplace(total_length(next), static_cast<int>(nodes.size()));
      nodes.push_back({std::move(next), id, m});
    };
    for (int i = 0; i < n; ++i) {
      {
        std::vector<Word> next = tuple;
        next[i] = next[i].inverse();
        try_push(std::move(next), {Move::Invert, i, i, 1});
      }
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int delta : {1, -1}) {
          Word uj = delta > 0 ? tuple[j] : tuple[j].inverse();
          {
            std::vector<Word> next = tuple;
            next[i] = tuple[i] * uj;
            if (next[i].size() <= tuple[i].size())
              try_push(std::move(next), {Move::MulRight, i, j, delta});
          }
          {
            std::vector<Word> next = tuple;
            next[i] = uj * tuple[i];
            if (next[i].size() <= tuple[i].size())
              try_push(std::move(next), {Move::MulLeft, i, j, delta});
          }
        }
      }
    }
  }
  if (goal < 0) reject();

  // Final tuple is a permuted/inverted basis rho; unwind it, then replay the
  // recorded moves (last first) to express each generator's preimage.
  std::vector<Move> path;
  for (int id = goal; nodes[id].parent >= 0; id = nodes[id].parent)
    path.push_back(nodes[id].move);  // reverse chronological order

  const std::vector<Word>& final_tuple = nodes[goal].tuple;
  // rho maps slot p's generator to final_tuple[p]; invert that permutation.
  std::vector<Word> inverse_images(n);
  for (int p = 0; p < n; ++p) {
    Letter target = final_tuple[p][0];
    int target_pos = target.index() == 0 ? n - 1 : target.index() - 1;
    Word w{Letter(slot_index(p, rank), target.sign())};
    for (const Move& m : path) w = substitute(w, m, rank);
    inverse_images[target_pos] = w;
  }

  std::vector<Word> xs(inverse_images.begin(),
                       inverse_images.begin() + rank);
  if (with_z) {
    FreeEndomorphism inv(rank, std::move(xs), inverse_images[n - 1]);
    return FreeAutomorphism(e, inv);
  }
  return FreeAutomorphism(e, FreeEndomorphism(rank, std::move(xs)));
}

Word twisted_power(const Word& w, const FreeAutomorphism& phi, int p) {
  if (p < 0) throw std::invalid_argument("twisted power wants p >= 0");
  Word result;  // empty product for p = 0
  Word cur = w;
  for (int i = 0; i < p; ++i) {
    if (i > 0) cur = phi.apply(cur);
    result = cur * result;
  }
  return result;
}

FreeAutomorphism extend_with_z(const FreeAutomorphism& phi, const Word& u) {
  if (phi.with_z())
    throw std::invalid_argument("automorphism already has a z letter");
  check_alphabet(u, phi.rank(), false);
  std::vector<Word> fwd_images, inv_images;
  for (int i = 1; i <= phi.rank(); ++i) {
    fwd_images.push_back(phi.image(i));
    inv_images.push_back(phi.backward().image(i));
  }
  Word z{kZ};
  Word q = phi.apply_inverse(u);
  FreeEndomorphism fwd(phi.rank(), std::move(fwd_images),
                       u * z * u.inverse());
  FreeEndomorphism inv(phi.rank(), std::move(inv_images),
                       q.inverse() * z * q);
  return FreeAutomorphism(fwd, inv);
}

}  // namespace fbc
