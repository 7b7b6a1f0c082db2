#include "trivalent/sift_chain.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace trivalent {

// Level lists store only the non-identity representatives; the identity is
// an implicit first member of every C_i. A residue that agrees with the
// identity on the level point passes through unchanged, so sifting through
// a mostly-trivial chain costs no compositions.

SiftChain::SiftChain(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("SiftChain: degree must be positive");
  cosets_.assign(degree > 1 ? degree - 1 : 1, {});
}

SiftChain::SiftOutcome SiftChain::sift(const Perm& alpha) {
  if (alpha.degree() != degree_)
    throw std::invalid_argument("sift: degree mismatch");
  Perm residue = alpha;
  for (int i = 0; i < static_cast<int>(cosets_.size()); ++i) {
    if (residue(i) == i) continue;  // matched by the implicit identity
    const Perm* found = nullptr;
    for (const Perm& gamma : cosets_[i]) {
      if (gamma(i) == residue(i)) {
        found = &gamma;
        break;
      }
    }
    if (found) {
      residue = compose(inverse(*found), residue);
    } else {
      cosets_[i].push_back(residue);
      closed_ = false;
      return {true, i};
    }
  }
  return {false, -1};
}

void SiftChain::close() {
  // products with the implicit identity sift to themselves, so only the
  // stored representatives need filtering
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = static_cast<int>(cosets_.size()) - 1; i >= 0; --i) {
      for (int j = 0; j <= i; ++j) {
        // index loops: the lists may grow while we scan them
        for (std::size_t a = 0; a < cosets_[i].size(); ++a) {
          for (std::size_t b = 0; b < cosets_[j].size(); ++b) {
            Perm product = compose(cosets_[i][a], cosets_[j][b]);
            if (sift(product).inserted) grew = true;
          }
        }
      }
    }
  }
  closed_ = true;
}

std::uint64_t SiftChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : cosets_) {
    const std::uint64_t k = level.size() + 1;
    if (result > std::numeric_limits<std::uint64_t>::max() / k)
      throw std::overflow_error("SiftChain::order: does not fit in 64 bits");
    result *= k;
  }
  return result;
}

int SiftChain::order_pow2_exponent() const {
  int exponent = 0;
  for (const auto& level : cosets_) {
    const std::uint64_t k = level.size() + 1;
    if ((k & (k - 1)) != 0) return -1;
    for (std::uint64_t v = k; v > 1; v >>= 1) ++exponent;
  }
  return exponent;
}

bool SiftChain::contains(const Perm& sigma) const {
  if (sigma.degree() != degree_)
    throw std::invalid_argument("contains: degree mismatch");
  if (!closed_)
    throw std::logic_error("contains: chain is not closed");
  Perm residue = sigma;
  for (int i = 0; i < static_cast<int>(cosets_.size()); ++i) {
    if (residue(i) == i) continue;
    const Perm* found = nullptr;
    for (const Perm& gamma : cosets_[i]) {
      if (gamma(i) == residue(i)) {
        found = &gamma;
        break;
      }
    }
    if (!found) return false;
    residue = compose(inverse(*found), residue);
  }
  return residue.is_identity();
}

std::string SiftChain::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < cosets_.size(); ++i) {
    out << "level " << i << ": [identity";
    for (const Perm& gamma : cosets_[i]) out << ", " << to_cycles(gamma);
    out << "]\n";
  }
  return out.str();
}

SiftChain close_generators(const std::vector<Perm>& generators, int degree) {
  SiftChain chain(degree);
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("close_generators: degree mismatch");
    chain.sift(g);
  }
  chain.close();
  return chain;
}

std::vector<Perm> reduce_generating_sequence(const std::vector<Perm>& gens,
                                             int degree) {
  SiftChain chain(degree);
  std::vector<Perm> kept;
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    if (chain.sift(g).inserted) kept.push_back(g);
  }
  return kept;
}

namespace {

// Chain for the altered tower 1 = H_{n-1} <= ... <= H_1 <= H <= G from the
// third part of the Furst-Hopcroft-Luks lemma: level 0 holds coset
// representatives of G modulo H, the remaining levels are the point
// stabilizer chain of H. Identities are implicit here as well.
class SubgroupChain {
public:
  SubgroupChain(int degree, const MemberPredicate& member, int index_bound)
      : member_(member), index_bound_(index_bound) {
    cosets_.assign(degree > 1 ? degree : 2, {});
  }

  bool sift(const Perm& alpha) {
    Perm residue = alpha;
    if (!member_(residue)) {
      const Perm* found = nullptr;
      for (const Perm& gamma : cosets_[0]) {
        if (member_(compose(inverse(gamma), residue))) {
          found = &gamma;
          break;
        }
      }
      if (!found) {
        if (static_cast<int>(cosets_[0].size()) + 1 >= index_bound_)
          throw std::invalid_argument(
              "subgroup_generators: index bound exceeded");
        cosets_[0].push_back(residue);
        return true;
      }
      residue = compose(inverse(*found), residue);
    }
    for (int i = 1; i < static_cast<int>(cosets_.size()); ++i) {
      const int point = i - 1;
      if (residue(point) == point) continue;
      const Perm* found = nullptr;
      for (const Perm& gamma : cosets_[i]) {
        if (gamma(point) == residue(point)) {
          found = &gamma;
          break;
        }
      }
      if (!found) {
        cosets_[i].push_back(residue);
        return true;
      }
      residue = compose(inverse(*found), residue);
    }
    return false;
  }

  void close() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = static_cast<int>(cosets_.size()) - 1; i >= 0; --i) {
        for (int j = 0; j <= i; ++j) {
          for (std::size_t a = 0; a < cosets_[i].size(); ++a) {
            for (std::size_t b = 0; b < cosets_[j].size(); ++b) {
              if (sift(compose(cosets_[i][a], cosets_[j][b]))) grew = true;
            }
          }
        }
      }
    }
  }

  // All representatives below the top list generate H.
  std::vector<Perm> subgroup() const {
    std::vector<Perm> gens;
    for (std::size_t i = 1; i < cosets_.size(); ++i)
      for (const Perm& gamma : cosets_[i]) gens.push_back(gamma);
    return gens;
  }

private:
  const MemberPredicate& member_;
  int index_bound_;
  std::vector<std::vector<Perm>> cosets_;
};

}  // namespace

std::vector<Perm> subgroup_generators(const std::vector<Perm>& generators,
                                      int degree,
                                      const MemberPredicate& member,
                                      int index_bound) {
  if (index_bound < 1)
    throw std::invalid_argument("subgroup_generators: bad index bound");
  SubgroupChain chain(degree, member, index_bound);
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("subgroup_generators: degree mismatch");
    chain.sift(g);
  }
  chain.close();
  return chain.subgroup();
}

SgsSplit sgs_index2_subgroup(const Sgs& sgs, const MemberPredicate& member) {
  int j = -1;
  for (std::size_t i = 0; i < sgs.size(); ++i) {
    if (!member(sgs[i])) {
      j = static_cast<int>(i);
      break;
    }
  }
  if (j < 0)
    throw std::invalid_argument(
        "sgs_index2_subgroup: subgroup is not proper on these generators");

  const Perm tau = sgs[j];
  const Perm tau_inv = inverse(tau);
  Sgs sub;
  sub.reserve(sgs.size());
  for (const Perm& g : sgs)
    sub.push_back(member(g) ? g : compose(tau_inv, g));
  return {tau, std::move(sub)};
}

}  // namespace trivalent
