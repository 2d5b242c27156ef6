#ifndef LIEPOLY_GROUP_HPP
#define LIEPOLY_GROUP_HPP

#include <string>
#include <vector>

#include <liepoly/rational.hpp>

namespace liepoly {

// Simple factors supported by the library (every simple group of rank <= 3
// plus A1, which shows up as a reduction target).
enum class Simple { A1, A2, C2, G2, A3, B3, C3 };

int rank(Simple s);
const char* name(Simple s);

// A group identifier: a single simple factor or an ordered product such as
// A1xA1 or C2xA1. Coordinates of weights and points are concatenated over
// the factors in order.
class GroupId {
public:
  GroupId() = default;
  GroupId(Simple s) : factors_{s} {}
  explicit GroupId(std::vector<Simple> f) : factors_(std::move(f)) {}

  // Parses "A2", "b3", "A1xA1", "C2xA1" (case-insensitive, 'x' separator).
  static GroupId parse(const std::string& text);

  const std::vector<Simple>& factors() const { return factors_; }
  bool is_simple() const { return factors_.size() == 1; }
  Simple simple() const;
  int rank() const;
  std::string str() const;

  // Half-open coordinate range [begin, end) of factor f.
  std::pair<int, int> block(int f) const;

  friend bool operator==(const GroupId& a, const GroupId& b) {
    return a.factors_ == b.factors_;
  }

private:
  std::vector<Simple> factors_;
};

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Static metadata of a group: Cartan matrix (alpha = C * omega, rows indexed
// by simple roots), its exact inverse, marks of the highest root, level
// vector, Coxeter number, Weyl group order and the scalings 1/m_j placing the
// vertices of the fundamental region at omega-check_j / m_j. For products all
// matrices are block-diagonal and all vectors concatenated.
struct GroupData {
  GroupId group;
  IntMat cartan;
  RatMat cartan_inverse;
  IntVec marks;
  IntVec level_vector;
  long long coxeter_number = 0; // max over factors for products
  long long weyl_order = 0;
  RatVec fundamental_vertex_scalings;
  long long cartan_det = 0;

  // Marks of the highest coroot (the dual group's marks); these cut out the
  // window of weight labels admissible for level-M discrete orthogonality.
  IntVec dual_marks;
};

const GroupData& group_data(const GroupId& g);

// Squared lengths <alpha_j, alpha_j> with long roots normalized to 2.
RatVec root_lengths_sq(const GroupId& g);

} // namespace liepoly

#endif
