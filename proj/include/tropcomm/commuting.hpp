#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcomm/matrix.hpp"
#include "tropcomm/polynomial.hpp"

namespace tropcomm {

/// Entry (row, col) of XY - YX, 0-based.
struct Generator {
  std::size_t row;
  std::size_t col;
  SparsePoly poly;
};

/// Every nonzero entry of XY - YX for n x n matrices (full layout), in
/// row-major order. For n = 2 this includes g22 = -g11.
std::vector<Generator> generators(std::size_t n);

/// The entries (1,2), (1,3), (2,3) of XY - YX for symmetric 3x3 matrices, in
/// the symmetric layout. Other entries vanish or repeat up to sign.
std::vector<Generator> symmetric_generators();

/// Nonzero entries of XY - YX in the given layout with sign-duplicates removed
/// (first occurrence in row-major order kept). This is the generator list used
/// for prevariety complexes.
std::vector<Generator> distinct_generators(const VariableLayout& layout);

/// Per-term weights <exponent, w> and the argmin set.
struct TermValue {
  Monomial monomial;
  SparsePoly::Coefficient coefficient;
  Rational value;
};

struct TropEvaluation {
  std::vector<TermValue> terms;         // canonical term order
  Rational min_value;
  std::vector<std::size_t> argmin;      // indices into terms
  bool satisfied() const { return argmin.size() >= 2; }
};

/// Throws EmptyPolynomial for the zero polynomial.
TropEvaluation trop_evaluate(const SparsePoly& f, std::span<const Rational> w);
bool trop_satisfied(const SparsePoly& f, std::span<const Rational> w);

/// A . B == B . A
bool in_TS(const TropMatrix& a, const TropMatrix& b);

struct PrevarietyReport {
  bool member = true;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // 0-based generator entries
};

/// Tropical satisfaction of every generator of the commuting ideal.
PrevarietyReport in_Tpre(const TropMatrix& a, const TropMatrix& b);

/// 2x2 test: commute and a12 + b21 == a21 + b12. Throws UnsupportedSize for n != 2.
bool in_TC2(const TropMatrix& a, const TropMatrix& b);

/// Parameters of a point of the homogeneity space. For n >= 3:
///   w^x_ii = a, w^y_jj = b, w^y_ij = w^x_ij - a + b, w^x_ij = c_i - c_j + a, c_1 = 0.
/// For n = 2 the parameters are (a, b, w^x_12, w^x_21) and c is empty.
struct HomogeneityParameters {
  Rational a;
  Rational b;
  std::vector<Rational> c;
  std::optional<Rational> x12;
  std::optional<Rational> x21;
};

/// w in the full layout of size n (length 2n^2).
std::optional<HomogeneityParameters> homogeneity_membership(std::span<const Rational> w, std::size_t n);

/// 2n^2 minus the exact rank of the all-terms-tie system of generators(n).
std::size_t homogeneity_dimension(std::size_t n);

/// Element of S_n x S_2: relabel indices by perm (i -> perm[i]) and optionally
/// exchange X and Y.
struct GroupElement {
  std::vector<std::size_t> perm;
  bool swap = false;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// All 2 n! elements, identity first, permutations in lexicographic order.
std::vector<GroupElement> symmetry_group(std::size_t n);
/// Variable renaming induced by g on a layout.
std::vector<VarId> variable_mapping(const GroupElement& g, const VariableLayout& layout);
SparsePoly act(const GroupElement& g, const SparsePoly& p, const VariableLayout& layout);
/// g . (A, B): rows and columns relabelled, A and B exchanged when swap is set.
std::pair<TropMatrix, TropMatrix> act(const GroupElement& g, const TropMatrix& a, const TropMatrix& b);

/// multiplier * (XY - YX)_{row,col}
struct Cofactor {
  std::size_t row;
  std::size_t col;
  SparsePoly multiplier;
};

/// A polynomial of the commuting ideal together with the combination of
/// generators that produces it.
struct IdealElement {
  SparsePoly poly;
  std::vector<Cofactor> cofactors;
};

/// g . [ (XY-YX)_31 y32 y21 - (XY-YX)_32 y31 y21 - (XY-YX)_21 y31 y32 ]  (n = 3)
IdealElement witness_deg4(const GroupElement& g);
/// g . [ (XY-YX)_12 y21 - (XY-YX)_21 y12 ]  (n = 3)
IdealElement witness_deg3(const GroupElement& g);

/// sum cofactor * generator, expanded from generators(n) independently of how
/// the element's polynomial was built.
SparsePoly expand_combination(const std::vector<Cofactor>& cofactors, std::size_t n);

/// Distinct (up to sign) images of a witness under the 12 group elements.
std::vector<IdealElement> witness_orbit(IdealElement (*witness)(const GroupElement&));

struct NonMembershipCertificate {
  std::string family;  // "generator", "deg3", "deg4"
  IdealElement element;
  Monomial unique_min_monomial;
  Rational min_value;
  Rational runner_up_value;
};

/// Searches generators, then the degree-3 orbit, then the degree-4 orbit, and
/// returns the first polynomial whose tropical minimum at (A, B) is attained
/// by a single term. No certificate means "unknown", never membership.
std::optional<NonMembershipCertificate> certify_not_in_TC3(const TropMatrix& a, const TropMatrix& b);

/// Exact search of the graded pieces I_(dx,dy) with dx, dy >= 1 and
/// dx + dy <= max_degree. Each piece is spanned by monomial multiples of the
/// generators, so an element whose minimum at (A, B) is attained by a single
/// term is found by elimination with columns ordered by weight. Family name
/// "slice dx,dy". Full layout, any n >= 2.
std::optional<NonMembershipCertificate> certify_by_slices(const TropMatrix& a, const TropMatrix& b,
                                                          unsigned max_degree);

enum class TCStatus { Member, NotMember, CertifiedOut, Unknown };
std::string to_string(TCStatus s);

struct RegionLabel {
  bool in_ts = false;
  bool in_tpre = false;
  TCStatus tc = TCStatus::Unknown;
  PrevarietyReport tpre_report;
  std::optional<std::pair<std::size_t, std::size_t>> commute_failure;  // 0-based
  std::optional<NonMembershipCertificate> certificate;
};

/// n = 2 decides the variety part with in_TC2; n = 3 reports CertifiedOut or
/// Unknown. Throws UnsupportedSize otherwise, or for non-finite entries.
RegionLabel classify_pair(const TropMatrix& a, const TropMatrix& b);

}  // namespace tropcomm
