#pragma once

#include <string>
#include <vector>

namespace ranklevel {

/*
 * A Young diagram in the l x r rectangle: a nonincreasing sequence of r row
 * lengths a_1 >= ... >= a_r with 0 <= a_i <= l.  The pair (rows, level)
 * travels with every diagram so that cross-rectangle mixing is a checkable
 * error.  Diagrams double as dominant sl_r weights of level <= l.
 */
class YoungDiagram {
  public:
    // Parts may be shorter than r; they are padded with zeros.  Throws
    // std::invalid_argument on increasing parts, negative parts, parts
    // exceeding the level, or more than r parts.
    YoungDiagram(std::vector<int> parts, int rows, int level);

    static YoungDiagram empty(int rows, int level) { return {{}, rows, level}; }
    static YoungDiagram full(int rows, int level) {
        return {std::vector<int>(static_cast<size_t>(rows), level), rows, level};
    }

    int rows() const { return rows_; }
    int level() const { return level_; }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }

    long long size() const;
    bool is_empty() const { return size() == 0; }

    bool operator==(const YoungDiagram& o) const = default;

    // Rows become columns; lives in the r x l rectangle.
    YoungDiagram transpose() const;

    // Complement in the rectangle, rows reversed: (l-a_r, ..., l-a_1).
    YoungDiagram conjugate() const;

    std::string to_text() const;  // "a_1,a_2,...,a_r"

  private:
    std::vector<int> parts_;
    int rows_;
    int level_;
};

// The pair of complementary index sets of {1..r+l}:
//   I = { l + k - a_k : k = 1..r }   (strictly increasing)
//   J = { l + 1 - j + mu_j : j = 1..l }   with mu = transpose(lambda)
struct IndexSets {
    std::vector<int> I;  // sorted, size r
    std::vector<int> J;  // sorted, size l
};
IndexSets index_sets(const YoungDiagram& d);

/*
 * The R/L string of a diagram: length r+l, x_i = R iff i = a'_k + k for the
 * ascending enumeration a'_1 <= ... <= a'_r of the parts.  Exactly r symbols
 * are R.  The R-position set is the reflection (r+l+1) - I_lambda, and an
 * elementary rotation of the diagram cycles the string one step left.
 */
struct DiagramString {
    std::string symbols;  // 'R'/'L', 1-based positions are symbols[i-1]
    int count_R_after(int k) const;   // #{ i > k : x_i = R }
    int count_L_from(int k) const;    // #{ j >= k : x_j = L }
};
DiagramString string_of(const YoungDiagram& d);

// Elementary rotation (l, a_1, ..., a_{r-1}); requires a_r = 0.  Size grows
// by exactly l.
YoungDiagram rotated(const YoungDiagram& d);

// Inverse of rotated(); requires a_1 = l.
YoungDiagram rotated_inverse(const YoungDiagram& d);

// The 2l x 2r symplectic extension: the diagram whose row multiset is
// {a_1..a_r} with {2l-a_1, ..., 2l-a_r}; size is always 2rl.
YoungDiagram tilde(const YoungDiagram& d);

// All diagrams in the l x r rectangle, lexicographically.  C(r+l, r) of them.
std::vector<YoungDiagram> all_diagrams(int rows, int level);

/*
 * An ordered labelling of n marked points by diagrams sharing (rows, level).
 */
class WeightSystem {
  public:
    WeightSystem(int rows, int level) : rows_(rows), level_(level) {}
    WeightSystem(int rows, int level, std::vector<YoungDiagram> diagrams);

    int rows() const { return rows_; }
    int level() const { return level_; }
    int points() const { return static_cast<int>(diagrams_.size()); }
    const std::vector<YoungDiagram>& diagrams() const { return diagrams_; }
    const YoungDiagram& at(int p) const { return diagrams_[static_cast<size_t>(p)]; }

    long long total_size() const;

    void push_back(const YoungDiagram& d);
    void replace(int p, const YoungDiagram& d);

    WeightSystem transposed() const;  // pointwise transpose, (l, r) system
    WeightSystem conjugated() const;  // pointwise conjugate

    bool operator==(const WeightSystem& o) const = default;

  private:
    int rows_;
    int level_;
    std::vector<YoungDiagram> diagrams_;
};

}  // namespace ranklevel
