#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "liepack/errors.hpp"

namespace liepack {

/// Integer partition: weakly decreasing list of positive parts. The empty
/// partition (of 0) is allowed. In type A these label nilpotent orbits of
/// gl(n) by Jordan type.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0)
        throw InvalidParameter("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw InvalidParameter("partition parts must be weakly decreasing");
    }
  }

  /// The zero nilpotent orbit of gl(n): (1,1,...,1).
  static Partition zero_orbit(int n) {
    return Partition(std::vector<int>(n, 1));
  }

  const std::vector<int> &parts() const { return parts_; }
  int total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  bool empty() const { return parts_.empty(); }

  /// Conjugate partition (column counts of the Young diagram).
  Partition transpose() const {
    std::vector<int> cols;
    for (int j = 1; parts_.empty() ? false : j <= parts_[0]; ++j) {
      int c = 0;
      for (int p : parts_)
        if (p >= j)
          ++c;
      cols.push_back(c);
    }
    return Partition(std::move(cols));
  }

  /// Columnwise sum after zero padding: result_j = sum_i p^(i)_j. This is
  /// the type-A combinatorial form of nilpotent orbit induction.
  static Partition colsum(std::span<const Partition> ps) {
    if (ps.empty())
      throw EmptyList("colsum of no partitions");
    size_t rows = 0;
    for (const Partition &p : ps)
      rows = std::max(rows, p.parts_.size());
    std::vector<int> out;
    for (size_t j = 0; j < rows; ++j) {
      int s = 0;
      for (const Partition &p : ps)
        if (j < p.parts_.size())
          s += p.parts_[j];
      if (s > 0)
        out.push_back(s);
    }
    return Partition(std::move(out));
  }

  /// All partitions of n, in descending lexicographic order.
  static std::vector<Partition> all_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int rest, int maxpart) -> void {
      if (rest == 0) {
        out.emplace_back(Partition(cur));
        return;
      }
      for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        self(self, rest - p, p);
        cur.pop_back();
      }
    };
    rec(rec, n, n);
    return out;
  }

  friend bool operator==(const Partition &, const Partition &) = default;
  friend bool operator<(const Partition &a, const Partition &b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t k = 0; k < parts_.size(); ++k) {
      if (k)
        s += ",";
      s += std::to_string(parts_[k]);
    }
    return s + ")";
  }

  static Partition parse(std::string_view s) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t comma = s.find(',', pos);
      std::string tok(s.substr(pos, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - pos));
      try {
        parts.push_back(std::stoi(tok));
      } catch (const std::logic_error &) {
        throw ParseError("bad partition '" + std::string(s) + "'");
      }
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
  }

private:
  std::vector<int> parts_;
};

/// Ordered block sizes of a type-A Levi subgroup; blocks sum to the ambient n.
class LeviBlocks {
public:
  LeviBlocks() = default;
  explicit LeviBlocks(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    for (int b : blocks_)
      if (b <= 0)
        throw InvalidParameter("Levi blocks must be positive");
  }

  const std::vector<int> &blocks() const { return blocks_; }
  int total() const {
    return std::accumulate(blocks_.begin(), blocks_.end(), 0);
  }
  bool is_proper() const { return blocks_.size() > 1; }

  friend bool operator==(const LeviBlocks &, const LeviBlocks &) = default;

  std::string str() const {
    std::string s = "(";
    for (size_t k = 0; k < blocks_.size(); ++k) {
      if (k)
        s += ",";
      s += std::to_string(blocks_[k]);
    }
    return s + ")";
  }

private:
  std::vector<int> blocks_;
};

} // namespace liepack
