#include "hgcage/moore.hpp"

#include <algorithm>
#include <iomanip>
#include <stdexcept>
#include <vector>

namespace hgcage {
namespace {

void check(const MooreQuery& q) {
  if (q.d < 2 || q.r < 2) throw std::domain_error("Moore bound needs d >= 2 and r >= 2");
  if (q.g < 3) throw std::domain_error("Moore bound needs girth g >= 3");
}

/// (x^k - 1) / (x - 1) as 1 + x + ... + x^(k-1).
BigInt geometric_sum(const MooreQuery& q) {
  const BigInt x = BigInt(q.d - 1) * (q.r - 1);
  const unsigned k = q.g / 2;
  BigInt sum = 0;
  BigInt term = 1;
  for (unsigned i = 0; i < k; ++i) {
    sum += term;
    term *= x;
  }
  return sum;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) { return (num + den - 1) / den; }

}  // namespace

BigInt naive_moore(const MooreQuery& q) {
  check(q);
  const BigInt s = geometric_sum(q);
  if (q.g % 2 == 1) return 1 + BigInt(q.d) * (q.r - 1) * s;
  return BigInt(q.r) * s;
}

BigInt moore_bound(const MooreQuery& q) {
  check(q);
  if (q.r <= q.d) return naive_moore(q);
  const BigInt s = geometric_sum(q);
  if (q.g % 2 == 1) return ceil_div(BigInt(q.r) * (1 + BigInt(q.r) * (q.d - 1) * s), q.d);
  return ceil_div(BigInt(q.r) * q.r * s, q.d);
}

BigInt dual_argument_bound(const MooreQuery& q) {
  check(q);
  return q.g % 2 == 1 ? moore_bound(q) : naive_moore(q);
}

void write_moore_table(std::ostream& out, unsigned d_min, unsigned d_max, unsigned r_min, unsigned r_max,
                       unsigned g, TableFormat format) {
  if (d_min > d_max || r_min > r_max) throw std::invalid_argument("empty parameter range");

  struct Block {
    const char* name;
    BigInt (*bound)(const MooreQuery&);
  };
  const Block blocks[] = {{"naive", &naive_moore}, {"dual", &moore_bound}};

  if (format == TableFormat::kCsv) {
    out << "block,d,r,g,bound\n";
    for (const auto& block : blocks) {
      for (unsigned d = d_min; d <= d_max; ++d) {
        for (unsigned r = r_min; r <= r_max; ++r) {
          out << block.name << ',' << d << ',' << r << ',' << g << ',' << block.bound({d, r, g}) << '\n';
        }
      }
    }
    return;
  }

  std::vector<std::vector<std::string>> cells[2];
  std::size_t width = 3;
  for (int b = 0; b < 2; ++b) {
    for (unsigned d = d_min; d <= d_max; ++d) {
      std::vector<std::string> row;
      for (unsigned r = r_min; r <= r_max; ++r) {
        row.push_back(blocks[b].bound({d, r, g}).str());
        width = std::max(width, row.back().size());
      }
      cells[b].push_back(std::move(row));
    }
  }
  width += 1;

  out << "Order lower bounds for d-regular, r-uniform hypergraphs of girth " << g << '\n';
  out << "left: naive Moore bound; right: with the dual-hypergraph bound for r > d\n";
  out << std::setw(5) << "d\\r" << " |";
  for (int b = 0; b < 2; ++b) {
    for (unsigned r = r_min; r <= r_max; ++r) out << std::setw(static_cast<int>(width)) << r;
    out << (b == 0 ? " |" : "\n");
  }
  for (unsigned d = d_min; d <= d_max; ++d) {
    out << std::setw(5) << d << " |";
    for (int b = 0; b < 2; ++b) {
      for (const auto& cell : cells[b][d - d_min]) out << std::setw(static_cast<int>(width)) << cell;
      out << (b == 0 ? " |" : "\n");
    }
  }
}

}  // namespace hgcage
