#include "nodal/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nodal {

int Signature::ground_size() const {
  int n = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) n += static_cast<int>(i + 1) * counts[i];
  return n;
}

int Signature::block_count() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Signature make_signature(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("signature counts must be non-negative");
  }
  return Signature{std::move(counts)};
}

SetPartition::SetPartition(int r, std::vector<std::vector<int>> blocks) : r_(r), blocks_(std::move(blocks)) {
  if (r < 1) throw std::invalid_argument("partition ground set must be non-empty");
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  int total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition blocks must be non-empty");
    for (int e : b) {
      if (e < 1 || e > r) throw std::invalid_argument("element " + std::to_string(e) + " outside [1, r]");
      if (seen[static_cast<std::size_t>(e)]) {
        throw std::invalid_argument("element " + std::to_string(e) + " appears twice");
      }
      seen[static_cast<std::size_t>(e)] = true;
      ++total;
    }
    std::sort(b.begin(), b.end());
  }
  if (total != r) throw std::invalid_argument("blocks do not cover [1, " + std::to_string(r) + "]");
  std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::finest(int r) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= r; ++i) blocks.push_back({i});
  return SetPartition(r, std::move(blocks));
}

SetPartition SetPartition::coarsest(int r) {
  std::vector<int> all(static_cast<std::size_t>(r));
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(r, {std::move(all)});
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  const bool comma_form = text.find(',') != std::string_view::npos;
  int r = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    std::vector<int> block;
    if (comma_form) {
      std::size_t s = 0;
      while (s <= piece.size()) {
        auto comma = piece.find(',', s);
        auto tok = piece.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          throw std::invalid_argument("bad partition element in '" + std::string(text) + "'");
        }
        block.push_back(std::stoi(std::string(tok)));
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
    } else {
      for (char c : piece) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad partition element in '" + std::string(text) + "'");
        block.push_back(c - '0');
      }
    }
    if (block.empty()) throw std::invalid_argument("empty block in '" + std::string(text) + "'");
    for (int e : block) r = std::max(r, e);
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return SetPartition(r, std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  const bool commas = r_ > 9;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (commas && i) os << ',';
      os << blocks_[b][i];
    }
  }
  return os.str();
}

Signature SetPartition::signature() const {
  std::vector<int> counts(static_cast<std::size_t>(r_), 0);
  for (const auto& b : blocks_) ++counts[b.size() - 1];
  return make_signature(std::move(counts));
}

void for_each_partition(int r, const std::function<void(const SetPartition&)>& visit, int cap) {
  if (r < 1 || r > cap) {
    throw std::out_of_range("partition size " + std::to_string(r) + " outside [1, " + std::to_string(cap) + "]");
  }
  // Restricted growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  const auto n = static_cast<std::size_t>(r);
  std::vector<int> a(n, 0), m(n, 0);  // m[i] = max(a[0..i])
  while (true) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m[n - 1] + 1));
    for (std::size_t i = 0; i < n; ++i) blocks[static_cast<std::size_t>(a[i])].push_back(static_cast<int>(i) + 1);
    visit(SetPartition(r, std::move(blocks)));

    std::size_t i = n - 1;
    while (i > 0 && a[i] > m[i - 1]) --i;
    if (i == 0) return;
    ++a[i];
    m[i] = std::max(m[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      m[j] = m[i];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(int r, int cap) {
  std::vector<SetPartition> out;
  for_each_partition(r, [&](const SetPartition& p) { out.push_back(p); }, cap);
  return out;
}

BigInt mobius_coefficient(const SetPartition& pi) {
  BigInt result(1);
  for (const auto& b : pi.blocks()) {
    const long size = static_cast<long>(b.size());
    BigInt factor = factorial(size - 1);
    if ((size - 1) % 2 != 0) factor = -factor;
    result *= factor;
  }
  return result;
}

BigInt signature_count(int r, const Signature& sig) {
  if (sig.ground_size() != r) {
    throw std::invalid_argument("signature covers " + std::to_string(sig.ground_size()) +
                                " elements, expected " + std::to_string(r));
  }
  BigInt denom(1);
  for (std::size_t i = 0; i < sig.counts.size(); ++i) {
    const int j = sig.counts[i];
    denom *= factorial(static_cast<long>(i) + 1).pow(static_cast<unsigned>(j)) * factorial(j);
  }
  return factorial(r).divexact(denom);
}

namespace {

void signatures_from(int remaining, int max_part, std::vector<int>& counts,
                     const std::function<void(const Signature&)>& visit) {
  if (remaining == 0) {
    visit(make_signature(counts));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++counts[static_cast<std::size_t>(part - 1)];
    signatures_from(remaining - part, part, counts, visit);
    --counts[static_cast<std::size_t>(part - 1)];
  }
}

}  // namespace

void for_each_signature(int r, const std::function<void(const Signature&)>& visit) {
  if (r < 1) throw std::out_of_range("signature size must be positive");
  std::vector<int> counts(static_cast<std::size_t>(r), 0);
  std::vector<Signature> all;
  signatures_from(r, r, counts, [&](const Signature& s) { all.push_back(s); });
  std::stable_sort(all.begin(), all.end(),
                   [](const Signature& a, const Signature& b) { return a.block_count() > b.block_count(); });
  for (const auto& s : all) visit(s);
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  if (finer.ground_size() != coarser.ground_size()) {
    throw std::invalid_argument("refines: partitions of different ground sets");
  }
  std::vector<int> owner(static_cast<std::size_t>(coarser.ground_size()) + 1);
  for (std::size_t b = 0; b < coarser.blocks().size(); ++b) {
    for (int e : coarser.blocks()[b]) owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
  }
  return std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](const std::vector<int>& block) {
    return std::all_of(block.begin(), block.end(), [&](int e) {
      return owner[static_cast<std::size_t>(e)] == owner[static_cast<std::size_t>(block.front())];
    });
  });
}

bool strictly_refines(const SetPartition& finer, const SetPartition& coarser) {
  return refines(finer, coarser) && !(finer == coarser);
}

BigInt bell_number(int r) {
  if (r < 0) throw std::domain_error("bell_number: negative argument");
  // Bell triangle.
  std::vector<BigInt> row{BigInt(1)};
  for (int i = 0; i < r; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace nodal
