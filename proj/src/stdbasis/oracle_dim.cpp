#include <map>
#include <unordered_map>

#include "singclass/errors.hpp"
#include "singclass/simd/kernels.hpp"
#include "singclass/stdbasis.hpp"

namespace singclass {

namespace {

using ColumnIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

// Rows of the Macaulay matrix: jet_N(m * g) for every generator g and every
// monomial m that keeps some term within the bound.
template <typename Emit>
void for_each_row(const IdealGens& ideal, const std::vector<Monomial>& monos, int N, Emit&& emit) {
  for (const auto& g : ideal) {
    const Polynomial gj = g.jet(N);
    if (gj.is_zero()) continue;
    const unsigned ord = gj.leading().mono.degree();
    for (const auto& m : monos) {
      if (static_cast<int>(m.degree() + ord) > N) continue;
      if (!emit(gj, m)) return;
    }
  }
}

std::uint64_t rank_mod_p(const IdealGens& ideal, const std::vector<Monomial>& monos, const ColumnIndex& col,
                         int N, std::uint32_t p) {
  const std::size_t ncols = monos.size();
  const auto& kernels = simd::active();
  std::vector<std::vector<std::uint32_t>> pivot_rows(ncols);
  std::uint64_t rank = 0;
  std::vector<std::uint32_t> row(ncols);
  for_each_row(ideal, monos, N, [&](const Polynomial& g, const Monomial& m) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& t : g.terms()) {
      if (static_cast<int>(t.mono.degree() + m.degree()) > N) break;
      row[col.at(t.mono * m)] = static_cast<std::uint32_t>(t.coeff.residue());
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (row[c] == 0) continue;
      if (pivot_rows[c].empty()) {
        const std::uint64_t inv = mod_pow(row[c], p - 2, p);
        for (std::size_t j = c; j < ncols; ++j) row[j] = static_cast<std::uint32_t>(row[j] * inv % p);
        pivot_rows[c] = row;
        ++rank;
        break;
      }
      kernels.axpy_mod(row.data() + c, pivot_rows[c].data() + c, p - row[c], p, ncols - c);
    }
    return rank < ncols;
  });
  return rank;
}

std::uint64_t rank_rational(const IdealGens& ideal, const std::vector<Monomial>& monos, const ColumnIndex& col,
                            int N) {
  const std::size_t ncols = monos.size();
  std::vector<std::map<std::size_t, mpq_class>> pivot_rows(ncols);
  std::uint64_t rank = 0;
  for_each_row(ideal, monos, N, [&](const Polynomial& g, const Monomial& m) {
    std::map<std::size_t, mpq_class> row;
    for (const auto& t : g.terms()) {
      if (static_cast<int>(t.mono.degree() + m.degree()) > N) break;
      row[col.at(t.mono * m)] = t.coeff.rational();
    }
    while (!row.empty()) {
      const std::size_t c = row.begin()->first;
      if (pivot_rows[c].empty()) {
        const mpq_class inv = 1 / row.begin()->second;
        for (auto& [j, v] : row) v *= inv;
        pivot_rows[c] = std::move(row);
        ++rank;
        break;
      }
      const mpq_class factor = row.begin()->second;
      for (const auto& [j, v] : pivot_rows[c]) {
        auto [it, inserted] = row.try_emplace(j, 0);
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
      }
    }
    return rank < ncols;
  });
  return rank;
}

}  // namespace

std::uint64_t jet_quotient_dim_oracle(const IdealGens& ideal, JetBound bound) {
  if (ideal.empty()) throw Error(ErrorCode::InvalidArgument, "ideal needs at least one generator");
  const FieldSpec field = ideal.front().field();
  const std::size_t n = ideal.front().nvars();
  const int N = bound.value();
  const std::vector<Monomial> monos = monomials_up_to(n, static_cast<unsigned>(N));
  ColumnIndex col;
  for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
  const std::uint64_t rank = field.is_rational()
                                 ? rank_rational(ideal, monos, col, N)
                                 : rank_mod_p(ideal, monos, col, N, static_cast<std::uint32_t>(field.characteristic()));
  return monos.size() - rank;
}

}  // namespace singclass
