#include "zetali/zero_catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zetali/errors.hpp"
#include "zetali/special.hpp"

namespace zetali {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ZeroCatalog ZeroCatalog::ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open zero table: " + path);

  ZeroCatalog cat;
  cat.source_label_ = std::filesystem::path(path).filename().string();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    Real v(kParsePrec);
    try {
      v = Real::from_string(t, kParsePrec);
    } catch (const ParseError&) {
      throw ParseError("bad ordinate '" + t + "'", line_no);
    }
    if (!(v > Real(0.0))) throw ParseError("ordinate must be positive: '" + t + "'", line_no);
    if (!cat.entries_.empty() && !(v > cat.entries_.back().ordinate))
      throw ParseError("ordering violation: '" + t + "' does not exceed the previous ordinate",
                       line_no);
    cat.entries_.push_back(Entry{t, v, 1});
  }
  if (cat.entries_.empty()) throw Error("empty zero table: " + path);
  cat.t_max_ = cat.entries_.back().ordinate;

  std::string mult_path = path + ".mult";
  std::ifstream mult_in(mult_path);
  if (mult_in) {
    std::size_t mline = 0;
    while (std::getline(mult_in, line)) {
      ++mline;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      std::istringstream ss(t);
      std::size_t idx = 0;
      long m = 0;
      if (!(ss >> idx >> m) || idx == 0 || idx > cat.entries_.size() || m < 1)
        throw ParseError("bad multiplicity entry in " + mult_path, mline);
      cat.entries_[idx - 1].multiplicity = static_cast<unsigned>(m);
    }
  }
  return cat;
}

void ZeroCatalog::serialize(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write zero table: " + path);
  for (const auto& e : entries_) out << e.text << "\n";

  bool any_mult = false;
  for (const auto& e : entries_)
    if (e.multiplicity != 1) any_mult = true;
  if (any_mult) {
    std::ofstream mout(path + ".mult");
    if (!mout) throw Error("cannot write sidecar: " + path + ".mult");
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].multiplicity != 1)
        mout << (i + 1) << " " << entries_[i].multiplicity << "\n";
  }
}

std::size_t ZeroCatalog::zero_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

std::vector<std::pair<Complex, Complex>> ZeroCatalog::paired_zeros() const {
  std::vector<std::pair<Complex, Complex>> out;
  out.reserve(zero_count());
  const Real half(0.5, kParsePrec);
  for (const auto& e : entries_) {
    Complex rho(half, e.ordinate);
    for (unsigned m = 0; m < e.multiplicity; ++m) out.emplace_back(rho, rho.conj());
  }
  return out;
}

DensityEstimate count_below(const Real& T, mpfr_prec_t prec) {
  Real two_pi = Real(2.0, prec) * Real::pi(prec);
  if (!(T > two_pi)) throw DomainError("count_below requires T > 2*pi");
  Real x = T.with_prec(prec) / two_pi;
  Real est = x * log(x) - x + Real(0.875, prec);
  return DensityEstimate{T.with_prec(prec), est};
}

std::vector<SpotCheck> spot_check(const ZeroCatalog& cat, std::size_t samples,
                                  const PrecisionContext& ctx, const Real& threshold) {
  std::vector<SpotCheck> out;
  const auto& es = cat.entries();
  if (es.empty() || samples == 0) return out;
  samples = std::min(samples, es.size());
  const Real half(0.5, ctx.work_prec());
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t idx = (samples == 1) ? 0 : i * (es.size() - 1) / (samples - 1);
    Complex z(half, es[idx].ordinate);
    Real a = xi(z, ctx).abs();
    out.push_back(SpotCheck{idx, es[idx].ordinate, a, a < threshold});
  }
  return out;
}

}  // namespace zetali
