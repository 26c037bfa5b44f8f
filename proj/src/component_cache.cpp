#include <fstream>
#include <sstream>
#include <stdexcept>

#include "abg/alt_algebra.hpp"

namespace abg {

std::filesystem::path component_cache_path(const std::filesystem::path& dir, unsigned generators, unsigned degree) {
  return dir / ("A_D" + std::to_string(generators) + "_n" + std::to_string(degree) + ".txt");
}

// Layout:
//   <tag>
//   <D> <n> <magma count> <basis count>
//   <shape code> <word code>            one line per basis monomial
//   <triplet count>
//   <magma index> <basis pos> <p/q>     normal forms of the non-basis monomials
void save_component(const GradedComponent& c, const std::filesystem::path& file) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << kComponentCacheTag << '\n';
    out << c.generators() << ' ' << c.degree() << ' ' << c.magma().size() << ' ' << c.dim() << '\n';
    for (auto idx : c.basis()) out << c.magma()[idx].shape_code() << ' ' << c.magma()[idx].word_code() << '\n';
    std::size_t triplets = 0;
    for (std::uint32_t i = 0; i < c.magma().size(); ++i)
      if (!c.is_basis(i)) triplets += c.normal_form(i).size();
    out << triplets << '\n';
    for (std::uint32_t i = 0; i < c.magma().size(); ++i) {
      if (c.is_basis(i)) continue;
      for (const auto& [pos, x] : c.normal_form(i)) out << i << ' ' << pos << ' ' << x.get_str() << '\n';
    }
  }
  std::filesystem::rename(tmp, file);
}

std::optional<GradedComponent> load_component(const std::filesystem::path& file, unsigned generators,
                                              unsigned degree) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string tag;
  std::getline(in, tag);
  if (tag != kComponentCacheTag) throw std::runtime_error("cache format mismatch in " + file.string() + ": " + tag);
  unsigned d = 0, n = 0;
  std::size_t magma = 0, basis = 0;
  if (!(in >> d >> n >> magma >> basis)) throw std::runtime_error("truncated cache header");
  if (d != generators || n != degree || magma != magma_count(generators, degree))
    throw std::runtime_error("cache file does not describe this component");

  GradedComponent c;
  c.generators_ = generators;
  c.degree_ = degree;
  c.magma_ = enumerate_monomials(generators, degree);
  c.index_magma();
  c.basis_pos_.assign(magma, -1);
  for (std::size_t k = 0; k < basis; ++k) {
    std::uint64_t shape = 0, word = 0;
    if (!(in >> shape >> word)) throw std::runtime_error("truncated cache basis");
    auto idx = c.magma_index(Monomial::from_codes(degree, shape, word));
    if (!c.basis_.empty() && idx <= c.basis_.back()) throw std::runtime_error("cache basis not in canonical order");
    c.basis_pos_[idx] = static_cast<std::int64_t>(c.basis_.size());
    c.basis_.push_back(idx);
  }
  std::size_t triplets = 0;
  if (!(in >> triplets)) throw std::runtime_error("truncated cache body");
  std::vector<std::vector<RatVec::Entry>> rows(magma);
  for (std::size_t k = 0; k < triplets; ++k) {
    std::uint32_t idx = 0, pos = 0;
    std::string value;
    if (!(in >> idx >> pos >> value)) throw std::runtime_error("truncated cache triplets");
    if (idx >= magma || pos >= basis || c.basis_pos_[idx] >= 0) throw std::runtime_error("bad cache triplet");
    rows[idx].emplace_back(pos, Rat(value));
  }
  c.normal_forms_.resize(magma);
  for (std::uint32_t i = 0; i < magma; ++i) {
    if (c.basis_pos_[i] >= 0) {
      c.normal_forms_[i] = RatVec::unit(static_cast<std::uint32_t>(c.basis_pos_[i]));
    } else {
      for (auto& e : rows[i]) e.second.canonicalize();
      c.normal_forms_[i] = RatVec::from_unsorted(std::move(rows[i]));
    }
  }
  return c;
}

}  // namespace abg
