#include "ghostnum/jennings.hpp"

namespace ghostnum {

JenningsData jennings_series(const GroupTable& g) {
  const int p = g.prime();
  const Subgroup all = whole_group(g);
  std::vector<Subgroup> series{all};
  // Gamma_s = [Gamma_{s-1}, G] * (Gamma_{ceil(s/p)})^p
  while (!series.back().is_trivial()) {
    const std::size_t s = series.size() + 1;
    const std::size_t source = (s + static_cast<std::size_t>(p) - 1) / static_cast<std::size_t>(p);
    Subgroup next = commutator_subgroup(series.back(), all);
    next = join(next, agemo(series[source - 1]).elements());
    series.push_back(std::move(next));
  }

  std::vector<int> dims;
  long long weighted = 0;
  for (std::size_t s = 0; s + 1 < series.size(); ++s) {
    const int d = log_p(series[s].order() / series[s + 1].order(), p);
    dims.push_back(d);
    weighted += static_cast<long long>(s + 1) * d;
  }
  return {g, std::move(series), std::move(dims), 1 + (p - 1) * weighted};
}

std::string_view to_string(ClosedFormSource source) {
  switch (source) {
    case ClosedFormSource::Cyclic: return "cyclic";
    case ClosedFormSource::ElementaryAbelian: return "elementary-abelian";
    case ClosedFormSource::CyclicMaximal: return "cyclic-maximal";
    case ClosedFormSource::FrattiniOrderP: return "frattini-order-p";
    case ClosedFormSource::DirectProductC2: return "direct-product-c2";
  }
  return "?";
}

std::optional<ClosedFormT> t_closed_form(const GroupTable& g, const ClassificationFlags& flags) {
  const long long p = g.prime();
  const int n = g.log_order();
  long long p_n1 = 1;
  for (int i = 0; i + 1 < n; ++i) p_n1 *= p;

  if (flags.cyclic) return ClosedFormT{static_cast<long long>(g.order()), ClosedFormSource::Cyclic};
  if (flags.elementary_abelian) return ClosedFormT{t_elementary_abelian(g.prime(), n), ClosedFormSource::ElementaryAbelian};
  if (n >= 2 && flags.has_cyclic_maximal_subgroup)
    return ClosedFormT{p_n1 + p - 1, ClosedFormSource::CyclicMaximal};
  if (flags.frattini_order == static_cast<std::size_t>(p)) {
    if (flags.exponent == static_cast<std::size_t>(p))
      return ClosedFormT{(n + 1) * (p - 1) + 1, ClosedFormSource::FrattiniOrderP};
    return ClosedFormT{(p + n - 1) * (p - 1) + 1, ClosedFormSource::FrattiniOrderP};
  }
  if (p == 2) {
    if (auto split = find_c2_direct_factor(g)) {
      const GroupTable h = as_group(split->complement, g.label() + "/C2");
      if (auto inner = t_closed_form(h, classify(h)))
        return ClosedFormT{inner->t + 1, ClosedFormSource::DirectProductC2};
    }
  }
  return std::nullopt;
}

}  // namespace ghostnum
