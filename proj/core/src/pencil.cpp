#include "arithmirror/pencil.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "arithmirror/error.hpp"

namespace arithmirror {

PencilHypersurface::PencilHypersurface(LatticePolytope polytope, TriangulationOrder order)
    : polytope_(std::move(polytope)),
      dual_(polar_dual(polytope_)),
      order_(order),
      fan_(maximal_refinement(polytope_, order)) {
  monomials_ = dual_.vertices();
  monomials_.push_back(Point(static_cast<std::size_t>(polytope_.dim()), 0));
  for (const auto& ray : fan_.rays()) {
    std::vector<std::int64_t> row;
    for (const auto& x : monomials_) row.push_back(pairing(ray, x) + 1);
    cox_exponents_.push_back(std::move(row));
  }
  orbits_ = orbit_data(fan_, dual_);
}

std::uint64_t PencilHypersurface::ambient_points(std::uint32_t q) const {
  std::uint64_t total = 0;
  for (const auto& o : orbits_) {
    std::uint64_t v = 1;
    for (int i = 0; i < o.orbit_dim; ++i) v *= q - 1;
    total += v;
  }
  return total;
}

std::string PencilHypersurface::cox_form() const {
  std::ostringstream os;
  const std::size_t t_col = monomials_.size() - 1;
  for (std::size_t j = 0; j < monomials_.size(); ++j) {
    if (j) os << " + ";
    bool first = true;
    if (j == t_col) {
      os << "t";
      first = false;
    }
    for (std::size_t k = 0; k < cox_exponents_.size(); ++k) {
      const auto e = cox_exponents_[k][j];
      if (e == 0) continue;
      os << (first ? "" : "*") << "z" << (k + 1);
      if (e > 1) os << "^" << e;
      first = false;
    }
    if (first) os << "1";
  }
  return os.str();
}

PencilHypersurface build_pencil(const LatticePolytope& polytope, TriangulationOrder order) {
  if (!is_reflexive(polytope))
    throw Error(ErrorKind::NonIntegralDual, "pencil requires a reflexive polytope");
  return PencilHypersurface(polytope, order);
}

namespace {

// One torus orbit as Laurent polynomials in log coordinates: g (the restricted
// pencil) followed by the normal derivatives dF/dz_k for the cone's rays. The
// zero cone uses unshifted exponents so that the t-term is the constant.
struct Stratum {
  int dim = 0;
  bool open_torus = false;
  std::size_t g_terms = 0;                      // exps[0, g_terms) belong to g
  std::vector<std::vector<std::int64_t>> exps;  // per monomial, length dim
  struct Normal {
    std::size_t begin = 0, end = 0;
    bool has_t = false;
  };
  std::vector<Normal> normals;
};

std::vector<Stratum> strata(const PencilHypersurface& pencil) {
  std::vector<Stratum> out;
  for (const auto& o : pencil.orbits()) {
    Stratum s;
    s.dim = o.orbit_dim;
    if (o.cone_dim == 0) {
      s.open_torus = true;
      for (const auto& x : pencil.dual().vertices()) s.exps.push_back(x);
    } else {
      s.exps = o.exponents;
    }
    s.g_terms = s.exps.size();
    for (const auto& nd : o.normals) {
      Stratum::Normal n;
      n.begin = s.exps.size();
      s.exps.insert(s.exps.end(), nd.exponents.begin(), nd.exponents.end());
      n.end = s.exps.size();
      n.has_t = nd.has_t;
      s.normals.push_back(n);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Visits every point of (F*)^dim; `visit` gets the discrete logs of the
// monomial values at that point.
template <class Visit>
void scan_torus(const FiniteField& field, const Stratum& s, Visit&& visit) {
  const std::int64_t n = field.order() - 1;
  const std::size_t m = s.exps.size();
  const std::size_t d = static_cast<std::size_t>(s.dim);
  std::vector<std::vector<std::int64_t>> step(d, std::vector<std::int64_t>(m));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < m; ++j) step[i][j] = ((s.exps[j][i] % n) + n) % n;
  std::vector<std::int64_t> logs(m, 0);
  std::vector<std::int64_t> e(d, 0);
  while (true) {
    visit(logs);
    std::size_t i = 0;
    for (; i < d; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        logs[j] += step[i][j];
        if (logs[j] >= n) logs[j] -= n;
      }
      if (++e[i] < n) break;
      e[i] = 0;
    }
    if (i == d) return;
  }
}

FiniteField::Element sum_range(const FiniteField& field, const std::vector<std::int64_t>& logs,
                               std::size_t begin, std::size_t end) {
  FiniteField::Element v = 0;
  for (std::size_t j = begin; j < end; ++j)
    v = field.add(v, field.exp(static_cast<std::uint64_t>(logs[j])));
  return v;
}

bool critical(const FiniteField& field, const Stratum& s, const std::vector<std::int64_t>& logs,
              const std::vector<std::vector<FiniteField::Element>>& weights) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.dim); ++i) {
    FiniteField::Element d = 0;
    for (std::size_t j = 0; j < s.g_terms; ++j)
      d = field.add(d, field.mul(weights[j][i], field.exp(static_cast<std::uint64_t>(logs[j]))));
    if (d != 0) return false;
  }
  return true;
}

std::vector<std::vector<FiniteField::Element>> log_weights(const FiniteField& field,
                                                           const Stratum& s) {
  std::vector<std::vector<FiniteField::Element>> w;
  for (std::size_t j = 0; j < s.g_terms; ++j) {
    std::vector<FiniteField::Element> row;
    for (auto c : s.exps[j]) row.push_back(field.from_int(c));
    w.push_back(std::move(row));
  }
  return w;
}

// Singular t values contributed by a point of a closed stratum where g and
// its orbit derivatives vanish. Returns false when the point is smooth for
// every t; otherwise `bad` is the single offending t, or nullopt when every
// t is singular there.
bool closed_singularity(const FiniteField& field, const Stratum& s,
                        const std::vector<std::int64_t>& logs,
                        std::optional<FiniteField::Element>& bad) {
  bad.reset();
  for (const auto& n : s.normals) {
    const auto h = sum_range(field, logs, n.begin, n.end);
    if (n.has_t) {
      bad = field.neg(h);  // t + h vanishes only at t = -h
    } else if (h != 0) {
      return false;
    }
  }
  return true;
}

struct StratumResult {
  std::uint64_t zeros = 0;            // closed strata
  bool singular = false;              // closed strata: singular for every t
  std::vector<std::uint64_t> values;  // open torus: histogram of g
  std::vector<bool> bad_t;            // t with a singular point on this stratum
};

StratumResult analyse(const FiniteField& field, const Stratum& s) {
  StratumResult r;
  const auto weights = log_weights(field, s);
  r.bad_t.assign(field.order(), false);
  if (s.open_torus) {
    r.values.assign(field.order(), 0);
    scan_torus(field, s, [&](const std::vector<std::int64_t>& logs) {
      const auto v = sum_range(field, logs, 0, s.g_terms);
      ++r.values[v];
      if (critical(field, s, logs, weights)) r.bad_t[field.neg(v)] = true;
    });
  } else {
    scan_torus(field, s, [&](const std::vector<std::int64_t>& logs) {
      if (sum_range(field, logs, 0, s.g_terms) != 0) return;
      ++r.zeros;
      if (!critical(field, s, logs, weights)) return;
      std::optional<FiniteField::Element> bad;
      if (!closed_singularity(field, s, logs, bad)) return;
      if (bad)
        r.bad_t[*bad] = true;
      else
        r.singular = true;
    });
  }
  return r;
}

}  // namespace

std::uint64_t count_points(const PencilHypersurface& pencil, const FiniteField& field,
                           FiniteField::Element t) {
  std::uint64_t total = 0;
  for (const auto& s : strata(pencil)) {
    scan_torus(field, s, [&](const std::vector<std::int64_t>& logs) {
      FiniteField::Element v = sum_range(field, logs, 0, s.g_terms);
      if (s.open_torus) v = field.add(v, t);
      if (v == 0) ++total;
    });
  }
  return total;
}

bool is_smooth_member(const PencilHypersurface& pencil, const FiniteField& field,
                      FiniteField::Element t) {
  for (const auto& s : strata(pencil)) {
    const auto weights = log_weights(field, s);
    bool singular = false;
    scan_torus(field, s, [&](const std::vector<std::int64_t>& logs) {
      if (singular) return;
      FiniteField::Element v = sum_range(field, logs, 0, s.g_terms);
      if (s.open_torus) v = field.add(v, t);
      if (v != 0 || !critical(field, s, logs, weights)) return;
      if (s.open_torus) {
        singular = true;
        return;
      }
      std::optional<FiniteField::Element> bad;
      if (closed_singularity(field, s, logs, bad)) singular = !bad || *bad == t;
    });
    if (singular) return false;
  }
  return true;
}

CountTable count_table(const PencilHypersurface& pencil, const FiniteField& field,
                       const std::string& polytope_id, unsigned workers) {
  const auto all = strata(pencil);
  std::vector<StratumResult> results(all.size());
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(all.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < all.size(); ++i) results[i] = analyse(field, all[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < all.size(); i += workers) results[i] = analyse(field, all[i]);
      });
    for (auto& th : pool) th.join();
  }

  std::uint64_t closed_zeros = 0;
  bool closed_singular = false;
  const StratumResult* open = nullptr;
  std::vector<bool> bad_t(field.order(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t t = 0; t < bad_t.size(); ++t) bad_t[t] = bad_t[t] || results[i].bad_t[t];
    if (all[i].open_torus) {
      open = &results[i];
      continue;
    }
    closed_zeros += results[i].zeros;
    closed_singular = closed_singular || results[i].singular;
  }

  CountTable table;
  table.polytope_id = polytope_id;
  table.p = field.characteristic();
  table.s = field.degree();
  table.triangulation_hash = pencil.fan().fingerprint();
  table.polytope_hash = pencil.polytope().hash();
  for (FiniteField::Element t = 0; t < field.order(); ++t) {
    CountRow row;
    row.t = t;
    row.count = closed_zeros + open->values[field.neg(t)];
    row.smooth = !closed_singular && !bad_t[t];
    table.rows.push_back(row);
  }
  return table;
}

std::uint64_t count_points_cox_oracle(const PencilHypersurface& pencil,
                                      const FiniteField& field, FiniteField::Element t) {
  for (const auto& d : elementary_divisors(pencil.polytope().vertex_matrix()))
    if (d != 1)
      throw Error(ErrorKind::TorsionUnsupported,
                  "vertex matrix has elementary divisor " + d.get_str());
  const Fan& fan = pencil.fan();
  if (!fan.is_simplicial())
    throw Error(ErrorKind::TorsionUnsupported, "Cox enumeration needs a simplicial fan");
  const std::size_t r = fan.rays().size();
  const std::uint64_t q = field.order();
  std::uint64_t total_points = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total_points *= q;
    if (total_points > 200'000'000ULL)
      throw Error(ErrorKind::InvalidArgument, "Cox enumeration too large");
  }

  std::vector<std::uint64_t> cone_masks;
  for (const auto& c : fan.maximal_cones()) {
    std::uint64_t m = 0;
    for (auto k : c.rays) m |= std::uint64_t{1} << k;
    cone_masks.push_back(m);
  }
  const auto& exps = pencil.cox_exponents();
  const std::size_t monomials = pencil.monomials().size();

  std::uint64_t zeros = 0;
  std::vector<FiniteField::Element> z(r, 0);
  for (std::uint64_t idx = 0; idx < total_points; ++idx) {
    std::uint64_t rem = idx;
    std::uint64_t zero_mask = 0;
    for (std::size_t k = 0; k < r; ++k) {
      z[k] = static_cast<FiniteField::Element>(rem % q);
      rem /= q;
      if (z[k] == 0) zero_mask |= std::uint64_t{1} << k;
    }
    if (std::none_of(cone_masks.begin(), cone_masks.end(),
                     [&](std::uint64_t m) { return (zero_mask & m) == zero_mask; }))
      continue;  // in the irrelevant locus
    FiniteField::Element f = 0;
    for (std::size_t j = 0; j < monomials; ++j) {
      FiniteField::Element term = (j + 1 == monomials) ? t : field.one();
      for (std::size_t k = 0; k < r && term != 0; ++k)
        term = field.mul(term, field.pow(z[k], exps[k][j]));
      f = field.add(f, term);
    }
    if (f == 0) ++zeros;
  }

  std::uint64_t torus = 1;
  for (std::size_t i = static_cast<std::size_t>(fan.dim()); i < r; ++i) torus *= q - 1;
  if (zeros % torus != 0)
    throw Error(ErrorKind::NonExactDivision, "Cox count not divisible by the torus order");
  return zeros / torus;
}

}  // namespace arithmirror
