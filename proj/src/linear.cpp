#include "semitoric/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semitoric {

namespace {

bool holds(const Rat& value, Rel rel) {
  switch (rel) {
    case Rel::eq: return value == 0;
    case Rel::ge: return value >= 0;
    case Rel::gt: return value > 0;
  }
  return false;
}

// Scale to integer coefficients with content 1 so duplicates collapse.
LinCon normalized(LinCon c) {
  Int l = 1;
  for (const Rat& q : c.a) l = l / gcd(l, rat_den(q)) * rat_den(q);
  l = l / gcd(l, rat_den(c.b)) * rat_den(c.b);
  Int g = 0;
  for (Rat& q : c.a) {
    q *= l;
    g = gcd(g, rat_num(q));
  }
  c.b *= l;
  g = gcd(g, rat_num(c.b));
  if (g > 1) {
    for (Rat& q : c.a) q /= g;
    c.b /= g;
  }
  return c;
}

std::vector<Rat> combine(const std::vector<Rat>& a, const Rat& ca, const std::vector<Rat>& b,
                         const Rat& cb) {
  std::vector<Rat> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

}  // namespace

void LinearSystem::add(LinCon c) {
  if (static_cast<int>(c.a.size()) != nvars_)
    throw std::invalid_argument("LinearSystem::add: arity mismatch");
  cons_.push_back(normalized(std::move(c)));
}

void LinearSystem::add_eq(const std::vector<Rat>& a, Rat b) {
  add(LinCon{a, std::move(b), Rel::eq});
}

void LinearSystem::add_ineq(const std::vector<Rat>& a, Rat b, bool strict) {
  add(LinCon{a, std::move(b), strict ? Rel::gt : Rel::ge});
}

LinearSystem LinearSystem::eliminate_last() const {
  if (nvars_ == 0) throw std::logic_error("eliminate_last: no variables left");
  const int v = nvars_ - 1;
  LinearSystem out(nvars_ - 1);
  auto push = [&out, v](const std::vector<Rat>& a, Rat b, Rel rel) {
    LinCon c;
    c.a.assign(a.begin(), a.begin() + v);
    c.b = std::move(b);
    c.rel = rel;
    out.add(std::move(c));
  };

  // Prefer Gaussian substitution through an equality involving the variable.
  int eq_idx = -1;
  for (size_t i = 0; i < cons_.size(); ++i)
    if (cons_[i].rel == Rel::eq && cons_[i].a[v] != 0) {
      eq_idx = static_cast<int>(i);
      break;
    }
  if (eq_idx >= 0) {
    const LinCon& e = cons_[eq_idx];
    for (size_t i = 0; i < cons_.size(); ++i) {
      if (static_cast<int>(i) == eq_idx) continue;
      const LinCon& c = cons_[i];
      if (c.a[v] == 0) {
        push(c.a, c.b, c.rel);
        continue;
      }
      // c - (c_v / e_v) * e eliminates the variable exactly.
      Rat f = c.a[v] / e.a[v];
      push(combine(c.a, Rat(1), e.a, -f), c.b - f * e.b, c.rel);
    }
    return out;
  }

  std::vector<const LinCon*> pos, neg;
  for (const LinCon& c : cons_) {
    if (c.a[v] == 0) {
      push(c.a, c.b, c.rel);
    } else if (c.a[v] > 0) {
      pos.push_back(&c);
    } else {
      neg.push_back(&c);
    }
  }
  for (const LinCon* p : pos)
    for (const LinCon* n : neg) {
      // p scaled by -n_v plus n scaled by p_v: positive combination.
      Rat cp = -n->a[v], cn = p->a[v];
      Rel rel = (p->rel == Rel::gt || n->rel == Rel::gt) ? Rel::gt : Rel::ge;
      push(combine(p->a, cp, n->a, cn), cp * p->b + cn * n->b, rel);
    }
  return out;
}

bool LinearSystem::feasible() const {
  LinearSystem cur = *this;
  for (int v = nvars_; v > 0; --v) {
    // Dedupe to keep Fourier-Motzkin growth in check at these sizes.
    std::map<std::tuple<std::vector<Rat>, Rat, Rel>, bool> seen;
    LinearSystem dedup(cur.nvars_);
    for (const LinCon& c : cur.cons_) {
      auto key = std::make_tuple(c.a, c.b, c.rel);
      if (seen.emplace(key, true).second) dedup.cons_.push_back(c);
    }
    cur = dedup.eliminate_last();
  }
  for (const LinCon& c : cur.cons_)
    if (!holds(c.b, c.rel)) return false;
  return true;
}

LinearSystem::VarRange LinearSystem::integer_range(int var, const std::vector<Int>& fixed) const {
  if (static_cast<int>(fixed.size()) != var || var != nvars_ - 1)
    throw std::invalid_argument("integer_range: expects values for all earlier variables");
  VarRange r;
  for (const LinCon& c : cons_) {
    Rat resid = c.b;
    for (int j = 0; j < var; ++j) resid += c.a[j] * Rat(fixed[j]);
    const Rat& cv = c.a[var];
    if (cv == 0) {
      if (!holds(resid, c.rel)) {
        r.empty = true;
        return r;
      }
      continue;
    }
    Rat bound = -resid / cv;
    bool lower = cv > 0;
    if (c.rel == Rel::eq) {
      if (rat_den(bound) != 1) {
        r.empty = true;
        return r;
      }
      Int x = rat_num(bound);
      if ((!r.lo || *r.lo < x)) r.lo = x;
      if ((!r.hi || *r.hi > x)) r.hi = x;
      continue;
    }
    bool strict = c.rel == Rel::gt;
    if (lower) {
      Int b = strict ? floor_rat(bound) + 1 : ceil_rat(bound);
      if (!r.lo || *r.lo < b) r.lo = b;
    } else {
      Int b = strict ? ceil_rat(bound) - 1 : floor_rat(bound);
      if (!r.hi || *r.hi > b) r.hi = b;
    }
  }
  if (r.lo && r.hi && *r.lo > *r.hi) r.empty = true;
  return r;
}

SliceEnumerator::SliceEnumerator(const std::vector<IntVec>& ineq_rows,
                                 const std::vector<IntVec>& eq_rows, const IntVec& grading)
    : dim_(static_cast<int>(grading.size())), grading_(grading) {
  // Variables ordered [t, x_0, ..., x_{k-1}]; t stays, x's project away.
  LinearSystem full(dim_ + 1);
  auto lift = [this](const IntVec& row, const Rat& tcoef) {
    std::vector<Rat> a(dim_ + 1, Rat(0));
    a[0] = tcoef;
    for (int i = 0; i < dim_; ++i) a[i + 1] = Rat(row[i]);
    return a;
  };
  for (const IntVec& row : ineq_rows) full.add_ineq(lift(row, 0), Rat(0), false);
  for (const IntVec& row : eq_rows) full.add_eq(lift(row, 0), Rat(0));
  full.add_eq(lift(grading, Rat(-1)), Rat(0));

  levels_.resize(dim_ + 1, LinearSystem(0));
  LinearSystem cur = full;
  for (int j = dim_ - 1; j >= 0; --j) {
    levels_[j + 1] = cur;  // vars [t, x_0..x_j]
    cur = cur.eliminate_last();
  }
  levels_[0] = cur;  // constraints on t alone
}

std::vector<IntVec> SliceEnumerator::points(const Int& degree) const {
  std::vector<IntVec> out;
  if (dim_ == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  {
    auto r0 = levels_[0].integer_range(0, {});
    if (r0.empty) return out;
    if ((r0.lo && degree < *r0.lo) || (r0.hi && degree > *r0.hi)) return out;
  }
  std::vector<Int> fixed{degree};
  IntVec point(dim_);
  auto rec = [&](auto&& self, int j) -> void {
    auto r = levels_[j + 1].integer_range(j + 1, fixed);
    if (r.empty) return;
    if (!r.lo || !r.hi)
      throw std::logic_error("SliceEnumerator: unbounded slice (cone not pointed?)");
    for (Int x = *r.lo; x <= *r.hi; ++x) {
      point[j] = x;
      fixed.push_back(x);
      if (j + 1 == dim_)
        out.push_back(point);
      else
        self(self, j + 1);
      fixed.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool in_cone_q(const IntVec& v, const std::vector<IntVec>& gens,
               const std::vector<IntVec>& lin_gens) {
  const int d = static_cast<int>(v.size());
  const int m = static_cast<int>(gens.size());
  const int l = static_cast<int>(lin_gens.size());
  LinearSystem sys(m + l);
  for (int row = 0; row < d; ++row) {
    std::vector<Rat> a(m + l, Rat(0));
    for (int i = 0; i < m; ++i) a[i] = Rat(gens[i][row]);
    for (int j = 0; j < l; ++j) a[m + j] = Rat(lin_gens[j][row]);
    sys.add_eq(a, Rat(-v[row]));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> a(m + l, Rat(0));
    a[i] = 1;
    sys.add_ineq(a, Rat(0), false);
  }
  return sys.feasible();
}

bool relint_intersects(const std::vector<IntVec>& a_rays, const std::vector<IntVec>& b_rays,
                       int dim) {
  if (a_rays.empty() && b_rays.empty()) return true;  // relint {0} meets itself
  if (a_rays.empty() || b_rays.empty()) return false;
  const int m = static_cast<int>(a_rays.size());
  const int n = static_cast<int>(b_rays.size());
  LinearSystem sys(m + n);
  for (int row = 0; row < dim; ++row) {
    std::vector<Rat> c(m + n, Rat(0));
    for (int i = 0; i < m; ++i) c[i] = Rat(a_rays[i][row]);
    for (int j = 0; j < n; ++j) c[m + j] = Rat(-b_rays[j][row]);
    sys.add_eq(c, Rat(0));
  }
  for (int i = 0; i < m + n; ++i) {
    std::vector<Rat> c(m + n, Rat(0));
    c[i] = 1;
    sys.add_ineq(c, Rat(0), true);
  }
  return sys.feasible();
}

}  // namespace semitoric
