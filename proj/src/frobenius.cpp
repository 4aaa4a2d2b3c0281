#include "toric/frobenius.hpp"

#include <algorithm>
#include <set>

#include "toric/bigint.hpp"
#include "toric/common.hpp"

namespace toric {

namespace {

/// Largest absolute value that the per-ray pairing |a_rho + <c, v_rho>| can
/// take over characters c with |c_d| <= cmax; used to rule out overflow
/// before running the tight integer loops.
void check_pairing_bounds(const Fan& fan, const Divisor& div, BigInt cmax) {
  const BigInt limit = BigInt(1) << 60;
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    BigInt acc = div[i] < 0 ? BigInt(-div[i]) : BigInt(div[i]);
    for (auto v : fan.rays[i]) acc += cmax * (v < 0 ? BigInt(-v) : BigInt(v));
    if (acc >= limit) throw Error("frobenius: coefficients too large");
  }
}

bool next_odometer(std::vector<std::int64_t>& x, std::int64_t base) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (++x[i] < base) return true;
    x[i] = 0;
  }
  return false;
}

std::int64_t power_checked(std::int64_t m, int n) {
  Checked64 p{1};
  try {
    for (int i = 0; i < n; ++i) p *= Checked64{m};
  } catch (const LaneOverflow&) {
    throw Error("frobenius: m^dim overflows");
  }
  return p.v;
}

void record(SplitResult& out, std::map<std::vector<std::int64_t>, Divisor>& reps,
            std::vector<std::int64_t> cls, const Divisor& d) {
  auto [it, fresh] = reps.emplace(std::move(cls), d);
  ++out.classes[it->first];
  if (fresh) out.representatives.push_back(d);
}

}  // namespace

ConeFrame cone_frame(const Fan& fan, int cone_index) {
  if (cone_index < 0 ||
      cone_index >= static_cast<int>(fan.max_cones.size()))
    throw Error("cone index out of range");
  const auto& cone = fan.max_cones[static_cast<size_t>(cone_index)];
  const int n = fan.dim;
  if (static_cast<int>(cone.size()) != n)
    throw Error("cone is not full-dimensional");
  ConeFrame f;
  f.rays = cone;
  f.a = MatI(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      f.a(i, j) = fan.rays[static_cast<size_t>(cone[static_cast<size_t>(i)])]
                          [static_cast<size_t>(j)];
  f.b = inverse_unimodular(f.a);  // smooth cones only
  return f;
}

std::vector<std::vector<std::int64_t>> cartier_data(const Fan& fan,
                                                    const Divisor& div) {
  const int n = fan.dim;
  if (div.size() != fan.rays.size())
    throw Error("divisor length does not match ray count");
  std::vector<std::vector<std::int64_t>> data;
  data.reserve(fan.max_cones.size());
  for (size_t c = 0; c < fan.max_cones.size(); ++c) {
    ConeFrame f = cone_frame(fan, static_cast<int>(c));
    // Solve <u, v_rho> = -a_rho over the cone's rays: u = b * (-a|cone).
    std::vector<std::int64_t> u(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (int j = 0; j < n; ++j)
        acc -= BigInt(f.b(i, j)) *
               div[static_cast<size_t>(f.rays[static_cast<size_t>(j)])];
      u[static_cast<size_t>(i)] = to_int64(acc);
    }
    for (int j = 0; j < n; ++j) {
      BigInt dot = 0;
      const auto& ray = fan.rays[static_cast<size_t>(f.rays[static_cast<size_t>(j)])];
      for (int d = 0; d < n; ++d)
        dot += BigInt(u[static_cast<size_t>(d)]) * ray[static_cast<size_t>(d)];
      if (dot != -BigInt(div[static_cast<size_t>(f.rays[static_cast<size_t>(j)])]))
        throw Error("cartier data: local character verification failed");
    }
    data.push_back(std::move(u));
  }
  return data;
}

bool is_principal(const Fan& fan, const Divisor& div) {
  auto data = cartier_data(fan, div);
  for (size_t i = 1; i < data.size(); ++i)
    if (data[i] != data[0]) return false;
  return true;
}

SplitResult bondal_split(const Fan& fan, const ClassGroup& cls,
                         const Divisor& div, std::int64_t m,
                         const std::vector<std::int64_t>* lift_shift) {
  const int n = fan.dim;
  const int R = static_cast<int>(fan.rays.size());
  if (m < 1) throw Error("frobenius degree must be positive");
  if (static_cast<int>(div.size()) != R)
    throw Error("divisor length does not match ray count");
  if (lift_shift && static_cast<int>(lift_shift->size()) != n)
    throw Error("lift shift must have dim entries");
  std::int64_t wmax = 0;
  if (lift_shift)
    for (auto w : *lift_shift) wmax = std::max(wmax, w < 0 ? -w : w);
  check_pairing_bounds(fan, div, BigInt(m - 1) + BigInt(m) * wmax);

  SplitResult out;
  out.total = power_checked(m, n);
  std::map<std::vector<std::int64_t>, Divisor> reps;
  std::vector<std::int64_t> chi(static_cast<size_t>(n), 0);
  Divisor d(static_cast<size_t>(R), 0);
  std::vector<std::int64_t> c(static_cast<size_t>(n), 0);
  do {
    for (int i = 0; i < n; ++i)
      c[static_cast<size_t>(i)] =
          chi[static_cast<size_t>(i)] +
          (lift_shift ? m * (*lift_shift)[static_cast<size_t>(i)] : 0);
    for (int i = 0; i < R; ++i) {
      std::int64_t acc = div[static_cast<size_t>(i)];
      const auto& ray = fan.rays[static_cast<size_t>(i)];
      for (int dd = 0; dd < n; ++dd)
        acc += c[static_cast<size_t>(dd)] * ray[static_cast<size_t>(dd)];
      d[static_cast<size_t>(i)] = floor_div(acc, m);
    }
    record(out, reps, cls.classify(d), d);
  } while (next_odometer(chi, m));

  std::int64_t sum = 0;
  for (const auto& [k, v] : out.classes) sum += v;
  if (sum != out.total)
    throw Error("frobenius: split multiplicities do not sum to m^dim");
  std::sort(out.representatives.begin(), out.representatives.end());
  return out;
}

SplitResult thomsen_split(const Fan& fan, const ClassGroup& cls,
                          const Divisor& div, std::int64_t m,
                          int anchor_cone) {
  const int n = fan.dim;
  const int R = static_cast<int>(fan.rays.size());
  const int C = static_cast<int>(fan.max_cones.size());
  if (m < 1) throw Error("frobenius degree must be positive");
  if (static_cast<int>(div.size()) != R)
    throw Error("divisor length does not match ray count");
  if (anchor_cone < 0 || anchor_cone >= C)
    throw Error("anchor cone index out of range");

  std::vector<ConeFrame> frames;
  frames.reserve(static_cast<size_t>(C));
  for (int i = 0; i < C; ++i) frames.push_back(cone_frame(fan, i));
  auto local = cartier_data(fan, div);
  // position of each ray inside each cone containing it
  std::vector<std::vector<std::pair<int, int>>> at(static_cast<size_t>(R));
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < n; ++j)
      at[static_cast<size_t>(frames[static_cast<size_t>(i)]
                                 .rays[static_cast<size_t>(j)])]
          .emplace_back(i, j);
  for (int r = 0; r < R; ++r)
    if (at[static_cast<size_t>(r)].empty())
      throw Error("ray lies in no maximal cone");

  SplitResult out;
  out.total = power_checked(m, n);
  std::map<std::vector<std::int64_t>, Divisor> reps;
  const auto& anchor = frames[static_cast<size_t>(anchor_cone)];
  const auto& ul = local[static_cast<size_t>(anchor_cone)];

  std::vector<std::int64_t> v(static_cast<size_t>(n), 0);
  std::vector<BigInt> c(static_cast<size_t>(n));
  Divisor d(static_cast<size_t>(R), 0);
  std::vector<std::vector<BigInt>> q(
      static_cast<size_t>(C), std::vector<BigInt>(static_cast<size_t>(n)));
  do {
    // Character in the anchor frame: c = b_l * v + u_l runs over a full
    // residue system mod m as v runs over [0,m)^n.
    for (int i = 0; i < n; ++i) {
      BigInt acc = ul[static_cast<size_t>(i)];
      for (int j = 0; j < n; ++j)
        acc += BigInt(anchor.b(i, j)) * v[static_cast<size_t>(j)];
      c[static_cast<size_t>(i)] = acc;
    }
    // Per cone: exact division with remainder of the local data,
    // w = a_cone * c - a_cone * u_cone, remainders required in [0, m).
    for (int i = 0; i < C; ++i) {
      const ConeFrame& f = frames[static_cast<size_t>(i)];
      const auto& ui = local[static_cast<size_t>(i)];
      for (int row = 0; row < n; ++row) {
        BigInt w = 0;
        for (int col = 0; col < n; ++col)
          w += BigInt(f.a(row, col)) *
               (c[static_cast<size_t>(col)] - ui[static_cast<size_t>(col)]);
        BigInt quo = floor_div(w, BigInt(m));
        BigInt rem = w - quo * m;
        if (rem < 0 || rem >= m)
          throw Error("thomsen: remainder out of range");
        q[static_cast<size_t>(i)][static_cast<size_t>(row)] = quo;
      }
    }
    for (int r = 0; r < R; ++r) {
      const auto& occ = at[static_cast<size_t>(r)];
      BigInt val = q[static_cast<size_t>(occ[0].first)]
                    [static_cast<size_t>(occ[0].second)];
      for (size_t k = 1; k < occ.size(); ++k)
        if (q[static_cast<size_t>(occ[k].first)]
             [static_cast<size_t>(occ[k].second)] != val)
          throw Error("thomsen: cones disagree on a summand coefficient");
      d[static_cast<size_t>(r)] = to_int64(val);
    }
    record(out, reps, cls.classify(d), d);
  } while (next_odometer(v, m));

  std::int64_t sum = 0;
  for (const auto& [k, mult] : out.classes) sum += mult;
  if (sum != out.total)
    throw Error("frobenius: split multiplicities do not sum to m^dim");
  std::sort(out.representatives.begin(), out.representatives.end());
  return out;
}

BondalImage bondal_image(const Fan& fan, const ClassGroup& cls, int window,
                         std::int64_t max_m) {
  if (window < 1) throw Error("stabilization window must be positive");
  if (max_m < 1) throw Error("max_m must be positive");
  const Divisor zero(fan.rays.size(), 0);
  std::map<std::vector<std::int64_t>, Divisor> seen;
  BondalImage img;
  std::int64_t last_new = 0;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    SplitResult s = bondal_split(fan, cls, zero, m);
    bool fresh = false;
    // first representative of each class wins (m ascending)
    for (const auto& r : s.representatives)
      if (seen.emplace(cls.classify(r), r).second) fresh = true;
    img.max_m = m;
    if (fresh) last_new = m;
    if (m - last_new >= window) {
      img.stabilized = true;
      break;
    }
  }
  img.stabilized_at = last_new == 0 ? 1 : last_new;
  for (const auto& [k, rep] : seen) {
    img.classes.push_back(k);
    img.representatives.push_back(rep);
  }
  std::sort(img.representatives.begin(), img.representatives.end());
  return img;
}

std::vector<std::vector<std::int64_t>> b_prime(
    const Fan& fan, const ClassGroup& cls, const BondalImage& image) {
  const int R = static_cast<int>(fan.rays.size());
  if (R > 12) throw Error("b_prime: ray count exceeds enumeration bound");
  std::set<std::vector<std::int64_t>> out;
  Divisor d(static_cast<size_t>(R), 0);
  for (const auto& rep : image.representatives) {
    std::vector<std::int64_t> eps(static_cast<size_t>(R), 0);
    do {
      for (int i = 0; i < R; ++i)
        d[static_cast<size_t>(i)] =
            rep[static_cast<size_t>(i)] + eps[static_cast<size_t>(i)] - 1;
      out.insert(cls.classify(d));
    } while (next_odometer(eps, 3));
  }
  return {out.begin(), out.end()};
}

}  // namespace toric
