#include "qgem/sensitivity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "qgem/csv.hpp"
#include "qgem/dynamics.hpp"
#include "qgem/phase.hpp"
#include "qgem/rng.hpp"

namespace qgem::sensitivity {

namespace {

constexpr double kInfDeviation = std::numeric_limits<double>::infinity();

struct PointEval {
  double phi_low = 0.0;
  double phi_high = 0.0;
  double dephase_c = 0.0;
  double dephase_d = 0.0;
  bool collided = false;
  double deviation = kInfDeviation;  // max | |Phi| - |Phi0| | / |Phi0|
};

double base_phi(const ExperimentConfig& config, double dt) {
  const auto traj = dynamics::propagate(config, dt);
  if (traj.collided) throw CollisionError(traj.collision_time, traj.closest_approach_z);
  return std::fabs(phase::accumulated_phase(traj, config.plate.thickness_w, config.test_mass.mass)
                       .phi_eff_accumulated);
}

PointEval evaluate_point(const ExperimentConfig& config, Axis axis, double x, double phi0,
                         double dt) {
  PointEval out;
  const auto& spec = config.test_mass;
  const auto& sched = config.schedule;
  const double w = config.plate.thickness_w;
  std::vector<double> magnitudes;

  switch (axis) {
    case Axis::delta_d1: {
      for (const double sign : {+1.0, -1.0}) {
        const auto traj =
            dynamics::propagate_from(sched.initial_distance + sign * x, spec, sched, dt);
        if (traj.collided) {
          out.collided = true;
          return out;
        }
        magnitudes.push_back(std::fabs(
            phase::accumulated_phase(traj, w, spec.mass).phi_eff_accumulated));
      }
      break;
    }
    case Axis::delta_d2: {
      const auto arm_near = dynamics::propagate_from(sched.initial_distance - x, spec, sched, dt);
      const auto arm_far = dynamics::propagate_from(sched.initial_distance + x, spec, sched, dt);
      if (arm_near.collided || arm_far.collided) {
        out.collided = true;
        return out;
      }
      const auto sym =
          phase::accumulated_phase_tilted(arm_near, arm_far, w, spec, TiltMode::symmetric);
      const auto asym =
          phase::accumulated_phase_tilted(arm_near, arm_far, w, spec, TiltMode::asymmetric);
      magnitudes.push_back(std::fabs(sym.phi_eff_accumulated));
      magnitudes.push_back(std::fabs(asym.phi_eff_accumulated));
      out.dephase_c = sym.dephasing_casimir;
      out.dephase_d = sym.dephasing_dipole;
      break;
    }
    case Axis::delta_dB: {
      for (const double sign : {+1.0, -1.0}) {
        ProtocolSchedule perturbed = sched;
        perturbed.db_dz = sched.db_dz + sign * x;
        if (perturbed.db_dz < 0.0) {
          out.collided = true;  // outside the physical domain, exclude
          return out;
        }
        const auto traj = dynamics::propagate_from(sched.initial_distance, spec, perturbed, dt);
        if (traj.collided) {
          out.collided = true;
          return out;
        }
        magnitudes.push_back(std::fabs(
            phase::accumulated_phase(traj, w, spec.mass).phi_eff_accumulated));
      }
      break;
    }
    case Axis::delta_theta: {
      TestMassSpec perturbed = spec;
      perturbed.dipole_angle_theta = spec.dipole_angle_theta + x;  // force is even in theta
      const auto traj = dynamics::propagate_from(sched.initial_distance, perturbed, sched, dt);
      if (traj.collided) {
        out.collided = true;
        return out;
      }
      magnitudes.push_back(std::fabs(
          phase::accumulated_phase(traj, w, perturbed.mass).phi_eff_accumulated));
      magnitudes.push_back(phi0);  // the band brackets the unperturbed phase
      break;
    }
  }

  out.phi_low = *std::min_element(magnitudes.begin(), magnitudes.end());
  out.phi_high = *std::max_element(magnitudes.begin(), magnitudes.end());
  out.deviation = 0.0;
  for (const double m : magnitudes) {
    out.deviation = std::max(out.deviation, std::fabs(m - phi0) / phi0);
  }
  return out;
}

void run_indexed(std::size_t n_tasks, const std::function<void(std::size_t)>& task) {
  const unsigned workers =
      std::min<unsigned>(worker_limit(), static_cast<unsigned>(std::max<std::size_t>(n_tasks, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_tasks) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::delta_d1: return "delta_d1";
    case Axis::delta_d2: return "delta_d2";
    case Axis::delta_dB: return "delta_dB";
    case Axis::delta_theta: return "delta_theta";
  }
  return "?";
}

unsigned worker_limit() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QGEM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

SweepResult sweep(const ExperimentConfig& config, Axis axis, double lo, double hi, int n_points,
                  double threshold, double dt) {
  if (!(hi > lo)) throw std::invalid_argument("sweep range must have hi > lo");
  if (n_points < 2) throw std::invalid_argument("sweep needs at least two points");
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  config.validate();

  SweepResult result;
  result.axis = axis;
  result.threshold = threshold;
  result.phi_unperturbed = base_phi(config, dt);

  result.points.resize(static_cast<std::size_t>(n_points));
  run_indexed(result.points.size(), [&](std::size_t i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (n_points - 1);
    const auto eval = evaluate_point(config, axis, x, result.phi_unperturbed, dt);
    auto& pt = result.points[i];
    pt.value = x;
    pt.phi_low = eval.phi_low;
    pt.phi_high = eval.phi_high;
    pt.dephase_casimir = eval.dephase_c;
    pt.dephase_dipole = eval.dephase_d;
    pt.collided = eval.collided;
  });

  // Bisect the largest |x| with deviation <= threshold, to 3 significant
  // figures. Collided evaluations count as over-threshold.
  auto deviation_at = [&](double x) {
    return evaluate_point(config, axis, x, result.phi_unperturbed, dt).deviation;
  };
  const double span = std::max(std::fabs(lo), std::fabs(hi));
  if (deviation_at(span) <= threshold) {
    result.tolerance_bound = span;  // entire range is inside the budget
    return result;
  }
  double a = 0.0;
  double b = span;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (a + b);
    if (deviation_at(mid) <= threshold)
      a = mid;
    else
      b = mid;
    if ((b - a) <= 5e-4 * std::max(a, 1e-300)) break;
  }
  result.tolerance_bound = 0.5 * (a + b);
  return result;
}

MonteCarloResult monte_carlo(const ExperimentConfig& config, const AxisSigmas& sigmas,
                             std::size_t n_samples, std::uint64_t seed, double dt) {
  if (n_samples < 2) throw std::invalid_argument("monte_carlo needs at least two samples");
  config.validate();

  struct Slot {
    double phi = 0.0;
    bool ok = false;
  };
  std::vector<Slot> slots(n_samples);

  const auto& sched = config.schedule;
  const double w = config.plate.thickness_w;

  run_indexed(n_samples, [&](std::size_t i) {
    const double dd1 = sigmas.d1 != 0.0 ? sigmas.d1 * rng::gaussian(seed, i, 0) : 0.0;
    const double dd2 = sigmas.d2 != 0.0 ? sigmas.d2 * rng::gaussian(seed, i, 1) : 0.0;
    const double ddb = sigmas.dB != 0.0 ? sigmas.dB * rng::gaussian(seed, i, 2) : 0.0;
    const double dth = sigmas.theta != 0.0 ? sigmas.theta * rng::gaussian(seed, i, 3) : 0.0;

    TestMassSpec spec = config.test_mass;
    spec.dipole_angle_theta = std::fabs(config.test_mass.dipole_angle_theta + dth);
    ProtocolSchedule run_sched = sched;
    run_sched.db_dz = std::max(0.0, sched.db_dz + ddb);
    const double d = sched.initial_distance + dd1;

    if (dd2 != 0.0) {
      const auto arm_near = dynamics::propagate_from(d - std::fabs(dd2), spec, run_sched, dt);
      const auto arm_far = dynamics::propagate_from(d + std::fabs(dd2), spec, run_sched, dt);
      if (arm_near.collided || arm_far.collided) return;
      const auto res = phase::accumulated_phase_tilted(arm_near, arm_far, w, spec,
                                                       config.imbalance.tilt_mode);
      slots[i] = {std::fabs(res.phi_eff_accumulated), true};
    } else {
      const auto traj = dynamics::propagate_from(d, spec, run_sched, dt);
      if (traj.collided) return;
      const auto res = phase::accumulated_phase(traj, w, spec.mass);
      slots[i] = {std::fabs(res.phi_eff_accumulated), true};
    }
  });

  MonteCarloResult out;
  out.seed = seed;
  out.n_samples = n_samples;
  out.phase_samples.reserve(n_samples);
  for (const auto& s : slots) {
    if (s.ok)
      out.phase_samples.push_back(s.phi);
    else
      ++out.n_failed;
  }
  if (out.phase_samples.empty()) throw CollisionError(0.0, 0.0);

  double sum = 0.0;
  for (const double v : out.phase_samples) sum += v;
  out.mean = sum / static_cast<double>(out.phase_samples.size());
  double var = 0.0;
  for (const double v : out.phase_samples) var += (v - out.mean) * (v - out.mean);
  var /= static_cast<double>(out.phase_samples.size());
  out.std_dev = std::sqrt(var);
  out.std_of_mean = out.std_dev / std::sqrt(static_cast<double>(n_samples));
  return out;
}

void write_csv(std::ostream& os, const SweepResult& result) {
  os << "imbalance,phi_low_rad,phi_high_rad,dephase_C_rad,dephase_D_rad,collided\n";
  for (const auto& p : result.points) {
    os << csv::field(p.value) << ',' << csv::field(p.phi_low) << ',' << csv::field(p.phi_high)
       << ',' << csv::field(p.dephase_casimir) << ',' << csv::field(p.dephase_dipole) << ','
       << (p.collided ? 1 : 0) << '\n';
  }
}

}  // namespace qgem::sensitivity
