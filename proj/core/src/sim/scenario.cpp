#include "evflight/sim/scenario.hpp"

namespace evflight::sim {

Scenario Scenario::from_kv(const KvFile& kv) {
  Scenario s;
  s.params.mass = kv.get_num("mass", s.params.mass);
  s.params.inertia_xx = kv.get_num("inertia_xx", s.params.inertia_xx);
  s.params.inertia_yy = kv.get_num("inertia_yy", s.params.inertia_yy);
  s.params.inertia_zz = kv.get_num("inertia_zz", s.params.inertia_zz);
  s.params.arm_length = kv.get_num("arm_length", s.params.arm_length);
  s.params.thrust_coeff = kv.get_num("thrust_coeff", s.params.thrust_coeff);
  s.params.torque_coeff = kv.get_num("torque_coeff", s.params.torque_coeff);
  s.params.motor_max_speed = kv.get_num("motor_max_speed", s.params.motor_max_speed);
  s.params.motor_tau = kv.get_num("motor_tau", s.params.motor_tau);
  s.params.linear_drag = kv.get_num("linear_drag", s.params.linear_drag);
  s.seed = (uint64_t)kv.get_int("seed", 1);
  s.duration_s = kv.get_num("duration_s", s.duration_s);
  s.difficulty = kv.get_num("difficulty", s.difficulty);
  s.start_height = kv.get_num("start_height", s.start_height);
  s.scene_seed = (uint64_t)kv.get_int("scene_seed", 7);
  s.scene_style = kv.get_str("scene_style", s.scene_style);
  s.contrast_threshold = kv.get_num("contrast_threshold", s.contrast_threshold);
  s.mask_mode = kv.get_str("mask_mode", s.mask_mode);
  if (!s.params.valid()) throw KvError("scenario: invalid physical params");
  if (!(s.duration_s >= 1.0)) throw KvError("scenario: duration must be >= 1 s");
  return s;
}

KvFile Scenario::to_kv() const {
  KvFile kv;
  kv.set_num("mass", params.mass);
  kv.set_num("inertia_xx", params.inertia_xx);
  kv.set_num("inertia_yy", params.inertia_yy);
  kv.set_num("inertia_zz", params.inertia_zz);
  kv.set_num("arm_length", params.arm_length);
  kv.set_num("thrust_coeff", params.thrust_coeff);
  kv.set_num("torque_coeff", params.torque_coeff);
  kv.set_num("motor_max_speed", params.motor_max_speed);
  kv.set_num("motor_tau", params.motor_tau);
  kv.set_num("linear_drag", params.linear_drag);
  kv.set_int("seed", (long long)seed);
  kv.set_num("duration_s", duration_s);
  kv.set_num("difficulty", difficulty);
  kv.set_num("start_height", start_height);
  kv.set_int("scene_seed", (long long)scene_seed);
  kv.set("scene_style", scene_style);
  kv.set_num("contrast_threshold", contrast_threshold);
  kv.set("mask_mode", mask_mode);
  return kv;
}

Scenario Scenario::load(const std::string& path) { return from_kv(KvFile::load(path)); }

void Scenario::save(const std::string& path) const { to_kv().save(path); }

}  // namespace evflight::sim
