"""Experiment configuration and the plain-text ``key = value`` config format.

A single flat dataclass holds every knob of the simulator, the agent and the
harness.  Defaults follow the deployment described in the scenario tables
(M = K = 4, Q = 8, F = 12, 23 dBm V2I power, 1 MHz sub-channels, 1000
episodes of 100 fast slots, Adam at 3e-4, discount 0.99, soft update 0.01).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields
from typing import Sequence

from .errors import UsageError

BYTE = 8  # bits


@dataclass
class ExperimentConfig:
    # --- scenario -------------------------------------------------------
    n_v2i: int = 4                    # M, cellular (V2I) users, one per sub-channel
    n_v2v: int = 4                    # K, V2V transmitter/receiver pairs
    ris_elements: int = 12            # F
    phase_quantization: int = 8       # Q, phase levels per element
    carrier_hz: float = 2.0e9
    bandwidth_hz: float = 1.0e6       # per sub-channel
    noise_power_dbm: float = -114.0
    bs_position: tuple = (-20.0, -20.0, 25.0)
    ris_position: tuple = (470.0, 670.0, 25.0)
    ris_spacing_m: float = 0.075      # half wavelength at 2 GHz
    bs_antenna_gain_dbi: float = 8.0
    vehicle_antenna_gain_dbi: float = 3.0
    bs_noise_figure_db: float = 5.0
    vehicle_noise_figure_db: float = 11.0
    v2i_power_dbm: float = 23.0       # P^c, fixed uplink power
    v2v_power_min_dbm: float = 1.0
    v2v_power_max_dbm: float = 23.0
    v2i_rate_threshold: float = 3.0   # R^th in bps/Hz
    payload_bits: int = 8 * 1060 * BYTE   # D, per V2V pair and episode
    payload_budget_slots: int = 100   # N fast slots
    slow_slot_s: float = 0.1          # large-scale / mobility interval
    fast_slot_s: float = 0.001        # small-scale coherence interval
    aoi_initial_slots: int = 100

    # --- road grid ------------------------------------------------------
    road_width_m: float = 450.0
    road_height_m: float = 650.0
    roads_per_direction: int = 3
    lane_width_m: float = 3.5
    vehicle_antenna_height_m: float = 1.5
    speed_min_mps: float = 10.0
    speed_max_mps: float = 15.0
    turn_probability: float = 0.4

    # --- path loss (per link class, as ref-loss dB at 1 m + exponent) ----
    v2i_pathloss_ref_db: float = 15.3      # 128.1 + 37.6 log10(d_km) rebased to 1 m
    v2i_pathloss_exponent: float = 3.76
    v2i_shadow_sigma_db: float = 8.0
    v2v_pathloss_ref_db: float = 30.0      # urban LOS at 2 GHz rebased to 1 m
    v2v_pathloss_exponent: float = 3.0
    v2v_shadow_sigma_db: float = 3.0
    # Effective per-leg model for vehicle-RIS-endpoint hops.  The reference
    # loss absorbs panel/element directivity so that the reflected path is
    # within reach of the direct one at this deployment geometry.
    ris_pathloss_ref_db: float = 20.0
    ris_pathloss_exponent: float = 2.0
    ris_shadow_sigma_db: float = 0.0

    # --- reward and state normalisation ----------------------------------
    reward_aoi_weight: float = 0.1         # lambda_1, per AoI slot
    reward_payload_weight: float = 1.0     # lambda_2, per normalised residual payload
    norm_v2i_db_center: float = -95.0
    norm_v2i_db_scale: float = 20.0
    norm_v2v_db_center: float = -90.0
    norm_v2v_db_scale: float = 20.0
    norm_interf_db_center: float = -85.0
    norm_interf_db_scale: float = 20.0

    # --- agent ------------------------------------------------------------
    discount: float = 0.99
    learning_rate: float = 3e-4
    hidden_sizes: tuple = (512, 512, 512)
    buffer_capacity: int = 1_000_000
    minibatch: int = 256
    tau: float = 0.01                  # target soft-update rate (both critics)
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    init_log_alpha: float = 0.0
    logstd_min: float = -20.0
    logstd_max: float = 2.0
    target_entropy_mode: str = "standard"  # "standard": H0 = -dim(a); "paper": +dim(a)
    update_every: int = 1
    agent_dtype: str = "float32"

    # --- harness ------------------------------------------------------------
    episodes: int = 1000
    seed: int = 0
    seeds: tuple = (0, 1, 2)
    sweep_axis: str = "v2i_power"      # v2i_power | payload_d | ris_elements | user_count
    sweep_values: tuple = (17.0, 20.0, 23.0, 26.0, 29.0)
    eval_episodes: int = 200
    policy: str = "sac"                # sac | random_ris | no_ris
    checkpoint: str = ""
    outdir: str = "runs/latest"

    def replace(self, **kwargs) -> "ExperimentConfig":
        return dataclasses.replace(self, **kwargs)

    def validate(self) -> "ExperimentConfig":
        if self.n_v2i < 1 or self.n_v2v < 1:
            raise UsageError("n_v2i and n_v2v must be at least 1")
        if self.ris_elements < 0:
            raise UsageError("ris_elements must be >= 0")
        if self.phase_quantization < 2:
            raise UsageError("phase_quantization must be >= 2")
        if abs(self.slow_slot_s - self.payload_budget_slots * self.fast_slot_s) > 1e-12:
            raise UsageError("slow_slot_s must equal payload_budget_slots * fast_slot_s")
        if self.sweep_axis not in SWEEP_AXES:
            raise UsageError(f"unknown sweep_axis {self.sweep_axis!r}")
        return self


def _parse_scalar(text: str, kind: type):
    text = text.strip()
    if kind is int:
        return int(text)
    if kind is float:
        return float(text)
    if kind is str:
        return text
    if kind is tuple:
        items = [t for t in (p.strip() for p in text.split(",")) if t]
        out = []
        for item in items:
            try:
                out.append(int(item))
            except ValueError:
                out.append(float(item))
        return tuple(out)
    raise UsageError(f"unsupported config field type {kind!r}")


def config_from_pairs(pairs, base: ExperimentConfig | None = None) -> ExperimentConfig:
    """Build a config from (key, value-string) pairs, starting from ``base``."""
    cfg = base or ExperimentConfig()
    types = {f.name: type(getattr(cfg, f.name)) for f in fields(cfg)}
    updates = {}
    for key, value in pairs:
        if key not in types:
            raise UsageError(f"unknown config key {key!r}")
        updates[key] = _parse_scalar(value, types[key])
    return cfg.replace(**updates)


def parse_config_text(text: str, base: ExperimentConfig | None = None) -> ExperimentConfig:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        pairs.append((key.strip(), value))
    return config_from_pairs(pairs, base)


def load_config(path, base: ExperimentConfig | None = None) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read(), base)


def dump_config_text(cfg: ExperimentConfig) -> str:
    lines = []
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        if isinstance(value, tuple):
            rendered = ", ".join(f"{v:.10g}" if isinstance(v, float) else str(v) for v in value)
        elif isinstance(value, float):
            rendered = f"{value:.10g}"
        else:
            rendered = str(value)
        lines.append(f"{f.name} = {rendered}")
    return "\n".join(lines) + "\n"


def save_config(cfg: ExperimentConfig, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_config_text(cfg))


SWEEP_AXES = ("v2i_power", "payload_d", "ris_elements", "user_count")


def apply_sweep_value(cfg: ExperimentConfig, axis: str, value) -> ExperimentConfig:
    """Return a copy of ``cfg`` with one sweep-axis value applied."""
    if axis == "v2i_power":
        return cfg.replace(v2i_power_dbm=float(value))
    if axis == "payload_d":
        return cfg.replace(payload_bits=int(round(value)))
    if axis == "ris_elements":
        return cfg.replace(ris_elements=int(round(value)))
    if axis == "user_count":
        n = int(round(value))
        return cfg.replace(n_v2i=n, n_v2v=n)
    raise UsageError(f"unknown sweep_axis {axis!r}")
