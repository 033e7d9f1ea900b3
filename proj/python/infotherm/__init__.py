"""Thermodynamics of information, backed by the C++ infotherm library."""

from ._core import (
    InfothermError,
    __version__,
    amplifier_work,
    analyze,
    analyze_file,
    bits_to_nats,
    broadcast_balance,
    carnot_efficiency,
    clausius_check,
    combined_balance,
    device_temperature,
    entropy_exact,
    entropy_stirling,
    file_heat_and_entropy,
    file_temperature,
    generate,
    landauer_floor,
    log_multiplicity,
    max_bit_rate,
    metropolis_sample,
    nats_to_bits,
    occupation_from_temperature,
    randomness_test,
    run_cli,
    simulate_chain,
    temperature_closed,
    temperature_numeric,
    transfer_balance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
