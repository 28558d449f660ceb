"""Configuration validation utilities."""

from ...core.errors import ConfigError

TIMING_REL_TOL = 1e-9


def check_timing(t_final: float, dt: float, record_every: float) -> tuple[int, int]:
    """Validate integration timing.

    Args:
        t_final: Final time
        dt: Integration step
        record_every: Record cadence

    Returns:
        (steps per record, number of records after t=0)

    Raises:
        ConfigError: If dt <= record_every <= t_final fails or the cadence
            is not an integer multiple of the step
    """
    if dt <= 0:
        raise ConfigError("Integration step dt must be positive", criterion="timing")

    if not dt <= record_every <= t_final:
        raise ConfigError(
            f"Timing must satisfy dt <= record_every <= t_final "
            f"(got {dt}, {record_every}, {t_final})",
            criterion="timing",
        )

    steps = round(record_every / dt)
    if abs(steps * dt - record_every) > TIMING_REL_TOL * record_every:
        raise ConfigError(
            f"record_every={record_every} is not an integer multiple of dt={dt}",
            criterion="timing",
        )

    records = round(t_final / record_every)
    if abs(records * record_every - t_final) > TIMING_REL_TOL * t_final:
        raise ConfigError(
            f"t_final={t_final} is not an integer multiple of record_every={record_every}",
            criterion="timing",
        )

    return int(steps), int(records)
