"""Waveform container and scale-invariant fidelity metrics.

Everything here is a pure function on immutable inputs (float64 numpy under
the hood), safe to call from any number of threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, SampleRateMismatch, ZeroTarget, ZeroVarianceSignal

EPS_VAR = 1e-12
EPS_POWER = 1e-12

#: Value reported for (numerically) perfect reconstruction, and the symmetric
#: clamp applied so that aggregate statistics stay finite.
DEFAULT_SDR_CAP_DB = 100.0


@dataclass(frozen=True)
class WaveSegment:
    """A finite time-domain signal together with its sample rate in Hz."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size < 1:
            raise ValueError("samples must be a non-empty 1-D vector")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite (no NaN/Inf)")
        rate = int(self.sample_rate)
        if rate <= 0:
            raise ValueError("sample_rate must be a positive integer")
        samples = samples.copy()
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", rate)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration(self) -> float:
        """Length in seconds."""
        return self.samples.size / self.sample_rate

    def replace_samples(self, samples: np.ndarray) -> "WaveSegment":
        return WaveSegment(samples, self.sample_rate)


def _check_aligned(a: WaveSegment, b: WaveSegment) -> None:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    if a.sample_rate != b.sample_rate:
        raise SampleRateMismatch(
            f"sample rates differ: {a.sample_rate} vs {b.sample_rate}"
        )


def standardize(w: WaveSegment, remove_mean: bool = False) -> WaveSegment:
    """Scale a signal to unit variance.

    The signal is divided by its (population) standard deviation; the mean is
    left in place unless ``remove_mean`` is set.  Either way the output has
    sample variance exactly 1 up to rounding, so the operation is idempotent.

    Raises ZeroVarianceSignal when the variance is below 1e-12.
    """
    x = w.samples
    var = float(x.var())
    if var < EPS_VAR:
        raise ZeroVarianceSignal(f"variance {var:.3e} below {EPS_VAR:.0e}")
    scale = 1.0 / math.sqrt(var)
    y = (x - x.mean()) * scale if remove_mean else x * scale
    return w.replace_samples(y)


def power(w: WaveSegment) -> float:
    """Mean squared amplitude."""
    x = w.samples
    return float(x @ x) / x.size


def mix_at_snr(
    speech: WaveSegment, noise: WaveSegment, snr_db: float
) -> tuple[WaveSegment, WaveSegment]:
    """Scale ``noise`` so that speech-to-noise power ratio equals ``snr_db``.

    Returns ``(mixture, scaled_noise)`` with ``mixture == speech + scaled_noise``
    elementwise.  Works for arbitrary input powers; for unit-power inputs the
    noise gain is ``10 ** (-snr_db / 20)``.
    """
    _check_aligned(speech, noise)
    p_speech = power(speech)
    p_noise = power(noise)
    if p_noise < EPS_POWER:
        raise ZeroVarianceSignal("noise has zero power")
    if p_speech < EPS_POWER:
        raise ZeroVarianceSignal("speech has zero power")
    gain = math.sqrt(p_speech / p_noise) * 10.0 ** (-snr_db / 20.0)
    scaled = noise.samples * gain
    mixture = speech.samples + scaled
    return speech.replace_samples(mixture), speech.replace_samples(scaled)


def si_sdr(
    reference: WaveSegment | np.ndarray,
    estimate: WaveSegment | np.ndarray,
    cap_db: float = DEFAULT_SDR_CAP_DB,
) -> float:
    """Scale-invariant signal-to-distortion ratio in dB.

    With the projection weight ``a = (estimate . reference) / ||reference||^2``
    this is ``10 log10(||a*ref||^2 / ||a*ref - est||^2)``.  Values are clamped
    to ``[-cap_db, cap_db]``; a numerically zero error term reports ``cap_db``.
    No mean removal is applied.
    """
    s = reference.samples if isinstance(reference, WaveSegment) else np.asarray(reference, dtype=np.float64)
    y = estimate.samples if isinstance(estimate, WaveSegment) else np.asarray(estimate, dtype=np.float64)
    if s.shape != y.shape:
        raise LengthMismatch(f"lengths differ: {s.size} vs {y.size}")
    ref_energy = float(s @ s)
    if ref_energy < EPS_POWER:
        raise ZeroTarget("reference signal has (numerically) zero energy")
    proj = float(y @ s) / ref_energy * s
    err = proj - y
    p_proj = float(proj @ proj)
    p_err = float(err @ err)
    if p_err < EPS_POWER:
        return cap_db
    if p_proj == 0.0:
        return -cap_db
    value = 10.0 * math.log10(p_proj / p_err)
    return min(max(value, -cap_db), cap_db)


def neg_si_sdr_loss(
    reference: WaveSegment | np.ndarray,
    estimate: WaveSegment | np.ndarray,
    cap_db: float = DEFAULT_SDR_CAP_DB,
) -> float:
    """Negative SI-SDR, the quantity training minimizes."""
    return -si_sdr(reference, estimate, cap_db=cap_db)


def neg_si_sdr_grad(
    reference: WaveSegment | np.ndarray, estimate: WaveSegment | np.ndarray
) -> np.ndarray:
    """Analytic gradient of ``neg_si_sdr_loss`` with respect to the estimate.

    Valid wherever both the projection energy and the error energy are
    nonzero (everywhere the loss itself is differentiable).
    """
    s = reference.samples if isinstance(reference, WaveSegment) else np.asarray(reference, dtype=np.float64)
    y = estimate.samples if isinstance(estimate, WaveSegment) else np.asarray(estimate, dtype=np.float64)
    if s.shape != y.shape:
        raise LengthMismatch(f"lengths differ: {s.size} vs {y.size}")
    ref_energy = float(s @ s)
    if ref_energy < EPS_POWER:
        raise ZeroTarget("reference signal has (numerically) zero energy")
    dot = float(y @ s)
    if dot == 0.0:
        raise ZeroVarianceSignal("estimate orthogonal to reference: loss not differentiable")
    err_energy = float(y @ y) - dot * dot / ref_energy
    if err_energy < EPS_POWER:
        raise ZeroVarianceSignal("zero error energy: loss not differentiable")
    scale = 10.0 / math.log(10.0)
    return -scale * (2.0 * s / dot - (2.0 * y - 2.0 * dot / ref_energy * s) / err_energy)


def si_sdr_improvement(
    reference: WaveSegment,
    mixture: WaveSegment,
    estimate: WaveSegment,
    cap_db: float = DEFAULT_SDR_CAP_DB,
) -> float:
    """SI-SDR of the estimate minus SI-SDR of the unprocessed mixture (dB)."""
    return si_sdr(reference, estimate, cap_db=cap_db) - si_sdr(
        reference, mixture, cap_db=cap_db
    )
