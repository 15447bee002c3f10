"""Exception types shared across the package."""


class BloomNetError(Exception):
    """Base class for all errors raised by this package."""


# --- signal errors ---------------------------------------------------------

class ZeroVarianceSignal(BloomNetError):
    """Signal has (numerically) zero variance or power where nonzero is required."""


class LengthMismatch(BloomNetError):
    """Two waveforms that must be aligned have different lengths."""


class SampleRateMismatch(BloomNetError):
    """Two waveforms (or a file and its consumer) disagree on sample rate."""


class ZeroTarget(BloomNetError):
    """The reference signal of a fidelity metric has zero energy."""


# --- model errors ----------------------------------------------------------

class InputTooShort(BloomNetError):
    """Waveform is shorter than one encoder window."""


class ShapeMismatch(BloomNetError):
    """A latent feature does not have the shape a module expects."""


class DepthOutOfRange(BloomNetError):
    """Requested inference depth is outside 1..num_blocks."""


# --- data errors -----------------------------------------------------------

class CorpusError(BloomNetError):
    """Base class for dataset construction and ingestion failures."""


class EmptyCorpus(CorpusError):
    """A corpus specification describes no usable examples."""


class UnreadableFile(CorpusError):
    """An input file could not be read or parsed."""


class UnsupportedFormat(CorpusError):
    """An audio file uses an encoding outside the documented WAV subset."""


# --- training errors -------------------------------------------------------

class DataEmpty(BloomNetError):
    """A training or validation split contains no examples."""


class DivergenceDetected(BloomNetError):
    """Training loss was NaN for an entire epoch."""


class StageOrderViolation(BloomNetError):
    """Blockwise stages were requested out of sequential order."""


class NotFullyTrained(BloomNetError):
    """An operation requires all blocks to have completed stagewise training."""


# --- evaluation errors -----------------------------------------------------

class DepthExceedsTrained(BloomNetError):
    """Requested inference depth exceeds the checkpoint's trained depth."""


class ManifestMismatch(UserWarning):
    """Evaluation corpus hash differs from the training-time corpus hash."""
