"""Exception and warning types shared across the package."""


class JigsawError(Exception):
    """Base class for all errors raised by this package."""


class NonDivisibleGrid(JigsawError, ValueError):
    """Image dimensions are not divisible by the requested grid."""


class NonSquareTile(JigsawError, ValueError):
    """Slicing would produce non-square tiles."""


class SlotCollision(JigsawError, ValueError):
    """Two present pieces were assigned to the same slot."""


class ErosionTooLarge(JigsawError, ValueError):
    """Border erosion would leave no piece interior."""


class NonSquare(JigsawError, ValueError):
    """A square matrix was required."""


class Degenerate(JigsawError, ValueError):
    """A row or column lost all mass during normalization."""


class IterationRecordMissing(JigsawError, ValueError):
    """Backward pass requires the iteration count recorded by the forward pass."""


class SizeMismatch(JigsawError, ValueError):
    """Inputs disagree on counts or lengths."""


class ShapeMismatch(JigsawError, ValueError):
    """Inputs disagree on array shapes."""


# cost_matrix historically reports dimension disagreements under this name
DimMismatch = ShapeMismatch


class MoreRowsThanColumns(JigsawError, ValueError):
    """Rectangular assignment requires no more pieces than slots."""


class NonPositiveTemperature(JigsawError, ValueError):
    """Softmax temperature must be strictly positive."""


class SourceUnavailable(JigsawError, ValueError):
    """The puzzle does not carry its unperturbed source raster."""


class DecodeError(JigsawError, ValueError):
    """An image file could not be decoded."""


class DimensionMismatch(JigsawError, ValueError):
    """Raster dimensions are incompatible with the puzzle grid."""


class EmptyDataset(JigsawError, ValueError):
    """Training requires at least one puzzle."""


class NaNLoss(JigsawError, ArithmeticError):
    """Training loss became non-finite."""


class EmptyPresentSet(JigsawError, ValueError):
    """Accuracy is undefined when no piece is present."""


class TooFewSamples(JigsawError, ValueError):
    """Timing statistics need at least two measured samples."""


class NoImagesFound(JigsawError, ValueError):
    """The input directory contains no decodable images."""


class DegenerateEmbeddingWarning(UserWarning):
    """An embedding collapsed to the zero vector before normalization."""
