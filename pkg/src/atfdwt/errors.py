"""Exception types raised across the package."""


class AtfdwtError(ValueError):
    """Base class for every error raised by this package."""


class PPMError(AtfdwtError):
    """A PPM byte stream could not be decoded."""


class UnknownMagic(PPMError):
    pass


class MalformedHeader(PPMError):
    pass


class UnsupportedMaxVal(PPMError):
    pass


class TruncatedBody(PPMError):
    pass


class OddDimensions(AtfdwtError):
    pass


class ChannelOutOfRange(AtfdwtError, IndexError):
    pass


class SamePosition(AtfdwtError):
    pass


class PayloadTooLarge(AtfdwtError):
    pass


class DimensionMismatch(AtfdwtError):
    pass


class EmptyImage(AtfdwtError):
    pass


class ZeroSignal(AtfdwtError, ZeroDivisionError):
    pass
