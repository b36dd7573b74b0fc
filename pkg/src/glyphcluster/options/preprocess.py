from dataclasses import dataclass
from typing import Union

from glyphcluster.errors import InvalidArgumentError

DEFAULT_THRESHOLD = "otsu"
DEFAULT_COVERAGE = 0.5
FALLBACK_FIXED_THRESHOLD = 128


@dataclass
class PreprocessOptions:
    # "otsu" or a fixed intensity in [0, 256]
    threshold: Union[str, int] = DEFAULT_THRESHOLD
    coverage: float = DEFAULT_COVERAGE

    def as_dict(self):
        return {
            "threshold": self.threshold,
            "coverage": self.coverage,
        }

    def get_fixed_threshold(self) -> Union[int, None]:
        """Fixed intensity threshold, or None when Otsu is requested."""
        if isinstance(self.threshold, str):
            if self.threshold == "otsu":
                return None
            raise InvalidArgumentError(f"PreprocessOptions.threshold is incorrect: {self.threshold!r}")
        if isinstance(self.threshold, int) and not isinstance(self.threshold, bool):
            if not 0 <= self.threshold <= 256:
                raise InvalidArgumentError(f"fixed threshold should be in [0, 256], got {self.threshold}")
            return self.threshold
        raise InvalidArgumentError(f"PreprocessOptions.threshold is incorrect type {type(self.threshold)}")


def parse_threshold(value: str) -> Union[str, int]:
    """Parse a `--threshold` flag value: `otsu` or an integer intensity."""
    if value == "otsu":
        return value
    try:
        return int(value)
    except ValueError as ex:
        raise InvalidArgumentError(f"threshold should be 'otsu' or an integer, got {value!r}") from ex
