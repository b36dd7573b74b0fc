from dataclasses import dataclass

from glyphcluster.errors import InvalidArgumentError

DEFAULT_K = 64
DEFAULT_SEED = 1
DEFAULT_MAX_ITER = 300
DEFAULT_TOL = 1e-6
# stored as a signed 64-bit integer in model files
MAX_SEED = 2 ** 63


@dataclass
class KMeansOptions:
    k: int = DEFAULT_K
    seed: int = DEFAULT_SEED
    max_iter: int = DEFAULT_MAX_ITER
    tol: float = DEFAULT_TOL

    def as_dict(self):
        return {
            "k": self.k,
            "seed": self.seed,
            "max_iter": self.max_iter,
            "tol": self.tol,
        }

    def validate(self) -> None:
        if self.k < 1:
            raise InvalidArgumentError(f"k should be >= 1, got {self.k}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < MAX_SEED:
            raise InvalidArgumentError(f"seed should be an integer in [0, 2**63), got {self.seed!r}")
        if self.max_iter < 1:
            raise InvalidArgumentError(f"max_iter should be >= 1, got {self.max_iter}")
        if self.tol < 0:
            raise InvalidArgumentError(f"tol should be >= 0, got {self.tol}")
