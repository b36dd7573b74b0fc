"""Exceptions raised by glyphcluster.

Every error carries the process exit code the command line maps it to.
"""


class GlyphError(Exception):
    exit_code = 1


class InvalidArgumentError(GlyphError, ValueError):
    exit_code = 2


class InvalidInputError(GlyphError, ValueError):
    exit_code = 3


class DatasetError(GlyphError):
    exit_code = 4


class EmptyDatasetError(DatasetError):
    exit_code = 4


class InvalidDatasetError(DatasetError, ValueError):
    exit_code = 5


class InvalidManifestError(DatasetError, ValueError):
    exit_code = 6


class ModelFileError(GlyphError):
    exit_code = 7


class CorruptModelError(ModelFileError):
    exit_code = 7


class ModelVersionError(ModelFileError):
    exit_code = 8


class DimensionMismatchError(ModelFileError):
    exit_code = 9


class ReportWriteError(GlyphError):
    exit_code = 10


OS_ERROR_EXIT_CODE = 11
