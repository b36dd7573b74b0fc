MATRIX_SIZE = 32
HALF_SIZE = MATRIX_SIZE // 2
SEGMENT_LENGTH = 16
FEATURE_DIM = 256

# bump when the order or meaning of feature coordinates changes
FEATURE_LAYOUT_VERSION = 1

MODEL_MAGIC = b"GLYPHMODEL"
MODEL_FORMAT_VERSION = 1
