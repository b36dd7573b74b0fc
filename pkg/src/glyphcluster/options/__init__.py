from .preprocess import PreprocessOptions
from .kmeans import KMeansOptions
