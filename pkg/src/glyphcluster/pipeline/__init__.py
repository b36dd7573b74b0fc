from .featurize import FeatureTable, featurize_path, featurize_samples, prepare_matrix
