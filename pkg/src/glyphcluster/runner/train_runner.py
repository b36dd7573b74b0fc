import logging

from glyphcluster.classifier import save_model, train
from glyphcluster.dataset import category_classes
from glyphcluster.errors import InvalidArgumentError
from glyphcluster.runner.runner import Runner


class TrainRunner(Runner):
    def run(self) -> None:
        if not self.config.model_path:
            raise InvalidArgumentError("train needs --out for the model file")
        category = self._category()
        table = self._featurize(self._load_samples("train"))
        model = train(
            table.vectors,
            table.labels,
            options=self.config.kmeans_options(),
            category=category,
            classes=category_classes(category),
            jobs=self.config.jobs,
        )
        save_model(model, self.config.model_path)
        logging.info(f"trained {len(model.codebooks)} codebooks on {len(table)} samples")
