from glyphcluster.classifier import classify, load_model
from glyphcluster.errors import InvalidArgumentError
from glyphcluster.pipeline import featurize_path
from glyphcluster.runner.runner import Runner


class ClassifyRunner(Runner):
    def run(self) -> None:
        if not self.config.model_path or not self.config.image_path:
            raise InvalidArgumentError("classify needs --model and --image")
        model = load_model(self.config.model_path)
        vector = featurize_path(self.config.image_path, self.config.preprocess_options())
        for choice in classify(model, vector, self.config.top_t).choices:
            self.out.write(f"{choice.label}\t{choice.distance:.6f}\n")
