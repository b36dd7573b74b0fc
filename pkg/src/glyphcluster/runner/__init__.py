from .runner import COMMANDS, RunConfig, Runner
from .extract_runner import ExtractRunner
from .train_runner import TrainRunner
from .classify_runner import ClassifyRunner
from .evaluate_runner import EvaluateRunner

runners_mapping = dict(
    extract=ExtractRunner,
    train=TrainRunner,
    classify=ClassifyRunner,
    evaluate=EvaluateRunner,
)


def run(config: RunConfig, out=None) -> None:
    """Execute one command; errors propagate as GlyphError subclasses."""
    config.validate()
    runners_mapping[config.command](config, out=out).run()
