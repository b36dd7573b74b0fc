import logging
from pathlib import Path

from glyphcluster.classifier import load_model
from glyphcluster.errors import InvalidArgumentError
from glyphcluster.evaluation import REPORT_FORMATS, REPORT_SUFFIXES, emit_report, evaluate, format_table
from glyphcluster.runner.runner import Runner


class EvaluateRunner(Runner):
    def run(self) -> None:
        if not self.config.model_path:
            raise InvalidArgumentError("evaluate needs --model")
        fmt = self.config.output_format or "text"
        if fmt not in REPORT_FORMATS:
            raise InvalidArgumentError(f"report format should be one of {REPORT_FORMATS}, got {fmt!r}")
        model = load_model(self.config.model_path)
        table = self._featurize(self._load_samples("test"))
        report = evaluate(
            model,
            table.vectors,
            table.labels,
            depths=range(1, self.config.top_t + 1),
            category=self._category(fallback=model.category),
        )
        output_path = self.config.output_path or self.default_report_path(fmt)
        emit_report(report, fmt, output_path)
        logging.info(f"report written: {output_path}")
        self.out.write(format_table(report, per_class=False))

    def default_report_path(self, fmt: str) -> str:
        model_path = Path(self.config.model_path)
        return str(model_path.with_name(model_path.name + ".report" + REPORT_SUFFIXES[fmt]))
