from glyphcluster.errors import InvalidArgumentError
from glyphcluster.pipeline import featurize_path
from glyphcluster.runner.runner import Runner

EXTRACT_FORMATS = ("csv", "text")


class ExtractRunner(Runner):
    def run(self) -> None:
        fmt = self.config.output_format or "csv"
        if fmt not in EXTRACT_FORMATS:
            raise InvalidArgumentError(f"extract format should be one of {EXTRACT_FORMATS}, got {fmt!r}")
        if self.config.image_path:
            vector = featurize_path(self.config.image_path, self.config.preprocess_options())
            text = (vector.to_csv_line() if fmt == "csv" else vector.describe()) + "\n"
            if self.config.output_path:
                with open(self.config.output_path, "w", encoding="utf-8", newline="\n") as out_file:
                    out_file.write(text)
            else:
                self.out.write(text)
            return
        if fmt != "csv":
            raise InvalidArgumentError("dataset extraction writes csv only")
        frame = self._featurize(self._load_samples("all")).to_frame()
        if self.config.output_path:
            frame.to_csv(self.config.output_path, index=False)
        else:
            self.out.write(frame.to_csv(index=False))
