import argparse
import logging
import sys
from typing import List, Optional

from glyphcluster._version import __version__
from glyphcluster.errors import GlyphError, InvalidArgumentError, OS_ERROR_EXIT_CODE
from glyphcluster.options.kmeans import DEFAULT_K, DEFAULT_MAX_ITER, DEFAULT_SEED, DEFAULT_TOL
from glyphcluster.options.preprocess import parse_threshold
from glyphcluster.runner import RunConfig, run
from glyphcluster.runner.runner import DEFAULT_TOP_T


def _add_common_parameters(command_parser):
    command_parser.add_argument("--threshold", dest="threshold_mode", default="otsu",
                                help="binarization threshold: 'otsu' or a fixed intensity")
    command_parser.add_argument("--jobs", dest="jobs", type=int, default=1, help="parallel workers")


def _add_dataset_parameters(command_parser, required: bool):
    command_parser.add_argument("--dataset", dest="dataset_root", required=required,
                                help="dataset root laid out as <root>/<label>/<images>")
    command_parser.add_argument("--manifest", dest="manifest",
                                help="split manifest: nist-digits, nist-uppercase, nist-lowercase or a YAML file")
    command_parser.add_argument("--category", dest="category",
                                choices=["digits", "uppercase", "lowercase", "custom"],
                                help="label alphabet when no manifest is given")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glyphcluster",
                                     description="Structural-feature handwritten character recognition")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--quiet", action="store_true", help="log warnings and errors only")
    commands = parser.add_subparsers(dest="command")

    extract_parser = commands.add_parser("extract", help="print the 256 features of an image")
    extract_parser.add_argument("--image", dest="image_path", help="image or 32x32 text matrix")
    _add_dataset_parameters(extract_parser, required=False)
    extract_parser.add_argument("--format", dest="output_format", choices=["csv", "text"], default="csv")
    extract_parser.add_argument("--out", dest="output_path", help="output file, standard output by default")
    _add_common_parameters(extract_parser)

    train_parser = commands.add_parser("train", help="fit per-class k-means codebooks")
    _add_dataset_parameters(train_parser, required=True)
    train_parser.add_argument("--k", dest="k", type=int, default=DEFAULT_K, help="centroids per class")
    train_parser.add_argument("--seed", dest="seed", type=int, default=DEFAULT_SEED)
    train_parser.add_argument("--max-iter", dest="max_iter", type=int, default=DEFAULT_MAX_ITER)
    train_parser.add_argument("--tol", dest="tol", type=float, default=DEFAULT_TOL,
                              help="largest centroid shift at convergence")
    train_parser.add_argument("--out", dest="model_path", required=True, help="model file to write")
    _add_common_parameters(train_parser)

    classify_parser = commands.add_parser("classify", help="rank the classes of one image")
    classify_parser.add_argument("--model", dest="model_path", required=True)
    classify_parser.add_argument("--image", dest="image_path", required=True)
    classify_parser.add_argument("--top", dest="top_t", type=int, default=DEFAULT_TOP_T)
    _add_common_parameters(classify_parser)

    evaluate_parser = commands.add_parser("evaluate", help="1st/2nd/3rd choice accuracy on the test split")
    evaluate_parser.add_argument("--model", dest="model_path", required=True)
    _add_dataset_parameters(evaluate_parser, required=True)
    evaluate_parser.add_argument("--top", dest="top_t", type=int, default=DEFAULT_TOP_T)
    evaluate_parser.add_argument("--format", dest="output_format", choices=["text", "csv", "json"], default="text")
    evaluate_parser.add_argument("--out", dest="output_path", help="report file, <model>.report.<ext> by default")
    _add_common_parameters(evaluate_parser)
    return parser


def _config_from_args(parsed: argparse.Namespace) -> RunConfig:
    fields = {key: value for key, value in vars(parsed).items()
              if key in RunConfig.__dataclass_fields__ and value is not None}
    fields["threshold_mode"] = parse_threshold(parsed.threshold_mode)
    return RunConfig(**fields)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    parsed = parser.parse_args(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(level=logging.WARNING if parsed.quiet else logging.INFO, stream=sys.stderr)
    if parsed.command is None:
        parser.print_help()
        return InvalidArgumentError.exit_code

    try:
        run(_config_from_args(parsed))
    except GlyphError as error:
        sys.stderr.write(f"{parser.prog}: error: {error}\n")
        return error.exit_code
    except OSError as error:
        sys.stderr.write(f"{parser.prog}: error: {error}\n")
        return OS_ERROR_EXIT_CODE
    return 0


if __name__ == "__main__":
    sys.exit(main())
