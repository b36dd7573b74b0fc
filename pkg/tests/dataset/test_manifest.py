import pytest

from glyphcluster.dataset import apply_split, load_manifest, parse_manifest
from glyphcluster.dataset.manifest import BUILTIN_MANIFESTS
from glyphcluster.dataset.samples import LabeledSample
from glyphcluster.errors import InvalidDatasetError, InvalidManifestError


def _sample(writer, label="5", partition=None):
    return LabeledSample(image_path=f"{label}/{writer}.png", label=label, writer_id=writer, partition=partition)


@pytest.mark.parametrize("writer,side", [
    ("F0000", "train"),
    ("F0050", "train"),
    ("F0099", "train"),
    ("F0100", "test"),
    ("F0120", "test"),
    ("F0149", "test"),
    ("F0200", None),
])
def test_nist_digits_split(writer, side):
    train, test = apply_split([_sample(writer)], load_manifest("nist-digits"))
    assert (len(train), len(test)) == ((1, 0) if side == "train" else (0, 1) if side == "test" else (0, 0))


def test_partition_filter():
    manifest = load_manifest("nist-uppercase")
    samples = [
        _sample("F0010", "A", "HSF_0"),
        _sample("F0010", "A", "HSF_3"),
        _sample("F1010", "B", "HSF_3"),
        _sample("F1010", "B", "HSF_0"),
        _sample("F1011", "C"),
    ]
    train, test = apply_split(samples, manifest)
    assert train == [samples[0]]
    assert test == [samples[2], samples[4]]


def test_samples_without_writer_are_excluded():
    train, test = apply_split([LabeledSample(image_path="x.png", label="1")], load_manifest("nist-digits"))
    assert train == [] and test == []


def test_split_checks_labels():
    with pytest.raises(InvalidDatasetError):
        apply_split([_sample("F0001", label="Q")], load_manifest("nist-digits"))


def test_parse_manifest():
    manifest = parse_manifest(
        "category: digits\n"
        "train:\n"
        "  writers: [F0000-F0009, F0042]\n"
        "test:\n"
        "  writers: [F0010-F0019]\n"
        "  partitions: [hsf_4]\n",
        name="small",
    )
    assert manifest.name == "small"
    assert manifest.as_dict() == {
        "category": "digits",
        "train": {"writers": ["F0000-F0009", "F0042-F0042"], "partitions": []},
        "test": {"writers": ["F0010-F0019"], "partitions": ["HSF_4"]},
    }


def test_manifest_test_all():
    manifest = parse_manifest("category: custom\ntest: all\n")
    train, test = apply_split([_sample("F0001", "x"), LabeledSample(image_path="y.png", label="y")], manifest)
    assert train == []
    assert len(test) == 2


@pytest.mark.parametrize("text", [
    "category: digits\ntrain:\n  writers: [F0000-F0099]\ntest:\n  writers: [F0090-F0149]\n",
    "category: digits\ntrain: all\ntest:\n  writers: [F0100]\n",
    "category: greek\n",
    "train: all\n",
    "category: digits\ntrain:\n  writers: [F0010-F0001]\n",
    "category: digits\ntrain:\n  writers: [W12]\n",
    "category: digits\ntrain:\n  forms: [F0001]\n",
    "category: digits\ntrain: some\n",
    "category: [unclosed\n",
])
def test_invalid_manifest(text):
    with pytest.raises(InvalidManifestError):
        parse_manifest(text)


def test_load_manifest_file(tmp_path):
    path = tmp_path / "mine.yaml"
    path.write_text("category: lowercase\ntrain:\n  writers: [F0000-F0001]\ntest:\n  writers: [F0002]\n")
    manifest = load_manifest(str(path))
    assert manifest.name == "mine"
    assert manifest.category == "lowercase"


def test_load_unknown_manifest(tmp_path):
    with pytest.raises(InvalidManifestError):
        load_manifest(str(tmp_path / "nope.yaml"))


@pytest.mark.parametrize("name", sorted(BUILTIN_MANIFESTS))
def test_builtin_manifests_are_valid(name):
    BUILTIN_MANIFESTS[name].validate()
